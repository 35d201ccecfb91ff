#pragma once

#include <string>
#include <vector>

#include "gradord/character_table.hpp"
#include "gradord/graduated_order.hpp"
#include "gradord/iwasawa.hpp"

#include <json.hpp>

namespace gradord {

// Canonical text documents. Writers emit canonical form; parsers accept
// extra whitespace but reject unknown keys. parse(write(x)) == x and
// write(parse(s)) == s for canonical s.

std::string write_order_document(const GraduatedOrder& order);
GraduatedOrder parse_order_document(const std::string& text);

struct MatrixDocument {
    BlockSizes blocks;
    IdealMatrix ideals;
};
std::string write_matrix_document(const BlockSizes& blocks, const IdealMatrix& ideals);
MatrixDocument parse_matrix_document(const std::string& text);

std::string write_profiles_document(const std::vector<ChiProfile>& profiles);
std::vector<ChiProfile> parse_profiles_document(const std::string& text);

std::string write_group_document(const CharacterTable& table);
CharacterTable parse_group_document(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Machine-readable counterparts; nlohmann::json keeps keys sorted, so
// dumps are deterministic.
nlohmann::json order_to_json(const GraduatedOrder& order);
GraduatedOrder order_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(Backend backend, const BlockSizes& blocks,
                              const IdealMatrix& ideals);
MatrixDocument matrix_from_json(const nlohmann::json& j);
nlohmann::json profile_to_json(const ChiProfile& profile);
ChiProfile profile_from_json(const nlohmann::json& j);

}  // namespace gradord

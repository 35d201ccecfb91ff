#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gradord/cyclotomic.hpp"
#include "gradord/group_theory.hpp"

namespace gradord {

struct CharacterRow {
    int degree = 1;
    int schur_index = 1;  // input data; 1 for all bundled groups at odd p
    std::vector<Cyclotomic> values;  // one per conjugacy class, level = exp(H)
};

// Irreducible character table of a finite group with exact cyclotomic
// values. Construction verifies the first orthogonality relations and the
// degree sum, so a table that passes is genuinely a character table.
class CharacterTable {
public:
    CharacterTable(std::shared_ptr<const FiniteGroup> group, std::vector<CharacterRow> rows);

    const FiniteGroup& group() const { return *group_; }
    std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
    int level() const { return group_->exponent(); }
    int row_count() const { return (int)rows_.size(); }
    const CharacterRow& row(int i) const { return rows_[i]; }
    const std::vector<CharacterRow>& rows() const { return rows_; }

    const Cyclotomic& value(int row, int cls) const { return rows_[row].values[cls]; }
    const Cyclotomic& value_at_element(int row, int element) const {
        return rows_[row].values[group_->class_of(element)];
    }

    // Bundled library: C<n>, S3, D4, Q8, A4.
    static CharacterTable bundled(const std::string& name);
    static bool is_bundled_name(const std::string& name);

private:
    void validate() const;
    std::shared_ptr<const FiniteGroup> group_;
    std::vector<CharacterRow> rows_;
};

}  // namespace gradord

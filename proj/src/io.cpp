#include "gradord/io.hpp"

#include <fstream>
#include <sstream>

namespace gradord {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

// Whitespace tokens, except bracketed [...] groups which yield their
// interior verbatim (ideal and cyclotomic literals contain commas).
std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    size_t pos = 0;
    while (pos < line.size()) {
        if (isspace((unsigned char)line[pos])) {
            ++pos;
            continue;
        }
        if (line[pos] == '[') {
            size_t close = line.find(']', pos);
            if (close == std::string::npos) throw ParseError("unterminated '[' in: " + line);
            tokens.push_back(line.substr(pos + 1, close - pos - 1));
            pos = close + 1;
        } else {
            size_t end = pos;
            while (end < line.size() && !isspace((unsigned char)line[end])) ++end;
            tokens.push_back(line.substr(pos, end - pos));
            pos = end;
        }
    }
    return tokens;
}

long long to_int(const std::string& tok, const std::string& what) {
    try {
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw ParseError("bad " + what + ": " + tok);
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        throw ParseError("bad " + what + ": " + tok);
    }
}

struct LineReader {
    std::vector<std::string> lines;
    size_t pos = 0;
    bool done() {
        while (pos < lines.size() && lines[pos].empty()) ++pos;
        return pos >= lines.size();
    }
    const std::string& next(const std::string& what) {
        if (done()) throw ParseError("unexpected end of document, expected " + what);
        return lines[pos++];
    }
};

std::string ideal_row(const std::vector<FracIdeal>& row) {
    std::ostringstream os;
    for (size_t j = 0; j < row.size(); ++j) {
        if (j) os << " ";
        os << "[" << row[j].str() << "]";
    }
    return os.str();
}

}  // namespace

std::string write_order_document(const GraduatedOrder& order) {
    std::ostringstream os;
    os << "gradord-order\n";
    os << "backend " << backend_name(order.backend()) << "\n";
    os << "blocks";
    for (int x : order.blocks().n) os << " " << x;
    os << "\n";
    os << "dOmega [" << order.coefficient_dual().str() << "]\n";
    os << "ideals\n";
    for (const auto& row : order.ideals()) os << ideal_row(row) << "\n";
    return os.str();
}

namespace {

struct RawOrderDocument {
    Backend backend = Backend::DvrExp;
    BlockSizes blocks;
    FracIdeal d_omega = FracIdeal::dvr(0);
    IdealMatrix ideals;
};

RawOrderDocument parse_raw_order(const std::string& text, const std::string& header,
                                 bool with_d_omega) {
    LineReader r{split_lines(text)};
    if (r.next("header") != header) throw ParseError("expected header '" + header + "'");
    RawOrderDocument doc;
    bool have_backend = false, have_blocks = false, have_d = !with_d_omega;
    while (true) {
        auto toks = tokenize(r.next("document body"));
        if (toks.empty()) continue;
        if (toks[0] == "backend" && toks.size() == 2) {
            doc.backend = parse_backend(toks[1]);
            have_backend = true;
        } else if (toks[0] == "blocks") {
            for (size_t i = 1; i < toks.size(); ++i)
                doc.blocks.n.push_back((int)to_int(toks[i], "block size"));
            have_blocks = true;
        } else if (toks[0] == "dOmega" && toks.size() == 2 && with_d_omega) {
            doc.d_omega = FracIdeal::parse(toks[1]);
            have_d = true;
        } else if (toks[0] == "ideals" && toks.size() == 1) {
            break;
        } else {
            throw ParseError("unexpected line in order document: " + toks[0]);
        }
    }
    if (!have_backend || !have_blocks || !have_d)
        throw ParseError("order document is missing backend, blocks or dOmega");
    int t = doc.blocks.count();
    for (int i = 0; i < t; ++i) {
        auto toks = tokenize(r.next("ideal matrix row"));
        if ((int)toks.size() != t) throw ParseError("ideal matrix row has wrong length");
        std::vector<FracIdeal> row;
        for (const auto& tok : toks) row.push_back(FracIdeal::parse(tok));
        doc.ideals.push_back(std::move(row));
    }
    if (!r.done()) throw ParseError("trailing content in order document");
    for (const auto& row : doc.ideals)
        for (const auto& ideal : row)
            if (ideal.backend() != doc.backend)
                throw ParseError("ideal backend differs from the declared backend");
    return doc;
}

}  // namespace

GraduatedOrder parse_order_document(const std::string& text) {
    RawOrderDocument doc = parse_raw_order(text, "gradord-order", true);
    if (doc.d_omega.backend() != doc.backend)
        throw ParseError("dOmega backend differs from the declared backend");
    return GraduatedOrder(doc.blocks, doc.ideals, doc.d_omega);
}

std::string write_matrix_document(const BlockSizes& blocks, const IdealMatrix& ideals) {
    std::ostringstream os;
    os << "gradord-matrix\n";
    os << "backend " << backend_name(ideals[0][0].backend()) << "\n";
    os << "blocks";
    for (int x : blocks.n) os << " " << x;
    os << "\n";
    os << "ideals\n";
    for (const auto& row : ideals) os << ideal_row(row) << "\n";
    return os.str();
}

MatrixDocument parse_matrix_document(const std::string& text) {
    RawOrderDocument doc = parse_raw_order(text, "gradord-matrix", false);
    return {doc.blocks, doc.ideals};
}

std::string write_profiles_document(const std::vector<ChiProfile>& profiles) {
    std::ostringstream os;
    os << "gradord-profiles\n";
    for (const auto& p : profiles) {
        os << "profile " << p.label << "\n";
        os << "eta_degree " << p.eta_degree << "\n";
        os << "s_eta " << p.s_eta << "\n";
        os << "w_chi " << p.w_chi << "\n";
        os << "v_chi " << p.v_chi << "\n";
        os << "e_eta_chi " << p.e_eta_chi << "\n";
        os << "d_eta_chi " << p.d_eta_chi << "\n";
        os << "d_chi_F " << p.d_chi_F << "\n";
        os << "ram_F_chi " << p.ram_F_chi << "\n";
        os << "order_H " << p.order_H << "\n";
        os << "direct_product " << (p.is_direct_product ? 1 : 0) << "\n";
        os << "end\n";
    }
    return os.str();
}

std::vector<ChiProfile> parse_profiles_document(const std::string& text) {
    LineReader r{split_lines(text)};
    if (r.next("header") != "gradord-profiles")
        throw ParseError("expected header 'gradord-profiles'");
    std::vector<ChiProfile> out;
    while (!r.done()) {
        auto toks = tokenize(r.next("profile"));
        if (toks.size() != 2 || toks[0] != "profile")
            throw ParseError("expected 'profile <label>'");
        ChiProfile p;
        p.label = toks[1];
        while (true) {
            auto kv = tokenize(r.next("profile field"));
            if (kv.size() == 1 && kv[0] == "end") break;
            if (kv.size() != 2) throw ParseError("expected 'key value' in profile");
            long long v = to_int(kv[1], "profile field " + kv[0]);
            if (kv[0] == "eta_degree") p.eta_degree = (int)v;
            else if (kv[0] == "s_eta") p.s_eta = (int)v;
            else if (kv[0] == "w_chi") p.w_chi = (int)v;
            else if (kv[0] == "v_chi") p.v_chi = (int)v;
            else if (kv[0] == "e_eta_chi") p.e_eta_chi = v;
            else if (kv[0] == "d_eta_chi") p.d_eta_chi = v;
            else if (kv[0] == "d_chi_F") p.d_chi_F = v;
            else if (kv[0] == "ram_F_chi") p.ram_F_chi = v;
            else if (kv[0] == "order_H") p.order_H = v;
            else if (kv[0] == "direct_product") p.is_direct_product = v != 0;
            else throw ParseError("unknown profile field: " + kv[0]);
        }
        out.push_back(std::move(p));
    }
    if (out.empty()) throw ParseError("profile document contains no profiles");
    return out;
}

std::string write_group_document(const CharacterTable& table) {
    const FiniteGroup& g = table.group();
    std::ostringstream os;
    os << "gradord-group\n";
    os << "name " << g.name() << "\n";
    os << "order " << g.order() << "\n";
    os << "table\n";
    for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) {
            if (b) os << " ";
            os << g.mul(a, b);
        }
        os << "\n";
    }
    os << "classes";
    for (const auto& cls : g.classes()) {
        os << " [";
        for (size_t i = 0; i < cls.size(); ++i) {
            if (i) os << ",";
            os << cls[i];
        }
        os << "]";
    }
    os << "\n";
    os << "characters\n";
    for (const auto& row : table.rows()) {
        os << "deg " << row.degree << " schur " << row.schur_index << " values";
        for (const auto& v : row.values) os << " [" << v.str() << "]";
        os << "\n";
    }
    return os.str();
}

CharacterTable parse_group_document(const std::string& text) {
    LineReader r{split_lines(text)};
    if (r.next("header") != "gradord-group") throw ParseError("expected header 'gradord-group'");
    std::string name;
    int order = -1;
    std::vector<std::vector<int>> table;
    std::vector<std::vector<int>> classes;
    std::vector<CharacterRow> rows;
    bool saw_chars = false;
    while (!r.done()) {
        auto toks = tokenize(r.next("group document line"));
        if (toks.empty()) continue;
        if (toks[0] == "name" && toks.size() == 2) {
            name = toks[1];
        } else if (toks[0] == "order" && toks.size() == 2) {
            order = (int)to_int(toks[1], "group order");
        } else if (toks[0] == "table" && toks.size() == 1) {
            if (order <= 0) throw ParseError("group order must come before the table");
            for (int a = 0; a < order; ++a) {
                auto row_toks = tokenize(r.next("multiplication table row"));
                if ((int)row_toks.size() != order)
                    throw ParseError("multiplication table row has wrong length");
                std::vector<int> row;
                for (const auto& tok : row_toks) row.push_back((int)to_int(tok, "table entry"));
                table.push_back(std::move(row));
            }
        } else if (toks[0] == "classes") {
            for (size_t i = 1; i < toks.size(); ++i) {
                std::vector<int> cls;
                std::istringstream is(toks[i]);
                std::string piece;
                while (std::getline(is, piece, ','))
                    cls.push_back((int)to_int(piece, "class member"));
                classes.push_back(std::move(cls));
            }
        } else if (toks[0] == "characters" && toks.size() == 1) {
            saw_chars = true;
            while (!r.done()) {
                auto ct = tokenize(r.next("character row"));
                if (ct.size() < 6 || ct[0] != "deg" || ct[2] != "schur" || ct[4] != "values")
                    throw ParseError("expected 'deg D schur S values [..] ...'");
                CharacterRow row;
                row.degree = (int)to_int(ct[1], "character degree");
                row.schur_index = (int)to_int(ct[3], "Schur index");
                for (size_t i = 5; i < ct.size(); ++i)
                    row.values.push_back(Cyclotomic::parse(ct[i]));
                rows.push_back(std::move(row));
            }
        } else {
            throw ParseError("unexpected line in group document: " + toks[0]);
        }
    }
    if (name.empty() || table.empty() || classes.empty() || !saw_chars)
        throw ParseError("group document is missing name, table, classes or characters");
    auto group = std::make_shared<FiniteGroup>(name, std::move(table), std::move(classes));
    // Values may be written at any level dividing exp(H).
    for (auto& row : rows)
        for (auto& v : row.values) {
            if (group->exponent() % v.level() != 0)
                throw ParseError("character value level does not divide exp(H)");
            v = v.embed(group->exponent());
        }
    return CharacterTable(group, std::move(rows));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << content;
}

namespace {

nlohmann::json ideal_matrix_json(const IdealMatrix& ideals) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : ideals) {
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& ideal : row) jr.push_back(ideal.str());
        rows.push_back(std::move(jr));
    }
    return rows;
}

IdealMatrix ideal_matrix_from_json(const nlohmann::json& rows) {
    IdealMatrix out;
    for (const auto& row : rows) {
        std::vector<FracIdeal> r;
        for (const auto& entry : row) r.push_back(FracIdeal::parse(entry.get<std::string>()));
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

nlohmann::json order_to_json(const GraduatedOrder& order) {
    nlohmann::json j;
    j["backend"] = backend_name(order.backend());
    j["blocks"] = order.blocks().n;
    j["dOmega"] = order.coefficient_dual().str();
    j["ideals"] = ideal_matrix_json(order.ideals());
    return j;
}

GraduatedOrder order_from_json(const nlohmann::json& j) {
    BlockSizes blocks;
    for (const auto& x : j.at("blocks")) blocks.n.push_back(x.get<int>());
    return GraduatedOrder(blocks, ideal_matrix_from_json(j.at("ideals")),
                          FracIdeal::parse(j.at("dOmega").get<std::string>()));
}

nlohmann::json matrix_to_json(Backend backend, const BlockSizes& blocks,
                              const IdealMatrix& ideals) {
    nlohmann::json j;
    j["backend"] = backend_name(backend);
    j["blocks"] = blocks.n;
    j["ideals"] = ideal_matrix_json(ideals);
    return j;
}

MatrixDocument matrix_from_json(const nlohmann::json& j) {
    BlockSizes blocks;
    for (const auto& x : j.at("blocks")) blocks.n.push_back(x.get<int>());
    return {blocks, ideal_matrix_from_json(j.at("ideals"))};
}

nlohmann::json profile_to_json(const ChiProfile& p) {
    nlohmann::json j;
    j["label"] = p.label;
    j["eta_degree"] = p.eta_degree;
    j["s_eta"] = p.s_eta;
    j["w_chi"] = p.w_chi;
    j["v_chi"] = p.v_chi;
    j["e_eta_chi"] = p.e_eta_chi;
    j["d_eta_chi"] = p.d_eta_chi;
    j["d_chi_F"] = p.d_chi_F;
    j["ram_F_chi"] = p.ram_F_chi;
    j["order_H"] = p.order_H;
    j["direct_product"] = p.is_direct_product;
    return j;
}

ChiProfile profile_from_json(const nlohmann::json& j) {
    ChiProfile p;
    p.label = j.at("label").get<std::string>();
    p.eta_degree = j.at("eta_degree").get<int>();
    p.s_eta = j.at("s_eta").get<int>();
    p.w_chi = j.at("w_chi").get<int>();
    p.v_chi = j.at("v_chi").get<int>();
    p.e_eta_chi = j.at("e_eta_chi").get<long long>();
    p.d_eta_chi = j.at("d_eta_chi").get<long long>();
    p.d_chi_F = j.at("d_chi_F").get<long long>();
    p.ram_F_chi = j.at("ram_F_chi").get<long long>();
    p.order_H = j.at("order_H").get<long long>();
    p.is_direct_product = j.at("direct_product").get<bool>();
    return p;
}

}  // namespace gradord

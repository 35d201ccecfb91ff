#include "gradord/character_table.hpp"

#include <algorithm>

namespace gradord {

CharacterTable::CharacterTable(std::shared_ptr<const FiniteGroup> group,
                               std::vector<CharacterRow> rows)
    : group_(std::move(group)), rows_(std::move(rows)) {
    validate();
}

void CharacterTable::validate() const {
    const FiniteGroup& g = *group_;
    int classes = g.class_count();
    if ((int)rows_.size() != classes)
        throw DomainError("character table must have one row per conjugacy class");
    long long degsq = 0;
    for (const auto& r : rows_) {
        if (r.degree < 1) throw DomainError("character degree must be positive");
        if (r.schur_index < 1) throw DomainError("Schur index must be positive");
        if ((int)r.values.size() != classes)
            throw DomainError("character row length differs from class count");
        for (const auto& v : r.values)
            if (v.level() != g.exponent())
                throw DomainError("character values must live at level exp(H)");
        degsq += (long long)r.degree * r.degree;
    }
    if (degsq != g.order()) throw DomainError("degree squares do not sum to the group order");
    int id_class = g.class_of(0);
    for (const auto& r : rows_)
        if (r.values[id_class] != Cyclotomic::from_rational(g.exponent(), Rational(r.degree)))
            throw DomainError("character value at the identity differs from the degree");
    // First orthogonality, exactly.
    for (int i = 0; i < (int)rows_.size(); ++i)
        for (int j = i; j < (int)rows_.size(); ++j) {
            Cyclotomic s = Cyclotomic::zero(g.exponent());
            for (int c = 0; c < classes; ++c)
                s += rows_[i].values[c] * rows_[j].values[c].conj() *
                     Rational((long long)g.classes()[c].size());
            Cyclotomic expect = Cyclotomic::from_rational(
                g.exponent(), i == j ? Rational(g.order()) : Rational(0));
            if (s != expect) throw DomainError("orthogonality relations fail");
        }
}

namespace {

CharacterRow rational_row(int degree, int level, const std::vector<long long>& vals) {
    CharacterRow r;
    r.degree = degree;
    for (long long v : vals) r.values.push_back(Cyclotomic::from_rational(level, Rational(v)));
    return r;
}

CharacterTable cyclic_table(int n) {
    auto g = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(n));
    std::vector<CharacterRow> rows;
    for (int j = 0; j < n; ++j) {
        CharacterRow r;
        r.degree = 1;
        for (int i = 0; i < n; ++i)
            r.values.push_back(Cyclotomic::zeta_power(n, (long long)i * j));
        rows.push_back(std::move(r));
    }
    return CharacterTable(g, std::move(rows));
}

CharacterTable s3_table() {
    auto g = std::make_shared<FiniteGroup>(FiniteGroup::symmetric3());
    int N = g->exponent();  // 6
    std::vector<CharacterRow> rows;
    rows.push_back(rational_row(1, N, {1, 1, 1}));
    rows.push_back(rational_row(1, N, {1, -1, 1}));
    rows.push_back(rational_row(2, N, {2, 0, -1}));
    return CharacterTable(g, std::move(rows));
}

CharacterTable d4_table() {
    auto g = std::make_shared<FiniteGroup>(FiniteGroup::dihedral4());
    int N = g->exponent();  // 4
    // classes: e, r^2, {r, r^3}, {s, s r^2}, {s r, s r^3}
    std::vector<CharacterRow> rows;
    rows.push_back(rational_row(1, N, {1, 1, 1, 1, 1}));
    rows.push_back(rational_row(1, N, {1, 1, 1, -1, -1}));
    rows.push_back(rational_row(1, N, {1, 1, -1, 1, -1}));
    rows.push_back(rational_row(1, N, {1, 1, -1, -1, 1}));
    rows.push_back(rational_row(2, N, {2, -2, 0, 0, 0}));
    return CharacterTable(g, std::move(rows));
}

CharacterTable q8_table() {
    auto g = std::make_shared<FiniteGroup>(FiniteGroup::quaternion8());
    int N = g->exponent();  // 4
    // classes: 1, -1, {±i}, {±j}, {±k}
    std::vector<CharacterRow> rows;
    rows.push_back(rational_row(1, N, {1, 1, 1, 1, 1}));
    rows.push_back(rational_row(1, N, {1, 1, 1, -1, -1}));
    rows.push_back(rational_row(1, N, {1, 1, -1, 1, -1}));
    rows.push_back(rational_row(1, N, {1, 1, -1, -1, 1}));
    rows.push_back(rational_row(2, N, {2, -2, 0, 0, 0}));
    return CharacterTable(g, std::move(rows));
}

CharacterTable a4_table() {
    auto g = std::make_shared<FiniteGroup>(FiniteGroup::alternating4());
    int N = g->exponent();  // 6
    // classes: e, double transpositions, two classes of 3-cycles
    Cyclotomic one = Cyclotomic::one(N);
    Cyclotomic omega = Cyclotomic::zeta_power(N, 2);  // zeta_6^2 = zeta_3
    Cyclotomic omega2 = omega * omega;
    std::vector<CharacterRow> rows;
    rows.push_back(rational_row(1, N, {1, 1, 1, 1}));
    CharacterRow cw, cw2;
    cw.degree = cw2.degree = 1;
    cw.values = {one, one, omega, omega2};
    cw2.values = {one, one, omega2, omega};
    // The two cubic rows must assign omega and omega^2 compatibly with
    // squaring between the 3-cycle classes; swap if the frame disagrees.
    int rep = g->classes()[2][0];
    if (g->class_of(g->mul(rep, rep)) != 3) std::swap(cw.values, cw2.values);
    rows.push_back(std::move(cw));
    rows.push_back(std::move(cw2));
    rows.push_back(rational_row(3, N, {3, -1, 0, 0}));
    return CharacterTable(g, std::move(rows));
}

}  // namespace

bool CharacterTable::is_bundled_name(const std::string& name) {
    if (name == "S3" || name == "D4" || name == "Q8" || name == "A4") return true;
    if (name.size() >= 2 && name[0] == 'C') {
        for (size_t i = 1; i < name.size(); ++i)
            if (!isdigit((unsigned char)name[i])) return false;
        return true;
    }
    return false;
}

CharacterTable CharacterTable::bundled(const std::string& name) {
    if (name == "S3") return s3_table();
    if (name == "D4") return d4_table();
    if (name == "Q8") return q8_table();
    if (name == "A4") return a4_table();
    if (is_bundled_name(name)) {
        int n = std::stoi(name.substr(1));
        if (n < 1 || n > 64) throw DomainError("bundled cyclic groups range over C1..C64");
        return cyclic_table(n);
    }
    throw DomainError("unknown bundled group: " + name);
}

}  // namespace gradord

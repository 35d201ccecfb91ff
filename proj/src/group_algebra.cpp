#include "gradord/group_algebra.hpp"

#include <algorithm>
#include <set>

namespace gradord {

GroupAlgebraElement::GroupAlgebraElement(std::shared_ptr<const FiniteGroup> group, int level)
    : group_(std::move(group)), level_(level),
      coeff_(group_->order(), Cyclotomic::zero(level)) {}

GroupAlgebraElement GroupAlgebraElement::one(std::shared_ptr<const FiniteGroup> group, int level) {
    GroupAlgebraElement e(std::move(group), level);
    e.coeff_[0] = Cyclotomic::one(level);
    return e;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
    GroupAlgebraElement r = *this;
    for (int i = 0; i < group_->order(); ++i) r.coeff_[i] += o.coeff_[i];
    return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
    GroupAlgebraElement r = *this;
    for (int i = 0; i < group_->order(); ++i) r.coeff_[i] -= o.coeff_[i];
    return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
    GroupAlgebraElement r(group_, level_);
    int n = group_->order();
    for (int a = 0; a < n; ++a) {
        if (coeff_[a].is_zero()) continue;
        for (int b = 0; b < n; ++b) {
            if (o.coeff_[b].is_zero()) continue;
            r.coeff_[group_->mul(a, b)] += coeff_[a] * o.coeff_[b];
        }
    }
    return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const Rational& s) const {
    GroupAlgebraElement r = *this;
    for (auto& c : r.coeff_) c = c * s;
    return r;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& o) const {
    return coeff_ == o.coeff_;
}

bool GroupAlgebraElement::is_central() const {
    int n = group_->order();
    for (int g = 0; g < n; ++g)
        for (int a = 0; a < n; ++a)
            if (coeff_[a] != coeff_[group_->mul(group_->mul(g, a), group_->inverse(g))])
                return false;
    return true;
}

bool GroupAlgebraElement::has_rational_coefficients() const {
    for (const auto& c : coeff_)
        if (!c.is_rational()) return false;
    return true;
}

bool DecompositionGroup::contains(long long a) const {
    long long r = a % modulus;
    if (r < 0) r += modulus;
    return std::binary_search(elements.begin(), elements.end(), r);
}

DecompositionGroup decomposition_group(long long modulus, long long p) {
    if (modulus < 1) throw DomainError("modulus must be >= 1");
    if (p < 3 || !is_prime(p) || p % 2 == 0) throw DomainError("p must be an odd prime");
    DecompositionGroup d;
    d.modulus = modulus;
    d.p = p;
    long long m = modulus;
    int k = 0;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    d.prime_to_p_part = m;
    d.p_power_exponent = k;
    // Powers of p modulo m; every class over one of them belongs.
    std::set<long long> frob_classes;
    long long x = 1 % m;
    do {
        frob_classes.insert(x);
        x = (x * (p % m)) % m;
    } while (!frob_classes.count(x));
    for (long long a = 0; a < modulus; ++a) {
        if (gcd_ll(a, modulus) != 1) continue;
        if (frob_classes.count(a % m)) d.elements.push_back(a);
    }
    for (long long a : d.elements)
        if (a % m == 1 % m) d.inertia.push_back(a);
    d.frobenius = 1;
    for (long long a : d.elements)
        if (a % m == p % m) {
            d.frobenius = a;
            break;
        }
    return d;
}

namespace {

std::vector<Cyclotomic> galois_row(const CharacterTable& table, int row, long long a) {
    std::vector<Cyclotomic> out;
    out.reserve(table.group().class_count());
    for (int c = 0; c < table.group().class_count(); ++c)
        out.push_back(table.value(row, c).galois(a));
    return out;
}

int find_row(const CharacterTable& table, const std::vector<Cyclotomic>& values, int degree) {
    for (int r = 0; r < table.row_count(); ++r) {
        if (table.row(r).degree != degree) continue;
        if (table.row(r).values == values) return r;
    }
    throw DomainError("Galois image of a character row is not in the table");
}

}  // namespace

std::vector<std::vector<int>> p_adic_orbits(const CharacterTable& table, long long p) {
    DecompositionGroup d = decomposition_group(table.level(), p);
    int rows = table.row_count();
    std::vector<int> orbit_of(rows, -1);
    std::vector<std::vector<int>> orbits;
    for (int r = 0; r < rows; ++r) {
        if (orbit_of[r] >= 0) continue;
        std::set<int> members;
        for (long long a : d.elements)
            members.insert(find_row(table, galois_row(table, r, a), table.row(r).degree));
        std::vector<int> orbit(members.begin(), members.end());
        for (int x : orbit) orbit_of[x] = (int)orbits.size();
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

GroupAlgebraElement primitive_idempotent(const CharacterTable& table, int row) {
    const FiniteGroup& g = table.group();
    GroupAlgebraElement e(table.group_ptr(), table.level());
    Rational scale(table.row(row).degree, g.order());
    for (int h = 0; h < g.order(); ++h)
        e.coefficient(h) = table.value_at_element(row, g.inverse(h)) * scale;
    return e;
}

GroupAlgebraElement epsilon_idempotent(const CharacterTable& table,
                                       const std::vector<int>& orbit) {
    if (orbit.empty()) throw DomainError("empty character orbit");
    GroupAlgebraElement e(table.group_ptr(), table.level());
    for (int row : orbit) e = e + primitive_idempotent(table, row);
    // A Galois orbit sum is stable under every sigma_a that permutes the
    // orbit; in particular under the whole decomposition group.
    int level = table.level();
    for (long long a = 2; a < level; ++a) {
        if (gcd_ll(a, level) != 1) continue;
        bool preserves = true;
        for (int row : orbit) {
            bool hit = false;
            auto moved = galois_row(table, row, a);
            for (int other : orbit)
                if (table.row(other).degree == table.row(row).degree &&
                    table.row(other).values == moved) {
                    hit = true;
                    break;
                }
            preserves = preserves && hit;
        }
        if (!preserves) continue;
        for (int h = 0; h < table.group().order(); ++h)
            if (e.coefficient(h).galois(a) != e.coefficient(h))
                throw DomainError("orbit sum of idempotents is not Galois stable");
    }
    return e;
}

ChiInvariants chi_invariants(const CharacterTable& table, const std::vector<int>& alpha,
                             int row, long long p) {
    const FiniteGroup& g = table.group();
    if (!g.is_automorphism(alpha)) throw DomainError("alpha is not an automorphism of H");
    int aut_order = g.automorphism_order(alpha);
    {
        int q = aut_order;
        while (q % p == 0) q /= (int)p;
        if (q != 1) throw DomainError("alpha must have p-power order");
    }

    int n = g.order();
    // eta o alpha^j as value-per-element tables.
    auto compose = [&](const std::vector<int>& images) {
        std::vector<Cyclotomic> vals;
        vals.reserve(n);
        for (int h = 0; h < n; ++h) vals.push_back(table.value_at_element(row, images[h]));
        return vals;
    };
    std::vector<int> alpha_pow(n);
    for (int i = 0; i < n; ++i) alpha_pow[i] = i;
    std::vector<std::vector<Cyclotomic>> eta_alpha;  // index j: eta o alpha^j
    eta_alpha.push_back(compose(alpha_pow));
    int w = 0;
    for (int j = 1; j <= aut_order; ++j) {
        for (int i = 0; i < n; ++i) alpha_pow[i] = alpha[alpha_pow[i]];
        eta_alpha.push_back(compose(alpha_pow));
        if (eta_alpha[j] == eta_alpha[0] && w == 0) w = j;
    }
    if (w == 0) throw DomainError("orbit of eta under alpha does not close");

    // chi|_H = sum_{j < w} eta o alpha^j, and its stabilizer inside the
    // decomposition group.
    std::vector<Cyclotomic> chi_res(n, Cyclotomic::zero(table.level()));
    for (int j = 0; j < w; ++j)
        for (int h = 0; h < n; ++h) chi_res[h] += eta_alpha[j][h];
    DecompositionGroup d = decomposition_group(table.level(), p);
    std::vector<long long> stab;
    for (long long a : d.elements) {
        bool fixes = true;
        for (int h = 0; h < n && fixes; ++h) fixes = chi_res[h].galois(a) == chi_res[h];
        if (fixes) stab.push_back(a);
    }

    ChiInvariants out;
    out.w_chi = w;
    for (int v = 1; v <= w; ++v) {
        std::vector<long long> matches;
        for (long long a : stab) {
            bool ok = true;
            for (int h = 0; h < n && ok; ++h) ok = eta_alpha[0][h].galois(a) == eta_alpha[v][h];
            if (ok) matches.push_back(a);
        }
        if (matches.empty()) continue;
        // All matches must induce the same automorphism of the value field.
        for (size_t s = 1; s < matches.size(); ++s)
            for (int h = 0; h < n; ++h)
                if (eta_alpha[0][h].galois(matches[0]) != eta_alpha[0][h].galois(matches[s]))
                    throw DomainError("Galois automorphism realizing v_chi is not unique");
        out.v_chi = v;
        out.galois_witness = matches[0];
        if (w % v != 0) throw DomainError("computed v_chi does not divide w_chi");
        // The realized automorphism has order w/v on the values of eta.
        long long tau_order = 1;
        long long ak = out.galois_witness;
        while (true) {
            bool fixes_all = true;
            for (int h = 0; h < n && fixes_all; ++h)
                fixes_all = eta_alpha[0][h].galois(ak) == eta_alpha[0][h];
            if (fixes_all) break;
            ak = ak * out.galois_witness % table.level();
            ++tau_order;
            if (tau_order > w) throw DomainError("Galois witness order diverged");
        }
        if (tau_order != w / v)
            throw DomainError("Galois witness does not have order w/v");
        return out;
    }
    throw DomainError("no Galois automorphism matches any power of alpha");
}

}  // namespace gradord

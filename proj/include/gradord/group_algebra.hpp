#pragma once

#include <vector>

#include "gradord/character_table.hpp"

namespace gradord {

// Element of the group algebra with exact cyclotomic coefficients, indexed
// by group elements.
class GroupAlgebraElement {
public:
    GroupAlgebraElement(std::shared_ptr<const FiniteGroup> group, int level);

    const FiniteGroup& group() const { return *group_; }
    int level() const { return level_; }
    const Cyclotomic& coefficient(int element) const { return coeff_[element]; }
    Cyclotomic& coefficient(int element) { return coeff_[element]; }

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator*(const Rational& r) const;
    bool operator==(const GroupAlgebraElement& o) const;
    bool operator!=(const GroupAlgebraElement& o) const { return !(*this == o); }

    bool is_idempotent() const { return *this * *this == *this; }
    bool is_central() const;
    bool has_rational_coefficients() const;

    static GroupAlgebraElement one(std::shared_ptr<const FiniteGroup> group, int level);

private:
    std::shared_ptr<const FiniteGroup> group_;
    int level_;
    std::vector<Cyclotomic> coeff_;
};

// The subgroup of (Z/N)^x cutting out the p-adic Galois action on N-th
// roots of unity: all residues congruent to a power of p modulo the
// prime-to-p part of N.
struct DecompositionGroup {
    long long modulus = 1;        // N
    long long p = 0;
    long long prime_to_p_part = 1;  // m, with N = p^k m
    int p_power_exponent = 0;       // k
    std::vector<long long> elements;        // sorted
    std::vector<long long> inertia;         // elements congruent to 1 mod m
    long long frobenius = 1;                // a lift of p mod m

    bool contains(long long a) const;
};
DecompositionGroup decomposition_group(long long modulus, long long p);

// Partition of the table rows under the action value -> galois(a, value)
// for a in the decomposition group mod exp(H).
std::vector<std::vector<int>> p_adic_orbits(const CharacterTable& table, long long p);

// e(eta) = (eta(1)/#H) sum_h eta(h^{-1}) h.
GroupAlgebraElement primitive_idempotent(const CharacterTable& table, int row);
// eps(eta) = sum over the p-adic orbit of the primitive idempotents; the
// coefficients are rational.
GroupAlgebraElement epsilon_idempotent(const CharacterTable& table,
                                       const std::vector<int>& orbit);

struct ChiInvariants {
    int w_chi = 1;  // least w >= 1 with eta o alpha^w = eta
    int v_chi = 1;  // least v >= 1 with eta o alpha^v = sigma_a o eta for a
                    // in the decomposition group fixing the values of chi|_H
    long long galois_witness = 1;  // the residue a realizing v_chi
};
// alpha is an automorphism of H given by images, of p-power order.
ChiInvariants chi_invariants(const CharacterTable& table, const std::vector<int>& alpha,
                             int row, long long p);

}  // namespace gradord

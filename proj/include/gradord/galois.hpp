#pragma once

#include <vector>

#include "gradord/group_algebra.hpp"

namespace gradord {

// Finite abelian extension of Q_p inside Q_p(zeta_N): the fixed field of a
// subgroup of the decomposition group mod N.
struct AbelianField {
    long long modulus = 1;  // N
    long long p = 0;
    std::vector<long long> subgroup_generators;  // generators of the fixing group
};

struct FieldInvariants {
    long long degree = 1;
    long long e = 1;  // ramification index over Q_p
    long long f = 1;  // residue degree over Q_p
    long long different_exponent = 0;  // valuation of the different in the field itself
    long long discriminant_exponent = 0;
};

// Closure of a generating set inside (Z/N)^x.
std::vector<long long> subgroup_closure(long long modulus, std::vector<long long> generators);

// Invariants over Q_p through the conductor-discriminant formula, counted
// with subgroup indices along the inertia filtration.
FieldInvariants abelian_field_invariants(const AbelianField& field);
long long different_exponent_abelian(const AbelianField& field);

// e of Q_p(zeta_N)/Q_p.
long long full_layer_ramification(long long modulus, long long p);

// Different exponent d(U/M) for full cyclotomic layers M = Q_p(zeta_lower),
// U = Q_p(zeta_upper) with lower | upper: zero for unramified steps, the
// derivative of the relative minimal polynomial for p-power steps.
long long relative_different_full_layers(long long upper, long long lower, long long p);

// d(U/L) = e(U/M) d(M/L) + d(U/M) on a tower of full layers.
bool tower_additivity_check(long long lower, long long middle, long long upper, long long p);

// Independent valuation of Phi'_{p^k}(zeta) by exact division by zeta - 1
// in Z[zeta_{p^k}]; feasible for small layers only.
long long cyclotomic_derivative_valuation(long long p, int k);

}  // namespace gradord

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradord/frac_ideal.hpp"
#include "gradord/ring_elem.hpp"

namespace gradord {

struct BlockSizes {
    std::vector<int> n;
    int count() const { return (int)n.size(); }
    int total() const;
    // Cut positions 0 = c_0 < c_1 < ... < c_t = total.
    std::vector<int> boundaries() const;
    // Block index of a scalar row/column position.
    int block_of(int position) const;
    static BlockSizes join(const BlockSizes& a, const BlockSizes& b);
    bool operator==(const BlockSizes& o) const { return n == o.n; }
};

using IdealMatrix = std::vector<std::vector<FracIdeal>>;

IdealMatrix ideal_matrix_product(const IdealMatrix& x, const IdealMatrix& y);
bool ideal_matrix_equal(const IdealMatrix& x, const IdealMatrix& y);
bool ideal_matrix_contains(const IdealMatrix& x, const IdealMatrix& y);  // entrywise

struct StandardFormReport {
    bool ok = true;
    std::string condition;  // "shape", "backend", "i", "ii" or "iii"
    int i = -1, j = -1, k = -1;
    std::string message;
};

// Standard-form graduated order: block sizes n, a t x t matrix of nonzero
// two-sided fractional ideals with
//   (i)   I_ij I_jk <= I_ik,
//   (ii)  I_ii = Omega,
//   (iii) I_ij I_ji proper for i != j,
// plus the trace dual of the coefficient order as a model parameter.
class GraduatedOrder {
public:
    GraduatedOrder(BlockSizes blocks, IdealMatrix ideals, FracIdeal d_omega);

    static StandardFormReport check(const BlockSizes& blocks, const IdealMatrix& ideals);

    const BlockSizes& blocks() const { return blocks_; }
    const IdealMatrix& ideals() const { return ideals_; }
    const FracIdeal& ideal(int i, int j) const { return ideals_[i][j]; }
    const FracIdeal& coefficient_dual() const { return d_omega_; }
    Backend backend() const { return ideals_[0][0].backend(); }
    int block_count() const { return blocks_.count(); }
    int total_size() const { return blocks_.total(); }

    // Ideal matrix over a finer subdivision of the same total size.
    IdealMatrix refined_ideals(const BlockSizes& fine) const;
    // Radical entries over the same finer subdivision.
    IdealMatrix refined_radical(const BlockSizes& fine) const;

private:
    BlockSizes blocks_;
    IdealMatrix ideals_;
    FracIdeal d_omega_;
};

// Jac = diagonal blocks multiplied by the maximal ideal, off-diagonal
// entries unchanged.
IdealMatrix jacobson_radical(const GraduatedOrder& order);

struct ResidueBlock {
    int size;            // n_i
    std::string algebra; // matrix algebra over the residue field
};
std::vector<ResidueBlock> radical_quotient(const GraduatedOrder& order);

bool is_lattice_shape(const GraduatedOrder& order, const std::vector<FracIdeal>& m);

struct LatticeIsomorphism {
    bool isomorphic = false;
    Monomial shift{0, 0};  // witness generator of the principal shift ideal
};
LatticeIsomorphism lattices_isomorphic(const GraduatedOrder& order,
                                       const std::vector<FracIdeal>& m,
                                       const std::vector<FracIdeal>& m_prime);

bool is_fractional_ideal_matrix(const GraduatedOrder& order, const IdealMatrix& j);

// Entry (i,j) of the trace dual is d_omega * I_ji^{-1}; requires every
// entry invertible and reports the first offending entry otherwise.
IdealMatrix inverse_different(const GraduatedOrder& order);
// The conductor of the order into any self-dual suborder equals the trace
// dual; named alias so reports can cite conductor semantics.
IdealMatrix conductor_into_selfdual(const GraduatedOrder& order);

// Independent search-based dual computation for the DVR backend: per entry,
// the extremal exponent shift passing the single-entry trace test.
IdealMatrix trace_dual_oracle(const GraduatedOrder& order, int exponent_bound);

GraduatedOrder intersect_orders(const GraduatedOrder& o1, const GraduatedOrder& o2);

bool radically_covers(const GraduatedOrder& g, const GraduatedOrder& l);
bool orders_equal_as_sets(const GraduatedOrder& a, const GraduatedOrder& b);

// Staircase shape under some permutation of the blocks.
bool is_extremal(const GraduatedOrder& order);

// Intersection of all extremal standard-form covers on the same idempotent
// frame (merged-block staircases included). DVR backend, t <= 6.
GraduatedOrder graduated_hull(const GraduatedOrder& order);

// True when the radical fails the two-sided invertibility test, so no
// hereditary order exists with this radical.
bool hereditary_obstruction(const GraduatedOrder& order);
bool ideal_matrix_invertible(const GraduatedOrder& order, const IdealMatrix& j);

// Suborder with all off-diagonal entries replaced by one principal ideal
// chosen inside the intersection of all entries.
GraduatedOrder principalize(const GraduatedOrder& order);

// diag(det a, 1, ..., 1) for a square matrix over the order; checks that
// the determinant is integral and the witness lies in the order.
std::vector<RingElem> epac_witness(const GraduatedOrder& order,
                                   const std::vector<std::vector<RingElem>>& a);

// Scalar-level membership: entry (k,l) must lie in the ideal of its block
// position; an absent entry is zero and lies in every ideal.
using ElementMatrix = std::vector<std::vector<std::optional<Monomial>>>;
bool element_matrix_in_order(const GraduatedOrder& order, const ElementMatrix& x);

}  // namespace gradord

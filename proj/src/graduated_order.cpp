#include "gradord/graduated_order.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace gradord {

int BlockSizes::total() const {
    int s = 0;
    for (int x : n) s += x;
    return s;
}

std::vector<int> BlockSizes::boundaries() const {
    std::vector<int> cuts{0};
    for (int x : n) cuts.push_back(cuts.back() + x);
    return cuts;
}

int BlockSizes::block_of(int position) const {
    int acc = 0;
    for (size_t i = 0; i < n.size(); ++i) {
        acc += n[i];
        if (position < acc) return (int)i;
    }
    throw DomainError("position outside matrix");
}

BlockSizes BlockSizes::join(const BlockSizes& a, const BlockSizes& b) {
    if (a.total() != b.total()) throw DomainError("total size mismatch between subdivisions");
    std::set<int> cuts;
    for (int c : a.boundaries()) cuts.insert(c);
    for (int c : b.boundaries()) cuts.insert(c);
    BlockSizes out;
    int prev = 0;
    for (int c : cuts)
        if (c > 0) {
            out.n.push_back(c - prev);
            prev = c;
        }
    return out;
}

IdealMatrix ideal_matrix_product(const IdealMatrix& x, const IdealMatrix& y) {
    size_t t = x.size();
    IdealMatrix out(t, std::vector<FracIdeal>(t, FracIdeal::unit(x[0][0].backend())));
    for (size_t i = 0; i < t; ++i)
        for (size_t k = 0; k < t; ++k) {
            FracIdeal acc = x[i][0].product(y[0][k]);
            for (size_t j = 1; j < t; ++j) acc = acc.sum(x[i][j].product(y[j][k]));
            out[i][k] = acc;
        }
    return out;
}

bool ideal_matrix_equal(const IdealMatrix& x, const IdealMatrix& y) {
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            if (x[i][j] != y[i][j]) return false;
    return true;
}

bool ideal_matrix_contains(const IdealMatrix& x, const IdealMatrix& y) {
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            if (!x[i][j].contains(y[i][j])) return false;
    return true;
}

StandardFormReport GraduatedOrder::check(const BlockSizes& blocks, const IdealMatrix& ideals) {
    StandardFormReport r;
    int t = blocks.count();
    if (t < 1) {
        r = {false, "shape", -1, -1, -1, "at least one block required"};
        return r;
    }
    for (int x : blocks.n)
        if (x < 1) return {false, "shape", -1, -1, -1, "block sizes must be positive"};
    if ((int)ideals.size() != t)
        return {false, "shape", -1, -1, -1, "ideal matrix must be t x t"};
    for (const auto& row : ideals)
        if ((int)row.size() != t)
            return {false, "shape", -1, -1, -1, "ideal matrix must be t x t"};
    Backend b = ideals[0][0].backend();
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (ideals[i][j].backend() != b)
                return {false, "backend", i, j, -1, "mixed ideal backends in matrix"};
    const FracIdeal omega = FracIdeal::unit(b);
    for (int i = 0; i < t; ++i)
        if (ideals[i][i] != omega) {
            std::ostringstream os;
            os << "condition (ii) fails: I_" << i + 1 << i + 1 << " = " << ideals[i][i].str()
               << " is not the unit ideal";
            return {false, "ii", i, i, -1, os.str()};
        }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            for (int k = 0; k < t; ++k)
                if (!ideals[i][k].contains(ideals[i][j].product(ideals[j][k]))) {
                    std::ostringstream os;
                    os << "condition (i) fails at (" << i + 1 << "," << j + 1 << "," << k + 1
                       << "): I_" << i + 1 << j + 1 << " I_" << j + 1 << k + 1
                       << " is not contained in I_" << i + 1 << k + 1;
                    return {false, "i", i, j, k, os.str()};
                }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (i != j && ideals[i][j].product(ideals[j][i]).is_unit_ideal()) {
                std::ostringstream os;
                os << "condition (iii) fails at (" << i + 1 << "," << j + 1 << "): I_" << i + 1
                   << j + 1 << " I_" << j + 1 << i + 1 << " is the unit ideal";
                return {false, "iii", i, j, -1, os.str()};
            }
    return r;
}

GraduatedOrder::GraduatedOrder(BlockSizes blocks, IdealMatrix ideals, FracIdeal d_omega)
    : blocks_(std::move(blocks)), ideals_(std::move(ideals)), d_omega_(std::move(d_omega)) {
    StandardFormReport r = check(blocks_, ideals_);
    if (!r.ok) throw DomainError("not a standard form: " + r.message);
    if (d_omega_.backend() != backend())
        throw DomainError("coefficient dual backend differs from ideal matrix backend");
    if (!d_omega_.is_invertible())
        throw DomainError("coefficient dual must be principal");
}

IdealMatrix GraduatedOrder::refined_ideals(const BlockSizes& fine) const {
    int t = fine.count();
    auto coarse_cuts = blocks_.boundaries();
    auto fine_cuts = fine.boundaries();
    // Every coarse cut must appear among the fine cuts.
    for (int c : coarse_cuts)
        if (!std::binary_search(fine_cuts.begin(), fine_cuts.end(), c))
            throw DomainError("subdivision does not refine the order's blocks");
    std::vector<int> owner(t);
    for (int i = 0; i < t; ++i) owner[i] = blocks_.block_of(fine_cuts[i]);
    IdealMatrix out(t, std::vector<FracIdeal>(t, FracIdeal::unit(backend())));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) out[i][j] = ideals_[owner[i]][owner[j]];
    return out;
}

IdealMatrix GraduatedOrder::refined_radical(const BlockSizes& fine) const {
    int t = fine.count();
    auto fine_cuts = fine.boundaries();
    std::vector<int> owner(t);
    for (int i = 0; i < t; ++i) owner[i] = blocks_.block_of(fine_cuts[i]);
    IdealMatrix out = refined_ideals(fine);
    const FracIdeal m = FracIdeal::maximal_ideal(backend());
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (owner[i] == owner[j]) out[i][j] = out[i][j].product(m);
    return out;
}

IdealMatrix jacobson_radical(const GraduatedOrder& order) {
    IdealMatrix out = order.ideals();
    const FracIdeal m = FracIdeal::maximal_ideal(order.backend());
    for (int i = 0; i < order.block_count(); ++i) out[i][i] = out[i][i].product(m);
    return out;
}

std::vector<ResidueBlock> radical_quotient(const GraduatedOrder& order) {
    std::vector<ResidueBlock> out;
    for (int ni : order.blocks().n) {
        std::ostringstream os;
        os << "M_" << ni << "(Omega/m)";
        out.push_back({ni, os.str()});
    }
    return out;
}

bool is_lattice_shape(const GraduatedOrder& order, const std::vector<FracIdeal>& m) {
    int t = order.block_count();
    if ((int)m.size() != t) throw DomainError("lattice shape length differs from block count");
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (!m[i].contains(order.ideal(i, j).product(m[j]))) return false;
    return true;
}

LatticeIsomorphism lattices_isomorphic(const GraduatedOrder& order,
                                       const std::vector<FracIdeal>& m,
                                       const std::vector<FracIdeal>& m_prime) {
    int t = order.block_count();
    if ((int)m.size() != t || (int)m_prime.size() != t)
        throw DomainError("lattice shape length differs from block count");
    Monomial shift{0, 0};
    if (order.backend() == Backend::DvrExp) {
        shift.a = (int)(m[0].dvr_exponent() - m_prime[0].dvr_exponent());
    } else {
        shift = m[0].generators()[0] - m_prime[0].generators()[0];
    }
    for (int i = 0; i < t; ++i)
        if (m_prime[i].shifted(shift) != m[i]) return {false, {0, 0}};
    return {true, shift};
}

bool is_fractional_ideal_matrix(const GraduatedOrder& order, const IdealMatrix& j) {
    int t = order.block_count();
    if ((int)j.size() != t) throw DomainError("ideal matrix size differs from block count");
    for (const auto& row : j)
        if ((int)row.size() != t) throw DomainError("ideal matrix size differs from block count");
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b)
            for (int c = 0; c < t; ++c) {
                if (!j[a][c].contains(order.ideal(a, b).product(j[b][c]))) return false;
                if (!j[a][c].contains(j[a][b].product(order.ideal(b, c)))) return false;
            }
    return true;
}

IdealMatrix inverse_different(const GraduatedOrder& order) {
    int t = order.block_count();
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (!order.ideal(i, j).is_invertible()) {
                std::ostringstream os;
                os << "entry (" << i + 1 << "," << j + 1 << ") = " << order.ideal(i, j).str()
                   << " is not invertible; the trace dual formula requires invertible entries";
                throw DomainError(os.str());
            }
    IdealMatrix out(t, std::vector<FracIdeal>(t, FracIdeal::unit(order.backend())));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            out[i][j] = order.coefficient_dual().product(order.ideal(j, i).inverse());
    return out;
}

IdealMatrix conductor_into_selfdual(const GraduatedOrder& order) {
    // (Gamma : Lambda)_l = (Gamma : Lambda)_r = trace dual of Gamma for any
    // self-dual Lambda inside it; in particular independent of Lambda.
    return inverse_different(order);
}

IdealMatrix trace_dual_oracle(const GraduatedOrder& order, int exponent_bound) {
    if (order.backend() != Backend::DvrExp)
        throw DomainError("trace dual oracle is defined for the DVR backend only");
    long long delta = order.coefficient_dual().dvr_exponent();
    long long max_abs = 0;
    int t = order.block_count();
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            max_abs = std::max(max_abs, std::llabs(order.ideal(i, j).dvr_exponent()));
    if (exponent_bound < max_abs + std::llabs(delta) + 1)
        throw DomainError("exponent bound too small for the trace search");
    IdealMatrix out(t, std::vector<FracIdeal>(t, FracIdeal::unit(Backend::DvrExp)));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            // A single-entry matrix x E_kl with (k,l) in block (i,j) meets
            // the diagonal only against entries of block (j,i), so the
            // trace condition reads v(x) + v(I_ji) >= delta.
            long long e_ji = order.ideal(j, i).dvr_exponent();
            bool found = false;
            for (long long v = -exponent_bound; v <= exponent_bound; ++v) {
                if (v + e_ji >= delta) {
                    if (v == -exponent_bound)
                        throw DomainError("trace search hit the exponent bound");
                    out[i][j] = FracIdeal::dvr(v);
                    found = true;
                    break;
                }
            }
            if (!found) throw DomainError("trace search exhausted the exponent bound");
        }
    return out;
}

namespace {

// Merge adjacent blocks whose mutual entries became the unit ideal, so the
// result satisfies condition (iii) again. For intersections of valid
// standard forms this loop never fires.
GraduatedOrder rebuild_standard_form(BlockSizes blocks, IdealMatrix mat, FracIdeal d_omega) {
    bool changed = true;
    while (changed) {
        changed = false;
        int t = blocks.count();
        for (int i = 0; i + 1 < t; ++i) {
            int j = i + 1;
            if (mat[i][j].product(mat[j][i]).is_unit_ideal()) {
                if (!mat[i][j].is_unit_ideal() || !mat[j][i].is_unit_ideal())
                    throw DomainError("cannot merge blocks: unit product with non-unit entries");
                for (int k = 0; k < t; ++k)
                    if (k != i && k != j && (mat[i][k] != mat[j][k] || mat[k][i] != mat[k][j]))
                        throw DomainError("cannot merge blocks: rows disagree");
                blocks.n[i] += blocks.n[j];
                blocks.n.erase(blocks.n.begin() + j);
                mat.erase(mat.begin() + j);
                for (auto& row : mat) row.erase(row.begin() + j);
                changed = true;
                break;
            }
        }
    }
    return GraduatedOrder(std::move(blocks), std::move(mat), std::move(d_omega));
}

}  // namespace

GraduatedOrder intersect_orders(const GraduatedOrder& o1, const GraduatedOrder& o2) {
    if (o1.total_size() != o2.total_size())
        throw DomainError("orders have different total matrix size");
    if (o1.backend() != o2.backend()) throw DomainError("orders have different backends");
    if (o1.coefficient_dual() != o2.coefficient_dual())
        throw DomainError("orders have different coefficient duals");
    BlockSizes fine = BlockSizes::join(o1.blocks(), o2.blocks());
    IdealMatrix a = o1.refined_ideals(fine);
    IdealMatrix b = o2.refined_ideals(fine);
    int t = fine.count();
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) a[i][j] = a[i][j].intersect(b[i][j]);
    return rebuild_standard_form(fine, std::move(a), o1.coefficient_dual());
}

bool radically_covers(const GraduatedOrder& g, const GraduatedOrder& l) {
    if (g.total_size() != l.total_size())
        throw DomainError("orders have different total matrix size");
    if (g.backend() != l.backend()) throw DomainError("orders have different backends");
    BlockSizes fine = BlockSizes::join(g.blocks(), l.blocks());
    if (!ideal_matrix_contains(g.refined_ideals(fine), l.refined_ideals(fine))) return false;
    return ideal_matrix_contains(g.refined_radical(fine), l.refined_radical(fine));
}

bool orders_equal_as_sets(const GraduatedOrder& a, const GraduatedOrder& b) {
    if (a.total_size() != b.total_size() || a.backend() != b.backend()) return false;
    BlockSizes fine = BlockSizes::join(a.blocks(), b.blocks());
    return ideal_matrix_equal(a.refined_ideals(fine), b.refined_ideals(fine));
}

bool is_extremal(const GraduatedOrder& order) {
    int t = order.block_count();
    if (t == 1) return true;
    const FracIdeal omega = FracIdeal::unit(order.backend());
    const FracIdeal m = FracIdeal::maximal_ideal(order.backend());
    // In a staircase, each off-diagonal pair is (m, Omega); "i above j"
    // means I_ij = m. The relation must be a strict total order.
    std::vector<std::vector<bool>> above(t, std::vector<bool>(t, false));
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            const FracIdeal& x = order.ideal(i, j);
            const FracIdeal& y = order.ideal(j, i);
            if (x == m && y == omega) above[i][j] = true;
            else if (x == omega && y == m) above[j][i] = true;
            else return false;
        }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            for (int k = 0; k < t; ++k)
                if (i != j && j != k && i != k && above[i][j] && above[j][k] && !above[i][k])
                    return false;
    return true;
}

namespace {

void ordered_set_partitions(int t, const std::function<void(const std::vector<int>&, int)>& visit) {
    // Restricted growth strings enumerate the set partitions; every
    // permutation of the parts then gives an ordered partition.
    std::vector<int> rgs(t, 0);
    std::function<void(int, int)> rec = [&](int pos, int max_used) {
        if (pos == t) {
            int parts = max_used + 1;
            std::vector<int> perm(parts);
            for (int i = 0; i < parts; ++i) perm[i] = i;
            do {
                std::vector<int> rank(t);
                for (int i = 0; i < t; ++i) rank[i] = perm[rgs[i]];
                visit(rank, parts);
            } while (std::next_permutation(perm.begin(), perm.end()));
            return;
        }
        for (int v = 0; v <= max_used + 1; ++v) {
            rgs[pos] = v;
            rec(pos + 1, std::max(max_used, v));
        }
    };
    rec(0, -1);
}

}  // namespace

GraduatedOrder graduated_hull(const GraduatedOrder& order) {
    if (order.backend() != Backend::DvrExp)
        throw DomainError("graduated hull enumeration is restricted to the DVR backend");
    int t = order.block_count();
    if (t > 6) throw DomainError("graduated hull enumeration is restricted to t <= 6");
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (order.ideal(i, j).dvr_exponent() < 0)
                throw DomainError("graduated hull requires integral entries on this frame");

    const FracIdeal omega = FracIdeal::unit(Backend::DvrExp);
    const FracIdeal m = FracIdeal::maximal_ideal(Backend::DvrExp);
    IdealMatrix jac = jacobson_radical(order);
    std::optional<IdealMatrix> meet;
    int covers = 0;
    ordered_set_partitions(t, [&](const std::vector<int>& rank, int) {
        IdealMatrix s(t, std::vector<FracIdeal>(t, omega));
        IdealMatrix sjac(t, std::vector<FracIdeal>(t, omega));
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) {
                bool up = rank[i] < rank[j];
                s[i][j] = up ? m : omega;
                sjac[i][j] = rank[i] == rank[j] ? m : s[i][j];
            }
        if (!ideal_matrix_contains(s, order.ideals()) || !ideal_matrix_contains(sjac, jac))
            return;
        ++covers;
        if (!meet) {
            meet = s;
        } else {
            for (int i = 0; i < t; ++i)
                for (int j = 0; j < t; ++j) (*meet)[i][j] = (*meet)[i][j].intersect(s[i][j]);
        }
    });
    if (!meet) throw DomainError("no extremal cover exists on this idempotent frame");
    GraduatedOrder hull =
        rebuild_standard_form(order.blocks(), std::move(*meet), order.coefficient_dual());
    if (!radically_covers(hull, order))
        throw DomainError("internal error: hull does not radically cover the input");
    return hull;
}

bool ideal_matrix_invertible(const GraduatedOrder& order, const IdealMatrix& j) {
    int t = order.block_count();
    // Largest candidate K with J K inside the order, then test both-sided
    // equality; any two-sided inverse is contained in K.
    IdealMatrix k(t, std::vector<FracIdeal>(t, FracIdeal::unit(order.backend())));
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b) {
            FracIdeal acc = order.ideal(0, b).colon(j[0][a]);
            for (int i = 1; i < t; ++i) acc = acc.intersect(order.ideal(i, b).colon(j[i][a]));
            k[a][b] = acc;
        }
    return ideal_matrix_equal(ideal_matrix_product(j, k), order.ideals()) &&
           ideal_matrix_equal(ideal_matrix_product(k, j), order.ideals());
}

bool hereditary_obstruction(const GraduatedOrder& order) {
    return !ideal_matrix_invertible(order, jacobson_radical(order));
}

GraduatedOrder principalize(const GraduatedOrder& order) {
    int t = order.block_count();
    if (t == 1) return order;
    FracIdeal meet = order.ideal(0, 0);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) meet = meet.intersect(order.ideal(i, j));
    Monomial x{0, 0};
    if (order.backend() == Backend::DvrExp) x.a = (int)meet.dvr_exponent();
    else x = meet.generators()[0];
    FracIdeal principal = FracIdeal::principal(order.backend(), x);
    IdealMatrix mat(t, std::vector<FracIdeal>(t, FracIdeal::unit(order.backend())));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (i != j) mat[i][j] = principal;
    GraduatedOrder out(order.blocks(), std::move(mat), order.coefficient_dual());
    if (!ideal_matrix_contains(order.ideals(), out.ideals()))
        throw DomainError("internal error: principalization left the order");
    return out;
}

RingElem ring_det(const std::vector<std::vector<RingElem>>& a) {
    size_t n = a.size();
    std::vector<int> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = (int)i;
    RingElem det = RingElem::zero();
    do {
        int inversions = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        RingElem prod = RingElem::one();
        for (size_t i = 0; i < n; ++i) prod = prod * a[i][perm[i]];
        det = (inversions % 2 == 0) ? det + prod : det - prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

std::vector<RingElem> epac_witness(const GraduatedOrder& order,
                                   const std::vector<std::vector<RingElem>>& a) {
    int n = order.total_size();
    if ((int)a.size() != n) throw DomainError("witness matrix must match the order's total size");
    for (const auto& row : a)
        if ((int)row.size() != n) throw DomainError("witness matrix must be square");
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            int bi = order.blocks().block_of(k), bj = order.blocks().block_of(l);
            if (!a[k][l].lies_in(order.ideal(bi, bj))) {
                std::ostringstream os;
                os << "entry (" << k + 1 << "," << l + 1 << ") = " << a[k][l].str()
                   << " does not lie in the order";
                throw DomainError(os.str());
            }
        }
    RingElem det = ring_det(a);
    if (det.is_zero()) throw DomainError("witness matrix is singular");
    if (!det.lies_in(FracIdeal::unit(order.backend())))
        throw DomainError("determinant " + det.str() + " is not integral");
    std::vector<RingElem> witness(n, RingElem::one());
    witness[0] = det;
    return witness;
}

bool element_matrix_in_order(const GraduatedOrder& order, const ElementMatrix& x) {
    int n = order.total_size();
    if ((int)x.size() != n) throw DomainError("element matrix must match the order's total size");
    for (int k = 0; k < n; ++k) {
        if ((int)x[k].size() != n) throw DomainError("element matrix must be square");
        for (int l = 0; l < n; ++l) {
            if (!x[k][l]) continue;
            int bi = order.blocks().block_of(k), bj = order.blocks().block_of(l);
            if (!order.ideal(bi, bj).contains_monomial(*x[k][l])) return false;
        }
    }
    return true;
}

}  // namespace gradord

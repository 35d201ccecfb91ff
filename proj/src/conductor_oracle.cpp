#include "gradord/conductor_oracle.hpp"

#include <algorithm>
#include <optional>

#include "gradord/galois.hpp"

namespace gradord {

namespace {

using RationalVec = std::vector<Rational>;
using RationalMat = std::vector<std::vector<Rational>>;

// x * h in the group algebra, coefficients over the group basis.
RationalVec translate(const FiniteGroup& g, const RationalVec& x, int h) {
    RationalVec out(g.order(), Rational(0));
    for (int a = 0; a < g.order(); ++a)
        if (!x[a].is_zero()) out[g.mul(a, h)] += x[a];
    return out;
}

RationalVec convolve(const FiniteGroup& g, const RationalVec& x, const RationalVec& y) {
    RationalVec out(g.order(), Rational(0));
    for (int a = 0; a < g.order(); ++a) {
        if (x[a].is_zero()) continue;
        for (int b = 0; b < g.order(); ++b)
            if (!y[b].is_zero()) out[g.mul(a, b)] += x[a] * y[b];
    }
    return out;
}

RationalVec rational_coefficients(const GroupAlgebraElement& e) {
    RationalVec out(e.group().order(), Rational(0));
    for (int h = 0; h < e.group().order(); ++h) out[h] = e.coefficient(h).rational_value();
    return out;
}

// Solve M c = rhs over Q (any one solution); M given row-wise.
std::optional<RationalVec> solve_rational(RationalMat m, RationalVec rhs) {
    size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        std::swap(rhs[sel], rhs[r]);
        Rational inv = Rational(1) / m[r][c];
        for (size_t cc = c; cc < cols; ++cc) m[r][cc] *= inv;
        rhs[r] *= inv;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || m[rr][c].is_zero()) continue;
            Rational factor = m[rr][c];
            for (size_t cc = c; cc < cols; ++cc) m[rr][cc] -= factor * m[r][cc];
            rhs[rr] -= factor * rhs[r];
        }
        pivot_col.push_back((int)c);
        ++r;
    }
    for (size_t rr = r; rr < rows; ++rr)
        if (!rhs[rr].is_zero()) return std::nullopt;
    RationalVec sol(cols, Rational(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) sol[pivot_col[i]] = rhs[i];
    return sol;
}

// Bundled integral matrix models for the rational-valued characters of
// degree > 1. The trace is checked against the character afterwards.
std::optional<std::vector<RationalMat>> integral_representation(const FiniteGroup& g,
                                                                int degree) {
    std::vector<RationalMat> rep;
    if ((g.name() == "S3" && degree == 2) || (g.name() == "A4" && degree == 3)) {
        const auto& perms = g.permutation_model();
        if (perms.empty()) return std::nullopt;
        int deg = (int)perms[0].size();  // permutation degree, rep degree = deg - 1
        for (const auto& sigma : perms) {
            // Action on the sum-zero quotient with basis e_i - e_{deg-1}.
            RationalMat m(deg - 1, RationalVec(deg - 1, Rational(0)));
            for (int i = 0; i < deg - 1; ++i) {
                int img = sigma[i], last = sigma[deg - 1];
                if (img != deg - 1) m[img][i] += Rational(1);
                if (last != deg - 1) m[last][i] -= Rational(1);
            }
            rep.push_back(std::move(m));
        }
        return rep;
    }
    if (g.name() == "D4" && degree == 2) {
        RationalMat rot = {{Rational(0), Rational(-1)}, {Rational(1), Rational(0)}};
        RationalMat refl = {{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}};
        auto matmul = [](const RationalMat& x, const RationalMat& y) {
            RationalMat z(2, RationalVec(2, Rational(0)));
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k) z[i][j] += x[i][k] * y[k][j];
            return z;
        };
        for (int idx = 0; idx < 8; ++idx) {
            int a = idx % 4, b = idx / 4;  // element r^a s^b
            RationalMat m = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
            for (int i = 0; i < a; ++i) m = matmul(m, rot);
            if (b) m = matmul(m, refl);
            rep.push_back(std::move(m));
        }
        return rep;
    }
    return std::nullopt;
}

long long pow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, b);
    return r;
}

long long mod_inverse(long long a, long long q) {
    long long t = 0, newt = 1, r = q, newr = a % q;
    if (newr < 0) newr += q;
    while (newr != 0) {
        long long quot = r / newr;
        std::swap(t -= quot * newt, newt);
        std::swap(r -= quot * newr, newr);
    }
    if (r != 1) throw DomainError("not invertible mod q");
    return t < 0 ? t + q : t;
}

long long rational_mod(const Rational& x, long long q) {
    long long den = x.den() % q;
    if (gcd_ll(den, q) != 1) throw DomainError("denominator not invertible mod q");
    long long num = x.num() % q;
    if (num < 0) num += q;
    return (__int128)num * mod_inverse(den, q) % q;
}

// Generators of {t : sum_i t_i a_i = 0 mod q} starting from the identity
// columns, one linear condition at a time; q is a prime power.
struct KernelModQ {
    long long p, q;
    std::vector<std::vector<long long>> gens;  // columns

    KernelModQ(long long p_, long long q_, int n) : p(p_), q(q_) {
        gens.assign(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i) gens[i][i] = 1;
    }

    void add_condition(const std::vector<long long>& a) {
        if (q == 1) return;
        size_t n = a.size();
        std::vector<long long> u(gens.size(), 0);
        for (size_t j = 0; j < gens.size(); ++j) {
            __int128 s = 0;
            for (size_t i = 0; i < n; ++i) s += (__int128)a[i] * gens[j][i];
            u[j] = (long long)(s % q);
            if (u[j] < 0) u[j] += q;
        }
        int best = -1, best_v = 1 << 30;
        for (size_t j = 0; j < u.size(); ++j) {
            if (u[j] == 0) continue;
            int v = valuation_p(u[j], p);
            if (v < best_v) {
                best_v = v;
                best = (int)j;
            }
        }
        if (best < 0) return;  // condition already satisfied
        long long pv = pow_ll(p, best_v);
        long long unit = u[best] / pv;
        long long unit_inv = mod_inverse(unit, q);
        for (size_t j = 0; j < gens.size(); ++j) {
            if ((int)j == best || u[j] == 0) continue;
            long long c = (__int128)(u[j] / pv) * unit_inv % q;
            for (size_t i = 0; i < n; ++i) {
                long long x = (gens[j][i] - (__int128)c * gens[best][i]) % q;
                if (x < 0) x += q;
                gens[j][i] = x;
            }
        }
        long long scale = q / pv;  // p^(E - v)
        for (size_t i = 0; i < n; ++i)
            gens[best][i] = (__int128)gens[best][i] * scale % q;
    }
};

// v_p of the index of the column span (which contains q Z^dim) in Z^dim.
// Entries are kept in the symmetric range mod q throughout; this only adds
// multiples of the q e_i generators, so the spanned lattice is unchanged
// and the arithmetic cannot overflow.
long long index_valuation(std::vector<std::vector<long long>> cols, int dim, long long p,
                          long long q) {
    auto symmetric = [q](long long x) {
        long long r = x % q;
        if (2 * r > q) r -= q;
        if (2 * r < -q) r += q;
        return r;
    };
    for (int i = 0; i < dim; ++i) {
        std::vector<long long> e(dim, 0);
        e[i] = q;
        cols.push_back(std::move(e));
    }
    long long vp = 0;
    size_t col_start = 0;
    for (int row = 0; row < dim; ++row) {
        while (true) {
            int nonzero = -1, count = 0;
            for (size_t j = col_start; j < cols.size(); ++j)
                if (cols[j][row] != 0) {
                    ++count;
                    if (nonzero < 0 || std::llabs(cols[j][row]) < std::llabs(cols[nonzero][row]))
                        nonzero = (int)j;
                }
            if (count <= 1) {
                if (count == 1) {
                    std::swap(cols[col_start], cols[nonzero]);
                    long long piv = std::llabs(cols[col_start][row]);
                    int v = valuation_p(piv, p);
                    if (pow_ll(p, v) != piv)
                        throw DomainError("conductor index is not a p-power");
                    vp += v;
                    ++col_start;
                } else {
                    throw DomainError("conductor lattice is not full rank");
                }
                break;
            }
            for (size_t j = col_start; j < cols.size(); ++j) {
                if ((int)j == nonzero || cols[j][row] == 0) continue;
                long long f = cols[j][row] / cols[nonzero][row];
                for (int i = 0; i < dim; ++i)
                    cols[j][i] =
                        symmetric(checked_sub(cols[j][i], checked_mul(f, cols[nonzero][i])));
            }
        }
    }
    return vp;
}

struct ComponentBasis {
    OrbitConductor info;
    std::vector<RationalVec> vectors;  // columns in group coordinates
};

ComponentBasis component_basis(const CharacterTable& table, const std::vector<int>& orbit,
                               long long p) {
    const FiniteGroup& g = table.group();
    ComponentBasis out;
    out.info.rows = orbit;
    out.info.degree = table.row(orbit[0]).degree;
    GroupAlgebraElement eps = epsilon_idempotent(table, orbit);
    if (!eps.has_rational_coefficients())
        throw DomainError(
            "unsupported component: the orbit idempotent has irrational coefficients "
            "(they only become integral p-adically)");
    RationalVec eps_vec = rational_coefficients(eps);

    bool all_linear = true;
    for (int r : orbit) all_linear = all_linear && table.row(r).degree == 1;

    if (all_linear) {
        // The component is the cyclotomic field generated by the values.
        long long d = 1;
        int h0 = 0;
        for (int h = 0; h < g.order(); ++h) {
            long long ord = table.value_at_element(orbit[0], h).root_of_unity_order();
            if (ord == 0) throw DomainError("linear character with a non-root-of-unity value");
            if (ord > d) {
                d = ord;
                h0 = h;
            }
        }
        out.info.value_field = d;
        DecompositionGroup dec = decomposition_group(d, p);
        long long n_loc = (long long)dec.elements.size();
        if (n_loc != (long long)orbit.size())
            throw DomainError("orbit size differs from the local degree of the value field");
        FieldInvariants inv = abelian_field_invariants({d, p, {}});
        out.info.e = inv.e;
        out.info.f = inv.f;
        int hp = 0;
        for (long long i = 0; i < n_loc; ++i) {
            out.vectors.push_back(translate(g, eps_vec, hp));
            hp = g.mul(hp, h0);
        }
        return out;
    }

    if (orbit.size() != 1)
        throw DomainError("unsupported component: non-linear characters in a non-trivial orbit");
    const CharacterRow& row = table.row(orbit[0]);
    for (const auto& v : row.values)
        if (!v.is_rational())
            throw DomainError("unsupported component: irrational values of degree > 1");
    auto rep = integral_representation(g, row.degree);
    if (!rep)
        throw DomainError("unsupported component: no bundled integral model for " + g.name() +
                          " in degree " + std::to_string(row.degree));
    for (int h = 0; h < g.order(); ++h) {
        Rational tr(0);
        for (int i = 0; i < row.degree; ++i) tr += (*rep)[h][i][i];
        if (tr != table.value_at_element(orbit[0], h).rational_value())
            throw DomainError("bundled model trace does not match the character");
    }
    out.info.value_field = 1;
    out.info.e = 1;
    out.info.f = 1;
    // Matrix units pull back through the representation; the basis is
    // eps * (any rational preimage).
    int r = row.degree;
    RationalMat system(r * r, RationalVec(g.order(), Rational(0)));
    for (int h = 0; h < g.order(); ++h)
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) system[i * r + j][h] = (*rep)[h][i][j];
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            RationalVec rhs(r * r, Rational(0));
            rhs[i * r + j] = Rational(1);
            auto sol = solve_rational(system, rhs);
            if (!sol) throw DomainError("bundled model is not surjective onto the matrix algebra");
            out.vectors.push_back(convolve(g, eps_vec, *sol));
        }
    return out;
}

}  // namespace

long long jacobinski_component_valuation(const CharacterTable& table,
                                         const std::vector<int>& orbit, long long p) {
    const FiniteGroup& g = table.group();
    int degree = table.row(orbit[0]).degree;
    long long d = 1;
    if (degree == 1) {
        for (int h = 0; h < g.order(); ++h)
            d = std::max(d, table.value_at_element(orbit[0], h).root_of_unity_order());
    } else {
        for (const auto& v : table.row(orbit[0]).values)
            if (!v.is_rational()) throw DomainError("no formula model for this component");
    }
    FieldInvariants inv = abelian_field_invariants({d, p, {}});
    long long coeff = valuation_p(g.order(), p) - valuation_p(degree, p);
    return inv.e * coeff - inv.different_exponent;
}

ConductorOracleResult bruteforce_conductor(const CharacterTable& table, long long p,
                                           int precision) {
    const FiniteGroup& g = table.group();
    if (g.order() > 24) throw DomainError("conductor oracle is restricted to #H <= 24");
    if (p < 3 || !is_prime(p)) throw DomainError("p must be an odd prime");
    if (precision < 6) throw DomainError("precision must be at least 6");
    int a = valuation_p(g.order(), p);
    if (precision < 2 * a + 2)
        throw DomainError("precision too small for the p-part of the group order");

    auto orbits = p_adic_orbits(table, p);
    std::vector<ComponentBasis> components;
    int total_rank = 0;
    for (const auto& orbit : orbits) {
        components.push_back(component_basis(table, orbit, p));
        total_rank += (int)components.back().vectors.size();
    }
    if (total_rank != g.order())
        throw DomainError("component bases do not span the group algebra");

    int n = g.order();
    std::vector<RationalVec> basis;
    std::vector<std::pair<int, int>> block_range;  // [begin, end) per orbit
    for (const auto& comp : components) {
        int begin = (int)basis.size();
        for (const auto& v : comp.vectors) basis.push_back(v);
        block_range.push_back({begin, (int)basis.size()});
    }

    long long q = pow_ll(p, 2 * a);
    // Left conductor: x = sum t_i basis_i with x * basis_j integral, i.e.
    // sum_i t_i * q*(basis_i basis_j) = 0 mod q coordinatewise. The right
    // conductor must give the same lattice.
    KernelModQ left(p, q, n), right(p, q, n);
    for (int j = 0; j < n; ++j) {
        std::vector<RationalVec> lw(n), rw(n);
        for (int i = 0; i < n; ++i) {
            lw[i] = convolve(g, basis[i], basis[j]);
            rw[i] = convolve(g, basis[j], basis[i]);
        }
        for (int s = 0; s < n; ++s) {
            std::vector<long long> lrow(n), rrow(n);
            for (int i = 0; i < n; ++i) {
                lrow[i] = rational_mod(lw[i][s] * Rational(q), q);
                rrow[i] = rational_mod(rw[i][s] * Rational(q), q);
            }
            left.add_condition(lrow);
            right.add_condition(rrow);
        }
    }

    ConductorOracleResult result;
    result.p = p;
    result.precision = precision;
    for (size_t c = 0; c < components.size(); ++c) {
        auto [begin, end] = block_range[c];
        int dim = end - begin;
        auto slice = [&](const KernelModQ& k) {
            std::vector<std::vector<long long>> cols;
            for (const auto& gen : k.gens) {
                std::vector<long long> sub(gen.begin() + begin, gen.begin() + end);
                bool nonzero = false;
                for (long long x : sub) nonzero = nonzero || x != 0;
                if (nonzero) cols.push_back(std::move(sub));
            }
            return cols;
        };
        long long vp_left = index_valuation(slice(left), dim, p, q);
        long long vp_right = index_valuation(slice(right), dim, p, q);
        if (vp_left != vp_right)
            throw DomainError("left and right conductors disagree");
        OrbitConductor info = components[c].info;
        long long unit_size = info.f * (long long)info.degree * info.degree;
        if (vp_left % unit_size != 0)
            throw DomainError("conductor component is not a power of the radical");
        info.valuation = vp_left / unit_size;
        info.formula_valuation = jacobinski_component_valuation(table, info.rows, p);
        if (info.valuation >= precision - 1)
            throw DomainError("precision exhausted: conductor valuation too large");
        result.orbits.push_back(std::move(info));
    }
    return result;
}

}  // namespace gradord

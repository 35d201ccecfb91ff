#include "gradord/galois.hpp"

#include <algorithm>
#include <set>

namespace gradord {

std::vector<long long> subgroup_closure(long long modulus, std::vector<long long> generators) {
    std::set<long long> closure{1 % modulus};
    for (long long g : generators) {
        long long r = g % modulus;
        if (r < 0) r += modulus;
        if (gcd_ll(r, modulus) != 1)
            throw DomainError("subgroup generator not a unit mod " + std::to_string(modulus));
        closure.insert(r);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<long long> cur(closure.begin(), closure.end());
        for (long long a : cur)
            for (long long b : cur)
                if (closure.insert(a * b % modulus).second) grew = true;
    }
    return {closure.begin(), closure.end()};
}

namespace {

std::vector<long long> product_set(long long modulus, const std::vector<long long>& a,
                                   const std::vector<long long>& b) {
    std::set<long long> out;
    for (long long x : a)
        for (long long y : b) out.insert(x * y % modulus);
    return {out.begin(), out.end()};
}

}  // namespace

FieldInvariants abelian_field_invariants(const AbelianField& field) {
    DecompositionGroup d = decomposition_group(field.modulus, field.p);
    std::vector<long long> s = subgroup_closure(field.modulus, field.subgroup_generators);
    for (long long x : s)
        if (!d.contains(x))
            throw DomainError("fixing subgroup is not inside the decomposition group");

    long long dsize = (long long)d.elements.size();
    long long ssize = (long long)s.size();
    FieldInvariants inv;
    inv.degree = dsize / ssize;  // |Gal(L/Q_p)|
    if (dsize % ssize != 0) throw DomainError("subgroup size does not divide the group size");

    // Inertia filtration I_0 >= I_1 >= ... inside the decomposition group:
    // I_0 is everything congruent to 1 mod m, I_j additionally congruent to
    // 1 mod p^j. Image sizes in Gal(L/Q_p) drive the conductor-discriminant
    // count.
    int k = d.p_power_exponent;
    long long m = d.prime_to_p_part;
    auto filtration_level = [&](int j) {
        long long pj = 1;
        for (int i = 0; i < j; ++i) pj *= field.p;
        std::vector<long long> level;
        for (long long a : d.elements)
            if (a % m == 1 % m && a % pj == 1 % pj) level.push_back(a);
        return level;
    };
    auto image_size = [&](const std::vector<long long>& sub) {
        return (long long)product_set(field.modulus, sub, s).size() / ssize;
    };

    inv.e = image_size(filtration_level(0));
    inv.f = inv.degree / inv.e;
    long long disc = 0;
    for (int j = 1; j <= k; ++j) {
        long long bprev = image_size(filtration_level(j - 1));
        disc += inv.degree - inv.degree / bprev;
    }
    inv.discriminant_exponent = disc;
    if (disc % inv.f != 0) throw DomainError("discriminant exponent not divisible by f");
    inv.different_exponent = disc / inv.f;
    return inv;
}

long long different_exponent_abelian(const AbelianField& field) {
    return abelian_field_invariants(field).different_exponent;
}

long long full_layer_ramification(long long modulus, long long p) {
    long long pk = 1;
    while (modulus % p == 0) {
        modulus /= p;
        pk *= p;
    }
    return euler_phi(pk);
}

long long relative_different_full_layers(long long upper, long long lower, long long p) {
    if (lower < 1 || upper % lower != 0)
        throw DomainError("not a tower: lower layer must divide the upper layer");
    auto split = [&](long long n) {
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        return std::pair<long long, int>{n, k};
    };
    auto [mu, ku] = split(upper);
    auto [ml, kl] = split(lower);
    (void)mu;
    (void)ml;
    if (ku == kl) return 0;  // unramified step
    if (kl >= 1) {
        // The upper generator zeta_{p^ku} has minimal polynomial
        // x^{p^(ku-kl)} - zeta_{p^kl} * (unit) over the middle layer; the
        // derivative has valuation e(upper) * (ku - kl).
        return euler_phi([&] {
            long long q = 1;
            for (int i = 0; i < ku; ++i) q *= p;
            return q;
        }()) * (ku - kl);
    }
    // Fully wild step over an unramified base: same filtration as the
    // absolute p-power layer.
    long long q = 1;
    for (int i = 0; i < ku; ++i) q *= p;
    return different_exponent_abelian({q, p, {}});
}

bool tower_additivity_check(long long lower, long long middle, long long upper, long long p) {
    if (lower < 1 || middle % lower != 0 || upper % middle != 0)
        throw DomainError("not a tower: layers must divide upward");
    long long d_ul = relative_different_full_layers(upper, lower, p);
    long long d_um = relative_different_full_layers(upper, middle, p);
    long long d_ml = relative_different_full_layers(middle, lower, p);
    long long e_um = full_layer_ramification(upper, p) / full_layer_ramification(middle, p);
    return d_ul == e_um * d_ml + d_um;
}

long long cyclotomic_derivative_valuation(long long p, int k) {
    if (k < 1) throw DomainError("layer exponent must be >= 1");
    long long q = 1;
    for (int i = 0; i < k; ++i) q = checked_mul(q, p);
    const auto& phi = Cyclotomic::cyclotomic_polynomial((int)q);
    Cyclotomic y = Cyclotomic::zero((int)q);
    for (size_t i = 1; i < phi.size(); ++i)
        if (phi[i] != 0)
            y += Cyclotomic::zeta_power((int)q, (long long)i - 1) * Rational(checked_mul((long long)i, phi[i]));
    if (y.is_zero()) throw DomainError("zero derivative");
    Cyclotomic lambda = Cyclotomic::zeta_power((int)q, 1) - Cyclotomic::one((int)q);
    Cyclotomic lambda_inv = lambda.inverse();
    long long v = 0;
    while (true) {
        Cyclotomic z = y * lambda_inv;
        bool integral = true;
        for (const auto& c : z.coefficients())
            if (!c.is_integer()) {
                integral = false;
                break;
            }
        if (!integral) break;
        y = z;
        ++v;
        if (v > 4 * q) throw DomainError("derivative valuation diverged");
    }
    return v;
}

}  // namespace gradord

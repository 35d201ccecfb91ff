#include "gradord/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace gradord {

namespace {

// Exact division of integer polynomials, quotient known to be integral.
std::vector<long long> poly_div_exact(std::vector<long long> num, const std::vector<long long>& den) {
    std::vector<long long> q(num.size() - den.size() + 1, 0);
    for (int i = (int)q.size() - 1; i >= 0; --i) {
        long long lead = num[i + den.size() - 1];
        if (lead % den.back() != 0) throw DomainError("inexact polynomial division");
        long long c = lead / den.back();
        q[i] = c;
        if (c != 0)
            for (size_t j = 0; j < den.size(); ++j)
                num[i + j] = checked_sub(num[i + j], checked_mul(c, den[j]));
    }
    for (long long c : num)
        if (c != 0) throw DomainError("inexact polynomial division");
    return q;
}

std::vector<Rational> poly_mod_phi(std::vector<Rational> f, const std::vector<long long>& phi) {
    size_t deg = phi.size() - 1;  // phi is monic
    for (size_t i = f.size(); i-- > deg;) {
        Rational c = f[i];
        if (c.is_zero()) continue;
        f[i] = Rational(0);
        for (size_t j = 0; j < deg; ++j)
            f[i - deg + j] -= c * Rational(phi[j]);
    }
    f.resize(deg, Rational(0));
    return f;
}

}  // namespace

namespace {
// Shared caches; guarded so cyclotomic values can be used concurrently.
std::recursive_mutex cache_mutex;
}

const std::vector<long long>& Cyclotomic::cyclotomic_polynomial(int n) {
    static std::map<int, std::vector<long long>> cache;
    std::lock_guard<std::recursive_mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) throw DomainError("cyclotomic polynomial level must be >= 1");
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<long long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    return cache.emplace(n, std::move(num)).first->second;
}

const std::vector<long long>& Cyclotomic::zeta_power_reduced(int level, int k) {
    static std::map<int, std::vector<std::vector<long long>>> cache;
    std::lock_guard<std::recursive_mutex> lock(cache_mutex);
    auto& table = cache[level];
    if (table.empty()) {
        const auto& phi = cyclotomic_polynomial(level);
        int deg = (int)phi.size() - 1;
        table.resize(level);
        for (int m = 0; m < level; ++m) {
            std::vector<long long> v(deg, 0);
            if (m < deg) {
                v[m] = 1;
            } else {
                // x * previous, reduced mod Phi (monic with integer coefficients)
                const auto& prev = table[m - 1];
                std::vector<long long> w(deg + 1, 0);
                for (int i = 0; i < deg; ++i) w[i + 1] = prev[i];
                long long lead = w[deg];
                for (int i = 0; i < deg; ++i)
                    v[i] = checked_sub(w[i], checked_mul(lead, phi[i]));
            }
            table[m] = std::move(v);
        }
    }
    return table[k];
}

Cyclotomic Cyclotomic::zero(int level) {
    int deg = (int)cyclotomic_polynomial(level).size() - 1;
    return Cyclotomic(level, std::vector<Rational>(deg, Rational(0)));
}

Cyclotomic Cyclotomic::one(int level) { return from_rational(level, Rational(1)); }

Cyclotomic Cyclotomic::from_rational(int level, const Rational& r) {
    Cyclotomic c = zero(level);
    if (level == 1) {
        // Q[x]/(x-1): the residue of the constant r has coordinate r.
        c.coeff_[0] = r;
    } else {
        c.coeff_[0] = r;
    }
    return c;
}

Cyclotomic Cyclotomic::zeta_power(int level, long long power) {
    long long k = power % level;
    if (k < 0) k += level;
    Cyclotomic c = zero(level);
    const auto& red = zeta_power_reduced(level, (int)k);
    for (size_t i = 0; i < red.size(); ++i) c.coeff_[i] = Rational(red[i]);
    return c;
}

void Cyclotomic::check_same_level(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.level_ != b.level_)
        throw DomainError("cyclotomic level mismatch: " + std::to_string(a.level_) + " vs " +
                          std::to_string(b.level_));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeff_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeff_.size(); ++i)
        if (!coeff_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw DomainError("cyclotomic value is not rational");
    return coeff_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    check_same_level(*this, o);
    Cyclotomic r = *this;
    for (size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i] += o.coeff_[i];
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeff_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    check_same_level(*this, o);
    size_t deg = coeff_.size();
    std::vector<Rational> prod(2 * deg - 1, Rational(0));
    for (size_t i = 0; i < deg; ++i) {
        if (coeff_[i].is_zero()) continue;
        for (size_t j = 0; j < deg; ++j) {
            if (o.coeff_[j].is_zero()) continue;
            prod[i + j] += coeff_[i] * o.coeff_[j];
        }
    }
    return Cyclotomic(level_, poly_mod_phi(std::move(prod), cyclotomic_polynomial(level_)));
}

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
    Cyclotomic out = *this;
    for (auto& c : out.coeff_) c *= r;
    return out;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    return level_ == o.level_ && coeff_ == o.coeff_;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero cyclotomic number");
    // Extended Euclid in Q[x] against Phi_N (irreducible over Q).
    const auto& phi_i = cyclotomic_polynomial(level_);
    std::vector<Rational> r0(phi_i.begin(), phi_i.end());
    std::vector<Rational> r1(coeff_);
    while (!r1.empty() && r1.back().is_zero()) r1.pop_back();
    std::vector<Rational> s0 = {Rational(0)};
    std::vector<Rational> s1 = {Rational(1)};
    auto deg_of = [](const std::vector<Rational>& f) { return (int)f.size() - 1; };
    while (deg_of(r1) > 0 || !r1[0].is_zero()) {
        // divide r0 by r1
        std::vector<Rational> q(std::max(0, deg_of(r0) - deg_of(r1)) + 1, Rational(0));
        std::vector<Rational> rem = r0;
        for (int i = deg_of(rem) - deg_of(r1); i >= 0; --i) {
            if (rem[i + deg_of(r1)].is_zero()) continue;
            Rational c = rem[i + deg_of(r1)] / r1.back();
            q[i] = c;
            for (int j = 0; j <= deg_of(r1); ++j) rem[i + j] -= c * r1[j];
        }
        while (rem.size() > 1 && rem.back().is_zero()) rem.pop_back();
        // s_{k+1} = s_{k-1} - q s_k
        std::vector<Rational> s2(std::max(s0.size(), q.size() + s1.size() - 1), Rational(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        while (s2.size() > 1 && s2.back().is_zero()) s2.pop_back();
        r0 = r1;
        r1 = std::move(rem);
        s0 = s1;
        s1 = std::move(s2);
        if (deg_of(r1) == 0 && !r1[0].is_zero()) break;
        if (r1.size() == 1 && r1[0].is_zero())
            throw DomainError("cyclotomic inverse: gcd with Phi_N is not constant");
    }
    Rational unit = r1[0];
    std::vector<Rational> inv(coeff_.size(), Rational(0));
    for (size_t i = 0; i < s1.size() && i < inv.size(); ++i) inv[i] = s1[i] / unit;
    Cyclotomic out(level_, std::move(inv));
    return out;
}

Cyclotomic Cyclotomic::galois(long long a) const {
    long long am = a % level_;
    if (am < 0) am += level_;
    if (gcd_ll(am, level_) != 1)
        throw DomainError("galois action index not coprime to level");
    Cyclotomic out = zero(level_);
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i].is_zero()) continue;
        const auto& red = zeta_power_reduced(level_, (int)((am * i) % level_));
        for (size_t j = 0; j < red.size(); ++j)
            if (red[j] != 0) out.coeff_[j] += coeff_[i] * Rational(red[j]);
    }
    return out;
}

Cyclotomic Cyclotomic::conj() const { return level_ <= 2 ? *this : galois(level_ - 1); }

Cyclotomic Cyclotomic::embed(int new_level) const {
    if (new_level == level_) return *this;
    if (new_level % level_ != 0)
        throw DomainError("cyclotomic embedding requires level | new level");
    long long step = new_level / level_;
    Cyclotomic out = zero(new_level);
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i].is_zero()) continue;
        out += zeta_power(new_level, step * (long long)i) * coeff_[i];
    }
    return out;
}

long long Cyclotomic::root_of_unity_order() const {
    Cyclotomic x = *this;
    const Cyclotomic u = one(level_);
    for (long long k = 1; k <= 2LL * level_; ++k) {
        if (x == u) return k;
        x *= *this;
    }
    return 0;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    os << level_ << ":";
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (i) os << ",";
        os << coeff_[i].str();
    }
    return os.str();
}

Cyclotomic Cyclotomic::parse(const std::string& text) {
    size_t colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("cyclotomic literal needs 'level:coeffs': " + text);
    int level = 0;
    try {
        level = std::stoi(text.substr(0, colon));
    } catch (...) {
        throw ParseError("bad cyclotomic level in: " + text);
    }
    if (level < 1) throw ParseError("cyclotomic level must be >= 1: " + text);
    Cyclotomic out = zero(level);
    std::string rest = text.substr(colon + 1);
    size_t pos = 0, idx = 0;
    while (pos <= rest.size()) {
        size_t comma = rest.find(',', pos);
        std::string piece = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (idx >= out.coeff_.size()) throw ParseError("too many coefficients in: " + text);
        out.coeff_[idx++] = Rational::parse(piece);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (idx != out.coeff_.size())
        throw ParseError("expected " + std::to_string(out.coeff_.size()) + " coefficients in: " + text);
    return out;
}

}  // namespace gradord

#include "gradord/numbers.hpp"

#include <cstdlib>

namespace gradord {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd_ll(a, b), b);
}

Rational::Rational(long long n, long long d) : num_(n), den_(d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = checked_sub(0, num_);
        den_ = checked_sub(0, den_);
    }
    long long g = gcd_ll(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = checked_sub(0, num_);
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    long long g = gcd_ll(den_, o.den_);
    long long ld = den_ / g;
    long long rd = o.den_ / g;
    long long n = checked_add(checked_mul(num_, rd), checked_mul(o.num_, ld));
    long long d = checked_mul(checked_mul(ld, rd), g);
    return Rational(n, d);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    long long g1 = gcd_ll(num_, o.den_);
    long long g2 = gcd_ll(o.num_, den_);
    long long n = checked_mul(num_ / g1, o.num_ / g2);
    long long d = checked_mul(den_ / g2, o.den_ / g1);
    return Rational(n, d);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw DomainError("division by zero rational");
    return *this * Rational(o.den_, o.num_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    size_t slash = text.find('/');
    try {
        size_t used = 0;
        long long n = std::stoll(text.substr(0, slash), &used);
        if (slash == std::string::npos) {
            if (used != text.size()) throw ParseError("bad rational literal: " + text);
            return Rational(n);
        }
        std::string dtext = text.substr(slash + 1);
        long long d = std::stoll(dtext, &used);
        if (used != dtext.size()) throw ParseError("bad rational literal: " + text);
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + text);
    } catch (const std::out_of_range&) {
        throw ParseError("rational literal out of range: " + text);
    }
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long long power_mod(long long base, long long exp, long long mod) {
    if (mod <= 0) throw DomainError("power_mod with nonpositive modulus");
    long long r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = (__int128)r * base % mod;
        base = (__int128)base * base % mod;
        exp >>= 1;
    }
    return r;
}

long long multiplicative_order(long long a, long long mod) {
    a %= mod;
    if (a < 0) a += mod;
    if (gcd_ll(a, mod) != 1) throw DomainError("multiplicative order of a non-unit");
    long long x = a % mod, ord = 1;
    while (x != 1 % mod) {
        x = (__int128)x * a % mod;
        ++ord;
        if (ord > mod) throw DomainError("multiplicative order diverged");
    }
    return ord;
}

long long euler_phi(long long n) {
    long long result = n;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            while (n % d == 0) n /= d;
            result -= result / d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

int valuation_p(long long n, long long p) {
    if (n == 0) throw DomainError("p-adic valuation of zero");
    if (n < 0) n = -n;
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace gradord

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gradord {

// Domain-level failure (invalid order, non-invertible ideal, ...).
// The CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text / files. The CLI maps these to exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

long long checked_add(long long a, long long b);
long long checked_sub(long long a, long long b);
long long checked_mul(long long a, long long b);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

// All arithmetic is exact; overflow of the 64-bit backing store throws
// rather than wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    std::string str() const;
    static Rational parse(const std::string& text);

private:
    void normalize();
    long long num_;
    long long den_;  // > 0
};

bool is_prime(long long n);
long long power_mod(long long base, long long exp, long long mod);
long long multiplicative_order(long long a, long long mod);
long long euler_phi(long long n);
// p-adic valuation of a nonzero integer.
int valuation_p(long long n, long long p);

}  // namespace gradord

#pragma once

#include <vector>

#include "gradord/numbers.hpp"

namespace gradord {

// Element of Q(zeta_N), stored as a rational vector of length deg Phi_N
// representing a residue modulo the N-th cyclotomic polynomial. All
// arithmetic is exact.
class Cyclotomic {
public:
    Cyclotomic() : level_(1), coeff_(1, Rational(0)) {}

    static Cyclotomic zero(int level);
    static Cyclotomic one(int level);
    static Cyclotomic from_rational(int level, const Rational& r);
    // zeta_N^power, any integer power (reduced mod N).
    static Cyclotomic zeta_power(int level, long long power);

    int level() const { return level_; }
    int degree() const { return (int)coeff_.size(); }
    const std::vector<Rational>& coefficients() const { return coeff_; }
    const Rational& coefficient(int i) const { return coeff_[i]; }

    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational().
    Rational rational_value() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator*(const Rational& r) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Field inverse; throws on zero.
    Cyclotomic inverse() const;

    // Galois action zeta -> zeta^a; requires gcd(a, level) = 1.
    Cyclotomic galois(long long a) const;
    // Complex conjugation = galois(-1).
    Cyclotomic conj() const;

    // Image in Q(zeta_M) for level | M.
    Cyclotomic embed(int new_level) const;

    // Multiplicative order if this is a root of unity, 0 otherwise.
    long long root_of_unity_order() const;

    // "level:c0,c1,..." with exact rational coefficients.
    std::string str() const;
    static Cyclotomic parse(const std::string& text);

    // Integer coefficients of Phi_n (cached).
    static const std::vector<long long>& cyclotomic_polynomial(int n);

private:
    Cyclotomic(int level, std::vector<Rational> coeff)
        : level_(level), coeff_(std::move(coeff)) {}
    static void check_same_level(const Cyclotomic& a, const Cyclotomic& b);
    // Reduced coefficient vector of x^k mod Phi_N for 0 <= k < N (cached).
    static const std::vector<long long>& zeta_power_reduced(int level, int k);

    int level_;
    std::vector<Rational> coeff_;
};

}  // namespace gradord

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gradord/numbers.hpp"

namespace gradord {

enum class Backend { DvrExp, Monomial2D };

std::string backend_name(Backend b);
Backend parse_backend(const std::string& name);

// Exponent pair (a, b) standing for the monomial p^a T^b. Negative
// components are allowed; a fractional monomial ideal is a monomial shift
// of an integral one with the shift folded into the generators.
struct Monomial {
    int a = 0;
    int b = 0;
    bool divides(const Monomial& o) const { return a <= o.a && b <= o.b; }
    Monomial operator+(const Monomial& o) const { return {a + o.a, b + o.b}; }
    Monomial operator-(const Monomial& o) const { return {a - o.a, b - o.b}; }
    bool operator==(const Monomial& o) const { return a == o.a && b == o.b; }
    bool operator<(const Monomial& o) const { return a != o.a ? a < o.a : b < o.b; }
};

// Nonzero two-sided fractional ideal of the coefficient maximal order, in
// one of two backends:
//   DvrExp      m^k for an integer k (one-dimensional base)
//   Monomial2D  fractional monomial staircase ideal of O_K[[T]], stored as
//               the reduced generator antichain (unique canonical form)
class FracIdeal {
public:
    static FracIdeal dvr(long long exponent);
    static FracIdeal monomial(std::vector<Monomial> generators);
    static FracIdeal unit(Backend b);
    static FracIdeal maximal_ideal(Backend b);  // m^1 resp. (p, T)
    static FracIdeal principal(Backend b, const Monomial& g);

    Backend backend() const { return backend_; }
    long long dvr_exponent() const;
    const std::vector<Monomial>& generators() const;

    FracIdeal product(const FracIdeal& other) const;
    FracIdeal sum(const FracIdeal& other) const;
    FracIdeal intersect(const FracIdeal& other) const;
    // Ideal quotient {x : x * other <= this}.
    FracIdeal colon(const FracIdeal& other) const;
    FracIdeal pow(int k) const;  // k >= 0, or any k if invertible

    bool contains(const FracIdeal& other) const;
    bool contains_monomial(const Monomial& m) const;
    bool is_unit_ideal() const;
    bool is_integral() const { return unit(backend_).contains(*this); }
    bool is_proper() const { return !is_unit_ideal(); }

    bool is_invertible() const;
    FracIdeal inverse() const;
    // Shift by a monomial (multiplication by the principal ideal it generates).
    FracIdeal shifted(const Monomial& m) const;

    bool operator==(const FracIdeal& o) const;
    bool operator!=(const FracIdeal& o) const { return !(*this == o); }

    // Canonical text form: "m^k" or "p^a*T^b, p^c*T^d, ...". Round-trips
    // bit-exactly through parse().
    std::string str() const;
    static FracIdeal parse(const std::string& text);

private:
    FracIdeal(Backend b) : backend_(b) {}
    void normalize();
    static void check_same_backend(const FracIdeal& x, const FracIdeal& y);

    Backend backend_;
    long long exp_ = 0;            // DvrExp payload
    std::vector<Monomial> gens_;   // Monomial2D payload, reduced antichain
};

}  // namespace gradord

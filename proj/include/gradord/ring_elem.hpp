#pragma once

#include <map>
#include <sstream>
#include <vector>

#include "gradord/frac_ideal.hpp"

namespace gradord {

// Exact element of the commutative coefficient model: an integer Laurent
// polynomial in p and T. Enough structure to form determinants and test
// membership in staircase ideals.
class RingElem {
public:
    RingElem() = default;
    static RingElem zero() { return RingElem(); }
    static RingElem term(long long coeff, Monomial m) {
        RingElem e;
        if (coeff != 0) e.terms_[m] = coeff;
        return e;
    }
    static RingElem one() { return term(1, {0, 0}); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, long long>& terms() const { return terms_; }

    RingElem operator+(const RingElem& o) const {
        RingElem r = *this;
        for (const auto& [m, c] : o.terms_) {
            long long s = checked_add(r.terms_.count(m) ? r.terms_[m] : 0, c);
            if (s == 0) r.terms_.erase(m);
            else r.terms_[m] = s;
        }
        return r;
    }
    RingElem operator-() const {
        RingElem r = *this;
        for (auto& [m, c] : r.terms_) c = checked_sub(0, c);
        return r;
    }
    RingElem operator-(const RingElem& o) const { return *this + (-o); }
    RingElem operator*(const RingElem& o) const {
        RingElem r;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) {
                Monomial m = m1 + m2;
                long long s = checked_add(r.terms_.count(m) ? r.terms_[m] : 0, checked_mul(c1, c2));
                if (s == 0) r.terms_.erase(m);
                else r.terms_[m] = s;
            }
        return r;
    }

    bool operator==(const RingElem& o) const { return terms_ == o.terms_; }

    // Membership in a staircase (or DVR-exponent) ideal: every monomial of
    // the support must lie in it. Zero lies in every ideal.
    bool lies_in(const FracIdeal& ideal) const {
        for (const auto& [m, c] : terms_)
            if (!ideal.contains_monomial(m)) return false;
        return true;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c;
            if (m.a != 0) os << "*p^" << m.a;
            if (m.b != 0) os << "*T^" << m.b;
        }
        return os.str();
    }

private:
    std::map<Monomial, long long> terms_;
};

// Determinant by permutation expansion; exact, intended for small matrices.
RingElem ring_det(const std::vector<std::vector<RingElem>>& a);

}  // namespace gradord

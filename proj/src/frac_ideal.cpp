#include "gradord/frac_ideal.hpp"

#include <algorithm>
#include <sstream>

namespace gradord {

std::string backend_name(Backend b) {
    return b == Backend::DvrExp ? "dvr" : "monomial";
}

Backend parse_backend(const std::string& name) {
    if (name == "dvr") return Backend::DvrExp;
    if (name == "monomial") return Backend::Monomial2D;
    throw ParseError("unknown backend: " + name);
}

FracIdeal FracIdeal::dvr(long long exponent) {
    FracIdeal f(Backend::DvrExp);
    f.exp_ = exponent;
    return f;
}

FracIdeal FracIdeal::monomial(std::vector<Monomial> generators) {
    if (generators.empty()) throw DomainError("monomial ideal needs at least one generator");
    FracIdeal f(Backend::Monomial2D);
    f.gens_ = std::move(generators);
    f.normalize();
    return f;
}

FracIdeal FracIdeal::unit(Backend b) {
    return b == Backend::DvrExp ? dvr(0) : monomial({{0, 0}});
}

FracIdeal FracIdeal::maximal_ideal(Backend b) {
    return b == Backend::DvrExp ? dvr(1) : monomial({{1, 0}, {0, 1}});
}

FracIdeal FracIdeal::principal(Backend b, const Monomial& g) {
    if (b == Backend::DvrExp) {
        if (g.b != 0) throw DomainError("DVR backend has no T direction");
        return dvr(g.a);
    }
    return monomial({g});
}

void FracIdeal::normalize() {
    std::sort(gens_.begin(), gens_.end());
    std::vector<Monomial> reduced;
    for (const auto& g : gens_) {
        bool dominated = false;
        for (const auto& h : reduced)
            if (h.divides(g)) {
                dominated = true;
                break;
            }
        if (!dominated) reduced.push_back(g);
    }
    // After lexicographic sort a surviving generator can only be dominated
    // by an earlier one, so a single pass suffices; the result is the
    // unique reduced antichain, sorted by increasing p-exponent.
    gens_ = std::move(reduced);
}

void FracIdeal::check_same_backend(const FracIdeal& x, const FracIdeal& y) {
    if (x.backend_ != y.backend_)
        throw DomainError("ideal backend mismatch: " + backend_name(x.backend_) + " vs " +
                          backend_name(y.backend_));
}

long long FracIdeal::dvr_exponent() const {
    if (backend_ != Backend::DvrExp) throw DomainError("not a DVR-backend ideal");
    return exp_;
}

const std::vector<Monomial>& FracIdeal::generators() const {
    if (backend_ != Backend::Monomial2D) throw DomainError("not a monomial-backend ideal");
    return gens_;
}

FracIdeal FracIdeal::product(const FracIdeal& other) const {
    check_same_backend(*this, other);
    if (backend_ == Backend::DvrExp) return dvr(checked_add(exp_, other.exp_));
    std::vector<Monomial> prod;
    prod.reserve(gens_.size() * other.gens_.size());
    for (const auto& g : gens_)
        for (const auto& h : other.gens_) prod.push_back(g + h);
    return monomial(std::move(prod));
}

FracIdeal FracIdeal::sum(const FracIdeal& other) const {
    check_same_backend(*this, other);
    if (backend_ == Backend::DvrExp) return dvr(std::min(exp_, other.exp_));
    std::vector<Monomial> all = gens_;
    all.insert(all.end(), other.gens_.begin(), other.gens_.end());
    return monomial(std::move(all));
}

FracIdeal FracIdeal::intersect(const FracIdeal& other) const {
    check_same_backend(*this, other);
    if (backend_ == Backend::DvrExp) return dvr(std::max(exp_, other.exp_));
    // Staircases intersect pointwise: generators are pairwise lcms.
    std::vector<Monomial> meet;
    meet.reserve(gens_.size() * other.gens_.size());
    for (const auto& g : gens_)
        for (const auto& h : other.gens_)
            meet.push_back({std::max(g.a, h.a), std::max(g.b, h.b)});
    return monomial(std::move(meet));
}

FracIdeal FracIdeal::colon(const FracIdeal& other) const {
    check_same_backend(*this, other);
    if (backend_ == Backend::DvrExp) return dvr(checked_sub(exp_, other.exp_));
    // (I : J) = intersection over generators x of J of I * (x)^{-1}
    FracIdeal result = shifted({-other.gens_[0].a, -other.gens_[0].b});
    for (size_t i = 1; i < other.gens_.size(); ++i)
        result = result.intersect(shifted({-other.gens_[i].a, -other.gens_[i].b}));
    return result;
}

FracIdeal FracIdeal::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    FracIdeal r = unit(backend_);
    for (int i = 0; i < k; ++i) r = r.product(*this);
    return r;
}

bool FracIdeal::contains_monomial(const Monomial& m) const {
    if (backend_ == Backend::DvrExp) {
        if (m.b != 0) throw DomainError("DVR backend has no T direction");
        return m.a >= exp_;
    }
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

bool FracIdeal::contains(const FracIdeal& other) const {
    check_same_backend(*this, other);
    if (backend_ == Backend::DvrExp) return exp_ <= other.exp_;
    for (const auto& g : other.gens_)
        if (!contains_monomial(g)) return false;
    return true;
}

bool FracIdeal::is_unit_ideal() const { return *this == unit(backend_); }

bool FracIdeal::is_invertible() const {
    // Invertible = principal: for staircases that means a single generator.
    return backend_ == Backend::DvrExp || gens_.size() == 1;
}

FracIdeal FracIdeal::inverse() const {
    if (backend_ == Backend::DvrExp) return dvr(-exp_);
    if (gens_.size() != 1)
        throw DomainError("ideal " + str() + " is not invertible (non-principal)");
    return monomial({{-gens_[0].a, -gens_[0].b}});
}

FracIdeal FracIdeal::shifted(const Monomial& m) const {
    if (backend_ == Backend::DvrExp) {
        if (m.b != 0) throw DomainError("DVR backend has no T direction");
        return dvr(exp_ + m.a);
    }
    std::vector<Monomial> gens = gens_;
    for (auto& g : gens) g = g + m;
    return monomial(std::move(gens));
}

bool FracIdeal::operator==(const FracIdeal& o) const {
    if (backend_ != o.backend_) return false;
    if (backend_ == Backend::DvrExp) return exp_ == o.exp_;
    return gens_ == o.gens_;
}

std::string FracIdeal::str() const {
    std::ostringstream os;
    if (backend_ == Backend::DvrExp) {
        os << "m^" << exp_;
    } else {
        for (size_t i = 0; i < gens_.size(); ++i) {
            if (i) os << ", ";
            os << "p^" << gens_[i].a << "*T^" << gens_[i].b;
        }
    }
    return os.str();
}

namespace {

long long parse_exponent(const std::string& text, size_t& pos, const std::string& ctx) {
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && isdigit((unsigned char)text[pos])) ++pos;
    if (pos == start) throw ParseError("expected integer exponent in ideal: " + ctx);
    return std::stoll(text.substr(start, pos - start));
}

void skip_ws(const std::string& text, size_t& pos) {
    while (pos < text.size() && isspace((unsigned char)text[pos])) ++pos;
}

}  // namespace

FracIdeal FracIdeal::parse(const std::string& text) {
    size_t pos = 0;
    skip_ws(text, pos);
    if (pos >= text.size()) throw ParseError("empty ideal literal");
    if (text[pos] == 'm') {
        ++pos;
        if (pos >= text.size() || text[pos] != '^') throw ParseError("expected 'm^k': " + text);
        ++pos;
        long long k = parse_exponent(text, pos, text);
        skip_ws(text, pos);
        if (pos != text.size()) throw ParseError("trailing characters in ideal: " + text);
        return dvr(k);
    }
    std::vector<Monomial> gens;
    while (true) {
        skip_ws(text, pos);
        Monomial g{0, 0};
        bool saw_term = false;
        if (pos < text.size() && text[pos] == '1') {  // the unit monomial
            ++pos;
            saw_term = true;
        }
        while (pos < text.size() && (text[pos] == 'p' || text[pos] == 'T')) {
            char var = text[pos++];
            long long e = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                e = parse_exponent(text, pos, text);
            }
            if (var == 'p') g.a += (int)e;
            else g.b += (int)e;
            saw_term = true;
            if (pos < text.size() && text[pos] == '*') ++pos;
        }
        if (!saw_term) throw ParseError("expected monomial generator in ideal: " + text);
        gens.push_back(g);
        skip_ws(text, pos);
        if (pos >= text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ',' between generators: " + text);
        ++pos;
    }
    return monomial(std::move(gens));
}

}  // namespace gradord

#include "gradord/group_theory.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace gradord {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), table_(std::move(table)) {
    validate();
    compute_classes();
    finish_setup();
}

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table,
                         std::vector<std::vector<int>> classes)
    : name_(std::move(name)), table_(std::move(table)), classes_(std::move(classes)) {
    validate();
    // Trust but verify the supplied classes: they must partition the group
    // into genuine conjugacy classes.
    std::vector<std::vector<int>> supplied = std::move(classes_);
    classes_.clear();
    compute_classes();
    auto canon = [](std::vector<std::vector<int>> cls) {
        for (auto& c : cls) std::sort(c.begin(), c.end());
        std::sort(cls.begin(), cls.end());
        return cls;
    };
    if (canon(classes_) != canon(supplied))
        throw DomainError("supplied conjugacy classes do not match the multiplication table");
    classes_ = std::move(supplied);
    finish_setup();
}

void FiniteGroup::validate() {
    int n = (int)table_.size();
    if (n == 0) throw DomainError("empty group");
    for (const auto& row : table_) {
        if ((int)row.size() != n) throw DomainError("multiplication table is not square");
        for (int x : row)
            if (x < 0 || x >= n) throw DomainError("multiplication table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (table_[0][a] != a || table_[a][0] != a)
            throw DomainError("element 0 is not the identity");
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table_[a][b] == 0 && table_[b][a] == 0) {
                inv_[a] = b;
                break;
            }
        if (inv_[a] < 0) throw DomainError("element without inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw DomainError("multiplication table is not associative");
}

void FiniteGroup::compute_classes() {
    int n = (int)table_.size();
    std::vector<bool> seen(n, false);
    for (int a = 0; a < n; ++a) {
        if (seen[a]) continue;
        std::set<int> cls;
        for (int g = 0; g < n; ++g) cls.insert(table_[table_[g][a]][inv_[g]]);
        std::vector<int> v(cls.begin(), cls.end());
        for (int x : v) seen[x] = true;
        classes_.push_back(std::move(v));
    }
}

void FiniteGroup::finish_setup() {
    int n = (int)table_.size();
    class_of_.assign(n, -1);
    for (size_t c = 0; c < classes_.size(); ++c)
        for (int x : classes_[c]) class_of_[x] = (int)c;
    for (int x : class_of_)
        if (x < 0) throw DomainError("classes do not cover the group");
    exponent_ = 1;
    for (int a = 0; a < n; ++a) exponent_ = (int)lcm_ll(exponent_, element_order(a));
}

int FiniteGroup::element_order(int a) const {
    int x = a, ord = 1;
    while (x != 0) {
        x = table_[x][a];
        ++ord;
    }
    return ord;
}

int FiniteGroup::power(int a, long long k) const {
    int ord = element_order(a);
    long long r = k % ord;
    if (r < 0) r += ord;
    int x = 0;
    for (long long i = 0; i < r; ++i) x = table_[x][a];
    return x;
}

bool FiniteGroup::is_automorphism(const std::vector<int>& images) const {
    int n = order();
    if ((int)images.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (int x : images) {
        if (x < 0 || x >= n || hit[x]) return false;
        hit[x] = true;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (images[table_[a][b]] != table_[images[a]][images[b]]) return false;
    return true;
}

std::vector<int> FiniteGroup::power_map(long long k) const {
    std::vector<int> images(order());
    for (int a = 0; a < order(); ++a) images[a] = power(a, k);
    return images;
}

int FiniteGroup::automorphism_order(const std::vector<int>& images) const {
    int n = order();
    std::vector<int> cur(n);
    for (int i = 0; i < n; ++i) cur[i] = i;
    for (int ord = 1; ord <= n * n; ++ord) {
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) next[i] = images[cur[i]];
        cur = next;
        bool ident = true;
        for (int i = 0; i < n && ident; ++i) ident = cur[i] == i;
        if (ident) return ord;
    }
    throw DomainError("automorphism order diverged");
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw DomainError("cyclic group order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    std::vector<std::vector<int>> classes;
    for (int a = 0; a < n; ++a) classes.push_back({a});
    return FiniteGroup("C" + std::to_string(n), std::move(t), std::move(classes));
}

namespace {

std::vector<std::vector<int>> permutation_table(const std::vector<std::vector<int>>& perms) {
    int n = (int)perms.size();
    int deg = (int)perms[0].size();
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[perms[i]] = i;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> comp(deg);
            for (int x = 0; x < deg; ++x) comp[x] = perms[a][perms[b][x]];
            auto it = index.find(comp);
            if (it == index.end()) throw DomainError("permutation set is not closed");
            t[a][b] = it->second;
        }
    return t;
}

}  // namespace

FiniteGroup FiniteGroup::symmetric3() {
    // e, (12), (13), (23), (123), (132)
    std::vector<std::vector<int>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    auto t = permutation_table(perms);
    std::vector<std::vector<int>> classes = {{0}, {1, 2, 3}, {4, 5}};
    FiniteGroup g("S3", std::move(t), std::move(classes));
    g.perm_model_ = std::move(perms);
    return g;
}

FiniteGroup FiniteGroup::dihedral4() {
    // Elements r^a s^b with r^4 = s^2 = 1, s r s = r^{-1}; index = a + 4b.
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    auto idx = [](int a, int b) { return ((a % 4) + 4) % 4 + 4 * (b % 2); };
    for (int a1 = 0; a1 < 4; ++a1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int a2 = 0; a2 < 4; ++a2)
                for (int b2 = 0; b2 < 2; ++b2)
                    t[idx(a1, b1)][idx(a2, b2)] = idx(a1 + (b1 ? -a2 : a2), b1 + b2);
    std::vector<std::vector<int>> classes = {{0}, {2}, {1, 3}, {4, 6}, {5, 7}};
    return FiniteGroup("D4", std::move(t), std::move(classes));
}

FiniteGroup FiniteGroup::quaternion8() {
    // 0..7 = 1, -1, i, -i, j, -j, k, -k
    auto enc = [](int unit, int sign) { return 2 * unit + (sign < 0 ? 1 : 0); };
    // quaternion unit products: unit index 0..3 = 1, i, j, k
    static const int umul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int usign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int u1 = 0; u1 < 4; ++u1)
        for (int s1 : {1, -1})
            for (int u2 = 0; u2 < 4; ++u2)
                for (int s2 : {1, -1})
                    t[enc(u1, s1)][enc(u2, s2)] = enc(umul[u1][u2], s1 * s2 * usign[u1][u2]);
    std::vector<std::vector<int>> classes = {{0}, {1}, {2, 3}, {4, 5}, {6, 7}};
    return FiniteGroup("Q8", std::move(t), std::move(classes));
}

FiniteGroup FiniteGroup::alternating4() {
    std::vector<std::vector<int>> perms;
    std::vector<int> base = {0, 1, 2, 3};
    std::vector<int> p = base;
    std::sort(p.begin(), p.end());
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) ++inversions;
        if (inversions % 2 == 0) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // Identity first; then group elements by cycle type for readability.
    std::stable_sort(perms.begin(), perms.end(), [&](const auto& x, const auto& y) {
        auto fixed = [](const std::vector<int>& q) {
            int f = 0;
            for (int i = 0; i < 4; ++i)
                if (q[i] == i) ++f;
            return f;
        };
        return fixed(x) > fixed(y);
    });
    auto t = permutation_table(perms);
    FiniteGroup probe("A4-probe", t);
    // Classes: identity, double transpositions, and the two classes of
    // 3-cycles; recover a canonical order from the computed classes.
    auto computed = probe.classes();
    std::vector<std::vector<int>> ordered(4);
    std::vector<std::vector<int>> three_cycles;
    for (auto& c : computed) {
        if (c.size() == 1) ordered[0] = c;
        else if (c.size() == 3) ordered[1] = c;
        else three_cycles.push_back(c);
    }
    std::sort(three_cycles.begin(), three_cycles.end());
    ordered[2] = three_cycles[0];
    ordered[3] = three_cycles[1];
    FiniteGroup g("A4", std::move(t), std::move(ordered));
    g.perm_model_ = std::move(perms);
    return g;
}

}  // namespace gradord

#pragma once

#include <string>
#include <vector>

#include "gradord/numbers.hpp"

namespace gradord {

// Finite group given by its multiplication table. Element 0 is the
// identity. Conjugacy classes are part of the value; bundled groups fix
// their class order explicitly so character rows stay aligned.
class FiniteGroup {
public:
    FiniteGroup(std::string name, std::vector<std::vector<int>> table);
    FiniteGroup(std::string name, std::vector<std::vector<int>> table,
                std::vector<std::vector<int>> classes);

    const std::string& name() const { return name_; }
    int order() const { return (int)table_.size(); }
    int mul(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const { return inv_[a]; }
    int element_order(int a) const;
    int exponent() const { return exponent_; }
    const std::vector<std::vector<int>>& classes() const { return classes_; }
    int class_count() const { return (int)classes_.size(); }
    int class_of(int a) const { return class_of_[a]; }
    const std::vector<std::vector<int>>& table() const { return table_; }

    int power(int a, long long k) const;

    // Checks a map H -> H given by images: bijective and multiplicative.
    bool is_automorphism(const std::vector<int>& images) const;
    // The power map x -> x^k as an image vector.
    std::vector<int> power_map(long long k) const;
    // Order of an automorphism under composition.
    int automorphism_order(const std::vector<int>& images) const;

    static FiniteGroup cyclic(int n);
    static FiniteGroup symmetric3();
    static FiniteGroup dihedral4();
    static FiniteGroup quaternion8();
    static FiniteGroup alternating4();

    // Permutation realization per element where the builder provides one
    // (S3 and A4); empty otherwise.
    const std::vector<std::vector<int>>& permutation_model() const { return perm_model_; }

private:
    void validate();
    void compute_classes();
    void finish_setup();

    std::string name_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> perm_model_;
    int exponent_ = 1;
};

}  // namespace gradord

#pragma once

#include "svol/qnum.hpp"

#include <string>
#include <vector>

namespace svol {

enum class Family { A, B, C, D };

char family_letter(Family f);
// Parses "A".."D" (case-insensitive); throws InvalidConfig otherwise.
Family parse_family(const std::string& s);

// A subset of the simple roots {1..n}, stored as a bitmask (bit j-1 for index j).
struct TypeSubset {
    int n = 0;
    unsigned mask = 0;

    bool contains(int j) const { return (mask >> (j - 1)) & 1u; }
    int size() const { return __builtin_popcount(mask); }
    // Number of simple roots outside I.
    int t() const { return n - size(); }
    // The indices l_1 < ... < l_t outside I.
    std::vector<int> ell() const;
    std::string to_string() const;
};

// Split classical root system with data in the simple-root basis.
class ClassicalRootSystem {
public:
    // Rank bounds: A n>=1, B n>=3, C n>=2, D n>=4 (RankOutOfRange otherwise).
    static ClassicalRootSystem build(Family family, int n);

    Family family() const { return family_; }
    int rank() const { return n_; }
    std::string name() const;
    // Positive roots as coefficient vectors over a_1..a_n.
    const std::vector<std::vector<int>>& positive_roots() const { return roots_; }
    // Coefficients of the highest root a_0.
    const std::vector<int>& h() const { return h_; }
    // Coefficients of 2 rho = sum of positive roots.
    const std::vector<int>& two_rho() const { return two_rho_; }
    const std::vector<int>& degrees() const { return degrees_; }
    // Indices j with h_j = 1.
    std::vector<int> weight_one_indices() const;
    // Order of the Weyl group, the product of the degrees.
    Integer weyl_order() const;

    std::string to_json() const;

private:
    Family family_ = Family::A;
    int n_ = 0;
    std::vector<std::vector<int>> roots_;
    std::vector<int> h_;
    std::vector<int> two_rho_;
    std::vector<int> degrees_;
};

// Product of [d_i](q) over the degrees.
QNumber poincare(const ClassicalRootSystem& sys);

// Poincare polynomial of the root subsystem spanned by I, from the heights of
// its positive roots (the exponents are the dual partition of the height counts).
QNumber poincare_subsystem(const ClassicalRootSystem& sys, const TypeSubset& I);
// Positive roots of the subsystem spanned by I.
int subsystem_root_count(const ClassicalRootSystem& sys, const TypeSubset& I);

struct ParabolicPoincare {
    QNumber poly;
    int degree = 0;
};
// P_Phi / P_{Phi_I} by exact division (NonDivisible if a remainder appears).
ParabolicPoincare poincare_parabolic(const ClassicalRootSystem& sys, const TypeSubset& I);
// Product-formula route through q-factorials and double factorials.
QNumber poincare_parabolic_closed(const ClassicalRootSystem& sys, const TypeSubset& I);

// [m]! and [2m]!! = [2][4]...[2m].
QNumber q_factorial(long m);
QNumber q_double_factorial(long m2);

}  // namespace svol

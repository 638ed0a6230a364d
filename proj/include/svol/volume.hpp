#pragma once

#include "svol/apartment.hpp"
#include "svol/multisum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace svol {

// All vertices, or special vertices only.
enum class Variant { All, Special };
// Which sequence an asymptotic profile describes.
enum class Quantity { SSA, SV };

std::string variant_name(Variant v);

// Poincare data of every type I (indexed by bitmask), computed once per system.
struct TypeWeights {
    std::vector<QNumber> poly;  // P_{Phi;I}
    std::vector<int> degree;    // deg P_{Phi;I}
    static TypeWeights of(const ClassicalRootSystem& sys);
};

// Exact values by enumerating the sphere and summing P_I / q^{deg} q^{index exponent}.
QNumber ssa_exact(const ClassicalRootSystem& sys, long r, Variant v = Variant::All);
QNumber sv_exact(const ClassicalRootSystem& sys, long r, Variant v = Variant::All);
// ssa_exact for r = 0..rmax in one pass.
std::vector<QNumber> ssa_exact_range(const ClassicalRootSystem& sys, long rmax, Variant v = Variant::All);

// Two independent assemblies of the closed form.
//  Uniform: every coset Lambda_0 - 1/2 omega_K of every type through the balanced
//    solver with a parity table whose non-vertex classes carry weight zero.
//  Paper: A and C through the balanced and parity solvers; B and D as the full
//    coset sums minus the excluded jump patterns, each rewritten as a shifted
//    special sum through the weighted solver.  Special vertices use the weighted
//    solver directly.
enum class Route { Uniform, Paper };
SuperQExpPoly ssa_closed_form(const ClassicalRootSystem& sys, Variant v = Variant::All,
                              Route route = Route::Uniform);

// Smallest radius from which the closed form agrees with the exact values,
// checked over `window` consecutive radii.
struct Reconciliation {
    long r0 = -1;
    long window = 0;
    bool ok = false;
    // first disagreement at or after r0 (only when !ok)
    long bad_r = -1;
    std::string expected;
    std::string got;
};
Reconciliation reconcile_ssa(const ClassicalRootSystem& sys, Variant v, const SuperQExpPoly& f, long window = 15);
Reconciliation reconcile_sv(const ClassicalRootSystem& sys, Variant v, const SuperQExpPoly& f, long window = 15);

// sv_exact(r0 - 1) + sum_{z=r0}^{r} F(z) as a closed form, valid for r >= r0 - 1
// where F = ssa_closed_form and r0 its threshold (1 for every system in range).
SuperQExpPoly sv_closed_form(const ClassicalRootSystem& sys, Variant v = Variant::All, long r0 = 1);

struct AsymptoticProfile {
    int epsilon = 0;
    Rational pi;
    ParityQNumber constant;  // lead in the basis C(r, epsilon) q^{pi r}
    Variant variant = Variant::All;
    Quantity quantity = Quantity::SSA;
};
// Leading term of a closed form reorganized as (epsilon, pi, constant).
AsymptoticProfile profile_of(const SuperQExpPoly& f);
AsymptoticProfile asymptote(const ClassicalRootSystem& sys, Variant v = Variant::All, Quantity qty = Quantity::SSA);

// (epsilon(n), pi(n)) of the growth table for the full building.
std::pair<int, Rational> table1_expected(Family f, int n);

// Cauchy product (s1 * s2)(r) = sum_{a+b=r} s1(a) s2(b), truncated to the shorter length.
std::vector<QNumber> convolve(const std::vector<QNumber>& s1, const std::vector<QNumber>& s2);

// Explicit constants printed in factored form for B3 and D4.
QNumber constant_B3_dagger();
QNumber constant_B3();
QNumber constant_D4_dagger();
QNumber constant_D4();
// The same constants from their defining sums over dominant types.
QNumber constant_B3_dagger_from_types();
QNumber constant_D4_dagger_from_types();
QNumber constant_B3_from_types();
QNumber constant_D4_from_types();

// The leading constant as an explicit sum over dominant types, independent of
// the closed-form assembly; values at even and odd radii in the same basis as
// asymptote().  Available for A_n, C_n, B_3, D_4, and the special variants of
// B_n and D_n; empty for the full building of B_n (n >= 4) and D_n (n >= 5).
std::optional<ParityQNumber> explicit_constant(const ClassicalRootSystem& sys, Variant v = Variant::All,
                                               Quantity qty = Quantity::SSA);
// Leading constant of r -> sum_{z <= r} f(z) when f ~ C(r, eps) q^{pi r} * c with eps = 0,
// or eps > 0 and c parity free.
ParityQNumber summed_constant(const ParityQNumber& c, const Rational& pi);

}  // namespace svol

#pragma once

#include "svol/qcalc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace svol {

// Input of the multi-summation solvers:
//   S(z) = sum over c in Z_{>0}^t with w.c = z of q^{mu.c + e(c mod 2)}.
// The parity table e is indexed by the residue mask (bit i set when c_i is odd);
// an empty table means e == 0.
struct SummationSpec {
    std::vector<int> w;
    std::vector<Rational> mu;
    std::vector<Rational> e;

    int t() const { return static_cast<int>(mu.size()); }
    Rational e_at(unsigned mask) const { return e.empty() ? Rational(0) : e[mask]; }
    bool balanced() const;
    bool parity_free() const;
    int weight_sum() const;
    // Throws InvalidSpec when the fields are inconsistent.
    void validate() const;
    std::string to_string() const;
};

// Parity weights W(mask) multiplying q^{mu.c}; W = q^e recovers a spec, and a
// zero weight removes a residue class entirely.
using ParityWeights = std::vector<QNumber>;

ParityWeights weights_from_exponents(const SummationSpec& spec);

// Direct enumeration of the defining sum (empty sum is 0).
QNumber brute_force(const SummationSpec& spec, long z);
QNumber brute_force(const std::vector<int>& w, const std::vector<Rational>& mu,
                    const ParityWeights& weights, long z);

// sum_{1.c = z} prod_i (-1)^{s_i c_i} q^{mu_i c_i}, exact for z >= 1.
SuperQExpPoly balanced_twisted(const std::vector<Rational>& mu, const std::vector<int>& s);
// sum_{1.c = z} q^{mu.c} W(c mod 2) through the Fourier expansion of W.
SuperQExpPoly balanced_with_weights(const std::vector<Rational>& mu, const ParityWeights& weights);
// Same with weights w in {1,2}; W may only depend on the residues of the
// weight-1 variables (UnrepresentableParity otherwise).
SuperQExpPoly weighted_with_weights(const std::vector<int>& w, const std::vector<Rational>& mu,
                                    const ParityWeights& weights);

SuperQExpPoly closed_form_balanced(const SummationSpec& spec);
SuperQExpPoly closed_form_parity(const SummationSpec& spec);
SuperQExpPoly closed_form_weighted(const SummationSpec& spec);
// Picks the applicable solver.
SuperQExpPoly closed_form(const SummationSpec& spec);

// Leading term (C0 + C1 (-1)^z) C(z, degree) q^{ord z} as displayed by the lemmas.
struct LeadingDisplay {
    std::string lemma;
    Rational ord;
    int degree = 0;
    QNumber c0;
    QNumber c1;
};

// Balanced, parity-free sums.
LeadingDisplay display_balanced(const SummationSpec& spec);
// Balanced sums with a parity table.
LeadingDisplay display_parity(const SummationSpec& spec);
// Mixed weights in {1,2} without parity table (three cases).
LeadingDisplay display_weighted(const SummationSpec& spec);
// The display that applies to the spec, if one does.
std::optional<LeadingDisplay> display_for(const SummationSpec& spec);

// True if the leading term of f agrees exactly with the display.
bool leading_matches(const SuperQExpPoly& f, const LeadingDisplay& d);

}  // namespace svol

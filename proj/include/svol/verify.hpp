#pragma once

#include "svol/volume.hpp"

#include <json.hpp>

#include <random>
#include <utility>
#include <vector>

namespace svol {

// Outcome of a verification suite: pass flag plus a JSON report.  On failure
// the report carries "first_failure" with the localizing fields.
struct SuiteResult {
    bool pass = true;
    nlohmann::json report;
};

using SystemList = std::vector<std::pair<Family, int>>;

// A_1..A_m, B_3..B_m, C_2..C_m, D_4..D_m.
SystemList systems_up_to_rank(int maxRank);
// A_2..A_6, C_2..C_4, B_3..B_5, D_4..D_6.
SystemList reference_grid();

// Random spec: t <= 4, w in {1,2}, mu in {0, 1/2, ..., 6}; with probability 2/3
// a parity table over {0, 1/2, 1} that only sees weight-1 residues.
SummationSpec random_spec(std::mt19937& rng);
// Random super q-exponential polynomial with up to four terms.
SuperQExpPoly random_super_poly(std::mt19937& rng);

// Solvers against brute force for z in [sum w, zmax], and the leading-term displays.
SuiteResult verify_multisum(unsigned seed, int count, long zmax = 30);
// Difference / anti-difference identities, telescoping, the Leibniz rule and the
// leading coefficients of anti-differences.
SuiteResult verify_calculus(unsigned seed, int count);
// Per system: growth table entry, closed form against exact values (SSA and SV,
// both variants) and explicit constants.
SuiteResult verify_systems(const SystemList& systems, long window = 15);
// Fast against brute enumeration for r <= maxR, and the parity correction
// identity on every enumerated vertex.
SuiteResult verify_enum(const SystemList& systems, long maxR);
// Weyl group orders, product formulas against division, parabolic degrees.
SuiteResult verify_poincare(int maxRank);
// A_1 spheres, the A_2 and C_2 unit spheres, positivity and integrality at q in {2,3,4,5}.
SuiteResult verify_anchors(const SystemList& systems, long maxR);
// Even and odd radius restrictions of the B_n / D_n closed forms and their constants.
SuiteResult verify_parity_split(const SystemList& systems);
// The printed B3 / D4 constants against the computed leading terms.
SuiteResult verify_printed_constants();

}  // namespace svol

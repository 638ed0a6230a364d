#pragma once

#include "svol/rootsys.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace svol {

// x = o + sum_j gamma_j omega_j in the closed fundamental chamber.
struct ApartmentPoint {
    std::vector<Rational> gamma;

    friend bool operator==(const ApartmentPoint& a, const ApartmentPoint& b) { return a.gamma == b.gamma; }
    friend bool operator<(const ApartmentPoint& a, const ApartmentPoint& b) { return a.gamma < b.gamma; }
    std::string to_string() const;
};

// a(x) = sum_j m_j gamma_j for a root with coefficients m.
Rational root_value(const std::vector<int>& root, const ApartmentPoint& p);
// { j : gamma_j = 0 } as a bitmask.
unsigned type_of(const ApartmentPoint& p);
// { j : gamma_j not an integer } as a bitmask.
unsigned jump_set(const ApartmentPoint& p);

// Vertex test through the gamma-coordinate rules of each family.
bool is_vertex(const ClassicalRootSystem& sys, const ApartmentPoint& p);
// Independent test in the ambient chi coordinates (counting non-integers).
bool is_vertex_chi(const ClassicalRootSystem& sys, const ApartmentPoint& p);
// A vertex whose roots all take integer values.
bool is_special(const ClassicalRootSystem& sys, const ApartmentPoint& p);

// ceil(a_0(x)); NotAVertex unless p is a vertex.
long distance(const ClassicalRootSystem& sys, const ApartmentPoint& p);
// sum over positive roots with a(x) > 0 of ceil(a(x)).
long index_exponent(const ClassicalRootSystem& sys, const ApartmentPoint& p);
// 2 rho(x) = sum_j (2 rho)_j gamma_j.
Rational two_rho_value(const ClassicalRootSystem& sys, const ApartmentPoint& p);

enum class VertexMode { All, Special };
enum class EnumMethod { Fast, Brute };

// Vertices x of the chamber with ceil(a_0(x)) = r, sorted by gamma.  The fast
// path walks coset compositions; the brute path scans a half-integer box and
// filters with is_vertex_chi.
std::vector<ApartmentPoint> enumerate_sphere(const ClassicalRootSystem& sys, long r, VertexMode mode,
                                             EnumMethod method);

// Points of type I in the coset Lambda_0 - 1/2 omega_K, where Lambda_0 is
// { h_j gamma_j integer } and K is a set of indices with h_j = 1 outside I.
// They are x(c) with gamma_{l_i} = c_i / h_{l_i} - 1/2 [l_i in K], c in Z_{>0}^t;
// then ceil(a_0(x)) = sum c - radius_offset and
//   index_exponent(x) = mu.c + e(c mod 2)
// whenever x is a vertex.  A missing table entry marks a residue class of
// non-vertices.
struct CosetData {
    TypeSubset type;
    unsigned coset = 0;  // K as a bitmask
    std::vector<int> ell;
    std::vector<int> h;  // h_{l_i}
    std::vector<Rational> mu;
    std::vector<int> w;  // all ones: the distance is sum c
    std::vector<std::optional<Rational>> e;  // indexed by residue mask of c
    std::vector<Rational> shift;            // 1/2 omega_K in gamma coordinates
    long radius_offset = 0;                 // floor(|K| / 2)

    ApartmentPoint point(const std::vector<long>& c) const;
};

// Cosets that can carry vertices: C none; B "X0", "X1"; D "X00", "X10", "X01", "X11".
std::vector<std::string> coset_tags(const ClassicalRootSystem& sys);
unsigned coset_mask(const ClassicalRootSystem& sys, const std::string& tag);
CosetData parity_correction(const ClassicalRootSystem& sys, const TypeSubset& I, unsigned cosetMask,
                            bool verticesOnly = true);
CosetData parity_correction(const ClassicalRootSystem& sys, const TypeSubset& I, const std::string& tag);

// Data of an excluded jump pattern J: X_J[I, r] = X_0[I, r + |J| - delta] - 1/2 omega_J,
// and the index exponent drops from 2 rho(x) by offset = sum_a ceil(-a(1/2 omega_J)).
struct JumpShift {
    unsigned jumps = 0;
    int delta = 0;
    long offset = 0;
};
JumpShift jump_shift(const ClassicalRootSystem& sys, unsigned J);
// The jump sets whose lattice points are not vertices (B and D; empty otherwise).
std::vector<unsigned> excluded_jump_sets(const ClassicalRootSystem& sys);

// Doubled coordinates g = 2 gamma: integer fast paths used by the exact sums.
bool is_vertex_doubled(const ClassicalRootSystem& sys, const std::vector<long>& g2);
long index_exponent_doubled(const ClassicalRootSystem& sys, const std::vector<long>& g2);
// Calls f(g2) for every vertex of the sphere of radius r (fast path, unsorted).
void for_each_sphere_vertex(const ClassicalRootSystem& sys, long r, VertexMode mode,
                            const std::function<void(const std::vector<long>&)>& f);

// "family,n,r,gamma_1..gamma_n,type_bitmask,special_flag,exponent" rows with header.
std::string sphere_csv(const ClassicalRootSystem& sys, long r, const std::vector<ApartmentPoint>& pts);

}  // namespace svol

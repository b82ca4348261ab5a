#pragma once

#include <span>
#include <string>
#include <vector>

#include "modinv/group.hpp"
#include "modinv/poly.hpp"

namespace modinv {

enum class FamilyTag { N, U, B, D, L, Bprime, E, Q };

std::string to_string(FamilyTag tag);

struct GeneratorItem {
    std::string label;
    FamilyTag tag;
    Poly poly;
    int degree;
};

// A tagged, degree-annotated generating family together with the group it
// is invariant under.  Every item is checked against that group on build.
struct GeneratorSet {
    GroupKind group;
    RingPtr ring;
    std::vector<GeneratorItem> items;

    std::vector<GeneratorItem> by_tag(FamilyTag tag) const;
    // Distinct nonzero polynomials across all items.
    std::vector<Poly> distinct_polynomials() const;
    // The minimal generating subfamily: N, B, D for the plus type;
    // L, N, U and the squarefree mirror sums of degree >= 3 for the Sylow
    // subgroup.  Returned deduplicated at the polynomial level.
    std::vector<GeneratorItem> minimal_items() const;
};

// Building blocks.  Indices are 0-based copy indices.
Poly gen_N(RingPtr ring, int i);                       // x_i y_i
Poly gen_U(RingPtr ring, int i, int j);                // x_i y_j + x_j y_i
Poly gen_L(RingPtr ring, int i);                       // x_i + y_i
Poly gen_B(RingPtr ring, std::span<const int> alpha);  // x^alpha + y^alpha

// x^alpha_I y^beta_J + y^alpha_I x^beta_J.  I, J are 0-based index sets;
// alpha/beta list the exponents (all >= 1) aligned with I/J.
Poly build_d_general(RingPtr ring, std::span<const int> I, std::span<const int> J,
                     std::span<const int> alpha, std::span<const int> beta);

// All nonempty I < J (elementwise) with |J| - |I| = 0 or q-1, unit exponents.
struct DPair {
    std::vector<int> I, J;
};
std::vector<DPair> enumerate_d_pairs(int m, int q);

// Families N, U, B (all |alpha| = q-1) and D for the plus type.
GeneratorSet build_plus_generators(RingPtr ring);
// Families L, N, U and the squarefree mirror sums for the Sylow subgroup.
GeneratorSet build_sylow_generators(RingPtr ring);
// m = 1 only: E = x y^q + x^q y and Q = the normalized degree-2 invariant
// x^2 + u xy + v y^2 of the minus type.  The naive orbit sum of x^2
// vanishes in characteristic 2, which build_minus_generators verifies.
GeneratorSet build_minus_generators(RingPtr ring, const GroupTable& table);

// Coefficients (u, v) of a minus-type quadratic invariant written as
// x^2 + u xy + v y^2.
struct QuadraticForm {
    Fq u, v;
};
QuadraticForm quadratic_coefficients(const Poly& q_poly);

}  // namespace modinv

#pragma once

#include <string>
#include <vector>

#include "modinv/poly.hpp"

namespace modinv {

enum class GroupKind { plus, minus, sylow };

std::string to_string(GroupKind kind);
GroupKind group_kind_from_string(const std::string& name);

// Row-major 2x2 matrix over GF(q).
struct Matrix2 {
    Fq a = 0, b = 0, c = 0, d = 0;
    bool operator==(const Matrix2&) const = default;
};

Fq mat_det(const GF2s& f, const Matrix2& t);
Matrix2 mat_mul(const GF2s& f, const Matrix2& lhs, const Matrix2& rhs);
Matrix2 mat_inverse(const GF2s& f, const Matrix2& t);
std::string mat_to_string(const Matrix2& t);

// True iff T * Gram * T^t is congruent to the Gram form of the given kind,
// i.e. the difference is symmetric with zero diagonal.  kind must be plus
// or minus; T must be invertible.
bool is_orthogonal(const GF2s& f, const Matrix2& t, GroupKind kind);

// Enumerated group with its generating set.  For the plus type the
// generators are {sigma, tau_primitive}; the minus type keeps the full
// element list as generators; the Sylow subgroup is {1, sigma}.
struct GroupTable {
    GroupKind kind;
    FieldPtr field;
    std::vector<Matrix2> elements;
    std::vector<Matrix2> generators;
    // Construction notes, e.g. the minus-type family tallies.
    std::vector<std::string> notes;

    std::size_t order() const { return elements.size(); }
};

// Builds and cross-validates the group of the given kind against the
// brute-force congruence enumeration over all invertible matrices (for the
// Sylow kind: against subgroup closure inside the plus group).  Throws
// integrity_error carrying both sets on a mismatch.
GroupTable build_group(FieldPtr field, GroupKind kind);

// Diagonal action on m copies extended to the polynomial ring, using the
// convention that variables transform by the rows of the inverse matrix.
Poly act(const Matrix2& g, const Poly& p);

// Precomputes variable images for repeated application of one element.
class Actor {
public:
    Actor(const Matrix2& g, RingPtr ring);
    Poly apply(const Poly& p) const;
    // True when the element maps every monomial to a scalar multiple of a
    // monomial (diagonal or antidiagonal matrix).
    bool is_monomial_map() const { return monomial_map_; }

private:
    RingPtr ring_;
    Matrix2 inv_;
    bool monomial_map_;
    mutable std::vector<std::vector<Poly>> powers_;
    friend Poly act(const Matrix2& g, const Poly& p);
};

// Sum of tau_a . f over all units a.  f must be fixed by sigma (checked);
// the image is then a plus-type invariant.
Poly relative_transfer(const Poly& f);

// Sum of g . f over the whole table.
Poly full_transfer(const Poly& f, const GroupTable& table);

// Checks f against the table's generating set.
bool is_invariant(const Poly& f, const GroupTable& table);

}  // namespace modinv

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "modinv/field.hpp"

namespace modinv {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Exponent vector over the fixed variable order x1..xm, y1..ym.
struct Monomial {
    std::vector<std::uint16_t> exps;

    int degree() const {
        int d = 0;
        for (auto e : exps) d += e;
        return d;
    }
    bool operator==(const Monomial&) const = default;
};

// Canonical listing order: total degree ascending, ties broken so that the
// lexicographically larger exponent vector comes first (x1^d leads each
// degree block).  This is the pivot and printing order everywhere.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// The polynomial ring GF(q)[x1..xm, y1..ym].
class Ring : public std::enable_shared_from_this<Ring> {
public:
    Ring(FieldPtr field, int m);

    int m() const { return m_; }
    int nvars() const { return 2 * m_; }
    const GF2s& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }

    int x_index(int i) const { return i; }        // 0-based copy index
    int y_index(int i) const { return m_ + i; }
    std::string var_name(int idx) const;

    // All monomials of total degree d in the canonical listing order.
    std::vector<Monomial> monomials_of_degree(int d) const;

    bool same(const Ring& other) const {
        return m_ == other.m_ && field_->same(*other.field_);
    }

private:
    FieldPtr field_;
    int m_;
};

RingPtr make_ring(FieldPtr field, int m);

// Sparse polynomial with exact GF(q) coefficients.  Immutable value type;
// stored terms never carry a zero coefficient.
class Poly {
public:
    using TermMap = std::map<Monomial, Fq, MonomialOrder>;

    Poly() = default;
    static Poly zero(RingPtr ring);
    static Poly constant(RingPtr ring, Fq c);
    static Poly variable(RingPtr ring, int var_index);
    static Poly term(RingPtr ring, Monomial mono, Fq c);
    // Accumulates a term list (duplicates add up, zeros drop out).
    static Poly from_terms(RingPtr ring, std::vector<std::pair<Monomial, Fq>> terms);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    Poly graded_piece(int d) const;

    Poly operator+(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly scaled(Fq c) const;
    Poly pow(unsigned e) const;
    bool operator==(const Poly& other) const;

    // Coefficient of a monomial (0 when absent).
    Fq coeff(const Monomial& mono) const;

    // Algebra endomorphism sending each variable to the given homogeneous
    // degree-1 image.  Throws usage_error if an image is not linear.
    Poly substitute_linear(const std::vector<Poly>& images) const;

    // Formal partial derivative (characteristic 2: exponent parity decides).
    Poly derivative(int var_index) const;

    std::string to_string() const;
    static Poly parse(RingPtr ring, std::string_view text);

private:
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    void add_term(const Monomial& mono, Fq c);  // accumulating, drops zeros

    RingPtr ring_;
    TermMap terms_;
};

}  // namespace modinv

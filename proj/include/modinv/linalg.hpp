#pragma once

#include <cstdint>
#include <vector>

#include "modinv/group.hpp"
#include "modinv/poly.hpp"

namespace modinv {

// The echelon kernel runs either serially or with OpenMP-parallel row
// elimination.  Both produce the identical reduced echelon form (it is
// unique for a given row space); tests compare them and against the plain
// reference implementation below.
enum class EchelonMode { serial, parallel };

EchelonMode default_echelon_mode();
void set_default_echelon_mode(EchelonMode mode);

// Textbook dense row reduction over GF(q), one entry per cell, no packing,
// no threading.  Kept as the reference implementation for testing the
// packed kernel.  Returns the nonzero rows of the reduced echelon form,
// pivots in increasing column order.
std::vector<std::vector<Fq>> reference_rref(const GF2s& field,
                                            std::vector<std::vector<Fq>> rows);

// Maintained reduced-echelon basis over GF(2^s).  Rows are bit-plane packed:
// s planes of ncols bits each.  Deterministic: the stored rows are the
// unique RREF of everything inserted so far.
class EchelonBasis {
public:
    EchelonBasis(FieldPtr field, std::size_t ncols,
                 EchelonMode mode = default_echelon_mode());

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    std::size_t words_per_plane() const { return words_; }
    std::size_t row_words() const { return std::size_t(s_) * words_; }

    std::vector<std::uint64_t> zero_row() const {
        return std::vector<std::uint64_t>(row_words(), 0);
    }
    static void set_entry(std::vector<std::uint64_t>& row, std::size_t words,
                          std::size_t col, Fq value);
    Fq entry(std::size_t row_index, std::size_t col) const;

    // Reduces a row against the current basis in place.
    void reduce(std::vector<std::uint64_t>& row) const;
    // Reduce-then-insert; returns true when the rank grew.
    bool insert(std::vector<std::uint64_t> row);
    // Bulk insertion; candidates are reduced in parallel blocks.
    void absorb(std::vector<std::vector<std::uint64_t>>&& candidates);
    bool reduces_to_zero(std::vector<std::uint64_t> row) const;

    // dst += c * src for packed rows of this basis's shape.
    void accumulate(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                    Fq c) const {
        xor_scaled(dst.data(), src.data(), c);
    }

    std::vector<Fq> unpack_row(std::size_t row_index) const;

private:
    Fq row_entry(const std::uint64_t* row, std::size_t col) const;
    void xor_scaled(std::uint64_t* dst, const std::uint64_t* src, Fq c) const;
    void scale_row(std::uint64_t* row, Fq c) const;
    std::size_t first_nonzero_col(const std::uint64_t* row) const;

    FieldPtr field_;
    std::size_t ncols_, words_;
    int s_;
    bool parallel_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::size_t> pivots_;
};

// A graded piece of the polynomial ring presented by its reduced-echelon
// basis over the canonical monomial coordinates of one degree.
class Subspace {
public:
    Subspace(RingPtr ring, int degree, EchelonMode mode = default_echelon_mode());

    const RingPtr& ring() const { return ring_; }
    int degree() const { return degree_; }
    std::size_t dim() const { return rows_.rank(); }
    const std::vector<Monomial>& coords() const { return coords_; }

    // Coordinate row of a homogeneous polynomial of this degree.
    std::vector<std::uint64_t> encode(const Poly& p) const;
    // Row of shift * p without building the product polynomial; no two
    // terms collide because the shift is a single monomial.
    std::vector<std::uint64_t> encode_shifted(const Poly& p, const Monomial& shift) const;
    Poly decode(const std::vector<std::uint64_t>& row) const;

    bool insert(const Poly& p);
    bool insert_row(std::vector<std::uint64_t> row) { return rows_.insert(std::move(row)); }
    void absorb_rows(std::vector<std::vector<std::uint64_t>>&& rows) {
        rows_.absorb(std::move(rows));
    }

    bool contains(const Poly& p) const;
    std::vector<Poly> basis() const;
    const EchelonBasis& rows() const { return rows_; }

private:
    std::size_t coord_index(const Monomial& mono) const;

    RingPtr ring_;
    int degree_;
    std::vector<Monomial> coords_;
    EchelonBasis rows_;
};

// Reduced-echelon basis of the span of homogeneous degree-d polynomials.
Subspace span(RingPtr ring, const std::vector<Poly>& vectors, int degree,
              EchelonMode mode = default_echelon_mode());

// Kernel of the stacked maps (act(g) - id) on the degree-d piece, g over
// the given generators.  Diagonal and antidiagonal elements are handled by
// direct monomial bookkeeping; anything else goes through exact linear
// algebra on the remaining candidate space.
Subspace fixed_subspace(RingPtr ring, const std::vector<Matrix2>& generators, int degree,
                        EchelonMode mode = default_echelon_mode());

}  // namespace modinv

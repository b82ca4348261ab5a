#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace modinv {

// A field element in the polynomial basis, encoded as sum(bit_i * 2^i).
// Valid values are 0 .. q-1 for the owning field.
using Fq = std::uint16_t;

// GF(2^s) with an explicit irreducible modulus.  Immutable after
// construction; all operations are pure and safe to call concurrently.
class GF2s {
public:
    // Builds the field, verifying the modulus is irreducible, locating the
    // least-encoded primitive element and the least-encoded element w of
    // absolute trace 1 (equivalently, w is outside {x^2 + x}).
    //
    // s must lie in [2, 16].  modulus, when given, encodes a degree-s
    // polynomial over GF(2) as a bit vector (bit i = coefficient of z^i).
    explicit GF2s(int s, std::optional<std::uint32_t> modulus = std::nullopt);

    int s() const { return s_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t modulus() const { return modulus_; }
    Fq primitive() const { return primitive_; }
    Fq w() const { return w_; }

    static Fq add(Fq a, Fq b) { return static_cast<Fq>(a ^ b); }
    Fq mul(Fq a, Fq b) const;
    Fq inv(Fq a) const;
    // Integer exponents; negative exponents act on units via the inverse.
    Fq pow(Fq a, long long e) const;
    // Absolute trace to GF(2), returned as 0 or 1.
    int trace(Fq a) const;

    // sum over all units a of a^e; equals 1 when (q-1) | e, else 0.
    // Computed by direct summation, not by the closed form.
    Fq sum_of_unit_powers(unsigned long long e) const;

    // Multiplication-by-c as a GF(2)-linear map on bit planes: row j of the
    // returned view is a bitmask over input planes i with bit i set iff
    // bit j of c * z^i is set.  Rows are stored contiguously per element.
    const std::uint32_t* scale_rows(Fq c) const { return scale_rows_.data() + std::size_t(c) * s_; }

    // "z^2+z+1"-style rendering of a GF(2) polynomial given by its bits.
    static std::string poly_bits_to_string(std::uint32_t bits);
    // Parses a comma-separated exponent list ("2,1,0" -> z^2+z+1).
    static std::uint32_t parse_modulus_exponents(const std::string& csv);

    bool same(const GF2s& other) const { return s_ == other.s_ && modulus_ == other.modulus_; }

private:
    int s_;
    std::uint32_t q_;
    std::uint32_t modulus_;
    Fq primitive_;
    Fq w_;
    std::vector<std::uint16_t> log_;    // log_[a] for a != 0, base primitive_
    std::vector<Fq> exp_;               // exp_[i] = primitive_^i, i in [0, 2(q-1))
    std::vector<std::uint32_t> scale_rows_;  // q * s packed rows
};

using FieldPtr = std::shared_ptr<const GF2s>;

// Convenience constructor matching the CLI surface.
FieldPtr make_field(int s, std::optional<std::uint32_t> modulus = std::nullopt);

}  // namespace modinv

#include "modinv/field.hpp"

#include <sstream>

#include "modinv/errors.hpp"

namespace modinv {

namespace {

int bit_degree(std::uint32_t bits) {
    int d = -1;
    for (int i = 0; i < 32; ++i)
        if (bits >> i & 1u) d = i;
    return d;
}

// Product of two GF(2) polynomials, no reduction.
std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1u) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

std::uint32_t poly_mod(std::uint64_t a, std::uint32_t modulus) {
    const int md = bit_degree(modulus);
    for (int i = 63; i >= md; --i)
        if (a >> i & 1u) a ^= std::uint64_t(modulus) << (i - md);
    return static_cast<std::uint32_t>(a);
}

// Trial division over all lower-degree polynomials.  Returns a nontrivial
// factor when one exists, 0 otherwise.
std::uint32_t find_factor(std::uint32_t bits) {
    const int d = bit_degree(bits);
    for (std::uint32_t f = 2; bit_degree(f) < d; ++f) {
        // long division remainder of bits by f
        std::uint64_t rem = bits;
        const int fd = bit_degree(f);
        for (int i = d; i >= fd; --i)
            if (rem >> i & 1u) rem ^= std::uint64_t(f) << (i - fd);
        if (rem == 0) return f;
    }
    return 0;
}

std::uint32_t default_modulus(int s) {
    switch (s) {
        case 2: return 0b111u;      // z^2+z+1
        case 3: return 0b1011u;     // z^3+z+1
        case 4: return 0b10011u;    // z^4+z+1
        default: break;
    }
    // Least-encoded irreducible of degree s.
    for (std::uint32_t bits = (1u << s) | 1u; bits < (2u << s); bits += 2)
        if (find_factor(bits) == 0) return bits;
    throw construction_error("no irreducible modulus of degree " + std::to_string(s));
}

}  // namespace

GF2s::GF2s(int s, std::optional<std::uint32_t> modulus) : s_(s) {
    if (s < 2 || s > 16)
        throw usage_error("field exponent s must lie in [2, 16], got " + std::to_string(s));
    q_ = 1u << s;
    modulus_ = modulus ? *modulus : default_modulus(s);
    if (bit_degree(modulus_) != s)
        throw usage_error("modulus " + poly_bits_to_string(modulus_) + " does not have degree " +
                          std::to_string(s));
    if (std::uint32_t f = find_factor(modulus_))
        throw construction_error("modulus " + poly_bits_to_string(modulus_) +
                                 " is reducible: divisible by " + poly_bits_to_string(f));

    auto raw_mul = [&](std::uint32_t a, std::uint32_t b) {
        return poly_mod(clmul(a, b), modulus_);
    };

    // Least-encoded unit of multiplicative order exactly q-1.
    const std::uint32_t n = q_ - 1;
    primitive_ = 0;
    for (std::uint32_t a = 2; a < q_ && primitive_ == 0; ++a) {
        std::uint32_t p = a;
        std::uint32_t ord = 1;
        while (p != 1) {
            p = raw_mul(p, a);
            ++ord;
        }
        if (ord == n) primitive_ = static_cast<Fq>(a);
    }
    if (primitive_ == 0) throw construction_error("no primitive element found");

    log_.assign(q_, 0);
    exp_.assign(2 * n, 0);
    std::uint32_t p = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        exp_[i] = exp_[i + n] = static_cast<Fq>(p);
        log_[p] = static_cast<std::uint16_t>(i);
        p = raw_mul(p, primitive_);
    }

    scale_rows_.assign(std::size_t(q_) * s_, 0);
    for (std::uint32_t c = 0; c < q_; ++c) {
        for (int i = 0; i < s_; ++i) {
            const Fq img = mul(static_cast<Fq>(c), static_cast<Fq>(1u << i));
            for (int j = 0; j < s_; ++j)
                if (img >> j & 1u) scale_rows_[std::size_t(c) * s_ + j] |= 1u << i;
        }
    }

    // Least-encoded element of absolute trace 1, then a brute-force check
    // that it really avoids {x^2 + x}.
    w_ = 0;
    for (std::uint32_t a = 0; a < q_ && w_ == 0; ++a)
        if (trace(static_cast<Fq>(a)) == 1) w_ = static_cast<Fq>(a);
    if (w_ == 0) throw construction_error("no element of trace 1 found");
    for (std::uint32_t x = 0; x < q_; ++x)
        if (add(mul(Fq(x), Fq(x)), Fq(x)) == w_)
            throw construction_error("w candidate lies in {x^2+x}");
}

Fq GF2s::mul(Fq a, Fq b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[std::uint32_t(log_[a]) + log_[b]];
}

Fq GF2s::inv(Fq a) const {
    if (a == 0) throw arithmetic_error("inversion of zero");
    return exp_[(q_ - 1) - log_[a]];
}

Fq GF2s::pow(Fq a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw arithmetic_error("negative power of zero");
        return 0;
    }
    const long long n = q_ - 1;
    long long r = e % n;
    if (r < 0) r += n;
    return exp_[(std::uint32_t(log_[a]) * std::uint64_t(r)) % n];
}

int GF2s::trace(Fq a) const {
    Fq acc = 0;
    Fq p = a;
    for (int i = 0; i < s_; ++i) {
        acc = add(acc, p);
        p = mul(p, p);
    }
    return acc & 1;
}

Fq GF2s::sum_of_unit_powers(unsigned long long e) const {
    Fq acc = 0;
    for (std::uint32_t a = 1; a < q_; ++a)
        acc = add(acc, pow(static_cast<Fq>(a), static_cast<long long>(e % (q_ - 1))));
    return acc;
}

std::string GF2s::poly_bits_to_string(std::uint32_t bits) {
    if (bits == 0) return "0";
    std::string out;
    for (int i = 31; i >= 0; --i) {
        if (!(bits >> i & 1u)) continue;
        if (!out.empty()) out += "+";
        if (i == 0)
            out += "1";
        else if (i == 1)
            out += "z";
        else
            out += "z^" + std::to_string(i);
    }
    return out;
}

std::uint32_t GF2s::parse_modulus_exponents(const std::string& csv) {
    std::uint32_t bits = 0;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        int e = std::stoi(item, &pos);
        if (pos != item.size() || e < 0 || e > 31)
            throw usage_error("bad modulus exponent '" + item + "'");
        bits |= 1u << e;
    }
    if (bits == 0) throw usage_error("empty modulus exponent list");
    return bits;
}

FieldPtr make_field(int s, std::optional<std::uint32_t> modulus) {
    return std::make_shared<const GF2s>(s, modulus);
}

}  // namespace modinv

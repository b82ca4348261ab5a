#include "modinv/poly.hpp"

#include <algorithm>
#include <cctype>

#include "modinv/errors.hpp"

namespace modinv {

namespace {

constexpr int kMaxExponent = 1 << 16;

void check_same_ring(const Poly& a, const Poly& b) {
    if (!a.ring() || !b.ring() || !a.ring()->same(*b.ring()))
        throw usage_error("polynomial operands belong to different ring contexts");
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps.size(); ++i) {
        const int e = int(r.exps[i]) + int(b.exps[i]);
        if (e >= kMaxExponent) throw usage_error("monomial exponent overflow");
        r.exps[i] = static_cast<std::uint16_t>(e);
    }
    return r;
}

}  // namespace

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(b.exps.begin(), b.exps.end(),
                                        a.exps.begin(), a.exps.end());
}

Ring::Ring(FieldPtr field, int m) : field_(std::move(field)), m_(m) {
    if (!field_) throw usage_error("ring requires a field context");
    if (m < 1 || 2 * m > 32)
        throw usage_error("number of vector copies m must satisfy 1 <= m <= 16");
}

std::string Ring::var_name(int idx) const {
    if (idx < 0 || idx >= nvars()) throw usage_error("variable index out of range");
    if (idx < m_) return "x" + std::to_string(idx + 1);
    return "y" + std::to_string(idx - m_ + 1);
}

std::vector<Monomial> Ring::monomials_of_degree(int d) const {
    std::vector<Monomial> out;
    if (d < 0) return out;
    const int k = nvars();
    Monomial cur;
    cur.exps.assign(k, 0);
    // Recursive descent assigning exponents from the first variable down
    // yields the canonical order directly.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == k - 1) {
            cur.exps[pos] = static_cast<std::uint16_t>(remaining);
            out.push_back(cur);
            cur.exps[pos] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur.exps[pos] = static_cast<std::uint16_t>(e);
            self(self, pos + 1, remaining - e);
        }
        cur.exps[pos] = 0;
    };
    rec(rec, 0, d);
    return out;
}

RingPtr make_ring(FieldPtr field, int m) { return std::make_shared<const Ring>(std::move(field), m); }

Poly Poly::zero(RingPtr ring) { return Poly(std::move(ring)); }

Poly Poly::constant(RingPtr ring, Fq c) {
    Poly p(std::move(ring));
    if (c != 0) {
        Monomial one;
        one.exps.assign(p.ring_->nvars(), 0);
        p.terms_.emplace(std::move(one), c);
    }
    return p;
}

Poly Poly::variable(RingPtr ring, int var_index) {
    Poly p(std::move(ring));
    if (var_index < 0 || var_index >= p.ring_->nvars())
        throw usage_error("variable index out of range");
    Monomial m;
    m.exps.assign(p.ring_->nvars(), 0);
    m.exps[var_index] = 1;
    p.terms_.emplace(std::move(m), Fq(1));
    return p;
}

Poly Poly::term(RingPtr ring, Monomial mono, Fq c) {
    Poly p(std::move(ring));
    if (int(mono.exps.size()) != p.ring_->nvars())
        throw usage_error("monomial arity does not match the ring");
    if (c != 0) p.terms_.emplace(std::move(mono), c);
    return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<std::pair<Monomial, Fq>> terms) {
    Poly p(std::move(ring));
    for (auto& [mono, c] : terms) {
        if (int(mono.exps.size()) != p.ring_->nvars())
            throw usage_error("monomial arity does not match the ring");
        p.add_term(mono, c);
    }
    return p;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree();
    return terms_.rbegin()->first.degree() == d;
}

Poly Poly::graded_piece(int d) const {
    Poly out(ring_);
    for (const auto& [mono, c] : terms_)
        if (mono.degree() == d) out.terms_.emplace(mono, c);
    return out;
}

void Poly::add_term(const Monomial& mono, Fq c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(mono, c);
    if (!fresh) {
        it->second = GF2s::add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& other) const {
    check_same_ring(*this, other);
    Poly out = *this;
    for (const auto& [mono, c] : other.terms_) out.add_term(mono, c);
    return out;
}

Poly Poly::operator*(const Poly& other) const {
    check_same_ring(*this, other);
    const GF2s& f = ring_->field();
    Poly out(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            out.add_term(mono_mul(ma, mb), f.mul(ca, cb));
    return out;
}

Poly Poly::scaled(Fq c) const {
    const GF2s& f = ring_->field();
    Poly out(ring_);
    if (c == 0) return out;
    for (const auto& [mono, a] : terms_) out.terms_.emplace(mono, f.mul(a, c));
    return out;
}

Poly Poly::pow(unsigned e) const {
    Poly acc = Poly::constant(ring_, 1);
    Poly base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Poly::operator==(const Poly& other) const {
    if (!ring_ || !other.ring_) return terms_.empty() && other.terms_.empty();
    return ring_->same(*other.ring_) && terms_ == other.terms_;
}

Fq Poly::coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Fq(0) : it->second;
}

Poly Poly::substitute_linear(const std::vector<Poly>& images) const {
    if (int(images.size()) != ring_->nvars())
        throw usage_error("substitution needs one image per variable");
    for (const auto& img : images) {
        check_same_ring(*this, img);
        if (!(img.is_zero() || (img.is_homogeneous() && img.degree() == 1)))
            throw usage_error("substitution image is not homogeneous of degree 1");
    }
    // Power tables grow lazily; terms of a polynomial share variables often.
    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](int var, int e) -> const Poly& {
        auto& tab = powers[var];
        if (tab.empty()) tab.push_back(Poly::constant(ring_, 1));
        while (int(tab.size()) <= e) tab.push_back(tab.back() * images[var]);
        return tab[e];
    };
    Poly out(ring_);
    for (const auto& [mono, c] : terms_) {
        Poly prod = Poly::constant(ring_, c);
        for (int v = 0; v < ring_->nvars(); ++v)
            if (mono.exps[v]) prod = prod * power(v, mono.exps[v]);
        out = out + prod;
    }
    return out;
}

Poly Poly::derivative(int var_index) const {
    if (var_index < 0 || var_index >= ring_->nvars())
        throw usage_error("variable index out of range");
    Poly out(ring_);
    for (const auto& [mono, c] : terms_) {
        if (mono.exps[var_index] % 2 == 0) continue;  // even exponents vanish in char 2
        Monomial m = mono;
        m.exps[var_index] -= 1;
        out.add_term(m, c);
    }
    return out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string t;
        if (c != 1 || mono.degree() == 0) t = std::to_string(c);
        for (int v = 0; v < ring_->nvars(); ++v) {
            const int e = mono.exps[v];
            if (e == 0) continue;
            if (!t.empty()) t += "*";
            t += ring_->var_name(v);
            if (e > 1) t += "^" + std::to_string(e);
        }
        out += t;
    }
    return out;
}

Poly Poly::parse(RingPtr ring, std::string_view text) {
    Poly out(ring);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_uint = [&]() -> long {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw usage_error("expected a number in polynomial text");
        return std::stol(std::string(text.substr(start, pos - start)));
    };
    skip_ws();
    if (pos >= text.size()) throw usage_error("empty polynomial text");
    while (true) {
        // one term: optional coefficient, then *-joined variable powers
        Fq c = 1;
        Monomial mono;
        mono.exps.assign(ring->nvars(), 0);
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                long v = parse_uint();
                if (v < 0 || std::uint32_t(v) >= ring->field().q())
                    throw usage_error("coefficient out of field range: " + std::to_string(v));
                c = ring->field().mul(c, static_cast<Fq>(v));
                saw_factor = true;
            } else if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'y')) {
                const bool is_y = text[pos] == 'y';
                ++pos;
                long i = parse_uint();
                if (i < 1 || i > ring->m())
                    throw usage_error("variable index out of range in polynomial text");
                int var = is_y ? ring->y_index(int(i) - 1) : ring->x_index(int(i) - 1);
                long e = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    e = parse_uint();
                }
                if (e < 0 || e >= kMaxExponent) throw usage_error("exponent out of range");
                const long total = long(mono.exps[var]) + e;
                if (total >= kMaxExponent) throw usage_error("monomial exponent overflow");
                mono.exps[var] = static_cast<std::uint16_t>(total);
                saw_factor = true;
            } else {
                throw usage_error("unexpected character in polynomial text");
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!saw_factor) throw usage_error("empty term in polynomial text");
        out.add_term(mono, c);
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '+') throw usage_error("expected '+' between terms");
        ++pos;
    }
    return out;
}

}  // namespace modinv

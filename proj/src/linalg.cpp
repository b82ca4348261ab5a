#include "modinv/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include "modinv/errors.hpp"

namespace modinv {

namespace {

std::atomic<EchelonMode> g_mode{EchelonMode::parallel};

constexpr std::size_t kNoCol = static_cast<std::size_t>(-1);
constexpr std::size_t kBlock = 128;

}  // namespace

EchelonMode default_echelon_mode() { return g_mode.load(); }
void set_default_echelon_mode(EchelonMode mode) { g_mode.store(mode); }

std::vector<std::vector<Fq>> reference_rref(const GF2s& field,
                                            std::vector<std::vector<Fq>> rows) {
    if (rows.empty()) return rows;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        const Fq lead = field.inv(rows[r][col]);
        for (auto& v : rows[r]) v = field.mul(v, lead);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || rows[k][col] == 0) continue;
            const Fq c = rows[k][col];
            for (std::size_t j = 0; j < ncols; ++j)
                rows[k][j] = GF2s::add(rows[k][j], field.mul(c, rows[r][j]));
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

EchelonBasis::EchelonBasis(FieldPtr field, std::size_t ncols, EchelonMode mode)
    : field_(std::move(field)),
      ncols_(ncols),
      words_((ncols + 63) / 64),
      s_(field_->s()),
      parallel_(mode == EchelonMode::parallel) {}

void EchelonBasis::set_entry(std::vector<std::uint64_t>& row, std::size_t words,
                             std::size_t col, Fq value) {
    for (std::size_t j = 0; j * words < row.size(); ++j) {
        auto& word = row[j * words + col / 64];
        const std::uint64_t bit = std::uint64_t(1) << (col % 64);
        if (value >> j & 1u)
            word |= bit;
        else
            word &= ~bit;
    }
}

Fq EchelonBasis::row_entry(const std::uint64_t* row, std::size_t col) const {
    Fq c = 0;
    for (int j = 0; j < s_; ++j)
        c = static_cast<Fq>(c | ((row[j * words_ + col / 64] >> (col % 64) & 1u) << j));
    return c;
}

Fq EchelonBasis::entry(std::size_t row_index, std::size_t col) const {
    return row_entry(rows_[row_index].data(), col);
}

void EchelonBasis::xor_scaled(std::uint64_t* dst, const std::uint64_t* src, Fq c) const {
    if (c == 0) return;
    if (c == 1) {
        for (std::size_t i = 0, n = row_words(); i < n; ++i) dst[i] ^= src[i];
        return;
    }
    // Multiplication by c is GF(2)-linear across the bit planes.
    const std::uint32_t* m = field_->scale_rows(c);
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t in[16];
        for (int j = 0; j < s_; ++j) in[j] = src[j * words_ + w];
        for (int j = 0; j < s_; ++j) {
            std::uint64_t acc = 0;
            std::uint32_t mask = m[j];
            while (mask) {
                acc ^= in[std::countr_zero(mask)];
                mask &= mask - 1;
            }
            dst[j * words_ + w] ^= acc;
        }
    }
}

void EchelonBasis::scale_row(std::uint64_t* row, Fq c) const {
    if (c == 1) return;
    const std::uint32_t* m = field_->scale_rows(c);
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t in[16];
        for (int j = 0; j < s_; ++j) in[j] = row[j * words_ + w];
        for (int j = 0; j < s_; ++j) {
            std::uint64_t acc = 0;
            std::uint32_t mask = m[j];
            while (mask) {
                acc ^= in[std::countr_zero(mask)];
                mask &= mask - 1;
            }
            row[j * words_ + w] = acc;
        }
    }
}

std::size_t EchelonBasis::first_nonzero_col(const std::uint64_t* row) const {
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t any = 0;
        for (int j = 0; j < s_; ++j) any |= row[j * words_ + w];
        if (any) return w * 64 + std::countr_zero(any);
    }
    return kNoCol;
}

void EchelonBasis::reduce(std::vector<std::uint64_t>& row) const {
    // RREF rows vanish at each other's pivots, so order is irrelevant.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Fq c = row_entry(row.data(), pivots_[i]);
        if (c) xor_scaled(row.data(), rows_[i].data(), c);
    }
}

bool EchelonBasis::insert(std::vector<std::uint64_t> row) {
    reduce(row);
    const std::size_t col = first_nonzero_col(row.data());
    if (col == kNoCol) return false;
    scale_row(row.data(), field_->inv(row_entry(row.data(), col)));
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(rows_.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel_)
#endif
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        const Fq c = row_entry(rows_[k].data(), col);
        if (c) xor_scaled(rows_[k].data(), row.data(), c);
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), col) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, col);
    rows_.insert(rows_.begin() + pos, std::move(row));
    return true;
}

void EchelonBasis::absorb(std::vector<std::vector<std::uint64_t>>&& candidates) {
    for (std::size_t start = 0; start < candidates.size(); start += kBlock) {
        const std::size_t stop = std::min(candidates.size(), start + kBlock);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel_)
#endif
        for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start);
             i < static_cast<std::ptrdiff_t>(stop); ++i)
            reduce(candidates[i]);
        for (std::size_t i = start; i < stop; ++i) insert(std::move(candidates[i]));
    }
    candidates.clear();
}

bool EchelonBasis::reduces_to_zero(std::vector<std::uint64_t> row) const {
    reduce(row);
    return first_nonzero_col(row.data()) == kNoCol;
}

std::vector<Fq> EchelonBasis::unpack_row(std::size_t row_index) const {
    std::vector<Fq> out(ncols_, 0);
    for (std::size_t col = 0; col < ncols_; ++col) out[col] = entry(row_index, col);
    return out;
}

Subspace::Subspace(RingPtr ring, int degree, EchelonMode mode)
    : ring_(std::move(ring)),
      degree_(degree),
      coords_(ring_->monomials_of_degree(degree)),
      rows_(ring_->field_ptr(), coords_.size(), mode) {}

std::size_t Subspace::coord_index(const Monomial& mono) const {
    const auto it = std::lower_bound(coords_.begin(), coords_.end(), mono, MonomialOrder{});
    if (it == coords_.end() || !(*it == mono))
        throw usage_error("monomial is not a coordinate of this graded piece");
    return static_cast<std::size_t>(it - coords_.begin());
}

std::vector<std::uint64_t> Subspace::encode(const Poly& p) const {
    if (!p.ring() || !p.ring()->same(*ring_))
        throw usage_error("polynomial belongs to a different ring context");
    if (!p.is_zero() && !(p.is_homogeneous() && p.degree() == degree_))
        throw usage_error("polynomial is not homogeneous of degree " + std::to_string(degree_));
    auto row = rows_.zero_row();
    for (const auto& [mono, c] : p.terms())
        EchelonBasis::set_entry(row, rows_.words_per_plane(), coord_index(mono), c);
    return row;
}

std::vector<std::uint64_t> Subspace::encode_shifted(const Poly& p, const Monomial& shift) const {
    auto row = rows_.zero_row();
    for (const auto& [mono, c] : p.terms()) {
        Monomial prod = mono;
        for (std::size_t i = 0; i < prod.exps.size(); ++i)
            prod.exps[i] = static_cast<std::uint16_t>(prod.exps[i] + shift.exps[i]);
        EchelonBasis::set_entry(row, rows_.words_per_plane(), coord_index(prod), c);
    }
    return row;
}

Poly Subspace::decode(const std::vector<std::uint64_t>& row) const {
    std::vector<std::pair<Monomial, Fq>> terms;
    const std::size_t words = rows_.words_per_plane();
    const int s = ring_->field().s();
    for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t any = 0;
        for (int j = 0; j < s; ++j) any |= row[j * words + w];
        while (any) {
            const int bit = std::countr_zero(any);
            any &= any - 1;
            const std::size_t col = w * 64 + bit;
            Fq c = 0;
            for (int j = 0; j < s; ++j)
                c = static_cast<Fq>(c | ((row[j * words + w] >> bit & 1u) << j));
            terms.emplace_back(coords_[col], c);
        }
    }
    return Poly::from_terms(ring_, std::move(terms));
}

bool Subspace::insert(const Poly& p) { return rows_.insert(encode(p)); }

bool Subspace::contains(const Poly& p) const {
    if (p.is_zero()) return true;
    return rows_.reduces_to_zero(encode(p));
}

std::vector<Poly> Subspace::basis() const {
    std::vector<Poly> out;
    out.reserve(rows_.rank());
    for (std::size_t i = 0; i < rows_.rank(); ++i) {
        std::vector<std::pair<Monomial, Fq>> terms;
        for (std::size_t col = 0; col < coords_.size(); ++col) {
            const Fq c = rows_.entry(i, col);
            if (c) terms.emplace_back(coords_[col], c);
        }
        out.push_back(Poly::from_terms(ring_, std::move(terms)));
    }
    return out;
}

Subspace span(RingPtr ring, const std::vector<Poly>& vectors, int degree, EchelonMode mode) {
    Subspace out(std::move(ring), degree, mode);
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(vectors.size());
    for (const auto& p : vectors) rows.push_back(out.encode(p));
    out.absorb_rows(std::move(rows));
    return out;
}

namespace {

// Basis rows of the joint fixed space of one antidiagonal element on the
// monomials that survived every diagonal constraint.
struct MonomialConstraints {
    std::vector<char> alive;                  // per coordinate
    std::vector<std::pair<std::size_t, Fq>> image;  // swap image and scalar
};

}  // namespace

Subspace fixed_subspace(RingPtr ring, const std::vector<Matrix2>& generators, int degree,
                        EchelonMode mode) {
    Subspace out(ring, degree, mode);
    const auto& coords = out.coords();
    const std::size_t n = coords.size();
    const GF2s& f = ring->field();

    std::vector<Matrix2> diagonal, antidiagonal, general;
    for (const auto& g : generators) {
        if (g == Matrix2{1, 0, 0, 1}) continue;
        if (g.b == 0 && g.c == 0)
            diagonal.push_back(g);
        else if (g.a == 0 && g.d == 0)
            antidiagonal.push_back(g);
        else
            general.push_back(g);
    }
    // Two antidiagonal constraints equal one antidiagonal plus their product.
    while (antidiagonal.size() > 1) {
        diagonal.push_back(mat_mul(f, antidiagonal[0], antidiagonal.back()));
        antidiagonal.pop_back();
    }

    const int m = ring->m();
    auto weight = [&](const Monomial& mono) {
        long long ex = 0, ey = 0;
        for (int i = 0; i < m; ++i) {
            ex += mono.exps[i];
            ey += mono.exps[m + i];
        }
        return std::pair(ex, ey);
    };

    std::vector<char> alive(n, 1);
    for (const auto& g : diagonal) {
        const Matrix2 inv = mat_inverse(f, g);
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            const auto [ex, ey] = weight(coords[i]);
            if (f.mul(f.pow(inv.a, ex), f.pow(inv.d, ey)) != 1) alive[i] = 0;
        }
    }

    std::vector<std::vector<std::uint64_t>> rows;
    const std::size_t words = out.rows().words_per_plane();
    if (!antidiagonal.empty()) {
        const Matrix2 inv = mat_inverse(f, antidiagonal[0]);
        auto swapped = [&](const Monomial& mono) {
            Monomial img = mono;
            for (int i = 0; i < m; ++i) std::swap(img.exps[i], img.exps[m + i]);
            return img;
        };
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            const auto [ex, ey] = weight(coords[i]);
            const Fq c = f.mul(f.pow(inv.b, ex), f.pow(inv.c, ey));
            const Monomial img = swapped(coords[i]);
            if (img == coords[i]) {
                if (c == 1) {
                    auto row = out.rows().zero_row();
                    EchelonBasis::set_entry(row, words, i, 1);
                    rows.push_back(std::move(row));
                }
                continue;
            }
            if (MonomialOrder{}(img, coords[i])) continue;  // count each pair once
            const auto it = std::lower_bound(coords.begin(), coords.end(), img, MonomialOrder{});
            const std::size_t j = static_cast<std::size_t>(it - coords.begin());
            if (!alive[j]) continue;
            const auto [jx, jy] = weight(coords[j]);
            const Fq cj = f.mul(f.pow(inv.b, jx), f.pow(inv.c, jy));
            if (f.mul(c, cj) != 1) continue;  // inconsistent around the 2-cycle
            auto row = out.rows().zero_row();
            EchelonBasis::set_entry(row, words, i, 1);
            EchelonBasis::set_entry(row, words, j, c);
            rows.push_back(std::move(row));
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            auto row = out.rows().zero_row();
            EchelonBasis::set_entry(row, words, i, 1);
            rows.push_back(std::move(row));
        }
    }

    // Refine against each remaining element by extracting the left null
    // space of (act(g) - id) applied to the current basis.
    for (const auto& g : general) {
        if (rows.empty()) break;
        const std::size_t k = rows.size();
        Actor actor(g, ring);
        EchelonBasis aug(ring->field_ptr(), n + k, mode);
        const std::size_t aw = aug.words_per_plane();
        const std::size_t ow = out.rows().words_per_plane();
        std::vector<std::vector<std::uint64_t>> aug_rows;
        aug_rows.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            const Poly b = out.decode(rows[i]);
            const auto packed = out.encode(actor.apply(b) + b);
            auto row = aug.zero_row();
            // image part in the first n columns, combo tag behind it
            for (int j = 0; j < f.s(); ++j)
                for (std::size_t w = 0; w < ow; ++w) row[j * aw + w] = packed[j * ow + w];
            EchelonBasis::set_entry(row, aw, n + i, 1);
            aug_rows.push_back(std::move(row));
        }
        aug.absorb(std::move(aug_rows));
        std::vector<std::vector<std::uint64_t>> next;
        for (std::size_t r = 0; r < aug.rank(); ++r) {
            if (aug.pivots()[r] < n) continue;  // image part nonzero
            auto combined = out.rows().zero_row();
            for (std::size_t i = 0; i < k; ++i) {
                const Fq c = aug.entry(r, n + i);
                if (c) out.rows().accumulate(combined, rows[i], c);
            }
            next.push_back(std::move(combined));
        }
        rows = std::move(next);
    }

    out.absorb_rows(std::move(rows));
    return out;
}

}  // namespace modinv

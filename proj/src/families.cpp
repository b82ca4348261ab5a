#include "modinv/families.hpp"

#include <algorithm>
#include <set>

#include "modinv/errors.hpp"
#include "modinv/linalg.hpp"

namespace modinv {

namespace {

std::string subset_label(std::span<const int> s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i] + 1);
    }
    return out + "}";
}

std::string alpha_label(std::span<const int> alpha) {
    std::string out = "[";
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(alpha[i]);
    }
    return out + "]";
}

// All alpha in N^m with |alpha| = total.
void compositions(int m, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (int(cur.size()) == m - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = total; e >= 0; --e) {
        cur.push_back(e);
        compositions(m, total - e, cur, out);
        cur.pop_back();
    }
}

void verify_invariant(const GeneratorItem& item, const std::vector<Matrix2>& gens) {
    for (const auto& g : gens)
        if (!(act(g, item.poly) == item.poly))
            throw integrity_error("generator " + item.label + " is not fixed by " +
                                  mat_to_string(g));
}

Matrix2 sigma() { return Matrix2{0, 1, 1, 0}; }

}  // namespace

std::string to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::N: return "N";
        case FamilyTag::U: return "U";
        case FamilyTag::B: return "B";
        case FamilyTag::D: return "D";
        case FamilyTag::L: return "L";
        case FamilyTag::Bprime: return "B'";
        case FamilyTag::E: return "E";
        case FamilyTag::Q: return "Q";
    }
    return "?";
}

std::vector<GeneratorItem> GeneratorSet::by_tag(FamilyTag tag) const {
    std::vector<GeneratorItem> out;
    for (const auto& item : items)
        if (item.tag == tag) out.push_back(item);
    return out;
}

std::vector<Poly> GeneratorSet::distinct_polynomials() const {
    std::vector<Poly> out;
    for (const auto& item : items) {
        if (item.poly.is_zero()) continue;
        if (std::none_of(out.begin(), out.end(),
                         [&](const Poly& p) { return p == item.poly; }))
            out.push_back(item.poly);
    }
    return out;
}

std::vector<GeneratorItem> GeneratorSet::minimal_items() const {
    std::vector<GeneratorItem> picked;
    for (const auto& item : items) {
        bool keep = false;
        if (group == GroupKind::plus)
            keep = item.tag == FamilyTag::N || item.tag == FamilyTag::B || item.tag == FamilyTag::D;
        else if (group == GroupKind::sylow)
            keep = item.tag == FamilyTag::L || item.tag == FamilyTag::N ||
                   item.tag == FamilyTag::U ||
                   (item.tag == FamilyTag::Bprime && item.degree >= 3);
        else
            keep = true;
        if (!keep) continue;
        if (std::none_of(picked.begin(), picked.end(),
                         [&](const GeneratorItem& g) { return g.poly == item.poly; }))
            picked.push_back(item);
    }
    return picked;
}

Poly gen_N(RingPtr ring, int i) {
    return Poly::variable(ring, ring->x_index(i)) * Poly::variable(ring, ring->y_index(i));
}

Poly gen_U(RingPtr ring, int i, int j) {
    return Poly::variable(ring, ring->x_index(i)) * Poly::variable(ring, ring->y_index(j)) +
           Poly::variable(ring, ring->x_index(j)) * Poly::variable(ring, ring->y_index(i));
}

Poly gen_L(RingPtr ring, int i) {
    return Poly::variable(ring, ring->x_index(i)) + Poly::variable(ring, ring->y_index(i));
}

Poly gen_B(RingPtr ring, std::span<const int> alpha) {
    if (int(alpha.size()) != ring->m())
        throw usage_error("exponent vector must have one entry per copy");
    Monomial xs, ys;
    xs.exps.assign(ring->nvars(), 0);
    ys.exps.assign(ring->nvars(), 0);
    for (int i = 0; i < ring->m(); ++i) {
        if (alpha[i] < 0) throw usage_error("negative exponent");
        xs.exps[ring->x_index(i)] = static_cast<std::uint16_t>(alpha[i]);
        ys.exps[ring->y_index(i)] = static_cast<std::uint16_t>(alpha[i]);
    }
    return Poly::term(ring, xs, 1) + Poly::term(ring, ys, 1);
}

Poly build_d_general(RingPtr ring, std::span<const int> I, std::span<const int> J,
                     std::span<const int> alpha, std::span<const int> beta) {
    if (I.empty() || J.empty()) throw usage_error("index sets must be nonempty");
    if (I.size() != alpha.size() || J.size() != beta.size())
        throw usage_error("exponent lists must align with their index sets");
    auto fill = [&](std::span<const int> idx, std::span<const int> exps, bool x_side) {
        Monomial m;
        m.exps.assign(ring->nvars(), 0);
        for (std::size_t t = 0; t < idx.size(); ++t) {
            if (idx[t] < 0 || idx[t] >= ring->m()) throw usage_error("index out of range");
            if (exps[t] < 1) throw usage_error("exponents must be >= 1 on the support");
            const int v = x_side ? ring->x_index(idx[t]) : ring->y_index(idx[t]);
            m.exps[v] = static_cast<std::uint16_t>(m.exps[v] + exps[t]);
        }
        return m;
    };
    const Monomial xa = fill(I, alpha, true), yb = fill(J, beta, false);
    const Monomial ya = fill(I, alpha, false), xb = fill(J, beta, true);
    auto mul = [&](const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.exps.size(); ++i)
            r.exps[i] = static_cast<std::uint16_t>(r.exps[i] + b.exps[i]);
        return r;
    };
    return Poly::term(ring, mul(xa, yb), 1) + Poly::term(ring, mul(ya, xb), 1);
}

std::vector<DPair> enumerate_d_pairs(int m, int q) {
    std::vector<DPair> out;
    // I < J elementwise is equivalent to max(I) < min(J): scan the split.
    for (int split = 0; split + 1 < m; ++split) {
        // I ranges over nonempty subsets of [0, split], J of [split+1, m).
        const int left = split + 1, right = m - split - 1;
        for (std::uint32_t mi = 1; mi < (1u << left); ++mi) {
            if (!(mi >> split & 1u)) continue;  // max(I) is the split point
            for (std::uint32_t mj = 1; mj < (1u << right); ++mj) {
                DPair p;
                for (int t = 0; t <= split; ++t)
                    if (mi >> t & 1u) p.I.push_back(t);
                for (int t = 0; t < right; ++t)
                    if (mj >> t & 1u) p.J.push_back(split + 1 + t);
                const int diff = int(p.J.size()) - int(p.I.size());
                if (diff == 0 || diff == q - 1) out.push_back(std::move(p));
            }
        }
    }
    return out;
}

GeneratorSet build_plus_generators(RingPtr ring) {
    const int m = ring->m();
    const int q = int(ring->field().q());
    GeneratorSet set{GroupKind::plus, ring, {}};
    for (int i = 0; i < m; ++i)
        set.items.push_back({"N" + std::to_string(i + 1), FamilyTag::N, gen_N(ring, i), 2});
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            set.items.push_back({"U" + std::to_string(i + 1) + std::to_string(j + 1),
                                 FamilyTag::U, gen_U(ring, i, j), 2});
    std::vector<std::vector<int>> alphas;
    std::vector<int> cur;
    compositions(m, q - 1, cur, alphas);
    for (const auto& alpha : alphas)
        set.items.push_back({"B" + alpha_label(alpha), FamilyTag::B, gen_B(ring, alpha), q - 1});
    for (const auto& pair : enumerate_d_pairs(m, q)) {
        std::vector<int> ones_i(pair.I.size(), 1), ones_j(pair.J.size(), 1);
        Poly d = build_d_general(ring, pair.I, pair.J, ones_i, ones_j);
        set.items.push_back({"D" + subset_label(pair.I) + subset_label(pair.J), FamilyTag::D,
                             std::move(d), int(pair.I.size() + pair.J.size())});
    }
    const std::vector<Matrix2> gens{sigma(), Matrix2{ring->field().primitive(), 0, 0,
                                                     ring->field().inv(ring->field().primitive())}};
    for (const auto& item : set.items) verify_invariant(item, gens);
    return set;
}

GeneratorSet build_sylow_generators(RingPtr ring) {
    const int m = ring->m();
    GeneratorSet set{GroupKind::sylow, ring, {}};
    for (int i = 0; i < m; ++i)
        set.items.push_back({"L" + std::to_string(i + 1), FamilyTag::L, gen_L(ring, i), 1});
    for (int i = 0; i < m; ++i)
        set.items.push_back({"N" + std::to_string(i + 1), FamilyTag::N, gen_N(ring, i), 2});
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            set.items.push_back({"U" + std::to_string(i + 1) + std::to_string(j + 1),
                                 FamilyTag::U, gen_U(ring, i, j), 2});
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> alpha(m, 0);
        int deg = 0;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1u) {
                alpha[i] = 1;
                ++deg;
            }
        set.items.push_back(
            {"B'" + alpha_label(alpha), FamilyTag::Bprime, gen_B(ring, alpha), deg});
    }
    const std::vector<Matrix2> gens{sigma()};
    for (const auto& item : set.items) verify_invariant(item, gens);
    return set;
}

QuadraticForm quadratic_coefficients(const Poly& q_poly) {
    const auto& ring = q_poly.ring();
    if (!ring || ring->m() != 1) throw usage_error("quadratic form extraction needs m = 1");
    Monomial xx, xy, yy;
    xx.exps = {2, 0};
    xy.exps = {1, 1};
    yy.exps = {0, 2};
    if (q_poly.coeff(xx) != 1)
        throw usage_error("quadratic invariant is not normalized to x^2 + u xy + v y^2");
    return QuadraticForm{q_poly.coeff(xy), q_poly.coeff(yy)};
}

GeneratorSet build_minus_generators(RingPtr ring, const GroupTable& table) {
    if (ring->m() != 1) throw usage_error("minus-type generators are built for m = 1");
    if (table.kind != GroupKind::minus) throw usage_error("expected a minus-type group table");
    if (!ring->field().same(*table.field)) throw usage_error("field mismatch");
    const int q = int(ring->field().q());
    GeneratorSet set{GroupKind::minus, ring, {}};

    const Poly x = Poly::variable(ring, 0), y = Poly::variable(ring, 1);
    const Poly e_poly = x * y.pow(unsigned(q)) + x.pow(unsigned(q)) * y;
    set.items.push_back({"E", FamilyTag::E, e_poly, q + 1});

    // The naive orbit sum of x^2 collapses: a sum of squares of linear forms
    // is the square of the summed form, which must itself be invariant and
    // hence zero here.  Confirm, then take the degree-2 piece of the
    // invariant ring instead, normalized so the x^2 coefficient is 1.
    if (!full_transfer(x * x, table).is_zero())
        throw integrity_error("orbit sum of x^2 is unexpectedly nonzero");
    Subspace quad = fixed_subspace(ring, table.generators, 2);
    if (quad.dim() != 1)
        throw integrity_error("minus-type degree-2 invariants have dimension " +
                              std::to_string(quad.dim()) + ", expected 1");
    const Poly q_poly = quad.basis().front();
    quadratic_coefficients(q_poly);  // validates the shape
    set.items.push_back({"Q", FamilyTag::Q, q_poly, 2});

    for (const auto& item : set.items) verify_invariant(item, table.generators);
    return set;
}

}  // namespace modinv

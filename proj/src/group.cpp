#include "modinv/group.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "modinv/errors.hpp"

namespace modinv {

namespace {

Matrix2 sigma_matrix() { return Matrix2{0, 1, 1, 0}; }

Matrix2 tau_matrix(Fq a, const GF2s& f) { return Matrix2{a, 0, 0, f.inv(a)}; }

Matrix2 gram(const GF2s& f, GroupKind kind) {
    if (kind == GroupKind::plus) return Matrix2{0, 1, 0, 0};
    return Matrix2{f.w(), 1, 0, f.w()};
}

Matrix2 mat_transpose(const Matrix2& t) { return Matrix2{t.a, t.c, t.b, t.d}; }

auto mat_key(const Matrix2& t) { return std::tuple(t.a, t.b, t.c, t.d); }

std::string set_to_string(const std::vector<Matrix2>& v) {
    std::string out;
    for (const auto& t : v) {
        if (!out.empty()) out += " ";
        out += mat_to_string(t);
    }
    return out;
}

// All invertible matrices passing the congruence test.
std::vector<Matrix2> brute_force_orthogonal(const GF2s& f, GroupKind kind) {
    std::vector<Matrix2> out;
    const std::uint32_t q = f.q();
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
            for (std::uint32_t c = 0; c < q; ++c)
                for (std::uint32_t d = 0; d < q; ++d) {
                    Matrix2 t{Fq(a), Fq(b), Fq(c), Fq(d)};
                    if (mat_det(f, t) == 0) continue;
                    if (is_orthogonal(f, t, kind)) out.push_back(t);
                }
    return out;
}

std::vector<Matrix2> closure(const GF2s& f, std::vector<Matrix2> gens) {
    std::set<std::tuple<Fq, Fq, Fq, Fq>> seen;
    std::vector<Matrix2> elems;
    auto push = [&](const Matrix2& t) {
        if (seen.insert(mat_key(t)).second) elems.push_back(t);
    };
    push(Matrix2{1, 0, 0, 1});
    for (const auto& g : gens) push(g);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : gens) {
            push(mat_mul(f, elems[i], g));
            push(mat_mul(f, g, elems[i]));
        }
    return elems;
}

std::vector<Matrix2> sorted_unique(std::vector<Matrix2> v) {
    std::sort(v.begin(), v.end(),
              [](const Matrix2& x, const Matrix2& y) { return mat_key(x) < mat_key(y); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::string to_string(GroupKind kind) {
    switch (kind) {
        case GroupKind::plus: return "plus";
        case GroupKind::minus: return "minus";
        case GroupKind::sylow: return "sylow";
    }
    return "?";
}

GroupKind group_kind_from_string(const std::string& name) {
    if (name == "plus") return GroupKind::plus;
    if (name == "minus") return GroupKind::minus;
    if (name == "sylow") return GroupKind::sylow;
    throw usage_error("unknown group kind '" + name + "'");
}

Fq mat_det(const GF2s& f, const Matrix2& t) {
    return GF2s::add(f.mul(t.a, t.d), f.mul(t.b, t.c));
}

Matrix2 mat_mul(const GF2s& f, const Matrix2& l, const Matrix2& r) {
    return Matrix2{GF2s::add(f.mul(l.a, r.a), f.mul(l.b, r.c)),
                   GF2s::add(f.mul(l.a, r.b), f.mul(l.b, r.d)),
                   GF2s::add(f.mul(l.c, r.a), f.mul(l.d, r.c)),
                   GF2s::add(f.mul(l.c, r.b), f.mul(l.d, r.d))};
}

Matrix2 mat_inverse(const GF2s& f, const Matrix2& t) {
    const Fq det = mat_det(f, t);
    if (det == 0) throw usage_error("matrix is singular");
    const Fq s = f.inv(det);
    // In characteristic 2 the adjugate swaps the diagonal, signs vanish.
    return Matrix2{f.mul(t.d, s), f.mul(t.b, s), f.mul(t.c, s), f.mul(t.a, s)};
}

std::string mat_to_string(const Matrix2& t) {
    return "[[" + std::to_string(t.a) + "," + std::to_string(t.b) + "],[" +
           std::to_string(t.c) + "," + std::to_string(t.d) + "]]";
}

bool is_orthogonal(const GF2s& f, const Matrix2& t, GroupKind kind) {
    if (kind == GroupKind::sylow)
        throw usage_error("no congruence criterion for the sylow kind");
    if (mat_det(f, t) == 0) throw usage_error("orthogonality test requires an invertible matrix");
    const Matrix2 o = gram(f, kind);
    const Matrix2 m = mat_mul(f, mat_mul(f, t, o), mat_transpose(t));
    const Matrix2 diff{GF2s::add(m.a, o.a), GF2s::add(m.b, o.b), GF2s::add(m.c, o.c),
                       GF2s::add(m.d, o.d)};
    return diff.a == 0 && diff.d == 0 && diff.b == diff.c;
}

GroupTable build_group(FieldPtr field, GroupKind kind) {
    const GF2s& f = *field;
    GroupTable table;
    table.kind = kind;
    table.field = field;

    if (kind == GroupKind::sylow) {
        table.elements = {Matrix2{1, 0, 0, 1}, sigma_matrix()};
        table.generators = {sigma_matrix()};
        // No Gram form to test against; validate subgroup closure instead.
        auto closed = sorted_unique(closure(f, table.generators));
        if (closed != sorted_unique(table.elements))
            throw integrity_error("sylow table is not closed under multiplication");
        for (const auto& t : table.elements)
            if (!is_orthogonal(f, t, GroupKind::plus))
                throw integrity_error("sylow element fails the plus-type congruence: " +
                                      mat_to_string(t));
        return table;
    }

    if (kind == GroupKind::plus) {
        table.generators = {sigma_matrix(), tau_matrix(f.primitive(), f)};
        table.elements = closure(f, table.generators);
    } else {
        // Solutions (a, b) of a^2 w + b^2 w + w + ab = 0 by exhaustion.
        // a = 0 contributes the swap and [[0,1],[1,1/w]]; a != 0 yields
        // [[a,b],[b,(1+b^2)/a]].  The swap-multiples complete the family.
        const Fq w = f.w();
        std::vector<Matrix2> family{sigma_matrix(), Matrix2{0, 1, 1, f.inv(w)}};
        std::size_t solution_count = 0;
        for (std::uint32_t a = 1; a < f.q(); ++a)
            for (std::uint32_t b = 0; b < f.q(); ++b) {
                Fq lhs = GF2s::add(GF2s::add(f.mul(f.mul(Fq(a), Fq(a)), w),
                                             f.mul(f.mul(Fq(b), Fq(b)), w)),
                                   GF2s::add(w, f.mul(Fq(a), Fq(b))));
                if (lhs != 0) continue;
                ++solution_count;
                const Fq d = f.mul(GF2s::add(1, f.mul(Fq(b), Fq(b))), f.inv(Fq(a)));
                family.push_back(Matrix2{Fq(a), Fq(b), Fq(b), d});
            }
        std::vector<Matrix2> all = family;
        for (const auto& t : family) all.push_back(mat_mul(f, sigma_matrix(), t));
        table.elements = sorted_unique(all);
        table.generators = table.elements;  // no small generating set is exhibited
        table.notes.push_back("quadratic solutions with a!=0: " + std::to_string(solution_count) +
                              "; family size before swap-multiples: " +
                              std::to_string(family.size()) + " (q = " + std::to_string(f.q()) +
                              ")");
    }

    auto enumerated = sorted_unique(table.elements);
    auto brute = sorted_unique(brute_force_orthogonal(f, kind));
    if (enumerated != brute)
        throw integrity_error("group cross-validation mismatch for " + to_string(kind) +
                              " type\nenumerated: " + set_to_string(enumerated) +
                              "\nbrute force: " + set_to_string(brute));
    table.elements = enumerated;
    return table;
}

Actor::Actor(const Matrix2& g, RingPtr ring) : ring_(std::move(ring)) {
    inv_ = mat_inverse(ring_->field(), g);
    monomial_map_ = (inv_.b == 0 && inv_.c == 0) || (inv_.a == 0 && inv_.d == 0);
    powers_.resize(ring_->nvars());
}

Poly Actor::apply(const Poly& p) const {
    if (!p.ring() || !p.ring()->same(*ring_))
        throw usage_error("polynomial does not belong to the actor's ring");
    const GF2s& f = ring_->field();
    const int m = ring_->m();
    if (monomial_map_) {
        // x_i -> inv.a x_i + inv.b y_i, y_i -> inv.c x_i + inv.d y_i with one
        // side zero: each monomial maps to a scaled monomial.
        std::vector<std::pair<Monomial, Fq>> out;
        out.reserve(p.term_count());
        const bool swap = inv_.a == 0;
        const Fq cx = swap ? inv_.b : inv_.a;  // factor per x-exponent
        const Fq cy = swap ? inv_.c : inv_.d;  // factor per y-exponent
        for (const auto& [mono, c] : p.terms()) {
            long long ex = 0, ey = 0;
            for (int i = 0; i < m; ++i) {
                ex += mono.exps[i];
                ey += mono.exps[m + i];
            }
            const Fq scale = f.mul(f.pow(cx, ex), f.pow(cy, ey));
            Monomial img = mono;
            if (swap)
                for (int i = 0; i < m; ++i) std::swap(img.exps[i], img.exps[m + i]);
            out.emplace_back(std::move(img), f.mul(c, scale));
        }
        return Poly::from_terms(p.ring(), std::move(out));
    }
    // General element: expand through cached binomial powers of the images.
    auto power = [&](int var, int e) -> const Poly& {
        auto& tab = powers_[var];
        if (tab.empty()) {
            tab.push_back(Poly::constant(ring_, 1));
            const int i = var < m ? var : var - m;
            const Fq px = var < m ? inv_.a : inv_.c;
            const Fq py = var < m ? inv_.b : inv_.d;
            tab.push_back(Poly::variable(ring_, i).scaled(px) +
                          Poly::variable(ring_, m + i).scaled(py));
        }
        while (int(tab.size()) <= e) tab.push_back(tab.back() * tab[1]);
        return tab[e];
    };
    Poly out = Poly::zero(p.ring());
    for (const auto& [mono, c] : p.terms()) {
        Poly prod = Poly::constant(ring_, c);
        for (int v = 0; v < ring_->nvars(); ++v)
            if (mono.exps[v]) prod = prod * power(v, mono.exps[v]);
        out = out + prod;
    }
    return out;
}

Poly act(const Matrix2& g, const Poly& p) {
    if (!p.ring()) throw usage_error("cannot act on a polynomial without a ring");
    return Actor(g, p.ring()).apply(p);
}

Poly relative_transfer(const Poly& f) {
    if (!f.ring()) throw usage_error("cannot transfer a polynomial without a ring");
    const GF2s& field = f.ring()->field();
    if (!(act(sigma_matrix(), f) == f))
        throw precondition_error("relative transfer requires a sigma-fixed input");
    Poly out = Poly::zero(f.ring());
    for (std::uint32_t a = 1; a < field.q(); ++a)
        out = out + act(tau_matrix(Fq(a), field), f);
    return out;
}

Poly full_transfer(const Poly& f, const GroupTable& table) {
    if (!f.ring()) throw usage_error("cannot transfer a polynomial without a ring");
    if (!f.ring()->field().same(*table.field))
        throw usage_error("field mismatch between polynomial and group table");
    Poly out = Poly::zero(f.ring());
    for (const auto& g : table.elements) out = out + act(g, f);
    return out;
}

bool is_invariant(const Poly& f, const GroupTable& table) {
    if (!f.ring()) throw usage_error("cannot test a polynomial without a ring");
    if (!f.ring()->field().same(*table.field))
        throw usage_error("field mismatch between polynomial and group table");
    for (const auto& g : table.generators)
        if (!(act(g, f) == f)) return false;
    return true;
}

}  // namespace modinv

#include <random>

#include "doctest.h"
#include "modinv/errors.hpp"
#include "modinv/poly.hpp"

using namespace modinv;

namespace {

Poly random_poly(RingPtr ring, std::mt19937& rng, int max_terms = 5, int max_exp = 3) {
    Poly p = Poly::zero(ring);
    const int terms = 1 + int(rng() % max_terms);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        m.exps.assign(ring->nvars(), 0);
        for (auto& e : m.exps) e = static_cast<std::uint16_t>(rng() % (max_exp + 1));
        const Fq c = static_cast<Fq>(rng() % ring->field().q());
        p = p + Poly::term(ring, std::move(m), c);
    }
    return p;
}

}  // namespace

TEST_SUITE_BEGIN("poly");

TEST_CASE("characteristic-2 products") {
    auto ring = make_ring(make_field(2), 2);
    const Poly u = Poly::parse(ring, "x1*y2 + x2*y1");
    CHECK((u * u).to_string() == "x1^2*y2^2 + x2^2*y1^2");
    CHECK((u + u).is_zero());

    auto ring1 = make_ring(make_field(2), 1);
    const Poly l = Poly::parse(ring1, "x1 + y1");
    CHECK((l * l * l).to_string() == "x1^3 + x1^2*y1 + x1*y1^2 + y1^3");
}

TEST_CASE("graded pieces") {
    auto ring = make_ring(make_field(2), 1);
    const Poly p = Poly::parse(ring, "x1*y1 + x1^3");
    CHECK(p.graded_piece(2).to_string() == "x1*y1");
    CHECK(p.graded_piece(5).is_zero());
    CHECK(Poly::zero(ring).graded_piece(3).is_zero());
    CHECK_FALSE(p.is_homogeneous());
    CHECK(p.graded_piece(3).is_homogeneous());
}

TEST_CASE("monomial enumeration") {
    auto f = make_field(2);
    auto ring1 = make_ring(f, 1);
    const auto monos = ring1->monomials_of_degree(2);
    REQUIRE(monos.size() == 3);
    CHECK(Poly::term(ring1, monos[0], 1).to_string() == "x1^2");
    CHECK(Poly::term(ring1, monos[1], 1).to_string() == "x1*y1");
    CHECK(Poly::term(ring1, monos[2], 1).to_string() == "y1^2");

    CHECK(make_ring(f, 2)->monomials_of_degree(3).size() == 20);
    CHECK(make_ring(f, 3)->monomials_of_degree(0).size() == 1);

    // stars and bars across a few shapes
    auto binom = [](long long n, long long k) {
        long long r = 1;
        for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    for (int m : {1, 2, 3})
        for (int d : {0, 1, 4, 7}) {
            auto ring = make_ring(f, m);
            CHECK(long(ring->monomials_of_degree(d).size()) == binom(d + 2 * m - 1, 2 * m - 1));
        }
}

TEST_CASE("linear substitution") {
    auto ring = make_ring(make_field(2), 2);
    const Poly u = Poly::parse(ring, "x1*y2 + x2*y1");

    std::vector<Poly> identity;
    for (int v = 0; v < ring->nvars(); ++v) identity.push_back(Poly::variable(ring, v));
    CHECK(u.substitute_linear(identity) == u);

    // swap x_i <-> y_i fixes the crossing polynomial
    std::vector<Poly> swap{Poly::variable(ring, 2), Poly::variable(ring, 3),
                           Poly::variable(ring, 0), Poly::variable(ring, 1)};
    CHECK(u.substitute_linear(swap) == u);

    // x_i -> a^-1 x_i, y_i -> a y_i fixes x1*y1
    const Fq a = 2;
    const GF2s& field = ring->field();
    std::vector<Poly> scale{Poly::variable(ring, 0).scaled(field.inv(a)),
                            Poly::variable(ring, 1).scaled(field.inv(a)),
                            Poly::variable(ring, 2).scaled(a), Poly::variable(ring, 3).scaled(a)};
    const Poly n1 = Poly::parse(ring, "x1*y1");
    CHECK(n1.substitute_linear(scale) == n1);

    CHECK_THROWS_AS(u.substitute_linear({identity[0], identity[1], identity[2], n1}),
                    usage_error);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(42);
    auto ring = make_ring(make_field(3), 2);
    for (int trial = 0; trial < 25; ++trial) {
        const Poly p = random_poly(ring, rng), q = random_poly(ring, rng),
                   r = random_poly(ring, rng);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
        CHECK((p + q) * (p + q) == p * p + q * q);  // Frobenius
    }
}

TEST_CASE("substitution is multiplicative") {
    std::mt19937 rng(7);
    auto ring = make_ring(make_field(2), 2);
    std::vector<Poly> images;
    for (int v = 0; v < ring->nvars(); ++v) {
        Poly img = Poly::zero(ring);
        for (int t = 0; t < ring->nvars(); ++t)
            img = img + Poly::variable(ring, t).scaled(static_cast<Fq>(rng() % 4));
        if (img.is_zero()) img = Poly::variable(ring, v);
        images.push_back(img);
    }
    for (int trial = 0; trial < 10; ++trial) {
        const Poly p = random_poly(ring, rng, 4, 2), q = random_poly(ring, rng, 4, 2);
        CHECK((p * q).substitute_linear(images) ==
              p.substitute_linear(images) * q.substitute_linear(images));
    }
}

TEST_CASE("text format round trip") {
    std::mt19937 rng(11);
    auto ring = make_ring(make_field(3), 2);
    CHECK(Poly::parse(ring, "0").is_zero());
    CHECK(Poly::zero(ring).to_string() == "0");
    CHECK(Poly::parse(ring, "5*x1^2*y2 + x2 + 1").to_string() == "1 + x2 + 5*x1^2*y2");
    for (int trial = 0; trial < 25; ++trial) {
        const Poly p = random_poly(ring, rng);
        CHECK(Poly::parse(ring, p.to_string()) == p);
    }
}

TEST_CASE("context mismatches are rejected") {
    auto r1 = make_ring(make_field(2), 2);
    auto r2 = make_ring(make_field(3), 2);
    auto r3 = make_ring(make_field(2), 3);
    const Poly a = Poly::parse(r1, "x1");
    CHECK_THROWS_AS(a + Poly::parse(r2, "x1"), usage_error);
    CHECK_THROWS_AS(a * Poly::parse(r3, "x1"), usage_error);
    // same parameters, distinct context objects: values, not identities
    auto r1b = make_ring(make_field(2), 2);
    CHECK(a + Poly::parse(r1b, "x1") == Poly::zero(r1));
}

TEST_CASE("formal derivatives in characteristic 2") {
    auto ring = make_ring(make_field(2), 1);
    const Poly e = Poly::parse(ring, "x1*y1^4 + x1^4*y1");
    CHECK(e.derivative(0).to_string() == "y1^4");
    CHECK(e.derivative(1).to_string() == "x1^4");
    CHECK(Poly::parse(ring, "x1^2").derivative(0).is_zero());
}

TEST_SUITE_END();

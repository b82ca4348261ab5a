#include <algorithm>

#include "doctest.h"
#include "modinv/errors.hpp"
#include "modinv/families.hpp"

using namespace modinv;

namespace {

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_SUITE_BEGIN("families");

TEST_CASE("plus families at small shapes") {
    auto f4 = make_field(2);

    auto two = build_plus_generators(make_ring(f4, 2));
    CHECK(two.distinct_polynomials().size() == 7);  // q+3 for two copies
    // the paired-index family collapses to the single crossing polynomial
    const auto d_items = two.by_tag(FamilyTag::D);
    REQUIRE(d_items.size() == 1);
    CHECK(d_items[0].poly == gen_U(two.ring, 0, 1));

    auto three = build_plus_generators(make_ring(f4, 3));
    CHECK(three.by_tag(FamilyTag::B).size() == 10);  // q(q+1)/2
    CHECK(three.distinct_polynomials().size() == 16);

    auto five = build_plus_generators(make_ring(f4, 5));
    const auto d5 = five.by_tag(FamilyTag::D);
    const bool has_gap_element = std::any_of(d5.begin(), d5.end(), [](const GeneratorItem& it) {
        return it.degree == 5;
    });
    CHECK(has_gap_element);  // |J| - |I| = q-1 first appears at five copies
}

TEST_CASE("mirror family size matches the composition count") {
    for (int s : {2, 3})
        for (int m : {1, 2, 3, 4}) {
            auto ring = make_ring(make_field(s), m);
            const auto set = build_plus_generators(ring);
            const long long q = ring->field().q();
            CHECK(long long(set.by_tag(FamilyTag::B).size()) == binom(q - 2 + m, m - 1));
        }
}

TEST_CASE("sylow families and their minimal subsets") {
    auto f4 = make_field(2);
    auto one = build_sylow_generators(make_ring(f4, 1));
    CHECK(one.minimal_items().size() == 2);  // L1 and N1

    auto two = build_sylow_generators(make_ring(f4, 2));
    CHECK(two.minimal_items().size() == 5);

    auto three = build_sylow_generators(make_ring(f4, 3));
    CHECK(three.minimal_items().size() == 10);
    // exactly one squarefree mirror sum of degree >= 3 at three copies
    const auto minimal = three.minimal_items();
    CHECK(std::count_if(minimal.begin(), minimal.end(), [](const GeneratorItem& it) {
              return it.tag == FamilyTag::Bprime;
          }) == 1);
}

TEST_CASE("minus-type pair") {
    auto f4 = make_field(2);
    auto ring = make_ring(f4, 1);
    const auto table = build_group(f4, GroupKind::minus);
    const auto set = build_minus_generators(ring, table);
    REQUIRE(set.items.size() == 2);
    CHECK(set.items[0].tag == FamilyTag::E);
    CHECK(set.items[0].degree == 5);  // q+1
    CHECK(set.items[1].tag == FamilyTag::Q);
    CHECK(set.items[1].degree == 2);
    const QuadraticForm qf = quadratic_coefficients(set.items[1].poly);
    CHECK(qf.u != 0);
    for (const auto& item : set.items) CHECK(is_invariant(item.poly, table));

    auto f8 = make_field(3);
    const auto set8 = build_minus_generators(make_ring(f8, 1),
                                             build_group(f8, GroupKind::minus));
    CHECK(set8.items[0].degree == 9);

    CHECK_THROWS_AS(build_minus_generators(make_ring(f4, 2), table), usage_error);
}

TEST_CASE("general crossed products") {
    auto ring = make_ring(make_field(2), 2);
    const std::vector<int> I{0}, J{1}, ones{1};
    CHECK(build_d_general(ring, I, J, ones, ones) == gen_U(ring, 0, 1));
    // coinciding singleton supports cancel in characteristic 2
    CHECK(build_d_general(ring, I, I, ones, ones).is_zero());

    auto ring4 = make_ring(make_field(2), 4);
    const std::vector<int> I2{0, 1}, J2{2, 3}, ones2{1, 1};
    CHECK(build_d_general(ring4, I2, J2, ones2, ones2) ==
          Poly::parse(ring4, "x1*x2*y3*y4 + x3*x4*y1*y2"));

    CHECK_THROWS_AS(build_d_general(ring, {}, J, {}, ones), usage_error);
    CHECK_THROWS_AS(build_d_general(ring, I, J, std::vector<int>{0}, ones), usage_error);
}

TEST_CASE("mirror sums are invariant exactly when q-1 divides the degree") {
    for (int s : {2, 3}) {
        auto f = make_field(s);
        const int q = int(f->q());
        auto ring = make_ring(f, 2);
        const auto plus = build_group(f, GroupKind::plus);
        for (int a = 0; a <= 2 * (q - 1); ++a)
            for (int b = 0; a + b <= 2 * (q - 1); ++b) {
                if (a + b == 0) continue;
                const std::vector<int> alpha{a, b};
                const Poly p = gen_B(ring, alpha);
                CHECK(is_invariant(p, plus) == ((a + b) % (q - 1) == 0));
            }
    }
}

TEST_CASE("every built family is invariant under its group") {
    auto f4 = make_field(2);
    auto ring = make_ring(f4, 2);
    const auto plus = build_group(f4, GroupKind::plus);
    const auto sylow = build_group(f4, GroupKind::sylow);
    for (const auto& item : build_plus_generators(ring).items)
        CHECK(is_invariant(item.poly, plus));
    for (const auto& item : build_sylow_generators(ring).items)
        CHECK(is_invariant(item.poly, sylow));
}

TEST_SUITE_END();

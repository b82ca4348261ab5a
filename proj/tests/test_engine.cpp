#include <algorithm>

#include "doctest.h"
#include "modinv/engine.hpp"
#include "modinv/errors.hpp"

using namespace modinv;

namespace {

const CheckRecord& find_check(const GradedReport& report, const std::string& anchor) {
    for (const auto& c : report.checks)
        if (c.anchor == anchor) return c;
    REQUIRE_MESSAGE(false, "missing check " + anchor);
    static CheckRecord dummy;
    return dummy;
}

}  // namespace

TEST_SUITE_BEGIN("engine");

TEST_CASE("generation holds for the full plus family") {
    auto f = make_field(2);
    auto ring = make_ring(f, 2);
    const auto table = build_group(f, GroupKind::plus);
    const auto gens = build_plus_generators(ring);
    const auto report = generation_check(gens, table, 8);
    const auto& check = find_check(report, "plus.generation");
    CHECK(check.status == "pass");
    for (const auto& row : check.degrees) CHECK(row.dim_closure == row.dim_invariants);
}

TEST_CASE("generation fails without the odd-degree generators") {
    auto f = make_field(2);
    auto ring = make_ring(f, 2);
    const auto table = build_group(f, GroupKind::plus);
    auto gens = build_plus_generators(ring);
    gens.items.erase(std::remove_if(gens.items.begin(), gens.items.end(),
                                    [](const GeneratorItem& it) {
                                        return it.tag == FamilyTag::B || it.tag == FamilyTag::D;
                                    }),
                     gens.items.end());
    const auto report = generation_check(gens, table, 3);
    const auto& check = find_check(report, "plus.generation");
    CHECK(check.status == "fail");
    CHECK(check.degrees[3].dim_closure == 0);
    CHECK(check.degrees[3].dim_invariants == 4);
    REQUIRE_FALSE(check.witnesses.empty());
    // the witness reproduces its verdict from scratch
    const Poly witness = Poly::parse(ring, check.witnesses.front());
    CHECK(is_invariant(witness, table));
    std::vector<Poly> quadratics;
    for (const auto& item : gens.items) quadratics.push_back(item.poly);
    CHECK_FALSE(span(ring, quadratics, 2).dim() == 0);
    // nothing of odd degree: the cube of the mirror sum is not reachable
    const Poly b0 = gen_B(ring, std::vector<int>{0, 3});
    CHECK_FALSE(span(ring, {}, 3).contains(b0));
}

TEST_CASE("non-invariant generators are rejected up front") {
    auto f = make_field(2);
    auto ring = make_ring(f, 2);
    const auto table = build_group(f, GroupKind::plus);
    GeneratorSet bogus{GroupKind::plus, ring,
                       {{"x1", FamilyTag::N, Poly::variable(ring, 0), 1}}};
    CHECK_THROWS_AS(generation_check(bogus, table, 3), precondition_error);
}

TEST_CASE("sylow generation") {
    auto f = make_field(2);
    auto ring = make_ring(f, 2);
    const auto table = build_group(f, GroupKind::sylow);
    const auto gens = build_sylow_generators(ring);
    CHECK(find_check(generation_check(gens, table, 8), "sylow.generation").status == "pass");
}

TEST_CASE("minimality for two copies over GF(4)") {
    auto f = make_field(2);
    auto ring = make_ring(f, 2);
    const auto table = build_group(f, GroupKind::plus);
    const auto gens = build_plus_generators(ring);
    const auto report = minimality_report(gens, table, 8);

    const auto& tally = find_check(report, "plus.minimality");
    CHECK(tally.status == "pass");
    for (const auto& row : tally.degrees) {
        if (row.d == 2) CHECK(row.min_generators == 3);
        else if (row.d == 3) CHECK(row.min_generators == 4);
        else CHECK(row.min_generators == 0);
    }
    CHECK(find_check(report, "plus.indecomposable").status == "pass");
    const auto& noether = find_check(report, "plus.noether");
    CHECK(noether.status == "pass");
    CHECK(noether.note.find("computed 3") != std::string::npos);
}

TEST_CASE("noether numbers at desk scale") {
    auto res42 = noether_number(make_field(2), 2, 8);
    CHECK(res42.computed == 3);
    CHECK(res42.expected == 3);
    CHECK(res42.exact);

    auto res82 = noether_number(make_field(3), 2, 10);
    CHECK(res82.computed == 7);
    CHECK(res82.expected == 7);
}

TEST_CASE("free module structure at q = 4") {
    const auto report = free_module_check(make_field(2), 8);
    const auto& size = find_check(report, "free-module.size");
    CHECK(size.status == "pass");
    CHECK(size.note.find("6 elements") != std::string::npos);
    CHECK(size.note.find("{0,2,3,3,4,6}") != std::string::npos);

    const auto& span_check = find_check(report, "free-module.span");
    CHECK(span_check.status == "pass");
    CHECK(span_check.degrees[3].series_coefficient == 4);
    CHECK(span_check.degrees[3].dim_invariants == 4);

    CHECK(find_check(report, "free-module.witness").status == "pass");
}

TEST_CASE("hilbert ideal for two copies over GF(4)") {
    const auto report = hilbert_ideal_check(make_field(2), 2, 8);
    const auto& bound = find_check(report, "hilbert-ideal.degree-bound");
    CHECK(bound.status == "pass");
    CHECK(bound.note.find("degree is 3") != std::string::npos);
    const auto& graded = find_check(report, "hilbert-ideal.graded");
    CHECK(graded.status == "pass");
    for (const auto& row : graded.degrees) {
        CHECK(row.dim_family_ideal == row.dim_invariant_ideal);
        if (row.d < 2) CHECK(row.dim_family_ideal == 0);
    }
}

TEST_CASE("transfer membership suite at q = 4, two copies") {
    const auto report =
        transfer_membership_suite(make_field(2), 2, default_transfer_bounds(4, 2));
    for (const auto& check : report.checks) {
        INFO(check.name);
        CHECK(check.status == "pass");
    }
}

TEST_CASE("identity suite at q = 4") {
    const auto report = identity_suite(make_field(2));
    CHECK(find_check(report, "identity.recurrence").status == "pass");
    CHECK(find_check(report, "identity.top-power-module").status == "pass");
    CHECK(find_check(report, "identity.crossed-powers").status == "pass");
    CHECK(find_check(report, "identity.mirror-products").status == "pass");
    const auto& reported = find_check(report, "identity.top-power");
    CHECK(reported.status == "reported");
    const bool has_verdict = reported.note.find("holds") != std::string::npos;
    CHECK(has_verdict);

    // the degenerate second crossed power collapses to the square
    auto ring = make_ring(make_field(2), 2);
    const Poly v2 = build_d_general(ring, std::vector<int>{0}, std::vector<int>{1},
                                    std::vector<int>{2}, std::vector<int>{2});
    CHECK(v2 == gen_U(ring, 0, 1).pow(2));
}

TEST_CASE("univariate and minus-type reports at q = 4") {
    const auto report = univariate_reports(make_field(2), 12, 6);
    const auto& plus_series = find_check(report, "series.plus");
    CHECK(plus_series.status == "pass");
    CHECK(plus_series.degrees[5].dim_invariants == 1);

    const auto& minus_series = find_check(report, "series.minus");
    CHECK(minus_series.status == "pass");
    CHECK(minus_series.degrees[2].dim_invariants == 1);

    CHECK(find_check(report, "minus.jacobian").status == "pass");

    const auto& count = find_check(report, "minus.generator-count");
    CHECK(count.status == "reported");
    CHECK(count.note.find("q+5 = 9") != std::string::npos);
}

TEST_CASE("minimal counts are independent of the kernel mode") {
    auto f = make_field(2);
    set_default_echelon_mode(EchelonMode::serial);
    const auto serial = noether_number(f, 2, 6);
    set_default_echelon_mode(EchelonMode::parallel);
    const auto parallel = noether_number(f, 2, 6);
    REQUIRE(serial.degrees.size() == parallel.degrees.size());
    for (std::size_t i = 0; i < serial.degrees.size(); ++i)
        CHECK(serial.degrees[i].min_generators == parallel.degrees[i].min_generators);
}

TEST_SUITE_END();

// Acceptance suite: every exit criterion at its exact (zero-tolerance)
// parameters, one pass/fail line per criterion.  The five-copy top-degree
// run is the long pole; --skip-slow leaves it out and --only-slow runs
// nothing else, so the two halves can be scheduled separately.

#include <chrono>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "modinv/engine.hpp"
#include "modinv/errors.hpp"

using namespace modinv;

namespace {

int g_failures = 0;

void report(int number, const std::string& label, bool ok, double seconds) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << label << "  ("
              << seconds << " s)\n"
              << std::flush;
    if (!ok) ++g_failures;
}

template <typename Fn>
void criterion(int number, const std::string& label, Fn&& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& err) {
        detail = err.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(number, label + (detail.empty() ? "" : " — " + detail), ok, secs);
}

bool checks_pass(const GradedReport& rep, const std::string& anchor, std::string& detail) {
    for (const auto& c : rep.checks)
        if (c.anchor == anchor) {
            if (c.status == "pass") return true;
            detail = c.name + ": " + c.status + (c.note.empty() ? "" : " (" + c.note + ")");
            return false;
        }
    detail = "missing check " + anchor;
    return false;
}

const CheckRecord* find(const GradedReport& rep, const std::string& anchor) {
    for (const auto& c : rep.checks)
        if (c.anchor == anchor) return &c;
    return nullptr;
}

}  // namespace

int main(int argc, char** argv) {
    bool skip_slow = false, only_slow = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--skip-slow") == 0) skip_slow = true;
        if (std::strcmp(argv[i], "--only-slow") == 0) only_slow = true;
    }

    auto f4 = make_field(2);
    auto f8 = make_field(3);

    if (!only_slow) {
        criterion(1, "group orders 6/10/14/18 with cross-validation", [&](std::string& detail) {
            struct Shape {
                FieldPtr field;
                GroupKind kind;
                std::size_t order;
            };
            const std::vector<Shape> shapes{{f4, GroupKind::plus, 6},
                                            {f4, GroupKind::minus, 10},
                                            {f8, GroupKind::plus, 14},
                                            {f8, GroupKind::minus, 18}};
            for (const auto& s : shapes) {
                const auto table = build_group(s.field, s.kind);
                if (table.order() != s.order) {
                    detail = to_string(s.kind) + " over GF(" + std::to_string(s.field->q()) +
                             "): order " + std::to_string(table.order());
                    return false;
                }
            }
            return true;
        });

        criterion(2, "one-copy plus-type dimensions match the series to degree 20",
                  [&](std::string& detail) {
                      for (auto field : {f4, f8}) {
                          const auto rep = univariate_reports(field, 20, 2);
                          if (!checks_pass(rep, "series.plus", detail)) return false;
                      }
                      return true;
                  });

        criterion(3, "family invariance and the divisibility criterion", [&](std::string& detail) {
            for (auto field : {f4, f8}) {
                const int q = int(field->q());
                const auto plus = build_group(field, GroupKind::plus);
                for (int m : {2, 3}) {
                    auto ring = make_ring(field, m);
                    for (const auto& item : build_plus_generators(ring).items)
                        if (!is_invariant(item.poly, plus)) {
                            detail = item.label + " not invariant";
                            return false;
                        }
                    // mirror sums with q-1 not dividing the degree must move
                    std::vector<int> alpha(m, 0);
                    auto rec = [&](auto&& self, int pos, int remaining) -> bool {
                        if (pos == m) {
                            int total = 0;
                            for (int e : alpha) total += e;
                            if (total == 0 || total % (q - 1) == 0) return true;
                            if (is_invariant(gen_B(ring, alpha), plus)) {
                                detail = "unexpected invariance at degree " + std::to_string(total);
                                return false;
                            }
                            return true;
                        }
                        for (int e = 0; e <= remaining; ++e) {
                            alpha[pos] = e;
                            if (!self(self, pos + 1, remaining - e)) return false;
                            alpha[pos] = 0;
                        }
                        return true;
                    };
                    if (!rec(rec, 0, 2 * (q - 1))) return false;
                }
            }
            return true;
        });

        criterion(4, "generation at (4,2,16), (4,3,10), (8,2,12)", [&](std::string& detail) {
            struct Shape {
                FieldPtr field;
                int m, cutoff;
            };
            for (const auto& s : std::vector<Shape>{{f4, 2, 16}, {f4, 3, 10}, {f8, 2, 12}}) {
                auto ring = make_ring(s.field, s.m);
                const auto table = build_group(s.field, GroupKind::plus);
                const auto rep =
                    generation_check(build_plus_generators(ring), table, s.cutoff);
                if (!checks_pass(rep, "plus.generation", detail)) {
                    detail = "(q=" + std::to_string(s.field->q()) + ", m=" +
                             std::to_string(s.m) + "): " + detail;
                    return false;
                }
            }
            return true;
        });

        criterion(5, "minimal totals 7/16/42 and indecomposability", [&](std::string& detail) {
            struct Shape {
                FieldPtr field;
                int m, cutoff;
                long long total;
            };
            for (const auto& s :
                 std::vector<Shape>{{f4, 2, 8, 7}, {f4, 3, 8, 16}, {f8, 3, 8, 42}}) {
                auto ring = make_ring(s.field, s.m);
                const auto table = build_group(s.field, GroupKind::plus);
                const auto gens = build_plus_generators(ring);
                if (long long(gens.minimal_items().size()) != s.total) {
                    detail = "family size " + std::to_string(gens.minimal_items().size());
                    return false;
                }
                const auto rep = minimality_report(gens, table, s.cutoff);
                if (!checks_pass(rep, "plus.minimality", detail) ||
                    !checks_pass(rep, "plus.indecomposable", detail)) {
                    detail = "(q=" + std::to_string(s.field->q()) + ", m=" +
                             std::to_string(s.m) + "): " + detail;
                    return false;
                }
                const auto* tally = find(rep, "plus.minimality");
                long long total = 0;
                for (const auto& row : tally->degrees) total += std::max(0LL, row.min_generators);
                if (total != s.total) {
                    detail = "computed total " + std::to_string(total);
                    return false;
                }
            }
            return true;
        });
    }

    // criterion 6 spans both halves: the five-copy case is the slow one
    {
        struct Shape {
            FieldPtr field;
            int m, cutoff, expected;
            bool slow;
        };
        const std::vector<Shape> shapes{{f4, 2, 8, 3, false},
                                        {f4, 3, 8, 3, false},
                                        {f4, 5, 7, 5, true},
                                        {f8, 2, 10, 7, false}};
        for (const auto& s : shapes) {
            if (s.slow ? skip_slow : only_slow) continue;
            criterion(6,
                      "top generator degree " + std::to_string(s.expected) + " at (q=" +
                          std::to_string(s.field->q()) + ", m=" + std::to_string(s.m) +
                          ", cutoff=" + std::to_string(s.cutoff) + ")" +
                          (s.slow ? " [slow]" : ""),
                      [&](std::string& detail) {
                          const auto res = noether_number(s.field, s.m, s.cutoff);
                          if (res.computed != s.expected || !res.exact) {
                              detail = "computed " + std::to_string(res.computed) +
                                       (res.exact ? "" : " (not exact)");
                              return false;
                          }
                          return true;
                      });
        }
    }

    if (!only_slow) {
        criterion(7, "free module: size 2(q-1), spanning, series, witness",
                  [&](std::string& detail) {
                      for (auto field : {f4, f8}) {
                          const int q = int(field->q());
                          const auto rep = free_module_check(field, 2 * (q - 1) + 2);
                          if (!checks_pass(rep, "free-module.size", detail) ||
                              !checks_pass(rep, "free-module.span", detail))
                              return false;
                          if (q == 4 && !checks_pass(rep, "free-module.witness", detail))
                              return false;
                      }
                      return true;
                  });

        criterion(8, "hilbert ideal equality to degree 10 with bound q-1",
                  [&](std::string& detail) {
                      for (int m : {2, 3}) {
                          const auto rep = hilbert_ideal_check(f4, m, 10);
                          if (!checks_pass(rep, "hilbert-ideal.graded", detail) ||
                              !checks_pass(rep, "hilbert-ideal.degree-bound", detail)) {
                              detail = "m=" + std::to_string(m) + ": " + detail;
                              return false;
                          }
                      }
                      return true;
                  });

        criterion(9, "transfer suite over GF(4) for two and three copies",
                  [&](std::string& detail) {
                      for (int m : {2, 3}) {
                          const auto rep =
                              transfer_membership_suite(f4, m, default_transfer_bounds(4, m));
                          for (const auto& c : rep.checks)
                              if (c.status != "pass") {
                                  detail = "m=" + std::to_string(m) + ", " + c.name + ": " +
                                           c.status;
                                  return false;
                              }
                      }
                      return true;
                  });

        criterion(10, "identity suite with the reported top-power record",
                  [&](std::string& detail) {
                      for (auto field : {f4, f8}) {
                          const auto rep = identity_suite(field);
                          if (!checks_pass(rep, "identity.recurrence", detail) ||
                              !checks_pass(rep, "identity.crossed-powers", detail) ||
                              !checks_pass(rep, "identity.mirror-products", detail) ||
                              !checks_pass(rep, "identity.top-power-module", detail))
                              return false;
                          const auto* reported = find(rep, "identity.top-power");
                          if (!reported || reported->status != "reported" ||
                              reported->note.find("holds") == std::string::npos) {
                              detail = "top-power record missing its computed truth value";
                              return false;
                          }
                      }
                      return true;
                  });

        criterion(11, "sylow generation and minimal counts 5/10 over GF(4)",
                  [&](std::string& detail) {
                      const auto table = build_group(f4, GroupKind::sylow);
                      for (int m : {1, 2, 3}) {
                          auto ring = make_ring(f4, m);
                          const auto gens = build_sylow_generators(ring);
                          if (!checks_pass(generation_check(gens, table, 10), "sylow.generation",
                                           detail)) {
                              detail = "m=" + std::to_string(m) + ": " + detail;
                              return false;
                          }
                          const auto rep = minimality_report(gens, table, 10);
                          if (!checks_pass(rep, "sylow.minimality", detail) ||
                              !checks_pass(rep, "sylow.indecomposable", detail)) {
                              detail = "m=" + std::to_string(m) + ": " + detail;
                              return false;
                          }
                          const std::size_t expected = m == 2 ? 5 : (m == 3 ? 10 : 2);
                          if (gens.minimal_items().size() != expected) {
                              detail = "m=" + std::to_string(m) + ": family size " +
                                       std::to_string(gens.minimal_items().size());
                              return false;
                          }
                      }
                      return true;
                  });

        criterion(12, "minus type: series to 20, quadratic form, Jacobian, count report",
                  [&](std::string& detail) {
                      const auto rep = univariate_reports(f4, 20, int(f4->q()) + 4);
                      if (!checks_pass(rep, "series.minus", detail) ||
                          !checks_pass(rep, "minus.jacobian", detail))
                          return false;
                      const auto* count = find(rep, "minus.generator-count");
                      if (!count || count->status != "reported" ||
                          count->note.find("q+5 = 9") == std::string::npos) {
                          detail = "count record is not reported next to q+5";
                          return false;
                      }
                      return true;
                  });
    }

    std::cout << (g_failures == 0 ? "acceptance: all criteria passed\n"
                                  : "acceptance: " + std::to_string(g_failures) + " failed\n");
    return g_failures == 0 ? 0 : 1;
}

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modinv/families.hpp"
#include "modinv/linalg.hpp"

namespace modinv {

// One graded row of a check table.  Negative entries mean "not applicable"
// and are omitted from serialized output.
struct DegreeRow {
    int d = 0;
    long long dim_invariants = -1;
    long long dim_closure = -1;
    long long dim_decomposables = -1;
    long long min_generators = -1;
    long long dim_family_ideal = -1;
    long long dim_invariant_ideal = -1;
    long long series_coefficient = -1;
};

struct CheckRecord {
    std::string name;
    std::string anchor;  // stable machine-readable check id
    std::string status;  // "pass" | "fail" | "reported"
    std::string note;
    std::vector<DegreeRow> degrees;
    std::vector<std::string> witnesses;
};

struct GradedReport {
    int q = 0;
    int m = 0;
    std::string group;
    int cutoff = 0;
    std::vector<CheckRecord> checks;

    bool any_fail() const;
    void append(GradedReport other);
};

// Cached graded dimensions keyed by (q, modulus, m, group, degree).
// Lookup only; (de)serialization lives with the CLI.
class DimCache {
public:
    static std::string key(const GF2s& field, int m, GroupKind kind, int d);
    std::optional<long long> get(const std::string& key) const;
    void put(const std::string& key, long long value);
    const std::map<std::string, long long>& entries() const { return entries_; }
    void set(std::map<std::string, long long> entries) { entries_ = std::move(entries); }

private:
    std::map<std::string, long long> entries_;
};

// Default degree cutoff: every generator degree plus one extra layer.
int default_cutoff(int q, int m);

// dim of the degree-d piece of the invariant ring, through the cache.
long long invariant_dimension(RingPtr ring, const GroupTable& table, int d,
                              DimCache* cache = nullptr);

// Subalgebra closure dimensions versus invariant dimensions at every
// degree up to the cutoff.
GradedReport generation_check(const GeneratorSet& gens, const GroupTable& table, int cutoff,
                              DimCache* cache = nullptr);

// Decomposable spans, per-degree minimal generator counts, indecomposability
// of the declared minimal family, and (plus type) the top generator degree
// against max(q-1, m).
GradedReport minimality_report(const GeneratorSet& gens, const GroupTable& table, int cutoff);

// Per-degree minimal generator counts alone (no generating family needed).
struct NoetherResult {
    int computed = 0;        // largest degree with a positive count, 0 if none
    bool exact = false;      // zero counts strictly above it within the cutoff
    int expected = 0;        // max(q-1, m) for the plus type
    int cutoff = 0;
    std::vector<DegreeRow> degrees;
};
NoetherResult noether_number(FieldPtr field, int m, int cutoff, GroupKind kind = GroupKind::plus);

// m = 2: module basis size, spanning over the four-parameter subring, and
// the exact Hilbert-series comparison.
GradedReport free_module_check(FieldPtr field, int cutoff);

// Graded equality of the ideal generated by the N/U/B families with the
// ideal generated by all positive-degree invariants, inside the full
// polynomial ring; plus the generator degree bound.
GradedReport hilbert_ideal_check(FieldPtr field, int m, int cutoff);

struct TransferBounds {
    int max_alpha_total = 0;  // |alpha| bound for transfer arguments
    int max_power = 0;        // exponent bound for the binomial congruence
    int max_degree = 0;       // total-degree cutoff for tested instances
};
TransferBounds default_transfer_bounds(int q, int m);

// The relative-transfer membership suite against the ideal generated by
// the plus-type families inside the swap-fixed subring.
GradedReport transfer_membership_suite(FieldPtr field, int m, TransferBounds bounds);

// m = 2 polynomial identities and module memberships, including the
// reported (not asserted) two-parameter-subring membership of the top
// power of the crossing invariant.
GradedReport identity_suite(FieldPtr field);

// Univariate series checks for both types, the Jacobian identity of the
// minus-type pair, and the reported minus-type m = 2 generator count.
GradedReport univariate_reports(FieldPtr field, int series_cutoff, int minus_m2_cutoff,
                                DimCache* cache = nullptr);

}  // namespace modinv

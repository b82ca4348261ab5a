#include "modinv/report.hpp"

#include <chrono>
#include <fstream>

#include "json.hpp"
#include "modinv/errors.hpp"

namespace modinv {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json degree_row_json(const DegreeRow& row) {
    ordered_json j;
    j["d"] = row.d;
    if (row.dim_invariants >= 0) j["dim_invariants"] = row.dim_invariants;
    if (row.dim_closure >= 0) j["dim_closure"] = row.dim_closure;
    if (row.dim_decomposables >= 0) j["dim_decomposables"] = row.dim_decomposables;
    if (row.min_generators >= 0) j["min_generators"] = row.min_generators;
    if (row.dim_family_ideal >= 0) j["dim_family_ideal"] = row.dim_family_ideal;
    if (row.dim_invariant_ideal >= 0) j["dim_invariant_ideal"] = row.dim_invariant_ideal;
    if (row.series_coefficient >= 0) j["series_coefficient"] = row.series_coefficient;
    return j;
}

ordered_json check_json(const CheckRecord& check) {
    ordered_json j;
    j["name"] = check.name;
    j["anchor"] = check.anchor;
    j["status"] = check.status;
    if (!check.note.empty()) j["note"] = check.note;
    j["degrees"] = ordered_json::array();
    for (const auto& row : check.degrees) j["degrees"].push_back(degree_row_json(row));
    j["witnesses"] = check.witnesses;
    return j;
}

FieldInfo field_info(const GF2s& f) {
    return FieldInfo{f.s(), f.q(), GF2s::poly_bits_to_string(f.modulus()), f.primitive(), f.w()};
}

FieldPtr field_from_config(const RunConfig& config, std::vector<std::string>& warnings) {
    std::optional<std::uint32_t> modulus;
    if (!config.modulus_csv.empty())
        modulus = GF2s::parse_modulus_exponents(config.modulus_csv);
    if (config.s > 4)
        warnings.push_back("field exponent " + std::to_string(config.s) +
                           " is outside the bundled acceptance profiles (2..4); expect long runs");
    return make_field(config.s, modulus);
}

CheckRecord integrity_check_record(const std::string& name, const std::string& anchor,
                                   const std::exception& err) {
    CheckRecord c;
    c.name = name;
    c.anchor = anchor;
    c.status = "fail";
    c.note = err.what();
    return c;
}

CheckRecord group_record(FieldPtr field, GroupKind kind) {
    CheckRecord c;
    c.name = std::string(to_string(kind)) + "-type group enumeration";
    c.anchor = "group." + to_string(kind);
    try {
        const GroupTable table = build_group(field, kind);
        c.status = "pass";
        c.note = "order " + std::to_string(table.order()) + "; cross-validation passed";
        for (const auto& n : table.notes) c.note += "; " + n;
        for (const auto& g : table.generators) c.witnesses.push_back(mat_to_string(g));
    } catch (const integrity_error& err) {
        c.status = "fail";
        c.note = err.what();
    }
    return c;
}

int effective_cutoff(const RunConfig& config, int q) {
    return config.max_degree > 0 ? config.max_degree : default_cutoff(q, config.m);
}

void run_verify(const RunConfig& config, FieldPtr field, DimCache* cache,
                std::vector<CheckRecord>& checks) {
    const int q = int(field->q());
    const int cutoff = effective_cutoff(config, q);
    const bool all = config.all;
    RingPtr ring = make_ring(field, config.m);

    if (all || config.generation || config.minimality) {
        const GroupTable plus = build_group(field, GroupKind::plus);
        const GroupTable sylow = build_group(field, GroupKind::sylow);
        const GeneratorSet plus_gens = build_plus_generators(ring);
        const GeneratorSet sylow_gens = build_sylow_generators(ring);
        if (all || config.generation) {
            for (auto& c : generation_check(plus_gens, plus, cutoff, cache).checks)
                checks.push_back(std::move(c));
            for (auto& c : generation_check(sylow_gens, sylow, cutoff, cache).checks)
                checks.push_back(std::move(c));
        }
        if (all || config.minimality) {
            for (auto& c : minimality_report(plus_gens, plus, cutoff).checks)
                checks.push_back(std::move(c));
            for (auto& c : minimality_report(sylow_gens, sylow, cutoff).checks)
                checks.push_back(std::move(c));
        }
    }
    if (all || config.free_module)
        for (auto& c : free_module_check(field, std::max(cutoff, 2 * (q - 1) + 2)).checks)
            checks.push_back(std::move(c));
    if (all || config.hilbert_ideal)
        for (auto& c : hilbert_ideal_check(field, config.m, cutoff).checks)
            checks.push_back(std::move(c));
    if (all || config.transfer_suite) {
        TransferBounds bounds = default_transfer_bounds(q, config.m);
        bounds.max_degree = std::min(bounds.max_degree, cutoff);
        for (auto& c : transfer_membership_suite(field, config.m, bounds).checks)
            checks.push_back(std::move(c));
    }
    if (all || config.identity_suite)
        for (auto& c : identity_suite(field).checks) checks.push_back(std::move(c));
}

}  // namespace

bool ReportDocument::any_fail() const {
    for (const auto& c : checks)
        if (c.status == "fail") return true;
    return false;
}

ReportDocument run(const RunConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    ReportDocument doc;
    doc.config = config;

    FieldPtr field = field_from_config(config, doc.warnings);
    doc.field = field_info(*field);

    DimCache cache;
    if (!config.cache_path.empty()) {
        std::string warning;
        cache = load_cache(config.cache_path, &warning);
        if (!warning.empty()) doc.warnings.push_back(warning);
    }
    DimCache* cache_ptr = config.cache_path.empty() ? nullptr : &cache;

    const int q = int(field->q());
    if (config.command == "group") {
        doc.checks.push_back(group_record(field, group_kind_from_string(config.group)));
    } else if (config.command == "generators") {
        const GroupKind kind = group_kind_from_string(config.group);
        CheckRecord c;
        c.name = config.group + " generator families";
        c.anchor = "families." + config.group;
        try {
            RingPtr ring = make_ring(field, config.m);
            GeneratorSet set = kind == GroupKind::plus    ? build_plus_generators(ring)
                               : kind == GroupKind::sylow ? build_sylow_generators(ring)
                                                          : build_minus_generators(
                                                                ring, build_group(field, kind));
            c.status = "pass";
            c.note = std::to_string(set.items.size()) + " items; " +
                     std::to_string(set.distinct_polynomials().size()) + " distinct, " +
                     std::to_string(set.minimal_items().size()) + " minimal";
            for (const auto& item : set.items)
                c.witnesses.push_back("[" + to_string(item.tag) + "] " + item.label +
                                      " (degree " + std::to_string(item.degree) + ") = " +
                                      item.poly.to_string());
        } catch (const integrity_error& err) {
            c.status = "fail";
            c.note = err.what();
        }
        doc.checks.push_back(std::move(c));
    } else if (config.command == "dims") {
        const GroupKind kind = group_kind_from_string(config.group);
        const int cutoff = effective_cutoff(config, q);
        CheckRecord c;
        c.name = config.group + "-type invariant dimensions";
        c.anchor = "dims." + config.group;
        c.status = "pass";
        try {
            RingPtr ring = make_ring(field, config.m);
            const GroupTable table = build_group(field, kind);
            for (int d = 0; d <= cutoff; ++d) {
                DegreeRow row;
                row.d = d;
                row.dim_invariants = invariant_dimension(ring, table, d, cache_ptr);
                c.degrees.push_back(row);
            }
        } catch (const integrity_error& err) {
            c.status = "fail";
            c.note = err.what();
        }
        doc.checks.push_back(std::move(c));
    } else if (config.command == "verify") {
        try {
            run_verify(config, field, cache_ptr, doc.checks);
        } catch (const integrity_error& err) {
            doc.checks.push_back(integrity_check_record("verification", "verify", err));
        }
    } else if (config.command == "noether") {
        const int cutoff = effective_cutoff(config, q);
        CheckRecord c;
        c.name = "top minimal generator degree";
        c.anchor = "plus.noether";
        try {
            const NoetherResult res = noether_number(field, config.m, cutoff);
            c.degrees = res.degrees;
            if (cutoff < res.expected) {
                c.status = "reported";
                c.note = "cutoff " + std::to_string(cutoff) + " is below the expected degree " +
                         std::to_string(res.expected);
            } else {
                c.status = res.computed == res.expected ? "pass" : "fail";
                c.note = "computed " + std::to_string(res.computed) +
                         ", expected max(q-1, m) = " + std::to_string(res.expected) +
                         (res.exact ? " (verified up to cutoff " + std::to_string(cutoff) + ")"
                                    : " (cutoff-bounded)");
            }
        } catch (const integrity_error& err) {
            c.status = "fail";
            c.note = err.what();
        }
        doc.checks.push_back(std::move(c));
    } else if (config.command == "o2minus") {
        doc.checks.push_back(group_record(field, GroupKind::minus));
        try {
            const int series_cutoff = config.max_degree > 0 ? config.max_degree : 20;
            for (auto& c : univariate_reports(field, series_cutoff, q + 4, cache_ptr).checks)
                doc.checks.push_back(std::move(c));
        } catch (const integrity_error& err) {
            doc.checks.push_back(integrity_check_record("minus-type reports", "o2minus", err));
        }
    } else if (config.command == "report") {
        doc.checks.push_back(group_record(field, GroupKind::plus));
        doc.checks.push_back(group_record(field, GroupKind::minus));
        try {
            RunConfig full = config;
            full.all = true;
            run_verify(full, field, cache_ptr, doc.checks);
            const int series_cutoff = config.max_degree > 0 ? config.max_degree : 20;
            for (auto& c : univariate_reports(field, series_cutoff, q + 4, cache_ptr).checks)
                doc.checks.push_back(std::move(c));
        } catch (const integrity_error& err) {
            doc.checks.push_back(integrity_check_record("full report", "report", err));
        }
    } else {
        throw usage_error("unknown command '" + config.command + "'");
    }

    if (cache_ptr) save_cache(cache, config.cache_path);
    doc.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return doc;
}

std::string to_json(const ReportDocument& doc, bool include_timing) {
    ordered_json j;
    j["config"] = {{"command", doc.config.command},
                   {"s", doc.config.s},
                   {"m", doc.config.m},
                   {"group", doc.config.group},
                   {"max_degree", doc.config.max_degree},
                   {"format", doc.config.format},
                   {"modulus", doc.config.modulus_csv.empty() ? "default" : doc.config.modulus_csv}};
    j["field"] = {{"s", doc.field.s},
                  {"q", doc.field.q},
                  {"modulus", doc.field.modulus},
                  {"primitive", doc.field.primitive},
                  {"w", doc.field.w}};
    j["checks"] = ordered_json::array();
    for (const auto& c : doc.checks) j["checks"].push_back(check_json(c));
    j["warnings"] = doc.warnings;
    if (include_timing) j["timing"] = doc.seconds;
    return j.dump(2) + "\n";
}

std::string to_text(const ReportDocument& doc) {
    std::string out;
    out += "modinv " + doc.config.command + "  (q = " + std::to_string(doc.field.q) +
           ", m = " + std::to_string(doc.config.m) + ")\n";
    out += "field: modulus " + doc.field.modulus + ", primitive " +
           std::to_string(doc.field.primitive) + ", w " + std::to_string(doc.field.w) + "\n";
    for (const auto& warning : doc.warnings) out += "warning: " + warning + "\n";
    for (const auto& c : doc.checks) {
        std::string tag = c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "INFO";
        out += "[" + tag + "] " + c.name;
        if (!c.note.empty()) out += ": " + c.note;
        out += "\n";
        if (!c.degrees.empty()) {
            out += "    d:";
            for (const auto& row : c.degrees) out += " " + std::to_string(row.d);
            out += "\n";
            auto line = [&](const char* label, auto getter) {
                bool any = false;
                for (const auto& row : c.degrees)
                    if (getter(row) >= 0) any = true;
                if (!any) return;
                out += std::string("    ") + label + ":";
                for (const auto& row : c.degrees) {
                    const long long v = getter(row);
                    out += " " + (v >= 0 ? std::to_string(v) : std::string("-"));
                }
                out += "\n";
            };
            line("dim_inv", [](const DegreeRow& r) { return r.dim_invariants; });
            line("dim_closure", [](const DegreeRow& r) { return r.dim_closure; });
            line("dim_decomp", [](const DegreeRow& r) { return r.dim_decomposables; });
            line("min_gens", [](const DegreeRow& r) { return r.min_generators; });
            line("ideal_family", [](const DegreeRow& r) { return r.dim_family_ideal; });
            line("ideal_invariant", [](const DegreeRow& r) { return r.dim_invariant_ideal; });
            line("series", [](const DegreeRow& r) { return r.series_coefficient; });
        }
        for (const auto& w : c.witnesses) out += "    witness: " + w + "\n";
    }
    out += "result: " + std::string(doc.any_fail() ? "FAIL" : "OK") + " (" +
           std::to_string(doc.seconds) + " s)\n";
    return out;
}

DimCache load_cache(const std::string& path, std::string* warning) {
    DimCache cache;
    std::ifstream in(path);
    if (!in) return cache;  // fresh cache file
    try {
        ordered_json j;
        in >> j;
        std::map<std::string, long long> entries;
        for (const auto& [key, value] : j.at("dims").items())
            entries[key] = value.get<long long>();
        cache.set(std::move(entries));
    } catch (const std::exception& err) {
        if (warning) *warning = std::string("ignoring corrupt cache: ") + err.what();
        cache.set({});
    }
    return cache;
}

void save_cache(const DimCache& cache, const std::string& path) {
    ordered_json j;
    j["dims"] = ordered_json::object();
    for (const auto& [key, value] : cache.entries()) j["dims"][key] = value;
    std::ofstream out(path);
    if (out) out << j.dump(2) << "\n";
}

}  // namespace modinv

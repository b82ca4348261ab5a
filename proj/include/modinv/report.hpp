#pragma once

#include <string>
#include <vector>

#include "modinv/engine.hpp"

namespace modinv {

struct RunConfig {
    std::string command;
    int s = 2;
    int m = 2;
    std::string group = "plus";
    int max_degree = -1;  // -1: use the engine default
    std::string format = "text";
    std::string cache_path;
    std::string modulus_csv;
    // verify selections
    bool generation = false;
    bool minimality = false;
    bool free_module = false;
    bool hilbert_ideal = false;
    bool transfer_suite = false;
    bool identity_suite = false;
    bool all = false;
};

struct FieldInfo {
    int s = 0;
    std::uint32_t q = 0;
    std::string modulus;
    Fq primitive = 0;
    Fq w = 0;
};

struct ReportDocument {
    RunConfig config;
    FieldInfo field;
    std::vector<CheckRecord> checks;
    std::vector<std::string> warnings;
    double seconds = 0.0;

    bool any_fail() const;
    int exit_code() const { return any_fail() ? 1 : 0; }
};

// Dispatches the configured command against the engine.  Integrity errors
// from cross-validation become fail records rather than exceptions.
ReportDocument run(const RunConfig& config);

// Deterministic serialization: stable key order, degrees ascending.  The
// timing field is emitted only when include_timing is set.
std::string to_json(const ReportDocument& doc, bool include_timing = true);
std::string to_text(const ReportDocument& doc);

// Cache file handling; a corrupt cache is dropped with a warning string.
DimCache load_cache(const std::string& path, std::string* warning);
void save_cache(const DimCache& cache, const std::string& path);

}  // namespace modinv

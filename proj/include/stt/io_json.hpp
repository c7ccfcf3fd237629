#pragma once

#include "stt/cocycle.hpp"
#include "stt/equidist.hpp"
#include "stt/haar_moments.hpp"
#include "stt/st_group.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace stt {

/// Fixed-format float for byte-stable artifacts.
std::string fmt_double(double v);

std::string cyclotomic_to_json(const Cyclotomic& z);

STGroupSpec load_st_spec(const std::string& path);
void save_st_spec(const STGroupSpec& spec, const std::string& path);

Cocycle2 load_cocycle(const std::string& path);
std::string splitting_to_json(const Splitting& s);

void write_moment_csv(const MomentTable& table, const std::string& path);
void write_moment_json(const MomentTable& table, const std::string& path);

void write_report_json(const TestReport& report, const std::string& path);
std::string report_to_text(const TestReport& report);

/// CLI run configuration. JSON with schema_version 1; unknown keys are
/// rejected.
struct RunConfig {
    int schema_version = 1;
    std::string spec_builtin;    // one of: su2, rm_swap, z4_scalar_twist, pauli_twist
    std::string spec_path;       // alternative: spec JSON file
    std::string data_source;     // curve | csv | mc
    std::vector<long long> curve;   // a1,a2,a3,a4,a6
    std::string csv_path;
    std::string cocycle_path;
    long long prime_bound = 0;
    int n_max = 6;
    std::optional<std::uint64_t> seed;
    std::int64_t num_samples = 1000000;
    double z_threshold = 4.0;
    double d_threshold = 0.03;
    std::vector<long long> excluded_primes;
    int e_max = 2;
    unsigned max_order = 16;
    int bins = 40;
    long long label_modulus = 0;
    std::map<long long, int> label_classes;
};

RunConfig load_run_config(const std::string& path);

/// Resolve the group blueprint named by the config (builtin or file).
STGroupSpec resolve_spec(const RunConfig& config);

} // namespace stt

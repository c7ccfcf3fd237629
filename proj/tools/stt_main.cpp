#include "stt/cocycle.hpp"
#include "stt/coeff_table.hpp"
#include "stt/dirichlet.hpp"
#include "stt/elliptic.hpp"
#include "stt/equidist.hpp"
#include "stt/errors.hpp"
#include "stt/haar_moments.hpp"
#include "stt/io_json.hpp"
#include "stt/rng.hpp"
#include "stt/st_group.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>

namespace fs = std::filesystem;
using namespace stt;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitTestFailure = 1;
constexpr int kExitInputError = 2;

std::uint64_t require_seed(const RunConfig& config) {
    if (!config.seed) throw Error("this command draws random samples: a seed is required");
    return *config.seed;
}

fs::path out_file(const std::string& out_dir, const std::string& name) {
    fs::create_directories(out_dir);
    return fs::path(out_dir) / name;
}

int cmd_moments(const RunConfig& config, const std::string& out_dir) {
    STGroupSpec spec = resolve_spec(config);
    auto report = validate_spec(spec);
    if (!report.ok()) throw Error("invalid spec: " + report.failures.front());
    MomentTable table = group_trace_moments(spec, config.n_max);
    MomentTable mc = mc_moments(spec, config.n_max, config.num_samples, require_seed(config));
    table.merge_mc(mc);
    write_moment_csv(table, out_file(out_dir, "moments.csv").string());
    write_moment_json(table, out_file(out_dir, "moments.json").string());
    std::cout << "wrote moments for n <= " << config.n_max << " ("
              << config.num_samples << " MC samples)\n";
    return kExitPass;
}

int cmd_sample(const RunConfig& config, const std::string& out_dir) {
    STGroupSpec spec = resolve_spec(config);
    std::uint64_t seed = require_seed(config);
    auto classes = spec.gamma.conjugacy_classes();
    auto class_of = spec.gamma.class_map(classes);
    std::ofstream out(out_file(out_dir, "samples.csv"), std::ios::binary);
    out << "index,component,class,trace_re,trace_im\n";
    const std::int64_t chunk_size = 1 << 16;
    std::int64_t done = 0;
    std::uint64_t chunk = 0;
    while (done < config.num_samples) {
        std::int64_t todo = std::min(chunk_size, config.num_samples - done);
        Rng rng(derive_stream_seed(seed, chunk++));
        for (std::int64_t i = 0; i < todo; ++i) {
            STElement el = sample_element_rng(spec, rng);
            auto t = trace(spec, el);
            out << (done + i) << ',' << el.component << ',' << class_of[el.component] << ','
                << fmt_double(t.real()) << ',' << fmt_double(t.imag()) << "\n";
        }
        done += todo;
    }
    std::cout << "wrote " << config.num_samples << " samples\n";
    return kExitPass;
}

EllipticCurve curve_from_config(const RunConfig& config) {
    if (config.curve.size() != 5)
        throw Error("config must supply curve = [a1,a2,a3,a4,a6]");
    EllipticCurve e;
    e.a1 = config.curve[0];
    e.a2 = config.curve[1];
    e.a3 = config.curve[2];
    e.a4 = config.curve[3];
    e.a6 = config.curve[4];
    for (long long p : config.excluded_primes) e.bad_primes.insert(p);
    if (e.discriminant() == 0) throw Error("curve is singular (discriminant 0)");
    return e;
}

CoefficientTable curve_records(const RunConfig& config) {
    EllipticCurve e = curve_from_config(config);
    long long bound = config.prime_bound > 0 ? config.prime_bound : 1000;
    CoefficientTable table;
    std::vector<long long> bad;
    for (long long p : primes_up_to(bound)) {
        if (!e.good_reduction(p)) {
            bad.push_back(p);
            continue;
        }
        PrimeRecord r;
        r.p = p;
        r.a = QuadFieldElem::from_rational(Rat(ap_point_count(e, p)));
        if (config.label_modulus > 0) {
            if (config.label_modulus > 1 &&
                std::gcd(p, config.label_modulus) != 1) {
                bad.push_back(p);
                continue;
            }
            r.class_label =
                frobenius_class_label(p, config.label_modulus, config.label_classes);
        }
        table.records.push_back(std::move(r));
    }
    table.D = 0;
    return table;
}

int cmd_ec_trace(const RunConfig& config, const std::string& out_dir) {
    EllipticCurve e = curve_from_config(config);
    long long bound = config.prime_bound > 0 ? config.prime_bound : 1000;
    CoefficientTable table;
    std::vector<long long> bad;
    for (long long p : primes_up_to(bound)) {
        if (!e.good_reduction(p)) {
            bad.push_back(p);
            continue;
        }
        PrimeRecord r;
        r.p = p;
        r.a = QuadFieldElem::from_rational(Rat(ap_point_count(e, p)));
        table.records.push_back(std::move(r));
    }
    write_coefficients(table, out_file(out_dir, "ap.csv").string());
    std::ofstream sidecar(out_file(out_dir, "excluded_primes.txt"), std::ios::binary);
    for (long long p : bad) sidecar << p << "\n";
    std::cout << "wrote " << table.records.size() << " records, " << bad.size()
              << " excluded primes\n";
    return kExitPass;
}

int cmd_test(const RunConfig& config, const std::string& out_dir) {
    STGroupSpec spec = resolve_spec(config);
    CompareConfig cc{config.n_max, config.z_threshold, config.d_threshold};
    TestReport report;
    std::vector<double> samples;

    if (config.data_source == "mc") {
        std::uint64_t seed = require_seed(config);
        auto classes = spec.gamma.conjugacy_classes();
        auto class_of = spec.gamma.class_map(classes);
        std::vector<int> labels;
        const std::int64_t chunk_size = 1 << 16;
        std::int64_t done = 0;
        std::uint64_t chunk = 0;
        while (done < config.num_samples) {
            std::int64_t todo = std::min(chunk_size, config.num_samples - done);
            Rng rng(derive_stream_seed(seed, chunk++));
            for (std::int64_t i = 0; i < todo; ++i) {
                STElement el = sample_element_rng(spec, rng);
                samples.push_back(trace(spec, el).real());
                labels.push_back(class_of[el.component]);
            }
            done += todo;
        }
        report = compare_samples(spec, samples, labels, cc);
    } else if (config.data_source == "csv") {
        if (config.csv_path.empty()) throw Error("data_source csv requires csv_path");
        CoefficientTable table = load_coefficients(config.csv_path);
        if (config.label_modulus > 0) {
            for (auto& r : table.records)
                r.class_label = frobenius_class_label(r.p, config.label_modulus,
                                                      config.label_classes);
        }
        report = compare(spec, table.records, cc);
        for (const auto& r : table.records) samples.push_back(normalize(r, 1));
    } else if (config.data_source == "curve") {
        CoefficientTable table = curve_records(config);
        report = compare(spec, table.records, cc);
        for (const auto& r : table.records) samples.push_back(normalize(r, 1));
    } else {
        throw Error("data_source must be one of: curve, csv, mc");
    }

    write_report_json(report, out_file(out_dir, "report.json").string());
    {
        std::ofstream txt(out_file(out_dir, "report.txt"), std::ios::binary);
        txt << report_to_text(report);
    }
    write_histogram_csv(trace_histogram(samples, config.bins),
                        out_file(out_dir, "histogram.csv").string());
    std::cout << report_to_text(report);
    return report.pass ? kExitPass : kExitTestFailure;
}

int cmd_verify_cocycle(const RunConfig& config, const std::string& out_dir) {
    if (config.cocycle_path.empty()) throw Error("verify-cocycle requires cocycle_path");
    Cocycle2 c;
    if (config.cocycle_path == "builtin:carry_v4")
        c = carry_cocycle_klein_four();
    else if (config.cocycle_path == "builtin:quaternion_v4")
        c = quaternion_cocycle_klein_four();
    else
        c = load_cocycle(config.cocycle_path);
    if (!verify_cocycle(c)) throw NotACocycle("cocycle identity fails on some triple");
    SplitResult result = split_cocycle(c, config.max_order);
    std::ofstream out(out_file(out_dir, "cocycle_result.json"), std::ios::binary);
    if (result.ok()) {
        std::string j = splitting_to_json(*result.splitting);
        out << j << "\n";
        std::cout << "cocycle is a coboundary; splitting written\n" << j << "\n";
    } else {
        out << "{\n  \"split\": false,\n  \"smallest_tested_order\": "
            << result.obstruction.smallest_tested_order << ",\n  \"rank_defect\": "
            << result.obstruction.rank_defect << "\n}\n";
        std::cout << "cocycle is NOT a coboundary up to order " << config.max_order
                  << " (rank defect " << result.obstruction.rank_defect << " at order "
                  << result.obstruction.smallest_tested_order << ")\n";
    }
    return kExitPass;
}

int cmd_irreps(const RunConfig& config, const std::string& out_dir) {
    STGroupSpec spec = resolve_spec(config);
    ComponentGroupData h_data = component_group_data(spec);
    auto labels = enumerate_irreps(spec, config.e_max, h_data);
    std::ofstream out(out_file(out_dir, "irreps.csv"), std::ios::binary);
    out << "index,e,eta_index,eta_degree,degree,trivial\n";
    for (size_t i = 0; i < labels.size(); ++i) {
        const auto& l = labels[i];
        out << i << ',';
        for (size_t b = 0; b < l.e.size(); ++b) out << (b ? ";" : "") << l.e[b];
        long long deg = l.eta_degree;
        for (int e : l.e) deg *= e + 1;
        out << ',' << l.eta_index << ',' << l.eta_degree << ',' << deg << ','
            << (l.trivial ? 1 : 0) << "\n";
    }
    std::cout << "enumerated " << labels.size() << " irreducible labels (|H| = "
              << h_data.h.elements.size() << ")\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sato-Tate group structures: exact moments, cocycles, Frobenius statistics"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".";
    std::optional<std::uint64_t> seed_override;
    app.add_option("--config", config_path, "JSON run configuration")->required();
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--seed", seed_override, "override the config seed");

    auto* moments = app.add_subcommand("moments", "exact + MC trace moments of a spec");
    auto* sample = app.add_subcommand("sample", "draw Haar samples from a spec");
    auto* ec = app.add_subcommand("ec-trace", "a_p records for an elliptic curve");
    auto* test = app.add_subcommand("test", "equidistribution test report");
    auto* vc = app.add_subcommand("verify-cocycle", "verify and split a 2-cocycle");
    auto* irreps = app.add_subcommand("irreps", "enumerate irreducible representations");

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig config = load_run_config(config_path);
        if (seed_override) config.seed = *seed_override;
        if (moments->parsed()) return cmd_moments(config, out_dir);
        if (sample->parsed()) return cmd_sample(config, out_dir);
        if (ec->parsed()) return cmd_ec_trace(config, out_dir);
        if (test->parsed()) return cmd_test(config, out_dir);
        if (vc->parsed()) return cmd_verify_cocycle(config, out_dir);
        if (irreps->parsed()) return cmd_irreps(config, out_dir);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

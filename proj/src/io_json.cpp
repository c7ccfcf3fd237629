#include "stt/io_json.hpp"

#include "stt/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

using nlohmann::json;

namespace stt {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

json rat_to_json(const Rat& q) {
    std::ostringstream num, den;
    num << boost::multiprecision::numerator(q);
    den << boost::multiprecision::denominator(q);
    return json{{"num", num.str()}, {"den", den.str()}};
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(BigInt(s));
        return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    }
    return Rat(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
}

json cyc_to_json(const Cyclotomic& z) {
    json coeffs = json::array();
    for (const auto& c : z.coeffs()) coeffs.push_back(rat_to_json(c));
    return json{{"order", z.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyc_from_json(const json& j) {
    if (j.is_number_integer()) return Cyclotomic::rational(Rat(j.get<long long>()));
    if (j.is_object() && j.contains("root")) {
        // shorthand {"root": N, "power": k} for zeta_N^k
        return Cyclotomic::root_of_unity(j.at("root").get<unsigned>(),
                                         j.value("power", 1LL));
    }
    unsigned order = j.at("order").get<unsigned>();
    std::vector<Rat> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rat_from_json(c));
    return Cyclotomic::from_coeffs(order, coeffs);
}

json group_to_json(const FiniteGroup& g) { return json{{"order", g.order()}, {"mul", g.mul}}; }

FiniteGroup group_from_json(const json& j) {
    return FiniteGroup::from_table(j.at("mul").get<std::vector<std::vector<int>>>());
}

json matrix_to_json(const CycMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(cyc_to_json(m.at(i, k)));
        rows.push_back(row);
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

CycMatrix matrix_from_json(const json& j) {
    int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
    CycMatrix m(rows, cols);
    const auto& entries = j.at("entries");
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) m.at(i, k) = cyc_from_json(entries.at(i).at(k));
    return m;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what(),
                         static_cast<long long>(e.byte));
    }
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw Error("unknown key '" + it.key() + "' in " + where);
}

} // namespace

std::string cyclotomic_to_json(const Cyclotomic& z) { return cyc_to_json(z).dump(); }

STGroupSpec load_st_spec(const std::string& path) {
    json j = load_json_file(path);
    reject_unknown_keys(j, {"schema_version", "m", "a", "gamma", "action", "block_dims",
                            "twists"},
                        "spec file " + path);
    if (j.value("schema_version", 1) != 1) throw Error("unsupported spec schema_version");
    STGroupSpec spec;
    spec.m = j.at("m").get<int>();
    spec.a = j.value("a", 1);
    spec.gamma = group_from_json(j.at("gamma"));
    spec.action = j.at("action").get<std::vector<std::vector<int>>>();
    if (j.contains("block_dims"))
        spec.block_dims = j.at("block_dims").get<std::vector<int>>();
    else
        spec.block_dims.assign(spec.m, 2);
    for (const auto& row : j.at("twists")) {
        std::vector<CycMatrix> tw;
        for (const auto& entry : row) tw.push_back(matrix_from_json(entry));
        spec.twists.push_back(std::move(tw));
    }
    auto report = validate_spec(spec);
    if (!report.ok()) throw Error("invalid spec " + path + ": " + report.failures.front());
    return spec;
}

void save_st_spec(const STGroupSpec& spec, const std::string& path) {
    json twists = json::array();
    for (const auto& row : spec.twists) {
        json jr = json::array();
        for (const auto& m : row) jr.push_back(matrix_to_json(m));
        twists.push_back(jr);
    }
    json j{{"schema_version", 1},      {"m", spec.m},
           {"a", spec.a},              {"gamma", group_to_json(spec.gamma)},
           {"action", spec.action},    {"block_dims", spec.block_dims},
           {"twists", twists}};
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

Cocycle2 load_cocycle(const std::string& path) {
    json j = load_json_file(path);
    reject_unknown_keys(j, {"schema_version", "group", "values"}, "cocycle file " + path);
    Cocycle2 c;
    c.group = group_from_json(j.at("group"));
    const auto& values = j.at("values");
    int n = c.group.order();
    if (static_cast<int>(values.size()) != n)
        throw Error("cocycle value table has wrong size in " + path);
    c.values.resize(n);
    for (int s = 0; s < n; ++s) {
        if (static_cast<int>(values.at(s).size()) != n)
            throw Error("cocycle value table has wrong size in " + path);
        for (int t = 0; t < n; ++t) c.values[s].push_back(cyc_from_json(values.at(s).at(t)));
    }
    return c;
}

std::string splitting_to_json(const Splitting& s) {
    json alpha = json::array();
    for (const auto& v : s.alpha) alpha.push_back(cyc_to_json(v));
    return json{{"group", group_to_json(s.group)}, {"alpha", alpha}}.dump(2);
}

void write_moment_csv(const MomentTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << "order,component_class,exact_num,exact_den,mc_estimate_re,mc_estimate_im,mc_stderr\n";
    for (const auto& e : table.entries) {
        out << e.order << ',' << e.component_class << ',';
        if (e.exact && e.exact->is_rational()) {
            Rat v = e.exact->rational_value();
            out << boost::multiprecision::numerator(v) << ','
                << boost::multiprecision::denominator(v);
        } else {
            out << ',';
        }
        out << ',';
        if (e.mc_estimate)
            out << fmt_double(e.mc_estimate->real()) << ',' << fmt_double(e.mc_estimate->imag())
                << ',' << fmt_double(e.mc_stderr);
        else
            out << ",,";
        out << "\n";
    }
}

void write_moment_json(const MomentTable& table, const std::string& path) {
    json entries = json::array();
    for (const auto& e : table.entries) {
        json row{{"order", e.order}, {"component_class", e.component_class}};
        if (e.exact) {
            row["exact"] = cyc_to_json(*e.exact);
            row["exact_value_re"] = fmt_double(e.exact->to_complex().real());
        }
        if (e.mc_estimate) {
            row["mc_estimate_re"] = fmt_double(e.mc_estimate->real());
            row["mc_estimate_im"] = fmt_double(e.mc_estimate->imag());
            row["mc_stderr"] = fmt_double(e.mc_stderr);
        }
        entries.push_back(row);
    }
    json j{{"n_max", table.n_max}, {"class_names", table.class_names}, {"entries", entries}};
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

void write_report_json(const TestReport& report, const std::string& path) {
    json moments = json::array();
    for (const auto& m : report.moments)
        moments.push_back(json{{"order", m.order},
                               {"component_class", m.component_class},
                               {"theoretical", fmt_double(m.theoretical)},
                               {"empirical", fmt_double(m.empirical)},
                               {"stderr", fmt_double(m.stderr_)},
                               {"z", fmt_double(m.z)},
                               {"pass", m.pass}});
    json j{{"moments", moments},
           {"class_sample_sizes", report.class_sample_sizes},
           {"total_samples", report.total_samples},
           {"z_threshold", fmt_double(report.z_threshold)},
           {"d_threshold", fmt_double(report.d_threshold)},
           {"pass", report.pass}};
    if (report.ks) {
        j["ks"] = fmt_double(*report.ks);
        j["ks_pass"] = report.ks_pass;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

std::string report_to_text(const TestReport& report) {
    std::ostringstream os;
    os << "order class theoretical empirical stderr z pass\n";
    for (const auto& m : report.moments) {
        os << m.order << ' '
           << (m.component_class < 0 ? std::string("all") : std::to_string(m.component_class))
           << ' ' << fmt_double(m.theoretical) << ' ' << fmt_double(m.empirical) << ' '
           << fmt_double(m.stderr_) << ' ' << fmt_double(m.z) << ' '
           << (m.pass ? "pass" : "FAIL") << "\n";
    }
    if (report.ks)
        os << "ks " << fmt_double(*report.ks) << ' ' << (report.ks_pass ? "pass" : "FAIL")
           << "\n";
    os << "samples " << report.total_samples << "\n";
    os << "verdict " << (report.pass ? "pass" : "FAIL") << "\n";
    return os.str();
}

RunConfig load_run_config(const std::string& path) {
    json j = load_json_file(path);
    reject_unknown_keys(j,
                        {"schema_version", "spec", "spec_path", "data_source", "curve",
                         "csv_path", "cocycle_path", "prime_bound", "n_max", "seed",
                         "num_samples", "z_threshold", "d_threshold", "excluded_primes",
                         "e_max", "max_order", "bins", "label_modulus", "label_classes"},
                        "config " + path);
    RunConfig c;
    c.schema_version = j.value("schema_version", 0);
    if (c.schema_version != 1) throw Error("config " + path + ": schema_version must be 1");
    c.spec_builtin = j.value("spec", "");
    c.spec_path = j.value("spec_path", "");
    c.data_source = j.value("data_source", "");
    if (j.contains("curve")) {
        c.curve = j.at("curve").get<std::vector<long long>>();
        if (c.curve.size() != 5)
            throw Error("config " + path + ": curve needs 5 coefficients a1,a2,a3,a4,a6");
    }
    c.csv_path = j.value("csv_path", "");
    c.cocycle_path = j.value("cocycle_path", "");
    c.prime_bound = j.value("prime_bound", 0LL);
    c.n_max = j.value("n_max", 6);
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    c.num_samples = j.value("num_samples", static_cast<std::int64_t>(1000000));
    c.z_threshold = j.value("z_threshold", 4.0);
    c.d_threshold = j.value("d_threshold", 0.03);
    if (j.contains("excluded_primes"))
        c.excluded_primes = j.at("excluded_primes").get<std::vector<long long>>();
    c.e_max = j.value("e_max", 2);
    c.max_order = j.value("max_order", 16u);
    c.bins = j.value("bins", 40);
    c.label_modulus = j.value("label_modulus", 0LL);
    if (j.contains("label_classes"))
        for (auto it = j.at("label_classes").begin(); it != j.at("label_classes").end(); ++it)
            c.label_classes[std::stoll(it.key())] = it.value().get<int>();
    return c;
}

STGroupSpec resolve_spec(const RunConfig& config) {
    if (!config.spec_path.empty()) return load_st_spec(config.spec_path);
    const std::string& name = config.spec_builtin.empty() ? "su2" : config.spec_builtin;
    if (name == "su2") return STGroupSpec::su2();
    if (name == "rm_swap") return STGroupSpec::rm_swap();
    if (name == "z4_scalar_twist") return STGroupSpec::z4_scalar_twist();
    if (name == "pauli_twist") return STGroupSpec::pauli_twist();
    throw Error("unknown builtin spec '" + name + "'");
}

} // namespace stt

// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any fail. argv[1] is the path to the stt CLI
// binary (used by the determinism criterion).

#include "stt/cocycle.hpp"
#include "stt/coeff_table.hpp"
#include "stt/elliptic.hpp"
#include "stt/equidist.hpp"
#include "stt/errors.hpp"
#include "stt/haar_moments.hpp"
#include "stt/io_json.hpp"
#include "stt/rng.hpp"
#include "stt/st_group.hpp"
#include "stt/unitary_rep.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <vector>

using namespace stt;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok,
            const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

// Simpson after the smoothing substitution t = 2cos(theta)
double quadrature_moment(int n) {
    const int panels = 1 << 12;
    const double h = std::numbers::pi / panels;
    auto f = [n](double theta) {
        double s = std::sin(theta);
        return std::pow(2.0 * std::cos(theta), n) * s * s * 2.0 / std::numbers::pi;
    };
    double acc = f(0.0) + f(std::numbers::pi);
    for (int i = 1; i < panels; ++i) acc += f(i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// ------------------------------------------------------------------ 1
void criterion1() {
    const long long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    bool ok = true;
    std::string detail;
    for (int k = 0; k <= 8; ++k) {
        if (su2_trace_moment(2 * k) != Rat(catalan[k])) {
            ok = false;
            detail = "Catalan mismatch at n = " + std::to_string(2 * k);
        }
    }
    for (int n = 0; n <= 16; ++n) {
        double exact = su2_trace_moment(n).convert_to<double>();
        if (std::abs(exact - quadrature_moment(n)) > 1e-10) {
            ok = false;
            detail = "quadrature mismatch at n = " + std::to_string(n);
        }
    }
    auto mc = mc_moments(STGroupSpec::su2(), 8, 1000000, 1001);
    for (int n = 1; n <= 8; ++n) {
        const auto* e = mc.find(n, -1);
        double exact = su2_trace_moment(n).convert_to<double>();
        if (std::abs(e->mc_estimate->real() - exact) > 4 * e->mc_stderr) {
            ok = false;
            detail = "MC off at n = " + std::to_string(n);
        }
    }
    report(1, "SU(2) moment oracle (Catalan, quadrature 1e-10, MC 4 stderr)", ok, detail);
}

// ------------------------------------------------------------------ 2
void criterion2() {
    auto spec = STGroupSpec::rm_swap();
    auto exact = group_trace_moments(spec, 8);
    auto mc = mc_moments(spec, 8, 10000000, 1002);
    bool ok = true;
    std::string detail;
    for (const auto& e : exact.entries) {
        const auto* m = mc.find(e.order, e.component_class);
        if (!m || !m->mc_estimate) {
            ok = false;
            continue;
        }
        std::complex<double> target = e.exact->to_complex();
        double err = std::abs(*m->mc_estimate - target);
        double tol = 4 * m->mc_stderr + 1e-12;
        if (err > tol) {
            ok = false;
            detail = "order " + std::to_string(e.order) + " class " +
                     std::to_string(e.component_class) + " err " + std::to_string(err);
        }
    }
    report(2, "product-group moments exact vs MC at 1e7 samples", ok, detail);
}

// ------------------------------------------------------------------ 3
void criterion3() {
    bool ok = true;
    std::string detail;
    Rng rng(1003);
    for (const auto& [name, g] : small_groups_up_to_8()) {
        for (int trial = 0; trial < 100; ++trial) {
            Splitting alpha = Splitting::trivial(g);
            for (int s = 0; s < g.order(); ++s)
                if (s != g.identity)
                    alpha.alpha[s] = Cyclotomic::root_of_unity(
                        8, static_cast<long long>(rng.next_index(8)));
            auto c = coboundary(alpha);
            auto r = split_cocycle(c, 16);
            if (!r.ok() || coboundary(*r.splitting).values != c.values) {
                ok = false;
                detail = "coboundary not split on " + name;
            }
        }
    }
    auto carry = carry_cocycle_klein_four();
    if (!verify_cocycle(carry)) ok = false;
    if (split_cocycle_exhaustive(carry, 2).has_value()) {
        ok = false;
        detail = "carry class split in mu_2";
    }
    auto brute4 = split_cocycle_exhaustive(carry, 4);
    if (!brute4 || coboundary(*brute4).values != carry.values) {
        ok = false;
        detail = "carry class not split in mu_4 (exhaustive)";
    }
    auto solved = split_cocycle(carry, 4);
    if (!solved.ok() || coboundary(*solved.splitting).values != carry.values) {
        ok = false;
        detail = "carry class not split in mu_4 (solver)";
    }
    report(3, "cocycle suite (all |G| <= 8 x 100 coboundaries; Klein-four class "
              "unsplittable in mu_2, split in mu_4, exhaustively cross-checked)",
           ok, detail);
}

// ------------------------------------------------------------------ 4
void criterion4() {
    bool ok = true;
    std::string detail;

    // twist_projective_rep: regular reps scaled by random mu_8 cochains
    Rng rng(1004);
    for (const auto& [name, g] : small_groups_up_to_8()) {
        for (int trial = 0; trial < 5; ++trial) {
            Splitting alpha = Splitting::trivial(g);
            for (int s = 0; s < g.order(); ++s)
                if (s != g.identity)
                    alpha.alpha[s] = Cyclotomic::root_of_unity(
                        8, static_cast<long long>(rng.next_index(8)));
            auto c = coboundary(alpha);
            auto rho = UnitaryRep::regular(g);
            UnitaryRep proj = rho;
            for (int s = 0; s < g.order(); ++s)
                proj.images[s] = rho.images[s].scaled(alpha.alpha[s]);
            auto fixed = twist_projective_rep(proj, c, alpha);
            if (!fixed.is_genuine()) {
                ok = false;
                detail = "twist not genuine on " + name;
            }
        }
    }

    // build_eta_e families: G = Z/2a, theta(s) = diag(z, z^-1)^s with z of
    // order 2a, H = <theta(1), -I>, all sign choices, e <= 4
    for (int a = 1; a <= 4; ++a) {
        auto g = FiniteGroup::cyclic(2 * a);
        unsigned n = 2 * static_cast<unsigned>(a);
        CycMatrix u(2, 2);
        u.at(0, 0) = Cyclotomic::root_of_unity(n, 1);
        u.at(1, 1) = Cyclotomic::root_of_unity(n, -1);
        auto h = MatrixGroup::closure({u, -CycMatrix::identity(2)});
        if (h.elements.size() > 48) {
            ok = false;
            detail = "H too large";
            continue;
        }
        UnitaryRep theta;
        theta.group = g;
        theta.dim = 2;
        CycMatrix acc = CycMatrix::identity(2);
        for (int s = 0; s < g.order(); ++s) {
            theta.images.push_back(acc);
            acc = acc * u;
        }
        auto eps = UnitaryRep::trivial(g);
        auto table = character_table(h.group);
        int minus = h.find(-CycMatrix::identity(2));
        for (int e = 0; e <= 4; ++e) {
            // eta candidates of matching parity: 1-dim rows for even e, the
            // inclusion for odd e
            std::vector<UnitaryRep> etas;
            if (e % 2 == 0) {
                for (size_t row = 0; row < table.chars.size(); ++row) {
                    if (table.degrees[row] != 1) continue;
                    if (table.value(static_cast<int>(row), minus) != Cyclotomic::one())
                        continue;
                    std::vector<Cyclotomic> vals;
                    for (int s = 0; s < h.group.order(); ++s)
                        vals.push_back(table.value(static_cast<int>(row), s));
                    etas.push_back(UnitaryRep::one_dim(h.group, vals));
                }
            } else {
                etas.push_back(h.inclusion_rep());
            }
            for (const auto& eta : etas) {
                if (eta.images[minus] !=
                    (e % 2 ? -CycMatrix::identity(eta.dim) : CycMatrix::identity(eta.dim)))
                    continue;
                UnitaryRep reference;
                bool have_reference = false;
                Rng sign_rng(static_cast<std::uint64_t>(100 * a + e));
                for (int rerand = 0; rerand < 4; ++rerand) {
                    std::vector<Cyclotomic> sqrt_choice(g.order(), Cyclotomic::one());
                    for (int s = 0; s < g.order(); ++s)
                        if (sign_rng.next_index(2) == 1)
                            sqrt_choice[s] = -Cyclotomic::one();
                    sqrt_choice[g.identity] = Cyclotomic::one();
                    auto rep = build_eta_e(theta, h, eta, eps, e, sqrt_choice);
                    if (!rep.is_genuine()) {
                        ok = false;
                        detail = "eta_e not genuine (a=" + std::to_string(a) +
                                 ", e=" + std::to_string(e) + ")";
                    }
                    if (!have_reference) {
                        reference = rep;
                        have_reference = true;
                    } else {
                        for (int s = 0; s < g.order(); ++s)
                            if (rep.images[s] != reference.images[s]) {
                                ok = false;
                                detail = "eta_e depends on the sign choice";
                            }
                    }
                }
            }
        }
    }
    report(4, "representation twisting exact on all pairs; eta_e sign-choice invariant",
           ok, detail);
}

// ------------------------------------------------------------------ 5
void criterion5() {
    // conductor-37 curve y^2 + y = x^3 - x (non-CM), good p < 1e5
    EllipticCurve e{0, 0, 1, -1, 0, {}};
    std::vector<double> t;
    for (long long p : primes_up_to(100000)) {
        if (!e.good_reduction(p)) continue;
        t.push_back(static_cast<double>(ap_point_count(e, p)) /
                    std::sqrt(static_cast<double>(p)));
    }
    bool ok = true;
    std::string detail;
    double d = ks_statistic(t, semicircle_cdf);
    if (d >= 0.03) {
        ok = false;
        detail = "KS = " + std::to_string(d);
    }
    auto mom = empirical_moments(t, 6);
    for (int n = 1; n <= 6; ++n) {
        double target = su2_trace_moment(n).convert_to<double>();
        bool good = (n % 2 == 0) ? std::abs(mom[n].value - target) <= 0.05 * target
                                 : std::abs(mom[n].value) <= 0.05;
        if (!good) {
            ok = false;
            detail = "moment " + std::to_string(n) + " = " + std::to_string(mom[n].value);
        }
    }
    report(5, "non-CM curve, good p < 1e5: KS < 0.03 and moments within 5% of Catalan",
           ok, detail);
}

// ------------------------------------------------------------------ 6
void criterion6() {
    EllipticCurve e{0, 0, 0, -2, 3, {}};
    const long long d = 5;
    EllipticCurve tw = e.quadratic_twist(d);
    CoefficientTable a, b, c;
    bool ok = true;
    std::string detail;
    for (long long p : primes_up_to(1000)) {
        if (p == 2 || p == d || !e.good_reduction(p) || !tw.good_reduction(p)) continue;
        long long ap = ap_point_count(e, p);
        long long chi = legendre_symbol(d, p);
        long long ap_tw = ap_point_count(tw, p);
        if (ap_tw != chi * ap) {
            ok = false;
            detail = "covariance fails at p = " + std::to_string(p);
        }
        PrimeRecord ra, rb, rc;
        ra.p = rb.p = rc.p = p;
        ra.a = QuadFieldElem::from_rational(Rat(ap));
        rb.a = QuadFieldElem::from_rational(Rat(chi));
        rc.a = QuadFieldElem::from_rational(Rat(ap_tw));
        a.records.push_back(ra);
        b.records.push_back(rb);
        c.records.push_back(rc);
    }
    auto rep = tensor_trace_check(a, b, c);
    if (!rep.ok()) {
        ok = false;
        detail = "tensor check fails at p = " + std::to_string(rep.failures.front().p);
    }
    report(6, "quadratic-twist tensor identity c_p = chi_d(p) a_p exactly for good p < 1e3",
           ok, detail);
}

// ------------------------------------------------------------------ 7
void criterion7() {
    CoefficientTable table;
    table.D = -1;
    for (long long p : primes_up_to(105000)) {
        if (p == 2) continue;
        PrimeRecord r;
        r.p = p;
        if (p % 4 == 1) {
            r.a = QuadFieldElem{-1, Rat(2), Rat(0)};
            r.eps = Cyclotomic::one();
        } else {
            r.a = QuadFieldElem{-1, Rat(0), Rat(1)};
            r.eps = -Cyclotomic::one();
        }
        table.records.push_back(std::move(r));
    }
    bool ok = table.records.size() >= 10000;
    std::string detail = ok ? "" : "not enough synthetic rows";
    auto start = std::chrono::steady_clock::now();
    auto rep = ribet_identity_check(table);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!rep.ok()) {
        ok = false;
        detail = "clean table failed at p = " + std::to_string(rep.failures.front().p);
    }
    if (secs >= 5.0) {
        ok = false;
        detail = "too slow: " + std::to_string(secs) + "s";
    }
    auto mutated = table;
    mutated.records[137].a = mutated.records[137].a + QuadFieldElem{-1, Rat(1), Rat(1)};
    auto bad = ribet_identity_check(mutated);
    if (bad.ok() || bad.failures.front().p != mutated.records[137].p) {
        ok = false;
        detail = "mutation not detected with a named prime";
    }
    report(7, "Ribet identity exact on ~1e4 rows in < 5 s; mutated row fails by name",
           ok, detail);
}

// ------------------------------------------------------------------ 8
void criterion8() {
    bool ok = true;
    std::string detail;
    for (auto spec : {STGroupSpec::su2(), STGroupSpec::rm_swap(), STGroupSpec::z4_scalar_twist(),
                      STGroupSpec::pauli_twist()}) {
        auto data = component_group_data(spec);
        if (data.h.elements.size() > 16) continue;
        int minus = data.h.find(-CycMatrix::identity(data.h.elements[0].rows()));
        const int e_max = 4;
        // independent brute force over all (e-vector, eta) pairs
        std::set<std::pair<std::vector<int>, int>> brute;
        std::vector<int> e(spec.m, 0);
        while (true) {
            int esum = 0;
            for (int v : e) esum += v;
            for (size_t row = 0; row < data.table.chars.size(); ++row) {
                auto val = data.table.value(static_cast<int>(row), minus);
                auto want = Cyclotomic::rational(
                    Rat((esum % 2 == 0 ? 1 : -1) * data.table.degrees[row]));
                if (val == want) brute.insert({e, static_cast<int>(row)});
            }
            int i = 0;
            while (i < spec.m && e[i] == e_max) e[i++] = 0;
            if (i == spec.m) break;
            ++e[i];
        }
        auto labels = enumerate_irreps(spec, e_max, data);
        std::set<std::pair<std::vector<int>, int>> got;
        for (const auto& l : labels) got.insert({l.e, l.eta_index});
        if (got != brute) {
            ok = false;
            detail = "enumeration mismatch (" + std::to_string(got.size()) + " vs " +
                     std::to_string(brute.size()) + ")";
        }
    }

    auto spec = STGroupSpec::pauli_twist();
    auto data = component_group_data(spec);
    auto labels = enumerate_irreps(spec, 4, data);
    for (const auto& l : labels) {
        auto est = irrep_mean(spec, l, data, 1000000, 1008);
        double target = l.trivial ? 1.0 : 0.0;
        if (std::abs(est.value - std::complex<double>(target, 0)) >
            4 * est.stderr_ + 1e-12) {
            ok = false;
            detail = "irrep mean off (e0=" + std::to_string(l.e[0]) +
                     ", eta=" + std::to_string(l.eta_index) + ")";
        }
    }
    report(8, "irrep enumeration matches brute force; irrep means within 4 stderr at 1e6",
           ok, detail);
}

// ------------------------------------------------------------------ 9
std::map<std::string, std::string> dir_contents(const fs::path& dir) {
    std::map<std::string, std::string> out;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        out[fs::relative(entry.path(), dir).string()] = os.str();
    }
    return out;
}

void criterion9(const std::string& stt_binary) {
    bool ok = true;
    std::string detail;
    fs::path base = fs::temp_directory_path() / "stt_acceptance_cli";
    fs::remove_all(base);
    fs::create_directories(base);

    fs::path config = base / "config.json";
    {
        std::ofstream out(config);
        out << R"({"schema_version": 1, "spec": "rm_swap", "seed": 11, "num_samples": 20000,)"
            << R"("n_max": 4, "curve": [0, 0, 1, -1, 0], "prime_bound": 2000,)"
            << R"("data_source": "mc", "cocycle_path": "builtin:carry_v4", "e_max": 3})";
    }
    const std::vector<std::string> commands = {"moments", "sample", "ec-trace", "test",
                                               "verify-cocycle", "irreps"};
    for (const auto& cmd : commands) {
        std::map<std::string, std::string> runs[2];
        for (int run = 0; run < 2; ++run) {
            fs::path out_dir = base / (cmd + "_" + std::to_string(run));
            fs::create_directories(out_dir);
            std::string shell = "\"" + stt_binary + "\" --config \"" + config.string() +
                                "\" --out \"" + out_dir.string() + "\" " + cmd +
                                " > \"" + (out_dir / "stdout.txt").string() + "\" 2>&1";
            int rc = std::system(shell.c_str());
            if (rc != 0) {
                ok = false;
                detail = cmd + " exited with " + std::to_string(rc);
            }
            runs[run] = dir_contents(out_dir);
        }
        if (runs[0] != runs[1]) {
            ok = false;
            detail = cmd + " outputs differ between reruns";
        }
        if (runs[0].size() < 2) {
            ok = false;
            detail = cmd + " produced no artifacts";
        }
    }
    fs::remove_all(base);
    report(9, "CLI reruns are byte-identical for every subcommand", ok, detail);
}

} // namespace

int main(int argc, char** argv) {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (argc > 1)
        criterion9(argv[1]);
    else
        report(9, "CLI determinism (stt binary path not supplied)", false, "missing argv[1]");
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << std::endl;
    return g_failures == 0 ? 0 : 1;
}

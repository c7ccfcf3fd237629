#include "stt/cocycle.hpp"
#include "stt/elliptic.hpp"
#include "stt/errors.hpp"
#include "stt/equidist.hpp"
#include "stt/haar_moments.hpp"
#include "stt/io_json.hpp"
#include "stt/rng.hpp"
#include "stt/st_group.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace stt;

namespace {

STGroupSpec spec_by_name(const std::string& name) {
    RunConfig c;
    c.spec_builtin = name;
    return resolve_spec(c);
}

std::pair<std::string, std::string> trace_moment_frac(int n) {
    Rat q = su2_trace_moment(n);
    std::ostringstream num, den;
    num << boost::multiprecision::numerator(q);
    den << boost::multiprecision::denominator(q);
    return {num.str(), den.str()};
}

std::vector<std::pair<long long, long long>> curve_traces(long long a1, long long a2,
                                                          long long a3, long long a4,
                                                          long long a6, long long bound) {
    EllipticCurve e{a1, a2, a3, a4, a6, {}};
    std::vector<std::pair<long long, long long>> out;
    for (long long p : primes_up_to(bound)) {
        if (!e.good_reduction(p)) continue;
        out.emplace_back(p, ap_point_count(e, p));
    }
    return out;
}

std::vector<double> sample_traces(const std::string& spec_name, std::int64_t n,
                                  std::uint64_t seed) {
    STGroupSpec spec = spec_by_name(spec_name);
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n));
    const std::int64_t chunk_size = 1 << 16;
    std::int64_t done = 0;
    std::uint64_t chunk = 0;
    while (done < n) {
        std::int64_t todo = std::min(chunk_size, n - done);
        Rng rng(derive_stream_seed(seed, chunk++));
        for (std::int64_t i = 0; i < todo; ++i)
            out.push_back(trace(spec, sample_element_rng(spec, rng)).real());
        done += todo;
    }
    return out;
}

double ks_to_semicircle(const std::vector<double>& samples) {
    return ks_statistic(samples, semicircle_cdf);
}

/// Smallest mu_N the named builtin cocycle splits over, 0 if obstructed.
unsigned cocycle_split_order(const std::string& name, unsigned max_order) {
    Cocycle2 c;
    if (name == "carry_v4")
        c = carry_cocycle_klein_four();
    else if (name == "quaternion_v4")
        c = quaternion_cocycle_klein_four();
    else
        throw Error("unknown builtin cocycle '" + name + "'");
    SplitResult r = split_cocycle(c, max_order);
    if (!r.ok()) return 0;
    unsigned n = 1;
    for (const auto& v : r.splitting->alpha) n = lcm_u(n, v.multiplicative_order().value_or(1));
    return n;
}

} // namespace

PYBIND11_MODULE(_satotate, m) {
    m.doc() = "Sato-Tate group structures: exact moments, cocycles, Frobenius statistics";

    m.def("su2_trace_moment_frac", &trace_moment_frac, py::arg("n"),
          "Exact n-th SU(2) trace moment as a (numerator, denominator) string pair");
    m.def("semicircle_cdf", &semicircle_cdf, py::arg("t"));
    m.def("ks_to_semicircle", &ks_to_semicircle, py::arg("samples"),
          "KS distance between the samples and the SU(2) trace law");
    m.def("ap_point_count",
          [](long long a1, long long a2, long long a3, long long a4, long long a6,
             long long p) {
              EllipticCurve e{a1, a2, a3, a4, a6, {}};
              return ap_point_count(e, p);
          },
          py::arg("a1"), py::arg("a2"), py::arg("a3"), py::arg("a4"), py::arg("a6"),
          py::arg("p"), "a_p of the long Weierstrass curve by direct point counting");
    m.def("curve_traces", &curve_traces, py::arg("a1"), py::arg("a2"), py::arg("a3"),
          py::arg("a4"), py::arg("a6"), py::arg("bound"),
          "(p, a_p) for all good primes p <= bound");
    m.def("sample_traces", &sample_traces, py::arg("spec"), py::arg("n"), py::arg("seed"),
          "Real trace samples from a builtin group blueprint (deterministic per seed)");
    m.def("cocycle_split_order", &cocycle_split_order, py::arg("name"),
          py::arg("max_order") = 16,
          "Order of the coefficient group the builtin cocycle splits over, 0 if none");
    m.def("builtin_specs", [] {
        return std::vector<std::string>{"su2", "rm_swap", "z4_scalar_twist", "pauli_twist"};
    });

    py::register_exception<Error>(m, "SttError");
}

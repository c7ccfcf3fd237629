#pragma once

#include "stt/cyclotomic.hpp"
#include "stt/st_group.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stt {

/// Integral of tr(g)^n over SU(2): 0 for odd n, Catalan number C_{n/2} for
/// even n.
Rat su2_trace_moment(int n);

/// One moment row of a MomentTable.
struct MomentEntry {
    int order = 0;
    /// -1 = aggregate over the whole group, otherwise a conjugacy-class index
    /// of the component group.
    int component_class = -1;
    std::optional<Cyclotomic> exact;
    std::optional<std::complex<double>> mc_estimate;
    double mc_stderr = 0.0;
};

struct MomentTable {
    int n_max = 0;
    std::vector<std::string> class_names; // per gamma conjugacy class
    std::vector<MomentEntry> entries;

    MomentEntry* find(int order, int component_class);
    const MomentEntry* find(int order, int component_class) const;
    /// Merge MC estimates of `mc` into the exact table (same layout).
    void merge_mc(const MomentTable& mc);
};

/// Exact E[ t^j conj(t)^k ] on a fixed component, where t is the trace of the
/// embedded element: multinomial expansion over the blocks fixed by the
/// component permutation, using independence and su2_trace_moment.
Cyclotomic component_mixed_moment(const STGroupSpec& spec, int gamma_elem, int j, int k);

/// Exact E[t^n] per order on the given component.
std::vector<Cyclotomic> component_trace_moments(const STGroupSpec& spec, int gamma_elem,
                                                int n_max);

/// Exact E[Re(t)^n] on a fixed component (binomial in t, conj t).
double component_re_moment(const STGroupSpec& spec, int gamma_elem, int n);

/// Exact moments averaged uniformly over the component group, with
/// per-component-class rows.
MomentTable group_trace_moments(const STGroupSpec& spec, int n_max);

/// Monte Carlo moments of the trace with standard errors; deterministic per
/// seed (stream-split accumulation, independent of chunking).
MomentTable mc_moments(const STGroupSpec& spec, int n_max, std::int64_t num_samples,
                       std::uint64_t seed);

struct MeanEstimate {
    std::complex<double> value;
    double stderr_;
};

/// Monte Carlo E[prod_i tr Sym^{e_i}(g_i) * chi_eta(h)] over Haar; 0 for all
/// nontrivial labels by Schur orthogonality, 1 for the trivial label.
MeanEstimate irrep_mean(const STGroupSpec& spec, const IrrepLabel& label,
                        const ComponentGroupData& h_data, std::int64_t num_samples,
                        std::uint64_t seed);

} // namespace stt

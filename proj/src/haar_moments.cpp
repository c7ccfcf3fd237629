#include "stt/haar_moments.hpp"

#include "stt/errors.hpp"
#include "stt/rng.hpp"

#include <algorithm>
#include <cmath>

namespace stt {

Rat su2_trace_moment(int n) {
    if (n < 0) throw Error("su2_trace_moment: negative order");
    if (n % 2 == 1) return Rat(0);
    // Catalan number C_{n/2}
    int k = n / 2;
    BigInt num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= BigInt(2 * k - i);
        den *= BigInt(i + 1);
    }
    BigInt binom = num / den; // C(2k, k)
    return Rat(binom, BigInt(k + 1));
}

MomentEntry* MomentTable::find(int order, int component_class) {
    for (auto& e : entries)
        if (e.order == order && e.component_class == component_class) return &e;
    return nullptr;
}

const MomentEntry* MomentTable::find(int order, int component_class) const {
    for (const auto& e : entries)
        if (e.order == order && e.component_class == component_class) return &e;
    return nullptr;
}

void MomentTable::merge_mc(const MomentTable& mc) {
    for (auto& e : entries) {
        const MomentEntry* src = mc.find(e.order, e.component_class);
        if (src && src->mc_estimate) {
            e.mc_estimate = src->mc_estimate;
            e.mc_stderr = src->mc_stderr;
        }
    }
}

namespace {

Rat factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rat(f);
}

// sum over compositions of (j, k) across the fixed blocks
void mixed_moment_rec(const std::vector<Cyclotomic>& tau, size_t idx, int j_left, int k_left,
                      const Cyclotomic& partial, Cyclotomic& acc) {
    if (idx == tau.size()) {
        if (j_left == 0 && k_left == 0) acc = acc + partial;
        return;
    }
    if (idx == tau.size() - 1) {
        // last block takes everything that is left
        int n = j_left + k_left;
        Rat mom = su2_trace_moment(n);
        if (mom == 0) return;
        Cyclotomic term = partial * tau[idx].pow(j_left) * tau[idx].conj().pow(k_left) *
                          Cyclotomic::rational(mom / (factorial(j_left) * factorial(k_left)));
        acc = acc + term;
        return;
    }
    for (int j = 0; j <= j_left; ++j)
        for (int k = 0; k <= k_left; ++k) {
            int n = j + k;
            Rat mom = su2_trace_moment(n);
            if (mom == 0) continue;
            Cyclotomic term = partial * tau[idx].pow(j) * tau[idx].conj().pow(k) *
                              Cyclotomic::rational(mom / (factorial(j) * factorial(k)));
            mixed_moment_rec(tau, idx + 1, j_left - j, k_left - k, term, acc);
        }
}

} // namespace

Cyclotomic component_mixed_moment(const STGroupSpec& spec, int gamma_elem, int j, int k) {
    std::vector<Cyclotomic> tau;
    const auto& perm = spec.action[gamma_elem];
    for (int i = 0; i < spec.m; ++i)
        if (perm[i] == i) tau.push_back(spec.twists[gamma_elem][i].trace());
    if (tau.empty()) return (j == 0 && k == 0) ? Cyclotomic::one() : Cyclotomic::zero();
    Cyclotomic acc = Cyclotomic::zero();
    mixed_moment_rec(tau, 0, j, k, Cyclotomic::rational(factorial(j) * factorial(k)), acc);
    return acc;
}

std::vector<Cyclotomic> component_trace_moments(const STGroupSpec& spec, int gamma_elem,
                                                int n_max) {
    std::vector<Cyclotomic> out;
    out.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) out.push_back(component_mixed_moment(spec, gamma_elem, n, 0));
    return out;
}

double component_re_moment(const STGroupSpec& spec, int gamma_elem, int n) {
    // Re(t)^n = 2^{-n} sum_k C(n,k) t^k conj(t)^{n-k}
    Cyclotomic acc = Cyclotomic::zero();
    Rat binom(1);
    for (int k = 0; k <= n; ++k) {
        acc = acc + Cyclotomic::rational(binom) * component_mixed_moment(spec, gamma_elem, k, n - k);
        binom = binom * Rat(n - k) / Rat(k + 1);
    }
    Rat scale(BigInt(1), BigInt(1) << n);
    return (Cyclotomic::rational(scale) * acc).to_complex().real();
}

MomentTable group_trace_moments(const STGroupSpec& spec, int n_max) {
    MomentTable table;
    table.n_max = n_max;
    auto classes = spec.gamma.conjugacy_classes();
    for (const auto& cls : classes) table.class_names.push_back("g" + std::to_string(cls[0]));

    // per-class rows from the class representative
    std::vector<std::vector<Cyclotomic>> per_class;
    for (const auto& cls : classes)
        per_class.push_back(component_trace_moments(spec, cls[0], n_max));

    for (int n = 0; n <= n_max; ++n) {
        Cyclotomic agg = Cyclotomic::zero();
        for (size_t c = 0; c < classes.size(); ++c) {
            agg = agg + Cyclotomic::rational(Rat(classes[c].size())) * per_class[c][n];
            MomentEntry e;
            e.order = n;
            e.component_class = static_cast<int>(c);
            e.exact = per_class[c][n];
            table.entries.push_back(std::move(e));
        }
        MomentEntry e;
        e.order = n;
        e.component_class = -1;
        e.exact = Cyclotomic::rational(Rat(1, spec.gamma.order())) * agg;
        table.entries.push_back(std::move(e));
    }
    return table;
}

MomentTable mc_moments(const STGroupSpec& spec, int n_max, std::int64_t num_samples,
                       std::uint64_t seed) {
    if (num_samples < 1) throw Error("mc_moments: num_samples must be >= 1");
    auto classes = spec.gamma.conjugacy_classes();
    auto class_of = spec.gamma.class_map(classes);
    const int nc = static_cast<int>(classes.size());

    // accumulators: [class 0..nc-1, aggregate at nc] x order
    std::vector<std::vector<std::complex<double>>> sum(nc + 1,
        std::vector<std::complex<double>>(n_max + 1, {0.0, 0.0}));
    std::vector<std::vector<double>> sumsq(nc + 1, std::vector<double>(n_max + 1, 0.0));
    std::vector<std::int64_t> count(nc + 1, 0);

    const std::int64_t chunk_size = 1 << 16;
    std::int64_t done = 0;
    std::uint64_t chunk = 0;
    while (done < num_samples) {
        std::int64_t todo = std::min(chunk_size, num_samples - done);
        Rng rng(derive_stream_seed(seed, chunk++));
        for (std::int64_t i = 0; i < todo; ++i) {
            STElement el = sample_element_rng(spec, rng);
            std::complex<double> t = trace(spec, el);
            int cls = class_of[el.component];
            std::complex<double> p(1.0, 0.0);
            for (int n = 0; n <= n_max; ++n) {
                sum[cls][n] += p;
                sumsq[cls][n] += std::norm(p);
                sum[nc][n] += p;
                sumsq[nc][n] += std::norm(p);
                p *= t;
            }
            ++count[cls];
        }
        done += todo;
        count[nc] += todo;
    }

    MomentTable table;
    table.n_max = n_max;
    for (const auto& cls : classes) table.class_names.push_back("g" + std::to_string(cls[0]));
    for (int n = 0; n <= n_max; ++n) {
        for (int c = 0; c <= nc; ++c) {
            MomentEntry e;
            e.order = n;
            e.component_class = (c == nc) ? -1 : c;
            if (count[c] > 0) {
                std::complex<double> mean = sum[c][n] / static_cast<double>(count[c]);
                double var = sumsq[c][n] / static_cast<double>(count[c]) - std::norm(mean);
                var = std::max(var, 0.0);
                e.mc_estimate = mean;
                e.mc_stderr = count[c] > 1 ? std::sqrt(var / static_cast<double>(count[c])) : 0.0;
            }
            table.entries.push_back(std::move(e));
        }
    }
    return table;
}

MeanEstimate irrep_mean(const STGroupSpec& spec, const IrrepLabel& label,
                        const ComponentGroupData& h_data, std::int64_t num_samples,
                        std::uint64_t seed) {
    if (num_samples < 1) throw Error("irrep_mean: num_samples must be >= 1");
    // character of eta on the classes of H, numerically
    std::vector<std::complex<double>> chi;
    for (int c = 0; c < h_data.table.num_classes(); ++c)
        chi.push_back(h_data.table.chars[label.eta_index][c].to_complex());

    std::complex<double> sum(0.0, 0.0);
    double sumsq = 0.0;
    const std::int64_t chunk_size = 1 << 16;
    std::int64_t done = 0;
    std::uint64_t chunk = 0;
    while (done < num_samples) {
        std::int64_t todo = std::min(chunk_size, num_samples - done);
        Rng rng(derive_stream_seed(seed, chunk++));
        for (std::int64_t i = 0; i < todo; ++i) {
            STElement el = sample_element_rng(spec, rng);
            double w = 1.0;
            for (int b = 0; b < spec.m; ++b)
                w *= symm_character(label.e[b], el.g[b].trace().real());
            int h_elem = h_data.twist_index[el.component];
            std::complex<double> v = w * chi[h_data.table.class_of[h_elem]];
            sum += v;
            sumsq += std::norm(v);
        }
        done += todo;
    }
    std::complex<double> mean = sum / static_cast<double>(num_samples);
    double var = std::max(sumsq / static_cast<double>(num_samples) - std::norm(mean), 0.0);
    return {mean, num_samples > 1 ? std::sqrt(var / static_cast<double>(num_samples)) : 0.0};
}

} // namespace stt

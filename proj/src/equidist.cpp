#include "stt/equidist.hpp"

#include "stt/errors.hpp"
#include "stt/haar_moments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

namespace stt {

std::vector<MomentEstimate> empirical_moments(const std::vector<double>& samples, int n_max) {
    if (samples.empty()) throw EmptySample();
    const double n = static_cast<double>(samples.size());
    std::vector<MomentEstimate> out(n_max + 1);
    for (int k = 0; k <= n_max; ++k) {
        double sum = 0.0, sumsq = 0.0;
        for (double t : samples) {
            double v = std::pow(t, k);
            sum += v;
            sumsq += v * v;
        }
        double mean = sum / n;
        double var = std::max(sumsq / n - mean * mean, 0.0);
        out[k] = {mean, samples.size() > 1 ? std::sqrt(var / n) : 0.0};
    }
    return out;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw EmptySample();
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (size_t i = 0; i < samples.size(); ++i) {
        double f = cdf(samples[i]);
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    return d;
}

double semicircle_cdf(double t) {
    if (t <= -2.0) return 0.0;
    if (t >= 2.0) return 1.0;
    return 0.5 + t * std::sqrt(4.0 - t * t) / (4.0 * std::numbers::pi) +
           std::asin(t / 2.0) / std::numbers::pi;
}

namespace {

// the plain SU(2) trace law: one block, trivial component group, and a twist
// contributing a trace factor of exactly 1
bool ks_applicable(const STGroupSpec& spec) {
    return spec.m == 1 && spec.gamma.order() == 1 && spec.twists[0][0].trace().is_one();
}

} // namespace

TestReport compare_samples(const STGroupSpec& spec, const std::vector<double>& samples,
                           const std::vector<int>& class_labels, const CompareConfig& config) {
    if (samples.empty()) throw EmptySample();
    auto classes = spec.gamma.conjugacy_classes();
    const int nc = static_cast<int>(classes.size());
    if (!class_labels.empty() && class_labels.size() != samples.size())
        throw DimensionMismatch("class label count does not match sample count");

    std::vector<std::vector<double>> by_class(nc);
    if (nc > 1) {
        if (class_labels.empty())
            throw MissingClassLabels("component group is nontrivial but samples carry no labels");
        for (size_t i = 0; i < samples.size(); ++i) {
            int c = class_labels[i];
            if (c < 0 || c >= nc)
                throw Error("class label " + std::to_string(c) + " out of range");
            by_class[c].push_back(samples[i]);
        }
    } else {
        by_class[0] = samples;
    }

    TestReport report;
    report.z_threshold = config.z_threshold;
    report.d_threshold = config.d_threshold;
    report.total_samples = static_cast<long long>(samples.size());
    for (const auto& v : by_class)
        report.class_sample_sizes.push_back(static_cast<long long>(v.size()));

    // theoretical Re-trace moments, per class and class-size-weighted aggregate
    std::vector<std::vector<double>> theo(nc);
    std::vector<double> theo_agg(config.n_max + 1, 0.0);
    for (int c = 0; c < nc; ++c) {
        for (int k = 0; k <= config.n_max; ++k) {
            double v = component_re_moment(spec, classes[c][0], k);
            theo[c].push_back(v);
            theo_agg[k] += static_cast<double>(classes[c].size()) * v;
        }
    }
    for (double& v : theo_agg) v /= static_cast<double>(spec.gamma.order());

    auto add_rows = [&](int cls, const std::vector<double>& sam,
                        const std::vector<double>& expected) {
        if (sam.empty()) return;
        auto emp = empirical_moments(sam, config.n_max);
        for (int k = 1; k <= config.n_max; ++k) {
            MomentComparison row;
            row.order = k;
            row.component_class = cls;
            row.theoretical = expected[k];
            row.empirical = emp[k].value;
            row.stderr_ = emp[k].stderr_;
            if (row.stderr_ > 0.0) {
                row.z = (row.empirical - row.theoretical) / row.stderr_;
                row.pass = std::abs(row.z) <= config.z_threshold;
            } else {
                row.z = 0.0;
                row.pass = std::abs(row.empirical - row.theoretical) < 1e-12;
            }
            if (!row.pass) report.pass = false;
            report.moments.push_back(row);
        }
    };

    if (nc > 1)
        for (int c = 0; c < nc; ++c) add_rows(c, by_class[c], theo[c]);
    add_rows(-1, samples, theo_agg);

    if (ks_applicable(spec)) {
        report.ks = ks_statistic(samples, semicircle_cdf);
        report.ks_pass = *report.ks <= config.d_threshold;
        if (!report.ks_pass) report.pass = false;
    }
    return report;
}

TestReport compare(const STGroupSpec& spec, const std::vector<PrimeRecord>& records,
                   const CompareConfig& config) {
    if (records.empty()) throw EmptySample();
    std::vector<double> samples;
    std::vector<int> labels;
    bool need_labels = spec.gamma.order() > 1;
    for (const auto& r : records) {
        samples.push_back(normalize(r, 1));
        if (need_labels) {
            if (!r.class_label)
                throw MissingClassLabels("record at p = " + std::to_string(r.p) +
                                         " has no class label");
            labels.push_back(*r.class_label);
        }
    }
    return compare_samples(spec, samples, labels, config);
}

std::vector<HistogramRow> trace_histogram(const std::vector<double>& samples, int bins) {
    if (samples.empty()) throw EmptySample();
    if (bins < 1) throw Error("trace_histogram: need at least one bin");
    std::vector<HistogramRow> rows(bins);
    const double lo = -2.0, width = 4.0 / bins;
    std::vector<long long> counts(bins, 0);
    for (double t : samples) {
        int b = static_cast<int>((t - lo) / width);
        b = std::clamp(b, 0, bins - 1);
        ++counts[b];
    }
    const double n = static_cast<double>(samples.size());
    for (int b = 0; b < bins; ++b) {
        double l = lo + b * width, r = l + width;
        double mid = 0.5 * (l + r);
        rows[b] = {l, r, counts[b], counts[b] / (n * width),
                   std::sqrt(std::max(4.0 - mid * mid, 0.0)) / (2.0 * std::numbers::pi)};
    }
    return rows;
}

void write_histogram_csv(const std::vector<HistogramRow>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << "bin_left,bin_right,count,density,predicted_density\n";
    char buf[160];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%lld,%.17g,%.17g\n", r.bin_left,
                      r.bin_right, r.count, r.density, r.predicted_density);
        out << buf;
    }
}

} // namespace stt

#pragma once

#include "stt/coeff_table.hpp"
#include "stt/st_group.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace stt {

struct MomentEstimate {
    double value = 0.0;
    double stderr_ = 0.0;
};

/// Sample moments E[t^k], k = 0..n_max, with standard errors.
std::vector<MomentEstimate> empirical_moments(const std::vector<double>& samples, int n_max);

/// Sup distance between the empirical CDF of the samples and cdf.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// CDF of the SU(2) trace law (semicircle of radius 2), clamped outside [-2,2].
double semicircle_cdf(double t);

struct MomentComparison {
    int order = 0;
    int component_class = -1; // -1 = aggregate
    double theoretical = 0.0;
    double empirical = 0.0;
    double stderr_ = 0.0;
    double z = 0.0;
    bool pass = true;
};

struct TestReport {
    std::vector<MomentComparison> moments;
    std::optional<double> ks; // only for the m=1 trivial-component case
    bool ks_pass = true;
    std::vector<long long> class_sample_sizes;
    long long total_samples = 0;
    double z_threshold = 4.0;
    double d_threshold = 0.03;
    bool pass = true;
};

struct CompareConfig {
    int n_max = 6;
    double z_threshold = 4.0;
    double d_threshold = 0.03;
};

/// Moment (and, when applicable, KS) comparison of normalized traces against
/// the predictions of the group blueprint. Records must carry class labels
/// (conjugacy-class indices of gamma) whenever gamma is nontrivial.
TestReport compare(const STGroupSpec& spec, const std::vector<PrimeRecord>& records,
                   const CompareConfig& config);

/// Same comparison for raw real samples with optional class labels.
TestReport compare_samples(const STGroupSpec& spec, const std::vector<double>& samples,
                           const std::vector<int>& class_labels, const CompareConfig& config);

struct HistogramRow {
    double bin_left, bin_right;
    long long count;
    double density;
    double predicted_density;
};

/// Histogram of the samples on [-2,2] with the semicircle density attached.
std::vector<HistogramRow> trace_histogram(const std::vector<double>& samples, int bins);
void write_histogram_csv(const std::vector<HistogramRow>& rows, const std::string& path);

} // namespace stt

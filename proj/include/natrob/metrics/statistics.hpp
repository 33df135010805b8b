#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace natrob::metrics {

class SingleClass : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class LengthMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class EmptySample : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// 1-based ranks; tied values share the mean of the ranks they span.
std::vector<double> average_ranks(const std::vector<double>& values);

struct LabeledScore {
    double score = 0.0;
    bool unnatural = false;
};

struct MetricEvaluation {
    std::string metric;
    double auc = 0.0;
    std::size_t n_positive = 0;
    std::size_t n_negative = 0;
};

/// Probability that a random unnatural item outscores a random natural one,
/// ties counted 1/2. Throws SingleClass unless both labels occur.
MetricEvaluation auc(const std::vector<LabeledScore>& scores, std::string metric = {});

/// Spearman rank correlation with average ranks. Throws LengthMismatch for
/// different lengths, std::invalid_argument for fewer than 3 points. NaN when
/// either side is constant.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

/// Pearson correlation; NaN when either side is constant.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

struct MwwResult {
    /// Pairs (a_i, b_j) with a_i > b_j, plus half the ties.
    double u = 0.0;
    /// Two-sided, normal approximation with tie-corrected variance and no
    /// continuity correction. 1 when the variance vanishes.
    double p_value = 1.0;
    /// |rank-biserial r| = |2 U / (n_a n_b) - 1|.
    double effect_size = 0.0;
};

/// Throws EmptySample when either sample is empty.
MwwResult mww_test(const std::vector<double>& a, const std::vector<double>& b);

/// Percentile with linear interpolation between closest ranks,
/// q in [0, 100]. Throws EmptySample on empty input.
double percentile(std::vector<double> values, double q);

}  // namespace natrob::metrics

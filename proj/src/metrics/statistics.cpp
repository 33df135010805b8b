#include "natrob/metrics/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace natrob::metrics {

std::vector<double> average_ranks(const std::vector<double>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]])
            ++j;
        // Ranks i+1..j+1 share their mean.
        const double r = static_cast<double>(i + j + 2) / 2.0;
        for (std::size_t k = i; k <= j; ++k)
            ranks[order[k]] = r;
        i = j + 1;
    }
    return ranks;
}

namespace {

// Mann-Whitney U of `a` against `b` via the rank sum. Exact for moderate
// sizes: every quantity is a multiple of 1/2.
double u_statistic(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> all(a);
    all.insert(all.end(), b.begin(), b.end());
    const auto ranks = average_ranks(all);
    double sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        sum += ranks[i];
    const double na = static_cast<double>(a.size());
    return sum - na * (na + 1) / 2;
}

}  // namespace

MetricEvaluation auc(const std::vector<LabeledScore>& scores, std::string metric) {
    std::vector<double> pos, neg;
    for (const auto& s : scores)
        (s.unnatural ? pos : neg).push_back(s.score);
    if (pos.empty() || neg.empty())
        throw SingleClass("AUC needs both natural and unnatural items");
    MetricEvaluation ev;
    ev.metric = std::move(metric);
    ev.n_positive = pos.size();
    ev.n_negative = neg.size();
    ev.auc = u_statistic(pos, neg) / (static_cast<double>(pos.size()) * static_cast<double>(neg.size()));
    return ev;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size())
        throw LengthMismatch("correlation inputs differ in length");
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0 || syy == 0)
        return std::nan("");
    return sxy / std::sqrt(sxx * syy);
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size())
        throw LengthMismatch("spearman inputs differ in length");
    if (x.size() < 3)
        throw std::invalid_argument("spearman needs at least 3 points");
    return pearson(average_ranks(x), average_ranks(y));
}

MwwResult mww_test(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty())
        throw EmptySample("Mann-Whitney test needs two non-empty samples");
    MwwResult r;
    r.u = u_statistic(a, b);
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const double n = na + nb;

    std::vector<double> all(a);
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    double ties = 0;
    for (std::size_t i = 0; i < all.size();) {
        std::size_t j = i;
        while (j < all.size() && all[j] == all[i])
            ++j;
        const double t = static_cast<double>(j - i);
        ties += t * t * t - t;
        i = j;
    }
    const double var = n > 1 ? na * nb / 12.0 * ((n + 1) - ties / (n * (n - 1))) : 0.0;
    if (var > 0) {
        const double z = (r.u - na * nb / 2.0) / std::sqrt(var);
        r.p_value = std::erfc(std::abs(z) / std::sqrt(2.0));
    }
    r.effect_size = std::abs(2.0 * r.u / (na * nb) - 1.0);
    return r;
}

double percentile(std::vector<double> values, double q) {
    if (values.empty())
        throw EmptySample("percentile of an empty sample");
    if (!(q >= 0 && q <= 100))
        throw std::invalid_argument("percentile must be within [0, 100]");
    std::sort(values.begin(), values.end());
    const double pos = q / 100.0 * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

}  // namespace natrob::metrics

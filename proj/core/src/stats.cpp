#include "cergraph/stats.hpp"

#include <algorithm>
#include <cmath>

#include "cergraph/errors.hpp"

namespace cergraph {

double mean(const std::vector<double>& xs) {
    if (xs.empty()) throw InvalidArgument("mean of an empty sample");
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double sample_stddev(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

double standard_error(const std::vector<double>& xs) {
    if (xs.empty()) throw InvalidArgument("standard error of an empty sample");
    return sample_stddev(xs) / std::sqrt(static_cast<double>(xs.size()));
}

double quantile(std::vector<double> xs, double q) {
    if (xs.empty()) throw InvalidArgument("quantile of an empty sample");
    if (q < 0.0 || q > 1.0) throw InvalidArgument("quantile level outside [0,1]");
    std::sort(xs.begin(), xs.end());
    const double pos = q * static_cast<double>(xs.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= xs.size()) return xs.back();
    const double frac = pos - static_cast<double>(lo);
    return xs[lo] + frac * (xs[lo + 1] - xs[lo]);
}

double median(const std::vector<double>& xs) { return quantile(xs, 0.5); }

} // namespace cergraph

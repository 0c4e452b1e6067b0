#ifndef CERGRAPH_STATS_HPP
#define CERGRAPH_STATS_HPP

#include <cstddef>
#include <vector>

namespace cergraph {

double mean(const std::vector<double>& xs);
double sample_stddev(const std::vector<double>& xs);

// Standard error of the sample mean.
double standard_error(const std::vector<double>& xs);

// Linear-interpolation quantile (the common "type 7" rule), q in [0, 1].
double quantile(std::vector<double> xs, double q);
double median(const std::vector<double>& xs);

} // namespace cergraph

#endif

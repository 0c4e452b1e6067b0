#ifndef CERGRAPH_FORMAT_HPP
#define CERGRAPH_FORMAT_HPP

#include <cstdio>
#include <string>

namespace cergraph {

// Shortest-ish deterministic decimal form; used for CSV and CLI output so
// identical runs emit identical bytes.
inline std::string format_g(double value, int precision = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
    return buf;
}

} // namespace cergraph

#endif

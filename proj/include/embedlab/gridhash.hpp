#pragma once

#include <cstddef>
#include <vector>

namespace embedlab {

// Exact minimum distance between two point sets (dim 2 or 3, flat row-major
// coordinates).  A scan from a few probe points yields an upper bound u;
// bucketing one set on a grid of pitch u then makes every pair at distance
// <= u fall in adjacent cells, so only those are examined.  Linear expected
// time for sets spread over many cells.
double set_min_distance(const std::vector<double>& a, const std::vector<double>& b,
                        std::size_t dim);

}  // namespace embedlab

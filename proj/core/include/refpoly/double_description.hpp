#pragma once

#include <boost/dynamic_bitset.hpp>

#include <vector>

#include "refpoly/linalg.hpp"

namespace refpoly {

using Incidence = boost::dynamic_bitset<>;

// Extreme rays of the pointed cone C = {y in R^D : <g, y> >= 0 for every row
// g}, computed by the incremental double-description method. Each ray is a
// primitive integer vector; incidence[k] marks the rows tight at rays[k].
struct ConeRays {
  std::vector<std::vector<Coord>> rays;
  std::vector<Incidence> incidence;
};

// Throws DimensionError if the rows do not span R^D (the cone would not be
// pointed). Throws CapacityError if a ray leaves the int64 range.
ConeRays extreme_rays(const std::vector<std::vector<Coord>>& rows);

}  // namespace refpoly

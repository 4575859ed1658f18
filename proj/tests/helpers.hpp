#pragma once

#include <random>
#include <vector>

#include "oracles.hpp"
#include "resurgia/polyhedron.hpp"

namespace testing_helpers {

inline std::vector<oracle::Vec> as_vecs(const std::vector<resurgia::Point>& pts) {
  std::vector<oracle::Vec> out;
  for (const auto& p : pts) out.push_back(p.coords());
  return out;
}

inline std::vector<oracle::Constraint> as_constraints(const resurgia::QPolyhedron& p) {
  std::vector<oracle::Constraint> out;
  for (const auto& f : p.facets()) {
    oracle::Vec h(f.normal().begin(), f.normal().end());
    out.push_back({h, oracle::Q(f.offset())});
  }
  return out;
}

// 1..max_points nonnegative integer points in dimension dim, entries <= top.
// With origin_free, no point is the origin.
inline std::vector<resurgia::Point> random_points(std::mt19937& rng, std::size_t dim, int max_points, int top,
                                                  bool origin_free = true) {
  std::uniform_int_distribution<int> count(1, max_points), coord(0, top);
  std::vector<resurgia::Point> pts;
  const int k = count(rng);
  while (static_cast<int>(pts.size()) < k) {
    std::vector<long> c(dim);
    bool zero = true;
    for (auto& x : c) {
      x = coord(rng);
      zero = zero && x == 0;
    }
    if (zero && origin_free) continue;
    pts.push_back(resurgia::Point::from_ints(c));
  }
  return pts;
}

}  // namespace testing_helpers

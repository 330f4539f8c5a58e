#pragma once

#include <random>
#include <vector>

#include "tiltlab/census.hpp"

namespace testsupport {

using namespace tiltlab;

inline Quiver a2() { return Quiver(2, {{0, 1}}); }
inline Quiver a3_linear() { return Quiver(3, {{0, 1}, {1, 2}}); }

// P_1 over 1 -> 2: k -> k by the identity.
inline Representation a2_p1(Scalar p = 2) { return Representation(a2(), p, {1, 1}, {Mat::identity(1, p)}); }

inline Mat random_mat(std::mt19937& rng, std::size_t rows, std::size_t cols, Scalar p) {
  std::uniform_int_distribution<long long> entry(0, p - 1);
  Mat m(rows, cols, p);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, entry(rng));
  return m;
}

inline Representation random_rep(std::mt19937& rng, const Quiver& q, Scalar p, int max_dim) {
  std::uniform_int_distribution<int> dim(0, max_dim);
  DimVector d(static_cast<std::size_t>(q.vertex_count()));
  for (auto& x : d) x = dim(rng);
  std::vector<Mat> mats;
  for (const auto& a : q.arrows())
    mats.push_back(random_mat(rng, static_cast<std::size_t>(d[static_cast<std::size_t>(a.target)]),
                              static_cast<std::size_t>(d[static_cast<std::size_t>(a.source)]), p));
  return Representation(q, p, d, mats);
}

inline std::vector<Scalar> small_primes() { return {2, 3, 5}; }

}  // namespace testsupport

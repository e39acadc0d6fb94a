#pragma once

// Reproducible random data: transvections, period points in Omega and
// rational vectors, all driven by a caller-owned std::mt19937_64.

#include <cstddef>
#include <random>

#include "k3dh/exact_linalg.hpp"
#include "k3dh/isometry.hpp"
#include "k3dh/lattice.hpp"
#include "k3dh/period_domain.hpp"

namespace k3dh::sampling {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline IntVector random_int_vector(Rng& rng, std::size_t n, long bound) {
  IntVector v(n);
  for (auto& x : v) x = uniform(rng, -bound, bound);
  return v;
}

inline RatVector random_rat_vector(Rng& rng, std::size_t n, long bound, long max_den = 4) {
  RatVector v(n);
  for (auto& x : v) x = make_rat(uniform(rng, -bound, bound), uniform(rng, 1, max_den));
  return v;
}

/// A transvection T(e, a) with e one of e1..f3 and a small a orthogonal to e.
inline Isometry random_transvection(Rng& rng, const Lattice& l, long bound = 2) {
  using T = StandardBasisTags;
  const int i = static_cast<int>(uniform(rng, 1, 3));
  const bool use_e = uniform(rng, 0, 1) == 0;
  IntVector e = unit_vector(l.rank(), use_e ? T::e(i) : T::f(i));
  IntVector a = random_int_vector(rng, l.rank(), bound);
  a[use_e ? T::f(i) : T::e(i)] = 0;  // (a, e) = 0
  return eichler_transvection(l, e, a);
}

inline Isometry random_isometry(Rng& rng, const Lattice& l, int steps = 3, long bound = 2) {
  Isometry g = identity_isometry(l);
  for (int s = 0; s < steps; ++s) g = compose(random_transvection(rng, l, bound), g);
  return g;
}

/// Image of (e1+f1, e2+f2) under a random isometry, turned by a rational
/// rotation inside its plane and scaled by a rational factor.
inline PeriodPoint random_period(Rng& rng, const Lattice& l, int steps = 2) {
  using T = StandardBasisTags;
  Isometry g = random_isometry(rng, l, steps, 1);
  RatVector re(l.rank()), im(l.rank());
  re[T::e(1)] = re[T::f(1)] = 1;
  im[T::e(2)] = im[T::f(2)] = 1;
  re = g(re);
  im = g(im);
  const Rat u = make_rat(uniform(rng, -5, 5), uniform(rng, 1, 5));
  const Rat c = (1 - u * u) / (1 + u * u), s = 2 * u / (1 + u * u);
  const Rat k = make_rat(uniform(rng, 1, 6), uniform(rng, 1, 6));
  PeriodPoint p{RatVector(l.rank()), RatVector(l.rank())};
  for (std::size_t j = 0; j < l.rank(); ++j) {
    p.re[j] = k * (c * re[j] - s * im[j]);
    p.im[j] = k * (s * re[j] + c * im[j]);
  }
  return p;
}

}  // namespace k3dh::sampling

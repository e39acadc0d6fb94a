#pragma once

// Complete enumeration of vectors of a fixed norm in a definite lattice
// (Fincke-Pohst on an exact rational LDL^T decomposition), and detection of
// (-2)-classes orthogonal to a positive 3-plane.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdlib>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "k3dh/errors.hpp"
#include "k3dh/exact_linalg.hpp"
#include "k3dh/lattice.hpp"
#include "k3dh/sublattice.hpp"

namespace k3dh {

/// Gram matrix normalized to positive definite; sign records a negation on ingestion.
struct DefiniteGram {
  IntMatrix gram;
  int sign = 1;

  static DefiniteGram from(const IntMatrix& g) {
    if (!g.symmetric()) throw PreconditionError("Gram matrix must be symmetric");
    Inertia in = inertia(to_rational(g));
    const std::size_t n = g.rows();
    if (in.positive == n) return {g, 1};
    if (in.negative == n) return {-g, -1};
    throw IndefiniteForm("Gram matrix is not definite");
  }
};

struct EnumerationOptions {
  unsigned threads = 1;
};

/// Reads K3DH_THREADS; anything unparsable means 1.
inline EnumerationOptions enumeration_options_from_env() {
  EnumerationOptions o;
  if (const char* s = std::getenv("K3DH_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && v > 0) o.threads = static_cast<unsigned>(std::min(v, 256L));
  }
  return o;
}

namespace detail {

// q(x) = sum_i Q(i,i) * (x_i + sum_{j>i} Q(i,j) x_j)^2
inline RatMatrix quadratic_decomposition(const IntMatrix& g) {
  const std::size_t n = g.rows();
  RatMatrix q = to_rational(g);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }
  return q;
}

// Integers x with (x + c)^2 <= bound, in increasing order.
inline std::vector<Int> admissible(const Rat& c, const Rat& bound) {
  std::vector<Int> xs;
  if (bound < 0) return xs;
  Int t;
  Int fb = floor_rat(bound);
  mpz_sqrt(t.get_mpz_t(), fb.get_mpz_t());
  t += 1;  // t >= sqrt(bound)
  Int lo = floor_rat(Rat(-c - t)), hi = ceil_rat(Rat(-c + t));
  for (Int x = lo; x <= hi; ++x) {
    Rat y = x + c;
    if (y * y <= bound) xs.push_back(x);
  }
  return xs;
}

struct FinckePohst {
  RatMatrix q;
  Rat target;
  std::size_t n;

  // Depth-first search over coordinates n-1 ... 0; `rest` is the unused budget.
  void search(std::size_t level, IntVector& x, const Rat& rest, std::vector<IntVector>& out) const {
    Rat center(0);
    for (std::size_t j = level + 1; j < n; ++j)
      if (x[j] != 0) center += q(level, j) * x[j];
    for (const Int& v : admissible(center, rest / q(level, level))) {
      Rat y = v + center;
      Rat r = rest - q(level, level) * y * y;
      x[level] = v;
      if (level == 0) {
        if (r == 0) out.push_back(x);
      } else {
        search(level - 1, x, r, out);
      }
    }
    x[level] = 0;
  }
};

}  // namespace detail

/// Every v with v^T G v = target_norm, sorted lexicographically. The target is
/// given in the original sign of G.
inline std::vector<IntVector> enumerate_norm(const DefiniteGram& g, const Int& target_norm,
                                             EnumerationOptions opts = {}) {
  const Int target = g.sign * target_norm;
  if (target < 0) throw PreconditionError("target norm has the wrong sign for this definite form");
  const std::size_t n = g.gram.rows();
  std::vector<IntVector> out;
  if (target == 0 || n == 0) {
    out.push_back(IntVector(n, Int(0)));
    return out;
  }
  detail::FinckePohst fp{detail::quadratic_decomposition(g.gram), Rat(target), n};
  const std::size_t top = n - 1;
  std::vector<Int> first = detail::admissible(Rat(0), fp.target / fp.q(top, top));

  auto run = [&](std::size_t begin, std::size_t stride) {
    std::vector<IntVector> local;
    IntVector x(n, Int(0));
    for (std::size_t k = begin; k < first.size(); k += stride) {
      x[top] = first[k];
      Rat r = fp.target - fp.q(top, top) * first[k] * first[k];
      if (top == 0) {
        if (r == 0) local.push_back(x);
      } else {
        fp.search(top - 1, x, r, local);
      }
    }
    return local;
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, first.size()));
  if (threads == 1) {
    out = run(0, 1);
  } else {
    std::vector<std::future<std::vector<IntVector>>> parts;
    for (unsigned t = 0; t < threads; ++t) parts.push_back(std::async(std::launch::async, run, t, threads));
    for (auto& p : parts) {
      auto part = p.get();
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<IntVector> enumerate_norm(const IntMatrix& gram, const Int& target_norm,
                                             EnumerationOptions opts = {}) {
  return enumerate_norm(DefiniteGram::from(gram), target_norm, opts);
}

using PlaneBasis = std::array<RatVector, 3>;

inline void require_positive_plane(const Lattice& l, const PlaneBasis& plane) {
  for (const auto& v : plane)
    if (v.size() != l.rank()) throw DimensionError("plane vector length != lattice rank");
  RatMatrix m = l.pairing_matrix(std::vector<RatVector>(plane.begin(), plane.end()),
                                 std::vector<RatVector>(plane.begin(), plane.end()));
  if (inertia(m).positive != 3) throw PreconditionError("the 3-plane is not positive definite");
}

/// All d in L with (d,d) = -2 orthogonal to the plane, sorted by coordinates.
inline std::vector<IntVector> roots_orthogonal_to(const Lattice& l, const PlaneBasis& plane,
                                                  EnumerationOptions opts = {}) {
  require_positive_plane(l, plane);
  std::vector<IntVector> integral;
  for (const auto& v : plane) integral.push_back(clear_denominators(v));
  Sublattice comp = orthogonal_complement(l, integral);
  std::vector<IntVector> roots;
  if (comp.rank == 0) return roots;
  DefiniteGram dg = DefiniteGram::from(comp.gram());
  if (dg.sign > 0) return roots;  // positive definite complement has no negative vectors
  const IntMatrix& b = comp.generators;
  for (const auto& y : enumerate_norm(dg, Int(-2), opts)) {
    IntVector d = b.transpose() * y;
    if (l.norm(d) != -2) throw Error("root enumeration produced a vector of the wrong norm");
    roots.push_back(std::move(d));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

inline bool is_generic_plane(const Lattice& l, const PlaneBasis& plane, EnumerationOptions opts = {}) {
  return roots_orthogonal_to(l, plane, opts).empty();
}

}  // namespace k3dh

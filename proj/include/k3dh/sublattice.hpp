#pragma once

// Finitely generated subgroups of a lattice: primitivity, saturation and
// orthogonal complements, all decided through Smith invariants.

#include <cstddef>
#include <utility>
#include <vector>

#include "k3dh/errors.hpp"
#include "k3dh/exact_linalg.hpp"
#include "k3dh/lattice.hpp"

namespace k3dh {

struct Sublattice {
  Lattice ambient;
  IntMatrix generators;  // one generator per row
  std::size_t rank = 0;
  std::vector<Int> invariants;  // nonzero elementary divisors of the generator matrix

  std::vector<IntVector> basis() const {
    std::vector<IntVector> b;
    for (std::size_t i = 0; i < generators.rows(); ++i) b.push_back(generators.row(i));
    return b;
  }
  /// Gram matrix of the generators under the ambient form.
  IntMatrix gram() const { return generators * ambient.gram() * generators.transpose(); }
};

inline Sublattice make_sublattice(const Lattice& ambient, const std::vector<IntVector>& rows) {
  IntMatrix g(rows.size(), ambient.rank());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ambient.rank()) throw DimensionError("generator length != ambient rank");
    for (std::size_t j = 0; j < ambient.rank(); ++j) g(i, j) = rows[i][j];
  }
  SmithForm s = smith_normal_form(g);
  return {ambient, std::move(g), s.rank(), s.invariants()};
}

/// True iff the real span of the vectors meets the lattice only in their integral span.
/// Throws PreconditionError for linearly dependent input.
inline bool is_primitive_embedding(const Lattice& ambient, const std::vector<IntVector>& vectors) {
  Sublattice s = make_sublattice(ambient, vectors);
  if (s.rank != vectors.size())
    throw PreconditionError("is_primitive_embedding: vectors are linearly dependent");
  for (const auto& d : s.invariants)
    if (d != 1) return false;
  return true;
}

inline bool is_primitive_embedding(const std::vector<LatticeVector>& vectors) {
  if (vectors.empty()) return true;
  std::vector<IntVector> rows;
  for (const auto& v : vectors) {
    require_same_lattice(vectors.front(), v);
    rows.push_back(v.coords);
  }
  return is_primitive_embedding(vectors.front().lattice, rows);
}

/// All ambient vectors in the rational span of s, as a basis (rows).
inline Sublattice saturation(const Sublattice& s) {
  const std::size_t n = s.ambient.rank();
  std::vector<IntVector> sat;
  if (s.rank == n) {
    for (std::size_t i = 0; i < n; ++i) sat.push_back(unit_vector(n, i));
  } else if (s.rank > 0) {
    // span(S) = ker(K^T) over Q, where the rows of K span ker(S)
    std::vector<IntVector> k = integer_kernel(s.generators);
    IntMatrix km(k.size(), n);
    for (std::size_t i = 0; i < k.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) km(i, j) = k[i][j];
    sat = integer_kernel(km);
  }
  return make_sublattice(s.ambient, sat);
}

/// Saturated basis of {x in L : (x, v) = 0 for every v}.
inline Sublattice orthogonal_complement(const Lattice& ambient, const std::vector<IntVector>& vectors) {
  const std::size_t n = ambient.rank();
  if (vectors.empty()) {
    std::vector<IntVector> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vector(n, i));
    return make_sublattice(ambient, all);
  }
  IntMatrix a(vectors.size(), n);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    IntVector gv = ambient.gram() * vectors[i];
    for (std::size_t j = 0; j < n; ++j) a(i, j) = gv[j];
  }
  return make_sublattice(ambient, integer_kernel(a));
}

inline Sublattice orthogonal_complement(const std::vector<LatticeVector>& vectors,
                                        const Lattice& ambient) {
  std::vector<IntVector> rows;
  for (const auto& v : vectors) {
    if (!v.lattice.same_as(ambient)) throw LatticeMismatch("orthogonal_complement: foreign vector");
    rows.push_back(v.coords);
  }
  return orthogonal_complement(ambient, rows);
}

}  // namespace k3dh

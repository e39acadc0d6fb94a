#pragma once

// Integral lattices given by a symmetric Gram matrix, and the standard
// building blocks H, E8 and the K3 lattice H+H+H+(-E8)+(-E8).

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "k3dh/errors.hpp"
#include "k3dh/exact_linalg.hpp"

namespace k3dh {

/// Immutable; copies share identity, so vectors can detect mixing of lattices.
class Lattice {
 public:
  explicit Lattice(IntMatrix gram, std::string name = {})
      : impl_(std::make_shared<const Impl>(Impl{validated(std::move(gram)), std::move(name)})) {}

  std::size_t rank() const { return impl_->gram.rows(); }
  const IntMatrix& gram() const { return impl_->gram; }
  const std::string& name() const { return impl_->name; }
  bool same_as(const Lattice& other) const { return impl_ == other.impl_; }

  Int pairing(const IntVector& u, const IntVector& v) const {
    check_length(u);
    check_length(v);
    return dot(u, gram() * v);
  }
  Rat pairing(const RatVector& u, const RatVector& v) const {
    check_length(u);
    check_length(v);
    const IntMatrix& g = gram();
    Rat s(0);
    for (std::size_t i = 0; i < rank(); ++i) {
      if (u[i] == 0) continue;
      Rat row(0);
      for (std::size_t j = 0; j < rank(); ++j)
        if (g(i, j) != 0 && v[j] != 0) row += g(i, j) * v[j];
      s += u[i] * row;
    }
    return s;
  }
  Int norm(const IntVector& v) const { return pairing(v, v); }
  Rat norm(const RatVector& v) const { return pairing(v, v); }

  /// Pairing matrix (b_i, c_j) of two vector families.
  template <class T>
  Matrix<T> pairing_matrix(const std::vector<std::vector<T>>& b,
                           const std::vector<std::vector<T>>& c) const {
    Matrix<T> m(b.size(), c.size());
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) m(i, j) = pairing(b[i], c[j]);
    return m;
  }

 private:
  struct Impl {
    IntMatrix gram;
    std::string name;
  };

  static IntMatrix validated(IntMatrix g) {
    if (!g.square()) throw DimensionError("Gram matrix must be square");
    if (!g.symmetric()) throw PreconditionError("Gram matrix must be symmetric");
    return g;
  }
  template <class V>
  void check_length(const V& v) const {
    if (v.size() != rank())
      throw DimensionError("vector of length " + std::to_string(v.size()) +
                           " in a lattice of rank " + std::to_string(rank()));
  }

  std::shared_ptr<const Impl> impl_;
};

/// Integral class in a fixed lattice basis.
struct LatticeVector {
  Lattice lattice;
  IntVector coords;

  LatticeVector(Lattice l, IntVector c) : lattice(std::move(l)), coords(std::move(c)) {
    if (coords.size() != lattice.rank()) throw DimensionError("coordinate length != lattice rank");
  }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.lattice.same_as(b.lattice) && a.coords == b.coords;
  }
};

inline void require_same_lattice(const LatticeVector& u, const LatticeVector& v) {
  if (!u.lattice.same_as(v.lattice)) throw LatticeMismatch("vectors belong to different lattices");
}

inline Int pairing(const LatticeVector& u, const LatticeVector& v) {
  require_same_lattice(u, v);
  return u.lattice.pairing(u.coords, v.coords);
}

inline LatticeVector operator+(const LatticeVector& u, const LatticeVector& v) {
  require_same_lattice(u, v);
  return {u.lattice, add(u.coords, v.coords)};
}
inline LatticeVector operator-(const LatticeVector& u, const LatticeVector& v) {
  require_same_lattice(u, v);
  return {u.lattice, sub(u.coords, v.coords)};
}
inline LatticeVector operator*(const Int& k, const LatticeVector& v) {
  return {v.lattice, scale(k, v.coords)};
}

struct Signature {
  std::size_t positive = 0, negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Throws DegenerateForm if the Gram matrix is singular.
inline Signature signature(const IntMatrix& gram) {
  Inertia in = inertia(to_rational(gram));
  if (in.zero != 0) throw DegenerateForm("degenerate bilinear form");
  return {in.positive, in.negative};
}
inline Signature signature(const Lattice& l) { return signature(l.gram()); }

/// (v,v) = sum g_ii v_i^2 + 2 sum_{i<j} g_ij v_i v_j, so even diagonal suffices.
inline bool is_even(const Lattice& l) {
  for (std::size_t i = 0; i < l.rank(); ++i)
    if (l.gram()(i, i) % 2 != 0) return false;
  return true;
}

inline bool is_unimodular(const Lattice& l) { return abs(det(l.gram())) == 1; }

// ---------------------------------------------------------------------------
// standard lattices

inline Lattice make_H() { return Lattice(IntMatrix::from_rows({{0, 1}, {1, 0}}), "H"); }

/// E8 Cartan matrix, Bourbaki labelling: chain 1-3-4-5-6-7-8 with 2 attached to 4.
inline IntMatrix e8_gram(int sign = 1) {
  if (sign != 1 && sign != -1) throw PreconditionError("E8 sign must be +1 or -1");
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2 * sign;
  constexpr std::array<std::pair<int, int>, 7> edges{
      {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}}};
  for (auto [a, b] : edges) g(a - 1, b - 1) = g(b - 1, a - 1) = -sign;
  return g;
}

inline Lattice make_E8(int sign = 1) { return Lattice(e8_gram(sign), sign > 0 ? "E8" : "-E8"); }

inline IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  IntMatrix g(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) g(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return g;
}

inline Lattice direct_sum(const std::vector<Lattice>& parts, std::string name = {}) {
  std::vector<IntMatrix> blocks;
  std::string joined;
  for (const auto& p : parts) {
    blocks.push_back(p.gram());
    joined += (joined.empty() ? "" : "+") + p.name();
  }
  return Lattice(block_diagonal(blocks), name.empty() ? joined : std::move(name));
}

inline Lattice scaled(const Lattice& l, const Int& k) {
  IntMatrix g = l.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= k;
  return Lattice(std::move(g), l.name() + "(" + k.get_str() + ")");
}

/// Coordinates of the named basis vectors of the K3 lattice.
/// Block order is H, H, H, -E8, -E8, so e_i, f_i occupy coordinates 0..5.
struct StandardBasisTags {
  static constexpr std::size_t rank = 22;
  static constexpr std::size_t e(int i) { return 2 * static_cast<std::size_t>(i - 1); }
  static constexpr std::size_t f(int i) { return 2 * static_cast<std::size_t>(i - 1) + 1; }
  /// First coordinate of the b-th -E8 block (b = 1, 2).
  static constexpr std::size_t e8_block(int b) { return 6 + 8 * static_cast<std::size_t>(b - 1); }
};

/// Shared instance, so every K3 vector in a process lives in one lattice.
inline const Lattice& make_K3() {
  static const Lattice k3 = direct_sum(
      {make_H(), make_H(), make_H(), make_E8(-1), make_E8(-1)}, "K3");
  return k3;
}

namespace k3 {

using Tags = StandardBasisTags;

/// Sparse builder: k3::vec({{Tags::e(1), 1}, {Tags::f(1), -2}}).
inline IntVector coords(std::initializer_list<std::pair<std::size_t, long>> terms) {
  IntVector v(Tags::rank, Int(0));
  for (auto [i, c] : terms) v.at(i) += c;
  return v;
}
inline LatticeVector vec(std::initializer_list<std::pair<std::size_t, long>> terms) {
  return {make_K3(), coords(terms)};
}
inline LatticeVector e(int i) { return vec({{Tags::e(i), 1}}); }
inline LatticeVector f(int i) { return vec({{Tags::f(i), 1}}); }

}  // namespace k3

}  // namespace k3dh

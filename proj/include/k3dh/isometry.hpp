#pragma once

// Lattice isometries: verification, Eichler transvections, and an explicit
// standardization of primitive rank-2 sublattices of a lattice of the form
// H+H+H+R (R even unimodular), which yields isometries between any two pairs
// with the same Gram data.

#include <cstddef>
#include <utility>
#include <vector>

#include "k3dh/errors.hpp"
#include "k3dh/exact_linalg.hpp"
#include "k3dh/lattice.hpp"
#include "k3dh/period_domain.hpp"
#include "k3dh/sublattice.hpp"

namespace k3dh {

/// Integer matrix acting on coordinate columns with M^T G M = G.
class Isometry {
 public:
  Isometry(Lattice l, IntMatrix m) : lattice_(std::move(l)), matrix_(std::move(m)) {
    const std::size_t n = lattice_.rank();
    if (matrix_.rows() != n || matrix_.cols() != n) throw DimensionError("isometry matrix has the wrong shape");
    if (matrix_.transpose() * (lattice_.gram() * matrix_) != lattice_.gram())
      throw PreconditionError("matrix does not preserve the Gram form");
    // det M = +-1 follows since the Gram matrix is nondegenerate
  }

  const Lattice& lattice() const { return lattice_; }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector operator()(const IntVector& v) const { return matrix_ * v; }
  RatVector operator()(const RatVector& v) const { return to_rational(matrix_) * v; }
  LatticeVector operator()(const LatticeVector& v) const {
    if (!v.lattice.same_as(lattice_)) throw LatticeMismatch("isometry applied to a foreign vector");
    return {lattice_, matrix_ * v.coords};
  }

 private:
  Lattice lattice_;
  IntMatrix matrix_;
};

inline Isometry verify(const IntMatrix& m, const Lattice& l) { return Isometry(l, m); }

inline Isometry identity_isometry(const Lattice& l) { return Isometry(l, IntMatrix::identity(l.rank())); }

/// a after b.
inline Isometry compose(const Isometry& a, const Isometry& b) {
  if (!a.lattice().same_as(b.lattice())) throw LatticeMismatch("compose: isometries of different lattices");
  return Isometry(a.lattice(), a.matrix() * b.matrix());
}

/// M^{-1} = G^{-1} M^T G.
inline Isometry inverse(const Isometry& phi) {
  const Lattice& l = phi.lattice();
  auto gi = inverse(to_rational(l.gram()));
  if (!gi) throw DegenerateForm("inverse: degenerate Gram matrix");
  RatMatrix r = *gi * to_rational(phi.matrix().transpose() * l.gram());
  IntMatrix m(r.rows(), r.cols());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) {
      if (r(i, j).get_den() != 1) throw Error("inverse of an isometry is not integral");
      m(i, j) = r(i, j).get_num();
    }
  return Isometry(l, std::move(m));
}

/// x -> x + (x,e)a - (x,a)e - (a,a)/2 (x,e) e
inline IntVector transvect(const Lattice& l, const IntVector& e, const IntVector& a, const IntVector& x) {
  const Int xe = l.pairing(x, e);
  const Int xa = l.pairing(x, a);
  if (xe == 0 && xa == 0) return x;
  const Int coef = -xa - (l.norm(a) / 2) * xe;
  IntVector y = x;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (a[i] != 0) y[i] += xe * a[i];
    if (e[i] != 0) y[i] += coef * e[i];
  }
  return y;
}

inline void require_transvection_data(const Lattice& l, const IntVector& e, const IntVector& a) {
  if (l.norm(e) != 0) throw PreconditionError("transvection: e is not isotropic");
  if (l.pairing(e, a) != 0) throw PreconditionError("transvection: (e,a) != 0");
  if (l.norm(a) % 2 != 0) throw PreconditionError("transvection: (a,a) is odd");
}

inline Isometry eichler_transvection(const Lattice& l, const IntVector& e, const IntVector& a) {
  require_transvection_data(l, e, a);
  const std::size_t n = l.rank();
  // column j is transvect(unit j); (unit j, v) = (G v)_j
  const IntVector ge = l.gram() * e, ga = l.gram() * a;
  const Int half = l.norm(a) / 2;
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (ge[j] == 0 && ga[j] == 0) continue;
    const Int coef = -ga[j] - half * ge[j];
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != 0) m(i, j) += ge[j] * a[i];
      if (e[i] != 0) m(i, j) += coef * e[i];
    }
  }
  return Isometry(l, std::move(m));
}

inline Isometry eichler_transvection(const LatticeVector& e, const LatticeVector& a) {
  require_same_lattice(e, a);
  return eichler_transvection(e.lattice, e.coords, a.coords);
}

/// -1 on the i-th hyperbolic summand, identity elsewhere.
inline Isometry negate_hyperbolic(const Lattice& l, int i) {
  using T = StandardBasisTags;
  IntMatrix m = IntMatrix::identity(l.rank());
  m(T::e(i), T::e(i)) = -1;
  m(T::f(i), T::f(i)) = -1;
  return Isometry(l, std::move(m));
}

/// e3 -> -e3, f3 -> -f3.
inline Isometry flip_third_H(const Lattice& l = make_K3()) { return negate_hyperbolic(l, 3); }

inline Isometry minus_identity(const Lattice& l = make_K3()) {
  IntMatrix m = IntMatrix::identity(l.rank());
  return Isometry(l, -m);
}

inline bool preserves_components(const Isometry& phi) {
  const Lattice& l = phi.lattice();
  OrientedPlane p0 = reference_plane(l);
  OrientedPlane img;
  for (std::size_t i = 0; i < 3; ++i) img.basis[i] = phi(p0.basis[i]);
  return same_component(l, p0, img);
}

/// kappa~ = e1 + (kappa,kappa)/2 f1,  eta~ = (kappa,eta) f1 + e2 + (eta,eta)/2 f2.
inline std::pair<IntVector, IntVector> standard_pair(const Lattice& l, const IntVector& kappa,
                                                     const IntVector& eta) {
  using T = StandardBasisTags;
  IntVector k(l.rank(), Int(0)), h(l.rank(), Int(0));
  k[T::e(1)] = 1;
  k[T::f(1)] = l.norm(kappa) / 2;
  h[T::f(1)] = l.pairing(kappa, eta);
  h[T::e(2)] = 1;
  h[T::f(2)] = l.norm(eta) / 2;
  return {k, h};
}

namespace detail {

inline void require_hhh_frame(const Lattice& l) {
  const std::size_t n = l.rank();
  if (n < 6) throw PreconditionError("lattice does not start with H+H+H");
  const IntMatrix& g = l.gram();
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Int want = (j < 6 && i / 2 == j / 2 && i != j) ? 1 : 0;
      if (g(i, j) != want) throw PreconditionError("lattice does not start with H+H+H");
    }
  if (!is_even(l)) throw PreconditionError("lattice is not even");
}

// Accumulates a product of transvections g, tracking g(kappa) and g(eta).
class Standardizer {
 public:
  using T = StandardBasisTags;

  Standardizer(const Lattice& l, IntVector kappa, IntVector eta)
      : l_(l), g_(IntMatrix::identity(l.rank())), x_(std::move(kappa)), y_(std::move(eta)) {}

  void transvect(const IntVector& e, const IntVector& a) {
    if (is_zero(a)) return;
    for (std::size_t j = 0; j < g_.cols(); ++j) g_.set_col(j, k3dh::transvect(l_, e, a, g_.col(j)));
    x_ = k3dh::transvect(l_, e, a, x_);
    y_ = k3dh::transvect(l_, e, a, y_);
    ++moves_;
  }

  void negate_plane(int i) {
    for (std::size_t idx : {T::e(i), T::f(i)}) {
      for (std::size_t j = 0; j < g_.cols(); ++j) g_(idx, j) = -g_(idx, j);
      x_[idx] = -x_[idx];
      y_[idx] = -y_[idx];
    }
    ++moves_;
  }

  // Collapses the part of v (x or y) supported on planes A, B and coordinates
  // >= rest_lo into c e_A + s f_A, c >= 0. Moves stay inside that support.
  void normalize(bool on_y, int A, int B, std::size_t rest_lo) {
    const std::size_t n = l_.rank();
    diagonalize(on_y, A, B);
    IntVector r = rest(on_y, rest_lo);
    if (!is_zero(r)) {
      // (r, u) = -content, so e_B picks up the content of the rest
      IntVector gr = l_.gram() * r;
      IntVector pr(gr.begin() + static_cast<std::ptrdiff_t>(rest_lo), gr.end());
      IntVector b = bezout(pr);
      IntVector u(n, Int(0));
      for (std::size_t i = rest_lo; i < n; ++i) u[i] = -b[i - rest_lo];
      transvect(unit(T::e(B)), u);
      diagonalize(on_y, A, B);
      r = rest(on_y, rest_lo);
    }
    const Int alpha = v(on_y)[T::e(A)];
    if (!is_zero(r)) {
      if (alpha == 0) throw NotFound("standardization: rest has no hyperbolic partner");
      IntVector a(n, Int(0));
      for (std::size_t i = rest_lo; i < n; ++i) {
        if (r[i] % alpha != 0) throw NotFound("standardization: rest is not divisible by the content");
        a[i] = -r[i] / alpha;
      }
      transvect(unit(T::f(A)), a);
    }
    if (alpha < 0) negate_plane(A);
  }

  void run() {
    const std::size_t rest2 = T::e8_block(1);  // first coordinate after H+H+H
    // kappa -> e1 + n f1
    normalize(false, 1, 2, T::e(3));
    if (x_[T::e(1)] != 1) throw NotFound("standardization: kappa is not primitive");
    const Int nk = x_[T::f(1)];
    const Int kk = l_.pairing(x_, y_);

    // eta = p e1 + q f1 + m, m in H2+H3+R; moves below fix e1 and f1
    normalize(true, 2, 3, rest2);
    const Int c = y_[T::e(2)];
    if (c != 1) {
      // T(f2, j w), w = e1 - n f1, shifts the f2-coefficient by -j(k - 2np) mod c
      const Int p = y_[T::e(1)];
      const Int d = kk - 2 * nk * p;
      Int j;
      if (c == 0) {
        j = -d;
      } else {
        Int dinv;
        if (mpz_invert(dinv.get_mpz_t(), Int(d % c).get_mpz_t(), c.get_mpz_t()) == 0)
          throw NotFound("standardization: pair is not primitive");
        j = ((y_[T::f(2)] - 1) * dinv) % c;
      }
      transvect(unit(T::f(2)), scale(j, w(nk)));
      normalize(true, 2, 3, rest2);
      if (y_[T::e(2)] != 1) throw NotFound("standardization: could not reach content 1");
    }
    // clear the e1-coefficient
    transvect(unit(T::f(2)), scale(Int(-y_[T::e(1)]), w(nk)));
  }

  const IntMatrix& matrix() const { return g_; }
  const IntVector& x() const { return x_; }
  const IntVector& y() const { return y_; }
  std::size_t moves() const { return moves_; }

 private:
  IntVector unit(std::size_t i) const { return unit_vector(l_.rank(), i); }
  IntVector w(const Int& nk) const {
    IntVector v(l_.rank(), Int(0));
    v[T::e(1)] = 1;
    v[T::f(1)] = -nk;
    return v;
  }
  const IntVector& v(bool on_y) const { return on_y ? y_ : x_; }
  IntVector rest(bool on_y, std::size_t lo) const {
    IntVector r(l_.rank(), Int(0));
    for (std::size_t i = lo; i < r.size(); ++i) r[i] = v(on_y)[i];
    return r;
  }

  // X = [[a, g], [-d, b]] with a, b, g, d the e_A, f_A, e_B, f_B coefficients;
  // the A+B contribution to the norm is 2 det X. Row and column additions are
  // realized by transvections.
  void diagonalize(bool on_y, int A, int B) {
    auto X = [&](int i, int j) -> Int {
      const IntVector& u = v(on_y);
      if (i == 0) return j == 0 ? u[T::e(A)] : u[T::e(B)];
      return j == 0 ? Int(-u[T::f(B)]) : u[T::f(A)];
    };
    auto row1 = [&](const Int& k) {  // row1 += k row2
      transvect(unit(T::e(A)), scale(k, unit(T::e(B))));
    };
    auto row2 = [&](const Int& k) { transvect(unit(T::f(A)), scale(Int(-k), unit(T::f(B)))); };
    auto col2 = [&](const Int& k) { transvect(unit(T::f(A)), scale(k, unit(T::e(B)))); };
    auto col1 = [&](const Int& k) { transvect(unit(T::e(A)), scale(Int(-k), unit(T::f(B)))); };
    auto tq = [](const Int& a, const Int& b) {
      Int q;
      mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      return q;
    };

    for (;;) {
      if (X(0, 0) == 0) {
        if (X(1, 0) != 0) {
          row1(1);
        } else if (X(0, 1) != 0) {
          col1(1);
        } else if (X(1, 1) != 0) {
          row1(1);
          col1(1);
        } else {
          return;
        }
      }
      while (X(1, 0) != 0) {
        row2(-tq(X(1, 0), X(0, 0)));
        if (X(1, 0) == 0) break;
        row1(-tq(X(0, 0), X(1, 0)));
        if (X(0, 0) == 0) {
          row1(1);
          row2(-1);
        }
      }
      while (X(0, 1) != 0) {
        col2(-tq(X(0, 1), X(0, 0)));
        if (X(0, 1) == 0) break;
        col1(-tq(X(0, 0), X(0, 1)));
        if (X(0, 0) == 0) {
          col1(1);
          col2(-1);
        }
      }
      if (X(1, 0) != 0) continue;
      if (X(1, 1) % X(0, 0) != 0) {
        row1(1);
        continue;
      }
      return;
    }
  }

  const Lattice& l_;
  IntMatrix g_;
  IntVector x_, y_;
  std::size_t moves_ = 0;
};

inline void require_primitive_pair(const Lattice& l, const IntVector& kappa, const IntVector& eta) {
  if (!is_primitive_embedding(l, {kappa, eta}))
    throw PreconditionError("pair does not span a primitive sublattice");
}

}  // namespace detail

/// g with g(kappa) = kappa~, g(eta) = eta~. A product of transvections and sign
/// changes on hyperbolic summands; the result is checked before it is returned.
inline Isometry map_pair_to_standard(const Lattice& l, const IntVector& kappa, const IntVector& eta) {
  detail::require_hhh_frame(l);
  detail::require_primitive_pair(l, kappa, eta);
  detail::Standardizer s(l, kappa, eta);
  s.run();
  auto [kt, et] = standard_pair(l, kappa, eta);
  Isometry g(l, s.matrix());
  if (g(kappa) != kt || g(eta) != et) throw NotFound("standardization did not reach the standard pair");
  return g;
}

inline Isometry map_pair_to_standard(const LatticeVector& kappa, const LatticeVector& eta) {
  require_same_lattice(kappa, eta);
  return map_pair_to_standard(kappa.lattice, kappa.coords, eta.coords);
}

/// phi with phi(kappa') = kappa, phi(eta') = eta and the requested action on
/// the components of positive 3-planes.
inline Isometry lemma_iso(const Lattice& l, const IntVector& kappa, const IntVector& eta,
                          const IntVector& kappa_p, const IntVector& eta_p, bool preserve) {
  if (l.norm(kappa) != l.norm(kappa_p) || l.pairing(kappa, eta) != l.pairing(kappa_p, eta_p) ||
      l.norm(eta) != l.norm(eta_p))
    throw PreconditionError("lemma_iso: the two pairs have different Gram data");
  Isometry g = map_pair_to_standard(l, kappa, eta);
  Isometry gp = map_pair_to_standard(l, kappa_p, eta_p);
  Isometry gi = inverse(g);
  Isometry phi = compose(gi, gp);
  // the flip fixes the standard pair, which lives in H1+H2
  if (preserves_components(phi) != preserve) phi = compose(gi, compose(flip_third_H(l), gp));
  if (phi(kappa_p) != kappa || phi(eta_p) != eta || preserves_components(phi) != preserve)
    throw NotFound("lemma_iso: postcondition failed");
  return phi;
}

inline Isometry lemma_iso(const LatticeVector& kappa, const LatticeVector& eta, const LatticeVector& kappa_p,
                          const LatticeVector& eta_p, bool preserve) {
  require_same_lattice(kappa, eta);
  require_same_lattice(kappa, kappa_p);
  require_same_lattice(kappa, eta_p);
  return lemma_iso(kappa.lattice, kappa.coords, eta.coords, kappa_p.coords, eta_p.coords, preserve);
}

}  // namespace k3dh

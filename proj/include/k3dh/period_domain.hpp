#pragma once

// Period points [alpha] in Omega, the spaces of pairs (kappa, [alpha]) cut out
// by the tame and Kaehler inequalities, and orientation of positive 3-planes.
// Everything is over Q: alpha is carried as its real and imaginary parts.

#include <array>
#include <utility>
#include <vector>

#include "k3dh/errors.hpp"
#include "k3dh/exact_linalg.hpp"
#include "k3dh/lattice.hpp"
#include "k3dh/shortvec.hpp"

namespace k3dh {

struct PeriodPoint {
  RatVector re, im;
};

/// Ordered basis of a positive definite 3-plane.
struct OrientedPlane {
  std::array<RatVector, 3> basis;
};

inline bool is_in_omega(const Lattice& l, const RatVector& re, const RatVector& im) {
  const Rat rr = l.norm(re);
  return l.pairing(re, im) == 0 && rr == l.norm(im) && rr > 0;
}
inline bool is_in_omega(const Lattice& l, const PeriodPoint& a) { return is_in_omega(l, a.re, a.im); }

inline void require_period(const Lattice& l, const PeriodPoint& a) {
  if (!is_in_omega(l, a)) throw PreconditionError("period point does not lie in Omega");
}

/// (alpha, conj(alpha)) = (Re, Re) + (Im, Im).
inline Rat hermitian_norm(const Lattice& l, const PeriodPoint& a) { return l.norm(a.re) + l.norm(a.im); }

/// |(kappa, alpha)|^2 = (kappa, Re)^2 + (kappa, Im)^2.
inline Rat abs_pairing_squared(const Lattice& l, const RatVector& kappa, const PeriodPoint& a) {
  Rat x = l.pairing(kappa, a.re), y = l.pairing(kappa, a.im);
  return x * x + y * y;
}

/// Orthogonal projection of kappa onto the complement of Re(alpha), Im(alpha).
inline RatVector project_to_alpha_perp(const Lattice& l, const RatVector& kappa, const PeriodPoint& a) {
  require_period(l, a);
  const Rat cr = l.pairing(kappa, a.re) / l.norm(a.re);
  const Rat ci = l.pairing(kappa, a.im) / l.norm(a.im);
  RatVector k = kappa;
  for (std::size_t i = 0; i < k.size(); ++i) k[i] -= cr * a.re[i] + ci * a.im[i];
  return k;
}

/// Norm of the projection computed without forming it:
/// (kappa,kappa) - 2 |(kappa,alpha)|^2 / (alpha, conj(alpha)).
inline Rat projected_norm(const Lattice& l, const RatVector& kappa, const PeriodPoint& a) {
  require_period(l, a);
  return l.norm(kappa) - 2 * abs_pairing_squared(l, kappa, a) / hermitian_norm(l, a);
}

/// (kappa,kappa)(alpha, conj alpha) > 2 |(kappa,alpha)|^2
inline bool is_in_ktilde_omega(const Lattice& l, const RatVector& kappa, const PeriodPoint& a) {
  require_period(l, a);
  return l.norm(kappa) * hermitian_norm(l, a) > 2 * abs_pairing_squared(l, kappa, a);
}

/// (kappa,kappa) > 0 and (kappa, alpha) = 0
inline bool is_in_k_omega(const Lattice& l, const RatVector& kappa, const PeriodPoint& a) {
  require_period(l, a);
  return l.norm(kappa) > 0 && l.pairing(kappa, a.re) == 0 && l.pairing(kappa, a.im) == 0;
}

/// The plane with ordered basis (kappa, Re alpha, Im alpha).
inline OrientedPlane plane_of(const Lattice& l, const RatVector& kappa, const PeriodPoint& a) {
  if (!is_in_ktilde_omega(l, kappa, a))
    throw PreconditionError("plane_of: (kappa, alpha) is not in the tame period space");
  return {{kappa, a.re, a.im}};
}

inline bool is_positive_plane(const Lattice& l, const OrientedPlane& p) {
  for (const auto& v : p.basis)
    if (v.size() != l.rank()) return false;
  std::vector<RatVector> b(p.basis.begin(), p.basis.end());
  return inertia(l.pairing_matrix(b, b)).positive == 3;
}

inline RatMatrix pairing_matrix(const Lattice& l, const OrientedPlane& p, const OrientedPlane& q) {
  return l.pairing_matrix(std::vector<RatVector>(p.basis.begin(), p.basis.end()),
                          std::vector<RatVector>(q.basis.begin(), q.basis.end()));
}

/// Two oriented positive 3-planes lie in the same component of the positive
/// Grassmannian iff det[(p_i, q_j)] > 0. The determinant never vanishes: a
/// vector of q orthogonal to p would lie in the negative definite p-perp.
inline bool same_component(const Lattice& l, const OrientedPlane& p, const OrientedPlane& q) {
  if (!is_positive_plane(l, p) || !is_positive_plane(l, q))
    throw PreconditionError("same_component: planes must be positive definite");
  RatMatrix m = pairing_matrix(l, p, q);
  const Rat d = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  if (d == 0) throw DegenerateForm("same_component: mutual pairing is singular");
  return d > 0;
}

/// span(e1+f1, e2+f2, e3+f3), the fixed reference plane for component tests.
inline OrientedPlane reference_plane(const Lattice& l = make_K3()) {
  using T = StandardBasisTags;
  if (l.rank() < 6) throw DimensionError("reference plane needs three hyperbolic summands");
  OrientedPlane p;
  for (int i = 1; i <= 3; ++i) {
    RatVector v(l.rank(), Rat(0));
    v[T::e(i)] = 1;
    v[T::f(i)] = 1;
    p.basis[static_cast<std::size_t>(i - 1)] = std::move(v);
  }
  if (!is_positive_plane(l, p)) throw PreconditionError("lattice does not start with H+H+H");
  return p;
}

// Variants with the no-orthogonal-root condition.

inline bool is_in_ktilde_omega_generic(const Lattice& l, const RatVector& kappa, const PeriodPoint& a,
                                       EnumerationOptions opts = {}) {
  if (!is_in_ktilde_omega(l, kappa, a)) return false;
  return is_generic_plane(l, plane_of(l, kappa, a).basis, opts);
}

inline bool is_in_k_omega_generic(const Lattice& l, const RatVector& kappa, const PeriodPoint& a,
                                  EnumerationOptions opts = {}) {
  if (!is_in_k_omega(l, kappa, a)) return false;
  return is_generic_plane(l, {kappa, a.re, a.im}, opts);
}

}  // namespace k3dh

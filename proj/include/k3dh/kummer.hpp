#pragma once

// Translation-invariant 2-forms on T = C^2/(Z^2 + iZ^2), the intersection form
// of H^2(T;Z), and classes on the blown-up Kummer surface stored as
// (torus pullback, coefficients on the 16 exceptional classes).

#include <array>
#include <cstddef>
#include <utility>

#include "k3dh/errors.hpp"
#include "k3dh/exact_linalg.hpp"
#include "k3dh/lattice.hpp"
#include "k3dh/polynomial.hpp"

namespace k3dh {

struct Complex {
  Rat re, im;

  Complex(Rat r = 0, Rat i = 0) : re(std::move(r)), im(std::move(i)) {}
  Complex(int r) : re(r), im(0) {}
  Complex conj() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

inline const Complex I_unit{0, 1};

/// Degree-one generators, in this order: dz1, dzbar1, dz2, dzbar2.
enum class Dz : int { z1 = 0, zb1 = 1, z2 = 2, zb2 = 3 };

/// Coefficients on dz_i ^ dz_j, i < j, in the order
/// (z1 zb1), (z1 z2), (z1 zb2), (zb1 z2), (zb1 zb2), (z2 zb2).
struct InvariantForm {
  std::array<Complex, 6> c{};

  static constexpr std::array<std::pair<int, int>, 6> monomials{
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

  /// Coefficient of dz_i ^ dz_j for any i != j (antisymmetric).
  Complex at(int i, int j) const {
    if (i == j) return {};
    const bool swap = i > j;
    if (swap) std::swap(i, j);
    for (std::size_t k = 0; k < 6; ++k)
      if (monomials[k].first == i && monomials[k].second == j) return swap ? Complex{} - c[k] : c[k];
    throw DimensionError("bad monomial index");
  }
  void add(Dz a, Dz b, const Complex& k) {
    int i = static_cast<int>(a), j = static_cast<int>(b);
    if (i == j) return;
    Complex v = k;
    if (i > j) {
      std::swap(i, j);
      v = Complex{} - v;
    }
    for (std::size_t m = 0; m < 6; ++m)
      if (monomials[m].first == i && monomials[m].second == j) c[m] = c[m] + v;
  }

  /// Complex conjugate: dz_j <-> dzbar_j, coefficients conjugated.
  InvariantForm conj() const {
    InvariantForm r;
    for (std::size_t m = 0; m < 6; ++m) {
      auto [i, j] = monomials[m];
      r.add(static_cast<Dz>(i ^ 1), static_cast<Dz>(j ^ 1), c[m].conj());
    }
    return r;
  }
  bool is_real() const { return conj() == *this; }

  friend bool operator==(const InvariantForm& a, const InvariantForm& b) { return a.c == b.c; }
  friend InvariantForm operator+(const InvariantForm& a, const InvariantForm& b) {
    InvariantForm r;
    for (std::size_t m = 0; m < 6; ++m) r.c[m] = a.c[m] + b.c[m];
    return r;
  }
  friend InvariantForm operator*(const Complex& k, const InvariantForm& a) {
    InvariantForm r;
    for (std::size_t m = 0; m < 6; ++m) r.c[m] = k * a.c[m];
    return r;
  }
};

namespace kummer_detail {

inline int permutation_sign(std::array<int, 4> p) {
  int s = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return 0;
      if (p[i] > p[j]) s = -s;
    }
  return s;
}

}  // namespace kummer_detail

/// Integral over T of a ^ b. dz_j ^ dzbar_j = -2i dx_j ^ dy_j, so the top
/// monomial dz1 dzbar1 dz2 dzbar2 integrates to (-2i)^2 = -4.
inline Complex wedge_integrate_complex(const InvariantForm& a, const InvariantForm& b) {
  Complex top;
  for (std::size_t m = 0; m < 6; ++m)
    for (std::size_t k = 0; k < 6; ++k) {
      auto [i, j] = InvariantForm::monomials[m];
      auto [p, q] = InvariantForm::monomials[k];
      const int s = kummer_detail::permutation_sign({i, j, p, q});
      if (s == 0) continue;
      top = top + Complex(s) * a.c[m] * b.c[k];
    }
  return Complex(-4) * top;
}

/// Real-valued integral; throws if the result has an imaginary part.
inline Rat wedge_integrate(const InvariantForm& a, const InvariantForm& b) {
  Complex v = wedge_integrate_complex(a, b);
  if (v.im != 0) throw PreconditionError("wedge_integrate: result is not real");
  return v.re;
}

/// dz1 dz2 + dzbar1 dzbar2
inline InvariantForm omega_sigma() {
  InvariantForm f;
  f.add(Dz::z1, Dz::z2, 1);
  f.add(Dz::zb1, Dz::zb2, 1);
  return f;
}

/// i dz1 dzbar1 + i dz2 dzbar2
inline InvariantForm omega_I() {
  InvariantForm f;
  f.add(Dz::z1, Dz::zb1, I_unit);
  f.add(Dz::z2, Dz::zb2, I_unit);
  return f;
}

/// (sigma_+-)_t = omega_sigma +- t omega_I
inline InvariantForm sigma_form(int sign, const Rat& t) {
  if (sign != 1 && sign != -1) throw PreconditionError("sign must be +1 or -1");
  return omega_sigma() + Complex(sign * t) * omega_I();
}

// ---------------------------------------------------------------------------
// H^2(T;Z)

/// Coordinates in dx1dy1, dx2dy2, dx1dx2, dx1dy2, dy1dx2, dy1dy2.
using TorusClass = RatVector;

inline constexpr std::size_t torus_rank = 6;

namespace kummer_detail {

// Real 1-forms dx1, dy1, dx2, dy2 are indices 0..3.
inline constexpr std::array<std::pair<int, int>, 6> real_basis{{{0, 1}, {2, 3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}};

// dz_j = dx_j + i dy_j, dzbar_j = dx_j - i dy_j
inline std::array<Complex, 4> one_form(int dz) {
  std::array<Complex, 4> v{};
  const int j = dz / 2;
  v[static_cast<std::size_t>(2 * j)] = 1;
  v[static_cast<std::size_t>(2 * j + 1)] = (dz % 2 == 0) ? Complex(0, 1) : Complex(0, -1);
  return v;
}

}  // namespace kummer_detail

/// Expands a real invariant form in the real basis of H^2(T).
inline TorusClass form_to_torus_class(const InvariantForm& a) {
  if (!a.is_real()) throw PreconditionError("form_to_torus_class: form is not real");
  std::array<Complex, 6> out{};
  for (std::size_t m = 0; m < 6; ++m) {
    if (a.c[m].is_zero()) continue;
    auto [i, j] = InvariantForm::monomials[m];
    auto u = kummer_detail::one_form(i), v = kummer_detail::one_form(j);
    for (std::size_t b = 0; b < 6; ++b) {
      auto [p, q] = kummer_detail::real_basis[b];
      Complex w = u[static_cast<std::size_t>(p)] * v[static_cast<std::size_t>(q)] -
                  u[static_cast<std::size_t>(q)] * v[static_cast<std::size_t>(p)];
      out[b] = out[b] + a.c[m] * w;
    }
  }
  TorusClass r(torus_rank);
  for (std::size_t b = 0; b < 6; ++b) {
    if (out[b].im != 0) throw Error("form_to_torus_class: non-real coordinate");
    r[b] = out[b].re;
  }
  return r;
}

/// Intersection form on the real basis: integral of b_i ^ b_j over dx1 dy1 dx2 dy2.
inline IntMatrix torus_gram() {
  IntMatrix g(torus_rank, torus_rank);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      auto [i, j] = kummer_detail::real_basis[a];
      auto [p, q] = kummer_detail::real_basis[b];
      g(a, b) = kummer_detail::permutation_sign({i, j, p, q});
    }
  return g;
}

inline Lattice torus_lattice() { return Lattice(torus_gram(), "H2(T)"); }

inline Rat torus_pairing(const TorusClass& a, const TorusClass& b) {
  if (a.size() != torus_rank || b.size() != torus_rank) throw DimensionError("torus class must have 6 entries");
  static const IntMatrix g = torus_gram();
  Rat s(0);
  for (std::size_t i = 0; i < torus_rank; ++i)
    for (std::size_t j = 0; j < torus_rank; ++j)
      if (g(i, j) != 0) s += a[i] * g(i, j) * b[j];
  return s;
}

// ---------------------------------------------------------------------------
// blown-up Kummer surface

inline constexpr std::size_t exceptional_count = 16;

/// torus: pullback to T of a class on T/Z2; exc: coefficients on E_1..E_16.
struct KummerClass {
  TorusClass torus = TorusClass(torus_rank);
  RatVector exc = RatVector(exceptional_count);

  friend KummerClass operator+(const KummerClass& a, const KummerClass& b) {
    KummerClass r;
    r.torus = add(a.torus, b.torus);
    r.exc = add(a.exc, b.exc);
    return r;
  }
  friend KummerClass operator*(const Rat& k, const KummerClass& a) { return {scale(k, a.torus), scale(k, a.exc)}; }
  friend KummerClass operator-(const KummerClass& a, const KummerClass& b) { return a + Rat(-1) * b; }
  friend bool operator==(const KummerClass& a, const KummerClass& b) {
    return a.torus == b.torus && a.exc == b.exc;
  }
};

/// (q*y, q*y') = 1/2 (pi*y, pi*y')_T, (E_i, E_j) = -2 delta_ij, (q*y, E_i) = 0.
inline Rat pairing(const KummerClass& a, const KummerClass& b) {
  Rat s = torus_pairing(a.torus, b.torus) / 2;
  for (std::size_t i = 0; i < exceptional_count; ++i) s -= 2 * a.exc.at(i) * b.exc.at(i);
  return s;
}

inline KummerClass pullback(const TorusClass& y) {
  KummerClass k;
  k.torus = y;
  return k;
}

inline KummerClass exceptional(std::size_t i) {
  KummerClass k;
  k.exc.at(i) = 1;
  return k;
}

/// r * sum E_i
inline KummerClass exceptional_sum(const Rat& r) {
  KummerClass k;
  for (auto& x : k.exc) x = r;
  return k;
}

/// q*[omega_sigma] + 1/2 sum E_i
inline KummerClass kappa_hat() { return pullback(form_to_torus_class(omega_sigma())) + exceptional_sum(Rat(1, 2)); }

/// eta^_+ = -q*[omega_I] + 1/2 sum E_i,  eta^_- = q*[omega_I] - 1/2 sum E_i.
/// With these, kappa^ - t eta^_+- is the blowup of (sigma_+-)_t in both cases.
inline KummerClass eta_hat(int sign) {
  if (sign != 1 && sign != -1) throw PreconditionError("sign must be +1 or -1");
  return Rat(sign) * (Rat(-1) * pullback(form_to_torus_class(omega_I())) + exceptional_sum(Rat(1, 2)));
}

/// kappa^ - t eta^_+-
inline KummerClass sigma_class(int sign, const Rat& t) { return kappa_hat() - t * eta_hat(sign); }

inline DHPolynomial dh_from_pair(const KummerClass& kappa, const KummerClass& eta) {
  return DHPolynomial::from_gram(pairing(kappa, kappa), pairing(kappa, eta), pairing(eta, eta));
}

/// 1/2 of the torus integral of (sigma_+-)_t ^ (sigma_+-)_t, as a polynomial in t.
inline DHPolynomial reduced_dh(int sign) {
  auto at = [&](long t) -> Rat {
    InvariantForm s = sigma_form(sign, Rat(t));
    return wedge_integrate(s, s) / 2;
  };
  return interpolate(0, at(0), 1, at(1), 2, at(2));
}

/// y_half integral and primitive in H^2(T;Z), and (E_i, x) = +-1 for some i.
inline bool primitive_pair_check(const TorusClass& y_half, const KummerClass& x) {
  if (y_half.size() != torus_rank) throw DimensionError("torus class must have 6 entries");
  for (const auto& c : y_half)
    if (c.get_den() != 1) return false;
  IntVector iv;
  for (const auto& c : y_half) iv.push_back(c.get_num());
  if (content(iv) != 1) return false;
  for (std::size_t i = 0; i < exceptional_count; ++i) {
    Rat p = pairing(exceptional(i), x);
    if (p == 1 || p == -1) return true;
  }
  return false;
}

/// Pairing matrix of the rational basis {pullbacks of the torus basis, E_1..E_16}.
inline RatMatrix kummer_rational_gram() {
  const std::size_t n = torus_rank + exceptional_count;
  std::vector<KummerClass> basis;
  for (std::size_t i = 0; i < torus_rank; ++i) {
    TorusClass y(torus_rank);
    y[i] = 1;
    basis.push_back(pullback(y));
  }
  for (std::size_t i = 0; i < exceptional_count; ++i) basis.push_back(exceptional(i));
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = pairing(basis[i], basis[j]);
  return g;
}

}  // namespace k3dh

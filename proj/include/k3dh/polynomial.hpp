#pragma once

// Polynomials of degree <= 2 with rational coefficients, c0 + c1 t + c2 t^2.

#include <ostream>
#include <string>

#include "k3dh/exact_linalg.hpp"

namespace k3dh {

struct DHPolynomial {
  Rat c0, c1, c2;

  DHPolynomial() = default;
  DHPolynomial(Rat a, Rat b = 0, Rat c = 0) : c0(std::move(a)), c1(std::move(b)), c2(std::move(c)) {}

  /// (kappa,kappa) - 2t (kappa,eta) + t^2 (eta,eta)
  static DHPolynomial from_gram(const Rat& kk, const Rat& ke, const Rat& ee) { return {kk, -2 * ke, ee}; }

  Rat operator()(const Rat& t) const { return c0 + t * (c1 + t * c2); }

  /// t -> p(t + h)
  DHPolynomial shifted(const Rat& h) const { return {(*this)(h), c1 + 2 * c2 * h, c2}; }

  bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0; }

  bool has_even_integer_coefficients() const {
    for (const Rat* c : {&c0, &c1, &c2})
      if (c->get_den() != 1 || c->get_num() % 2 != 0) return false;
    return true;
  }

  friend DHPolynomial operator+(const DHPolynomial& a, const DHPolynomial& b) {
    return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
  }
  friend DHPolynomial operator-(const DHPolynomial& a, const DHPolynomial& b) {
    return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
  }
  friend DHPolynomial operator*(const Rat& k, const DHPolynomial& a) { return {k * a.c0, k * a.c1, k * a.c2}; }
  friend bool operator==(const DHPolynomial& a, const DHPolynomial& b) {
    return a.c0 == b.c0 && a.c1 == b.c1 && a.c2 == b.c2;
  }
  friend bool operator!=(const DHPolynomial& a, const DHPolynomial& b) { return !(a == b); }

  /// "c0 + c1 t + c2 t^2" with exact coefficients, zero terms kept.
  std::string str() const {
    return c0.get_str() + " + " + c1.get_str() + " t + " + c2.get_str() + " t^2";
  }
  friend std::ostream& operator<<(std::ostream& os, const DHPolynomial& p) { return os << p.str(); }
};

/// The unique polynomial of degree <= 2 through three points with distinct abscissae.
inline DHPolynomial interpolate(const Rat& x0, const Rat& y0, const Rat& x1, const Rat& y1, const Rat& x2,
                                const Rat& y2) {
  // Newton form
  const Rat d01 = (y1 - y0) / (x1 - x0);
  const Rat d12 = (y2 - y1) / (x2 - x1);
  const Rat d012 = (d12 - d01) / (x2 - x0);
  // y0 + d01 (t - x0) + d012 (t - x0)(t - x1)
  return {y0 - d01 * x0 + d012 * x0 * x1, d01 - d012 * (x0 + x1), d012};
}

}  // namespace k3dh

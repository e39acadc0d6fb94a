#pragma once

// Duistermaat-Heckman polynomials of circle actions with K3 or Kummer reduced
// spaces, wall crossing at isolated fixed points, and validation of glued
// (optionally circle-valued) moment models.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3dh/errors.hpp"
#include "k3dh/exact_linalg.hpp"
#include "k3dh/isometry.hpp"
#include "k3dh/kummer.hpp"
#include "k3dh/lattice.hpp"
#include "k3dh/polynomial.hpp"
#include "k3dh/report.hpp"
#include "k3dh/sublattice.hpp"

namespace k3dh {

/// Interval endpoint: a rational or -inf / +inf.
struct Endpoint {
  enum class Kind { finite, neg_inf, pos_inf };
  Kind kind = Kind::finite;
  Rat value;

  static Endpoint at(Rat v) { return {Kind::finite, std::move(v)}; }
  static Endpoint minus_infinity() { return {Kind::neg_inf, 0}; }
  static Endpoint plus_infinity() { return {Kind::pos_inf, 0}; }

  bool finite() const { return kind == Kind::finite; }
  std::string str() const {
    switch (kind) {
      case Kind::neg_inf: return "-inf";
      case Kind::pos_inf: return "inf";
      default: return value.get_str();
    }
  }
  friend bool operator==(const Endpoint& a, const Endpoint& b) {
    return a.kind == b.kind && (a.kind != Kind::finite || a.value == b.value);
  }
};

/// a < b in the extended line.
inline bool less(const Endpoint& a, const Endpoint& b) {
  using K = Endpoint::Kind;
  if (a.kind == K::pos_inf || b.kind == K::neg_inf) return false;
  if (a.kind == K::neg_inf || b.kind == K::pos_inf) return true;
  return a.value < b.value;
}

enum class SpaceTag { K3, Kummer };

inline std::string to_string(SpaceTag s) { return s == SpaceTag::K3 ? "K3" : "Kummer"; }

/// Classes in the standard K3 lattice (make_K3()).
struct K3Pair {
  IntVector kappa, eta;
};

struct KummerPair {
  KummerClass kappa, eta;
};

struct Piece {
  Endpoint a, b;
  DHPolynomial dh;
  SpaceTag space = SpaceTag::K3;
  std::optional<K3Pair> pair;
  std::optional<KummerPair> kummer_pair;
  std::optional<IntVector> euler_class;
};

/// Isolated fixed points at one level, all with the same weight triple.
struct Wall {
  Rat level;
  long fixed_points = 0;
  std::array<Int, 3> weights{};
};

struct GluedModel {
  std::vector<Piece> pieces;
  std::vector<Wall> walls;
  std::optional<Rat> period;
  std::optional<long> expected_fixed_points;
};

// ---------------------------------------------------------------------------

inline DHPolynomial dh_from_pair(const Lattice& l, const IntVector& kappa, const IntVector& eta) {
  return DHPolynomial::from_gram(l.norm(kappa), l.pairing(kappa, eta), l.norm(eta));
}

inline DHPolynomial dh_from_pair(const LatticeVector& kappa, const LatticeVector& eta) {
  require_same_lattice(kappa, eta);
  return dh_from_pair(kappa.lattice, kappa.coords, eta.coords);
}

inline DHPolynomial dh_from_pair(const K3Pair& p) { return dh_from_pair(make_K3(), p.kappa, p.eta); }

/// P = 2 l0 + 2 l1 t + 2 l2 t^2  ->  kappa = e1 + l0 f1,  eta = -l1 f1 + e2 + l2 f2.
inline K3Pair pair_from_polynomial(const DHPolynomial& p) {
  if (!p.has_even_integer_coefficients())
    throw PreconditionError("pair_from_polynomial: coefficients must be even integers");
  using T = StandardBasisTags;
  K3Pair r{IntVector(T::rank, Int(0)), IntVector(T::rank, Int(0))};
  r.kappa[T::e(1)] = 1;
  r.kappa[T::f(1)] = p.c0.get_num() / 2;
  r.eta[T::f(1)] = -p.c1.get_num() / 2;
  r.eta[T::e(2)] = 1;
  r.eta[T::f(2)] = p.c2.get_num() / 2;
  return r;
}

/// p > 0 on the closed interval [a, b].
inline bool is_positive_on(const DHPolynomial& p, const Rat& a, const Rat& b) {
  if (a > b) throw PreconditionError("is_positive_on: a > b");
  if (p(a) <= 0 || p(b) <= 0) return false;
  if (p.c2 != 0) {
    const Rat v = -p.c1 / (2 * p.c2);
    if (a <= v && v <= b && p(v) <= 0) return false;
  }
  return true;
}

/// p > 0 on the open interval (a, b); endpoints may be infinite.
inline bool is_positive_on_open(const DHPolynomial& p, const Endpoint& a, const Endpoint& b) {
  if (!less(a, b)) throw PreconditionError("is_positive_on_open: empty interval");
  // limits at the ends must be >= 0
  auto end_ok = [&](const Endpoint& e) {
    if (e.finite()) return p(e.value) >= 0;
    const int dir = e.kind == Endpoint::Kind::pos_inf ? 1 : -1;
    if (p.c2 != 0) return p.c2 > 0;
    if (p.c1 != 0) return dir * p.c1 > 0;
    return p.c0 >= 0;
  };
  if (!end_ok(a) || !end_ok(b)) return false;
  auto inside = [&](const Rat& t) {
    return (a.kind == Endpoint::Kind::neg_inf || (a.finite() && a.value < t)) &&
           (b.kind == Endpoint::Kind::pos_inf || (b.finite() && t < b.value));
  };
  if (p.c2 != 0) {
    const Rat v = -p.c1 / (2 * p.c2);
    if (inside(v) && p(v) <= 0) return false;
  }
  // an interior point, to exclude p = 0 and a zero minimum at an interior point
  Rat m;
  if (a.finite() && b.finite()) m = (a.value + b.value) / 2;
  else if (a.finite()) m = a.value + 1;
  else if (b.finite()) m = b.value - 1;
  else m = 0;
  return p(m) > 0;
}

/// count (t - level)^2 / (w1 w2 w3): the jump "after minus before" in increasing t.
inline DHPolynomial wall_crossing_delta(const Wall& w) {
  const Int prod = w.weights[0] * w.weights[1] * w.weights[2];
  if (prod == 0) throw PreconditionError("wall_crossing_delta: zero weight");
  const Rat k = Rat(w.fixed_points) / Rat(prod);
  return {k * w.level * w.level, -2 * k * w.level, k};
}

/// True iff the two K3 pairs are matched by an isometry preserving the
/// components; pairs with different Gram data never match.
inline bool euler_class_match(const Piece& pa, const Piece& pb) {
  if (!pa.pair || !pb.pair) throw PreconditionError("euler_class_match: both pieces need K3 class pairs");
  const Lattice& l = make_K3();
  const K3Pair &x = *pa.pair, &y = *pb.pair;
  if (dh_from_pair(l, x.kappa, x.eta) != dh_from_pair(l, y.kappa, y.eta)) return false;
  lemma_iso(l, x.kappa, x.eta, y.kappa, y.eta, true);
  return true;
}

// ---------------------------------------------------------------------------
// validation

namespace detail {

inline std::string weights_str(const Wall& w) {
  return "(" + w.weights[0].get_str() + "," + w.weights[1].get_str() + "," + w.weights[2].get_str() + ")";
}

struct Boundary {
  const Wall* wall;
  const Piece* before;
  const Piece* after;
  Rat shift;  // before's polynomial is evaluated at t + shift
};

}  // namespace detail

/// Structural problems (gaps, missing walls, unknown wall levels) throw
/// PreconditionError; mathematical failures become report entries.
inline std::vector<detail::Boundary> model_boundaries(const GluedModel& m) {
  if (m.pieces.empty()) throw PreconditionError("model has no pieces");
  for (const auto& p : m.pieces)
    if (!less(p.a, p.b)) throw PreconditionError("piece with empty interval (" + p.a.str() + ", " + p.b.str() + ")");

  struct Slot {
    Rat level;
    const Piece* before;
    const Piece* after;
    Rat shift;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i + 1 < m.pieces.size(); ++i) {
    const Piece &p = m.pieces[i], &q = m.pieces[i + 1];
    if (!p.b.finite() || !(p.b == q.a)) throw PreconditionError("consecutive pieces do not share an endpoint");
    slots.push_back({p.b.value, &p, &q, 0});
  }
  if (m.period) {
    const Piece &first = m.pieces.front(), &last = m.pieces.back();
    if (*m.period <= 0) throw PreconditionError("period must be positive");
    if (!first.a.finite() || !last.b.finite() || last.b.value != first.a.value + *m.period)
      throw PreconditionError("pieces do not tile one period");
    slots.push_back({first.a.value, &last, &first, *m.period});
  }

  std::vector<detail::Boundary> out;
  std::vector<bool> used(m.walls.size(), false);
  for (const auto& s : slots) {
    const Wall* found = nullptr;
    for (std::size_t k = 0; k < m.walls.size(); ++k)
      if (m.walls[k].level == s.level) {
        if (found) throw PreconditionError("two wall records at level " + s.level.get_str());
        found = &m.walls[k];
        used[k] = true;
      }
    if (!found) throw PreconditionError("no wall record at level " + s.level.get_str());
    out.push_back({found, s.before, s.after, s.shift});
  }
  for (std::size_t k = 0; k < m.walls.size(); ++k)
    if (!used[k]) throw PreconditionError("wall at level " + m.walls[k].level.get_str() + " is not a piece boundary");
  return out;
}

inline Report validate(const GluedModel& m) {
  auto boundaries = model_boundaries(m);
  const Lattice& l = make_K3();
  Report r("glued model validation");

  for (const auto& bd : boundaries) {
    const Wall& w = *bd.wall;
    const std::string at = "@" + w.level.get_str();
    const DHPolynomial before = bd.shift == 0 ? bd.before->dh : bd.before->dh.shifted(bd.shift);
    const DHPolynomial& after = bd.after->dh;
    // (i)
    r.add("continuity" + at, "DH value from below equals DH value from above", "wall continuity",
          before(w.level).get_str(), after(w.level).get_str());
    // (ii)
    const bool nonzero = w.weights[0] != 0 && w.weights[1] != 0 && w.weights[2] != 0;
    r.add_flag("weights" + at, "wall weights " + detail::weights_str(w) + " are nonzero", "wall crossing", nonzero);
    if (nonzero)
      r.add("wall_crossing" + at,
            "jump across the wall equals " + std::to_string(w.fixed_points) + " (t - level)^2 / w1 w2 w3",
            "wall crossing", wall_crossing_delta(w).str(), (after - before).str());
  }

  for (std::size_t i = 0; i < m.pieces.size(); ++i) {
    const Piece& p = m.pieces[i];
    const std::string at = "#" + std::to_string(i);
    const std::string iv = "(" + p.a.str() + ", " + p.b.str() + ")";
    // (iii)
    r.add_flag("positivity" + at, p.dh.str() + " > 0 on " + iv, "positivity", is_positive_on_open(p.dh, p.a, p.b));
    // (iv)
    if (p.space == SpaceTag::K3)
      r.add_flag("even" + at, "coefficients of " + p.dh.str() + " are even integers", "DH polynomial",
                 p.dh.has_even_integer_coefficients());
    // (v)
    if (p.pair) {
      r.add("pair_dh" + at, "DH polynomial of the class pair", "class pair", p.dh.str(),
            dh_from_pair(l, p.pair->kappa, p.pair->eta).str());
      bool prim = false;
      try {
        prim = is_primitive_embedding(l, {p.pair->kappa, p.pair->eta});
      } catch (const PreconditionError&) {
      }
      r.add_flag("pair_primitive" + at, "class pair spans a primitive sublattice", "class pair", prim);
      if (p.euler_class)
        r.add_flag("euler_class" + at, "Euler class equals eta", "class pair", *p.euler_class == p.pair->eta);
    }
    if (p.kummer_pair)
      r.add("kummer_pair_dh" + at, "DH polynomial of the blowup class pair", "class pair", p.dh.str(),
            dh_from_pair(p.kummer_pair->kappa, p.kummer_pair->eta).str());
  }

  // (vi)
  if (m.period) {
    const Piece &first = m.pieces.front(), &last = m.pieces.back();
    r.add("period_closure", "DH value at the upper end equals the value one period lower", "periodic closure",
          first.dh(first.a.value).get_str(), last.dh(last.b.value).get_str());
  }

  // (vii)
  long total = 0;
  for (const auto& w : m.walls) total += w.fixed_points;
  if (m.expected_fixed_points)
    r.add("fixed_points", "total number of isolated fixed points", "fixed points",
          std::to_string(*m.expected_fixed_points), std::to_string(total));
  return r;
}

}  // namespace k3dh

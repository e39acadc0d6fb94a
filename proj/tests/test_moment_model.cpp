#include <gtest/gtest.h>

#include <algorithm>

#include "k3dh/moment_model.hpp"
#include "k3dh/sampling.hpp"
#include "k3dh/verify.hpp"

using namespace k3dh;
using T = StandardBasisTags;

namespace {

const Lattice& L() { return make_K3(); }

bool all_pass_except(const Report& r, const std::vector<std::string>& failing) {
  for (const auto& c : r.checks()) {
    const bool expect_fail = std::find(failing.begin(), failing.end(), c.id) != failing.end();
    if (c.passed() == expect_fail) return false;
  }
  return true;
}

Piece piece(long a, long b, DHPolynomial p, SpaceTag s = SpaceTag::K3) {
  Piece x;
  x.a = Endpoint::at(a);
  x.b = Endpoint::at(b);
  x.dh = p;
  x.space = s;
  return x;
}

}  // namespace

TEST(DHPair, Examples) {
  EXPECT_EQ(dh_from_pair(k3::e(1) + k3::f(1), k3::e(2)), DHPolynomial(2));
  EXPECT_EQ(dh_from_pair(kappa_hat(), eta_hat(1)), DHPolynomial(-4, 16, -4));
  LatticeVector zero(L(), IntVector(22, Int(0)));
  LatticeVector k = k3::e(1) - 3 * k3::f(1);
  EXPECT_EQ(dh_from_pair(k, zero), DHPolynomial(pairing(k, k)));
  EXPECT_THROW(dh_from_pair(k, LatticeVector(make_H(), IntVector(2))), LatticeMismatch);
}

TEST(DHPair, FromPolynomialExamples) {
  K3Pair p = pair_from_polynomial(DHPolynomial(2));
  EXPECT_EQ(p.kappa, k3::coords({{T::e(1), 1}, {T::f(1), 1}}));
  EXPECT_EQ(p.eta, k3::coords({{T::e(2), 1}}));

  K3Pair q = pair_from_polynomial({-4, 16, -4});
  EXPECT_EQ(q.kappa, k3::coords({{T::e(1), 1}, {T::f(1), -2}}));
  EXPECT_EQ(q.eta, k3::coords({{T::f(1), -8}, {T::e(2), 1}, {T::f(2), -2}}));
  EXPECT_EQ(L().norm(q.kappa), -4);
  EXPECT_EQ(L().pairing(q.kappa, q.eta), -8);
  EXPECT_EQ(L().norm(q.eta), -4);

  EXPECT_THROW(pair_from_polynomial({1, 1, 0}), PreconditionError);
  EXPECT_THROW(pair_from_polynomial({Rat(1, 2), 0, 0}), PreconditionError);
}

TEST(DHPairProperty, RoundTripAndPrimitive) {
  sampling::Rng rng(71);
  for (int k = 0; k < 200; ++k) {
    DHPolynomial p(2 * sampling::uniform(rng, -50, 50), 2 * sampling::uniform(rng, -50, 50),
                   2 * sampling::uniform(rng, -50, 50));
    K3Pair q = pair_from_polynomial(p);
    EXPECT_EQ(dh_from_pair(q), p);
    EXPECT_TRUE(is_primitive_embedding(L(), {q.kappa, q.eta}));
  }
}

TEST(DHPairProperty, IntegralPairsGiveEvenCoefficients) {
  sampling::Rng rng(72);
  for (int k = 0; k < 100; ++k) {
    IntVector a = sampling::random_int_vector(rng, 22, 4), b = sampling::random_int_vector(rng, 22, 4);
    EXPECT_TRUE(dh_from_pair(L(), a, b).has_even_integer_coefficients());
  }
}

TEST(Positivity, Examples) {
  DHPolynomial p(-4, 16, -4);
  EXPECT_TRUE(is_positive_on(p, 1, 3));
  EXPECT_FALSE(is_positive_on(p, 0, 4));
  for (long a = -10; a <= 10; a += 3) EXPECT_TRUE(is_positive_on({4, 0, 4}, a, a + 7));
  EXPECT_THROW(is_positive_on(p, 3, 1), PreconditionError);
  // vertex inside, negative there
  EXPECT_FALSE(is_positive_on({1, -4, 2}, 0, 2));
  EXPECT_TRUE(is_positive_on({1, -4, 5}, 0, 2));
}

TEST(Positivity, OpenInterval) {
  using E = Endpoint;
  DHPolynomial p(-4, 16, -4);
  EXPECT_TRUE(is_positive_on_open(p, E::at(1), E::at(3)));
  EXPECT_FALSE(is_positive_on_open(p, E::at(0), E::at(3)));
  // zero at the end of an open interval is allowed
  EXPECT_TRUE(is_positive_on_open({0, 1, 0}, E::at(0), E::at(5)));
  EXPECT_FALSE(is_positive_on_open({0, 1, 0}, E::at(-1), E::at(5)));
  EXPECT_TRUE(is_positive_on_open({4, 0, 4}, E::minus_infinity(), E::plus_infinity()));
  EXPECT_FALSE(is_positive_on_open({4, 0, -4}, E::at(0), E::plus_infinity()));
  EXPECT_TRUE(is_positive_on_open({1, 1, 0}, E::at(0), E::plus_infinity()));
  EXPECT_FALSE(is_positive_on_open({1, 1, 0}, E::minus_infinity(), E::at(0)));
  EXPECT_FALSE(is_positive_on_open({0, 0, 0}, E::at(0), E::at(1)));
  EXPECT_FALSE(is_positive_on_open({0, -2, 1}, E::at(0), E::at(4)));  // negative on (0, 2)
  EXPECT_FALSE(is_positive_on_open({1, -2, 1}, E::at(0), E::at(4)));  // double root at 1
  EXPECT_THROW(is_positive_on_open(p, E::at(2), E::at(2)), PreconditionError);
}

TEST(WallCrossing, Calibration) {
  const DHPolynomial kummer(4, 0, 4), plus(-4, 16, -4), minus(-4, -16, -4);
  Wall w1{1, 16, {Int(-2), Int(1), Int(1)}};
  EXPECT_EQ(wall_crossing_delta(w1), DHPolynomial(-8, 16, -8));
  EXPECT_EQ(wall_crossing_delta(w1), plus - kummer);
  EXPECT_EQ(wall_crossing_delta(w1), Rat(-8) * DHPolynomial(1, -2, 1));

  Wall w2{-1, 16, {Int(2), Int(-1), Int(-1)}};
  EXPECT_EQ(wall_crossing_delta(w2), DHPolynomial(8, 16, 8));
  // increasing t across -1: minus branch below, Kummer above
  EXPECT_EQ(wall_crossing_delta(w2), kummer - minus);

  EXPECT_TRUE(wall_crossing_delta(Wall{3, 0, {Int(1), Int(1), Int(1)}}).is_zero());
  EXPECT_THROW(wall_crossing_delta(Wall{0, 2, {Int(1), Int(0), Int(1)}}), PreconditionError);
  EXPECT_NE(wall_crossing_delta(Wall{1, 15, {Int(-2), Int(1), Int(1)}}), plus - kummer);
}

TEST(WallCrossing, PeriodicClosure) {
  // the K3 branch shifted down by one period continues the Kummer piece at -1
  const DHPolynomial plus(-4, 16, -4), kummer(4, 0, 4);
  Wall w2{-1, 16, {Int(2), Int(-1), Int(-1)}};
  EXPECT_EQ(kummer - plus.shifted(4), wall_crossing_delta(w2));
  EXPECT_EQ(plus.shifted(4)(-1), 8);
  EXPECT_EQ(plus.shifted(4), DHPolynomial(-4, -16, -4));
}

TEST(Validate, Theorem1Model) {
  Report r = validate(theorem1_model());
  EXPECT_TRUE(r.all_passed()) << r.to_text();
  EXPECT_EQ(r.find("fixed_points")->computed, "32");
  EXPECT_EQ(r.find("continuity@1")->computed, "8");
  EXPECT_EQ(r.find("continuity@-1")->computed, "8");
  EXPECT_EQ(r.find("period_closure")->computed, "8");
  EXPECT_EQ(r.find("wall_crossing@1")->computed, "-8 + 16 t + -8 t^2");
  for (const char* id : {"continuity@1", "continuity@-1", "wall_crossing@1", "wall_crossing@-1", "weights@1",
                         "weights@-1", "positivity#0", "positivity#1", "even#1", "pair_dh#1", "pair_primitive#1",
                         "euler_class#1", "kummer_pair_dh#1", "period_closure", "fixed_points"})
    EXPECT_NE(r.find(id), nullptr) << id;
  EXPECT_EQ(r.find("even#0"), nullptr);
}

TEST(Validate, CountFifteen) {
  GluedModel m = theorem1_model();
  m.walls[0].fixed_points = 15;
  Report r = validate(m);
  EXPECT_FALSE(r.find("wall_crossing@1")->passed());
  EXPECT_TRUE(all_pass_except(r, {"wall_crossing@1", "fixed_points"})) << r.to_text();
}

TEST(Validate, SinglePiece) {
  GluedModel m;
  Piece p = piece(-1, 1, {4, 0, 4});
  p.pair = pair_from_polynomial(p.dh);
  m.pieces = {p};
  Report r = validate(m);
  EXPECT_TRUE(r.all_passed()) << r.to_text();
  EXPECT_EQ(r.checks().size(), 4u);  // positivity, even, pair_dh, pair_primitive
}

TEST(Validate, PerturbationsFail) {
  for (Perturbation p : {Perturbation::dh, Perturbation::count, Perturbation::weight})
    EXPECT_FALSE(validate(perturbed(theorem1_model(), p)).all_passed());
}

TEST(ValidateProperty, EveryFixtureValueMatters) {
  const GluedModel base = theorem1_model();
  for (std::size_t i = 0; i < base.pieces.size(); ++i)
    for (int k = 0; k < 3; ++k)
      for (int d : {-2, -1, 1, 2}) {
        GluedModel m = base;
        Rat& c = k == 0 ? m.pieces[i].dh.c0 : k == 1 ? m.pieces[i].dh.c1 : m.pieces[i].dh.c2;
        c += d;
        EXPECT_FALSE(validate(m).all_passed()) << "piece " << i << " coefficient " << k << " delta " << d;
      }
  for (std::size_t w = 0; w < base.walls.size(); ++w) {
    for (int d : {-1, 1}) {
      GluedModel m = base;
      m.walls[w].fixed_points += d;
      EXPECT_FALSE(validate(m).all_passed());
    }
    for (std::size_t k = 0; k < 3; ++k)
      for (int d : {-1, 1}) {
        GluedModel m = base;
        m.walls[w].weights[k] += d;
        EXPECT_FALSE(validate(m).all_passed()) << "wall " << w << " weight " << k << " delta " << d;
      }
  }
}

TEST(ValidateProperty, FailingWallLeavesOtherChecksAlone) {
  const Report good = validate(theorem1_model());
  GluedModel m = theorem1_model();
  m.walls[1].weights = {Int(2), Int(-1), Int(1)};
  const Report bad = validate(m);
  ASSERT_EQ(good.checks().size(), bad.checks().size());
  for (std::size_t i = 0; i < good.checks().size(); ++i)
    if (good.checks()[i].id.find("@-1") == std::string::npos) {
      EXPECT_EQ(good.checks()[i].passed(), bad.checks()[i].passed()) << good.checks()[i].id;
    }
  EXPECT_FALSE(bad.find("wall_crossing@-1")->passed());
}

TEST(Validate, ZeroWeightIsAFailingCheck) {
  GluedModel m = theorem1_model();
  m.walls[0].weights[1] = 0;
  Report r = validate(m);
  EXPECT_FALSE(r.find("weights@1")->passed());
  EXPECT_EQ(r.find("wall_crossing@1"), nullptr);
}

TEST(Validate, StructuralErrors) {
  GluedModel m = theorem1_model();
  m.walls.pop_back();
  EXPECT_THROW(validate(m), PreconditionError);

  m = theorem1_model();
  m.walls.push_back(Wall{2, 1, {Int(1), Int(1), Int(1)}});
  EXPECT_THROW(validate(m), PreconditionError);

  m = theorem1_model();
  m.period = Rat(5);
  EXPECT_THROW(validate(m), PreconditionError);

  m = theorem1_model();
  m.pieces[1].a = Endpoint::at(Rat(3, 2));
  EXPECT_THROW(validate(m), PreconditionError);

  EXPECT_THROW(validate(GluedModel{}), PreconditionError);
}

TEST(Validate, InfiniteEnds) {
  GluedModel m;
  Piece a = piece(0, 1, {2, 2, 0});
  a.a = Endpoint::minus_infinity();
  a.dh = {4, 0, 4};
  Piece b = piece(1, 2, {4, 0, 4});
  b.b = Endpoint::plus_infinity();
  b.dh = {4, 0, 4};
  m.pieces = {a, b};
  m.walls = {Wall{1, 0, {Int(1), Int(1), Int(1)}}};
  Report r = validate(m);
  EXPECT_TRUE(r.all_passed()) << r.to_text();
}

TEST(EulerClass, Match) {
  Piece a = piece(1, 3, {-4, 16, -4});
  a.pair = pair_from_polynomial(a.dh);
  Piece b = a;
  EXPECT_TRUE(euler_class_match(a, b));

  // the constant model: same pair at both ends
  Piece c = piece(0, 1, {2});
  c.pair = pair_from_polynomial(c.dh);
  EXPECT_TRUE(euler_class_match(c, c));

  // marked copy
  Isometry mk = kummer_marking();
  b.pair = K3Pair{mk(a.pair->kappa), mk(a.pair->eta)};
  EXPECT_TRUE(euler_class_match(a, b));

  Piece d = piece(1, 3, {-4, 16, -6});
  d.pair = pair_from_polynomial(d.dh);
  EXPECT_FALSE(euler_class_match(a, d));

  Piece e = piece(1, 3, {-4, 16, -4});
  EXPECT_THROW(euler_class_match(a, e), PreconditionError);
}

#include <gtest/gtest.h>

#include "k3dh/isometry.hpp"
#include "k3dh/json_io.hpp"
#include "k3dh/moment_model.hpp"
#include "k3dh/sampling.hpp"
#include "k3dh/verify.hpp"

using namespace k3dh;
using T = StandardBasisTags;

namespace {

const Lattice& L() { return make_K3(); }

IntVector c(std::initializer_list<std::pair<std::size_t, long>> terms) { return k3::coords(terms); }

void expect_valid(const Isometry& g) {
  const IntMatrix& m = g.matrix();
  EXPECT_EQ(m.transpose() * L().gram() * m, L().gram());
  EXPECT_EQ(abs(det(m)), 1);
}

}  // namespace

TEST(Verify, Examples) {
  EXPECT_NO_THROW(verify(IntMatrix::identity(22), L()));
  EXPECT_NO_THROW(verify(flip_third_H(L()).matrix(), L()));
  IntMatrix bad = IntMatrix::identity(22);
  bad(T::f(1), T::e(1)) = 1;  // e1 -> e1 + f1 only
  EXPECT_THROW(verify(bad, L()), PreconditionError);
  EXPECT_THROW(verify(IntMatrix::identity(21), L()), DimensionError);
}

TEST(Transvection, E1E2) {
  Isometry t = eichler_transvection(k3::e(1), k3::e(2));
  EXPECT_EQ(t(k3::f(1)), k3::f(1) + k3::e(2));
  EXPECT_EQ(pairing(t(k3::f(1)), t(k3::f(1))), 0);
  EXPECT_EQ(t(k3::e(1)), k3::e(1));
  expect_valid(t);
}

TEST(Transvection, ZeroIsIdentity) {
  Isometry t = eichler_transvection(L(), c({{T::e(1), 1}}), IntVector(22, Int(0)));
  EXPECT_EQ(t.matrix(), IntMatrix::identity(22));
}

TEST(Transvection, E1F2) {
  Isometry t = eichler_transvection(k3::e(1), k3::f(2));
  EXPECT_EQ(t(k3::f(1)), k3::f(1) + k3::f(2));
  EXPECT_EQ(t(k3::e(2)), k3::e(2) - k3::e(1));
  expect_valid(t);
}

TEST(Transvection, Preconditions) {
  EXPECT_THROW(eichler_transvection(k3::e(1) + k3::f(1), k3::e(2)), PreconditionError);
  EXPECT_THROW(eichler_transvection(k3::e(1), k3::f(1)), PreconditionError);
}

TEST(TransvectionProperty, DetOneFixesE) {
  sampling::Rng rng(51);
  for (int k = 0; k < 40; ++k) {
    const int i = sampling::uniform(rng, 1, 3);
    IntVector e = c({{T::e(i), 1}});
    IntVector a = sampling::random_int_vector(rng, 22, 3);
    a[T::f(i)] = 0;
    Isometry t = eichler_transvection(L(), e, a);
    EXPECT_EQ(det(t.matrix()), 1);
    EXPECT_EQ(t(e), e);
    expect_valid(t);
    EXPECT_EQ(compose(t, inverse(t)).matrix(), IntMatrix::identity(22));
  }
}

TEST(Components, Calibration) {
  EXPECT_TRUE(preserves_components(identity_isometry(L())));
  EXPECT_FALSE(preserves_components(flip_third_H(L())));
  EXPECT_FALSE(preserves_components(minus_identity(L())));
  for (int i = 1; i <= 3; ++i) EXPECT_FALSE(preserves_components(negate_hyperbolic(L(), i)));
}

TEST(ComponentsProperty, Homomorphism) {
  sampling::Rng rng(52);
  std::vector<Isometry> sample;
  for (int k = 0; k < 10; ++k) {
    Isometry g = sampling::random_isometry(rng, L(), 3);
    if (k % 3 == 1) g = compose(flip_third_H(L()), g);
    if (k % 4 == 2) g = compose(g, minus_identity(L()));
    sample.push_back(g);
  }
  for (const auto& a : sample)
    for (const auto& b : sample)
      EXPECT_EQ(preserves_components(compose(a, b)), preserves_components(a) == preserves_components(b));
}

TEST(Standardize, StandardPairIsFixed) {
  const K3Pair p = pair_from_polynomial({-4, 16, -4});
  auto [kt, et] = standard_pair(L(), p.kappa, p.eta);
  EXPECT_EQ(kt, p.kappa);
  EXPECT_EQ(et, p.eta);
  Isometry g = map_pair_to_standard(L(), p.kappa, p.eta);
  EXPECT_EQ(g(p.kappa), kt);
  EXPECT_EQ(g(p.eta), et);
}

TEST(Standardize, FreePairs) {
  for (long l0 = -3; l0 <= 3; ++l0)
    for (long l1 = -3; l1 <= 3; ++l1)
      for (long l2 = -2; l2 <= 2; ++l2) {
        IntVector k = c({{T::e(1), 1}, {T::f(1), l0}});
        IntVector h = c({{T::f(1), -l1}, {T::e(2), 1}, {T::f(2), l2}});
        Isometry g = map_pair_to_standard(L(), k, h);
        auto [kt, et] = standard_pair(L(), k, h);
        EXPECT_EQ(kt[T::f(1)], l0);
        EXPECT_EQ(g(k), kt);
        EXPECT_EQ(g(h), et);
      }
}

TEST(StandardizeProperty, TransvectedRoundTrip) {
  sampling::Rng rng(53);
  const K3Pair p = pair_from_polynomial({-4, 16, -4});
  for (int k = 0; k < 60; ++k) {
    Isometry t = sampling::random_isometry(rng, L(), 1 + k % 5, 2 + k % 3);
    IntVector kk = t(p.kappa), ee = t(p.eta);
    Isometry g = map_pair_to_standard(L(), kk, ee);
    auto [kt, et] = standard_pair(L(), kk, ee);
    EXPECT_EQ(g(kk), kt);
    EXPECT_EQ(g(ee), et);
    expect_valid(g);
  }
}

TEST(StandardizeProperty, RandomPrimitivePairs) {
  sampling::Rng rng(54);
  int done = 0;
  for (int k = 0; k < 200 && done < 60; ++k) {
    IntVector kk = sampling::random_int_vector(rng, 22, 3), ee = sampling::random_int_vector(rng, 22, 3);
    Sublattice s = make_sublattice(L(), {kk, ee});
    if (s.rank != 2 || !is_primitive_embedding(L(), {kk, ee})) continue;
    Isometry g = map_pair_to_standard(L(), kk, ee);
    auto [kt, et] = standard_pair(L(), kk, ee);
    EXPECT_EQ(g(kk), kt);
    EXPECT_EQ(g(ee), et);
    ++done;
  }
  EXPECT_GE(done, 50);
}

TEST(Standardize, RejectsNonPrimitive) {
  IntVector k = c({{T::e(1), 2}});
  IntVector h = c({{T::e(2), 1}});
  EXPECT_THROW(map_pair_to_standard(L(), k, h), PreconditionError);
  EXPECT_THROW(map_pair_to_standard(L(), k, k), PreconditionError);
}

TEST(LemmaIso, SamePair) {
  const K3Pair p = pair_from_polynomial({2, 0, 0});
  Isometry id = lemma_iso(L(), p.kappa, p.eta, p.kappa, p.eta, true);
  EXPECT_TRUE(preserves_components(id));
  Isometry rev = lemma_iso(L(), p.kappa, p.eta, p.kappa, p.eta, false);
  EXPECT_FALSE(preserves_components(rev));
  EXPECT_EQ(rev(p.kappa), p.kappa);
  EXPECT_EQ(rev(p.eta), p.eta);
}

TEST(LemmaIso, MarkedBlowupPair) {
  const K3Pair p = pair_from_polynomial({-4, 16, -4});
  Isometry mk = kummer_marking();
  const IntVector kk = mk(p.kappa), ee = mk(p.eta);
  EXPECT_EQ(dh_from_pair(L(), kk, ee), DHPolynomial(-4, 16, -4));
  for (bool preserve : {true, false}) {
    Isometry phi = lemma_iso(L(), kk, ee, p.kappa, p.eta, preserve);
    EXPECT_EQ(phi(p.kappa), kk);
    EXPECT_EQ(phi(p.eta), ee);
    EXPECT_EQ(preserves_components(phi), preserve);
    expect_valid(phi);
  }
}

TEST(LemmaIsoProperty, TransvectedCopiesBothModes) {
  sampling::Rng rng(55);
  const K3Pair p = pair_from_polynomial({-4, 16, -4});
  for (int k = 0; k < 30; ++k) {
    Isometry t = sampling::random_isometry(rng, L(), 3, 2);
    const IntVector kk = t(p.kappa), ee = t(p.eta);
    for (bool preserve : {true, false}) {
      Isometry phi = lemma_iso(L(), kk, ee, p.kappa, p.eta, preserve);
      EXPECT_EQ(phi(p.kappa), kk);
      EXPECT_EQ(phi(p.eta), ee);
      EXPECT_EQ(preserves_components(phi), preserve);
    }
  }
}

TEST(LemmaIso, GramMismatch) {
  IntVector k = c({{T::e(1), 1}, {T::f(1), -2}}), h = c({{T::e(2), 1}});
  IntVector k2 = c({{T::e(1), 1}, {T::f(1), -3}});
  EXPECT_THROW(lemma_iso(L(), k, h, k2, h, true), PreconditionError);
}

TEST(LemmaIso, LatticeVectorOverload) {
  LatticeVector k = k3::e(1) - 2 * k3::f(1), h = k3::e(2);
  Isometry phi = lemma_iso(k, h, k, h, false);
  EXPECT_EQ(phi(k), k);
  EXPECT_THROW(lemma_iso(k, h, LatticeVector(make_H(), IntVector(2)), h, true), LatticeMismatch);
}

TEST(LemmaIso, PairsFixture) {
  auto p = json_io::pairs_from_json(json_io::read_file(K3DH_TEST_DATA_DIR "/pairs.json"));
  for (bool preserve : {true, false}) {
    Isometry phi = lemma_iso(L(), p.kappa, p.eta, p.kappa_p, p.eta_p, preserve);
    EXPECT_EQ(phi(p.kappa_p), p.kappa);
    EXPECT_EQ(phi(p.eta_p), p.eta);
  }
}

TEST(Inverse, MatchesCompose) {
  sampling::Rng rng(56);
  Isometry g = sampling::random_isometry(rng, L(), 4);
  EXPECT_EQ(compose(inverse(g), g).matrix(), IntMatrix::identity(22));
  EXPECT_THROW(compose(g, identity_isometry(make_H())), LatticeMismatch);
}

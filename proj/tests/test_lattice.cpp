#include <gtest/gtest.h>

#include "k3dh/json_io.hpp"
#include "k3dh/lattice.hpp"
#include "k3dh/sampling.hpp"

using namespace k3dh;
using T = StandardBasisTags;

TEST(Lattice, H) {
  Lattice h = make_H();
  EXPECT_EQ(h.rank(), 2u);
  EXPECT_TRUE(is_even(h));
  EXPECT_TRUE(is_unimodular(h));
  EXPECT_EQ(det(h.gram()), -1);
  EXPECT_EQ(signature(h), (Signature{1, 1}));
}

TEST(Lattice, E8) {
  Lattice e = make_E8(1);
  EXPECT_EQ(e.rank(), 8u);
  EXPECT_EQ(det(e.gram()), 1);
  EXPECT_TRUE(is_even(e));
  EXPECT_EQ(signature(e), (Signature{8, 0}));
  EXPECT_EQ(signature(make_E8(-1)), (Signature{0, 8}));
}

TEST(Lattice, K3) {
  const Lattice& l = make_K3();
  EXPECT_EQ(l.rank(), 22u);
  EXPECT_TRUE(is_even(l));
  EXPECT_TRUE(is_unimodular(l));
  EXPECT_EQ(signature(l), (Signature{3, 19}));
  EXPECT_EQ(det(l.gram()), -1);
  EXPECT_TRUE(make_K3().same_as(l));
}

TEST(Lattice, OddRankOne) {
  Lattice one(IntMatrix::from_rows({{1}}));
  EXPECT_FALSE(is_even(one));
  EXPECT_TRUE(is_unimodular(one));
}

TEST(Lattice, DegenerateSignatureThrows) {
  Lattice z(IntMatrix::from_rows({{0, 0}, {0, 2}}));
  EXPECT_THROW(signature(z), DegenerateForm);
}

TEST(Lattice, RejectsBadGram) {
  EXPECT_THROW(Lattice(IntMatrix::from_rows({{0, 1}, {2, 0}})), PreconditionError);
  EXPECT_THROW(Lattice(IntMatrix(2, 3)), DimensionError);
}

TEST(Lattice, StandardTags) {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      EXPECT_EQ(pairing(k3::e(i), k3::e(j)), 0);
      EXPECT_EQ(pairing(k3::f(i), k3::f(j)), 0);
      EXPECT_EQ(pairing(k3::e(i), k3::f(j)), i == j ? 1 : 0);
    }
  EXPECT_EQ(T::e8_block(1), 6u);
  EXPECT_EQ(T::e8_block(2), 14u);
}

TEST(Lattice, PairingExamples) {
  EXPECT_EQ(pairing(k3::e(1), k3::f(1)), 1);
  LatticeVector zero(make_K3(), IntVector(22, Int(0)));
  EXPECT_EQ(pairing(k3::e(2) + k3::f(3), zero), 0);
  for (long l0 = -5; l0 <= 5; ++l0) {
    LatticeVector kt = k3::vec({{T::e(1), 1}, {T::f(1), l0}});
    EXPECT_EQ(pairing(kt, kt), 2 * l0);
    IntVector c = kt.coords;
    EXPECT_EQ(pairing(kt, kt), dot(c, make_K3().gram() * c));
  }
}

TEST(Lattice, MismatchDetected) {
  Lattice other = make_H();
  LatticeVector u(other, IntVector{Int(1), Int(0)});
  LatticeVector v(make_H(), IntVector{Int(0), Int(1)});
  EXPECT_THROW(pairing(u, v), LatticeMismatch);
  EXPECT_THROW(k3::e(1) + LatticeVector(other, IntVector{Int(1), Int(0)}), LatticeMismatch);
  EXPECT_THROW(LatticeVector(other, IntVector(3)), DimensionError);
}

TEST(LatticeProperty, SymmetricAndEven) {
  const Lattice& l = make_K3();
  sampling::Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    IntVector u = sampling::random_int_vector(rng, 22, 5), v = sampling::random_int_vector(rng, 22, 5);
    EXPECT_EQ(l.pairing(u, v), l.pairing(v, u));
    EXPECT_EQ(l.norm(u) % 2, 0);
  }
}

TEST(LatticeProperty, BlocksOrthogonal) {
  const Lattice& l = make_K3();
  sampling::Rng rng(12);
  // summand boundaries: H1, H2, H3, -E8, -E8
  const std::vector<std::pair<std::size_t, std::size_t>> blocks{{0, 2}, {2, 4}, {4, 6}, {6, 14}, {14, 22}};
  for (int k = 0; k < 100; ++k) {
    std::size_t a = sampling::uniform(rng, 0, 4), b = sampling::uniform(rng, 0, 4);
    if (a == b) continue;
    IntVector u(22, Int(0)), v(22, Int(0));
    for (std::size_t i = blocks[a].first; i < blocks[a].second; ++i) u[i] = sampling::uniform(rng, -4, 4);
    for (std::size_t i = blocks[b].first; i < blocks[b].second; ++i) v[i] = sampling::uniform(rng, -4, 4);
    EXPECT_EQ(l.pairing(u, v), 0);
  }
}

TEST(Lattice, DirectSumAndScale) {
  Lattice s = direct_sum({make_H(), make_E8(1)});
  EXPECT_EQ(s.rank(), 10u);
  EXPECT_EQ(signature(s), (Signature{9, 1}));
  Lattice h2 = scaled(make_H(), 2);
  EXPECT_EQ(det(h2.gram()), -4);
  EXPECT_FALSE(is_unimodular(h2));
}

TEST(LatticeJson, RoundTrip) {
  Lattice e = make_E8(-1);
  Lattice back = json_io::lattice_from_json(json_io::lattice_to_json(e));
  EXPECT_EQ(back.gram(), e.gram());
}

TEST(LatticeJson, RejectsBadInput) {
  EXPECT_THROW(json_io::lattice_from_json(ojson::parse(R"({"rank": 2, "gram": [[0,1],[2,0]]})")), ParseError);
  EXPECT_THROW(json_io::lattice_from_json(ojson::parse(R"({"rank": 2, "gram": [[0,1]]})")), ParseError);
  EXPECT_THROW(json_io::lattice_from_json(ojson::parse(R"({"rank": 1, "gram": [[1.5]]})")), ParseError);
  EXPECT_THROW(json_io::lattice_from_json(ojson::parse(R"({"gram": [[2]]})")), ParseError);
}

#include <gtest/gtest.h>

#include "k3dh/json_io.hpp"
#include "k3dh/verify.hpp"

using namespace k3dh;
using namespace k3dh::json_io;

namespace {

ojson model_json() { return model_to_json(theorem1_model()); }

}  // namespace

TEST(ModelJson, RoundTrip) {
  const ojson j = model_json();
  GluedModel m = model_from_json(j);
  EXPECT_EQ(model_to_json(m), j);
  EXPECT_EQ(m.pieces.size(), 2u);
  EXPECT_EQ(m.walls[1].weights[2], -1);
  EXPECT_EQ(*m.period, 4);
  EXPECT_TRUE(validate(m).all_passed());
}

TEST(ModelJson, FixtureMatchesBuiltIn) {
  GluedModel m = model_from_file(K3DH_DATA_DIR "/theorem1.json");
  EXPECT_EQ(model_to_json(m), model_json());
  const KummerPair& kp = *m.pieces[1].kummer_pair;
  EXPECT_EQ(kp.kappa, kappa_hat());
  EXPECT_EQ(kp.eta, eta_hat(1));
}

TEST(ModelJson, TestFixtures) {
  GluedModel bad = model_from_file(K3DH_TEST_DATA_DIR "/bad_count_model.json");
  EXPECT_EQ(bad.walls[0].fixed_points, 15);
  EXPECT_FALSE(validate(bad).all_passed());
  GluedModel mal = model_from_file(K3DH_TEST_DATA_DIR "/malformed_model.json");
  EXPECT_THROW(validate(mal), PreconditionError);
}

TEST(ModelJson, UnknownKeysRejected) {
  ojson j = model_json();
  j["colour"] = "blue";
  EXPECT_THROW(model_from_json(j), ParseError);

  j = model_json();
  j["pieces"][0]["extra"] = 1;
  EXPECT_THROW(model_from_json(j), ParseError);

  j = model_json();
  j["walls"][0]["multiplicity"] = 1;
  EXPECT_THROW(model_from_json(j), ParseError);

  j = model_json();
  j["pieces"][1]["class_pair"]["zeta"] = ojson::object();
  EXPECT_THROW(model_from_json(j), ParseError);
}

TEST(ModelJson, MissingKeysRejected) {
  ojson j = model_json();
  j.erase("walls");
  EXPECT_THROW(model_from_json(j), ParseError);
  j = model_json();
  j["pieces"][0].erase("dh");
  EXPECT_THROW(model_from_json(j), ParseError);
}

TEST(ModelJson, FloatsRejected) {
  ojson j = model_json();
  j["pieces"][0]["dh"][0] = 4.0;
  EXPECT_THROW(model_from_json(j), ParseError);
  j = model_json();
  j["walls"][0]["level"] = 1.0;
  EXPECT_THROW(model_from_json(j), ParseError);
  j = model_json();
  j["walls"][0]["fixed_points"] = 16.0;
  EXPECT_THROW(model_from_json(j), ParseError);
  j = model_json();
  j["pieces"][0]["dh"][0] = "0.5";
  EXPECT_THROW(model_from_json(j), ParseError);
}

TEST(ModelJson, BadValues) {
  ojson j = model_json();
  j["walls"][0]["fixed_points"] = -1;
  EXPECT_THROW(model_from_json(j), ParseError);
  j = model_json();
  j["walls"][0]["weights"] = {1, 2};
  EXPECT_THROW(model_from_json(j), ParseError);
  j = model_json();
  j["pieces"][0]["space"] = "torus";
  EXPECT_THROW(model_from_json(j), ParseError);
  j = model_json();
  j["pieces"][1]["class_pair"]["eta"]["f1"] = "1/2";
  EXPECT_THROW(model_from_json(j), ParseError);
  j = model_json();
  j["pieces"][1]["class_pair"]["eta"]["g1"] = 1;
  EXPECT_THROW(model_from_json(j), ParseError);
  j = model_json();
  j["pieces"][1]["class_pair"]["eta"]["22"] = 1;
  EXPECT_THROW(model_from_json(j), ParseError);
}

TEST(ModelJson, RationalsAndInfinities) {
  ojson j = model_json();
  j["pieces"][0]["interval"][0] = "-inf";
  j["pieces"][0]["dh"] = {"8/2", 0, 4};
  GluedModel m = model_from_json(j);
  EXPECT_FALSE(m.pieces[0].a.finite());
  EXPECT_EQ(m.pieces[0].dh, DHPolynomial(4, 0, 4));
  // periodic closure needs a finite start
  EXPECT_THROW(validate(m), PreconditionError);
}

TEST(Vectors, DenseAndSparse) {
  ojson dense = ojson::array();
  for (int i = 0; i < 22; ++i) dense.push_back(i == 7 ? 3 : 0);
  ojson sparse = {{"7", 3}};
  EXPECT_EQ(int_vector_from_json(dense, 22, "v"), int_vector_from_json(sparse, 22, "v"));
  EXPECT_EQ(vector_to_json(int_vector_from_json(sparse, 22, "v")), sparse);
  ojson named = {{"e1", 1}, {"f3", -2}};
  IntVector v = int_vector_from_json(named, 22, "v");
  EXPECT_EQ(v[0], 1);
  EXPECT_EQ(v[5], -2);
  EXPECT_EQ(vector_to_json(v), named);
  dense.push_back(0);
  EXPECT_THROW(int_vector_from_json(dense, 22, "v"), ParseError);
}

TEST(Records, PeriodAndPairs) {
  PeriodRecord p = period_from_json(read_file(K3DH_TEST_DATA_DIR "/period.json"));
  EXPECT_EQ(p.kappa.size(), 22u);
  EXPECT_TRUE(is_in_omega(make_K3(), p.alpha));
  PairsRecord q = pairs_from_json(read_file(K3DH_TEST_DATA_DIR "/pairs.json"));
  EXPECT_EQ(dh_from_pair(make_K3(), q.kappa, q.eta), dh_from_pair(make_K3(), q.kappa_p, q.eta_p));
  ojson j = read_file(K3DH_TEST_DATA_DIR "/pairs.json");
  j["theta"] = ojson::object();
  EXPECT_THROW(pairs_from_json(j), ParseError);
  EXPECT_THROW(read_file(K3DH_TEST_DATA_DIR "/does_not_exist.json"), ParseError);
}

TEST(ReportJson, RoundTripByteIdentical) {
  Report r = validate(theorem1_model());
  const std::string s = r.to_json().dump(2);
  Report back = Report::from_json(ojson::parse(s));
  EXPECT_EQ(back.to_json().dump(2), s);
  EXPECT_EQ(back.checks().size(), r.checks().size());
  EXPECT_EQ(back.title(), r.title());
}

TEST(ReportJson, FailingReportRoundTrip) {
  Report r = validate(perturbed(theorem1_model(), Perturbation::weight));
  ojson j = r.to_json();
  EXPECT_GT(j["summary"]["failed"].get<int>(), 0);
  EXPECT_EQ(Report::from_json(j).to_json(), j);
}

TEST(ReportJson, Rejections) {
  ojson j = validate(theorem1_model()).to_json();
  ojson v = j;
  v["schema_version"] = 2;
  EXPECT_THROW(Report::from_json(v), ParseError);
  ojson f = j;
  f["checks"][0]["passed"] = false;
  EXPECT_THROW(Report::from_json(f), ParseError);
  ojson m = j;
  m["checks"][0].erase("computed");
  EXPECT_THROW(Report::from_json(m), ParseError);
}

#pragma once

// JSON encodings. Numbers are exact: integers as JSON integers or decimal
// strings, rationals as "p/q" strings. Floating-point JSON numbers are rejected.
// Any structural problem raises ParseError.

#include <cstddef>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "k3dh/errors.hpp"
#include "k3dh/exact_linalg.hpp"
#include "k3dh/kummer.hpp"
#include "k3dh/lattice.hpp"
#include "k3dh/moment_model.hpp"
#include "k3dh/period_domain.hpp"
#include "k3dh/report.hpp"

namespace k3dh::json_io {

using nlohmann::json;

inline ojson read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return ojson::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline void require_keys(const ojson& j, const std::string& what, std::initializer_list<const char*> required,
                         std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw ParseError(what + ": expected an object");
  std::set<std::string> known;
  for (const char* k : required) {
    if (!j.contains(k)) throw ParseError(what + ": missing field '" + k + "'");
    known.insert(k);
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) throw ParseError(what + ": unknown field '" + k + "'");
}

inline Int to_int(const ojson& j, const std::string& what) {
  if (j.is_number_unsigned()) return Int(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Rat r = parse_rational(j.get<std::string>());
    if (r.get_den() != 1) throw ParseError(what + ": not an integer: " + j.get<std::string>());
    return r.get_num();
  }
  throw ParseError(what + ": expected an integer");
}

inline Rat to_rat(const ojson& j, const std::string& what) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rat(to_int(j, what));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(what + ": " + e.what());
    }
  }
  throw ParseError(what + ": expected an exact rational (integer or \"p/q\" string)");
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline long to_count(const ojson& j, const std::string& what) {
  Int v = to_int(j, what);
  if (v < 0 || !v.fits_slong_p()) throw ParseError(what + ": expected a non-negative count");
  return v.get_si();
}

// ---------------------------------------------------------------------------
// lattices

inline Lattice lattice_from_json(const ojson& j) {
  require_keys(j, "lattice", {"rank", "gram"}, {"name"});
  const long n = to_count(j.at("rank"), "lattice.rank");
  const ojson& g = j.at("gram");
  if (!g.is_array() || static_cast<long>(g.size()) != n) throw ParseError("lattice.gram: expected rank rows");
  IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!g[i].is_array() || g[i].size() != m.cols()) throw ParseError("lattice.gram: row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = to_int(g[i][k], "lattice.gram");
  }
  if (!m.symmetric()) throw ParseError("lattice.gram: not symmetric");
  return Lattice(std::move(m), j.value("name", std::string("custom")));
}

inline ojson lattice_to_json(const Lattice& l) {
  ojson j;
  j["rank"] = l.rank();
  j["gram"] = ojson::array();
  for (std::size_t i = 0; i < l.rank(); ++i) {
    ojson row = ojson::array();
    for (std::size_t k = 0; k < l.rank(); ++k) row.push_back(l.gram()(i, k).get_si());
    j["gram"].push_back(std::move(row));
  }
  return j;
}

// ---------------------------------------------------------------------------
// vectors: dense arrays, or sparse objects keyed by "e1".."f3" or coordinate index

inline std::size_t coordinate_key(const std::string& k, std::size_t rank, const std::string& what) {
  using T = StandardBasisTags;
  if (k.size() == 2 && (k[0] == 'e' || k[0] == 'f') && k[1] >= '1' && k[1] <= '3') {
    const int i = k[1] - '0';
    std::size_t idx = k[0] == 'e' ? T::e(i) : T::f(i);
    if (idx >= rank) throw ParseError(what + ": key '" + k + "' out of range");
    return idx;
  }
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(k, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != k.size() || k.empty() || v >= rank) throw ParseError(what + ": bad coordinate key '" + k + "'");
  return v;
}

inline RatVector rat_vector_from_json(const ojson& j, std::size_t rank, const std::string& what) {
  RatVector v(rank);
  if (j.is_array()) {
    if (j.size() != rank) throw ParseError(what + ": expected " + std::to_string(rank) + " entries");
    for (std::size_t i = 0; i < rank; ++i) v[i] = to_rat(j[i], what);
    return v;
  }
  if (j.is_object()) {
    for (const auto& [k, x] : j.items()) v[coordinate_key(k, rank, what)] += to_rat(x, what);
    return v;
  }
  throw ParseError(what + ": expected an array or a sparse object");
}

inline IntVector int_vector_from_json(const ojson& j, std::size_t rank, const std::string& what) {
  RatVector r = rat_vector_from_json(j, rank, what);
  IntVector v(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    if (r[i].get_den() != 1) throw ParseError(what + ": entries must be integers");
    v[i] = r[i].get_num();
  }
  return v;
}

/// Sparse encoding with the named K3 coordinates where they apply.
inline ojson vector_to_json(const IntVector& v) {
  ojson j = ojson::object();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    std::string key = i < 6 ? std::string(1, i % 2 == 0 ? 'e' : 'f') + std::to_string(i / 2 + 1) : std::to_string(i);
    j[key] = v[i].fits_slong_p() ? ojson(v[i].get_si()) : ojson(v[i].get_str());
  }
  return j;
}

inline ojson rat_vector_to_json(const RatVector& v) {
  ojson j = ojson::array();
  for (const auto& x : v) j.push_back(x.get_str());
  return j;
}

// ---------------------------------------------------------------------------
// period data {kappa, re, im}

struct PeriodRecord {
  RatVector kappa;
  PeriodPoint alpha;
};

inline PeriodRecord period_from_json(const ojson& j, std::size_t rank = StandardBasisTags::rank) {
  require_keys(j, "period record", {"kappa", "re", "im"});
  return {rat_vector_from_json(j.at("kappa"), rank, "kappa"),
          {rat_vector_from_json(j.at("re"), rank, "re"), rat_vector_from_json(j.at("im"), rank, "im")}};
}

// ---------------------------------------------------------------------------
// isometry request {kappa, eta, kappa_p, eta_p}

struct PairsRecord {
  IntVector kappa, eta, kappa_p, eta_p;
};

inline PairsRecord pairs_from_json(const ojson& j, std::size_t rank = StandardBasisTags::rank) {
  require_keys(j, "pairs record", {"kappa", "eta", "kappa_p", "eta_p"});
  return {int_vector_from_json(j.at("kappa"), rank, "kappa"), int_vector_from_json(j.at("eta"), rank, "eta"),
          int_vector_from_json(j.at("kappa_p"), rank, "kappa_p"), int_vector_from_json(j.at("eta_p"), rank, "eta_p")};
}

// ---------------------------------------------------------------------------
// glued models

inline Endpoint endpoint_from_json(const ojson& j, const std::string& what) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return Endpoint::plus_infinity();
    if (s == "-inf") return Endpoint::minus_infinity();
  }
  return Endpoint::at(to_rat(j, what));
}

inline ojson endpoint_to_json(const Endpoint& e) { return e.str(); }

inline KummerClass kummer_class_from_json(const ojson& j, const std::string& what) {
  require_keys(j, what, {"torus", "exc"});
  KummerClass k;
  k.torus = rat_vector_from_json(j.at("torus"), torus_rank, what + ".torus");
  k.exc = rat_vector_from_json(j.at("exc"), exceptional_count, what + ".exc");
  return k;
}

inline ojson kummer_class_to_json(const KummerClass& k) {
  return {{"torus", rat_vector_to_json(k.torus)}, {"exc", rat_vector_to_json(k.exc)}};
}

inline SpaceTag space_from_json(const ojson& j) {
  if (j == "K3") return SpaceTag::K3;
  if (j == "Kummer") return SpaceTag::Kummer;
  throw ParseError("piece.space: expected \"K3\" or \"Kummer\"");
}

inline DHPolynomial dh_from_json(const ojson& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3) throw ParseError(what + ": expected [c0, c1, c2]");
  return {to_rat(j[0], what), to_rat(j[1], what), to_rat(j[2], what)};
}

inline ojson dh_to_json(const DHPolynomial& p) { return {p.c0.get_str(), p.c1.get_str(), p.c2.get_str()}; }

inline Piece piece_from_json(const ojson& j, std::size_t idx) {
  const std::string what = "pieces[" + std::to_string(idx) + "]";
  require_keys(j, what, {"interval", "dh", "space"}, {"class_pair", "kummer_pair", "euler_class"});
  Piece p;
  const ojson& iv = j.at("interval");
  if (!iv.is_array() || iv.size() != 2) throw ParseError(what + ".interval: expected [a, b]");
  p.a = endpoint_from_json(iv[0], what + ".interval");
  p.b = endpoint_from_json(iv[1], what + ".interval");
  p.dh = dh_from_json(j.at("dh"), what + ".dh");
  p.space = space_from_json(j.at("space"));
  const std::size_t n = StandardBasisTags::rank;
  if (j.contains("class_pair")) {
    const ojson& c = j.at("class_pair");
    require_keys(c, what + ".class_pair", {"kappa", "eta"});
    p.pair = K3Pair{int_vector_from_json(c.at("kappa"), n, what + ".kappa"),
                    int_vector_from_json(c.at("eta"), n, what + ".eta")};
  }
  if (j.contains("kummer_pair")) {
    const ojson& c = j.at("kummer_pair");
    require_keys(c, what + ".kummer_pair", {"kappa", "eta"});
    p.kummer_pair = KummerPair{kummer_class_from_json(c.at("kappa"), what + ".kummer_pair.kappa"),
                               kummer_class_from_json(c.at("eta"), what + ".kummer_pair.eta")};
  }
  if (j.contains("euler_class")) p.euler_class = int_vector_from_json(j.at("euler_class"), n, what + ".euler_class");
  return p;
}

inline Wall wall_from_json(const ojson& j, std::size_t idx) {
  const std::string what = "walls[" + std::to_string(idx) + "]";
  require_keys(j, what, {"level", "fixed_points", "weights"});
  Wall w;
  w.level = to_rat(j.at("level"), what + ".level");
  w.fixed_points = to_count(j.at("fixed_points"), what + ".fixed_points");
  const ojson& ws = j.at("weights");
  if (!ws.is_array() || ws.size() != 3) throw ParseError(what + ".weights: expected three integers");
  for (std::size_t i = 0; i < 3; ++i) w.weights[i] = to_int(ws[i], what + ".weights");
  return w;
}

inline GluedModel model_from_json(const ojson& j) {
  require_keys(j, "model", {"pieces", "walls"}, {"period", "expected_fixed_points", "name", "note"});
  GluedModel m;
  if (!j.at("pieces").is_array() || !j.at("walls").is_array()) throw ParseError("model: pieces and walls must be arrays");
  for (std::size_t i = 0; i < j.at("pieces").size(); ++i) m.pieces.push_back(piece_from_json(j.at("pieces")[i], i));
  for (std::size_t i = 0; i < j.at("walls").size(); ++i) m.walls.push_back(wall_from_json(j.at("walls")[i], i));
  if (j.contains("period")) m.period = to_rat(j.at("period"), "period");
  if (j.contains("expected_fixed_points")) m.expected_fixed_points = to_count(j.at("expected_fixed_points"), "expected_fixed_points");
  return m;
}

inline ojson model_to_json(const GluedModel& m) {
  ojson j;
  j["pieces"] = ojson::array();
  for (const auto& p : m.pieces) {
    ojson q;
    q["interval"] = {endpoint_to_json(p.a), endpoint_to_json(p.b)};
    q["dh"] = dh_to_json(p.dh);
    q["space"] = to_string(p.space);
    if (p.pair) q["class_pair"] = {{"kappa", vector_to_json(p.pair->kappa)}, {"eta", vector_to_json(p.pair->eta)}};
    if (p.kummer_pair)
      q["kummer_pair"] = {{"kappa", kummer_class_to_json(p.kummer_pair->kappa)},
                          {"eta", kummer_class_to_json(p.kummer_pair->eta)}};
    if (p.euler_class) q["euler_class"] = vector_to_json(*p.euler_class);
    j["pieces"].push_back(std::move(q));
  }
  j["walls"] = ojson::array();
  for (const auto& w : m.walls) {
    ojson ws = ojson::array();
    for (const auto& x : w.weights) ws.push_back(x.get_si());
    j["walls"].push_back({{"level", w.level.get_str()}, {"fixed_points", w.fixed_points}, {"weights", ws}});
  }
  if (m.period) j["period"] = m.period->get_str();
  if (m.expected_fixed_points) j["expected_fixed_points"] = *m.expected_fixed_points;
  return j;
}

inline GluedModel model_from_file(const std::string& path) { return model_from_json(read_file(path)); }

}  // namespace k3dh::json_io

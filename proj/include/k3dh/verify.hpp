#pragma once

// The glued model of the non-Hamiltonian example and the fixed battery of
// exact checks behind the `verify` subcommand.

#include <optional>
#include <string>
#include <vector>

#include "k3dh/exact_linalg.hpp"
#include "k3dh/isometry.hpp"
#include "k3dh/kummer.hpp"
#include "k3dh/lattice.hpp"
#include "k3dh/moment_model.hpp"
#include "k3dh/period_domain.hpp"
#include "k3dh/report.hpp"
#include "k3dh/sampling.hpp"
#include "k3dh/shortvec.hpp"
#include "k3dh/sublattice.hpp"

namespace k3dh {

/// Circle-valued model with period 4: a Kummer piece on (-1,1), a K3 piece on
/// (1,3), and 16 isolated fixed points on each of the levels 1 and -1.
inline GluedModel theorem1_model() {
  GluedModel m;
  Piece kummer;
  kummer.a = Endpoint::at(-1);
  kummer.b = Endpoint::at(1);
  kummer.dh = {4, 0, 4};
  kummer.space = SpaceTag::Kummer;

  Piece k3;
  k3.a = Endpoint::at(1);
  k3.b = Endpoint::at(3);
  k3.dh = {-4, 16, -4};
  k3.space = SpaceTag::K3;
  k3.pair = pair_from_polynomial(k3.dh);
  k3.kummer_pair = KummerPair{kappa_hat(), eta_hat(1)};
  k3.euler_class = k3.pair->eta;

  m.pieces = {kummer, k3};
  m.walls = {Wall{1, 16, {Int(-2), Int(1), Int(1)}}, Wall{-1, 16, {Int(2), Int(-1), Int(-1)}}};
  m.period = Rat(4);
  m.expected_fixed_points = 32;
  return m;
}

/// Fixed identification of the blowup lattice with the standard K3 lattice,
/// used to carry the blowup pair into K3 coordinates:
/// T(f2, e3 + b2_1) after T(e3, e2 - f1 + b1_1), with b_k_1 the first basis
/// vector of the k-th -E8 block.
inline Isometry kummer_marking() {
  using T = StandardBasisTags;
  const Lattice& l = make_K3();
  const IntVector a1 = k3::coords({{T::e(2), 1}, {T::f(1), -1}, {T::e8_block(1), 1}});
  const IntVector a2 = k3::coords({{T::e(3), 1}, {T::e8_block(2), 1}});
  return compose(eichler_transvection(l, k3::coords({{T::f(2), 1}}), a2),
                 eichler_transvection(l, k3::coords({{T::e(3), 1}}), a1));
}

enum class Perturbation { none, dh, count, weight };

/// Corrupts one value of the model: the constant term of the K3 piece, the
/// count at level 1, or the last weight at level 1.
inline GluedModel perturbed(GluedModel m, Perturbation p) {
  switch (p) {
    case Perturbation::dh: m.pieces.at(1).dh.c0 += 2; break;
    case Perturbation::count: m.walls.at(0).fixed_points -= 1; break;
    case Perturbation::weight: m.walls.at(0).weights[2] += 1; break;
    case Perturbation::none: break;
  }
  return m;
}

namespace detail {

inline std::string vec_str(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}
inline std::string vec_str(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

}  // namespace detail

struct VerifyOptions {
  Perturbation perturb = Perturbation::none;
  EnumerationOptions enumeration{};
  int projection_samples = 200;
  unsigned long seed = 20240101;
};

inline void lattice_checks(Report& r) {
  const Lattice& L = make_K3();
  r.add("k3.rank", "rank of H+H+H+(-E8)+(-E8)", "K3 lattice", "22", std::to_string(L.rank()));
  Signature sg = signature(L);
  r.add("k3.signature", "signature", "K3 lattice", "(3,19)",
        "(" + std::to_string(sg.positive) + "," + std::to_string(sg.negative) + ")");
  r.add_flag("k3.even", "even", "K3 lattice", is_even(L));
  r.add("k3.det", "determinant", "K3 lattice", "-1", det(L.gram()).get_str());
}

inline void period_checks(Report& r, const VerifyOptions& opt) {
  const Lattice& L = make_K3();
  {
    sampling::Rng rng(opt.seed);
    int ok = 0, equiv = 0;
    for (int s = 0; s < opt.projection_samples; ++s) {
      PeriodPoint a = sampling::random_period(rng, L);
      RatVector kappa = sampling::random_rat_vector(rng, L.rank(), 3);
      RatVector kh = project_to_alpha_perp(L, kappa, a);
      ok += L.norm(kh) == projected_norm(L, kappa, a);
      equiv += is_in_ktilde_omega(L, kappa, a) == is_in_k_omega(L, kh, a);
    }
    const std::string n = std::to_string(opt.projection_samples);
    r.add("period.projection_norm", "norm of the projection of kappa equals the closed formula", "period domain",
          n + "/" + n, std::to_string(ok) + "/" + n);
    r.add("period.compare", "tame condition on kappa equals the Kaehler condition on its projection",
          "period domain", n + "/" + n, std::to_string(equiv) + "/" + n);
  }
}

inline void component_checks(Report& r) {
  const Lattice& L = make_K3();
  r.add("iso.flip_components", "flip of the third H exchanges the components", "components", "false",
        bool_str(preserves_components(flip_third_H(L))));
  r.add("iso.identity_components", "identity preserves the components", "components", "true",
        bool_str(preserves_components(identity_isometry(L))));
  r.add("iso.minus_identity_components", "-1 exchanges the components", "components", "false",
        bool_str(preserves_components(minus_identity(L))));
}

/// Torus integrals, blowup pairings, DH branches and primitivity.
inline void kummer_checks(Report& r) {
  using T = StandardBasisTags;
  const Lattice& L = make_K3();
  const InvariantForm ws = omega_sigma(), wi = omega_I();
  r.add("torus.sigma_sigma", "integral of omega_sigma ^ omega_sigma over T", "torus", "8",
        wedge_integrate(ws, ws).get_str());
  r.add("torus.I_I", "integral of omega_I ^ omega_I over T", "torus", "8", wedge_integrate(wi, wi).get_str());
  r.add("torus.sigma_I", "integral of omega_sigma ^ omega_I over T", "torus", "0", wedge_integrate(ws, wi).get_str());
  {
    Lattice tl = torus_lattice();
    Signature ts = signature(tl);
    r.add_flag("torus.lattice", "H^2(T;Z) is even unimodular of signature (3,3)", "torus",
              is_even(tl) && is_unimodular(tl) && ts == Signature{3, 3});
  }
  const KummerClass kh = kappa_hat(), ep = eta_hat(1), em = eta_hat(-1);
  r.add("blowup.kk", "(kappa^, kappa^)", "blowup", "-4", pairing(kh, kh).get_str());
  r.add("blowup.ep_ep", "(eta^_+, eta^_+)", "blowup", "-4", pairing(ep, ep).get_str());
  r.add("blowup.em_em", "(eta^_-, eta^_-)", "blowup", "-4", pairing(em, em).get_str());
  r.add("blowup.ep_k", "(eta^_+, kappa^)", "blowup", "-8", pairing(ep, kh).get_str());
  r.add("blowup.em_k", "(eta^_-, kappa^)", "blowup", "8", pairing(em, kh).get_str());
  {
    bool all_zero = true;
    for (std::size_t i = 0; i < exceptional_count; ++i)
      all_zero = all_zero && pairing(pullback(form_to_torus_class(ws)), exceptional(i)) == 0;
    r.add_flag("blowup.pullback_E", "pullbacks are orthogonal to every E_i", "blowup", all_zero);
  }

  // DH branches
  r.add("dh.plus_branch", "self-pairing of kappa^ - t eta^_+", "DH polynomial", DHPolynomial(-4, 16, -4).str(),
        dh_from_pair(kh, ep).str());
  r.add("dh.minus_branch", "self-pairing of kappa^ - t eta^_-", "DH polynomial", DHPolynomial(-4, -16, -4).str(),
        dh_from_pair(kh, em).str());
  r.add("dh.reduced_plus", "half the torus integral of (sigma_+)_t ^ (sigma_+)_t", "DH polynomial",
        DHPolynomial(4, 0, 4).str(), reduced_dh(1).str());
  r.add("dh.reduced_minus", "half the torus integral of (sigma_-)_t ^ (sigma_-)_t", "DH polynomial",
        DHPolynomial(4, 0, 4).str(), reduced_dh(-1).str());
  r.add("dh.sigma_plus_at_1", "blowup class of (sigma_+)_1 has no exceptional part", "DH polynomial",
        detail::vec_str(RatVector(exceptional_count)), detail::vec_str(sigma_class(1, 1).exc));
  {
    K3Pair p = pair_from_polynomial({-4, 16, -4});
    r.add("dh.pair_kappa", "kappa from -4 + 16t - 4t^2", "class pair",
          detail::vec_str(k3::coords({{T::e(1), 1}, {T::f(1), -2}})), detail::vec_str(p.kappa));
    r.add("dh.pair_eta", "eta from -4 + 16t - 4t^2", "class pair",
          detail::vec_str(k3::coords({{T::f(1), -8}, {T::e(2), 1}, {T::f(2), -2}})), detail::vec_str(p.eta));
    r.add_flag("dh.pair_primitive", "the pair spans a primitive sublattice", "class pair",
               is_primitive_embedding(L, {p.kappa, p.eta}));
  }

  // primitivity on the torus
  {
    InvariantForm half = Complex(Rat(1, 2)) * (ws + wi);
    TorusClass y = form_to_torus_class(half);
    r.add("primitive.class", "coordinates of 1/2 (omega_sigma + omega_I)", "primitivity", "(1,1,1,0,0,-1)",
          detail::vec_str(y));
    bool all = true;
    for (std::size_t i = 0; i < exceptional_count; ++i) all = all && pairing(ep, exceptional(i)) == -1;
    r.add_flag("primitive.eta_E", "(eta^_+, E_i) = -1 for every i", "primitivity", all);
    r.add_flag("primitive.check", "sufficient condition for a primitive blowup pair", "primitivity",
               primitive_pair_check(y, ep));
  }
}

inline void model_checks(Report& r, const VerifyOptions& opt) {
  const KummerClass kh = kappa_hat(), ep = eta_hat(1);
  const GluedModel model = perturbed(theorem1_model(), opt.perturb);
  {
    Report v = validate(model);
    for (auto c : v.checks()) {
      c.id = "model." + c.id;
      r.add(std::move(c));
    }
    const Piece& kum = model.pieces.at(0);
    const Piece& k3p = model.pieces.at(1);
    r.add("model.kummer_piece_dh", "Kummer piece polynomial equals half the torus integral", "glued model",
          reduced_dh(1).str(), kum.dh.str());
    r.add("model.k3_piece_dh", "K3 piece polynomial equals the blowup self-pairing", "glued model",
          dh_from_pair(kh, ep).str(), k3p.dh.str());
    r.add("model.value_at_1", "DH value at the wall t = 1", "glued model", "8", k3p.dh(1).get_str());
    r.add("model.value_at_3", "DH value at t = 3", "glued model", "8", k3p.dh(3).get_str());
    r.add("model.value_at_-1", "DH value at the wall t = -1", "glued model", "8", kum.dh(-1).get_str());
  }
}

/// The K3 pair against the marked blowup pair, in both orientation modes.
inline void isometry_checks(Report& r) {
  const Lattice& L = make_K3();
  {
    const K3Pair p = pair_from_polynomial({-4, 16, -4});
    const Isometry mk = kummer_marking();
    const IntVector kk = mk(p.kappa), ke = mk(p.eta);
    for (bool preserve : {true, false}) {
      const std::string tag = preserve ? "preserve" : "reverse";
      std::string computed;
      try {
        Isometry phi = lemma_iso(L, kk, ke, p.kappa, p.eta, preserve);
        computed = bool_str(phi(p.kappa) == kk && phi(p.eta) == ke && preserves_components(phi) == preserve);
      } catch (const Error& e) {
        computed = std::string("error: ") + e.what();
      }
      r.add("iso.theorem1_" + tag, "isometry carrying the K3 pair to the marked blowup pair (" + tag + ")",
            "isometry", "true", computed);
    }
  }
}

inline void root_checks(Report& r, const VerifyOptions& opt) {
  const Lattice& L = make_K3();
  {
    const EnumerationOptions eo = opt.enumeration;
    r.add("roots.e8", "norm 2 vectors of E8", "short vectors", "240",
          std::to_string(enumerate_norm(e8_gram(1), Int(2), eo).size()));
    r.add("roots.e8e8", "norm 2 vectors of E8+E8", "short vectors", "480",
          std::to_string(enumerate_norm(block_diagonal({e8_gram(1), e8_gram(1)}), Int(2), eo).size()));
    r.add("roots.reference_plane", "(-2)-classes orthogonal to span(e_i + f_i)", "short vectors", "486",
          std::to_string(roots_orthogonal_to(L, reference_plane(L).basis, eo).size()));
  }
}

inline Report kummer_report() {
  Report r("torus and blowup intersection numbers");
  kummer_checks(r);
  return r;
}

inline Report run_verify(const VerifyOptions& opt = {}) {
  Report r("exact verification battery");
  lattice_checks(r);
  period_checks(r, opt);
  component_checks(r);
  kummer_checks(r);
  model_checks(r, opt);
  isometry_checks(r);
  root_checks(r, opt);
  return r;
}

}  // namespace k3dh

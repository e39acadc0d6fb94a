// k3dh command-line front end. Exit codes: 0 all checks pass, 1 a mathematical
// check failed, 2 malformed input or usage error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "k3dh/k3dh.hpp"

using namespace k3dh;

namespace {

constexpr int kPass = 0, kFail = 1, kInput = 2;

struct Source {
  std::string standard;
  std::string gram_file;
};

void add_source(CLI::App* cmd, Source& s) {
  auto* st = cmd->add_option("--standard", s.standard, "built-in lattice")
                 ->check(CLI::IsMember({"k3", "e8", "-e8", "e8e8", "h"}));
  auto* gf = cmd->add_option("--gram", s.gram_file, "lattice JSON file {rank, gram}");
  st->excludes(gf);
}

Lattice load_lattice(const Source& s) {
  if (!s.gram_file.empty()) return json_io::lattice_from_json(json_io::read_file(s.gram_file));
  if (s.standard == "e8") return make_E8(1);
  if (s.standard == "-e8") return make_E8(-1);
  if (s.standard == "e8e8") return Lattice(block_diagonal({e8_gram(1), e8_gram(1)}), "E8+E8");
  if (s.standard == "h") return make_H();
  if (s.standard == "k3" || s.standard.empty()) return make_K3();
  throw ParseError("unknown lattice " + s.standard);
}

int emit(const Report& r, bool as_json) {
  if (as_json) std::cout << r.to_json().dump(2) << '\n';
  else std::cout << r.to_text();
  return r.all_passed() ? kPass : kFail;
}

ojson vec_json(const IntVector& v) {
  ojson j = ojson::array();
  for (const auto& x : v) j.push_back(x.get_str());
  return j;
}

int lattice_info(const Source& s, bool as_json) {
  Lattice l = load_lattice(s);
  std::string sig;
  try {
    Signature g = signature(l);
    sig = "(" + std::to_string(g.positive) + "," + std::to_string(g.negative) + ")";
  } catch (const DegenerateForm&) {
    sig = "degenerate";
  }
  const Int d = det(l.gram());
  if (as_json) {
    ojson j;
    j["name"] = l.name();
    j["rank"] = l.rank();
    j["signature"] = sig;
    j["even"] = is_even(l);
    j["unimodular"] = is_unimodular(l);
    j["det"] = d.get_str();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "lattice    " << l.name() << "\nrank       " << l.rank() << "\nsignature  " << sig
              << "\neven       " << bool_str(is_even(l)) << "\nunimodular " << bool_str(is_unimodular(l))
              << "\ndet        " << d << '\n';
  }
  return kPass;
}

int shortvec(const Source& s, const std::string& norm, bool as_json) {
  Lattice l = load_lattice(s);
  const Rat n = parse_rational(norm);
  if (n.get_den() != 1) throw ParseError("--norm must be an integer");
  auto vs = enumerate_norm(l.gram(), n.get_num(), enumeration_options_from_env());
  if (as_json) {
    ojson j;
    j["norm"] = n.get_str();
    j["count"] = vs.size();
    j["vectors"] = ojson::array();
    for (const auto& v : vs) j["vectors"].push_back(vec_json(v));
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& v : vs) {
      for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? " " : "") << v[i];
      std::cout << '\n';
    }
    std::cout << "count " << vs.size() << '\n';
  }
  return kPass;
}

int period_check(const std::string& file, bool generic, bool as_json) {
  const Lattice& l = make_K3();
  auto rec = json_io::period_from_json(json_io::read_file(file));
  const PeriodPoint& a = rec.alpha;
  if (!is_in_omega(l, a)) throw PreconditionError("(re, im) does not define a point of Omega");
  const RatVector kh = project_to_alpha_perp(l, rec.kappa, a);
  const bool tame = is_in_ktilde_omega(l, rec.kappa, a);
  const bool kaehler_hat = is_in_k_omega(l, kh, a);

  Report r("period data");
  r.add("projection_norm", "norm of the projection equals the closed formula", "period domain",
        projected_norm(l, rec.kappa, a).get_str(), l.norm(kh).get_str());
  r.add("projection_orthogonal", "projection is orthogonal to Re and Im", "period domain", "0,0",
        l.pairing(kh, a.re).get_str() + "," + l.pairing(kh, a.im).get_str());
  r.add("compare", "tame condition on kappa equals the Kaehler condition on the projection", "period domain",
        bool_str(tame), bool_str(kaehler_hat));
  std::optional<bool> gen_tame, gen_hat;
  if (generic) {
    const auto opts = enumeration_options_from_env();
    gen_tame = is_in_ktilde_omega_generic(l, rec.kappa, a, opts);
    gen_hat = is_in_k_omega_generic(l, kh, a, opts);
    r.add("compare_generic", "same equivalence with the no-root condition", "period domain", bool_str(*gen_tame),
          bool_str(*gen_hat));
  }

  if (as_json) {
    ojson j;
    j["in_omega"] = true;
    j["in_ktilde_omega"] = tame;
    j["in_k_omega"] = is_in_k_omega(l, rec.kappa, a);
    j["kappa_hat"] = json_io::rat_vector_to_json(kh);
    j["kappa_hat_norm"] = l.norm(kh).get_str();
    if (generic) {
      j["in_ktilde_omega_generic"] = *gen_tame;
      j["kappa_hat_in_k_omega_generic"] = *gen_hat;
    }
    j["report"] = r.to_json();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "in Omega            true\nin tame space       " << bool_str(tame) << "\nin Kaehler space    "
              << bool_str(is_in_k_omega(l, rec.kappa, a)) << "\nprojection norm     " << l.norm(kh) << '\n';
    std::cout << r.to_text();
  }
  return r.all_passed() ? kPass : kFail;
}

int isometry_cmd(const std::string& file, bool reverse, bool as_json) {
  const Lattice& l = make_K3();
  auto p = json_io::pairs_from_json(json_io::read_file(file));
  const bool preserve = !reverse;
  Report r("isometry transcript");
  std::optional<Isometry> phi;
  try {
    phi = lemma_iso(l, p.kappa, p.eta, p.kappa_p, p.eta_p, preserve);
  } catch (const NotFound& e) {
    r.add("construction", "isometry construction", "isometry", "ok", std::string("not found: ") + e.what());
    return emit(r, as_json);
  }
  const IntMatrix& m = phi->matrix();
  r.add_flag("gram_preserved", "M^T G M = G", "isometry", m.transpose() * l.gram() * m == l.gram());
  r.add("det", "determinant", "isometry", det(m) == 1 ? "1" : "-1", det(m).get_str());
  r.add_flag("maps_kappa", "phi(kappa') = kappa", "isometry", (*phi)(p.kappa_p) == p.kappa);
  r.add_flag("maps_eta", "phi(eta') = eta", "isometry", (*phi)(p.eta_p) == p.eta);
  r.add("components", "action on the components of positive 3-planes", "isometry",
        preserve ? "preserve" : "reverse", preserves_components(*phi) ? "preserve" : "reverse");
  if (as_json) {
    ojson j;
    j["matrix"] = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) j["matrix"].push_back(vec_json(m.row(i)));
    j["report"] = r.to_json();
    std::cout << j.dump(2) << '\n';
    return r.all_passed() ? kPass : kFail;
  }
  std::cout << m << r.to_text();
  return r.all_passed() ? kPass : kFail;
}

int validate_model(const std::string& file, bool as_json) {
  GluedModel m = json_io::model_from_file(file);
  return emit(validate(m), as_json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice, Kummer and Duistermaat-Heckman computations for K3 circle actions"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  Source li_src, sv_src;
  auto* li = app.add_subcommand("lattice-info", "rank, signature, parity and determinant");
  add_source(li, li_src);
  li->add_flag("--json", as_json);

  std::string norm;
  auto* sv = app.add_subcommand("shortvec", "all vectors of a given norm in a definite lattice");
  add_source(sv, sv_src);
  sv->add_option("--norm", norm, "target norm")->required();
  sv->add_flag("--json", as_json);

  std::string period_file;
  bool generic = false;
  auto* pc = app.add_subcommand("period-check", "membership and projection checks for {kappa, re, im}");
  pc->add_option("file", period_file)->required()->check(CLI::ExistingFile);
  pc->add_flag("--generic", generic, "also decide the no-root condition");
  pc->add_flag("--json", as_json);

  std::string pairs_file;
  bool preserve = false, reverse = false;
  auto* iso = app.add_subcommand("isometry", "isometry taking (kappa', eta') to (kappa, eta)");
  iso->add_option("--pairs", pairs_file, "JSON {kappa, eta, kappa_p, eta_p}")->required()->check(CLI::ExistingFile);
  auto* pf = iso->add_flag("--preserve", preserve, "preserve the components (default)");
  iso->add_flag("--reverse", reverse, "exchange the components")->excludes(pf);
  iso->add_flag("--json", as_json);

  auto* kr = app.add_subcommand("kummer-report", "torus integrals and blowup intersection numbers");
  kr->add_flag("--json", as_json);

  std::string model_file;
  auto* vm = app.add_subcommand("validate-model", "validate a glued moment model");
  vm->add_option("file", model_file)->required()->check(CLI::ExistingFile);
  vm->add_flag("--json", as_json);

  std::string perturb = "none";
  auto* vf = app.add_subcommand("verify", "run the full exact verification battery");
  vf->add_option("--perturb", perturb, "corrupt one model value (test hook)")
      ->check(CLI::IsMember({"none", "dh", "count", "weight"}));
  vf->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kPass : kInput;
  }

  try {
    if (*li) return lattice_info(li_src, as_json);
    if (*sv) return shortvec(sv_src, norm, as_json);
    if (*pc) return period_check(period_file, generic, as_json);
    if (*iso) return isometry_cmd(pairs_file, reverse, as_json);
    if (*kr) return emit(kummer_report(), as_json);
    if (*vm) return validate_model(model_file, as_json);
    if (*vf) {
      VerifyOptions o;
      o.enumeration = enumeration_options_from_env();
      o.perturb = perturb == "dh"       ? Perturbation::dh
                  : perturb == "count"  ? Perturbation::count
                  : perturb == "weight" ? Perturbation::weight
                                        : Perturbation::none;
      return emit(run_verify(o), as_json);
    }
  } catch (const NotFound& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}

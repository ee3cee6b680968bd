#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "contactify/forms.hpp"
#include "contactify/presets.hpp"
#include "contactify/serialize.hpp"
#include "contactify/symmetry.hpp"
#include "contactify/tanaka.hpp"

namespace contactify {

struct RunOptions {
  int max_k = 4;
  int wmax = 4;
  bool oracle = false;
  bool allow_huge = false;
  std::string golden_dir;  // empty: skip byte comparisons against golden files
};

struct RunReport {
  std::string preset;
  bool pass = true;
  std::vector<std::string> failures;
  json details = json::object();

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

namespace pipedetail {

inline std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void compare_golden(RunReport& rep, const std::string& golden_dir,
                           const std::string& preset, const std::string& file,
                           const std::string& produced) {
  if (golden_dir.empty()) return;
  auto path = std::filesystem::path(golden_dir) / preset / file;
  auto expected = read_file(path);
  if (!expected) {
    rep.check(false, "golden file missing: " + path.string());
    return;
  }
  bool same = *expected == produced;
  rep.details["golden"][file] = same;
  rep.check(same, "golden mismatch: " + path.string());
}

inline std::string matrices_text(const OmegaMap& w) {
  std::string out;
  for (int i = 0; i < w.r; i++) {
    out += to_json(w.component[i]).dump();
    out += "\n";
  }
  return out;
}

inline std::string forms_text(const std::vector<PolyForm>& forms) {
  std::string out;
  for (const auto& f : forms) {
    out += f.str();
    out += "\n";
  }
  return out;
}

inline std::vector<PolyForm> omega_forms(const ContactSystem& cs) {
  std::vector<PolyForm> forms;
  for (int i = 0; i < cs.r; i++) forms.push_back(cs.omega_form(i));
  return forms;
}

}  // namespace pipedetail

/// Resolves the preset's omega: either the explicit table or the canonically
/// scaled solution of the equivariance equation (asserting a one-dimensional
/// solution space).
inline OmegaMap preset_omega(const Preset& p, RunReport* rep = nullptr) {
  if (!p.has_reps) return p.explicit_omega();
  auto [rho, tau] = p.build_pair();
  auto sols = solve_omega(rho, tau);
  if (rep) {
    rep->details["omega"]["solution_space_dim"] = sols.size();
    rep->check(sols.size() == 1, "solution space is not one-dimensional");
  } else if (sols.size() != 1) {
    throw std::runtime_error(p.name + ": solution space is not one-dimensional");
  }
  return sols[0].scaled(p.omega_scale);
}

inline ContactSystem preset_contact_system(const Preset& p) {
  return contactify(preset_omega(p), p.sign_convention);
}

/// Executes the full pipeline for one preset and cross-checks every expected
/// value, wiring golden comparisons in when a golden directory is given.
inline RunReport run_preset(const Preset& p, const RunOptions& opt) {
  using namespace pipedetail;
  RunReport rep;
  rep.preset = p.name;

  Representation rho, tau;
  OmegaMap omega;
  if (p.has_reps) {
    std::tie(rho, tau) = p.build_pair();
    rep.details["representation"]["dim_algebra"] = rho.dim_algebra();
    rep.details["representation"]["s"] = rho.space_dim();
    rep.details["representation"]["r"] = tau.space_dim();
    StructureConstants sc;
    try {
      sc = structure_constants(rho);
      rep.details["representation"]["closed"] = true;
    } catch (const std::exception& e) {
      rep.check(false, std::string("rho does not close: ") + e.what());
      return rep;
    }
    // tau recipe cross-check for the extracted-component preset: the
    // 5-dimensional Casimir component of rho ^ rho is equivalent to the
    // structural tau
    if (p.name == "e6-I-25") {
      Representation w = wedge_rep(rho);
      QMatrix cas = casimir(w, sc, Rational(1));
      auto comps = eigen_split(cas);
      int total = 0;
      std::optional<Rational> lambda5;
      json dims = json::array();
      for (auto& c : comps) {
        total += int(c.basis.size());
        dims.push_back(c.basis.size());
        if (c.basis.size() == 5) lambda5 = c.eigenvalue;
      }
      rep.details["tau_recipe"]["component_dims"] = dims;
      rep.check(total == w.space_dim(), "bispinor space does not split over Q");
      rep.check(lambda5.has_value(), "no 5-dimensional Casimir component");
      if (lambda5) {
        Representation extracted = extract_component(w, cas, *lambda5);
        auto tw = intertwiners(extracted, tau);
        rep.check(tw.size() == 1, "extracted component not equivalent to structural tau");
      }
    }

    omega = preset_omega(p, &rep);
    if (!rep.pass) return rep;

    TauReport tr = verify_tau_representation(rho, tau, omega);
    rep.details["lemma"]["part1"] = tr.part1_all;
    rep.details["lemma"]["tau_is_representation"] = tr.tau_is_representation;
    rep.check(tr.part1_all, "lemma part (1) fails on some generator pair");
    rep.check(tr.tau_is_representation, "tau fails the representation property");
  } else {
    omega = p.explicit_omega();
  }
  rep.check(omega.full(), "omega is not surjective");

  // contactification
  ContactSystem cs = contactify(omega, p.sign_convention);
  ContactReport cr = contact_checks(cs);
  rep.details["contact"]["vertical_nondegenerate"] = cr.vertical_nondegenerate;
  rep.details["contact"]["dlambda_matches"] = cr.dlambda_matches;
  rep.details["contact"]["surjective"] = cr.surjective;
  rep.check(cr.pass(), "contactification checks fail");
  compare_golden(rep, opt.golden_dir, p.name, "lambda.txt", forms_text(cs.lambdas));
  if (p.has_reps) {
    bool matrix_style = p.s <= 4 || p.name == "b3-flat36";
    if (matrix_style)
      compare_golden(rep, opt.golden_dir, p.name, "omega_matrices.txt", matrices_text(omega));
    else
      compare_golden(rep, opt.golden_dir, p.name, "omega.txt", forms_text(omega_forms(cs)));
  }

  // prolongation
  GradedLieAlgebra n = build_nminus(omega);
  Prolongation prol;
  try {
    prol = prolong(n, opt.max_k);
  } catch (const Truncated& t) {
    rep.check(false, t.what());
    return rep;
  }
  rep.details["prolongation"]["grade_dims"] = prol.grade_dims;
  rep.details["prolongation"]["total"] = prol.total_dim();
  rep.details["prolongation"]["complete"] = prol.complete;
  rep.check(prol.complete, "prolongation did not terminate");
  rep.check(prol.grade_dims == p.expect.grade_dims, "grade dimensions differ from expected");
  rep.check(prol.total_dim() == p.expect.total, "total dimension differs from expected");
  bool jacobi = prol.algebra.sc.jacobi_holds();
  bool graded = prol.algebra.grading_respected();
  rep.details["prolongation"]["jacobi"] = jacobi;
  rep.details["prolongation"]["grading_respected"] = graded;
  rep.check(jacobi, "Jacobi identity fails on the prolonged algebra");
  rep.check(graded, "grading violated by the prolonged brackets");

  ClassifyReport cls = classify(prol.algebra);
  rep.details["classify"]["killing_signature"] = {cls.positives, cls.negatives, cls.zeros};
  rep.details["classify"]["semisimple"] = cls.semisimple;
  rep.details["classify"]["grading_symmetric"] = cls.grading_symmetric;
  rep.check(cls.semisimple, "Killing form is degenerate");
  rep.check(cls.grading_symmetric, "grading is not symmetric");
  rep.check(cls.positives == p.expect.killing_pos && cls.negatives == p.expect.killing_neg,
            "Killing inertia differs from the frozen expected value");

  if (p.has_reps) {
    EmbedReport er = embed_check(rho, tau, prol);
    rep.details["embed"]["all_in_n0"] = er.all_in_n0;
    rep.details["embed"]["injective"] = er.injective;
    rep.details["embed"]["image_dim"] = er.image_dim;
    rep.details["embed"]["n0_dim"] = er.n0_dim;
    rep.check(er.all_in_n0, "sigma = tau + rho does not land in n_0");
    rep.check(er.injective, "sigma = tau + rho is not injective");
    rep.check((er.image_dim == er.n0_dim) == p.expect.n0_equals_n00,
              "n_00 vs n_0 containment differs from expected");
  }

  // invariant 4-form and stabilizers
  if (p.h.rows() > 0) {
    PolyForm phi = four_form(omega, p.h);
    if (p.phi_golden)
      compare_golden(rep, opt.golden_dir, p.name, "phi.txt", phi.str() + "\n");
    auto [strict, sw] = stabilizer(phi, StabilizerMode::strict);
    auto [conf, cw] = stabilizer(phi, StabilizerMode::conformal);
    rep.details["stabilizer"]["strict_dim"] = strict.size();
    rep.details["stabilizer"]["conformal_dim"] = conf.size();
    if (p.stabilizer_strict_dim >= 0)
      rep.check(int(strict.size()) == p.stabilizer_strict_dim, "strict stabilizer dimension");
    if (p.stabilizer_conformal_dim >= 0)
      rep.check(int(conf.size()) == p.stabilizer_conformal_dim,
                "conformal stabilizer dimension");
    if (p.check_identity_weight) {
      // the S != 0 direction, normalized to S = 4, is the identity modulo
      // strict solutions
      bool ok = false;
      int s = omega.s;
      QMatrix span(s * s, int(strict.size()));
      for (size_t c = 0; c < strict.size(); c++) {
        QMatrix v = strict[c].vectorize();
        for (int r2 = 0; r2 < s * s; r2++) span(r2, int(c)) = v(r2, 0);
      }
      LinearSolver solver(span);
      for (size_t k = 0; k < conf.size(); k++) {
        if (cw[k].is_zero()) continue;
        QMatrix scaled = (Rational(4) / cw[k]) * conf[k];
        try {
          solver.solve((scaled - QMatrix::identity(s)).vectorize());
          ok = true;
        } catch (const std::domain_error&) {
        }
      }
      rep.details["stabilizer"]["identity_weight_4"] = ok;
      rep.check(ok, "S = 4 direction is not the identity modulo strict solutions");
    }
  }

  // independent symmetry oracle
  if (opt.oracle) {
    bool run_oracle = p.oracle_default || (p.oracle_huge && opt.allow_huge);
    if (p.oracle_huge && !opt.allow_huge) {
      rep.details["oracle"]["skipped"] = "ansatz above cap; rerun with --allow-huge";
      run_oracle = false;
    }
    if (run_oracle) {
      SymmetryOptions so;
      so.wmax = opt.wmax;
      so.allow_huge = opt.allow_huge || p.oracle_huge;
      SymmetrySpace space = symmetry_space(cs, so);
      rep.details["oracle"]["dimension"] = space.dimension;
      rep.details["oracle"]["unknowns"] = space.unknowns;
      rep.check(space.dimension == p.expect.total,
                "oracle dimension differs from the prolongation total");
      StructureConstants osc = closure_check(space.basis);
      rep.details["oracle"]["closed"] = true;
      QMatrix k = killing_form(osc);
      auto [pos, neg, zero] = signature(k);
      rep.details["oracle"]["killing_signature"] = {pos, neg, zero};
      rep.check(pos == p.expect.killing_pos && neg == p.expect.killing_neg && zero == 0,
                "oracle Killing inertia differs from the frozen expected value");
    }
  }

  rep.details["pass"] = rep.pass;
  return rep;
}

inline std::string report_text(const RunReport& rep) {
  std::ostringstream os;
  os << "preset " << rep.preset << ": " << (rep.pass ? "PASS" : "FAIL") << "\n";
  os << rep.details.dump(2) << "\n";
  if (!rep.failures.empty()) {
    os << "failures:\n";
    for (const auto& f : rep.failures) os << "  - " << f << "\n";
  }
  return os.str();
}

}  // namespace contactify

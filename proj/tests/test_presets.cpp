#include <catch2/catch_amalgamated.hpp>

#include "contactify/pipeline.hpp"
#include "transcriptions.hpp"

using namespace contactify;

namespace {

golden::SystemText transcription_for(const std::string& name) {
  if (name == "b3-flat36") return golden::b3_flat36();
  if (name == "qc-pos") return golden::qc(1);
  if (name == "qc-neg") return golden::qc(-1);
  if (name == "f4-split") return golden::f4_split();
  if (name == "f4-fII") return golden::f4_fII();
  if (name == "e6-I-24") return golden::e6_I_24();
  if (name == "e6-IV-24") return golden::e6_IV_24();
  if (name == "e6-I-25") return golden::e6_I_25();
  if (name == "so76-21") return golden::so76_21();
  if (name == "cartan-f4-original") return golden::cartan_f4_original();
  throw std::runtime_error("no transcription for " + name);
}

}  // namespace

TEST_CASE("catalog is the fixed list") {
  std::vector<std::string> names;
  for (const auto& p : preset_catalog()) names.push_back(p.name);
  CHECK(names == std::vector<std::string>{"b3-flat36", "qc-pos", "qc-neg", "f4-split",
                                          "f4-fII", "e6-I-24", "e6-IV-24", "e6-I-25",
                                          "so76-21", "cartan-f4-original"});
  int with_reps = 0;
  for (const auto& p : preset_catalog()) with_reps += p.has_reps ? 1 : 0;
  CHECK(with_reps == 9);
  CHECK_THROWS(find_preset("nonsense"));
}

TEST_CASE("printed contact forms and 2-forms are exterior-consistent") {
  // d(lambda^i) must equal omega^i between the two independently printed
  // displays, for every preset that has both
  for (const auto& p : preset_catalog()) {
    auto text = transcription_for(p.name);
    if (text.omegas.empty()) continue;
    CoordSystem coords{p.r, p.s};
    for (int i = 0; i < p.r; i++) {
      PolyForm lambda = PolyForm::parse(text.lambdas[i], coords);
      PolyForm omega = PolyForm::parse(text.omegas[i], coords);
      INFO(p.name << " form " << i + 1);
      CHECK(d(lambda) == omega);
    }
  }
}

TEST_CASE("pipeline contact forms match the transcriptions byte for byte") {
  for (const auto& p : preset_catalog()) {
    auto text = transcription_for(p.name);
    ContactSystem cs = preset_contact_system(p);
    REQUIRE(int(cs.lambdas.size()) == p.r);
    for (int i = 0; i < p.r; i++) {
      CoordSystem coords{p.r, p.s};
      std::string expected = PolyForm::parse(text.lambdas[i], coords).str();
      INFO(p.name << " lambda " << i + 1);
      CHECK(cs.lambdas[i].str() == expected);
    }
    if (!text.omegas.empty()) {
      for (int i = 0; i < p.r; i++) {
        CoordSystem coords{p.r, p.s};
        std::string expected = PolyForm::parse(text.omegas[i], coords).str();
        INFO(p.name << " omega " << i + 1);
        CHECK(cs.omega_form(i).str() == expected);
      }
    }
  }
}

TEST_CASE("matrix-style omega tables match the printed matrices") {
  auto check = [](const std::string& name,
                  const std::vector<std::vector<std::vector<int>>>& printed) {
    const Preset& p = find_preset(name);
    OmegaMap w = preset_omega(p);
    REQUIRE(size_t(w.r) == printed.size());
    for (int i = 0; i < w.r; i++) {
      QMatrix m(w.s, w.s);
      for (int a = 0; a < w.s; a++)
        for (int b = 0; b < w.s; b++) m(a, b) = Rational(printed[i][a][b]);
      INFO(name << " omega matrix " << i + 1);
      CHECK(w.component[i] == m);
    }
  };
  check("b3-flat36", golden::b3_omega_matrices());
  check("qc-pos", golden::qc_omega_matrices(1));
  check("qc-neg", golden::qc_omega_matrices(-1));
}

TEST_CASE("4-forms reproduce the printed displays") {
  {
    const Preset& p = find_preset("f4-split");
    PolyForm phi = four_form(preset_omega(p), p.h);
    CoordSystem coords{p.r, p.s};
    PolyForm display = PolyForm::parse(golden::f4_split_phi_display(), coords);
    CHECK(Rational(2, 3) * phi == display);
  }
  {
    const Preset& p = find_preset("f4-fII");
    PolyForm phi = four_form(preset_omega(p), p.h);
    CoordSystem coords{p.r, p.s};
    PolyForm display = PolyForm::parse(golden::f4_fII_phi_display(), coords);
    CHECK(Rational(-1, 6) * phi == display);
  }
  {
    const Preset& p = find_preset("e6-I-24");
    PolyForm phi = four_form(preset_omega(p), p.h);
    CoordSystem coords{p.r, p.s};
    PolyForm display = PolyForm::parse(golden::e6_I_24_phi_display(), coords);
    CHECK(phi == display);
  }
}

TEST_CASE("every preset runs clean through the pipeline with golden files") {
  RunOptions opt;
  opt.golden_dir = CONTACTIFY_GOLDEN_DIR;
  for (const auto& p : preset_catalog()) {
    RunReport rep = run_preset(p, opt);
    INFO(p.name << ": " << (rep.failures.empty() ? "" : rep.failures[0]));
    CHECK(rep.pass);
  }
}

TEST_CASE("reports are deterministic") {
  RunOptions opt;
  RunReport a = run_preset(find_preset("b3-flat36"), opt);
  RunReport b = run_preset(find_preset("b3-flat36"), opt);
  CHECK(a.details.dump() == b.details.dump());
  CHECK(report_text(a) == report_text(b));
}

TEST_CASE("real-form discrimination across presets") {
  auto inertia = [](const char* name) {
    const Preset& p = find_preset(name);
    Prolongation prol = prolong(build_nminus(preset_omega(p)), 4);
    ClassifyReport c = classify(prol.algebra);
    return std::make_pair(c.positives, c.negatives);
  };
  auto f4s = inertia("f4-split");
  auto f4c = inertia("f4-fII");
  CHECK(f4s != f4c);
  auto e6a = inertia("e6-I-24");
  auto e6b = inertia("e6-IV-24");
  CHECK(e6a != e6b);
  auto e6c = inertia("e6-I-25");
  CHECK(e6a == e6c);  // both realize the split form
}

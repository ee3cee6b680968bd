// Command-line front end: preset catalog, pipeline runs with report and
// golden comparisons, and exports of the computed objects.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "contactify/pipeline.hpp"

using namespace contactify;

namespace {

std::string default_golden_dir() {
  namespace fs = std::filesystem;
  for (const char* candidate : {"tests/golden", "../tests/golden"})
    if (fs::exists(candidate)) return candidate;
  return {};
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact contactification engine: presets, pipeline runs, exports"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list", "list the preset catalog");

  std::string name;
  auto* describe_cmd = app.add_subcommand("describe", "show a preset's construction recipe");
  describe_cmd->add_option("preset", name, "preset name")->required();

  auto* run_cmd = app.add_subcommand("run", "run the full pipeline for a preset");
  std::string run_name, golden_dir = default_golden_dir(), format = "text", out_path;
  int max_k = 4, wmax = 4;
  bool oracle = false, allow_huge = false;
  run_cmd->add_option("preset", run_name, "preset name")->required();
  run_cmd->add_option("--max-k", max_k, "prolongation grade cap (default 4)");
  run_cmd->add_option("--wmax", wmax, "symmetry ansatz weighted-degree cap (default 4)");
  run_cmd->add_flag("--oracle", oracle, "also run the vector-field symmetry oracle");
  run_cmd->add_flag("--allow-huge", allow_huge, "lift the ansatz size cap for big presets");
  run_cmd->add_option("--golden-dir", golden_dir, "golden file root (empty to skip)");
  run_cmd->add_option("--format", format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  run_cmd->add_option("--out", out_path, "write the report to a file instead of stdout");

  auto* export_cmd = app.add_subcommand("export", "export computed objects for a preset");
  std::string exp_name, what = "lambda", exp_format = "text", exp_out;
  export_cmd->add_option("preset", exp_name, "preset name")->required();
  export_cmd->add_option("--what", what, "lambda | omega | phi | rep | sc | prolongation")
      ->check(CLI::IsMember({"lambda", "omega", "phi", "rep", "sc", "prolongation"}));
  export_cmd->add_option("--format", exp_format, "text | json | latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  export_cmd->add_option("--out", exp_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list_cmd) {
      for (const auto& p : preset_catalog())
        std::cout << p.name << (p.has_reps ? "" : "  (forms-only)") << "\n";
      return 0;
    }
    if (*describe_cmd) {
      const Preset& p = find_preset(name);
      std::cout << p.name << "\n  " << p.recipe << "\n";
      std::cout << "  r = " << p.r << ", s = " << p.s
                << ", sign convention = " << p.sign_convention << "\n";
      std::cout << "  expected: grades (";
      for (size_t i = 0; i < p.expect.grade_dims.size(); i++)
        std::cout << (i ? "," : "") << p.expect.grade_dims[i];
      std::cout << "), total " << p.expect.total << ", Killing signature ("
                << p.expect.killing_pos << "," << p.expect.killing_neg << ",0), algebra "
                << p.expect.algebra << "\n";
      return 0;
    }
    if (*run_cmd) {
      const Preset& p = find_preset(run_name);
      RunOptions opt;
      opt.max_k = max_k;
      opt.wmax = wmax;
      opt.oracle = oracle;
      opt.allow_huge = allow_huge;
      opt.golden_dir = golden_dir;
      RunReport rep = run_preset(p, opt);
      if (format == "json") {
        json out = rep.details;
        out["preset"] = rep.preset;
        out["failures"] = rep.failures;
        emit(out_path, out.dump(2) + "\n");
      } else {
        emit(out_path, report_text(rep));
      }
      return rep.pass ? 0 : 1;
    }
    if (*export_cmd) {
      const Preset& p = find_preset(exp_name);
      if (what == "rep" || what == "sc") {
        if (!p.has_reps) throw std::runtime_error(p.name + " has no representation recipe");
        auto [rho, tau] = p.build_pair();
        if (what == "rep") {
          json out;
          out["rho"] = to_json(rho);
          out["tau"] = to_json(tau);
          emit(exp_out, out.dump(2) + "\n");
        } else {
          emit(exp_out, to_json(structure_constants(rho)).dump(2) + "\n");
        }
        return 0;
      }
      if (what == "prolongation") {
        Prolongation prol = prolong(build_nminus(preset_omega(p)), 4);
        emit(exp_out, to_json(prol.algebra).dump(2) + "\n");
        return 0;
      }
      ContactSystem cs = preset_contact_system(p);
      std::vector<PolyForm> forms;
      if (what == "lambda") {
        forms = cs.lambdas;
      } else if (what == "omega") {
        for (int i = 0; i < cs.r; i++) forms.push_back(cs.omega_form(i));
      } else {  // phi
        if (p.h.rows() == 0) throw std::runtime_error(p.name + " has no invariant 4-form");
        forms.push_back(four_form(cs.omega, p.h));
      }
      std::string out;
      if (exp_format == "json") {
        json arr = json::array();
        if (what == "omega") {
          arr.push_back(to_json(cs.omega));
        } else {
          for (const auto& f : forms) arr.push_back(f.str());
        }
        out = arr.dump(2) + "\n";
      } else if (exp_format == "latex") {
        for (const auto& f : forms) out += to_latex(f) + "\n";
      } else {
        for (const auto& f : forms) out += f.str() + "\n";
      }
      emit(exp_out, out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

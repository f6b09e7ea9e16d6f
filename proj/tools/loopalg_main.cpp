#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "loopalg/errors.hpp"
#include "loopalg/report.hpp"
#include "loopalg/spec_io.hpp"
#include "loopalg/verify.hpp"

namespace {

using namespace loopalg;

std::optional<Mode> parse_mode_flag(const std::string& mode_flag) {
  if (mode_flag.empty()) return std::nullopt;
  if (mode_flag == "borel") return Mode::Borel;
  if (mode_flag == "loop") return Mode::FullLoop;
  throw Error("--mode must be borel or loop");
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw Error("cannot write to '" + output + "'");
    out << text;
    std::cout << text;
  }
}

int cmd_analyze(const std::string& path, const std::string& mode_flag, bool machine,
                const std::string& output) {
  Module m = load_module_spec(path, parse_mode_flag(mode_flag));
  AnalysisReport rep = analyze(m);
  emit(machine ? rep.machine() : rep.human(), output);
  return rep.verdict.applicable ? 0 : 2;
}

int cmd_verify(const std::string& path, const std::string& mode_flag, const std::string& suite,
               int max_degree, const std::string& output) {
  Module m = load_module_spec(path, parse_mode_flag(mode_flag));
  SuiteReport rep = run_suite(m, parse_suite(suite), max_degree);
  emit(rep.str(), output);
  return rep.ok() ? 0 : 1;
}

int cmd_basis(const std::string& path, const std::string& mode_flag, int sector) {
  Module m = load_module_spec(path, parse_mode_flag(mode_flag));
  HighestWeight hw = highest_weight_vector(m);
  SectorDecomposition dec = cyclic_span(m, hw.psi);
  if (sector < 0 || sector > dec.r)
    throw Error("sector exceeds r=" + std::to_string(dec.r));

  auto print_vec = [](const Vec& v) {
    std::cout << "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) std::cout << (i ? ", " : "") << v[i];
    std::cout << ")\n";
  };

  bool distinct = false;
  try {
    DrinfeldData dd = drinfeld_data(m, hw, dec.r);
    distinct = true;
    for (const auto& p : dd.params)
      if (p.multiplicity > 1) distinct = false;
    if (distinct) {
      std::vector<Vec> basis = rho_basis(m, hw, dd, dec, sector);
      // labels follow the same lexicographic subset order as rho_basis
      std::vector<int> js;
      std::size_t idx = 0;
      std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(js.size()) == sector) {
          std::cout << "rho[";
          for (std::size_t i = 0; i < js.size(); ++i) std::cout << (i ? "," : "") << js[i];
          std::cout << "] ";
          print_vec(basis[idx++]);
          return;
        }
        for (int j = start; j <= dd.s(); ++j) {
          js.push_back(j);
          rec(j + 1);
          js.pop_back();
        }
      };
      rec(1);
      return 0;
    }
  } catch (const NonSplitting&) {
    distinct = false;
  }
  std::cout << "# repeated or non-rational evaluation parameters: "
               "printing the cyclic-span Gaussian basis instead\n";
  for (const Vec& v : dec.sectors[sector].rows()) print_vec(v);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact highest-weight module analysis for the sl2 loop algebra Borel subalgebra"};
  app.require_subcommand(1);

  std::string path, mode_flag, suite = "all", output;
  bool machine = false;
  int max_degree = 4, sector = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "full pipeline: weights, sectors, Drinfeld "
                                                    "polynomial, irreducibility");
  analyze_cmd->add_option("spec", path, "module spec file")->required();
  analyze_cmd->add_option("--mode", mode_flag, "override the spec mode (borel|loop)");
  analyze_cmd->add_flag("--machine", machine, "machine-readable JSON output");
  analyze_cmd->add_option("--output", output, "also write the report to this file");

  auto* verify_cmd = app.add_subcommand("verify", "run an identity-check suite");
  verify_cmd->add_option("spec", path, "module spec file")->required();
  verify_cmd->add_option("--suite", suite, "relations|lemmas|drinfeld|all (default all)");
  verify_cmd->add_option("--max-degree", max_degree, "index grid bound (default 4)");
  verify_cmd->add_option("--mode", mode_flag, "override the spec mode (borel|loop)");
  verify_cmd->add_option("--output", output, "also write the report to this file");

  auto* basis_cmd = app.add_subcommand("basis", "print the rho-product basis of one sector");
  basis_cmd->add_option("spec", path, "module spec file")->required();
  basis_cmd->add_option("--sector", sector, "sector index n")->required();
  basis_cmd->add_option("--mode", mode_flag, "override the spec mode (borel|loop)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze_cmd)) return cmd_analyze(path, mode_flag, machine, output);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(path, mode_flag, suite, max_degree, output);
    if (app.got_subcommand(basis_cmd)) return cmd_basis(path, mode_flag, sector);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

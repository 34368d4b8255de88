// Command line front end: braid word normalization, the word and conjugacy
// problems, link closures, quandle coloring counts, the bounded census, and
// the model flow verification report.
//
// Exit status: 0 on success, 1 on domain errors or a failing verification,
// 2 on usage errors.

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "braids/braids.hpp"

namespace {

using namespace braids;

std::vector<int> parse_panel(const std::string& spec) {
  std::vector<int> panel;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ',')) {
    if (!token.empty() && (token[0] == 'd' || token[0] == 'D')) token.erase(0, 1);
    if (token.empty()) throw std::invalid_argument("panel: empty entry");
    panel.push_back(std::stoi(token));
    if (panel.back() < 1) throw std::invalid_argument("panel: orders must be >= 1");
  }
  if (panel.empty()) throw std::invalid_argument("panel: no entries");
  return panel;
}

FiniteQuandle load_quandle(const std::string& spec) {
  std::string lower = spec;
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower.rfind("dihedral", 0) == 0) return dihedral(std::stoi(lower.substr(8)));
  if (lower.size() >= 2 && lower[0] == 'd' && std::isdigit(static_cast<unsigned char>(lower[1]))) {
    return dihedral(std::stoi(lower.substr(1)));
  }
  std::ifstream file(spec);
  if (!file) throw std::invalid_argument("quandle: cannot open table file '" + spec + "'");
  return read_table(file);
}

struct OutputTarget {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
    stream = &file;
  }

  std::ostream& out() { return *stream; }
};

void print_conjugacy(std::ostream& os, const ConjugacyResult& result) {
  switch (result.outcome) {
    case ConjugacyOutcome::conjugate:
      os << "conjugate\n";
      os << "witness: " << to_header_string(*result.witness) << '\n';
      break;
    case ConjugacyOutcome::not_conjugate:
      os << "not conjugate\n";
      break;
    case ConjugacyOutcome::undecided:
      os << "undecided\n";
      break;
  }
  os << "certificate: " << result.certificate << '\n';
}

void print_dynamics(std::ostream& os, const dynamics::DynamicsReport& report, int samples,
                    double tol) {
  os << "# dynamics-verify samples=" << samples << " continuity_tol=" << tol
     << " residual_tol=1e-12 spectrum_tol=1e-4 projection_tol=1e-12\n";
  os << "# fixed points\n";
  for (const auto& fp : report.fixed_points) {
    os << "point=(" << fp.point.x << "," << fp.point.y << "," << fp.point.z << ")"
       << " residual=" << fp.residual << " eigenvalues=";
    for (int i = 0; i < 3; ++i) {
      if (i) os << ',';
      os << fp.eigenvalue_list[i].real();
      if (fp.eigenvalue_list[i].imag() != 0) {
        os << (fp.eigenvalue_list[i].imag() > 0 ? "+" : "") << fp.eigenvalue_list[i].imag() << 'i';
      }
    }
    os << " class=" << dynamics::fixed_point_class_name(fp.classification) << '\n';
  }
  os << "# checks\n";
  for (const auto& check : report.checks) {
    os << (check.pass ? "[pass] " : "[FAIL] ") << check.name << ": observed=" << check.observed
       << " bound=" << check.bound << " (" << check.detail << ")\n";
  }
  os << (report.all_pass ? "all checks passed" : "some checks FAILED") << '\n';
}

bool looks_mixed(const std::string& text) {
  const std::size_t colon = text.find(':');
  return colon != std::string::npos && text.substr(0, colon).find(',') != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid words, link closures, quandle invariants, census, model flow checks"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  int strands_flag = 0;
  std::string out_path;
  std::string format = "text";
  app.add_option("--strands", strands_flag, "strand count for words without a 'Bn:' header");
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "records"}));

  auto* cmd_normalize = app.add_subcommand("normalize", "canonical form of a braid word");
  std::string normalize_word;
  cmd_normalize->add_option("word", normalize_word, "braid word, e.g. \"B3: 1 -2 1\"")->required();

  auto* cmd_equal = app.add_subcommand("equal", "decide the word problem");
  std::string equal_u, equal_v;
  cmd_equal->add_option("first", equal_u)->required();
  cmd_equal->add_option("second", equal_v)->required();

  auto* cmd_conj = app.add_subcommand("conj", "decide conjugacy with a verified witness");
  std::string conj_u, conj_v;
  std::size_t conj_budget = 4096;
  cmd_conj->add_option("first", conj_u)->required();
  cmd_conj->add_option("second", conj_v)->required();
  cmd_conj->add_option("--budget", conj_budget, "super summit set node budget");

  auto* cmd_close = app.add_subcommand("close", "closure invariants of a braid word");
  std::string close_word;
  std::string close_ambient = "sphere3";
  cmd_close->add_option("word", close_word, "braid word or mixed word \"B1,n: ...\"")->required();
  cmd_close->add_option("--ambient", close_ambient, "sphere3 or solid-torus")
      ->check(CLI::IsMember({"sphere3", "solid-torus"}));

  auto* cmd_color = app.add_subcommand("color", "quandle coloring count of a closed braid");
  std::string color_word, color_quandle = "dihedral3";
  cmd_color->add_option("word", color_word)->required();
  cmd_color->add_option("--quandle", color_quandle, "dihedralN, dN, or a table file path");

  auto* cmd_census = app.add_subcommand("census", "enumerate, fingerprint, and merge closures");
  CensusConfig census_config;
  std::string census_ambient = "sphere3";
  std::string census_panel = "d3,d4,d5";
  cmd_census->add_option("--ambient", census_ambient)
      ->check(CLI::IsMember({"sphere3", "solid-torus"}));
  cmd_census->add_option("--strands", census_config.max_strands, "largest braid index");
  cmd_census->add_option("--max-length", census_config.max_length, "largest word length");
  cmd_census->add_option("--depth", census_config.depth, "move search depth");
  cmd_census->add_option("--panel", census_panel, "quandle panel, e.g. d3,d4,d5");
  cmd_census->add_option("--max-words", census_config.max_words, "word budget");

  auto* cmd_witness =
      app.add_subcommand("witness", "essential solid torus closures with winding 1..k");
  int witness_k = 1;
  cmd_witness->add_option("count", witness_k, "number of witnesses")->required();

  auto* cmd_dynamics = app.add_subcommand("dynamics-verify", "verify the model flow");
  int dyn_samples = 1000;
  double dyn_tol = 1e-9;
  cmd_dynamics->add_option("--samples", dyn_samples, "random samples per check");
  cmd_dynamics->add_option("--tol", dyn_tol, "continuity tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    std::cerr << "run '" << (argc > 0 ? argv[0] : "braidtool") << " --help' for a synopsis\n";
    return 2;
  }

  std::optional<int> strands;
  if (strands_flag > 0) strands = strands_flag;

  try {
    OutputTarget target;
    target.open(out_path);
    std::ostream& os = target.out();

    if (cmd_normalize->parsed()) {
      const BraidWord w = parse_word(normalize_word, strands);
      os << to_header_string(left_normal_form(w).to_word()) << '\n';
    } else if (cmd_equal->parsed()) {
      const BraidWord u = parse_word(equal_u, strands);
      const BraidWord v = parse_word(equal_v, strands);
      os << (words_equal(u, v) ? "equal" : "unequal") << '\n';
    } else if (cmd_conj->parsed()) {
      const BraidWord u = parse_word(conj_u, strands);
      const BraidWord v = parse_word(conj_v, strands);
      ConjugacyBudget budget;
      budget.max_set_size = conj_budget;
      print_conjugacy(os, conjugate_test(u, v, budget));
    } else if (cmd_close->parsed()) {
      if (close_ambient == "solid-torus" || looks_mixed(close_word)) {
        const MixedBraidWord w = looks_mixed(close_word)
                                     ? parse_mixed_word(close_word)
                                     : as_mixed(1, parse_word(close_word, strands));
        os << close_mixed(w).to_line() << '\n';
      } else {
        os << close(parse_word(close_word, strands)).to_line() << '\n';
      }
    } else if (cmd_color->parsed()) {
      const BraidWord w = looks_mixed(color_word) ? moving_part(parse_mixed_word(color_word))
                                                  : parse_word(color_word, strands);
      os << coloring_count(w, load_quandle(color_quandle)) << '\n';
    } else if (cmd_census->parsed()) {
      census_config.ambient =
          census_ambient == "sphere3" ? Ambient::sphere3 : Ambient::solid_torus;
      census_config.panel = parse_panel(census_panel);
      const CensusReport report = run_census(census_config);
      report.write(os, format == "records");
    } else if (cmd_witness->parsed()) {
      for (const MixedBraidWord& w : essential_witnesses(witness_k)) {
        const LinkData link = close_mixed(w);
        os << to_header_string(w) << '\t' << "winding=" << link.winding.back() << '\t'
           << "essential=" << (is_essential(link) ? "yes" : "no") << '\n';
      }
    } else if (cmd_dynamics->parsed()) {
      const dynamics::DynamicsReport report =
          dynamics::verify_dynamics(dyn_samples, 1e-12, 1e-4, dyn_tol, 1e-12);
      print_dynamics(os, report, dyn_samples, dyn_tol);
      if (!report.all_pass) return 1;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

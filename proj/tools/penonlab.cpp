#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "penonlab/braid.hpp"
#include "penonlab/oracle.hpp"
#include "penonlab/penon.hpp"
#include "penonlab/scenarios.hpp"

namespace {

using namespace penonlab;

constexpr int kCliStrandCap = 16;

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  nlohmann::json j;
  in >> j;
  return j;
}

std::vector<int> parse_letters(const std::string& text) {
  std::string cleaned = text;
  for (char& ch : cleaned)
    if (ch == ',') ch = ' ';
  std::istringstream is(cleaned);
  std::vector<int> letters;
  int v;
  while (is >> v) letters.push_back(v);
  if (!is.eof()) throw Error("braid words are space- or comma-separated signed integers");
  return letters;
}

void emit_report(const verify::Report& r, const std::string& json_path) {
  nlohmann::json j = verify::to_json(r);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << j.dump(2) << "\n";
  }
  std::cout << r.scenario << ": " << verify::to_string(r.verdict) << "\n";
  if (r.verdict != verify::Report::Verdict::Pass) std::cout << j.dump(2) << "\n";
}

glob::Presentation builtin_or_file(const std::string& name) {
  if (name == "D-reflexive") return glob::doubly_degenerate_D(glob::Mode::Reflexive);
  if (name == "D-nonreflexive") return glob::doubly_degenerate_D(glob::Mode::NonReflexive);
  return glob::presentation_from_json(read_json_file(name));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"penonlab: weak-3-category constructions over globular presentations"};
  app.require_subcommand(1);

  // ---- run / run-all ----
  std::string scenario_name;
  std::string input_path;
  std::string mode_flag;
  std::string json_out;
  verify::RunConfig config;

  auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("--input", input_path, "presentation JSON file (replaces the built-in D)");
    cmd->add_option("--mode", mode_flag, "reflexive|nonreflexive")
        ->check(CLI::IsMember({"reflexive", "nonreflexive"}));
    cmd->add_option("--K", config.K, "symmetry-candidate window (default 5)");
    cmd->add_option("--seed", config.seed, "seed for randomized checks (default 1729)");
    cmd->add_option("--pasting-cap", config.pasting_cap, "pasting oracle node cap (default 7)");
    cmd->add_option("--pasting-universe-cap", config.pasting_universe_cap,
                    "closure intermediate cap (default 7)");
    cmd->add_option("--braid-pairs", config.braid_pairs, "braid crosscheck pairs (default 500)");
    cmd->add_option("--json", json_out, "write the report to this file");
  };

  CLI::App* run = app.add_subcommand("run", "run one verification scenario");
  run->add_option("scenario", scenario_name, "scenario name")->required();
  add_run_options(run);

  CLI::App* run_all = app.add_subcommand("run-all", "run every scenario");
  add_run_options(run_all);

  // ---- braid eq ----
  CLI::App* braid_cmd = app.add_subcommand("braid", "braid word utilities");
  CLI::App* braid_eq = braid_cmd->add_subcommand("eq", "decide equality of two braid words");
  int strands = 0;
  std::string w1_text, w2_text;
  braid_eq->add_option("--n", strands, "strand count")->required();
  braid_eq->add_option("w1", w1_text, "first word, e.g. \"1 2 1\"")->required();
  braid_eq->add_option("w2", w2_text, "second word, e.g. \"2 1 2\"")->required();

  // ---- normalize ----
  CLI::App* normalize = app.add_subcommand("normalize", "typecheck a term and print its image");
  std::string term_path;
  normalize->add_option("file", term_path,
                        "JSON: {\"presentation\": \"D-reflexive\"|\"D-nonreflexive\"|{...}, "
                        "\"term\": {...}}")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run || *run_all) {
      if (!input_path.empty()) config.input = builtin_or_file(input_path);
      if (mode_flag == "reflexive") config.mode_override = glob::Mode::Reflexive;
      if (mode_flag == "nonreflexive") config.mode_override = glob::Mode::NonReflexive;
      verify::Report r = *run ? verify::run_scenario(scenario_name, config)
                              : verify::run_all(config);
      emit_report(r, json_out);
      return verify::exit_code(r);
    }
    if (*braid_eq) {
      if (strands < 0 || strands > kCliStrandCap) {
        std::cerr << "strand count must be between 0 and " << kCliStrandCap << "\n";
        return 2;
      }
      braid::BraidWord a = braid::make_word(strands, parse_letters(w1_text));
      braid::BraidWord b = braid::make_word(strands, parse_letters(w2_text));
      bool eq = braid::equal(a, b);
      nlohmann::json out = {{"equal", eq},
                            {"w1", braid::word_to_json(a)},
                            {"w2", braid::word_to_json(b)},
                            {"exponent_sum", {braid::exponent_sum(a), braid::exponent_sum(b)}},
                            {"permutation", {braid::permutation(a), braid::permutation(b)}}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*normalize) {
      nlohmann::json j = read_json_file(term_path);
      if (!j.is_object() || !j.contains("presentation") || !j.contains("term"))
        throw Error("normalize input needs 'presentation' and 'term'");
      glob::Presentation p = j["presentation"].is_string()
                                 ? builtin_or_file(j["presentation"].get<std::string>())
                                 : glob::presentation_from_json(j["presentation"]);
      auto pres = std::make_shared<const glob::Presentation>(std::move(p));
      penon::FreePenonStructure s(pres);
      penon::Term t = penon::term_from_json(j["term"]);
      try {
        penon::TypeInfo info = s.typecheck(t);
        nlohmann::json out = {{"dim", info.dim},
                              {"display", penon::term_display(t)},
                              {"normal_form", penon::term_display(s.normal_form(t))},
                              {"phi", pasting::to_json(s.phi(t))}};
        if (info.src) out["src"] = penon::term_display(info.src);
        if (info.tgt) out["tgt"] = penon::term_display(info.tgt);
        std::cout << out.dump(2) << "\n";
        return 0;
      } catch (const TypecheckError& e) {
        nlohmann::json out = {{"error", e.what()}};
        if (!e.lhs_payload.empty()) out["lhs"] = e.lhs_payload;
        if (!e.rhs_payload.empty()) out["rhs"] = e.rhs_payload;
        std::cout << out.dump(2) << "\n";
        return 1;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

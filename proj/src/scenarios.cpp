#include "penonlab/scenarios.hpp"

#include <algorithm>

#include "penonlab/braid.hpp"
#include "penonlab/oracle.hpp"
#include "penonlab/penon.hpp"

namespace penonlab::verify {

using glob::CellRef;
using glob::Mode;
using glob::Presentation;

const std::vector<std::string> kScenarioNames = {
    "braid-counterexample", "braiding-sketch",  "clockface-nonreflexive",
    "eckmann-hilton-reflexive", "oracle-crosscheck", "symmetry-forced",
};

namespace {

nlohmann::json config_echo(const RunConfig& c) {
  nlohmann::json j = {{"K", c.K},
                      {"seed", c.seed},
                      {"pasting_cap", c.pasting_cap},
                      {"pasting_universe_cap", c.pasting_universe_cap},
                      {"braid_pairs", c.braid_pairs},
                      {"braid_max_strands", c.braid_max_strands},
                      {"braid_max_len", c.braid_max_len}};
  if (c.mode_override) j["mode"] = glob::to_string(*c.mode_override);
  j["presentation"] = c.input ? "user" : "builtin-D";
  return j;
}

Presentation pick_presentation(const RunConfig& c, Mode required) {
  if (c.mode_override && *c.mode_override != required)
    throw ModeError("this scenario runs in " + glob::to_string(required) + " mode");
  if (c.input) {
    if (c.input->mode() != required)
      throw ModeError("input presentation is " + glob::to_string(c.input->mode()) +
                      " but this scenario runs in " + glob::to_string(required) + " mode");
    return *c.input;
  }
  return glob::doubly_degenerate_D(required);
}

std::pair<CellRef, CellRef> pick_two_cells(const Presentation& p) {
  std::vector<std::string> ids;
  for (const auto& id : p.cells(2))
    if (!p.is_refl_image(2, id)) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  if (ids.size() < 2) throw Error("need at least two non-identity 2-cells");
  return {CellRef{2, ids[0]}, CellRef{2, ids[1]}};
}

nlohmann::json classes_json(const penon::Clockface& cf) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& cls : cf.classes) {
    nlohmann::json members = nlohmann::json::array();
    for (int i : cls) members.push_back(cf.labels[static_cast<std::size_t>(i)]);
    out.push_back(members);
  }
  return out;
}

Report scenario_eckmann_hilton(const RunConfig& c) {
  Report r;
  r.scenario = "eckmann-hilton-reflexive";
  auto pres = std::make_shared<const Presentation>(pick_presentation(c, Mode::Reflexive));
  penon::FreePenonStructure s(pres);
  auto [alpha, beta] = pick_two_cells(*pres);
  penon::Clockface cf = penon::clockface(s, alpha, beta);
  r.details = {{"classes", classes_json(cf)},
               {"expressions", cf.expressions},
               {"class_count", cf.classes.size()},
               {"phi_image", cf.class_phi.front()}};
  if (cf.classes.size() == 1 && cf.classes.front().size() == 12) {
    r.verdict = Report::Verdict::Pass;
  } else {
    r.verdict = Report::Verdict::Fail;
    r.witnesses.push_back({{"classes", classes_json(cf)}, {"phi", cf.class_phi}});
  }
  return r;
}

Report scenario_clockface_nonreflexive(const RunConfig& c) {
  Report r;
  r.scenario = "clockface-nonreflexive";
  auto pres = std::make_shared<const Presentation>(pick_presentation(c, Mode::NonReflexive));
  penon::FreePenonStructure s(pres);
  auto [alpha, beta] = pick_two_cells(*pres);
  penon::Clockface cf = penon::clockface(s, alpha, beta);
  std::vector<std::vector<int>> expected = {
      {0, 1, 2, 10, 11},  // 12, 1, 2, 10, 11 o'clock: the beta*alpha half
      {3},                // beta o alpha
      {4, 5, 6, 7, 8},    // 4..8 o'clock: the alpha*beta half
      {9},                // alpha o beta
  };
  auto sorted_classes = cf.classes;
  for (auto& cls : sorted_classes) std::sort(cls.begin(), cls.end());
  std::sort(sorted_classes.begin(), sorted_classes.end());
  std::sort(expected.begin(), expected.end());
  r.details = {{"classes", classes_json(cf)}, {"class_count", cf.classes.size()}};
  if (sorted_classes == expected) {
    r.verdict = Report::Verdict::Pass;
  } else {
    r.verdict = Report::Verdict::Fail;
    r.witnesses.push_back({{"classes", classes_json(cf)}});
  }
  return r;
}

Report scenario_symmetry_forced(const RunConfig& c) {
  Report r;
  r.scenario = "symmetry-forced";
  auto pres = std::make_shared<const Presentation>(pick_presentation(c, Mode::Reflexive));
  penon::FreePenonStructure s(pres);
  auto [alpha, beta] = pick_two_cells(*pres);

  penon::Term braiding = penon::braiding_cell(s, alpha, beta);
  r.details["braiding_cell"] = penon::term_display(braiding);

  nlohmann::json checks = nlohmann::json::array();
  bool all_ok = true;
  for (auto [x, y] : {std::pair{alpha, beta}, std::pair{beta, alpha}, std::pair{alpha, alpha}}) {
    Report sub = penon::symmetry_check(s, x, y);
    bool ok = sub.verdict == Report::Verdict::Pass;
    all_ok = all_ok && ok;
    checks.push_back({{"pair", {x.id, y.id}}, {"verdict", to_string(sub.verdict)}});
    if (!ok)
      for (const auto& w : sub.witnesses) r.witnesses.push_back(w);
  }
  r.details["checks"] = checks;
  r.verdict = all_ok ? Report::Verdict::Pass : Report::Verdict::Fail;
  return r;
}

Report scenario_braid_counterexample(const RunConfig& c) {
  Report r;
  r.scenario = "braid-counterexample";
  bool all_fail_as_expected = true;

  braid::BraidWord g = braid::gamma(1, 1);
  bool square_trivial = braid::equal(braid::compose(g, g), braid::id_word(2));
  r.details["gamma11_squared_is_identity"] = square_trivial;
  if (square_trivial) all_fail_as_expected = false;

  nlohmann::json candidates = nlohmann::json::array();
  for (int k = -c.K; k <= c.K; ++k) {
    braid::SymmetryVerdict v = braid::is_symmetry_candidate(k, c.K);
    bool refuted = !v.symmetry;
    if (v.failed_axiom == "symmetry")
      refuted = refuted && v.witness.at("square_equals_id").get<bool>() == false;
    else
      refuted = refuted && v.witness.at("equal").get<bool>() == false;
    all_fail_as_expected = all_fail_as_expected && refuted;
    candidates.push_back(
        {{"k", v.k}, {"failed_axiom", v.failed_axiom}, {"witness", v.witness}});
  }
  r.details["candidates"] = candidates;
  r.details["window"] = c.K;
  if (all_fail_as_expected) {
    r.verdict = Report::Verdict::Pass;
  } else {
    r.verdict = Report::Verdict::Fail;
    r.witnesses.push_back({{"candidates", candidates}});
  }
  return r;
}

Report scenario_braiding_sketch(const RunConfig& c) {
  auto pres = std::make_shared<const Presentation>(pick_presentation(c, Mode::NonReflexive));
  penon::FreePenonStructure s(pres);
  auto [alpha, beta] = pick_two_cells(*pres);
  Report r = penon::sketch_braiding(s, alpha, beta);
  r.scenario = "braiding-sketch";
  return r;
}

Report scenario_oracle_crosscheck(const RunConfig& c) {
  Report r;
  r.scenario = "oracle-crosscheck";
  bool ok = true;

  nlohmann::json pasting = nlohmann::json::object();
  for (Mode mode : {Mode::NonReflexive, Mode::Reflexive}) {
    auto pres = c.input && c.input->mode() == mode
                    ? std::make_shared<const Presentation>(*c.input)
                    : std::make_shared<const Presentation>(glob::doubly_degenerate_D(mode));
    oracle::PastingCrosscheck pc =
        oracle::pasting_crosscheck(pres, c.pasting_cap, c.pasting_universe_cap);
    nlohmann::json entry = {{"assert_terms", pc.assert_terms},
                            {"universe_terms", pc.universe_terms},
                            {"edges", pc.edges},
                            {"closure_classes", pc.closure_classes},
                            {"engine_classes", pc.engine_classes},
                            {"disagreements", pc.disagreements},
                            {"unsound_edges", pc.unsound_edges}};
    pasting[glob::to_string(mode)] = entry;
    if (!pc.ok()) {
      ok = false;
      r.witnesses.push_back({{"oracle", "pasting"},
                             {"mode", glob::to_string(mode)},
                             {"examples", pc.examples}});
    }
  }
  r.details["pasting"] = pasting;

  oracle::BraidCrosscheck bc =
      oracle::braid_crosscheck(c.braid_pairs, c.braid_max_strands, c.braid_max_len, c.seed);
  r.details["braid"] = {{"pairs", bc.pairs},
                        {"decided", bc.decided},
                        {"unknown", bc.unknown},
                        {"disagreements", bc.disagreements},
                        {"invariant_violations", bc.invariant_violations}};
  if (!bc.ok()) {
    ok = false;
    r.witnesses.push_back({{"oracle", "braid"},
                           {"disagreements", bc.disagreements},
                           {"invariant_violations", bc.invariant_violations}});
  }
  r.verdict = ok ? Report::Verdict::Pass : Report::Verdict::Fail;
  return r;
}

}  // namespace

Report run_scenario(const std::string& name, const RunConfig& config) {
  Report r;
  r.scenario = name;
  r.config = config_echo(config);
  try {
    if (name == "eckmann-hilton-reflexive")
      r = scenario_eckmann_hilton(config);
    else if (name == "clockface-nonreflexive")
      r = scenario_clockface_nonreflexive(config);
    else if (name == "symmetry-forced")
      r = scenario_symmetry_forced(config);
    else if (name == "braid-counterexample")
      r = scenario_braid_counterexample(config);
    else if (name == "braiding-sketch")
      r = scenario_braiding_sketch(config);
    else if (name == "oracle-crosscheck")
      r = scenario_oracle_crosscheck(config);
    else {
      r.verdict = Report::Verdict::Error;
      r.details = {{"error", "unknown scenario '" + name + "'"}};
      return r;
    }
  } catch (const std::exception& e) {
    r.verdict = Report::Verdict::Error;
    r.details = {{"error", e.what()}};
  }
  r.config = config_echo(config);
  return r;
}

Report run_all(const RunConfig& config) {
  Report all;
  all.scenario = "run-all";
  all.config = config_echo(config);
  nlohmann::json results = nlohmann::json::object();
  bool any_fail = false, any_error = false;
  for (const auto& name : kScenarioNames) {
    Report r = run_scenario(name, config);
    results[name] = to_json(r);
    any_fail = any_fail || r.verdict == Report::Verdict::Fail;
    any_error = any_error || r.verdict == Report::Verdict::Error;
    if (r.verdict == Report::Verdict::Fail)
      all.witnesses.push_back({{"scenario", name}, {"witnesses", r.witnesses}});
  }
  all.details = {{"scenarios", results}};
  all.verdict = any_error ? Report::Verdict::Error
                          : (any_fail ? Report::Verdict::Fail : Report::Verdict::Pass);
  if (any_error && all.witnesses.empty())
    all.witnesses.push_back({{"note", "a scenario errored; see details"}});
  return all;
}

int exit_code(const Report& r) {
  switch (r.verdict) {
    case Report::Verdict::Pass: return 0;
    case Report::Verdict::Fail: return 1;
    case Report::Verdict::Error: return 2;
  }
  return 2;
}

}  // namespace penonlab::verify

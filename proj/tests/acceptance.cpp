// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. All checks are exact; the randomized
// suites use a fixed seed. Exit code is the number of failed criteria.

#include <cstdio>
#include <optional>
#include <random>
#include <string>

#include "penonlab/braid.hpp"
#include "penonlab/oracle.hpp"
#include "penonlab/penon.hpp"
#include "penonlab/scenarios.hpp"
#include "test_support.hpp"

using namespace penonlab;
using glob::CellRef;
using glob::Mode;
using glob::Presentation;
using penon::comp;
using penon::contr;
using penon::FreePenonStructure;
using penon::gen;
using penon::ident;
using penon::Term;

namespace {

constexpr std::uint64_t kSeed = 1729;
int failures = 0;

void report(int number, const std::string& what, bool ok, const std::string& detail) {
  std::printf("[%s] %d. %s (%s)\n", ok ? "PASS" : "FAIL", number, what.c_str(), detail.c_str());
  if (!ok) ++failures;
}

FreePenonStructure structure(Mode m) {
  return FreePenonStructure(std::make_shared<const Presentation>(glob::doubly_degenerate_D(m)));
}

const CellRef kAlpha{2, "alpha"};
const CellRef kBeta{2, "beta"};

void criterion_1_eckmann_hilton() {
  FreePenonStructure s = structure(Mode::Reflexive);
  penon::Clockface cf = penon::clockface(s, kAlpha, kBeta);
  bool ok = cf.terms.size() == 12 && cf.classes.size() == 1 && cf.classes.front().size() == 12;
  report(1, "Eckmann-Hilton (reflexive): all 12 clockface expressions share one phi-image in T_R D",
         ok, std::to_string(cf.classes.size()) + " class(es)");
}

void criterion_2_forced_symmetry() {
  FreePenonStructure s = structure(Mode::Reflexive);
  int checked = 0;
  bool ok = true;
  for (auto [a, b] : {std::pair{kAlpha, kBeta}, std::pair{kBeta, kAlpha}, std::pair{kAlpha, kAlpha}}) {
    Term x = comp(1, gen(a), gen(b));
    Term y = comp(1, gen(b), gen(a));
    Term round_x = comp(2, contr(y, x), contr(x, y));
    Term round_y = comp(2, contr(x, y), contr(y, x));
    ok = ok && s.equal_top(round_x, ident(x)) && s.equal_top(round_y, ident(y));
    ++checked;
  }
  report(2, "forced symmetry: [y,x] o [x,y] = identity at the top dimension for all three pairs",
         ok, std::to_string(checked) + " pairs, both orientations");
}

void criterion_3_braid_counterexample() {
  const int K = 5;
  braid::BraidWord g = braid::gamma(1, 1);
  bool ok = !braid::equal(braid::compose(g, g), braid::id_word(2));
  int witnesses = 0;
  bool k0_seen = false;
  for (int k = -K; k <= K; ++k) {
    braid::SymmetryVerdict v = braid::is_symmetry_candidate(k, K);
    bool refuted = !v.symmetry && !v.witness.empty();
    if (k != 0)
      refuted = refuted && v.failed_axiom == "symmetry" &&
                v.witness.at("square_equals_id").get<bool>() == false;
    else {
      refuted = refuted && v.failed_axiom == "naturality" &&
                v.witness.at("equal").get<bool>() == false &&
                v.witness.at("f_tensor_g").at("word") == nlohmann::json({1}) &&
                v.witness.at("g_tensor_f").at("word") == nlohmann::json({3});
      k0_seen = refuted;
    }
    ok = ok && refuted;
    if (refuted) ++witnesses;
  }
  ok = ok && k0_seen && witnesses == 2 * K + 1;
  report(3, "braid counterexample: gamma^2 != id and every candidate |k| <= 5 fails with a witness",
         ok, std::to_string(witnesses) + " witnesses incl. the k=0 naturality pair sigma1 vs sigma3");
}

void criterion_4_clockface_nonreflexive() {
  FreePenonStructure s = structure(Mode::NonReflexive);
  penon::Clockface cf = penon::clockface(s, kAlpha, kBeta);
  auto sorted = cf.classes;
  for (auto& c : sorted) std::sort(c.begin(), c.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<int>> expected = {{0, 1, 2, 10, 11}, {3}, {4, 5, 6, 7, 8}, {9}};
  std::sort(expected.begin(), expected.end());
  bool ok = sorted == expected;
  report(4, "non-reflexive clockface: exactly 4 classes, top half / bottom half / the two poles",
         ok, std::to_string(cf.classes.size()) + " classes");
}

void criterion_5_braiding_sketch() {
  FreePenonStructure n = structure(Mode::NonReflexive);
  verify::Report r = penon::sketch_braiding(n, kAlpha, kBeta);
  bool ok = r.verdict == verify::Report::Verdict::Pass;
  int verified = 0;
  bool step5_asserted = false;
  std::vector<std::string> required = {"lunit_e", "runit_e", "uu", "lunit_e*", "runit_e*",
                                       "lambda_alpha", "rho_beta", "rho o_1 lambda", "chi"};
  std::vector<bool> seen(required.size(), false);
  for (const auto& item : r.details["items"]) {
    std::string name = item["name"].get<std::string>();
    std::string status = item["status"].get<std::string>();
    if (status == "verified") ++verified;
    if (status == "failed") ok = false;
    for (std::size_t i = 0; i < required.size(); ++i)
      if (name.find(required[i]) != std::string::npos && status == "verified") seen[i] = true;
    if (item["step"].get<int>() == 5 && status == "asserted") step5_asserted = true;
  }
  for (bool b : seen) ok = ok && b;
  ok = ok && step5_asserted;
  report(5, "braiding-sketch certificate: steps 1-4 verified in N D, step 5 asserted-by-symmetry",
         ok, std::to_string(verified) + " verified items");
}

void criterion_6_pasting_oracle() {
  bool ok = true;
  std::string detail;
  for (Mode m : {Mode::NonReflexive, Mode::Reflexive}) {
    auto pres = std::make_shared<const Presentation>(glob::doubly_degenerate_D(m));
    oracle::PastingCrosscheck r = oracle::pasting_crosscheck(pres, 7, 7);
    ok = ok && r.ok();
    detail += glob::to_string(m) + ": " + std::to_string(r.assert_terms) + " terms, " +
              std::to_string(r.disagreements) + " disagreements; ";
  }
  report(6, "pasting oracle equivalence on all terms of <= 7 nodes over D, both modes", ok, detail);
}

void criterion_7_braid_oracle() {
  oracle::BraidCrosscheck r = oracle::braid_crosscheck(500, 4, 12, kSeed);
  bool ok = r.ok() && r.pairs >= 500;
  report(7, "braid oracle equivalence on 500 random pairs (n <= 4, length <= 12)", ok,
         std::to_string(r.decided) + " decided, " + std::to_string(r.unknown) + " unknown, " +
             std::to_string(r.disagreements) + " disagreements, " +
             std::to_string(r.invariant_violations) + " invariant violations");
}

struct LawCounter {
  int instances = 0;
  int failed = 0;
  void check(bool ok) {
    ++instances;
    if (!ok) ++failed;
  }
};

void law_suite_pasting(LawCounter& lc, std::mt19937_64& rng) {
  for (int trial = 0; trial < 8; ++trial) {
    pasting::PresPtr pres;
    switch (trial % 4) {
      case 0:
        pres = std::make_shared<const Presentation>(glob::doubly_degenerate_D(Mode::NonReflexive));
        break;
      case 1:
        pres = std::make_shared<const Presentation>(glob::doubly_degenerate_D(Mode::Reflexive));
        break;
      case 2:
        pres = std::make_shared<const Presentation>(
            glob::free_reflexive_completion(testsupport::random_presentation(rng, false)));
        break;
      default:
        pres = std::make_shared<const Presentation>(testsupport::random_presentation(rng, false));
    }
    testsupport::DiagramPool pool(pres);
    pool.grow(rng, 150);
    std::vector<std::tuple<pasting::Diagram, pasting::Diagram, int>> pairs;
    pool.composable_pairs([&](const pasting::Diagram& x, const pasting::Diagram& y, int k) {
      if (pairs.size() < 2500) pairs.emplace_back(x, y, k);
    });

    int assoc = 0, units = 0, inter = 0;
    for (const auto& [x, y, k] : pairs) {
      if (assoc >= 40) break;
      pasting::Diagram xy = pasting::compose(x, y, k);
      for (const auto& [x2, y2, k2] : pairs) {
        if (k2 != k || assoc >= 40) continue;
        if (pasting::canonical(y2) != pasting::canonical(x)) continue;
        lc.check(pasting::equal(pasting::compose(x2, xy, k),
                                pasting::compose(pasting::compose(x2, x, k), y, k)));
        ++assoc;
      }
    }
    for (const auto& [x, y, k] : pairs) {
      (void)y;
      if (units >= 30 || k != x.dim() - 1) continue;
      lc.check(pasting::equal(pasting::compose(x, pasting::identity(pasting::source(x)), k), x));
      lc.check(pasting::equal(pasting::compose(pasting::identity(pasting::target(x)), x, k), x));
      units += 2;
    }
    for (const auto& [b2, b1, k] : pairs) {
      if (inter >= 30) break;
      for (const auto& [a2, a1, k2] : pairs) {
        if (k2 != k || inter >= 30) continue;
        for (int j = 0; j < k; ++j) {
          pasting::Diagram bk = pasting::compose(b2, b1, k);
          pasting::Diagram ak = pasting::compose(a2, a1, k);
          std::optional<pasting::Diagram> lhs, l, r;
          try {
            lhs = pasting::compose(bk, ak, j);
            l = pasting::compose(b2, a2, j);
            r = pasting::compose(b1, a1, j);
          } catch (const Error&) {
            continue;
          }
          lc.check(pasting::equal(*lhs, pasting::compose(*l, *r, k)));
          ++inter;
        }
      }
    }
  }
}

void law_suite_penon(LawCounter& lc, std::mt19937_64& rng) {
  for (Mode m : {Mode::Reflexive, Mode::NonReflexive}) {
    FreePenonStructure s = structure(m);
    testsupport::TermPool pool(s);
    pool.grow(rng, 260);
    for (const auto& t : pool.items) {
      penon::TypeInfo info = s.typecheck(t);
      if (t->kind == penon::PenonTerm::Kind::Comp)
        lc.check(pasting::equal(s.phi(t), pasting::compose(s.phi(t->a), s.phi(t->b), t->level)));
      if (t->kind == penon::PenonTerm::Kind::Ident)
        lc.check(pasting::equal(s.phi(t), pasting::identity(s.phi(t->a))));
      if (t->kind == penon::PenonTerm::Kind::Contr)
        lc.check(pasting::equal(s.phi(t), pasting::identity(s.phi(t->a))));
      if (info.dim >= 1) {
        lc.check(pasting::equal(s.phi(info.src), pasting::source(s.phi(t))));
        lc.check(pasting::equal(s.phi(info.tgt), pasting::target(s.phi(t))));
      }
    }
  }
}

void law_suite_braid(LawCounter& lc, std::mt19937_64& rng) {
  auto random_word = [&rng](int n, int maxlen) {
    std::vector<int> letters;
    if (n >= 2) {
      std::uniform_int_distribution<int> len(0, maxlen), g(1, n - 1), s(0, 1);
      int L = len(rng);
      for (int i = 0; i < L; ++i) letters.push_back(s(rng) ? g(rng) : -g(rng));
    }
    return braid::make_word(n, std::move(letters));
  };
  lc.check(braid::equal(braid::make_word(3, {1, 2, 1}), braid::make_word(3, {2, 1, 2})));
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      for (int p = 0; p <= 3; ++p) {
        lc.check(braid::equal(
            braid::gamma(m + n, p),
            braid::compose(braid::tensor(braid::gamma(m, p), braid::id_word(n)),
                           braid::tensor(braid::id_word(m), braid::gamma(n, p)))));
        lc.check(braid::equal(
            braid::gamma(m, n + p),
            braid::compose(braid::tensor(braid::id_word(n), braid::gamma(m, p)),
                           braid::tensor(braid::gamma(m, n), braid::id_word(p)))));
      }
  std::uniform_int_distribution<int> nd(0, 5);
  for (int i = 0; i < 120; ++i) {
    int m = nd(rng), n = nd(rng);
    braid::BraidWord f = random_word(m, 8), g = random_word(n, 8);
    lc.check(braid::equal(braid::compose(braid::gamma(m, n), braid::tensor(f, g)),
                          braid::compose(braid::tensor(g, f), braid::gamma(m, n))));
    braid::BraidWord a = random_word(m, 5), b = random_word(m, 5);
    braid::BraidWord c = random_word(n, 5), d = random_word(n, 5);
    lc.check(braid::equal(braid::tensor(braid::compose(a, b), braid::compose(c, d)),
                          braid::compose(braid::tensor(a, c), braid::tensor(b, d))));
  }
}

void criterion_8_law_suite() {
  std::mt19937_64 rng(kSeed);
  LawCounter lc;
  law_suite_pasting(lc, rng);
  law_suite_penon(lc, rng);
  law_suite_braid(lc, rng);
  bool ok = lc.instances >= 1000 && lc.failed == 0;
  report(8, "law suite: pasting/phi/braid identities on randomized well-typed instances, seed fixed",
         ok, std::to_string(lc.instances) + " instances, " + std::to_string(lc.failed) + " failures");
}

}  // namespace

int main() {
  std::printf("acceptance suite (seed %llu)\n", static_cast<unsigned long long>(kSeed));
  criterion_1_eckmann_hilton();
  criterion_2_forced_symmetry();
  criterion_3_braid_counterexample();
  criterion_4_clockface_nonreflexive();
  criterion_5_braiding_sketch();
  criterion_6_pasting_oracle();
  criterion_7_braid_oracle();
  criterion_8_law_suite();
  if (failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}

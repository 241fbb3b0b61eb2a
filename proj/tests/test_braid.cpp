#include <numeric>
#include <random>

#include "doctest.h"
#include "penonlab/braid.hpp"

using namespace penonlab;
using braid::BraidWord;

namespace {

BraidWord w(int n, std::vector<int> letters) { return braid::make_word(n, std::move(letters)); }

// Independent permutation computation by simulating strand positions.
std::vector<int> perm_by_simulation(const BraidWord& word) {
  std::vector<int> at(static_cast<std::size_t>(word.strands));
  std::iota(at.begin(), at.end(), 0);
  std::vector<int> where(at);
  for (int l : word.word) {
    int i = std::abs(l) - 1;
    int s1 = at[static_cast<std::size_t>(i)], s2 = at[static_cast<std::size_t>(i) + 1];
    std::swap(at[static_cast<std::size_t>(i)], at[static_cast<std::size_t>(i) + 1]);
    std::swap(where[static_cast<std::size_t>(s1)], where[static_cast<std::size_t>(s2)]);
  }
  return where;
}

// Independent substitution composition for the functoriality check.
braid::FreeWord apply_images(const braid::FreeWord& word, const std::vector<braid::FreeWord>& imgs) {
  braid::FreeWord out;
  auto push = [&out](int l) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  };
  for (int l : word) {
    const auto& img = imgs[static_cast<std::size_t>(std::abs(l)) - 1];
    if (l > 0)
      for (int x : img) push(x);
    else
      for (auto it = img.rbegin(); it != img.rend(); ++it) push(-*it);
  }
  return out;
}

BraidWord random_word(std::mt19937_64& rng, int n, int maxlen) {
  std::vector<int> letters;
  if (n >= 2) {
    std::uniform_int_distribution<int> len(0, maxlen), g(1, n - 1), s(0, 1);
    int L = len(rng);
    for (int i = 0; i < L; ++i) letters.push_back(s(rng) ? g(rng) : -g(rng));
  }
  return w(n, std::move(letters));
}

}  // namespace

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(w(2, {2}), Error);
  CHECK_THROWS_AS(w(1, {1}), Error);
  CHECK_THROWS_AS(w(0, {1}), Error);
  CHECK(w(0, {}).word.empty());
  CHECK(w(1, {}).word.empty());
}

TEST_CASE("compose") {
  BraidWord s1 = w(2, {1});
  BraidWord square = braid::compose(s1, s1);
  CHECK(square.word == std::vector<int>{1, 1});
  CHECK(braid::compose(s1, braid::id_word(2)).word == s1.word);
  CHECK(braid::compose(braid::id_word(2), s1).word == s1.word);
  CHECK_THROWS_AS(braid::compose(s1, w(3, {1})), Error);
}

TEST_CASE("tensor") {
  BraidWord s1 = w(2, {1});
  BraidWord juxt = braid::tensor(s1, s1);
  CHECK(juxt.strands == 4);
  CHECK(juxt.word == std::vector<int>{1, 3});
  CHECK(braid::tensor(s1, braid::id_word(0)).word == s1.word);
  CHECK(braid::tensor(braid::id_word(0), s1).word == s1.word);
}

TEST_CASE("tensor permutation is the block sum") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> nd(0, 4);
    BraidWord a = random_word(rng, nd(rng), 6);
    BraidWord b = random_word(rng, nd(rng), 6);
    auto pa = perm_by_simulation(a), pb = perm_by_simulation(b);
    std::vector<int> expect;
    for (int x : pa) expect.push_back(x);
    for (int x : pb) expect.push_back(x + a.strands);
    CHECK(braid::permutation(braid::tensor(a, b)) == expect);
  }
}

TEST_CASE("gamma") {
  CHECK(braid::gamma(1, 1).word == std::vector<int>{1});
  CHECK(braid::gamma(0, 5).word.empty());
  CHECK(braid::gamma(5, 0).word.empty());
  BraidWord g21 = braid::gamma(2, 1);
  CHECK(g21.strands == 3);
  CHECK(braid::exponent_sum(g21) == 2);
  CHECK(perm_by_simulation(g21) == std::vector<int>{1, 2, 0});  // block transposition
  // general block shape: first m strands land after the back block
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      BraidWord g = braid::gamma(m, n);
      CHECK(braid::exponent_sum(g) == static_cast<long long>(m) * n);
      auto p = braid::permutation(g);
      for (int i = 0; i < m; ++i) CHECK(p[static_cast<std::size_t>(i)] == n + i);
      for (int i = 0; i < n; ++i) CHECK(p[static_cast<std::size_t>(m + i)] == i);
      CHECK(braid::permutation(g) == perm_by_simulation(g));
    }
}

TEST_CASE("equality by the Artin action") {
  CHECK(braid::equal(w(3, {1, 2, 1}), w(3, {2, 1, 2})));  // Yang-Baxter
  CHECK_FALSE(braid::equal(w(2, {1, 1}), braid::id_word(2)));
  CHECK(braid::equal(w(2, {1, -1}), braid::id_word(2)));
  CHECK(braid::equal(w(3, {1, -1, 2, -2}), braid::id_word(3)));
  CHECK_FALSE(braid::equal(w(4, {1}), w(4, {3})));
  CHECK_THROWS_AS(braid::equal(w(2, {1}), w(3, {1})), Error);
  // distant generators commute
  CHECK(braid::equal(w(4, {1, 3}), w(4, {3, 1})));
  // conjugated braid relation variant
  CHECK(braid::equal(w(3, {1, 2, -1}), w(3, {-2, 1, 2})));
}

TEST_CASE("artin action is functorial and keeps reduced words") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 2 + trial % 3;
    BraidWord a = random_word(rng, n, 8);
    BraidWord b = random_word(rng, n, 8);
    braid::ArtinAction composite = braid::artin_action(braid::compose(a, b));
    braid::ArtinAction aa = braid::artin_action(a), bb = braid::artin_action(b);
    // action(a after b): substitute a's images into b's images
    std::vector<braid::FreeWord> expected;
    for (const auto& img : bb.images) expected.push_back(apply_images(img, aa.images));
    CHECK(composite.images == expected);
    for (const auto& img : composite.images)
      for (std::size_t i = 0; i + 1 < img.size(); ++i) CHECK(img[i] != -img[i + 1]);
  }
  braid::ArtinAction idact = braid::artin_action(braid::id_word(3));
  CHECK(idact.images == std::vector<braid::FreeWord>{{1}, {2}, {3}});
}

TEST_CASE("equal words share the homomorphic invariants") {
  std::mt19937_64 rng(11);
  int equal_pairs = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + trial % 3;
    BraidWord a = random_word(rng, n, 8);
    BraidWord b = random_word(rng, n, 8);
    if (braid::equal(a, b)) {
      ++equal_pairs;
      CHECK(braid::exponent_sum(a) == braid::exponent_sum(b));
      CHECK(braid::permutation(a) == braid::permutation(b));
    }
    // ... and conjugation-equal pairs, which occur rarely by chance
    BraidWord c = braid::compose(braid::compose(braid::inverse(a), b), a);
    BraidWord d = braid::compose(braid::compose(braid::inverse(a), braid::compose(b, b)), a);
    CHECK(braid::equal(braid::compose(c, c), d));
    ++equal_pairs;
  }
  CHECK(equal_pairs > 100);
}

TEST_CASE("tensor is functorial under equality") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    int m = trial % 4, n = 1 + trial % 3;
    BraidWord a = random_word(rng, m, 6), b = random_word(rng, m, 6);
    BraidWord c = random_word(rng, n, 6), d = random_word(rng, n, 6);
    BraidWord lhs = braid::tensor(braid::compose(a, b), braid::compose(c, d));
    BraidWord rhs = braid::compose(braid::tensor(a, c), braid::tensor(b, d));
    CHECK(braid::equal(lhs, rhs));
  }
}

TEST_CASE("gamma is natural and satisfies both hexagons") {
  std::mt19937_64 rng(17);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      for (int p = 0; p <= 3; ++p) {
        BraidWord lhs1 = braid::gamma(m + n, p);
        BraidWord rhs1 = braid::compose(braid::tensor(braid::gamma(m, p), braid::id_word(n)),
                                        braid::tensor(braid::id_word(m), braid::gamma(n, p)));
        CHECK(braid::equal(lhs1, rhs1));
        BraidWord lhs2 = braid::gamma(m, n + p);
        BraidWord rhs2 = braid::compose(braid::tensor(braid::id_word(n), braid::gamma(m, p)),
                                        braid::tensor(braid::gamma(m, n), braid::id_word(p)));
        CHECK(braid::equal(lhs2, rhs2));
      }
      for (int trial = 0; trial < 10; ++trial) {
        BraidWord f = random_word(rng, m, 6);
        BraidWord g = random_word(rng, n, 6);
        BraidWord nat_lhs = braid::compose(braid::gamma(m, n), braid::tensor(f, g));
        BraidWord nat_rhs = braid::compose(braid::tensor(g, f), braid::gamma(m, n));
        CHECK(braid::equal(nat_lhs, nat_rhs));
      }
    }
}

TEST_CASE("symmetry candidates all fail") {
  braid::SymmetryVerdict k1 = braid::is_symmetry_candidate(1);
  CHECK_FALSE(k1.symmetry);
  CHECK(k1.failed_axiom == "symmetry");
  CHECK(k1.witness["square_equals_id"] == false);
  CHECK(k1.witness["square_exponent_sum"] == 2);

  braid::SymmetryVerdict k0 = braid::is_symmetry_candidate(0);
  CHECK(k0.failed_axiom == "naturality");
  CHECK(k0.witness["equal"] == false);
  CHECK(k0.witness["f_tensor_g"]["word"] == std::vector<int>{1});
  CHECK(k0.witness["g_tensor_f"]["word"] == std::vector<int>{3});

  braid::SymmetryVerdict km2 = braid::is_symmetry_candidate(-2);
  CHECK(km2.failed_axiom == "symmetry");
  CHECK(km2.witness["square_exponent_sum"] == -4);

  CHECK_THROWS_AS(braid::is_symmetry_candidate(6, 5), Error);
}

TEST_CASE("braiding axiom report") {
  verify::Report r = braid::check_braiding_axioms(40, 99);
  CHECK(r.verdict == verify::Report::Verdict::Pass);
  CHECK(r.details["failed"] == 0);
  CHECK(r.details["checked"].get<int>() > 100);
}

TEST_CASE("braid word JSON") {
  BraidWord a = w(4, {1, -3});
  nlohmann::json j = braid::word_to_json(a);
  CHECK(j == nlohmann::json{{"n", 4}, {"word", {1, -3}}});
  BraidWord back = braid::word_from_json(j);
  CHECK(back.strands == 4);
  CHECK(back.word == a.word);
  CHECK_THROWS_AS(braid::word_from_json(nlohmann::json{{"n", 2}, {"word", {5}}}), Error);
}

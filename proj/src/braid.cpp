#include "penonlab/braid.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace penonlab::braid {

using verify::Report;

BraidWord make_word(int strands, std::vector<int> letters) {
  if (strands < 0) throw Error("negative strand count");
  for (int l : letters) {
    int i = std::abs(l);
    if (l == 0 || i > strands - 1)
      throw Error("letter " + std::to_string(l) + " out of range for " + std::to_string(strands) +
                  " strands");
  }
  return BraidWord{strands, std::move(letters)};
}

BraidWord id_word(int strands) { return make_word(strands, {}); }

BraidWord compose(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands != w2.strands)
    throw Error("composition of braids on " + std::to_string(w1.strands) + " and " +
                std::to_string(w2.strands) + " strands");
  std::vector<int> letters = w2.word;
  letters.insert(letters.end(), w1.word.begin(), w1.word.end());
  return BraidWord{w1.strands, std::move(letters)};
}

BraidWord tensor(const BraidWord& w1, const BraidWord& w2) {
  std::vector<int> letters = w1.word;
  for (int l : w2.word) letters.push_back(l > 0 ? l + w1.strands : l - w1.strands);
  return BraidWord{w1.strands + w2.strands, std::move(letters)};
}

BraidWord inverse(const BraidWord& w) {
  std::vector<int> letters(w.word.rbegin(), w.word.rend());
  for (int& l : letters) l = -l;
  return BraidWord{w.strands, std::move(letters)};
}

BraidWord power(const BraidWord& w, int k) {
  BraidWord base = k >= 0 ? w : inverse(w);
  BraidWord out = id_word(w.strands);
  for (int i = 0; i < std::abs(k); ++i) out = compose(out, base);
  return out;
}

BraidWord gamma(int m, int n) {
  if (m < 0 || n < 0) throw Error("gamma of negative block sizes");
  std::vector<int> letters;
  letters.reserve(static_cast<size_t>(m) * static_cast<size_t>(n));
  for (int i = m; i >= 1; --i)
    for (int j = 0; j < n; ++j) letters.push_back(i + j);
  return BraidWord{m + n, std::move(letters)};
}

std::vector<int> permutation(const BraidWord& w) {
  std::vector<int> pos(static_cast<size_t>(w.strands));
  std::iota(pos.begin(), pos.end(), 0);
  for (int l : w.word) {
    int i = std::abs(l) - 1;
    std::swap(pos[static_cast<size_t>(i)], pos[static_cast<size_t>(i) + 1]);
  }
  // pos[p] = which strand ends at position p; invert to map start -> end.
  std::vector<int> img(pos.size());
  for (size_t p = 0; p < pos.size(); ++p) img[static_cast<size_t>(pos[p])] = static_cast<int>(p);
  return img;
}

long long exponent_sum(const BraidWord& w) {
  long long s = 0;
  for (int l : w.word) s += l > 0 ? 1 : -1;
  return s;
}

namespace {

void append_reduced(FreeWord& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

void append_word(FreeWord& out, const FreeWord& w, bool inverted) {
  if (!inverted) {
    for (int l : w) append_reduced(out, l);
  } else {
    for (auto it = w.rbegin(); it != w.rend(); ++it) append_reduced(out, -*it);
  }
}

// Substitute `images` into `w`: each letter x_j of w becomes images[j-1].
FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images) {
  FreeWord out;
  for (int l : w) {
    const FreeWord& img = images[static_cast<size_t>(std::abs(l)) - 1];
    append_word(out, img, l < 0);
  }
  return out;
}

// sigma_i: x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i; inverse:
// x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}.
std::vector<FreeWord> letter_images(int n, int letter) {
  std::vector<FreeWord> imgs(static_cast<size_t>(n));
  for (int j = 1; j <= n; ++j) imgs[static_cast<size_t>(j) - 1] = {j};
  int i = std::abs(letter);
  if (letter > 0) {
    imgs[static_cast<size_t>(i) - 1] = {i, i + 1, -i};
    imgs[static_cast<size_t>(i)] = {i};
  } else {
    imgs[static_cast<size_t>(i) - 1] = {i + 1};
    imgs[static_cast<size_t>(i)] = {-(i + 1), i, i + 1};
  }
  return imgs;
}

}  // namespace

ArtinAction artin_action(const BraidWord& w) {
  ArtinAction act;
  act.n = w.strands;
  act.images.resize(static_cast<size_t>(w.strands));
  for (int j = 1; j <= w.strands; ++j) act.images[static_cast<size_t>(j) - 1] = {j};
  // Letters are applied first to last; the action of the whole word is the
  // last letter's automorphism composed after the accumulated one, so we
  // substitute the letter images into the accumulated images.
  for (int l : w.word) {
    auto imgs = letter_images(w.strands, l);
    for (auto& image : act.images) image = substitute(image, imgs);
  }
  return act;
}

bool equal(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands != w2.strands)
    throw Error("equality of braids on different strand counts");
  if (exponent_sum(w1) != exponent_sum(w2)) return false;
  if (permutation(w1) != permutation(w2)) return false;
  return artin_action(w1) == artin_action(w2);
}

SymmetryVerdict is_symmetry_candidate(int k, int K) {
  if (std::abs(k) > K)
    throw Error("candidate exponent " + std::to_string(k) + " outside the configured window K=" +
                std::to_string(K));
  SymmetryVerdict v;
  v.k = k;
  v.symmetry = false;
  if (k != 0) {
    BraidWord cand = power(gamma(1, 1), k);
    BraidWord square = compose(cand, cand);
    v.failed_axiom = "symmetry";
    v.witness = {{"candidate", word_to_json(cand)},
                 {"square", word_to_json(square)},
                 {"square_exponent_sum", exponent_sum(square)},
                 {"square_equals_id", equal(square, id_word(2))}};
  } else {
    // sigma_{1,1} = id forces sigma_{m,n} = id for all m,n; naturality then
    // fails at f = sigma_1 in B_2, g = id_2.
    BraidWord f = make_word(2, {1});
    BraidWord g = id_word(2);
    BraidWord lhs = tensor(f, g);  // sigma_1 in B_4
    BraidWord rhs = tensor(g, f);  // sigma_3 in B_4
    v.failed_axiom = "naturality";
    v.witness = {{"sigma_mn", "id for all m,n (forced)"},
                 {"f", word_to_json(f)},
                 {"g", word_to_json(g)},
                 {"f_tensor_g", word_to_json(lhs)},
                 {"g_tensor_f", word_to_json(rhs)},
                 {"equal", equal(lhs, rhs)}};
  }
  return v;
}

namespace {

BraidWord random_word(std::mt19937_64& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  int len = len_dist(rng);
  std::vector<int> letters;
  if (strands >= 2) {
    std::uniform_int_distribution<int> gen_dist(1, strands - 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    for (int i = 0; i < len; ++i) {
      int l = gen_dist(rng);
      letters.push_back(sign_dist(rng) ? l : -l);
    }
  }
  return make_word(strands, std::move(letters));
}

}  // namespace

Report check_braiding_axioms(int sample_size, std::uint64_t seed) {
  Report r;
  r.scenario = "braiding-axioms";
  r.config = {{"sample_size", sample_size}, {"seed", seed}};
  std::mt19937_64 rng(seed);
  int checked = 0, failed = 0;
  auto expect = [&](bool ok, const char* law, const nlohmann::json& data) {
    ++checked;
    if (!ok) {
      ++failed;
      r.witnesses.push_back({{"law", law}, {"instance", data}});
    }
  };

  // Yang-Baxter.
  expect(equal(make_word(3, {1, 2, 1}), make_word(3, {2, 1, 2})), "yang-baxter",
         {{"lhs", "s1 s2 s1"}, {"rhs", "s2 s1 s2"}});

  // Hexagons, exhaustively for small blocks.
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      for (int p = 0; p <= 3; ++p) {
        BraidWord lhs1 = gamma(m + n, p);
        BraidWord rhs1 = compose(tensor(gamma(m, p), id_word(n)), tensor(id_word(m), gamma(n, p)));
        expect(equal(lhs1, rhs1), "hexagon-1", {{"m", m}, {"n", n}, {"p", p}});
        BraidWord lhs2 = gamma(m, n + p);
        BraidWord rhs2 = compose(tensor(id_word(n), gamma(m, p)), tensor(gamma(m, n), id_word(p)));
        expect(equal(lhs2, rhs2), "hexagon-2", {{"m", m}, {"n", n}, {"p", p}});
      }

  // Naturality of gamma and functoriality of the tensor on random braids.
  std::uniform_int_distribution<int> strand_dist(0, 5);
  for (int it = 0; it < sample_size; ++it) {
    int m = strand_dist(rng), n = strand_dist(rng);
    BraidWord f = random_word(rng, m, 10);
    BraidWord g = random_word(rng, n, 10);
    BraidWord nat_lhs = compose(gamma(m, n), tensor(f, g));
    BraidWord nat_rhs = compose(tensor(g, f), gamma(m, n));
    expect(equal(nat_lhs, nat_rhs), "naturality",
           {{"m", m}, {"n", n}, {"f", word_to_json(f)}, {"g", word_to_json(g)}});

    BraidWord a = random_word(rng, m, 6), b = random_word(rng, m, 6);
    BraidWord c = random_word(rng, n, 6), d = random_word(rng, n, 6);
    BraidWord fun_lhs = tensor(compose(a, b), compose(c, d));
    BraidWord fun_rhs = compose(tensor(a, c), tensor(b, d));
    expect(equal(fun_lhs, fun_rhs), "tensor-functoriality", {{"m", m}, {"n", n}});
  }

  r.details = {{"checked", checked}, {"failed", failed}};
  r.verdict = failed == 0 ? Report::Verdict::Pass : Report::Verdict::Fail;
  return r;
}

nlohmann::json word_to_json(const BraidWord& w) {
  return {{"n", w.strands}, {"word", w.word}};
}

BraidWord word_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("word"))
    throw Error("braid word JSON needs 'n' and 'word'");
  return make_word(j["n"].get<int>(), j["word"].get<std::vector<int>>());
}

}  // namespace penonlab::braid

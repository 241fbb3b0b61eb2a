#pragma once

// The free braided strict monoidal category on one object: objects are
// strand counts, endomorphisms are braid group elements given as words in
// the signed Artin generators. The word problem is decided through the
// faithful Artin action on the free group.

#include <cstdint>
#include <string>
#include <vector>

#include "penonlab/errors.hpp"
#include "penonlab/report.hpp"

#include "json.hpp"

namespace penonlab::braid {

// Letters are +/-i for sigma_i^{+/-1}, 1 <= i <= strands-1, stored first
// applied first.
struct BraidWord {
  int strands = 0;
  std::vector<int> word;
};

BraidWord make_word(int strands, std::vector<int> letters);
BraidWord id_word(int strands);

// w1 after w2 (categorical composition n -> n -> n).
BraidWord compose(const BraidWord& w1, const BraidWord& w2);

// Juxtaposition: strand counts add, w2's letters shift past w1's strands.
BraidWord tensor(const BraidWord& w1, const BraidWord& w2);

BraidWord inverse(const BraidWord& w);
BraidWord power(const BraidWord& w, int k);

// The block braiding m+n -> n+m: each of the first m strands crosses over
// each of the last n exactly once; positive word, exponent sum m*n.
BraidWord gamma(int m, int n);

// Underlying permutation (image of each start position, 0-based) and the
// exponent-sum homomorphism.
std::vector<int> permutation(const BraidWord& w);
long long exponent_sum(const BraidWord& w);

// Images of the free-group generators under the word's Artin action, freely
// reduced. Letters of image words are +/-j for x_j^{+/-1}, 1 <= j <= n.
using FreeWord = std::vector<int>;
struct ArtinAction {
  int n = 0;
  std::vector<FreeWord> images;
  bool operator==(const ArtinAction& o) const { return n == o.n && images == o.images; }
};
ArtinAction artin_action(const BraidWord& w);

// Exact decision of the word problem via the Artin action (faithful).
bool equal(const BraidWord& w1, const BraidWord& w2);

// Verdict for one symmetry candidate gamma_{1,1}^k; every candidate fails,
// with an explicit witness.
struct SymmetryVerdict {
  int k = 0;
  bool symmetry = false;  // always false here; kept for report clarity
  std::string failed_axiom;
  nlohmann::json witness;
};
SymmetryVerdict is_symmetry_candidate(int k, int K = 5);

// Randomized naturality / hexagon / Yang-Baxter checks.
verify::Report check_braiding_axioms(int sample_size, std::uint64_t seed);

nlohmann::json word_to_json(const BraidWord& w);
BraidWord word_from_json(const nlohmann::json& j);

}  // namespace penonlab::braid

#pragma once

// Independent decision procedures used to cross-check the engines.
//
// Pasting: the congruence generated by associativity, unit laws,
// interchange, functoriality of identities (plus, in reflexive mode, the
// identification of refl-image generators with identities and the derived
// Eckmann-Hilton swap for bubble operands) is computed by brute force over
// the universe of all structurally-typed composition/identity terms of
// bounded node count, as a congruence closure with explicit root-rewrite
// edges. Equality of engine normal forms is then compared class by class.
//
// Braids: a bounded bidirectional search under free cancellation, distant
// commutation and the length-3 braid-relation variants.

#include <cstdint>
#include <string>
#include <vector>

#include "penonlab/braid.hpp"
#include "penonlab/pasting.hpp"
#include "penonlab/penon.hpp"

namespace penonlab::oracle {

struct PastingCrosscheck {
  std::size_t assert_terms = 0;    // structurally-typed terms of <= assert_cap nodes
  std::size_t universe_terms = 0;  // including intermediates up to universe_cap
  std::size_t edges = 0;           // root rewrite edges found
  std::size_t closure_classes = 0;
  std::size_t engine_classes = 0;
  std::size_t disagreements = 0;
  std::size_t unsound_edges = 0;  // rewrite edges the engine refutes (must be 0)
  std::vector<std::string> examples;
  bool ok() const { return disagreements == 0 && unsound_edges == 0; }
};

// Compares the rewrite-closure partition with engine equality on every
// structurally-typed term of <= assert_cap composition/identity nodes.
PastingCrosscheck pasting_crosscheck(const pasting::PresPtr& pres, int assert_cap = 7,
                                     int universe_cap = 7);

// Closure class index of each probe term (Gen/Ident/Comp only) within the
// bounded universe; equal indices mean the closure proves the terms equal.
// `eh_rules` switches the derived Eckmann-Hilton rules on or off, so the
// derivation of those rules can itself be checked against the base set.
std::vector<int> closure_classes_of(const pasting::PresPtr& pres,
                                    const std::vector<penon::Term>& probes, int universe_cap,
                                    bool eh_rules);

enum class OracleVerdict { Equal, Unequal, Unknown };

OracleVerdict braid_closure_equal(const braid::BraidWord& w1, const braid::BraidWord& w2,
                                  int max_steps = 10, int len_slack = 2,
                                  std::size_t state_cap = 250000);

// All words one rewrite away (within the length cap).
std::vector<std::vector<int>> braid_neighbors(const std::vector<int>& word, int strands,
                                              std::size_t len_cap);

struct BraidCrosscheck {
  int pairs = 0;
  int decided = 0;
  int unknown = 0;
  int disagreements = 0;
  int invariant_violations = 0;
  bool ok() const { return disagreements == 0 && invariant_violations == 0; }
};

BraidCrosscheck braid_crosscheck(int pairs, int max_strands, int max_len, std::uint64_t seed);

}  // namespace penonlab::oracle

#pragma once

// Cells of the free strict n-category T A on a globular presentation, and of
// T_R A over a reflexive one, as normalized labeled pasting trees with
// decidable structural equality.
//
// Encoding. A diagram of dimension m is a tree of height <= m. A node at
// depth d carries a list of `slots` (labels of dim-d cells, the levels of a
// parallel stack) and one child between each pair of consecutive slots, so
// slots.size() == kids.size() + 1. The positions of dimension d are exactly
// the slots of the depth-d nodes. Label compatibility: every slot label g of
// the i-th child of a node with slots x_0..x_p satisfies src(g) = x_{i-1}
// and tgt(g) = x_i.
//
//   - a generator of dimension k embeds as the height-k "globe" chain;
//   - identities are height-deficient trees (no labeled top positions);
//   - composing at level k zips the two trees down to depth k and
//     concatenates there, identifying the seam slot;
//   - source/target truncate at depth m, keeping the first/last slot of
//     each depth-(m-1) node.
//
// Associativity, units and interchange hold as structural equalities of the
// encoding. In reflexive mode diagrams are normalized further: positions
// labeled by refl-image cells collapse to genuine identities (class
// UnitCoherent), and over doubly degenerate presentations the 2-cells form a
// commutative monoid, canonicalized as a sorted column (class Degenerate).

#include <memory>
#include <string>
#include <vector>

#include "penonlab/glob.hpp"

#include "json.hpp"

namespace penonlab::pasting {

struct Node {
  std::vector<std::string> slots;
  std::vector<Node> kids;

  bool operator==(const Node& o) const { return slots == o.slots && kids == o.kids; }
  bool operator!=(const Node& o) const { return !(*this == o); }
};

int height(const Node& n);

// Supported presentation shapes for the pasting engine.
//   NonReflexive: any valid non-reflexive presentation; trees are canonical
//     as-is.
//   UnitCoherent: reflexive, and no non-refl-image generator has a
//     refl-image boundary (free reflexive completions live here);
//     normalization removes refl-labeled leaf positions.
//   Degenerate: reflexive, doubly degenerate, real generators only at
//     dimension <= 2; 2-cells of T_R are multisets of the real 2-cells
//     (Eckmann-Hilton), canonicalized as a sorted column.
// Valid reflexive presentations outside both classes are rejected: deciding
// equality there is a computad word problem, which is out of scope.
enum class PastingClass { NonReflexive, UnitCoherent, Degenerate };

PastingClass classify(const glob::Presentation& p);

using PresPtr = std::shared_ptr<const glob::Presentation>;

class Diagram {
 public:
  const glob::Presentation& presentation() const { return *pres_; }
  const PresPtr& presentation_ptr() const { return pres_; }
  int dim() const { return dim_; }
  const Node& root() const { return root_; }
  bool normalized() const { return normalized_; }

  // Wraps an explicit tree without normalizing (label compatibility is
  // checked). Used by tests and by reflexive_collapse inputs.
  static Diagram raw(PresPtr pres, int dim, Node root);

 private:
  friend Diagram embed_generator(const PresPtr&, const glob::CellRef&);
  friend Diagram identity(const Diagram&);
  friend Diagram source(const Diagram&);
  friend Diagram target(const Diagram&);
  friend Diagram compose(const Diagram&, const Diagram&, int);
  friend bool equal(const Diagram&, const Diagram&);
  friend Diagram reflexive_collapse(const Diagram&);

  // Normalizes per the presentation's pasting class, validates, and wraps.
  static Diagram make_normalized(PresPtr pres, int dim, Node root);
  static Diagram boundary(const Diagram& d, bool take_first);
  static Diagram ensure_normalized(const Diagram& d);

  Diagram(PresPtr pres, int dim, Node root, bool normalized)
      : pres_(std::move(pres)), dim_(dim), root_(std::move(root)), normalized_(normalized) {}

  PresPtr pres_;
  int dim_;
  Node root_;
  bool normalized_;
};

// The one-position diagram on a generator; normalized.
Diagram embed_generator(const PresPtr& pres, const glob::CellRef& g);

// The strict identity on d, one dimension up.
Diagram identity(const Diagram& d);

Diagram source(const Diagram& d);
Diagram target(const Diagram& d);

// d1 composed after d2 along their shared k-boundary: compose(d1, d2, k)
// is d1 o_k d2 with d2 first.
Diagram compose(const Diagram& d1, const Diagram& d2, int k);

// Structural equality of normalized diagrams; this is equality of cells in
// the free strict n-category. Requires equal presentations and modes.
bool equal(const Diagram& d1, const Diagram& d2);

// Normalizes a diagram over a reflexive presentation (refl-image positions
// become genuine identities). All pasting operations in reflexive mode apply
// this collapse automatically; on their outputs it is the identity.
Diagram reflexive_collapse(const Diagram& d);

// Deterministic, byte-stable serialization; used for hashing, reports and
// golden tests.
std::string canonical(const Diagram& d);
nlohmann::json to_json(const Diagram& d);

}  // namespace penonlab::pasting

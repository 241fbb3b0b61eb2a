#pragma once

// Term calculus for cells of the free weak-3-category structure over a
// presentation: generators, putative identities, binary composites at every
// level, and contraction cells [a, b] : a -> b for parallel terms with equal
// images in the free strict n-category. `phi` evaluates terms into the
// pasting engine by sending contraction cells to identities and forgetting
// parenthesization; `equal_top` is the top-dimension identification.

#include <memory>
#include <string>
#include <vector>

#include "penonlab/pasting.hpp"
#include "penonlab/report.hpp"

#include "json.hpp"

namespace penonlab::penon {

struct PenonTerm;
using Term = std::shared_ptr<const PenonTerm>;

struct PenonTerm {
  enum class Kind { Gen, Ident, Comp, Contr };
  Kind kind;
  glob::CellRef cell;  // Gen
  int level = -1;      // Comp: composition along bounding level-cells
  Term a, b;           // Comp: a o_k b with b first; Contr: [a, b] : a -> b
};

Term gen(glob::CellRef c);
Term ident(Term t);
Term comp(int k, Term t1, Term t2);
Term contr(Term a, Term b);

bool structurally_equal(const Term& t1, const Term& t2);
std::string term_display(const Term& t);
std::string term_key(const Term& t);
nlohmann::json term_to_json(const Term& t);
Term term_from_json(const nlohmann::json& j);

struct TypeInfo {
  int dim = 0;
  Term src, tgt;  // null at dimension 0
};

class FreePenonStructure {
 public:
  // Validates the presentation and checks it is supported by the pasting
  // engine. Mode reflexive gives P A over T_R A, non-reflexive N A over T A.
  explicit FreePenonStructure(pasting::PresPtr pres);

  glob::Mode mode() const { return pres_->mode(); }
  const glob::Presentation& presentation() const { return *pres_; }
  const pasting::PresPtr& presentation_ptr() const { return pres_; }

  // Dimension and boundary terms; composites are matched on structural
  // boundary terms, contraction cells on parallelism plus phi-equality.
  TypeInfo typecheck(const Term& t) const;

  // Evaluation into T A / T_R A: generators embed, identities become strict
  // identities, contraction cells become identities on phi of their source.
  pasting::Diagram phi(const Term& t) const;

  // Equality of top-dimensional cells: parallel and equal phi-images.
  bool equal_top(const Term& t1, const Term& t2) const;

  // Equality below the top dimension: structural modulo [a,a] = i(a) (and,
  // in reflexive mode, Gen of a refl-image = Ident of its origin).
  bool equal_low(const Term& t1, const Term& t2) const;
  Term normal_form(const Term& t) const;

  // Checked contraction constructor [a, b].
  Term contraction(const Term& a, const Term& b) const;

 private:
  pasting::PresPtr pres_;
};

// The twelve composites of the Eckmann-Hilton clock face over a doubly
// degenerate presentation, with the partition of their phi-images.
struct Clockface {
  std::vector<std::string> labels;       // clock positions "12", "1", ..., "11"
  std::vector<std::string> expressions;  // display forms
  std::vector<Term> terms;
  std::vector<std::vector<int>> classes;  // partition of indices by phi-equality
  std::vector<std::string> class_phi;     // canonical phi-image per class
};

Clockface clockface(const FreePenonStructure& s, const glob::CellRef& alpha,
                    const glob::CellRef& beta);

// The braiding contraction cell [alpha o beta, beta o alpha]. In
// non-reflexive mode the phi-precondition fails, which is the point.
Term braiding_cell(const FreePenonStructure& s, const glob::CellRef& alpha,
                   const glob::CellRef& beta);

// Verifies [y,x] o [x,y] = identity at the top dimension for x = alpha o
// beta, y = beta o alpha (both orientations).
verify::Report symmetry_check(const FreePenonStructure& s, const glob::CellRef& alpha,
                              const glob::CellRef& beta);

// Certificate for the braiding sketch in the non-reflexive structure:
// unit contraction 2-cells with pseudo-inverses, the contraction 3-cells
// lambda/rho, their 1-composite, the middle-collapse precomposition (checked
// up to associativity at the phi level), and the clockface-gap cell chi.
// Algebra-dependent identifications are recorded as asserted facts; the last
// step is reported asserted-by-symmetry.
verify::Report sketch_braiding(const FreePenonStructure& s, const glob::CellRef& alpha,
                               const glob::CellRef& beta);

}  // namespace penonlab::penon

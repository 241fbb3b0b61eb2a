#include "penonlab/penon.hpp"

#include <optional>
#include <unordered_map>

namespace penonlab::penon {

using glob::CellRef;
using glob::Mode;
using pasting::Diagram;
using verify::Report;

Term gen(CellRef c) {
  auto t = std::make_shared<PenonTerm>();
  t->kind = PenonTerm::Kind::Gen;
  t->cell = std::move(c);
  return t;
}

Term ident(Term sub) {
  auto t = std::make_shared<PenonTerm>();
  t->kind = PenonTerm::Kind::Ident;
  t->a = std::move(sub);
  return t;
}

Term comp(int k, Term t1, Term t2) {
  auto t = std::make_shared<PenonTerm>();
  t->kind = PenonTerm::Kind::Comp;
  t->level = k;
  t->a = std::move(t1);
  t->b = std::move(t2);
  return t;
}

Term contr(Term a, Term b) {
  auto t = std::make_shared<PenonTerm>();
  t->kind = PenonTerm::Kind::Contr;
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}

bool structurally_equal(const Term& t1, const Term& t2) {
  if (t1 == t2) return true;
  if (!t1 || !t2 || t1->kind != t2->kind) return false;
  switch (t1->kind) {
    case PenonTerm::Kind::Gen:
      return t1->cell == t2->cell;
    case PenonTerm::Kind::Ident:
      return structurally_equal(t1->a, t2->a);
    case PenonTerm::Kind::Comp:
      return t1->level == t2->level && structurally_equal(t1->a, t2->a) &&
             structurally_equal(t1->b, t2->b);
    case PenonTerm::Kind::Contr:
      return structurally_equal(t1->a, t2->a) && structurally_equal(t1->b, t2->b);
  }
  return false;
}

std::string term_display(const Term& t) {
  if (!t) return "<null>";
  switch (t->kind) {
    case PenonTerm::Kind::Gen:
      return t->cell.id;
    case PenonTerm::Kind::Ident:
      return "i(" + term_display(t->a) + ")";
    case PenonTerm::Kind::Comp:
      return "(" + term_display(t->a) + " o" + std::to_string(t->level) + " " +
             term_display(t->b) + ")";
    case PenonTerm::Kind::Contr:
      return "[" + term_display(t->a) + ", " + term_display(t->b) + "]";
  }
  return "?";
}

nlohmann::json term_to_json(const Term& t) {
  if (!t) throw Error("null term");
  nlohmann::json j;
  switch (t->kind) {
    case PenonTerm::Kind::Gen:
      j["Gen"] = {{"dim", t->cell.dim}, {"id", t->cell.id}};
      break;
    case PenonTerm::Kind::Ident:
      j["Ident"] = term_to_json(t->a);
      break;
    case PenonTerm::Kind::Comp:
      j["Comp"] = {{"k", t->level}, {"t1", term_to_json(t->a)}, {"t2", term_to_json(t->b)}};
      break;
    case PenonTerm::Kind::Contr:
      j["Contr"] = {{"a", term_to_json(t->a)}, {"b", term_to_json(t->b)}};
      break;
  }
  return j;
}

std::string term_key(const Term& t) { return term_to_json(t).dump(); }

Term term_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.size() != 1) throw Error("term JSON must have exactly one constructor key");
  if (j.contains("Gen")) {
    const auto& g = j["Gen"];
    if (!g.is_object() || !g.contains("dim") || !g.contains("id"))
      throw Error("Gen needs 'dim' and 'id'");
    return gen(CellRef{g["dim"].get<int>(), g["id"].get<std::string>()});
  }
  if (j.contains("Ident")) return ident(term_from_json(j["Ident"]));
  if (j.contains("Comp")) {
    const auto& c = j["Comp"];
    if (!c.is_object() || !c.contains("k") || !c.contains("t1") || !c.contains("t2"))
      throw Error("Comp needs 'k', 't1', 't2'");
    return comp(c["k"].get<int>(), term_from_json(c["t1"]), term_from_json(c["t2"]));
  }
  if (j.contains("Contr")) {
    const auto& c = j["Contr"];
    if (!c.is_object() || !c.contains("a") || !c.contains("b"))
      throw Error("Contr needs 'a' and 'b'");
    return contr(term_from_json(c["a"]), term_from_json(c["b"]));
  }
  throw Error("unknown term constructor");
}

FreePenonStructure::FreePenonStructure(pasting::PresPtr pres) : pres_(std::move(pres)) {
  if (!pres_) throw Error("null presentation");
  glob::ensure_valid(*pres_);
  pasting::classify(*pres_);  // reject unsupported reflexive shapes up front
}

Term FreePenonStructure::normal_form(const Term& t) const {
  if (!t) throw Error("null term");
  switch (t->kind) {
    case PenonTerm::Kind::Gen:
      if (pres_->reflexive())
        if (auto origin = pres_->refl_origin(t->cell.dim, t->cell.id))
          return ident(normal_form(gen(CellRef{t->cell.dim - 1, *origin})));
      return t;
    case PenonTerm::Kind::Ident:
      return ident(normal_form(t->a));
    case PenonTerm::Kind::Comp:
      return comp(t->level, normal_form(t->a), normal_form(t->b));
    case PenonTerm::Kind::Contr: {
      Term a = normal_form(t->a), b = normal_form(t->b);
      if (structurally_equal(a, b)) return ident(a);  // [a,a] = i(a)
      return contr(std::move(a), std::move(b));
    }
  }
  return t;
}

bool FreePenonStructure::equal_low(const Term& t1, const Term& t2) const {
  return structurally_equal(normal_form(t1), normal_form(t2));
}

namespace {

// Iterated boundary term at dimension k (structural, per the source/target
// formulas for composites).
Term boundary_at(const FreePenonStructure& s, Term t, int from_dim, int k, bool source_side) {
  Term cur = std::move(t);
  for (int d = from_dim; d > k; --d) {
    TypeInfo info = s.typecheck(cur);
    cur = source_side ? info.src : info.tgt;
  }
  return cur;
}

}  // namespace

TypeInfo FreePenonStructure::typecheck(const Term& t) const {
  if (!t) throw Error("null term");
  switch (t->kind) {
    case PenonTerm::Kind::Gen: {
      const CellRef& c = t->cell;
      if (!pres_->has_cell(c))
        throw TypecheckError(TypecheckError::Kind::UnknownCell,
                             "no cell '" + c.id + "' at dimension " + std::to_string(c.dim));
      TypeInfo info;
      info.dim = c.dim;
      if (c.dim >= 1) {
        info.src = gen(CellRef{c.dim - 1, *pres_->src(c.dim, c.id)});
        info.tgt = gen(CellRef{c.dim - 1, *pres_->tgt(c.dim, c.id)});
      }
      return info;
    }
    case PenonTerm::Kind::Ident: {
      TypeInfo sub = typecheck(t->a);
      if (sub.dim + 1 > pres_->max_dim())
        throw TypecheckError(TypecheckError::Kind::DimMismatch,
                             "identity on a " + std::to_string(sub.dim) +
                                 "-cell exceeds max_dim " + std::to_string(pres_->max_dim()));
      return TypeInfo{sub.dim + 1, t->a, t->a};
    }
    case PenonTerm::Kind::Comp: {
      TypeInfo i1 = typecheck(t->a);
      TypeInfo i2 = typecheck(t->b);
      const int k = t->level;
      if (i1.dim != i2.dim)
        throw TypecheckError(TypecheckError::Kind::DimMismatch,
                             "composition of cells of dimensions " + std::to_string(i1.dim) +
                                 " and " + std::to_string(i2.dim));
      const int m = i1.dim;
      if (k < 0 || k >= m)
        throw TypecheckError(TypecheckError::Kind::DimMismatch,
                             "composition level " + std::to_string(k) +
                                 " out of range for dimension " + std::to_string(m));
      Term t2_tgt = boundary_at(*this, t->b, m, k, false);
      Term t1_src = boundary_at(*this, t->a, m, k, true);
      if (!equal_low(t2_tgt, t1_src))
        throw TypecheckError(TypecheckError::Kind::BoundaryMismatch,
                             "boundary mismatch at level " + std::to_string(k) + ": " +
                                 term_display(t2_tgt) + " vs " + term_display(t1_src),
                             term_key(t2_tgt), term_key(t1_src));
      TypeInfo info;
      info.dim = m;
      if (m >= 1) {
        if (k == m - 1) {
          info.src = i2.src;
          info.tgt = i1.tgt;
        } else {
          info.src = comp(k, i1.src, i2.src);
          info.tgt = comp(k, i1.tgt, i2.tgt);
        }
      }
      return info;
    }
    case PenonTerm::Kind::Contr: {
      TypeInfo ia = typecheck(t->a);
      TypeInfo ib = typecheck(t->b);
      if (ia.dim != ib.dim)
        throw TypecheckError(TypecheckError::Kind::DimMismatch,
                             "contraction of cells of dimensions " + std::to_string(ia.dim) +
                                 " and " + std::to_string(ib.dim));
      if (ia.dim >= pres_->max_dim())
        throw TypecheckError(TypecheckError::Kind::TopDimContraction,
                             "contraction at dimension " + std::to_string(ia.dim) +
                                 " would exceed max_dim " + std::to_string(pres_->max_dim()));
      if (ia.dim >= 1 && (!equal_low(ia.src, ib.src) || !equal_low(ia.tgt, ib.tgt)))
        throw TypecheckError(TypecheckError::Kind::NotParallel,
                             "contraction of non-parallel cells " + term_display(t->a) + " and " +
                                 term_display(t->b));
      Diagram da = phi(t->a);
      Diagram db = phi(t->b);
      if (!pasting::equal(da, db))
        throw TypecheckError(TypecheckError::Kind::PhiMismatch,
                             "contraction precondition fails: phi(" + term_display(t->a) +
                                 ") != phi(" + term_display(t->b) + ")",
                             pasting::canonical(da), pasting::canonical(db));
      return TypeInfo{ia.dim + 1, t->a, t->b};
    }
  }
  throw Error("unreachable");
}

static Diagram phi_unchecked(const FreePenonStructure& s, const Term& t) {
  switch (t->kind) {
    case PenonTerm::Kind::Gen:
      return pasting::embed_generator(s.presentation_ptr(), t->cell);
    case PenonTerm::Kind::Ident:
      return pasting::identity(phi_unchecked(s, t->a));
    case PenonTerm::Kind::Comp:
      return pasting::compose(phi_unchecked(s, t->a), phi_unchecked(s, t->b), t->level);
    case PenonTerm::Kind::Contr:
      return pasting::identity(phi_unchecked(s, t->a));
  }
  throw Error("unreachable");
}

Diagram FreePenonStructure::phi(const Term& t) const { return phi_unchecked(*this, t); }

bool FreePenonStructure::equal_top(const Term& t1, const Term& t2) const {
  TypeInfo i1 = typecheck(t1);
  TypeInfo i2 = typecheck(t2);
  if (i1.dim != pres_->max_dim() || i2.dim != pres_->max_dim())
    throw DimensionError("equal_top applies only at dimension " + std::to_string(pres_->max_dim()));
  if (i1.dim >= 1 && (!equal_low(i1.src, i2.src) || !equal_low(i1.tgt, i2.tgt))) return false;
  return pasting::equal(phi(t1), phi(t2));
}

Term FreePenonStructure::contraction(const Term& a, const Term& b) const {
  Term c = contr(a, b);
  typecheck(c);
  return c;
}

namespace {

void require_doubly_degenerate_pair(const FreePenonStructure& s, const CellRef& alpha,
                                    const CellRef& beta) {
  if (!glob::is_doubly_degenerate(s.presentation()))
    throw Error("the presentation is not doubly degenerate (one 0-cell, one 1-cell)");
  for (const CellRef* c : {&alpha, &beta}) {
    if (c->dim != 2) throw DimensionError("expected a 2-cell, got dimension " + std::to_string(c->dim));
    if (!s.presentation().has_cell(*c))
      throw UnknownCellError("no cell '" + c->id + "' at dimension 2");
  }
}

}  // namespace

Clockface clockface(const FreePenonStructure& s, const CellRef& alpha, const CellRef& beta) {
  require_doubly_degenerate_pair(s, alpha, beta);
  const std::string a = alpha.id, b = beta.id;
  Term A = gen(alpha), B = gen(beta);
  Term one = ident(gen(CellRef{1, s.presentation().cells(1).front()}));
  auto C0 = [](Term x, Term y) { return comp(0, std::move(x), std::move(y)); };
  auto C1 = [](Term x, Term y) { return comp(1, std::move(x), std::move(y)); };

  Clockface cf;
  cf.labels = {"12", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11"};
  cf.terms = {
      C0(B, A),                       // beta * alpha
      C0(C1(B, one), C1(one, A)),     // (beta o 1) * (1 o alpha)
      C1(C0(B, one), C0(one, A)),     // (beta * 1) o (1 * alpha)
      C1(B, A),                       // beta o alpha
      C1(C0(one, B), C0(A, one)),     // (1 * beta) o (alpha * 1)
      C0(C1(one, A), C1(B, one)),     // (1 o alpha) * (beta o 1)
      C0(A, B),                       // alpha * beta
      C0(C1(A, one), C1(one, B)),     // (alpha o 1) * (1 o beta)
      C1(C0(A, one), C0(one, B)),     // (alpha * 1) o (1 * beta)
      C1(A, B),                       // alpha o beta
      C1(C0(one, A), C0(B, one)),     // (1 * alpha) o (beta * 1)
      C0(C1(one, B), C1(A, one)),     // (1 o beta) * (alpha o 1)
  };
  cf.expressions = {
      b + "*" + a,
      "(" + b + " o 1)*(1 o " + a + ")",
      "(" + b + "*1) o (1*" + a + ")",
      b + " o " + a,
      "(1*" + b + ") o (" + a + "*1)",
      "(1 o " + a + ")*(" + b + " o 1)",
      a + "*" + b,
      "(" + a + " o 1)*(1 o " + b + ")",
      "(" + a + "*1) o (1*" + b + ")",
      a + " o " + b,
      "(1*" + a + ") o (" + b + "*1)",
      "(1 o " + b + ")*(" + a + " o 1)",
  };

  std::vector<std::string> phis;
  phis.reserve(cf.terms.size());
  for (const auto& t : cf.terms) {
    s.typecheck(t);
    phis.push_back(pasting::canonical(s.phi(t)));
  }
  std::unordered_map<std::string, int> class_of;
  for (size_t i = 0; i < phis.size(); ++i) {
    auto it = class_of.find(phis[i]);
    if (it == class_of.end()) {
      class_of.emplace(phis[i], static_cast<int>(cf.classes.size()));
      cf.classes.push_back({static_cast<int>(i)});
      cf.class_phi.push_back(phis[i]);
    } else {
      cf.classes[static_cast<size_t>(it->second)].push_back(static_cast<int>(i));
    }
  }
  return cf;
}

Term braiding_cell(const FreePenonStructure& s, const CellRef& alpha, const CellRef& beta) {
  require_doubly_degenerate_pair(s, alpha, beta);
  Term A = gen(alpha), B = gen(beta);
  return s.contraction(comp(1, A, B), comp(1, B, A));
}

Report symmetry_check(const FreePenonStructure& s, const CellRef& alpha, const CellRef& beta) {
  require_doubly_degenerate_pair(s, alpha, beta);
  Report r;
  r.scenario = "symmetry-check";
  r.config = {{"alpha", alpha.id}, {"beta", beta.id}};

  Term A = gen(alpha), B = gen(beta);
  Term x = comp(1, A, B);  // alpha o beta
  Term y = comp(1, B, A);  // beta o alpha
  try {
    Term gamma_xy = s.contraction(x, y);  // [x,y] : x -> y
    Term gamma_yx = s.contraction(y, x);
    Term round_x = comp(2, gamma_yx, gamma_xy);  // x -> x
    Term round_y = comp(2, gamma_xy, gamma_yx);  // y -> y
    bool ok_x = s.equal_top(round_x, ident(x));
    bool ok_y = s.equal_top(round_y, ident(y));
    r.details = {
        {"x", term_display(x)},
        {"y", term_display(y)},
        {"phi_x", pasting::to_json(s.phi(x))},
        {"phi_y", pasting::to_json(s.phi(y))},
        {"phi_round_x", pasting::to_json(s.phi(round_x))},
        {"round_x_equals_ident_x", ok_x},
        {"round_y_equals_ident_y", ok_y},
    };
    if (ok_x && ok_y) {
      r.verdict = Report::Verdict::Pass;
    } else {
      r.verdict = Report::Verdict::Fail;
      r.witnesses.push_back({{"round_x", term_display(round_x)},
                             {"phi_round_x", pasting::to_json(s.phi(round_x))},
                             {"phi_ident_x", pasting::to_json(s.phi(ident(x)))}});
    }
  } catch (const TypecheckError& e) {
    r.verdict = Report::Verdict::Fail;
    r.witnesses.push_back({{"error", e.what()},
                           {"phi_lhs", e.lhs_payload},
                           {"phi_rhs", e.rhs_payload}});
  }
  return r;
}

Report sketch_braiding(const FreePenonStructure& s, const CellRef& alpha, const CellRef& beta) {
  if (s.mode() != Mode::NonReflexive)
    throw ModeError("the braiding sketch is the non-reflexive construction");
  require_doubly_degenerate_pair(s, alpha, beta);

  Report r;
  r.scenario = "braiding-sketch";
  r.config = {{"alpha", alpha.id}, {"beta", beta.id}};
  nlohmann::json items = nlohmann::json::array();
  bool all_ok = true;

  const auto& p = s.presentation();
  Term E = gen(CellRef{1, p.cells(1).front()});
  Term I = ident(gen(CellRef{0, p.cells(0).front()}));  // the unit 1-cell of N A
  Term A = gen(alpha), B = gen(beta);
  Term oneE = ident(E);
  Term oneI = ident(I);

  auto verified_contraction = [&](const std::string& name, int step, const Term& a,
                                  const Term& b) -> std::optional<Term> {
    try {
      Term c = s.contraction(a, b);
      items.push_back({{"name", name},
                       {"step", step},
                       {"kind", "contraction"},
                       {"status", "verified"},
                       {"cell", term_display(c)},
                       {"phi", pasting::to_json(s.phi(a))}});
      return c;
    } catch (const TypecheckError& e) {
      all_ok = false;
      items.push_back({{"name", name},
                       {"step", step},
                       {"kind", "contraction"},
                       {"status", "failed"},
                       {"error", e.what()}});
      r.witnesses.push_back(
          {{"cell", name}, {"error", e.what()}, {"phi_lhs", e.lhs_payload}, {"phi_rhs", e.rhs_payload}});
      return std::nullopt;
    }
  };
  auto verified_composite = [&](const std::string& name, int step, const Term& t,
                                const char* kind = "composite") -> bool {
    try {
      s.typecheck(t);
      items.push_back({{"name", name},
                       {"step", step},
                       {"kind", kind},
                       {"status", "verified"},
                       {"cell", term_display(t)}});
      return true;
    } catch (const TypecheckError& e) {
      all_ok = false;
      items.push_back(
          {{"name", name}, {"step", step}, {"kind", kind}, {"status", "failed"}, {"error", e.what()}});
      r.witnesses.push_back({{"cell", name}, {"error", e.what()}});
      return false;
    }
  };

  // Step 1: unit contraction 2-cells and their pseudo-inverses (realized as
  // the swapped contractions).
  auto lunit = verified_contraction("lunit_e = [I*e, e]", 1, comp(0, I, E), E);
  auto runit = verified_contraction("runit_e = [e*I, e]", 1, comp(0, E, I), E);
  verified_contraction("uu = [I*I, I]", 1, comp(0, I, I), I);
  auto lunit_inv = verified_contraction("lunit_e* = [e, I*e]", 1, E, comp(0, I, E));
  auto runit_inv = verified_contraction("runit_e* = [e, e*I]", 1, E, comp(0, E, I));
  verified_contraction("uu* = [I, I*I]", 1, I, comp(0, I, I));
  items.push_back({{"name", "theta unit equalities"},
                   {"step", 1},
                   {"kind", "algebra-forced"},
                   {"status", "asserted"},
                   {"fact", "theta(I) = theta(e) = e and theta(lunit_e) = theta(uu) = "
                            "theta(runit_e): forced in any doubly degenerate algebra because "
                            "A(1) is a singleton; not computed"}});

  if (!(lunit && runit && lunit_inv && runit_inv)) {
    r.verdict = Report::Verdict::Fail;
    r.details["items"] = items;
    return r;
  }

  // Step 2: the contraction 3-cells lambda_alpha and rho_beta.
  Term lam_core = comp(1, *lunit, comp(1, comp(0, oneI, A), *lunit_inv));
  Term rho_core = comp(1, *runit, comp(1, comp(0, B, oneI), *runit_inv));
  auto lambda_a = verified_contraction("lambda_alpha = [lunit o (1_I*alpha) o lunit*, alpha]", 2,
                                       lam_core, A);
  auto rho_b = verified_contraction("rho_beta = [runit o (beta*1_I) o runit*, beta]", 2, rho_core, B);
  if (!(lambda_a && rho_b)) {
    r.verdict = Report::Verdict::Fail;
    r.details["items"] = items;
    return r;
  }

  // Step 3: rho o_1 lambda, its six-factor source, and the middle collapse.
  Term rho1lam = comp(1, *rho_b, *lambda_a);
  bool ok3 = verified_composite("rho o_1 lambda", 3, rho1lam);
  if (ok3) {
    TypeInfo info = s.typecheck(rho1lam);
    items.push_back(
        {{"name", "source of rho o_1 lambda (six factors)"},
         {"step", 3},
         {"kind", "boundary"},
         {"status", "verified"},
         {"factors",
          {"runit_e", "(" + beta.id + " * 1_I)", "runit_e*", "lunit_e", "(1_I * " + alpha.id + ")",
           "lunit_e*"}},
         {"cell", term_display(info.src)}});
  }

  Term middle = comp(1, *runit_inv, *lunit);  // runit* o lunit : I*e => e*I
  auto W = verified_contraction("unit exchange W = [I*e, e*I]", 3, comp(0, I, E), comp(0, E, I));
  std::optional<Term> K;
  if (W) K = verified_contraction("middle collapse K = [W, runit* o lunit]", 3, *W, middle);

  if (K && ok3) {
    Term midL = comp(1, *runit, comp(0, B, oneI));          // runit o (beta*1_I)
    Term midR = comp(1, comp(0, oneI, A), *lunit_inv);      // (1_I*alpha) o lunit*
    Term M = comp(1, ident(midL), comp(1, *K, ident(midR)));
    bool okM = verified_composite("M = 1 o_1 K o_1 1 (whiskered middle collapse)", 3, M);
    if (okM) {
      Term tgtM = s.typecheck(M).tgt;
      Term srcRL = s.typecheck(rho1lam).src;
      bool assoc_ok = pasting::equal(s.phi(tgtM), s.phi(srcRL));
      items.push_back({{"name", "xi = (rho o_1 lambda) o_2 M"},
                       {"step", 3},
                       {"kind", "mod-assoc"},
                       {"status", assoc_ok ? "verified" : "failed"},
                       {"note", "boundary match checked up to associativity at the phi level"},
                       {"source", term_display(s.typecheck(M).src)},
                       {"target", term_display(s.typecheck(rho1lam).tgt)}});
      if (!assoc_ok) {
        all_ok = false;
        r.witnesses.push_back({{"cell", "xi"},
                               {"phi_lhs", pasting::canonical(s.phi(tgtM))},
                               {"phi_rhs", pasting::canonical(s.phi(srcRL))}});
      }
    }
  }

  // Step 4: the clockface-gap cell chi (10 o'clock to 2 o'clock) and the
  // unit identity 3-cells it is padded with.
  Term ten = comp(1, comp(0, oneE, A), comp(0, B, oneE));   // (1*alpha) o (beta*1)
  Term two = comp(1, comp(0, B, oneE), comp(0, oneE, A));   // (beta*1) o (1*alpha)
  verified_contraction("chi = [(1*alpha) o (beta*1), (beta*1) o (1*alpha)]", 4, ten, two);
  verified_composite("identity 3-cell on runit_e", 4, ident(*runit));
  verified_composite("identity 3-cell on lunit_e*", 4, ident(*lunit_inv));
  items.push_back({{"name", "bridge into 3 o'clock"},
                   {"step", 4},
                   {"kind", "algebra-forced"},
                   {"status", "asserted"},
                   {"fact", "rewriting chi to compose with xi uses theta(e) = theta(I); recorded, "
                            "not computed"}});

  // Step 5 is stated without its cells; reported as asserted-by-symmetry.
  items.push_back({{"name", "nine o'clock to ten o'clock"},
                   {"step", 5},
                   {"kind", "asserted-by-symmetry"},
                   {"status", "asserted"},
                   {"fact", "mirror of steps 1-4; not verified"}});

  r.details["items"] = items;
  r.verdict = all_ok ? Report::Verdict::Pass : Report::Verdict::Fail;
  return r;
}

}  // namespace penonlab::penon

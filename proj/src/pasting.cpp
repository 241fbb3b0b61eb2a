#include "penonlab/pasting.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace penonlab::pasting {

using glob::CellRef;
using glob::Mode;
using glob::Presentation;

int height(const Node& n) {
  int h = 0;
  for (const auto& k : n.kids) h = std::max(h, 1 + height(k));
  return h;
}

PastingClass classify(const Presentation& p) {
  if (!p.reflexive()) return PastingClass::NonReflexive;

  bool unit_coherent = true;
  for (int d = 1; d <= p.max_dim() && unit_coherent; ++d)
    for (const auto& id : p.cells(d)) {
      if (p.is_refl_image(d, id)) continue;
      auto s = p.src(d, id), t = p.tgt(d, id);
      if ((s && p.is_refl_image(d - 1, *s)) || (t && p.is_refl_image(d - 1, *t))) {
        unit_coherent = false;
        break;
      }
    }
  if (unit_coherent) return PastingClass::UnitCoherent;

  bool degenerate = glob::is_doubly_degenerate(p);
  for (int d = 3; d <= p.max_dim() && degenerate; ++d)
    for (const auto& id : p.cells(d))
      if (!p.is_refl_image(d, id)) {
        degenerate = false;
        break;
      }
  if (degenerate) return PastingClass::Degenerate;

  throw UnsupportedPresentationError(
      "reflexive presentation outside the supported pasting classes "
      "(unit-coherent or doubly degenerate); deciding equality in T_R here "
      "is a computad word problem and is not implemented");
}

namespace {

void check_node(const Presentation& p, const Node& n, int depth, const std::string* lo,
                const std::string* hi) {
  if (n.slots.empty()) throw Error("pasting node with no slots");
  if (n.slots.size() != n.kids.size() + 1)
    throw Error("pasting node with " + std::to_string(n.slots.size()) + " slots and " +
                std::to_string(n.kids.size()) + " children");
  for (const auto& s : n.slots) {
    if (!p.has_cell(depth, s))
      throw UnknownCellError("no cell '" + s + "' at dimension " + std::to_string(depth));
    if (depth >= 1) {
      if (lo && p.src(depth, s) != *lo)
        throw Error("slot '" + s + "' does not start at '" + *lo + "'");
      if (hi && p.tgt(depth, s) != *hi)
        throw Error("slot '" + s + "' does not end at '" + *hi + "'");
    }
  }
  for (size_t i = 0; i < n.kids.size(); ++i)
    check_node(p, n.kids[i], depth + 1, &n.slots[i], &n.slots[i + 1]);
}

// Removes every leaf position labeled by a refl-image cell, bottom-up; the
// two slots around a removed leaf are equal (both are the refl origin) and
// merge.
Node collapse_refl_leaves(const Presentation& p, Node n, int depth) {
  for (auto& k : n.kids) k = collapse_refl_leaves(p, std::move(k), depth + 1);
  Node out;
  out.slots.push_back(n.slots.front());
  for (size_t i = 0; i < n.kids.size(); ++i) {
    Node& kid = n.kids[i];
    if (kid.kids.empty() && p.is_refl_image(depth + 1, kid.slots.front())) {
      assert(n.slots[i] == n.slots[i + 1]);
      continue;  // drop the unit, merge the surrounding slots
    }
    out.kids.push_back(std::move(kid));
    out.slots.push_back(n.slots[i + 1]);
  }
  return out;
}

void gather_real_labels(const Presentation& p, const Node& n, int depth,
                        std::vector<std::string>& out) {
  for (const auto& s : n.slots)
    if (!p.is_refl_image(depth, s) && depth >= 1) {
      if (depth != 2)
        throw Error("degenerate normalization: unexpected real label '" + s + "' at dimension " +
                    std::to_string(depth));
      out.push_back(s);
    }
  for (const auto& k : n.kids) gather_real_labels(p, k, depth + 1, out);
}

Node normalize_node(const Presentation& p, PastingClass cls, Node n) {
  switch (cls) {
    case PastingClass::NonReflexive:
      return n;
    case PastingClass::UnitCoherent:
      return collapse_refl_leaves(p, std::move(n), 0);
    case PastingClass::Degenerate: {
      n = collapse_refl_leaves(p, std::move(n), 0);
      std::vector<std::string> labels;
      gather_real_labels(p, n, 0, labels);
      const std::string& pt = p.cells(0).front();
      if (labels.empty()) return Node{{pt}, {}};
      std::sort(labels.begin(), labels.end());
      const std::string& e = p.cells(1).front();
      Node column;
      column.slots.assign(labels.size() + 1, e);
      for (const auto& g : labels) column.kids.push_back(Node{{g}, {}});
      return Node{{pt, pt}, {std::move(column)}};
    }
  }
  return n;
}

Node truncate_node(const Node& n, int depth, int cut, bool take_first) {
  if (depth == cut) return Node{{take_first ? n.slots.front() : n.slots.back()}, {}};
  Node out;
  out.slots = n.slots;
  out.kids.reserve(n.kids.size());
  for (const auto& k : n.kids) out.kids.push_back(truncate_node(k, depth + 1, cut, take_first));
  return out;
}

Node glue(const Node& a, const Node& b, int j) {
  if (j == 0) {
    if (a.slots.back() != b.slots.front())
      throw Error("internal: seam labels disagree in glue");
    Node out;
    out.slots = a.slots;
    out.slots.insert(out.slots.end(), b.slots.begin() + 1, b.slots.end());
    out.kids = a.kids;
    out.kids.insert(out.kids.end(), b.kids.begin(), b.kids.end());
    return out;
  }
  if (a.slots != b.slots || a.kids.size() != b.kids.size())
    throw Error("internal: trees disagree below the gluing level");
  Node out;
  out.slots = a.slots;
  out.kids.reserve(a.kids.size());
  for (size_t i = 0; i < a.kids.size(); ++i) out.kids.push_back(glue(a.kids[i], b.kids[i], j - 1));
  return out;
}

void require_compatible(const Diagram& d1, const Diagram& d2) {
  if (d1.presentation() != d2.presentation())
    throw CompatibilityError("diagrams over different presentations or modes");
}

}  // namespace

Diagram Diagram::ensure_normalized(const Diagram& d) {
  if (d.normalized()) return d;
  return make_normalized(d.presentation_ptr(), d.dim(), d.root());
}

Diagram Diagram::raw(PresPtr pres, int dim, Node root) {
  if (!pres) throw Error("null presentation");
  if (dim < 0 || dim > pres->max_dim()) throw DimensionError("diagram dimension out of range");
  check_node(*pres, root, 0, nullptr, nullptr);
  if (height(root) > dim) throw DimensionError("tree height exceeds the diagram dimension");
  return Diagram(std::move(pres), dim, std::move(root), false);
}

Diagram Diagram::make_normalized(PresPtr pres, int dim, Node root) {
  PastingClass cls = classify(*pres);
  root = normalize_node(*pres, cls, std::move(root));
  check_node(*pres, root, 0, nullptr, nullptr);
  if (height(root) > dim) throw DimensionError("tree height exceeds the diagram dimension");
  return Diagram(std::move(pres), dim, std::move(root), true);
}

Diagram embed_generator(const PresPtr& pres, const CellRef& g) {
  if (!pres) throw Error("null presentation");
  if (!pres->has_cell(g))
    throw UnknownCellError("no cell '" + g.id + "' at dimension " + std::to_string(g.dim));
  // Globe chain: at depth j < g.dim the two slots are the iterated source
  // and target of g at dimension j.
  std::vector<std::string> lo(static_cast<size_t>(g.dim) + 1), hi(lo.size());
  lo[static_cast<size_t>(g.dim)] = hi[static_cast<size_t>(g.dim)] = g.id;
  for (int j = g.dim - 1; j >= 0; --j) {
    auto s = pres->src(j + 1, lo[static_cast<size_t>(j) + 1]);
    auto t = pres->tgt(j + 1, hi[static_cast<size_t>(j) + 1]);
    if (!s || !t) throw InvalidPresentationError("missing boundary of '" + g.id + "'");
    lo[static_cast<size_t>(j)] = *s;
    hi[static_cast<size_t>(j)] = *t;
  }
  Node node{{g.id}, {}};
  for (int j = g.dim - 1; j >= 0; --j)
    node = Node{{lo[static_cast<size_t>(j)], hi[static_cast<size_t>(j)]}, {std::move(node)}};
  return Diagram::make_normalized(pres, g.dim, std::move(node));
}

Diagram identity(const Diagram& d) {
  if (d.dim() + 1 > d.presentation().max_dim())
    throw DimensionError("identity would exceed max_dim " + std::to_string(d.presentation().max_dim()));
  Diagram n = Diagram::ensure_normalized(d);
  return Diagram(n.presentation_ptr(), n.dim() + 1, n.root(), true);
}

Diagram Diagram::boundary(const Diagram& raw, bool take_first) {
  if (raw.dim() == 0) throw DimensionError("0-cells have no boundary");
  Diagram d = ensure_normalized(raw);
  if (height(d.root()) < d.dim())
    return Diagram(d.presentation_ptr(), d.dim() - 1, d.root(), true);
  Node cut = truncate_node(d.root(), 0, d.dim() - 1, take_first);
  return make_normalized(d.presentation_ptr(), d.dim() - 1, std::move(cut));
}

Diagram source(const Diagram& d) { return Diagram::boundary(d, true); }
Diagram target(const Diagram& d) { return Diagram::boundary(d, false); }

Diagram compose(const Diagram& raw1, const Diagram& raw2, int k) {
  Diagram d1 = Diagram::ensure_normalized(raw1);
  Diagram d2 = Diagram::ensure_normalized(raw2);
  require_compatible(d1, d2);
  if (d1.dim() != d2.dim())
    throw DimensionError("composition of cells of dimensions " + std::to_string(d1.dim()) +
                         " and " + std::to_string(d2.dim()));
  const int m = d1.dim();
  if (k < 0 || k >= m) throw DimensionError("composition level " + std::to_string(k) +
                                            " out of range for dimension " + std::to_string(m));
  Diagram t2 = d2;
  Diagram s1 = d1;
  for (int j = m; j > k; --j) {
    t2 = target(t2);
    s1 = source(s1);
  }
  if (!equal(t2, s1))
    throw BoundaryMismatchError("boundary mismatch at level " + std::to_string(k) +
                                    ": target of the first factor differs from source of the second",
                                canonical(t2), canonical(s1));
  Node glued;
  if (height(d2.root()) <= k)
    glued = d1.root();
  else if (height(d1.root()) <= k)
    glued = d2.root();
  else
    glued = glue(d2.root(), d1.root(), k);
  return Diagram::make_normalized(d1.presentation_ptr(), m, std::move(glued));
}

bool equal(const Diagram& raw1, const Diagram& raw2) {
  Diagram d1 = Diagram::ensure_normalized(raw1);
  Diagram d2 = Diagram::ensure_normalized(raw2);
  require_compatible(d1, d2);
  return d1.dim() == d2.dim() && d1.root() == d2.root();
}

Diagram reflexive_collapse(const Diagram& d) {
  if (!d.presentation().reflexive())
    throw ModeError("reflexive_collapse on a diagram over a non-reflexive presentation");
  return Diagram::make_normalized(d.presentation_ptr(), d.dim(), d.root());
}

static nlohmann::json node_to_json(const Node& n) {
  nlohmann::json j;
  j["s"] = n.slots;
  nlohmann::json kids = nlohmann::json::array();
  for (const auto& k : n.kids) kids.push_back(node_to_json(k));
  j["k"] = kids;
  return j;
}

nlohmann::json to_json(const Diagram& d) {
  nlohmann::json j;
  j["dim"] = d.dim();
  j["mode"] = glob::to_string(d.presentation().mode());
  j["root"] = node_to_json(d.root());
  return j;
}

std::string canonical(const Diagram& d) { return to_json(d).dump(); }

}  // namespace penonlab::pasting

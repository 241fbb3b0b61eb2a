#include "penonlab/oracle.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <memory>
#include <random>
#include <unordered_map>

namespace penonlab::oracle {

namespace {

using pasting::PastingClass;

constexpr int32_t kNone = -1;

struct ArrayHash {
  std::size_t operator()(const std::array<uint32_t, 3>& a) const {
    std::uint64_t h = 1469598103934665603ull;
    for (uint32_t v : a) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Interned pasting terms (Gen / Ident / Comp) over one presentation, with
// structural typing: boundaries are term ids and composition requires exact
// boundary-id agreement.
struct Pool {
  enum : uint8_t { kGen = 0, kIdent = 1, kComp = 2 };

  struct Rec {
    uint8_t tag = kGen;
    int8_t level = -1;
    int8_t dim = 0;
    int16_t cell = -1;
    int32_t a = kNone, b = kNone;
    int32_t src = kNone, tgt = kNone;
    int32_t nodes = 0;
  };

  pasting::PresPtr pres;
  PastingClass cls = PastingClass::NonReflexive;
  bool eh_rules = false;
  int universe_cap = 7;
  std::size_t max_terms = 8'000'000;

  std::vector<Rec> recs;
  std::unordered_map<std::array<uint32_t, 3>, int32_t, ArrayHash> intern;
  std::vector<glob::CellRef> cells;
  std::vector<int16_t> cell_origin;  // refl origin cell index, or -1
  std::map<std::pair<int, std::string>, int16_t> cell_index;
  std::vector<std::vector<int32_t>> by_nodes;

  explicit Pool(pasting::PresPtr p, int cap, bool eh)
      : pres(std::move(p)), cls(pasting::classify(*pres)), eh_rules(eh), universe_cap(cap) {
    by_nodes.resize(static_cast<std::size_t>(cap) + 1);
  }

  int16_t cell_id(const glob::CellRef& c) {
    auto it = cell_index.find({c.dim, c.id});
    if (it != cell_index.end()) return it->second;
    auto idx = static_cast<int16_t>(cells.size());
    cells.push_back(c);
    cell_origin.push_back(-1);
    cell_index.emplace(std::make_pair(c.dim, c.id), idx);
    if (auto origin = pres->refl_origin(c.dim, c.id))
      cell_origin[static_cast<std::size_t>(idx)] = cell_id(glob::CellRef{c.dim - 1, *origin});
    return idx;
  }

  std::array<uint32_t, 3> key(uint8_t tag, int8_t level, int16_t cell, int32_t a, int32_t b) const {
    uint32_t op = static_cast<uint32_t>(tag) | (static_cast<uint32_t>(level + 1) << 2) |
                  (static_cast<uint32_t>(cell + 1) << 8);
    return {op, static_cast<uint32_t>(a + 1), static_cast<uint32_t>(b + 1)};
  }

  int32_t lookup(uint8_t tag, int8_t level, int16_t cell, int32_t a, int32_t b) const {
    auto it = intern.find(key(tag, level, cell, a, b));
    return it == intern.end() ? kNone : it->second;
  }

  int32_t append(Rec r, uint8_t tag, int8_t level, int16_t cell, int32_t a, int32_t b) {
    if (recs.size() >= max_terms)
      throw Error("pasting oracle universe exceeded " + std::to_string(max_terms) + " terms");
    auto id = static_cast<int32_t>(recs.size());
    recs.push_back(r);
    intern.emplace(key(tag, level, cell, a, b), id);
    if (r.nodes <= universe_cap) by_nodes[static_cast<std::size_t>(r.nodes)].push_back(id);
    return id;
  }

  // Refl-image generators intern as identity spellings: i(c) and Ident(Gen c)
  // denote the same cell of the free structure, so the pool holds one vertex
  // for both.
  int32_t mk_gen(const glob::CellRef& c) {
    if (pres->reflexive())
      if (auto origin = pres->refl_origin(c.dim, c.id))
        return mk_ident(mk_gen(glob::CellRef{c.dim - 1, *origin}));
    int16_t idx = cell_id(c);
    if (int32_t id = lookup(kGen, -1, idx, kNone, kNone); id != kNone) return id;
    Rec r;
    r.tag = kGen;
    r.cell = idx;
    r.dim = static_cast<int8_t>(c.dim);
    int32_t id = append(r, kGen, -1, idx, kNone, kNone);
    if (c.dim >= 1) {
      int32_t s = mk_gen(glob::CellRef{c.dim - 1, *pres->src(c.dim, c.id)});
      int32_t t = mk_gen(glob::CellRef{c.dim - 1, *pres->tgt(c.dim, c.id)});
      recs[static_cast<std::size_t>(id)].src = s;
      recs[static_cast<std::size_t>(id)].tgt = t;
    }
    return id;
  }

  int32_t mk_ident(int32_t a) {
    if (a == kNone) return kNone;
    const Rec& ra = recs[static_cast<std::size_t>(a)];
    if (ra.dim + 1 > pres->max_dim()) return kNone;
    if (ra.nodes + 1 > universe_cap) return kNone;
    if (int32_t id = lookup(kIdent, -1, -1, a, kNone); id != kNone) return id;
    Rec r;
    r.tag = kIdent;
    r.dim = static_cast<int8_t>(ra.dim + 1);
    r.a = a;
    r.src = a;
    r.tgt = a;
    r.nodes = ra.nodes + 1;
    return append(r, kIdent, -1, -1, a, kNone);
  }

  int32_t bnd(int32_t t, int k, bool src_side) const {
    int32_t cur = t;
    for (int d = recs[static_cast<std::size_t>(t)].dim; d > k; --d)
      cur = src_side ? recs[static_cast<std::size_t>(cur)].src
                     : recs[static_cast<std::size_t>(cur)].tgt;
    return cur;
  }

  int32_t mk_comp(int k, int32_t a, int32_t b) {
    if (a == kNone || b == kNone) return kNone;
    const int m = recs[static_cast<std::size_t>(a)].dim;
    if (recs[static_cast<std::size_t>(b)].dim != m || k < 0 || k >= m) return kNone;
    int32_t nodes = 1 + recs[static_cast<std::size_t>(a)].nodes + recs[static_cast<std::size_t>(b)].nodes;
    if (nodes > universe_cap) return kNone;
    if (bnd(b, k, false) != bnd(a, k, true)) return kNone;
    if (int32_t id = lookup(kComp, static_cast<int8_t>(k), -1, a, b); id != kNone) return id;
    int32_t src, tgt;
    if (k == m - 1) {
      src = recs[static_cast<std::size_t>(b)].src;
      tgt = recs[static_cast<std::size_t>(a)].tgt;
    } else {
      src = mk_comp(k, recs[static_cast<std::size_t>(a)].src, recs[static_cast<std::size_t>(b)].src);
      tgt = mk_comp(k, recs[static_cast<std::size_t>(a)].tgt, recs[static_cast<std::size_t>(b)].tgt);
      if (src == kNone || tgt == kNone) return kNone;  // boundary exceeded the cap
    }
    Rec r;
    r.tag = kComp;
    r.level = static_cast<int8_t>(k);
    r.dim = static_cast<int8_t>(m);
    r.a = a;
    r.b = b;
    r.src = src;
    r.tgt = tgt;
    r.nodes = nodes;
    return append(r, kComp, static_cast<int8_t>(k), -1, a, b);
  }

  bool is_refl_gen(int32_t t) const {
    const Rec& r = recs[static_cast<std::size_t>(t)];
    return r.tag == kGen && cell_origin[static_cast<std::size_t>(r.cell)] >= 0;
  }

  // u denotes the `levels`-fold identity tower over `base`?
  bool is_unit_tower(int32_t u, int levels, int32_t base) const {
    if (levels == 0) return u == base;
    const Rec& r = recs[static_cast<std::size_t>(u)];
    if (r.tag == kIdent) return is_unit_tower(r.a, levels - 1, base);
    if (r.tag == kGen) {
      int16_t origin = cell_origin[static_cast<std::size_t>(r.cell)];
      if (origin < 0) return false;
      int32_t og = lookup(kGen, -1, origin, kNone, kNone);
      return og != kNone && is_unit_tower(og, levels - 1, base);
    }
    return false;
  }

  // The term is an iterated identity over a 0-cell (boundary of a bubble).
  bool peels_to_point(int32_t u) const {
    const Rec& r = recs[static_cast<std::size_t>(u)];
    switch (r.tag) {
      case kGen: {
        if (r.dim == 0) return true;
        int16_t origin = cell_origin[static_cast<std::size_t>(r.cell)];
        if (origin < 0) return false;
        int32_t og = lookup(kGen, -1, origin, kNone, kNone);
        return og != kNone && peels_to_point(og);
      }
      case kIdent:
        return peels_to_point(r.a);
      case kComp:
        return peels_to_point(r.a) && peels_to_point(r.b);
    }
    return false;
  }

  void root_rewrites(int32_t id, std::vector<int32_t>& out) {
    const Rec r = recs[static_cast<std::size_t>(id)];  // copy: recs may grow
    auto emit = [&](int32_t t) {
      if (t != kNone && t != id) out.push_back(t);
    };
    if (r.tag == kGen) return;
    if (r.tag == kIdent) {
      const Rec ra = recs[static_cast<std::size_t>(r.a)];
      // functoriality of identities
      if (ra.tag == kComp) {
        int32_t l = mk_ident(ra.a), rr = mk_ident(ra.b);
        emit(mk_comp(ra.level, l, rr));
      }
      return;
    }
    // Comp
    const int k = r.level;
    const Rec ra = recs[static_cast<std::size_t>(r.a)];
    const Rec rb = recs[static_cast<std::size_t>(r.b)];
    // associativity
    if (ra.tag == kComp && ra.level == k) emit(mk_comp(k, ra.a, mk_comp(k, ra.b, r.b)));
    if (rb.tag == kComp && rb.level == k) emit(mk_comp(k, mk_comp(k, r.a, rb.a), rb.b));
    // unit laws (including refl-image spellings of the towers)
    if (is_unit_tower(r.b, r.dim - k, bnd(r.a, k, true))) emit(r.a);
    if (is_unit_tower(r.a, r.dim - k, bnd(r.b, k, false))) emit(r.b);
    // interchange
    if (ra.tag == kComp && rb.tag == kComp && ra.level == rb.level && ra.level != k) {
      int32_t c1 = mk_comp(k, ra.a, rb.a);
      int32_t c2 = mk_comp(k, ra.b, rb.b);
      if (c1 != kNone && c2 != kNone) emit(mk_comp(ra.level, c1, c2));
    }
    // functoriality, collapsing direction
    if (ra.tag == kIdent && rb.tag == kIdent) emit(mk_ident(mk_comp(k, ra.a, rb.a)));
    // Eckmann-Hilton for bubble operands (derived; degenerate class only)
    if (eh_rules && cls == PastingClass::Degenerate && r.dim >= 2) {
      int32_t sa = ra.src, ta = ra.tgt, sb = rb.src, tb = rb.tgt;
      if (sa == ta && sa == sb && sa == tb && peels_to_point(sa)) {
        emit(mk_comp(k, r.b, r.a));
        for (int k2 = 0; k2 < r.dim; ++k2)
          if (k2 != k) emit(mk_comp(k2, r.a, r.b));
      }
    }
  }

  void enumerate() {
    for (int d = 0; d <= pres->max_dim(); ++d)
      for (const auto& id : pres->cells(d)) mk_gen(glob::CellRef{d, id});
    for (int c = 1; c <= universe_cap; ++c) {
      for (std::size_t i = 0; i < by_nodes[static_cast<std::size_t>(c) - 1].size(); ++i)
        mk_ident(by_nodes[static_cast<std::size_t>(c) - 1][i]);
      for (int an = 0; an <= c - 1; ++an) {
        int bn = c - 1 - an;
        // bucket the "after" factors by (dim, level, source boundary)
        std::unordered_map<std::uint64_t, std::vector<int32_t>> bucket;
        for (int32_t t1 : by_nodes[static_cast<std::size_t>(an)]) {
          int m = recs[static_cast<std::size_t>(t1)].dim;
          for (int k = 0; k < m; ++k) {
            std::uint64_t kk = (static_cast<std::uint64_t>(m) << 60) |
                               (static_cast<std::uint64_t>(k) << 56) |
                               static_cast<std::uint64_t>(static_cast<uint32_t>(bnd(t1, k, true)));
            bucket[kk].push_back(t1);
          }
        }
        for (std::size_t i = 0; i < by_nodes[static_cast<std::size_t>(bn)].size(); ++i) {
          int32_t t2 = by_nodes[static_cast<std::size_t>(bn)][i];
          int m = recs[static_cast<std::size_t>(t2)].dim;
          for (int k = 0; k < m; ++k) {
            std::uint64_t kk = (static_cast<std::uint64_t>(m) << 60) |
                               (static_cast<std::uint64_t>(k) << 56) |
                               static_cast<std::uint64_t>(static_cast<uint32_t>(bnd(t2, k, false)));
            auto it = bucket.find(kk);
            if (it == bucket.end()) continue;
            for (int32_t t1 : it->second) mk_comp(k, t1, t2);
          }
        }
      }
    }
  }
};

struct Dsu {
  std::vector<int32_t> parent;
  int32_t find(int32_t x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int32_t a, int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
  void grow(std::size_t n) {
    std::size_t old = parent.size();
    parent.resize(n);
    for (std::size_t i = old; i < n; ++i) parent[i] = static_cast<int32_t>(i);
  }
};

// Root rewrites everywhere plus congruence rounds; edges between assertion
// terms are collected for the soundness check.
void close_pool(Pool& pool, Dsu& dsu, int assert_cap,
                std::vector<std::pair<int32_t, int32_t>>* assert_edges, std::size_t* edge_count) {
  dsu.grow(pool.recs.size());
  std::vector<int32_t> out;
  for (std::size_t i = 0; i < pool.recs.size(); ++i) {
    out.clear();
    pool.root_rewrites(static_cast<int32_t>(i), out);
    dsu.grow(pool.recs.size());
    for (int32_t t : out) {
      if (edge_count) ++*edge_count;
      if (assert_edges && pool.recs[i].nodes <= assert_cap &&
          pool.recs[static_cast<std::size_t>(t)].nodes <= assert_cap)
        assert_edges->emplace_back(static_cast<int32_t>(i), t);
      dsu.unite(static_cast<int32_t>(i), t);
    }
  }
  // congruence: equal operands make equal composites/identities
  std::unordered_map<std::array<uint32_t, 3>, int32_t, ArrayHash> sig;
  sig.reserve(pool.recs.size() * 2);
  bool changed = true;
  while (changed) {
    changed = false;
    sig.clear();
    for (std::size_t i = 0; i < pool.recs.size(); ++i) {
      const auto& r = pool.recs[i];
      int32_t ca = r.a == kNone ? kNone : dsu.find(r.a);
      int32_t cb = r.b == kNone ? kNone : dsu.find(r.b);
      auto k = pool.key(r.tag, r.level, r.cell, ca, cb);
      auto [it, inserted] = sig.emplace(k, static_cast<int32_t>(i));
      if (!inserted) changed |= dsu.unite(it->second, static_cast<int32_t>(i));
    }
  }
}

// Engine evaluation with a value cache on the low (most shared) ids.
struct Evaluator {
  const Pool& pool;
  std::vector<std::unique_ptr<pasting::Diagram>> cache;

  Evaluator(const Pool& p, std::size_t cache_limit) : pool(p) {
    cache.resize(std::min(cache_limit, p.recs.size()));
  }

  pasting::Diagram eval(int32_t id) {
    auto uid = static_cast<std::size_t>(id);
    if (uid < cache.size() && cache[uid]) return *cache[uid];
    const auto& r = pool.recs[uid];
    pasting::Diagram d = [&] {
      switch (r.tag) {
        case Pool::kGen:
          return pasting::embed_generator(pool.pres, pool.cells[static_cast<std::size_t>(r.cell)]);
        case Pool::kIdent:
          return pasting::identity(eval(r.a));
        default:
          return pasting::compose(eval(r.a), eval(r.b), r.level);
      }
    }();
    if (uid < cache.size()) cache[uid] = std::make_unique<pasting::Diagram>(d);
    return d;
  }
};

// 128-bit structural fingerprint of a normalized diagram.
using Fp = std::pair<std::uint64_t, std::uint64_t>;

struct FpHash {
  std::size_t operator()(const Fp& f) const { return f.first ^ (f.second * 0x9e3779b97f4a7c15ull); }
};

void fp_mix(std::uint64_t& h, std::uint64_t v, std::uint64_t mult) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h *= mult;
}

void fp_node(const pasting::Node& n, std::uint64_t& h1, std::uint64_t& h2) {
  fp_mix(h1, n.slots.size(), 1099511628211ull);
  fp_mix(h2, n.slots.size() * 31 + 7, 0x100000001b3ull);
  for (const auto& s : n.slots)
    for (char c : s) {
      fp_mix(h1, static_cast<unsigned char>(c), 1099511628211ull);
      fp_mix(h2, static_cast<unsigned char>(c) * 131 + 3, 0x100000001b3ull);
    }
  for (const auto& k : n.kids) {
    fp_mix(h1, 0x5bd1e995, 1099511628211ull);
    fp_mix(h2, 0xcc9e2d51, 0x100000001b3ull);
    fp_node(k, h1, h2);
  }
}

Fp fingerprint(const pasting::Diagram& d) {
  std::uint64_t h1 = 1469598103934665603ull, h2 = 0x2b992ddfa23249d6ull;
  fp_mix(h1, static_cast<std::uint64_t>(d.dim()), 1099511628211ull);
  fp_mix(h2, static_cast<std::uint64_t>(d.dim()) + 17, 0x100000001b3ull);
  fp_node(d.root(), h1, h2);
  return {h1, h2};
}

std::string display_term(const Pool& pool, int32_t id) {
  const auto& r = pool.recs[static_cast<std::size_t>(id)];
  switch (r.tag) {
    case Pool::kGen:
      return pool.cells[static_cast<std::size_t>(r.cell)].id;
    case Pool::kIdent:
      return "i(" + display_term(pool, r.a) + ")";
    default:
      return "(" + display_term(pool, r.a) + " o" + std::to_string(r.level) + " " +
             display_term(pool, r.b) + ")";
  }
}

int32_t translate(Pool& pool, const penon::Term& t) {
  if (!t) throw Error("null probe term");
  switch (t->kind) {
    case penon::PenonTerm::Kind::Gen:
      return pool.mk_gen(t->cell);
    case penon::PenonTerm::Kind::Ident:
      return pool.mk_ident(translate(pool, t->a));
    case penon::PenonTerm::Kind::Comp:
      return pool.mk_comp(t->level, translate(pool, t->a), translate(pool, t->b));
    case penon::PenonTerm::Kind::Contr:
      throw Error("contraction cells have no pasting-oracle translation");
  }
  return kNone;
}

}  // namespace

PastingCrosscheck pasting_crosscheck(const pasting::PresPtr& pres, int assert_cap,
                                     int universe_cap) {
  if (universe_cap < assert_cap) universe_cap = assert_cap;
  glob::ensure_valid(*pres);
  Pool pool(pres, universe_cap, /*eh=*/true);
  pool.enumerate();

  Dsu dsu;
  PastingCrosscheck result;
  std::vector<std::pair<int32_t, int32_t>> assert_edges;
  close_pool(pool, dsu, assert_cap, &assert_edges, &result.edges);

  result.universe_terms = pool.recs.size();

  // engine fingerprints for the assertion set
  std::vector<int32_t> asserts;
  for (std::size_t i = 0; i < pool.recs.size(); ++i)
    if (pool.recs[i].nodes <= assert_cap) asserts.push_back(static_cast<int32_t>(i));
  result.assert_terms = asserts.size();

  Evaluator ev(pool, 300000);
  std::unordered_map<int32_t, Fp> canon;
  canon.reserve(asserts.size() * 2);
  for (int32_t id : asserts) canon.emplace(id, fingerprint(ev.eval(id)));

  for (const auto& [x, y] : assert_edges)
    if (canon[x] != canon[y]) {
      ++result.unsound_edges;
      if (result.examples.size() < 5)
        result.examples.push_back("unsound edge: " + display_term(pool, x) + " ~ " +
                                  display_term(pool, y));
    }

  // closure classes must refine to exactly the engine classes
  std::unordered_map<int32_t, Fp> class_rep;  // closure root -> engine value
  std::unordered_map<int32_t, int32_t> class_first;
  std::unordered_map<Fp, int32_t, FpHash> value_root;  // engine value -> closure root
  for (int32_t id : asserts) {
    int32_t root = dsu.find(id);
    const Fp& value = canon[id];
    auto [it, inserted] = class_rep.emplace(root, value);
    if (inserted) class_first.emplace(root, id);
    if (!inserted && it->second != value) {
      ++result.disagreements;
      if (result.examples.size() < 5)
        result.examples.push_back("closure equates engine-distinct terms: " +
                                  display_term(pool, class_first[root]) + " ~ " +
                                  display_term(pool, id));
    }
    auto [vt, vinserted] = value_root.emplace(value, root);
    if (!vinserted && vt->second != root) {
      ++result.disagreements;
      if (result.examples.size() < 5)
        result.examples.push_back("engine equates closure-separated terms: " +
                                  display_term(pool, id));
    }
  }
  result.closure_classes = class_rep.size();
  result.engine_classes = value_root.size();
  return result;
}

std::vector<int> closure_classes_of(const pasting::PresPtr& pres,
                                    const std::vector<penon::Term>& probes, int universe_cap,
                                    bool eh_rules) {
  glob::ensure_valid(*pres);
  Pool pool(pres, universe_cap, eh_rules);
  pool.enumerate();
  std::vector<int32_t> ids;
  ids.reserve(probes.size());
  for (const auto& t : probes) {
    int32_t id = translate(pool, t);
    if (id == kNone) throw Error("probe term is untypable or exceeds the universe cap");
    ids.push_back(id);
  }
  Dsu dsu;
  close_pool(pool, dsu, 0, nullptr, nullptr);
  // renumber roots densely
  std::unordered_map<int32_t, int> dense;
  std::vector<int> out;
  out.reserve(ids.size());
  for (int32_t id : ids) {
    int32_t root = dsu.find(id);
    auto [it, inserted] = dense.emplace(root, static_cast<int>(dense.size()));
    out.push_back(it->second);
  }
  return out;
}

// ---------------------------------------------------------------------------
// braid word closure

namespace {

std::string word_key(const std::vector<int>& w) {
  std::string s;
  s.reserve(w.size());
  for (int l : w) s.push_back(static_cast<char>(l + 64));
  return s;
}

}  // namespace

std::vector<std::vector<int>> braid_neighbors(const std::vector<int>& w, int strands,
                                               std::size_t len_cap) {
  std::vector<std::vector<int>> out;
  const std::size_t n = w.size();
  // free cancellation, deletion
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (w[i] == -w[i + 1]) {
      std::vector<int> v;
      v.reserve(n - 2);
      v.insert(v.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
      out.push_back(std::move(v));
    }
  // free cancellation, insertion
  if (n + 2 <= len_cap)
    for (std::size_t i = 0; i <= n; ++i)
      for (int g = 1; g < strands; ++g)
        for (int sgn : {1, -1}) {
          std::vector<int> v;
          v.reserve(n + 2);
          v.insert(v.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
          v.push_back(sgn * g);
          v.push_back(-sgn * g);
          v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
          out.push_back(std::move(v));
        }
  // distant commutation
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (std::abs(std::abs(w[i]) - std::abs(w[i + 1])) >= 2) {
      std::vector<int> v = w;
      std::swap(v[i], v[i + 1]);
      out.push_back(std::move(v));
    }
  // braid relation, all balanced length-3 variants
  for (std::size_t i = 0; i + 2 < n; ++i) {
    int x = w[i], y = w[i + 1], z = w[i + 2];
    int j = std::abs(x), j2 = std::abs(y);
    if (std::abs(x) != std::abs(z) || std::abs(j - j2) != 1) continue;
    auto rewrite = [&](int a, int b, int c) {
      std::vector<int> v = w;
      v[i] = a;
      v[i + 1] = b;
      v[i + 2] = c;
      out.push_back(std::move(v));
    };
    bool px = x > 0, py = y > 0, pz = z > 0;
    if (px && py && pz && x == z) rewrite(y, x, y);                      // aba -> bab
    else if (!px && !py && !pz && x == z) rewrite(y, x, y);              // a-b-a- -> b-a-b-
    else if (px && py && !pz && x == -z) rewrite(-y, x, y);              // ab a^- -> b^- a b
    else if (!px && py && pz && x == -z) rewrite(y, -x, -y);             // a^- b a -> b a b^-
    else if (px && !py && !pz && x == -z) rewrite(y, -x, -y);            // a b^- a^- -> b^- a^- b
    else if (!px && !py && pz && x == -z) rewrite(-y, x, y);             // a^- b^- a -> b a^- b^-
  }
  return out;
}

OracleVerdict braid_closure_equal(const braid::BraidWord& w1, const braid::BraidWord& w2,
                                  int max_steps, int len_slack, std::size_t state_cap) {
  if (w1.strands != w2.strands) return OracleVerdict::Unequal;
  if (braid::exponent_sum(w1) != braid::exponent_sum(w2) ||
      braid::permutation(w1) != braid::permutation(w2))
    return OracleVerdict::Unequal;
  if (w1.word == w2.word) return OracleVerdict::Equal;

  const std::size_t len_cap = std::max(w1.word.size(), w2.word.size()) + static_cast<std::size_t>(len_slack);
  struct Side {
    std::unordered_map<std::string, int> seen;
    std::deque<std::vector<int>> frontier;
    int depth = 0;
  };
  Side a, b;
  a.seen.emplace(word_key(w1.word), 0);
  a.frontier.push_back(w1.word);
  b.seen.emplace(word_key(w2.word), 0);
  b.frontier.push_back(w2.word);

  bool exhausted_a = false, exhausted_b = false;
  while (a.depth + b.depth < max_steps) {
    Side& grow = (a.frontier.size() <= b.frontier.size() && !exhausted_a) || exhausted_b ? a : b;
    Side& other = &grow == &a ? b : a;
    if (grow.frontier.empty()) {
      if (&grow == &a) exhausted_a = true; else exhausted_b = true;
      if (exhausted_a && exhausted_b) break;
      continue;
    }
    std::deque<std::vector<int>> next;
    ++grow.depth;
    for (const auto& w : grow.frontier) {
      for (auto& nb : braid_neighbors(w, w1.strands, len_cap)) {
        std::string k = word_key(nb);
        if (grow.seen.count(k)) continue;
        if (other.seen.count(k)) return OracleVerdict::Equal;
        grow.seen.emplace(std::move(k), grow.depth);
        next.push_back(std::move(nb));
        if (a.seen.size() + b.seen.size() > state_cap) return OracleVerdict::Unknown;
      }
    }
    grow.frontier = std::move(next);
    if (grow.frontier.empty()) {
      if (&grow == &a) exhausted_a = true; else exhausted_b = true;
    }
    if (exhausted_a && exhausted_b) break;
  }
  return OracleVerdict::Unknown;
}

BraidCrosscheck braid_crosscheck(int pairs, int max_strands, int max_len, std::uint64_t seed) {
  BraidCrosscheck out;
  std::mt19937_64 rng(seed);
  auto random_word = [&](int n, int len) {
    std::vector<int> w;
    if (n >= 2) {
      std::uniform_int_distribution<int> len_dist(0, len);
      std::uniform_int_distribution<int> gen_dist(1, n - 1);
      std::uniform_int_distribution<int> sign(0, 1);
      int L = len_dist(rng);
      for (int i = 0; i < L; ++i) w.push_back(sign(rng) ? gen_dist(rng) : -gen_dist(rng));
    }
    return w;
  };

  for (int i = 0; i < pairs; ++i) {
    int n = 2 + i % std::max(1, max_strands - 1);
    std::vector<int> u = random_word(n, max_len);
    std::vector<int> v;
    if (i % 2 == 0) {
      // rewrite u a few steps: equal by construction
      v = u;
      std::uniform_int_distribution<int> steps_dist(1, 4);
      int steps = steps_dist(rng);
      for (int s = 0; s < steps; ++s) {
        auto nbs = braid_neighbors(v, n, static_cast<std::size_t>(max_len) + 2);
        if (nbs.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, nbs.size() - 1);
        v = nbs[pick(rng)];
      }
    } else {
      v = random_word(n, max_len);
    }
    braid::BraidWord wu = braid::make_word(n, u);
    braid::BraidWord wv = braid::make_word(n, v);
    bool artin = braid::equal(wu, wv);
    if (artin && (braid::permutation(wu) != braid::permutation(wv) ||
                  braid::exponent_sum(wu) != braid::exponent_sum(wv)))
      ++out.invariant_violations;

    OracleVerdict verdict = braid_closure_equal(wu, wv, 10, 2, 30000);
    ++out.pairs;
    if (verdict == OracleVerdict::Unknown) {
      ++out.unknown;
    } else {
      ++out.decided;
      bool oracle_equal = verdict == OracleVerdict::Equal;
      if (oracle_equal != artin) ++out.disagreements;
    }
  }
  return out;
}

}  // namespace penonlab::oracle

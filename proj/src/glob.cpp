#include "penonlab/glob.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace penonlab::glob {

std::string to_string(Mode mode) {
  return mode == Mode::Reflexive ? "reflexive" : "nonreflexive";
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::GlobularSS: return "ss=st";
    case Violation::Kind::GlobularTT: return "ts=tt";
    case Violation::Kind::ReflexiveS: return "si=1";
    case Violation::Kind::ReflexiveT: return "ti=1";
    case Violation::Kind::MissingSrc: return "missing src";
    case Violation::Kind::MissingTgt: return "missing tgt";
    case Violation::Kind::MissingRefl: return "missing refl";
    case Violation::Kind::DanglingSrc: return "dangling src";
    case Violation::Kind::DanglingTgt: return "dangling tgt";
    case Violation::Kind::DanglingRefl: return "dangling refl";
  }
  return "?";
}

Presentation::Presentation(int max_dim, Mode mode) : max_dim_(max_dim), mode_(mode) {
  if (max_dim < 0 || max_dim > kMaxDimCap)
    throw DimensionError("max_dim must be between 0 and " + std::to_string(kMaxDimCap));
  cells_.resize(static_cast<size_t>(max_dim) + 1);
  src_.resize(static_cast<size_t>(max_dim) + 1);
  tgt_.resize(static_cast<size_t>(max_dim) + 1);
  refl_.resize(static_cast<size_t>(max_dim) + 1);
  refl_inv_.resize(static_cast<size_t>(max_dim) + 1);
}

void Presentation::add_cell(int dim, const std::string& id) {
  if (dim < 0 || dim > max_dim_)
    throw DimensionError("cell dimension " + std::to_string(dim) + " out of range");
  if (id.empty()) throw InvalidPresentationError("empty cell identifier");
  if (has_cell(dim, id))
    throw InvalidPresentationError("duplicate cell '" + id + "' at dimension " + std::to_string(dim));
  cells_[static_cast<size_t>(dim)].push_back(id);
}

void Presentation::set_src(int dim, const std::string& id, const std::string& lower) {
  if (dim < 1 || dim > max_dim_) throw DimensionError("src defined for dimensions 1.." + std::to_string(max_dim_));
  src_[static_cast<size_t>(dim)][id] = lower;
}

void Presentation::set_tgt(int dim, const std::string& id, const std::string& lower) {
  if (dim < 1 || dim > max_dim_) throw DimensionError("tgt defined for dimensions 1.." + std::to_string(max_dim_));
  tgt_[static_cast<size_t>(dim)][id] = lower;
}

void Presentation::set_refl(int dim, const std::string& id, const std::string& higher) {
  if (mode_ != Mode::Reflexive) throw ModeError("refl map on a non-reflexive presentation");
  if (dim < 0 || dim >= max_dim_) throw DimensionError("refl defined for dimensions 0.." + std::to_string(max_dim_ - 1));
  auto& fwd = refl_[static_cast<size_t>(dim)];
  auto& inv = refl_inv_[static_cast<size_t>(dim) + 1];
  if (auto it = fwd.find(id); it != fwd.end()) inv.erase(it->second);
  fwd[id] = higher;
  inv[higher] = id;
}

const std::vector<std::string>& Presentation::cells(int dim) const {
  static const std::vector<std::string> empty;
  if (dim < 0 || dim > max_dim_) return empty;
  return cells_[static_cast<size_t>(dim)];
}

bool Presentation::has_cell(int dim, const std::string& id) const {
  const auto& cs = cells(dim);
  return std::find(cs.begin(), cs.end(), id) != cs.end();
}

static std::optional<std::string> lookup(
    const std::vector<std::unordered_map<std::string, std::string>>& maps, int dim,
    const std::string& id) {
  if (dim < 0 || dim >= static_cast<int>(maps.size())) return std::nullopt;
  auto it = maps[static_cast<size_t>(dim)].find(id);
  if (it == maps[static_cast<size_t>(dim)].end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> Presentation::src(int dim, const std::string& id) const {
  return lookup(src_, dim, id);
}
std::optional<std::string> Presentation::tgt(int dim, const std::string& id) const {
  return lookup(tgt_, dim, id);
}
std::optional<std::string> Presentation::refl(int dim, const std::string& id) const {
  return lookup(refl_, dim, id);
}

std::optional<std::string> Presentation::refl_origin(int dim, const std::string& id) const {
  if (dim < 1 || dim > max_dim_) return std::nullopt;
  const auto& inv = refl_inv_[static_cast<size_t>(dim)];
  auto it = inv.find(id);
  if (it == inv.end()) return std::nullopt;
  return it->second;
}

bool Presentation::is_refl_image(int dim, const std::string& id) const {
  return refl_origin(dim, id).has_value();
}

bool Presentation::operator==(const Presentation& o) const {
  return max_dim_ == o.max_dim_ && mode_ == o.mode_ && cells_ == o.cells_ && src_ == o.src_ &&
         tgt_ == o.tgt_ && refl_ == o.refl_;
}

std::vector<Violation> validate_presentation(const Presentation& p) {
  std::vector<Violation> out;
  auto add = [&](Violation::Kind kind, int dim, const std::string& id, std::string detail) {
    out.push_back(Violation{kind, CellRef{dim, id}, std::move(detail)});
  };

  // src/tgt present and landing in declared cells
  for (int d = 1; d <= p.max_dim(); ++d) {
    for (const auto& id : p.cells(d)) {
      auto s = p.src(d, id);
      auto t = p.tgt(d, id);
      if (!s)
        add(Violation::Kind::MissingSrc, d, id, "no src entry");
      else if (!p.has_cell(d - 1, *s))
        add(Violation::Kind::DanglingSrc, d, id, "src '" + *s + "' is not a cell of dimension " + std::to_string(d - 1));
      if (!t)
        add(Violation::Kind::MissingTgt, d, id, "no tgt entry");
      else if (!p.has_cell(d - 1, *t))
        add(Violation::Kind::DanglingTgt, d, id, "tgt '" + *t + "' is not a cell of dimension " + std::to_string(d - 1));
    }
  }

  // globularity ss = st, ts = tt
  for (int d = 2; d <= p.max_dim(); ++d) {
    for (const auto& id : p.cells(d)) {
      auto s = p.src(d, id), t = p.tgt(d, id);
      if (!s || !t || !p.has_cell(d - 1, *s) || !p.has_cell(d - 1, *t)) continue;
      auto ss = p.src(d - 1, *s), st = p.src(d - 1, *t);
      auto ts = p.tgt(d - 1, *s), tt = p.tgt(d - 1, *t);
      if (ss && st && *ss != *st)
        add(Violation::Kind::GlobularSS, d, id, "s(s(" + id + ")) = '" + *ss + "' but s(t(" + id + ")) = '" + *st + "'");
      if (ts && tt && *ts != *tt)
        add(Violation::Kind::GlobularTT, d, id, "t(s(" + id + ")) = '" + *ts + "' but t(t(" + id + ")) = '" + *tt + "'");
    }
  }

  // reflexivity si = ti = 1
  if (p.reflexive()) {
    for (int d = 0; d < p.max_dim(); ++d) {
      for (const auto& id : p.cells(d)) {
        auto r = p.refl(d, id);
        if (!r) {
          add(Violation::Kind::MissingRefl, d, id, "no refl entry");
          continue;
        }
        if (!p.has_cell(d + 1, *r)) {
          add(Violation::Kind::DanglingRefl, d, id, "refl '" + *r + "' is not a cell of dimension " + std::to_string(d + 1));
          continue;
        }
        auto sr = p.src(d + 1, *r);
        auto tr = p.tgt(d + 1, *r);
        if (sr && *sr != id)
          add(Violation::Kind::ReflexiveS, d, id, "s(refl(" + id + ")) = '" + *sr + "' != '" + id + "'");
        if (tr && *tr != id)
          add(Violation::Kind::ReflexiveT, d, id, "t(refl(" + id + ")) = '" + *tr + "' != '" + id + "'");
      }
    }
  }
  return out;
}

void ensure_valid(const Presentation& p) {
  auto vs = validate_presentation(p);
  if (vs.empty()) return;
  std::ostringstream os;
  os << "invalid presentation (" << vs.size() << " violation(s)):";
  for (const auto& v : vs)
    os << "\n  [" << to_string(v.kind) << "] dim " << v.cell.dim << " cell '" << v.cell.id << "': " << v.detail;
  throw InvalidPresentationError(os.str());
}

Presentation truncate(const Presentation& p, int m) {
  if (m > p.max_dim())
    throw DimensionError("truncate to dimension " + std::to_string(m) + " above max_dim " + std::to_string(p.max_dim()));
  if (m < 0) throw DimensionError("truncate to negative dimension");
  Presentation q(m, p.mode());
  for (int d = 0; d <= m; ++d)
    for (const auto& id : p.cells(d)) {
      q.add_cell(d, id);
      if (d >= 1) {
        if (auto s = p.src(d, id)) q.set_src(d, id, *s);
        if (auto t = p.tgt(d, id)) q.set_tgt(d, id, *t);
      }
      if (p.reflexive() && d < m)
        if (auto r = p.refl(d, id)) q.set_refl(d, id, *r);
    }
  return q;
}

Presentation free_reflexive_completion(const Presentation& p) {
  if (p.reflexive()) throw ModeError("free_reflexive_completion expects a non-reflexive presentation");
  ensure_valid(p);

  const int n = p.max_dim();
  Presentation q(n, Mode::Reflexive);
  for (int d = 0; d <= n; ++d)
    for (const auto& id : p.cells(d)) {
      q.add_cell(d, id);
      if (d >= 1) {
        q.set_src(d, id, *p.src(d, id));
        q.set_tgt(d, id, *p.tgt(d, id));
      }
    }

  auto fresh_name = [&q](int dim, const std::string& base) {
    std::string name = "i(" + base + ")";
    while (q.has_cell(dim, name)) name += "'";
    return name;
  };

  // Layer by layer: every cell of dimension d < n (original or added)
  // receives a fresh identity at d+1.
  for (int d = 0; d < n; ++d) {
    // Copy: cells(d) grows as identities from the layer below were added.
    std::vector<std::string> layer = q.cells(d);
    for (const auto& id : layer) {
      std::string iname = fresh_name(d + 1, id);
      q.add_cell(d + 1, iname);
      q.set_src(d + 1, iname, id);
      q.set_tgt(d + 1, iname, id);
      q.set_refl(d, id, iname);
    }
  }
  return q;
}

bool is_doubly_degenerate(const Presentation& p) {
  return p.cells(0).size() == 1 && p.cells(1).size() == 1;
}

Presentation presentation_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidPresentationError("presentation JSON must be an object");
  static const std::set<std::string> allowed = {"max_dim", "mode", "cells", "src", "tgt", "refl"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw InvalidPresentationError("unknown field '" + it.key() + "' in presentation JSON");

  if (!j.contains("max_dim") || !j["max_dim"].is_number_integer())
    throw InvalidPresentationError("missing or non-integer 'max_dim'");
  if (!j.contains("mode") || !j["mode"].is_string())
    throw InvalidPresentationError("missing or non-string 'mode'");
  const std::string mode_s = j["mode"].get<std::string>();
  Mode mode;
  if (mode_s == "reflexive")
    mode = Mode::Reflexive;
  else if (mode_s == "nonreflexive")
    mode = Mode::NonReflexive;
  else
    throw InvalidPresentationError("mode must be 'reflexive' or 'nonreflexive'");
  if (mode == Mode::NonReflexive && j.contains("refl"))
    throw ModeError("'refl' present on a nonreflexive presentation");

  Presentation p(j["max_dim"].get<int>(), mode);

  auto parse_dim_key = [&p](const std::string& key, int lo, int hi, const char* field) {
    size_t pos = 0;
    int d = -1;
    try {
      d = std::stoi(key, &pos);
    } catch (...) {
      pos = 0;
    }
    if (pos != key.size() || d < lo || d > hi)
      throw InvalidPresentationError(std::string("bad dimension key '") + key + "' in '" + field + "'");
    (void)p;
    return d;
  };

  if (j.contains("cells")) {
    if (!j["cells"].is_object()) throw InvalidPresentationError("'cells' must be an object");
    for (auto it = j["cells"].begin(); it != j["cells"].end(); ++it) {
      int d = parse_dim_key(it.key(), 0, p.max_dim(), "cells");
      if (!it.value().is_array()) throw InvalidPresentationError("'cells' entries must be arrays");
      for (const auto& c : it.value()) {
        if (!c.is_string()) throw InvalidPresentationError("cell ids must be strings");
        p.add_cell(d, c.get<std::string>());
      }
    }
  }

  auto read_map = [&](const char* field, int lo, int hi, auto setter) {
    if (!j.contains(field)) return;
    if (!j[field].is_object()) throw InvalidPresentationError(std::string("'") + field + "' must be an object");
    for (auto it = j[field].begin(); it != j[field].end(); ++it) {
      int d = parse_dim_key(it.key(), lo, hi, field);
      if (!it.value().is_object())
        throw InvalidPresentationError(std::string("'") + field + "' dimension entries must be objects");
      for (auto jt = it.value().begin(); jt != it.value().end(); ++jt) {
        if (!jt.value().is_string())
          throw InvalidPresentationError(std::string("'") + field + "' values must be strings");
        setter(d, jt.key(), jt.value().template get<std::string>());
      }
    }
  };
  read_map("src", 1, p.max_dim(), [&](int d, const std::string& id, const std::string& v) { p.set_src(d, id, v); });
  read_map("tgt", 1, p.max_dim(), [&](int d, const std::string& id, const std::string& v) { p.set_tgt(d, id, v); });
  if (mode == Mode::Reflexive)
    read_map("refl", 0, p.max_dim() - 1, [&](int d, const std::string& id, const std::string& v) { p.set_refl(d, id, v); });
  return p;
}

nlohmann::json presentation_to_json(const Presentation& p) {
  nlohmann::json j;
  j["max_dim"] = p.max_dim();
  j["mode"] = to_string(p.mode());
  nlohmann::json cells = nlohmann::json::object();
  nlohmann::json src = nlohmann::json::object();
  nlohmann::json tgt = nlohmann::json::object();
  nlohmann::json refl = nlohmann::json::object();
  for (int d = 0; d <= p.max_dim(); ++d) {
    std::vector<std::string> ids = p.cells(d);
    std::sort(ids.begin(), ids.end());
    cells[std::to_string(d)] = ids;
    if (d >= 1) {
      nlohmann::json sm = nlohmann::json::object(), tm = nlohmann::json::object();
      for (const auto& id : ids) {
        if (auto s = p.src(d, id)) sm[id] = *s;
        if (auto t = p.tgt(d, id)) tm[id] = *t;
      }
      if (!sm.empty()) src[std::to_string(d)] = sm;
      if (!tm.empty()) tgt[std::to_string(d)] = tm;
    }
    if (p.reflexive() && d < p.max_dim()) {
      nlohmann::json rm = nlohmann::json::object();
      for (const auto& id : ids)
        if (auto r = p.refl(d, id)) rm[id] = *r;
      if (!rm.empty()) refl[std::to_string(d)] = rm;
    }
  }
  j["cells"] = cells;
  j["src"] = src;
  j["tgt"] = tgt;
  if (p.reflexive()) j["refl"] = refl;
  return j;
}

Presentation doubly_degenerate_D(Mode mode) {
  Presentation p(3, mode);
  p.add_cell(0, "pt");
  p.add_cell(1, "e");
  p.set_src(1, "e", "pt");
  p.set_tgt(1, "e", "pt");
  for (const char* c : {"alpha", "beta"}) {
    p.add_cell(2, c);
    p.set_src(2, c, "e");
    p.set_tgt(2, c, "e");
  }
  if (mode == Mode::Reflexive) {
    // Forced identity tower: e is the putative identity on pt.
    p.add_cell(2, "i(e)");
    p.set_src(2, "i(e)", "e");
    p.set_tgt(2, "i(e)", "e");
    for (const char* c : {"alpha", "beta", "i(e)"}) {
      std::string ic = std::string("i(") + c + ")";
      p.add_cell(3, ic);
      p.set_src(3, ic, c);
      p.set_tgt(3, ic, c);
      p.set_refl(2, c, ic);
    }
    p.set_refl(0, "pt", "e");
    p.set_refl(1, "e", "i(e)");
  }
  return p;
}

}  // namespace penonlab::glob

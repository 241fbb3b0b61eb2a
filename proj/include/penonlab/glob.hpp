#pragma once

// Finite presentations of n-dimensional globular sets, reflexive and
// non-reflexive, with validation and the free reflexive completion.

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "penonlab/errors.hpp"

#include "json.hpp"

namespace penonlab::glob {

enum class Mode { Reflexive, NonReflexive };

std::string to_string(Mode mode);

// Reference to a named cell of some presentation. Ids are scoped per
// dimension.
struct CellRef {
  int dim = 0;
  std::string id;

  bool operator==(const CellRef& o) const { return dim == o.dim && id == o.id; }
  bool operator!=(const CellRef& o) const { return !(*this == o); }
};

// One violated equation or structural defect, as data.
struct Violation {
  enum class Kind {
    GlobularSS,   // s(s(c)) != s(t(c))
    GlobularTT,   // t(s(c)) != t(t(c))
    ReflexiveS,   // s(refl(c)) != c
    ReflexiveT,   // t(refl(c)) != c
    MissingSrc,
    MissingTgt,
    MissingRefl,
    DanglingSrc,  // image not among the declared cells
    DanglingTgt,
    DanglingRefl,
  };
  Kind kind;
  CellRef cell;
  std::string detail;
};

std::string to_string(Violation::Kind kind);

class Presentation {
 public:
  static constexpr int kMaxDimCap = 4;

  explicit Presentation(int max_dim = 3, Mode mode = Mode::NonReflexive);

  void add_cell(int dim, const std::string& id);
  void set_src(int dim, const std::string& id, const std::string& lower);
  void set_tgt(int dim, const std::string& id, const std::string& lower);
  void set_refl(int dim, const std::string& id, const std::string& higher);

  int max_dim() const { return max_dim_; }
  Mode mode() const { return mode_; }
  bool reflexive() const { return mode_ == Mode::Reflexive; }

  const std::vector<std::string>& cells(int dim) const;
  bool has_cell(int dim, const std::string& id) const;
  bool has_cell(const CellRef& ref) const { return has_cell(ref.dim, ref.id); }

  std::optional<std::string> src(int dim, const std::string& id) const;
  std::optional<std::string> tgt(int dim, const std::string& id) const;
  std::optional<std::string> refl(int dim, const std::string& id) const;

  // Inverse of refl: the cell `id` is the putative identity of, if any.
  // Injectivity of refl is forced by the reflexivity equations on valid
  // presentations.
  std::optional<std::string> refl_origin(int dim, const std::string& id) const;
  bool is_refl_image(int dim, const std::string& id) const;
  bool is_refl_image(const CellRef& ref) const { return is_refl_image(ref.dim, ref.id); }

  bool operator==(const Presentation& o) const;
  bool operator!=(const Presentation& o) const { return !(*this == o); }

 private:
  int max_dim_;
  Mode mode_;
  std::vector<std::vector<std::string>> cells_;
  std::vector<std::unordered_map<std::string, std::string>> src_;
  std::vector<std::unordered_map<std::string, std::string>> tgt_;
  std::vector<std::unordered_map<std::string, std::string>> refl_;
  // inverse of refl, maintained by set_refl (refl is injective on valid
  // presentations)
  std::vector<std::unordered_map<std::string, std::string>> refl_inv_;
};

// Every violated equation instance, empty iff valid. Violations are data,
// not errors.
std::vector<Violation> validate_presentation(const Presentation& p);

// Throws InvalidPresentationError listing the violations.
void ensure_valid(const Presentation& p);

// Discards cells above dimension m; refl out of the new top dimension is
// discarded in reflexive mode.
Presentation truncate(const Presentation& p, int m);

// Freely adds the putative-identity tower over every cell (one fresh cell
// i(c) for each completed cell of dimension < n). Input must be
// non-reflexive and valid; output is reflexive, and each added cell is
// recognizable as a formal identity through the refl map.
Presentation free_reflexive_completion(const Presentation& p);

bool is_doubly_degenerate(const Presentation& p);

// Strict JSON schema:
//   { "max_dim": k, "mode": "reflexive"|"nonreflexive",
//     "cells": { "0": [..], ... },
//     "src": { "1": { id: lower, ... }, ... }, "tgt": { ... },
//     "refl": { "0": { id: higher, ... }, ... } }
// Unknown fields are rejected.
Presentation presentation_from_json(const nlohmann::json& j);
nlohmann::json presentation_to_json(const Presentation& p);

// The doubly degenerate presentation D: one 0-cell "pt", one 1-cell "e",
// 2-cells "alpha", "beta". The reflexive variant carries the forced refl
// tower (refl(pt) = e, refl(e) = i(e), ...).
Presentation doubly_degenerate_D(Mode mode);

}  // namespace penonlab::glob

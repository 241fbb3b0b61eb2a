#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace penonlab {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionError : Error {
  using Error::Error;
};

struct ModeError : Error {
  using Error::Error;
};

struct UnknownCellError : Error {
  using Error::Error;
};

struct InvalidPresentationError : Error {
  using Error::Error;
};

// Raised when a reflexive presentation falls outside the pasting engine's
// supported classes (see pasting::classify).
struct UnsupportedPresentationError : Error {
  using Error::Error;
};

// Two values built over different presentations or modes were combined.
struct CompatibilityError : Error {
  using Error::Error;
};

// Composition boundary mismatch; carries both offending boundary diagrams
// in canonical form.
struct BoundaryMismatchError : Error {
  std::string lhs_boundary;
  std::string rhs_boundary;
  BoundaryMismatchError(const std::string& what, std::string lhs, std::string rhs)
      : Error(what), lhs_boundary(std::move(lhs)), rhs_boundary(std::move(rhs)) {}
};

// Term typing failure. On PhiMismatch the two distinct phi-diagrams are
// attached in canonical form; they are the mathematical content of the
// failure.
struct TypecheckError : Error {
  enum class Kind {
    DimMismatch,
    BoundaryMismatch,
    NotParallel,
    PhiMismatch,
    TopDimContraction,
    UnknownCell,
  };
  Kind kind;
  std::string lhs_payload;
  std::string rhs_payload;
  TypecheckError(Kind k, const std::string& what, std::string lhs = {}, std::string rhs = {})
      : Error(what), kind(k), lhs_payload(std::move(lhs)), rhs_payload(std::move(rhs)) {}
};

}  // namespace penonlab

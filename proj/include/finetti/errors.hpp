#pragma once

#include <stdexcept>
#include <string>

namespace finetti {

// Base class for all domain errors raised by the toolkit.
struct Error : std::runtime_error {
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Input container has the wrong shape (ragged rows, non-square matrix, ...).
struct ShapeError : Error {
  using Error::Error;
};

// A structural axiom of the object's family is violated. The message names
// the axiom tag and the offending cell.
struct ValidationError : Error {
  using Error::Error;
};

// Transitive closure of a requested refinement breaks antisymmetry.
struct CycleError : Error {
  using Error::Error;
};

// Exhaustive operation refused because it exceeds the documented size guard.
struct InfeasibleError : Error {
  using Error::Error;
};

// A tower of cubes has a present cube above an absent one.
struct GravityError : Error {
  using Error::Error;
};

// An affine cube map produced a coordinate outside the target domain.
// Raised only on invalid inputs; valid inputs can never trigger it.
struct DomainError : Error {
  using Error::Error;
};

// Comparisons of a singleton against its undetermined doubletons are not
// closable into a consistent order.
struct InconsistentPlacement : Error {
  using Error::Error;
};

// A refinement was expected to compare every singleton with every doubleton
// but does not.
struct NotUniversallyComparable : Error {
  using Error::Error;
};

// A sequence of sets is not a valid order of the lattice (the induced
// tableau fails to increase along a row or column).
struct NotDeFinetti : Error {
  using Error::Error;
};

// Parameter outside the operation's domain (bad n, bad k, ...).
struct InvalidArgument : Error {
  using Error::Error;
};

}  // namespace finetti

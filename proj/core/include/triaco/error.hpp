#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace triaco {

/// Failure kinds raised by the library. Every throwing operation raises
/// triaco::Error (or a subclass) carrying one of these codes.
enum class Errc {
  NotASubspace,
  Singular,
  TooFewParts,
  LeafHasNoDecomposition,
  IndexOutOfRange,
  CannotDeleteFromSingleLeaf,
  ParseError,
  ShapeMismatch,
  NonCommutingStructureMaps,
  InvalidModule,
  NonCentralCoefficients,
  NotAModuleMorphism,
  NotStandardForm,
  MismatchedBase,
  NotEquivariant,
  EquivarianceBroken,
  NotCollapsed,
  NotClassical,
  DegreeTooHigh,
  OrderZero,
  OrderMismatch,
  BaseTermMismatch,
  NotIdentityAtZero,
  DNotCommuting,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Malformed textual input. `offset` is a byte offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what);

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace triaco

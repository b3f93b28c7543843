#include "triaco/error.hpp"

namespace triaco {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotASubspace: return "NotASubspace";
    case Errc::Singular: return "Singular";
    case Errc::TooFewParts: return "TooFewParts";
    case Errc::LeafHasNoDecomposition: return "LeafHasNoDecomposition";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::CannotDeleteFromSingleLeaf: return "CannotDeleteFromSingleLeaf";
    case Errc::ParseError: return "ParseError";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NonCommutingStructureMaps: return "NonCommutingStructureMaps";
    case Errc::InvalidModule: return "InvalidModule";
    case Errc::NonCentralCoefficients: return "NonCentralCoefficients";
    case Errc::NotAModuleMorphism: return "NotAModuleMorphism";
    case Errc::NotStandardForm: return "NotStandardForm";
    case Errc::MismatchedBase: return "MismatchedBase";
    case Errc::NotEquivariant: return "NotEquivariant";
    case Errc::EquivarianceBroken: return "EquivarianceBroken";
    case Errc::NotCollapsed: return "NotCollapsed";
    case Errc::NotClassical: return "NotClassical";
    case Errc::DegreeTooHigh: return "DegreeTooHigh";
    case Errc::OrderZero: return "OrderZero";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::BaseTermMismatch: return "BaseTermMismatch";
    case Errc::NotIdentityAtZero: return "NotIdentityAtZero";
    case Errc::DNotCommuting: return "DNotCommuting";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

ParseError::ParseError(std::size_t offset, const std::string& what)
    : Error(Errc::ParseError, what + " (at byte " + std::to_string(offset) + ")"),
      offset_(offset) {}

}  // namespace triaco

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "triaco/linalg.hpp"

namespace triaco {

/// One failed identity instance.
struct Violation {
  /// Short rule name, e.g. "axiom(7)", "commute(alpha,beta)",
  /// "mixed(3,slot2)", "equivariant(alphaV,left,lact)".
  std::string rule;
  /// Axiom number for rules that come from the twelve defining identities
  /// (1 = αβ = βα, 2..12 the product identities); 0 otherwise.
  int axiom = 0;
  /// Deformation order for order-indexed systems; 0 otherwise.
  std::size_t order = 0;
  /// Basis indices of the witnessing arguments.
  std::vector<std::size_t> witness;
  /// lhs − rhs evaluated on the witness.
  Vector defect;
};

/// Rows appear in a deterministic order fixed by each checker (rule, then
/// witness lexicographically).
struct ViolationReport {
  std::vector<Violation> rows;

  bool ok() const noexcept { return rows.empty(); }
  std::size_t size() const noexcept { return rows.size(); }

  void add(Violation v) { rows.push_back(std::move(v)); }
  void append(const ViolationReport& other) {
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  }
  bool cites_axiom(int axiom) const;
  bool cites_rule(const std::string& rule) const;
};

/// Records lhs − rhs as a violation when nonzero.
void record_if_nonzero(ViolationReport& report, const std::string& rule, int axiom,
                       std::vector<std::size_t> witness, const Vector& lhs, const Vector& rhs,
                       std::size_t order = 0);

/// One line per row: rule, order, witness, defect (tab separated).
std::string to_tsv(const ViolationReport& report);

}  // namespace triaco

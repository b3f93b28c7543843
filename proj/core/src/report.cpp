#include "triaco/report.hpp"

#include <algorithm>
#include <sstream>

namespace triaco {

bool ViolationReport::cites_axiom(int axiom) const {
  return std::any_of(rows.begin(), rows.end(), [&](const Violation& v) { return v.axiom == axiom; });
}

bool ViolationReport::cites_rule(const std::string& rule) const {
  return std::any_of(rows.begin(), rows.end(), [&](const Violation& v) { return v.rule == rule; });
}

void record_if_nonzero(ViolationReport& report, const std::string& rule, int axiom,
                       std::vector<std::size_t> witness, const Vector& lhs, const Vector& rhs,
                       std::size_t order) {
  Vector defect = lhs - rhs;
  if (is_zero(defect)) return;
  report.add({rule, axiom, order, std::move(witness), std::move(defect)});
}

std::string to_tsv(const ViolationReport& report) {
  std::ostringstream os;
  os << "rule\torder\twitness\tdefect\n";
  for (const auto& v : report.rows) {
    os << v.rule << '\t' << v.order << '\t';
    for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
    os << '\t';
    for (std::size_t i = 0; i < v.defect.size(); ++i) os << (i ? "," : "") << v.defect[i].get_str();
    os << '\n';
  }
  return os.str();
}

}  // namespace triaco

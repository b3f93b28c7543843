#include "triaco/derivation.hpp"

#include <sstream>

#include "triaco/error.hpp"

namespace triaco {

namespace {

void require_square(const Matrix& m, std::size_t n, const char* name) {
  if (m.rows() != n || m.cols() != n) throw Error(Errc::ShapeMismatch, std::string(name) + " must be n×n");
}

std::string param_name(std::size_t n, std::size_t column) {
  static const char* const primes[] = {"", "'", "''"};
  const std::size_t block = column / (n * n), r = (column % (n * n)) / n, c = column % n;
  return "d" + std::string(primes[block]) + "_{" + std::to_string(r + 1) + std::to_string(c + 1) + "}";
}

}  // namespace

Vector DerivationTriple::to_vector() const {
  Vector v;
  for (const Matrix* m : {&d, &dp, &dpp}) v.insert(v.end(), m->data().begin(), m->data().end());
  return v;
}

DerivationTriple DerivationTriple::from_vector(std::size_t n, const Vector& v) {
  if (v.size() != 3 * n * n) throw Error(Errc::ShapeMismatch, "derivation vector must have length 3n²");
  DerivationTriple out{Matrix(n, n), Matrix(n, n), Matrix(n, n)};
  Matrix* ms[] = {&out.d, &out.dp, &out.dpp};
  for (std::size_t b = 0; b < 3; ++b)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) (*ms[b])(r, c) = v[b * n * n + r * n + c];
  return out;
}

ViolationReport check_derivation(const Trialgebra& t, const DerivationTriple& triple) {
  t.validate_shape();
  const std::size_t n = t.dim;
  require_square(triple.d, n, "D");
  require_square(triple.dp, n, "D'");
  require_square(triple.dpp, n, "D''");
  ViolationReport report;

  const std::array<std::pair<const char*, const Matrix*>, 3> ds{{{"D", &triple.d}, {"D'", &triple.dp}, {"D''", &triple.dpp}}};
  const std::array<std::pair<const char*, const Matrix*>, 2> maps{{{"alpha", &t.alpha}, {"beta", &t.beta}}};
  for (const auto& [dn, dm] : ds)
    for (const auto& [an, am] : maps) {
      const Matrix c = commutator(*dm, *am);
      for (std::size_t i = 0; i < n; ++i) {
        Vector v = c.col(i);
        if (!is_zero(v)) report.add({"commute(" + std::string(dn) + "," + an + ")", 0, 0, {i}, std::move(v)});
      }
    }

  const Matrix ab = t.alpha * t.beta;
  for (Op op : kAllOps) {
    const std::string rule = "leibniz(" + std::string(op_name(op)) + ")";
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Vector lhs = triple.dpp.apply(t.product(op).fibre(a, b));
        const Vector rhs = t.multiply(op, triple.d.col(a), ab.col(b)) + t.multiply(op, ab.col(a), triple.dp.col(b));
        record_if_nonzero(report, rule, 0, {a, b}, lhs, rhs);
      }
  }
  return report;
}

Matrix derivation_constraints(const Trialgebra& t) {
  t.validate_shape();
  const std::size_t n = t.dim, nn = n * n;
  std::vector<Vector> rows;

  // (X A − A X)(r, c) for X the block-th unknown matrix.
  for (std::size_t block = 0; block < 3; ++block)
    for (const Matrix* a : {&t.alpha, &t.beta})
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          Vector row(3 * nn);
          for (std::size_t l = 0; l < n; ++l) {
            row[block * nn + r * n + l] += (*a)(l, c);
            row[block * nn + l * n + c] -= (*a)(r, l);
          }
          rows.push_back(std::move(row));
        }

  // D''(e_a*e_b) − D(e_a)*αβ(e_b) − αβ(e_a)*D'(e_b), coordinate k.
  const Matrix ab = t.alpha * t.beta;
  for (Op op : kAllOps) {
    const Tensor3& c = t.product(op);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<Vector> right(n), left(n);  // e_p * αβ(e_b), αβ(e_a) * e_p
        for (std::size_t p = 0; p < n; ++p) {
          right[p] = t.multiply(op, unit_vector(n, p), ab.col(b));
          left[p] = t.multiply(op, ab.col(a), unit_vector(n, p));
        }
        for (std::size_t k = 0; k < n; ++k) {
          Vector row(3 * nn);
          for (std::size_t p = 0; p < n; ++p) {
            row[2 * nn + k * n + p] += c(a, b, p);
            row[0 * nn + p * n + a] -= right[p][k];
            row[1 * nn + p * n + b] -= left[p][k];
          }
          rows.push_back(std::move(row));
        }
      }
  }
  return Matrix::from_rows(3 * nn, rows);
}

SolutionFamily solve_derivations(const Trialgebra& t) {
  const std::size_t n = t.dim, nn = n * n;
  std::vector<std::size_t> order;
  for (std::size_t block : {2u, 1u, 0u})
    for (std::size_t i = 0; i < nn; ++i) order.push_back(block * nn + i);
  const KernelParametrization kp = parametrize_kernel(derivation_constraints(t), order);

  SolutionFamily fam{Subspace::span(3 * nn, kp.basis), {}, kp.basis};
  for (std::size_t c : kp.free_columns) fam.parameters.push_back(param_name(n, c));
  return fam;
}

std::string SolutionFamily::pretty() const {
  const std::size_t total = space.ambient_dim();
  std::size_t n = 0;
  while (3 * n * n < total) ++n;
  std::ostringstream os;
  static const char* const names[] = {"D", "D'", "D''"};
  for (std::size_t block = 0; block < 3; ++block) {
    os << names[block] << " =\n";
    for (std::size_t r = 0; r < n; ++r) {
      os << "  [";
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t idx = block * n * n + r * n + c;
        std::string entry;
        for (std::size_t p = 0; p < basis.size(); ++p) {
          const Scalar& x = basis[p][idx];
          if (sgn(x) == 0) continue;
          const bool neg = sgn(x) < 0;
          const Scalar mag = abs(x);
          std::string term = (mag == 1 ? "" : mag.get_str() + "*") + parameters[p];
          if (entry.empty())
            entry = (neg ? "-" : "") + term;
          else
            entry += (neg ? " - " : " + ") + term;
        }
        os << (c ? ", " : "") << (entry.empty() ? "0" : entry);
      }
      os << "]\n";
    }
  }
  return os.str();
}

CompanionSolution solve_companions(const Trialgebra& t, const Matrix& d) {
  t.validate_shape();
  const std::size_t n = t.dim, nn = n * n;
  require_square(d, n, "D");
  if (!commutator(d, t.alpha).is_zero() || !commutator(d, t.beta).is_zero())
    throw Error(Errc::DNotCommuting, "D must commute with alpha and beta");

  const Matrix full = derivation_constraints(t);
  Matrix rest(full.rows(), 2 * nn);
  Vector rhs(full.rows());
  for (std::size_t r = 0; r < full.rows(); ++r) {
    for (std::size_t c = 0; c < nn; ++c)
      if (sgn(d.data()[c]) != 0) rhs[r] -= full(r, c) * d.data()[c];
    for (std::size_t c = 0; c < 2 * nn; ++c) rest(r, c) = full(r, nn + c);
  }

  CompanionSolution out{std::nullopt, kernel_basis(rest)};
  if (auto sol = solve(rest, rhs)) {
    Vector v(d.data().begin(), d.data().end());
    v.insert(v.end(), sol->begin(), sol->end());
    out.particular = DerivationTriple::from_vector(n, v);
  }
  return out;
}

}  // namespace triaco

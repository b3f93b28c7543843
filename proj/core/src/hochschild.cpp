#include "triaco/hochschild.hpp"

#include <sstream>

#include "triaco/error.hpp"

namespace triaco {

std::size_t power_of(std::size_t base, std::size_t n) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= base;
  return r;
}

namespace {

std::size_t encode(const std::vector<std::size_t>& args, std::size_t base) {
  std::size_t idx = 0;
  for (std::size_t a : args) {
    if (a >= base) throw Error(Errc::IndexOutOfRange, "cochain argument index out of range");
    idx = idx * base + a;
  }
  return idx;
}

std::vector<std::size_t> decode(std::size_t idx, std::size_t base, std::size_t n) {
  std::vector<std::size_t> digits(n);
  for (std::size_t j = n; j-- > 0;) {
    digits[j] = idx % base;
    idx /= base;
  }
  return digits;
}

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

SparseVec sparse(const Vector& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) s.emplace_back(i, v[i]);
  return s;
}

std::vector<SparseVec> sparse_columns(const Matrix& m) {
  std::vector<SparseVec> out(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) out[c] = sparse(m.col(c));
  return out;
}

// Calls visit(multi_index, coefficient) for every nonzero term of the
// tensor product of the given sparse vectors, each over `base`.
template <class Visit>
void expand(const std::vector<const SparseVec*>& factors, std::size_t base, Visit&& visit) {
  const std::size_t n = factors.size();
  std::vector<std::size_t> pos(n, 0);
  for (const auto* f : factors)
    if (f->empty()) return;
  while (true) {
    std::size_t idx = 0;
    Scalar c = 1;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& [i, x] = (*factors[j])[pos[j]];
      idx = idx * base + i;
      c *= x;
    }
    visit(idx, c);
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (++pos[j] < factors[j]->size()) break;
      pos[j] = 0;
      if (j == 0) return;
    }
    if (n == 0) return;
  }
}

void require_degree(std::size_t n, const HochschildOptions& opts) {
  if (n == 0) throw Error(Errc::IndexOutOfRange, "cochain degree must be at least 1");
  if (n > opts.max_degree)
    throw Error(Errc::DegreeTooHigh, "degree " + std::to_string(n) + " exceeds the limit " +
                                         std::to_string(opts.max_degree));
}

// α^⊗n as an N^n×N^n matrix: entry (a, i) = Π α(a_l, i_l).
Matrix kronecker_power(const Matrix& a, std::size_t n) {
  Matrix k = Matrix::identity(1);
  for (std::size_t step = 0; step < n; ++step) {
    Matrix next(k.rows() * a.rows(), k.cols() * a.cols());
    for (std::size_t r = 0; r < k.rows(); ++r)
      for (std::size_t c = 0; c < k.cols(); ++c) {
        if (sgn(k(r, c)) == 0) continue;
        for (std::size_t r2 = 0; r2 < a.rows(); ++r2)
          for (std::size_t c2 = 0; c2 < a.cols(); ++c2)
            next(r * a.rows() + r2, c * a.cols() + c2) = k(r, c) * a(r2, c2);
      }
    k = std::move(next);
  }
  return k;
}

// Rows: f∘A^⊗n − AV∘f = 0 for A = α, β on one plain block.
Matrix equivariance_constraints(const Trialgebra& t, const TriBimodule& v, std::size_t n) {
  const std::size_t cells = power_of(t.dim, n), m = v.dim;
  std::vector<Vector> rows;
  const std::array<std::pair<const Matrix*, const Matrix*>, 2> maps{{{&t.alpha, &v.alphaV}, {&t.beta, &v.betaV}}};
  for (const auto& [a, av] : maps) {
    const Matrix kp = kronecker_power(*a, n);
    for (std::size_t i = 0; i < cells; ++i)
      for (std::size_t k = 0; k < m; ++k) {
        Vector row(cells * m);
        for (std::size_t p = 0; p < cells; ++p) row[p * m + k] += kp(p, i);
        for (std::size_t l = 0; l < m; ++l) row[i * m + l] -= (*av)(k, l);
        rows.push_back(std::move(row));
      }
  }
  return Matrix::from_rows(cells * m, rows);
}

bool block_equivariant(const Matrix& constraints, const Vector& values, std::size_t offset, std::size_t size) {
  for (std::size_t r = 0; r < constraints.rows(); ++r) {
    Scalar s = 0;
    for (std::size_t c = 0; c < size; ++c)
      if (sgn(values[offset + c]) != 0) s += constraints(r, c) * values[offset + c];
    if (sgn(s) != 0) return false;
  }
  return true;
}

// Columns: a basis of C^n placed in the ambient coordinates.
SparseMatrix cochain_basis(const Trialgebra& t, const TriBimodule& v, std::size_t n) {
  const Subspace k = equivariant_block(t, v, n);
  const std::size_t trees = enumerate_trees(n).size();
  const std::size_t block = power_of(t.dim, n) * v.dim;
  SparseMatrix b(trees * block, trees * k.dim());
  for (std::size_t tr = 0; tr < trees; ++tr)
    for (std::size_t j = 0; j < k.dim(); ++j)
      for (std::size_t c = 0; c < block; ++c) b.add(tr * block + c, tr * k.dim() + j, k.basis()(j, c));
  b.compress();
  return b;
}

void require_collapsed(const Trialgebra& a) {
  a.validate_shape();
  if (!(a.left == a.right) || !(a.left == a.middle))
    throw Error(Errc::NotCollapsed, "the three products must coincide");
}

void require_collapsed(const TriBimodule& m) {
  m.validate_shape();
  if (!(m.lact[0] == m.lact[1]) || !(m.lact[0] == m.lact[2]) || !(m.ract[0] == m.ract[1]) ||
      !(m.ract[0] == m.ract[2]))
    throw Error(Errc::NotCollapsed, "the three left (and right) actions must coincide");
}

PlainCochain bha_self_unchecked(const Trialgebra& a, const PlainCochain& f) {
  const std::size_t n = f.degree, d = a.dim;
  const Matrix an = a.alpha.power(static_cast<unsigned>(n - 1));
  const Matrix bn = a.beta.power(static_cast<unsigned>(n - 1));
  const Tensor3& mul = a.left;
  PlainCochain out = PlainCochain::zero(n + 1, d, d);
  const std::size_t cells = power_of(d, n + 1);
  for (std::size_t idx = 0; idx < cells; ++idx) {
    const auto x = decode(idx, d, n + 1);
    std::vector<Vector> e(n + 1);
    for (std::size_t j = 0; j <= n; ++j) e[j] = unit_vector(d, x[j]);

    std::vector<Vector> tail(e.begin() + 1, e.end());
    Vector acc = mul.contract(an.apply(e[0]), evaluate(f, tail));
    for (std::size_t i = 1; i <= n; ++i) {
      std::vector<Vector> args;
      for (std::size_t j = 1; j < i; ++j) args.push_back(a.alpha.apply(e[j - 1]));
      args.push_back(mul.contract(e[i - 1], e[i]));
      for (std::size_t j = i + 2; j <= n + 1; ++j) args.push_back(a.beta.apply(e[j - 1]));
      const Vector term = evaluate(f, args);
      acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    std::vector<Vector> head(e.begin(), e.end() - 1);
    const Vector last = mul.contract(evaluate(f, head), bn.apply(e[n]));
    acc = (n % 2 == 1) ? acc + last : acc - last;
    for (std::size_t k = 0; k < d; ++k) out.values[idx * d + k] = acc[k];
  }
  return out;
}

PlainCochain bha_unchecked(const Trialgebra& a, const TriBimodule& m, const PlainCochain& g) {
  const std::size_t n = g.degree, d = a.dim, s = d + m.dim;
  const Trialgebra sp = semidirect_product_unchecked(a, m);

  PlainCochain ext = PlainCochain::zero(n, s, s);
  for (std::size_t idx = 0; idx < power_of(d, n); ++idx) {
    const std::size_t sidx = encode(decode(idx, d, n), s);
    for (std::size_t k = 0; k < m.dim; ++k) ext.values[sidx * s + d + k] = g.values[idx * m.dim + k];
  }
  const PlainCochain full = bha_self_unchecked(sp, ext);

  PlainCochain out = PlainCochain::zero(n + 1, d, m.dim);
  for (std::size_t idx = 0; idx < power_of(d, n + 1); ++idx) {
    const std::size_t sidx = encode(decode(idx, d, n + 1), s);
    for (std::size_t k = 0; k < m.dim; ++k) out.values[idx * m.dim + k] = full.values[sidx * s + d + k];
  }
  return out;
}

}  // namespace

PlainCochain PlainCochain::zero(std::size_t degree, std::size_t input_dim, std::size_t output_dim) {
  return {degree, input_dim, output_dim, Vector(power_of(input_dim, degree) * output_dim)};
}

Scalar& PlainCochain::at(const std::vector<std::size_t>& args, std::size_t k) {
  return values.at(encode(args, input_dim) * output_dim + k);
}

const Scalar& PlainCochain::at(const std::vector<std::size_t>& args, std::size_t k) const {
  return values.at(encode(args, input_dim) * output_dim + k);
}

Vector evaluate(const PlainCochain& f, const std::vector<Vector>& args) {
  if (args.size() != f.degree) throw Error(Errc::ShapeMismatch, "wrong number of cochain arguments");
  std::vector<SparseVec> sv;
  sv.reserve(args.size());
  for (const auto& a : args) {
    if (a.size() != f.input_dim) throw Error(Errc::ShapeMismatch, "cochain argument has the wrong length");
    sv.push_back(sparse(a));
  }
  std::vector<const SparseVec*> ptrs;
  for (const auto& s : sv) ptrs.push_back(&s);
  Vector out(f.output_dim);
  expand(ptrs, f.input_dim, [&](std::size_t idx, const Scalar& c) {
    for (std::size_t k = 0; k < f.output_dim; ++k) {
      const Scalar& x = f.values[idx * f.output_dim + k];
      if (sgn(x) != 0) out[k] += c * x;
    }
  });
  return out;
}

TreeCochain TreeCochain::zero(std::size_t degree, std::size_t input_dim, std::size_t output_dim) {
  return {degree, input_dim, output_dim, Vector(cochain_ambient_dim(degree, input_dim, output_dim))};
}

Scalar& TreeCochain::at(std::size_t tree, const std::vector<std::size_t>& args, std::size_t k) {
  return values.at(tree * block_size() + encode(args, input_dim) * output_dim + k);
}

const Scalar& TreeCochain::at(std::size_t tree, const std::vector<std::size_t>& args, std::size_t k) const {
  return values.at(tree * block_size() + encode(args, input_dim) * output_dim + k);
}

PlainCochain TreeCochain::component(std::size_t tree) const {
  const std::size_t b = block_size();
  PlainCochain p{degree, input_dim, output_dim, {}};
  p.values.assign(values.begin() + static_cast<std::ptrdiff_t>(tree * b),
                  values.begin() + static_cast<std::ptrdiff_t>((tree + 1) * b));
  return p;
}

std::size_t cochain_ambient_dim(std::size_t n, std::size_t t_dim, std::size_t v_dim) {
  return enumerate_trees(n).size() * power_of(t_dim, n) * v_dim;
}

Subspace equivariant_block(const Trialgebra& t, const TriBimodule& v, std::size_t n) {
  v.validate_shape(t);
  return kernel_basis(equivariance_constraints(t, v, n));
}

Subspace cochain_space(const Trialgebra& t, const TriBimodule& v, std::size_t n) {
  const Subspace k = equivariant_block(t, v, n);
  const std::size_t trees = enumerate_trees(n).size();
  const std::size_t block = power_of(t.dim, n) * v.dim;
  std::vector<Vector> basis;
  for (std::size_t tr = 0; tr < trees; ++tr)
    for (std::size_t j = 0; j < k.dim(); ++j) {
      Vector b(trees * block);
      for (std::size_t c = 0; c < block; ++c) b[tr * block + c] = k.basis()(j, c);
      basis.push_back(std::move(b));
    }
  return Subspace::span(trees * block, basis);
}

bool is_equivariant(const Trialgebra& t, const TriBimodule& v, const TreeCochain& f) {
  v.validate_shape(t);
  if (f.input_dim != t.dim || f.output_dim != v.dim || f.values.size() != cochain_ambient_dim(f.degree, t.dim, v.dim))
    throw Error(Errc::ShapeMismatch, "tree cochain does not match (T, V)");
  const Matrix c = equivariance_constraints(t, v, f.degree);
  const std::size_t block = f.block_size();
  for (std::size_t tr = 0; tr < enumerate_trees(f.degree).size(); ++tr)
    if (!block_equivariant(c, f.values, tr * block, block)) return false;
  return true;
}

bool is_equivariant(const Trialgebra& t, const TriBimodule& v, const PlainCochain& f) {
  v.validate_shape(t);
  if (f.input_dim != t.dim || f.output_dim != v.dim || f.values.size() != power_of(t.dim, f.degree) * v.dim)
    throw Error(Errc::ShapeMismatch, "plain cochain does not match (T, V)");
  return block_equivariant(equivariance_constraints(t, v, f.degree), f.values, 0, f.values.size());
}

SparseMatrix coboundary_matrix(const Trialgebra& t, const TriBimodule& v, std::size_t n,
                               const HochschildOptions& opts) {
  require_degree(n, opts);
  v.validate_shape(t);
  const std::size_t N = t.dim, m = v.dim;
  const auto& src = enumerate_trees(n);
  const auto& dst = enumerate_trees(n + 1);
  const std::size_t cells_in = power_of(N, n), cells_out = power_of(N, n + 1);
  SparseMatrix d(dst.size() * cells_out * m, src.size() * cells_in * m);

  const auto alpha_cols = sparse_columns(t.alpha);
  const auto beta_cols = sparse_columns(t.beta);
  const Matrix an = t.alpha.power(static_cast<unsigned>(n - 1));
  const Matrix bn = t.beta.power(static_cast<unsigned>(n - 1));

  std::array<std::vector<SparseVec>, 3> products;
  // act_left[op][x](k', k): coefficient of v_k' in α^{n-1}(e_x) * v_k; act_right likewise
  // for v_k * β^{n-1}(e_x).
  std::array<std::vector<Matrix>, 3> act_left, act_right;
  for (Op op : kAllOps) {
    const std::size_t o = index(op);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) products[o].push_back(sparse(t.product(op).fibre(a, b)));
    for (std::size_t x = 0; x < N; ++x) {
      Matrix l(m, m), r(m, m);
      for (std::size_t k = 0; k < m; ++k) {
        const Vector lv = v.left_action(op, an.col(x), unit_vector(m, k));
        const Vector rv = v.right_action(op, unit_vector(m, k), bn.col(x));
        for (std::size_t k2 = 0; k2 < m; ++k2) {
          l(k2, k) = lv[k2];
          r(k2, k) = rv[k2];
        }
      }
      act_left[o].push_back(std::move(l));
      act_right[o].push_back(std::move(r));
    }
  }

  for (std::size_t p = 0; p < dst.size(); ++p) {
    const PlanarTree& psi = dst[p];
    std::vector<std::size_t> face(n + 2);
    std::vector<Op> label(n + 2);
    for (std::size_t i = 0; i <= n + 1; ++i) {
      face[i] = tree_index(delete_leaf(psi, i));
      label[i] = op_label(psi, i, opts.convention);
    }
    for (std::size_t xi = 0; xi < cells_out; ++xi) {
      const auto x = decode(xi, N, n + 1);
      const std::size_t row = (p * cells_out + xi) * m;

      {
        const Matrix& l = act_left[index(label[0])][x[0]];
        const std::size_t col = (face[0] * cells_in + xi % cells_in) * m;
        for (std::size_t k2 = 0; k2 < m; ++k2)
          for (std::size_t k = 0; k < m; ++k) d.add(row + k2, col + k, l(k2, k));
      }

      for (std::size_t i = 1; i <= n; ++i) {
        std::vector<const SparseVec*> factors;
        for (std::size_t j = 1; j < i; ++j) factors.push_back(&alpha_cols[x[j - 1]]);
        factors.push_back(&products[index(label[i])][x[i - 1] * N + x[i]]);
        for (std::size_t j = i + 2; j <= n + 1; ++j) factors.push_back(&beta_cols[x[j - 1]]);
        const bool negative = i % 2 == 1;
        expand(factors, N, [&](std::size_t idx, const Scalar& c) {
          const std::size_t col = (face[i] * cells_in + idx) * m;
          const Scalar signed_c = negative ? Scalar(-c) : c;
          for (std::size_t k = 0; k < m; ++k) d.add(row + k, col + k, signed_c);
        });
      }

      {
        const Matrix& r = act_right[index(label[n + 1])][x[n]];
        const std::size_t col = (face[n + 1] * cells_in + xi / N) * m;
        const bool negative = (n + 1) % 2 == 1;
        for (std::size_t k2 = 0; k2 < m; ++k2)
          for (std::size_t k = 0; k < m; ++k) d.add(row + k2, col + k, negative ? Scalar(-r(k2, k)) : r(k2, k));
      }
    }
  }
  d.compress();
  return d;
}

TreeCochain delta_bht(const Trialgebra& t, const TriBimodule& v, const TreeCochain& f,
                      const HochschildOptions& opts) {
  require_degree(f.degree, opts);
  if (!is_equivariant(t, v, f)) throw Error(Errc::NotEquivariant, "input cochain is not in C^n");
  const SparseMatrix d = coboundary_matrix(t, v, f.degree, opts);
  TreeCochain out{f.degree + 1, t.dim, v.dim, d.apply(f.values)};
  if (!is_equivariant(t, v, out))
    throw Error(Errc::EquivarianceBroken, "coboundary left C^{n+1}; the algebra or module is invalid");
  return out;
}

TreeCochain delta_trias(const Trialgebra& t, const TriBimodule& v, const TreeCochain& f,
                        const HochschildOptions& opts) {
  v.validate_shape(t);
  if (!t.alpha.is_identity() || !t.beta.is_identity() || !v.alphaV.is_identity() || !v.betaV.is_identity())
    throw Error(Errc::NotClassical, "all structure maps must be the identity");
  return delta_bht(t, v, f, opts);
}

PlainCochain delta_bha_self(const Trialgebra& a, const PlainCochain& f) {
  require_collapsed(a);
  if (f.degree == 0) throw Error(Errc::IndexOutOfRange, "cochain degree must be at least 1");
  if (f.input_dim != a.dim || f.output_dim != a.dim || f.values.size() != power_of(a.dim, f.degree) * a.dim)
    throw Error(Errc::ShapeMismatch, "self-coefficient cochain does not match the algebra");
  if (!is_equivariant(a, adjoint_module(a), f)) throw Error(Errc::NotEquivariant, "input cochain is not equivariant");
  return bha_self_unchecked(a, f);
}

PlainCochain delta_bha(const Trialgebra& a, const TriBimodule& m, const PlainCochain& g) {
  require_collapsed(a);
  require_collapsed(m);
  m.validate_shape(a);
  if (g.degree == 0) throw Error(Errc::IndexOutOfRange, "cochain degree must be at least 1");
  if (!is_equivariant(a, m, g)) throw Error(Errc::NotEquivariant, "input cochain is not equivariant");
  return bha_unchecked(a, m, g);
}

Matrix bha_coboundary_matrix(const Trialgebra& a, const TriBimodule& m, std::size_t n) {
  require_collapsed(a);
  require_collapsed(m);
  m.validate_shape(a);
  if (n == 0) throw Error(Errc::IndexOutOfRange, "cochain degree must be at least 1");
  const std::size_t cols = power_of(a.dim, n) * m.dim;
  std::vector<Vector> columns;
  for (std::size_t c = 0; c < cols; ++c) {
    PlainCochain e = PlainCochain::zero(n, a.dim, m.dim);
    e.values[c] = 1;
    columns.push_back(bha_unchecked(a, m, e).values);
  }
  return Matrix::from_columns(power_of(a.dim, n + 1) * m.dim, columns);
}

std::size_t coboundary_rank(const Trialgebra& t, const TriBimodule& v, std::size_t n, const HochschildOptions& opts) {
  const SparseMatrix d = coboundary_matrix(t, v, n, opts);
  return rank(d * cochain_basis(t, v, n));
}

std::size_t cohomology_dim(const Trialgebra& t, const TriBimodule& v, std::size_t n, const HochschildOptions& opts) {
  require_degree(n, opts);
  const std::size_t dim_c = enumerate_trees(n).size() * equivariant_block(t, v, n).dim();
  const std::size_t kernel = dim_c - coboundary_rank(t, v, n, opts);
  const std::size_t image = n >= 2 ? coboundary_rank(t, v, n - 1, opts) : 0;
  return kernel - image;
}

std::vector<CohomologyRow> cohomology_table(const Trialgebra& t, const TriBimodule& v, std::size_t max_n,
                                            const HochschildOptions& opts) {
  require_degree(max_n, opts);
  std::vector<CohomologyRow> rows;
  std::size_t previous_rank = 0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    CohomologyRow r;
    r.degree = n;
    r.cochain_dim = enumerate_trees(n).size() * equivariant_block(t, v, n).dim();
    r.coboundary_rank = coboundary_rank(t, v, n, opts);
    r.cohomology_dim = r.cochain_dim - r.coboundary_rank - previous_rank;
    previous_rank = r.coboundary_rank;
    rows.push_back(r);
  }
  return rows;
}

std::string to_tsv(const std::vector<CohomologyRow>& rows) {
  std::ostringstream os;
  os << "degree\tdim_C\trank_delta\tdim_H\n";
  for (const auto& r : rows)
    os << r.degree << '\t' << r.cochain_dim << '\t' << r.coboundary_rank << '\t' << r.cohomology_dim << '\n';
  return os.str();
}

TreeCochain triple_to_cochain(const CocycleTriple& f, const TreeConvention& convention) {
  const std::size_t n = f.base_dim(), m = f.coefficient_dim();
  TreeCochain c = TreeCochain::zero(2, n, m);
  const std::size_t block = c.block_size();
  for (std::size_t t = 0; t < 3; ++t) {
    const auto& src = f[degree_two_op(t, convention)].data();
    std::copy(src.begin(), src.end(), c.values.begin() + static_cast<std::ptrdiff_t>(t * block));
  }
  return c;
}

CocycleTriple cochain_to_triple(const TreeCochain& f, const TreeConvention& convention) {
  if (f.degree != 2) throw Error(Errc::ShapeMismatch, "only degree-2 cochains correspond to triples");
  CocycleTriple out = CocycleTriple::zero(f.input_dim, f.output_dim);
  const std::size_t block = f.block_size();
  for (std::size_t t = 0; t < 3; ++t) {
    auto& dst = out[degree_two_op(t, convention)].data();
    std::copy(f.values.begin() + static_cast<std::ptrdiff_t>(t * block),
              f.values.begin() + static_cast<std::ptrdiff_t>((t + 1) * block), dst.begin());
  }
  return out;
}

Subspace tree_two_cocycles(const Trialgebra& t, const TriBimodule& v, const TreeConvention& convention) {
  HochschildOptions opts;
  opts.convention = convention;
  const SparseMatrix basis = cochain_basis(t, v, 2);
  const Matrix image = (coboundary_matrix(t, v, 2, opts) * basis).to_dense();
  const Matrix dense_basis = basis.to_dense();
  std::vector<Vector> triples;
  for (const Vector& c : kernel_basis(image).basis_vectors()) {
    TreeCochain f{2, t.dim, v.dim, dense_basis.apply(c)};
    triples.push_back(cochain_to_triple(f, convention).to_vector());
  }
  return Subspace::span(3 * t.dim * t.dim * v.dim, triples);
}

}  // namespace triaco

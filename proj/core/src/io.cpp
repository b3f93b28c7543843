#include "triaco/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "triaco/error.hpp"

namespace triaco {

using nlohmann::json;

namespace {

// One top-level key per line, values compact.
std::string layout(const json& j) {
  if (!j.is_object()) return j.dump() + "\n";
  std::string s = "{";
  bool first = true;
  for (const auto& [k, v] : j.items()) {
    s += first ? "\n  " : ",\n  ";
    s += json(k).dump() + ": " + v.dump();
    first = false;
  }
  return s + "\n}\n";
}

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(Errc::ParseError, (path.empty() ? std::string("/") : path) + ": " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte == 0 ? 0 : e.byte - 1, e.what());
  }
}

bool digits(std::string_view s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
}

Scalar scalar(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Scalar(mpz_class(std::to_string(j.get<std::uint64_t>())));
    return Scalar(mpz_class(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      bad(path, std::string(e.what()).substr(errc_name(e.code()).size() + 2));
    }
  }
  bad(path, "expected an integer or a \"p/q\" string");
}

json scalar_json(const Scalar& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return json(q.get_num().get_si());
  if (q.get_den() == 1) return json(q.get_num().get_str() + "/1");
  return json(q.get_str());
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) bad(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(path, "missing field \"" + key + "\"");
  return *it;
}

std::size_t count(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    bad(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

const json& array_of(const json& j, std::size_t len, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  if (j.size() != len) bad(path, "expected " + std::to_string(len) + " entries, found " + std::to_string(j.size()));
  return j;
}

Matrix matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  array_of(j, rows, path);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = path + "/" + std::to_string(r);
    array_of(j[r], cols, rp);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar(j[r][c], rp + "/" + std::to_string(c));
  }
  return m;
}

Matrix square_matrix(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return matrix(j, j.size(), j.size(), path);
}

Tensor3 tensor(const json& j, std::size_t d0, std::size_t d1, std::size_t d2, const std::string& path) {
  array_of(j, d0, path);
  Tensor3 t(d0, d1, d2);
  for (std::size_t i = 0; i < d0; ++i) {
    const Matrix m = matrix(j[i], d1, d2, path + "/" + std::to_string(i));
    for (std::size_t a = 0; a < d1; ++a)
      for (std::size_t b = 0; b < d2; ++b) t(i, a, b) = m(a, b);
  }
  return t;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json tensor_json(const Tensor3& t) {
  json out = json::array();
  for (std::size_t i = 0; i < t.dim0(); ++i) {
    json slab = json::array();
    for (std::size_t j = 0; j < t.dim1(); ++j) {
      json row = json::array();
      for (std::size_t k = 0; k < t.dim2(); ++k) row.push_back(scalar_json(t(i, j, k)));
      slab.push_back(std::move(row));
    }
    out.push_back(std::move(slab));
  }
  return out;
}

Trialgebra algebra_from(const json& j, const std::string& path) {
  Trialgebra t;
  t.dim = count(field(j, "dim", path), path + "/dim");
  const std::size_t n = t.dim;
  for (Op op : kAllOps) {
    const std::string key(op_name(op));
    t.product(op) = tensor(field(j, key, path), n, n, n, path + "/" + key);
  }
  t.alpha = matrix(field(j, "alpha", path), n, n, path + "/alpha");
  t.beta = matrix(field(j, "beta", path), n, n, path + "/beta");
  return t;
}

json algebra_json(const Trialgebra& t) {
  json j;
  j["dim"] = t.dim;
  for (Op op : kAllOps) j[std::string(op_name(op))] = tensor_json(t.product(op));
  j["alpha"] = matrix_json(t.alpha);
  j["beta"] = matrix_json(t.beta);
  return j;
}

ProductTriple triple_from(const json& j, std::size_t d0, std::size_t d1, std::size_t d2, const std::string& prefix,
                          const std::string& path) {
  ProductTriple out;
  for (Op op : kAllOps) {
    const std::string key = prefix + std::string(op_name(op));
    out[index(op)] = tensor(field(j, key, path), d0, d1, d2, path + "/" + key);
  }
  return out;
}

}  // namespace

Scalar parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw Error(Errc::ParseError, "rational string must have the form p/q");
  std::string_view p = text.substr(0, slash), q = text.substr(slash + 1);
  const bool neg = !p.empty() && p.front() == '-';
  if (neg) p.remove_prefix(1);
  if (!digits(p) || !digits(q)) throw Error(Errc::ParseError, "malformed rational \"" + std::string(text) + "\"");
  const mpz_class num{std::string(p)}, den{std::string(q)};
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  if (mpz_class(gcd(num, den)) != 1)
    throw Error(Errc::ParseError, "rational \"" + std::string(text) + "\" is not in lowest terms");
  return Scalar(neg ? mpz_class(-num) : num, den);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Trialgebra parse_algebra(std::string_view text) { return algebra_from(parse_json(text), ""); }

TriBimodule parse_module(std::string_view text) {
  const json j = parse_json(text);
  TriBimodule v;
  v.dim = count(field(j, "dim", ""), "/dim");
  const json& probe = field(j, "lact_left", "");
  if (!probe.is_array()) bad("/lact_left", "expected an array");
  v.algebra_dim = probe.size();
  const std::size_t n = v.algebra_dim, m = v.dim;
  const ProductTriple l = triple_from(j, n, m, m, "lact_", "");
  const ProductTriple r = triple_from(j, m, n, m, "ract_", "");
  for (std::size_t o = 0; o < 3; ++o) {
    v.lact[o] = l[o];
    v.ract[o] = r[o];
  }
  v.alphaV = matrix(field(j, "alphaV", ""), m, m, "/alphaV");
  v.betaV = matrix(field(j, "betaV", ""), m, m, "/betaV");
  return v;
}

CocycleTriple parse_cocycle(std::string_view text) {
  const json j = parse_json(text);
  const json& probe = field(j, "f_left", "");
  if (!probe.is_array() || probe.empty() || !probe[0].is_array() || probe[0].empty() || !probe[0][0].is_array())
    bad("/f_left", "expected an n×n×m array");
  const std::size_t n = probe.size(), m = probe[0][0].size();
  return CocycleTriple{triple_from(j, n, n, m, "f_", "")};
}

Matrix parse_matrix(std::string_view text) {
  const json j = parse_json(text);
  const json& body = j.is_object() ? field(j, "matrix", "") : j;
  const std::string path = j.is_object() ? "/matrix" : "";
  if (!body.is_array()) bad(path, "expected an array of rows");
  const std::size_t rows = body.size();
  const std::size_t cols = rows == 0 ? 0 : (body[0].is_array() ? body[0].size() : 0);
  return matrix(body, rows, cols, path);
}

TruncatedDeformation parse_deformation(std::string_view text, const std::filesystem::path& base_dir) {
  const json j = parse_json(text);
  TruncatedDeformation d;
  d.order = count(field(j, "order", ""), "/order");
  const json& base = field(j, "base", "");
  if (base.is_string())
    d.base = load_algebra(base_dir / base.get<std::string>());
  else
    d.base = algebra_from(base, "/base");
  const std::size_t n = d.base.dim;
  const json& terms = array_of(field(j, "terms", ""), d.order + 1, "/terms");
  for (std::size_t i = 0; i < terms.size(); ++i)
    d.terms.push_back(triple_from(terms[i], n, n, n, "", "/terms/" + std::to_string(i)));
  try {
    d.validate();
  } catch (const Error& e) {
    if (e.code() == Errc::BaseTermMismatch) bad("/terms/0", "must equal the base products");
    throw;
  }
  return d;
}

FormalAutomorphism parse_automorphism(std::string_view text) {
  const json j = parse_json(text);
  FormalAutomorphism phi;
  phi.order = count(field(j, "order", ""), "/order");
  const json& maps = array_of(field(j, "maps", ""), phi.order + 1, "/maps");
  for (std::size_t i = 0; i < maps.size(); ++i) phi.maps.push_back(square_matrix(maps[i], "/maps/" + std::to_string(i)));
  if (!phi.maps[0].is_identity()) bad("/maps/0", "must be the identity");
  for (const auto& m : phi.maps)
    if (m.rows() != phi.maps[0].rows()) bad("/maps", "all maps must have the same size");
  return phi;
}

std::string serialize(const Trialgebra& t) { return layout(algebra_json(t)); }

std::string serialize(const TriBimodule& v) {
  json j;
  j["dim"] = v.dim;
  for (Op op : kAllOps) {
    j["lact_" + std::string(op_name(op))] = tensor_json(v.lact[index(op)]);
    j["ract_" + std::string(op_name(op))] = tensor_json(v.ract[index(op)]);
  }
  j["alphaV"] = matrix_json(v.alphaV);
  j["betaV"] = matrix_json(v.betaV);
  return layout(j);
}

std::string serialize(const CocycleTriple& f) {
  json j;
  for (Op op : kAllOps) j["f_" + std::string(op_name(op))] = tensor_json(f[op]);
  return layout(j);
}

std::string serialize(const Matrix& m) { return layout(matrix_json(m)); }

std::string serialize(const TruncatedDeformation& d) {
  json j;
  j["order"] = d.order;
  j["base"] = algebra_json(d.base);
  j["terms"] = json::array();
  for (const auto& term : d.terms) {
    json t;
    for (Op op : kAllOps) t[std::string(op_name(op))] = tensor_json(term[index(op)]);
    j["terms"].push_back(std::move(t));
  }
  return layout(j);
}

std::string serialize(const FormalAutomorphism& phi) {
  json j;
  j["order"] = phi.order;
  j["maps"] = json::array();
  for (const auto& m : phi.maps) j["maps"].push_back(matrix_json(m));
  return layout(j);
}

Trialgebra load_algebra(const std::filesystem::path& path) { return parse_algebra(read_text_file(path)); }
TriBimodule load_module(const std::filesystem::path& path) { return parse_module(read_text_file(path)); }
CocycleTriple load_cocycle(const std::filesystem::path& path) { return parse_cocycle(read_text_file(path)); }
Matrix load_matrix(const std::filesystem::path& path) { return parse_matrix(read_text_file(path)); }

TruncatedDeformation load_deformation(const std::filesystem::path& path) {
  return parse_deformation(read_text_file(path), path.parent_path());
}

FormalAutomorphism load_automorphism(const std::filesystem::path& path) {
  return parse_automorphism(read_text_file(path));
}

}  // namespace triaco

#pragma once

// JSON file formats. Rationals are JSON integers or strings "p/q" with q > 0
// and gcd(|p|, q) = 1; nothing else is accepted.
//
// Malformed JSON raises triaco::ParseError with the byte offset; well-formed
// JSON with bad content raises Error(Errc::ParseError) naming the JSON path.

#include <filesystem>
#include <string>
#include <string_view>

#include "triaco/algebra.hpp"
#include "triaco/bimodule.hpp"
#include "triaco/coho2.hpp"
#include "triaco/deformation.hpp"
#include "triaco/derivation.hpp"

namespace triaco {

Scalar parse_rational(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);

Trialgebra parse_algebra(std::string_view json);
TriBimodule parse_module(std::string_view json);
CocycleTriple parse_cocycle(std::string_view json);
/// Either a bare [[q]] array or {"matrix": [[q]]}.
Matrix parse_matrix(std::string_view json);
/// "base" may be an inline algebra object or a path, resolved against base_dir.
TruncatedDeformation parse_deformation(std::string_view json, const std::filesystem::path& base_dir = {});
FormalAutomorphism parse_automorphism(std::string_view json);

std::string serialize(const Trialgebra& t);
std::string serialize(const TriBimodule& v);
std::string serialize(const CocycleTriple& f);
std::string serialize(const Matrix& m);
std::string serialize(const TruncatedDeformation& d);
std::string serialize(const FormalAutomorphism& phi);

Trialgebra load_algebra(const std::filesystem::path& path);
TriBimodule load_module(const std::filesystem::path& path);
CocycleTriple load_cocycle(const std::filesystem::path& path);
Matrix load_matrix(const std::filesystem::path& path);
TruncatedDeformation load_deformation(const std::filesystem::path& path);
FormalAutomorphism load_automorphism(const std::filesystem::path& path);

}  // namespace triaco

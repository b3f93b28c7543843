#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "triaco/linalg.hpp"

namespace triaco {

/// The three trialgebra products: Left is ⊣, Right is ⊢, Middle is ⊥.
enum class Op : std::uint8_t { Left = 0, Right = 1, Middle = 2 };

inline constexpr std::array<Op, 3> kAllOps{Op::Left, Op::Right, Op::Middle};

constexpr std::size_t index(Op op) noexcept { return static_cast<std::size_t>(op); }

/// "left" / "right" / "middle".
std::string_view op_name(Op op) noexcept;
/// "⊣" / "⊢" / "⊥".
std::string_view op_symbol(Op op) noexcept;

/// Dense d0×d1×d2 array of scalars, row-major in (i, j, k).
/// For structure constants, t(i, j, k) is the coefficient of the k-th output
/// basis vector in (i-th basis vector) * (j-th basis vector).
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2);

  std::array<std::size_t, 3> dims() const noexcept { return {d0_, d1_, d2_}; }
  std::size_t dim0() const noexcept { return d0_; }
  std::size_t dim1() const noexcept { return d1_; }
  std::size_t dim2() const noexcept { return d2_; }
  bool has_dims(std::size_t a, std::size_t b, std::size_t c) const noexcept {
    return d0_ == a && d1_ == b && d2_ == c;
  }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * d1_ + j) * d2_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * d1_ + j) * d2_ + k];
  }

  const std::vector<Scalar>& data() const noexcept { return data_; }
  std::vector<Scalar>& data() noexcept { return data_; }

  bool is_zero() const;

  /// Bilinear evaluation: Σ x_i y_j t(i, j, ·).
  Vector contract(const Vector& x, const Vector& y) const;
  /// The fibre t(i, j, ·).
  Vector fibre(std::size_t i, std::size_t j) const;

  friend bool operator==(const Tensor3& a, const Tensor3& b) = default;
  friend Tensor3 operator+(const Tensor3& a, const Tensor3& b);
  friend Tensor3 operator-(const Tensor3& a, const Tensor3& b);
  friend Tensor3 operator*(const Scalar& s, const Tensor3& t);

 private:
  std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace triaco

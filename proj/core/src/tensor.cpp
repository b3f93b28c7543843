#include "triaco/tensor.hpp"

#include "triaco/error.hpp"

namespace triaco {

std::string_view op_name(Op op) noexcept {
  switch (op) {
    case Op::Left: return "left";
    case Op::Right: return "right";
    case Op::Middle: return "middle";
  }
  return "?";
}

std::string_view op_symbol(Op op) noexcept {
  switch (op) {
    case Op::Left: return "⊣";
    case Op::Right: return "⊢";
    case Op::Middle: return "⊥";
  }
  return "?";
}

Tensor3::Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
    : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2) {}

bool Tensor3::is_zero() const { return triaco::is_zero(data_); }

Vector Tensor3::contract(const Vector& x, const Vector& y) const {
  if (x.size() != d0_ || y.size() != d1_) throw Error(Errc::ShapeMismatch, "tensor contraction operand size");
  Vector out(d2_);
  for (std::size_t i = 0; i < d0_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < d1_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < d2_; ++k) {
        const Scalar& c = (*this)(i, j, k);
        if (sgn(c) != 0) out[k] += xy * c;
      }
    }
  }
  return out;
}

Vector Tensor3::fibre(std::size_t i, std::size_t j) const {
  const auto first = data_.begin() + static_cast<std::ptrdiff_t>((i * d1_ + j) * d2_);
  return Vector(first, first + static_cast<std::ptrdiff_t>(d2_));
}

Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
  if (a.dims() != b.dims()) throw Error(Errc::ShapeMismatch, "tensor sum shape");
  Tensor3 r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

Tensor3 operator-(const Tensor3& a, const Tensor3& b) {
  if (a.dims() != b.dims()) throw Error(Errc::ShapeMismatch, "tensor difference shape");
  Tensor3 r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

Tensor3 operator*(const Scalar& s, const Tensor3& t) {
  Tensor3 r = t;
  for (auto& x : r.data_) x *= s;
  return r;
}

}  // namespace triaco

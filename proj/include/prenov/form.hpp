#pragma once

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>

#include "prenov/scalar.hpp"
#include "prenov/space.hpp"
#include "prenov/tensor.hpp"

namespace prenov {

/// A bilinear form as an exact matrix, optionally carrying the shift m of a
/// graded form ((B_i,B_j)=0 unless i+j+m=0).
class BilinearForm {
 public:
  BilinearForm() = default;
  BilinearForm(BasisSpace space, Matrix mat,
               std::optional<long> grading_shift = std::nullopt)
      : space_(std::move(space)), mat_(std::move(mat)), grading_shift_(grading_shift) {
    if (mat_.rows() != space_.dim() || mat_.cols() != space_.dim())
      throw std::invalid_argument("form matrix shape does not match space '" +
                                  space_.name() + "'");
  }

  static BilinearForm zero(const BasisSpace& space) {
    return BilinearForm(space, Matrix::Zero(space.dim(), space.dim()));
  }

  const BasisSpace& space() const { return space_; }
  const Matrix& matrix() const { return mat_; }
  std::optional<long> grading_shift() const { return grading_shift_; }

  const Rational& value(int i, int j) const { return mat_(i, j); }

  Rational apply(const Tensor1& u, const Tensor1& v) const {
    Rational r(0);
    for (const auto& [ku, cu] : u.entries())
      for (const auto& [kv, cv] : v.entries()) r += cu * cv * mat_(ku[0], kv[0]);
    return r;
  }

  bool symmetric() const { return mat_ == Matrix(mat_.transpose()); }
  bool skew_symmetric() const { return mat_ == Matrix(-mat_.transpose()); }

  bool nondegenerate() const {
    return Eigen::FullPivLU<Matrix>(mat_).rank() == space_.dim();
  }

  /// Exact inverse; throws std::domain_error on a degenerate form.
  Matrix inverse() const {
    Eigen::FullPivLU<Matrix> lu(mat_);
    if (lu.rank() != space_.dim())
      throw std::domain_error("degenerate form on '" + space_.name() + "'");
    return lu.inverse();
  }

 private:
  BasisSpace space_;
  Matrix mat_;
  std::optional<long> grading_shift_;
};

/// Product of pairwise form values, extended bilinearly:
/// (a1⊗…⊗ak, b1⊗…⊗bk) = Π (aℓ, bℓ).
template <int Arity>
Rational multi_pair(const BilinearForm& form, const SparseTensor<Arity>& t1,
                    const SparseTensor<Arity>& t2) {
  Rational r(0);
  for (const auto& [k1, c1] : t1.entries())
    for (const auto& [k2, c2] : t2.entries()) {
      Rational p = c1 * c2;
      for (int i = 0; i < Arity; ++i)
        p *= form.value(k1[static_cast<size_t>(i)], k2[static_cast<size_t>(i)]);
      r += p;
    }
  return r;
}

}  // namespace prenov

#pragma once

#include "prenov/form.hpp"
#include "prenov/op.hpp"

namespace prenov {

/// A product on A⊗B with the product basis ordered lexicographically by
/// (left index, right index).
struct TensorAlgebra {
  BasisSpace left;
  BasisSpace right;
  BilinearOp circ;  // over product_space(left, right)

  int flatten(int i, int p) const { return i * right.dim() + p; }
  std::pair<int, int> unflatten(int k) const {
    return {k / right.dim(), k % right.dim()};
  }
};

/// a∘b := a◁b + a▷b (pointwise sum of structure constants).
BilinearOp associated_novikov(const BilinearOp& lhd, const BilinearOp& rhd);

/// [a,b] := a∘b − b∘a.
BilinearOp sub_adjacent_lie(const BilinearOp& circ);

/// (a⊗x)∘(b⊗y) := a▷b ⊗ x⊢y − b◁a ⊗ y⊣x.
TensorAlgebra induced_pre_lie(const PreNovikovOps& a, const BilinearOp& dashv,
                              const BilinearOp& vdash);

/// ω_p(a⊗x, b⊗y) := ω(a,b)(x,y), i.e. the Kronecker product of the matrices.
BilinearForm product_form(const BilinearForm& omega, const BilinearForm& form);

/// Unique (◁,▷) with ω(a▷b,c) = ω(a∘c+c∘a,b) and ω(a◁b,c) = ω(a,c∘b).
/// Requires ω nondegenerate; verifies ◁+▷ = ∘ and throws on inconsistency.
PreNovikovOps compatible_pre_novikov_from_qf(const BilinearOp& circ,
                                             const BilinearForm& omega);

/// Unique ∘ with ω_p(x∘y,z) = −ω_p(y,[x,z]); its commutator is the input
/// bracket (verified, throws on inconsistency). Requires ω_p nondegenerate.
BilinearOp compatible_pre_lie_from_symplectic(const BilinearOp& bracket,
                                              const BilinearForm& omega_p);

/// The coproduct dual to ⋄ under a symmetric nondegenerate form:
/// (Δ(x), y⊗z) = (x, y⋄z).
CoOp coproduct_from_form(const BilinearOp& diamond, const BilinearForm& form);

/// δ(a⊗x) = β(a)•Δ_β(x) − τα(a)•τΔ_α(x) on the product space.
CoOp coalgebra_tensor_delta(const CoOp& alpha, const CoOp& beta, const CoOp& delta_alpha,
                            const CoOp& delta_beta);

}  // namespace prenov

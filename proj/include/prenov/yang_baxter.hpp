#pragma once

#include <optional>
#include <vector>

#include "prenov/affine.hpp"
#include "prenov/form.hpp"
#include "prenov/op.hpp"

namespace prenov {

/// An element r ∈ A⊗A with its symmetry recorded (flag ⇔ flip(r) = r).
struct RTensor {
  Tensor2 t;
  bool symmetric = false;

  static RTensor of(Tensor2 tensor) {
    RTensor r;
    r.symmetric = (flip(tensor) == tensor);
    r.t = std::move(tensor);
    return r;
  }
};

struct DualBasisPair {
  std::vector<Tensor1> basis;  // e_p
  std::vector<Tensor1> dual;   // f_p with (e_p, f_q) = δ_pq
};

/// r₁₂∘r₁₃ + r₂₃⊙r₁₃ − r₁₂◁r₂₃ with a⊙b := a▷b + b◁a; zero iff r solves the
/// Yang-Baxter equation of the pre-Novikov algebra.
Tensor3 pnybe_residual(const PreNovikovOps& ops, const Tensor2& r);

/// −r₁₂∘r₁₃ + r₁₂∘r₂₃ + [r₁₃,r₂₃] over a finite pre-Lie algebra.
Tensor3 s_equation_residual(const BilinearOp& circ, const Tensor2& r);

/// Dual basis of a symmetric nondegenerate form; with a grading the blocks
/// (i, −i−m) are inverted separately (the result agrees with the full
/// inverse, the block structure is validated as a side effect).
DualBasisPair dual_basis(const BilinearForm& form,
                         const std::optional<Grading>& grading = std::nullopt);

/// r_L := Σ_p Σ_α (x_α⊗e_p)⊗(y_α⊗f_p) on A⊗B, flattened lexicographically.
Tensor2 lift_r_finite(const Tensor2& r, const BilinearForm& form);

/// r_L = Σ_i Σ_α x_α tⁱ ⊗ y_α t^{−i−1}, truncated to exponents in the window.
AffineTensor2 lift_r_laurent(const Tensor2& r, const GradedWindow& w);

/// A⊗A⊗A coefficient of the S-equation residual of the Laurent lift at
/// exponent triple (p,q,s); nonzero only when p+q+s = −3, and exact because
/// the exponents pin the contributing lift indices.
Tensor3 affine_s_equation_component(const PreNovikovOps& ops, const Tensor2& r, long p,
                                    long q, long s);

/// The component at exponents (0,−1,−2); for symmetric r it vanishes iff r
/// solves the Yang-Baxter equation.
inline Tensor3 affine_s_equation_anchor(const PreNovikovOps& ops, const Tensor2& r) {
  return affine_s_equation_component(ops, r, 0, -1, -2);
}

/// Coboundary cooperations from a symmetric solution:
///   α(a) = (L∘(a)⊗id + id⊗(L▷+R◁)(a))τr,
///   β(a) = −(L▷(a)⊗id + id⊗(L∘+R∘)(a))r.
PreNovikovCoops coboundary_alpha_beta(const PreNovikovOps& ops, const Tensor2& r);

/// δ(a) = (L∘(a)⊗id + id⊗(L∘(a)−R∘(a)))r on a finite pre-Lie algebra.
CoOp coboundary_delta(const BilinearOp& circ, const Tensor2& r);

struct SearchOptions {
  long budget = 1'000'000;  // max candidates enumerated
};

/// Exhaustive search for symmetric solutions with entries drawn from a finite
/// coefficient set, optionally restricted to a support of basis pairs.
/// Results are certified by the exact residual and ordered lexicographically
/// by their coefficient vectors. Throws when the grid exceeds the budget.
std::vector<RTensor> search_pnybe(const PreNovikovOps& ops,
                                  const std::vector<Rational>& coefficient_set,
                                  const std::vector<std::pair<int, int>>& support,
                                  const SearchOptions& opts = {});

/// Full support helper: all pairs (i,j), i ≤ j.
std::vector<std::pair<int, int>> full_support(int dim);

}  // namespace prenov

#pragma once

#include "prenov/check.hpp"
#include "prenov/form.hpp"
#include "prenov/op.hpp"

namespace prenov {

// Residual-based checkers. Each one walks every basis tuple, computes the
// identity's residual exactly and reports PASS or witnesses. Axiom ids follow
// the equation tags used throughout the reports (pN-1..4, e18/e19, RN-di*,
// cob1..4, qn, t11/t12/t13, Nov-qua, lfd1..8, ...).

CheckReport check_pre_lie(const BilinearOp& circ, const CheckOptions& opts = {});
CheckReport check_novikov(const BilinearOp& circ, const CheckOptions& opts = {});
CheckReport check_right_novikov(const BilinearOp& diamond, const CheckOptions& opts = {});
CheckReport check_right_novikov_dialgebra(const BilinearOp& dashv, const BilinearOp& vdash,
                                          const CheckOptions& opts = {});
CheckReport check_pre_novikov(const BilinearOp& lhd, const BilinearOp& rhd,
                              const CheckOptions& opts = {});
CheckReport check_pre_novikov_coalgebra(const CoOp& alpha, const CoOp& beta,
                                        const CheckOptions& opts = {});
CheckReport check_right_novikov_coalgebra(const CoOp& delta, const CheckOptions& opts = {});
CheckReport check_right_novikov_co_dialgebra(const CoOp& delta_alpha, const CoOp& delta_beta,
                                             const CheckOptions& opts = {});
CheckReport check_pre_lie_coalgebra(const CoOp& delta, const CheckOptions& opts = {});
CheckReport check_jacobi(const BilinearOp& bracket, const CheckOptions& opts = {});

CheckReport check_quasi_frobenius(const BilinearOp& circ, const BilinearForm& omega,
                                  const CheckOptions& opts = {});
CheckReport check_quadratic_pre_novikov(const BilinearOp& lhd, const BilinearOp& rhd,
                                        const BilinearForm& omega,
                                        const CheckOptions& opts = {});
CheckReport check_quadratic_pre_lie(const BilinearOp& circ, const BilinearForm& omega_p,
                                    const CheckOptions& opts = {});
CheckReport check_quadratic_right_novikov(const BilinearOp& diamond, const BilinearForm& form,
                                          const CheckOptions& opts = {});
CheckReport check_graded_form(const BilinearForm& form, const Grading& grading,
                              const CheckOptions& opts = {});

/// The obstruction to the product form ω(a,b)(x,y) making the induced product
/// on A⊗B quadratic pre-Lie: symmetry of (·,·) plus a four-part sum paired
/// against ω(b∘c,a), ω(c∘b,a), ω(a∘c,b), ω(c∘a,b). Residual zero for all
/// tuples iff the product form works.
CheckReport quadratic_tensor_obstruction(const BilinearOp& lhd, const BilinearOp& rhd,
                                         const BilinearForm& omega, const BilinearOp& dashv,
                                         const BilinearOp& vdash, const BilinearForm& form,
                                         const CheckOptions& opts = {});

}  // namespace prenov

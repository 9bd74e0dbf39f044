#include "prenov/constructions.hpp"

#include <Eigen/Dense>

namespace prenov {

BilinearOp associated_novikov(const BilinearOp& lhd, const BilinearOp& rhd) {
  return lhd + rhd;
}

BilinearOp sub_adjacent_lie(const BilinearOp& circ) {
  BilinearOp br(circ.space());
  for (const auto& [k, c] : circ.constants()) {
    br.add(k[0], k[1], k[2], c);
    br.add(k[1], k[0], k[2], -c);
  }
  return br;
}

TensorAlgebra induced_pre_lie(const PreNovikovOps& a, const BilinearOp& dashv,
                              const BilinearOp& vdash) {
  const BasisSpace& A = a.lhd.space();
  const BasisSpace& B = vdash.space();
  if (dashv.space().dim() != B.dim())
    throw std::invalid_argument("dimension mismatch between ⊣ and ⊢");
  TensorAlgebra t{A, B, BilinearOp(product_space(A, B))};
  const int db = B.dim();
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      const Tensor1 rr = a.rhd.of_basis(i, j);   // a▷b
      const Tensor1 ll = a.lhd.of_basis(j, i);   // b◁a
      if (rr.zero() && ll.zero()) continue;
      for (int p = 0; p < db; ++p)
        for (int q = 0; q < db; ++q) {
          const Tensor1 vp = vdash.of_basis(p, q);
          const Tensor1 dp = dashv.of_basis(q, p);
          for (const auto& [ka, ca] : rr.entries())
            for (const auto& [kb, cb] : vp.entries())
              t.circ.add(i * db + p, j * db + q, ka[0] * db + kb[0], ca * cb);
          for (const auto& [ka, ca] : ll.entries())
            for (const auto& [kb, cb] : dp.entries())
              t.circ.add(i * db + p, j * db + q, ka[0] * db + kb[0], -ca * cb);
        }
    }
  return t;
}

BilinearForm product_form(const BilinearForm& omega, const BilinearForm& form) {
  const int da = omega.space().dim();
  const int db = form.space().dim();
  Matrix m(da * db, da * db);
  for (int i = 0; i < da; ++i)
    for (int p = 0; p < db; ++p)
      for (int j = 0; j < da; ++j)
        for (int q = 0; q < db; ++q)
          m(i * db + p, j * db + q) = omega.value(i, j) * form.value(p, q);
  std::optional<long> shift;
  if (omega.grading_shift() && form.grading_shift())
    shift = *omega.grading_shift() + *form.grading_shift();
  return BilinearForm(product_space(omega.space(), form.space()), std::move(m), shift);
}

namespace {

/// Solves ω(w, e_c) = rhs_c for w, using ω(w,c) = (Mᵀ w)_c.
Tensor1 solve_against_form(const Matrix& inv_t, const Vector& rhs) {
  Vector w = inv_t * rhs;
  Tensor1 out;
  for (int i = 0; i < w.size(); ++i) out.add({static_cast<int>(i)}, w(i));
  return out;
}

}  // namespace

PreNovikovOps compatible_pre_novikov_from_qf(const BilinearOp& circ,
                                             const BilinearForm& omega) {
  const BasisSpace& s = circ.space();
  const int n = s.dim();
  const Matrix inv = omega.inverse();  // throws std::domain_error when degenerate
  const Matrix inv_t = inv.transpose();
  PreNovikovOps ops{BilinearOp(s), BilinearOp(s)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vector rhs_r(n), rhs_l(n);
      for (int c = 0; c < n; ++c) {
        rhs_r(c) = omega.apply(circ.of_basis(a, c) + circ.of_basis(c, a), basis_vec(b));
        rhs_l(c) = omega.apply(basis_vec(a), circ.of_basis(c, b));
      }
      for (const auto& [k, v] : solve_against_form(inv_t, rhs_r).entries())
        ops.rhd.add(a, b, k[0], v);
      for (const auto& [k, v] : solve_against_form(inv_t, rhs_l).entries())
        ops.lhd.add(a, b, k[0], v);
    }
  if (!(ops.lhd + ops.rhd).same_constants(circ))
    throw std::domain_error("pairing solution does not sum back to the Novikov product");
  return ops;
}

BilinearOp compatible_pre_lie_from_symplectic(const BilinearOp& bracket,
                                              const BilinearForm& omega_p) {
  const BasisSpace& s = bracket.space();
  const int n = s.dim();
  const Matrix inv_t = Matrix(omega_p.inverse().transpose());
  BilinearOp circ(s);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Vector rhs(n);
      for (int z = 0; z < n; ++z)
        rhs(z) = -omega_p.apply(basis_vec(y), bracket.of_basis(x, z));
      for (const auto& [k, v] : solve_against_form(inv_t, rhs).entries())
        circ.add(x, y, k[0], v);
    }
  if (!sub_adjacent_lie(circ).same_constants(bracket))
    throw std::domain_error("pairing solution's commutator differs from the bracket");
  return circ;
}

CoOp coproduct_from_form(const BilinearOp& diamond, const BilinearForm& form) {
  const BasisSpace& s = diamond.space();
  const int n = s.dim();
  if (!form.symmetric()) throw std::invalid_argument("coproduct needs a symmetric form");
  const Matrix inv = form.inverse();
  const Matrix inv_t = inv.transpose();
  CoOp delta(s);
  for (int x = 0; x < n; ++x) {
    Matrix rhs(n, n);
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        rhs(y, z) = form.apply(basis_vec(x), diamond.of_basis(y, z));
    Matrix d = inv_t * rhs * inv;  // (Δ(x), y⊗z) = Σ d_{jk} M_{jy} M_{kz}
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (d(j, k) != 0) delta.add(x, j, k, d(j, k));
  }
  return delta;
}

CoOp coalgebra_tensor_delta(const CoOp& alpha, const CoOp& beta, const CoOp& delta_alpha,
                            const CoOp& delta_beta) {
  const BasisSpace& A = alpha.space();
  const BasisSpace& B = delta_alpha.space();
  const int db = B.dim();
  CoOp delta(product_space(A, B));
  for (int a = 0; a < A.dim(); ++a)
    for (int x = 0; x < db; ++x) {
      Tensor2 img = bullet<2>(beta.image(a), delta_beta.image(x), db) -
                    bullet<2>(flip(alpha.image(a)), flip(delta_alpha.image(x)), db);
      delta.add_image(a * db + x, img);
    }
  return delta;
}

}  // namespace prenov

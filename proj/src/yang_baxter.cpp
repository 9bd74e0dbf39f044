#include "prenov/yang_baxter.hpp"

#include <Eigen/Dense>

namespace prenov {

Tensor3 pnybe_residual(const PreNovikovOps& ops, const Tensor2& r) {
  const BilinearOp circ = ops.circ();
  BilinearOp odot = ops.rhd;  // a⊙b := a▷b + b◁a
  for (const auto& [k, c] : ops.lhd.constants()) odot.add(k[1], k[0], k[2], c);
  return slot_product(circ, r, r, 12, 13) + slot_product(odot, r, r, 23, 13) -
         slot_product(ops.lhd, r, r, 12, 23);
}

Tensor3 s_equation_residual(const BilinearOp& circ, const Tensor2& r) {
  Tensor3 bracket = slot_product(circ, r, r, 13, 23) - slot_product(circ, r, r, 23, 13);
  return -Rational(1) * slot_product(circ, r, r, 12, 13) +
         slot_product(circ, r, r, 12, 23) + bracket;
}

DualBasisPair dual_basis(const BilinearForm& form, const std::optional<Grading>& grading) {
  const int n = form.space().dim();
  if (!form.symmetric())
    throw std::invalid_argument("dual basis needs a symmetric form");
  DualBasisPair out;
  out.basis.reserve(static_cast<size_t>(n));
  out.dual.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.basis.push_back(basis_vec(i));
  if (!grading) {
    const Matrix inv = form.inverse();
    // (e_p, f_q) = δ_pq with f_q = Σ_k inv(k,q) e_k
    for (int q = 0; q < n; ++q) {
      Tensor1 f;
      for (int k = 0; k < n; ++k) f.add({k}, inv(k, q));
      out.dual[static_cast<size_t>(q)] = f;
    }
    return out;
  }
  // Blockwise per degree pair (d, −d−m).
  if (!form.grading_shift())
    throw std::invalid_argument("graded dual basis needs a declared shift m");
  const long m = *form.grading_shift();
  std::map<long, std::vector<int>> slots;
  for (int i = 0; i < n; ++i) slots[grading->degree(i)].push_back(i);
  std::vector<bool> done(static_cast<size_t>(n), false);
  for (const auto& [d, rows] : slots) {
    auto it = slots.find(-d - m);
    if (it == slots.end())
      throw std::domain_error("graded form degenerate: no partner block for degree " +
                              std::to_string(d));
    const auto& cols = it->second;
    if (cols.size() != rows.size())
      throw std::domain_error("graded form degenerate: block shape mismatch at degree " +
                              std::to_string(d));
    const int bn = static_cast<int>(rows.size());
    Matrix block(bn, bn);
    for (int i = 0; i < bn; ++i)
      for (int j = 0; j < bn; ++j)
        block(i, j) = form.value(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]);
    Eigen::FullPivLU<Matrix> lu(block);
    if (lu.rank() != bn)
      throw std::domain_error("graded form degenerate at degree " + std::to_string(d));
    const Matrix inv = lu.inverse();
    // f_{rows[q]} = Σ_k inv(k,q) e_{cols[k]} satisfies (e_rows[p], f_rows[q]) = δ_pq;
    // pairings against other degrees vanish by gradedness.
    for (int q = 0; q < bn; ++q) {
      Tensor1 f;
      for (int k = 0; k < bn; ++k) f.add({cols[static_cast<size_t>(k)]}, inv(k, q));
      out.dual[static_cast<size_t>(rows[static_cast<size_t>(q)])] = f;
      done[static_cast<size_t>(rows[static_cast<size_t>(q)])] = true;
    }
  }
  for (bool b : done)
    if (!b) throw std::domain_error("graded dual basis left a slot uncovered");
  return out;
}

Tensor2 lift_r_finite(const Tensor2& r, const BilinearForm& form) {
  const DualBasisPair db = dual_basis(form);
  const int nb = form.space().dim();
  Tensor2 out;
  for (const auto& [k, c] : r.entries())
    for (int p = 0; p < nb; ++p)
      for (const auto& [kf, cf] : db.dual[static_cast<size_t>(p)].entries())
        out.add({k[0] * nb + p, k[1] * nb + kf[0]}, c * cf);
  return out;
}

AffineTensor2 lift_r_laurent(const Tensor2& r, const GradedWindow& w) {
  AffineTensor2 out;
  for (long i = w.lo; i <= w.hi; ++i) {
    const long j = -i - 1;
    if (!w.contains(j)) continue;
    for (const auto& [k, c] : r.entries()) out.add(k[0], i, k[1], j, c);
  }
  return out;
}

Tensor3 affine_s_equation_component(const PreNovikovOps& ops, const Tensor2& r, long p,
                                    long q, long s) {
  Tensor3 out;
  if (p + q + s != -3) return out;
  const BilinearOp& L = ops.lhd;
  const BilinearOp& R = ops.rhd;
  for (const auto& [ka, ca] : r.entries())
    for (const auto& [kb, cb] : r.entries()) {
      const Rational c = ca * cb;
      const int xa = ka[0], ya = ka[1], xb = kb[0], yb = kb[1];
      {
        // −r₁₂∘r₁₃ at (t^{i+j−1}, t^{−i−1}, t^{−j−1}); i = −q−1, j = −s−1
        const long i = -q - 1, j = -s - 1;
        Tensor1 first = Rational(j) * L.of_basis(xb, xa) - Rational(i) * R.of_basis(xa, xb);
        for (const auto& [kf, cf] : first.entries()) out.add({kf[0], ya, yb}, c * cf);
      }
      {
        // +r₁₂∘r₂₃ at (tⁱ, t^{j−i−2}, t^{−j−1}); i = p, j = −s−1
        const long i = p, j = -s - 1;
        Tensor1 mid =
            Rational(-(i + 1)) * R.of_basis(ya, xb) - Rational(j) * L.of_basis(xb, ya);
        for (const auto& [km, cm] : mid.entries()) out.add({xa, km[0], yb}, c * cm);
      }
      {
        // +[r₁₃,r₂₃] at (tⁱ, tʲ, t^{−i−j−3}); i = p, j = q
        const long i = p, j = q;
        Tensor1 last = Rational(-(i + 1)) * R.of_basis(ya, yb) +
                       Rational(j + 1) * L.of_basis(yb, ya) +
                       Rational(j + 1) * R.of_basis(yb, ya) -
                       Rational(i + 1) * L.of_basis(ya, yb);
        for (const auto& [kl, cl] : last.entries()) out.add({xa, xb, kl[0]}, c * cl);
      }
    }
  return out;
}

PreNovikovCoops coboundary_alpha_beta(const PreNovikovOps& ops, const Tensor2& r) {
  const BasisSpace& s = ops.lhd.space();
  const BilinearOp circ = ops.circ();
  PreNovikovCoops out{CoOp(s), CoOp(s)};
  const Tensor2 tau_r = flip(r);
  for (int a = 0; a < s.dim(); ++a) {
    const Tensor1 ea = basis_vec(a);
    // α(a) = (L∘(a)⊗id)τr + (id⊗(L▷+R◁)(a))τr
    Tensor2 alpha = apply_op_leg(circ, ea, true, tau_r, 0) +
                    apply_op_leg(ops.rhd, ea, true, tau_r, 1) +
                    apply_op_leg(ops.lhd, ea, false, tau_r, 1);
    out.alpha.add_image(a, alpha);
    // β(a) = −(L▷(a)⊗id)r − (id⊗(L∘+R∘)(a))r
    Tensor2 beta = -Rational(1) * apply_op_leg(ops.rhd, ea, true, r, 0) -
                   apply_op_leg(circ, ea, true, r, 1) - apply_op_leg(circ, ea, false, r, 1);
    out.beta.add_image(a, beta);
  }
  return out;
}

CoOp coboundary_delta(const BilinearOp& circ, const Tensor2& r) {
  const BasisSpace& s = circ.space();
  CoOp out(s);
  for (int a = 0; a < s.dim(); ++a) {
    const Tensor1 ea = basis_vec(a);
    Tensor2 img = apply_op_leg(circ, ea, true, r, 0) + apply_op_leg(circ, ea, true, r, 1) -
                  apply_op_leg(circ, ea, false, r, 1);
    out.add_image(a, img);
  }
  return out;
}

std::vector<std::pair<int, int>> full_support(int dim) {
  std::vector<std::pair<int, int>> s;
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) s.emplace_back(i, j);
  return s;
}

std::vector<RTensor> search_pnybe(const PreNovikovOps& ops,
                                  const std::vector<Rational>& coefficient_set,
                                  const std::vector<std::pair<int, int>>& support,
                                  const SearchOptions& opts) {
  // Normalize the support to upper-triangular pairs (a symmetric tensor is
  // determined by them) and deduplicate.
  std::vector<std::pair<int, int>> pairs;
  for (auto [i, j] : support) {
    if (i > j) std::swap(i, j);
    if (std::find(pairs.begin(), pairs.end(), std::pair{i, j}) == pairs.end())
      pairs.emplace_back(i, j);
  }
  std::sort(pairs.begin(), pairs.end());
  if (coefficient_set.empty()) throw std::invalid_argument("empty coefficient set");

  double total = 1;
  for (size_t k = 0; k < pairs.size(); ++k) {
    total *= static_cast<double>(coefficient_set.size());
    if (total > static_cast<double>(opts.budget))
      throw std::length_error("search budget exceeded");
  }

  std::vector<Rational> coeffs = coefficient_set;
  std::sort(coeffs.begin(), coeffs.end());
  coeffs.erase(std::unique(coeffs.begin(), coeffs.end()), coeffs.end());

  std::vector<RTensor> found;
  std::vector<size_t> idx(pairs.size(), 0);
  while (true) {
    Tensor2 cand;
    for (size_t k = 0; k < pairs.size(); ++k) {
      const Rational& c = coeffs[idx[k]];
      if (c == 0) continue;
      auto [i, j] = pairs[k];
      cand.add({i, j}, c);
      if (i != j) cand.add({j, i}, c);
    }
    if (pnybe_residual(ops, cand).zero()) found.push_back(RTensor::of(std::move(cand)));
    // Odometer increment, most significant pair first so the output order is
    // lexicographic in the coefficient vectors.
    size_t k = pairs.size();
    while (k > 0) {
      --k;
      if (++idx[k] < coeffs.size()) break;
      idx[k] = 0;
      if (k == 0) return found;
    }
    if (pairs.empty()) break;
  }
  return found;
}

}  // namespace prenov

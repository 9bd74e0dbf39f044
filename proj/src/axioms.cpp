#include "prenov/axioms.hpp"

namespace prenov {

namespace {

void vec_witness(CheckReport& rep, const CheckOptions& opts, const BasisSpace& s,
                 const std::string& axiom, std::vector<int> tuple, const Tensor1& residual) {
  rep.declare_axiom(axiom);
  if (residual.zero()) return;
  std::vector<std::string> labels;
  for (int i : tuple) labels.push_back(s.label(i));
  rep.add_witness(opts, Witness{axiom, std::move(labels), to_string(residual, s)});
}

void ten3_witness(CheckReport& rep, const CheckOptions& opts, const BasisSpace& s,
                  const std::string& axiom, std::vector<int> tuple, const Tensor3& residual) {
  rep.declare_axiom(axiom);
  if (residual.zero()) return;
  std::vector<std::string> labels;
  for (int i : tuple) labels.push_back(s.label(i));
  rep.add_witness(opts, Witness{axiom, std::move(labels), to_string(residual, s)});
}

void scalar_witness(CheckReport& rep, const CheckOptions& opts, const BasisSpace& s,
                    const std::string& axiom, std::vector<int> tuple, const Rational& residual) {
  rep.declare_axiom(axiom);
  if (residual == 0) return;
  std::vector<std::string> labels;
  for (int i : tuple) labels.push_back(s.label(i));
  rep.add_witness(opts, Witness{axiom, std::move(labels), rational_str(residual)});
}

void form_preconditions(CheckReport& rep, const CheckOptions& opts, const BilinearForm& f,
                        bool want_symmetric, const std::string& prefix) {
  const BasisSpace& s = f.space();
  const std::string shape_id = prefix + (want_symmetric ? "-sym" : "-skew");
  rep.declare_axiom(shape_id);
  rep.declare_axiom(prefix + "-nondeg");
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j <= i; ++j) {
      Rational r = want_symmetric ? Rational(f.value(i, j) - f.value(j, i))
                                  : Rational(f.value(i, j) + f.value(j, i));
      scalar_witness(rep, opts, s, shape_id, {i, j}, r);
    }
  if (!f.nondegenerate())
    rep.add_witness(opts, Witness{prefix + "-nondeg", {}, "det = 0"});
}

}  // namespace

CheckReport check_pre_lie(const BilinearOp& m, const CheckOptions& opts) {
  CheckReport rep;
  const BasisSpace& s = m.space();
  for (int a = 0; a < s.dim(); ++a)
    for (int b = 0; b < s.dim(); ++b)
      for (int c = 0; c < s.dim(); ++c) {
        Tensor1 ea = basis_vec(a), eb = basis_vec(b), ec = basis_vec(c);
        Tensor1 r = m.apply(m.of_basis(a, b), ec) - m.apply(ea, m.of_basis(b, c)) -
                    m.apply(m.of_basis(b, a), ec) + m.apply(eb, m.of_basis(a, c));
        vec_witness(rep, opts, s, "pre-Lie", {a, b, c}, r);
      }
  return rep;
}

CheckReport check_novikov(const BilinearOp& m, const CheckOptions& opts) {
  CheckReport rep = check_pre_lie(m, opts);
  const BasisSpace& s = m.space();
  for (int a = 0; a < s.dim(); ++a)
    for (int b = 0; b < s.dim(); ++b)
      for (int c = 0; c < s.dim(); ++c) {
        Tensor1 r = m.apply(m.of_basis(a, b), basis_vec(c)) -
                    m.apply(m.of_basis(a, c), basis_vec(b));
        vec_witness(rep, opts, s, "Nov", {a, b, c}, r);
      }
  return rep;
}

CheckReport check_right_novikov(const BilinearOp& d, const CheckOptions& opts) {
  CheckReport rep;
  const BasisSpace& s = d.space();
  for (int x = 0; x < s.dim(); ++x)
    for (int y = 0; y < s.dim(); ++y)
      for (int z = 0; z < s.dim(); ++z) {
        Tensor1 ex = basis_vec(x), ey = basis_vec(y), ez = basis_vec(z);
        Tensor1 r18 = d.apply(d.of_basis(x, y), ez) - d.apply(ex, d.of_basis(y, z)) -
                      d.apply(d.of_basis(x, z), ey) + d.apply(ex, d.of_basis(z, y));
        vec_witness(rep, opts, s, "e18", {x, y, z}, r18);
        Tensor1 r19 = d.apply(ex, d.of_basis(y, z)) - d.apply(ey, d.of_basis(x, z));
        vec_witness(rep, opts, s, "e19", {x, y, z}, r19);
      }
  return rep;
}

CheckReport check_right_novikov_dialgebra(const BilinearOp& dv, const BilinearOp& vd,
                                          const CheckOptions& opts) {
  CheckReport rep;
  const BasisSpace& s = vd.space();
  if (dv.space().dim() != s.dim())
    throw std::invalid_argument("dimension mismatch between ⊣ and ⊢");
  for (int x = 0; x < s.dim(); ++x)
    for (int y = 0; y < s.dim(); ++y)
      for (int z = 0; z < s.dim(); ++z) {
        Tensor1 ex = basis_vec(x), ey = basis_vec(y), ez = basis_vec(z);
        vec_witness(rep, opts, s, "RN-di1a", {x, y, z},
                    vd.apply(ex, vd.of_basis(y, z)) - vd.apply(ey, vd.of_basis(x, z)));
        vec_witness(rep, opts, s, "RN-di1b", {x, y, z},
                    vd.apply(ex, dv.of_basis(y, z)) - dv.apply(ey, dv.of_basis(x, z)));
        vec_witness(rep, opts, s, "RN-di2a", {x, y, z},
                    vd.apply(vd.of_basis(x, y) - dv.of_basis(x, y), ez));
        vec_witness(rep, opts, s, "RN-di2b", {x, y, z},
                    dv.apply(ex, vd.of_basis(y, z) - dv.of_basis(y, z)));
        vec_witness(rep, opts, s, "RN-di3", {x, y, z},
                    vd.apply(ex, vd.of_basis(y, z) - dv.of_basis(z, y)) -
                        vd.apply(vd.of_basis(x, y), ez) + dv.apply(vd.of_basis(x, z), ey));
        vec_witness(rep, opts, s, "RN-di4", {x, y, z},
                    dv.apply(ex, vd.of_basis(y, z) - dv.of_basis(z, y)) -
                        dv.apply(dv.of_basis(x, y), ez) + dv.apply(dv.of_basis(x, z), ey));
      }
  return rep;
}

CheckReport check_pre_novikov(const BilinearOp& lhd, const BilinearOp& rhd,
                              const CheckOptions& opts) {
  CheckReport rep;
  const BasisSpace& s = lhd.space();
  if (rhd.space().dim() != s.dim())
    throw std::invalid_argument("dimension mismatch between ◁ and ▷");
  const BilinearOp circ = lhd + rhd;
  for (int a = 0; a < s.dim(); ++a)
    for (int b = 0; b < s.dim(); ++b)
      for (int c = 0; c < s.dim(); ++c) {
        Tensor1 ea = basis_vec(a), eb = basis_vec(b), ec = basis_vec(c);
        vec_witness(rep, opts, s, "pN-1", {a, b, c},
                    rhd.apply(ea, rhd.of_basis(b, c)) - rhd.apply(circ.of_basis(a, b), ec) -
                        rhd.apply(eb, rhd.of_basis(a, c)) + rhd.apply(circ.of_basis(b, a), ec));
        vec_witness(rep, opts, s, "pN-2", {a, b, c},
                    rhd.apply(ea, lhd.of_basis(b, c)) - lhd.apply(rhd.of_basis(a, b), ec) -
                        lhd.apply(eb, circ.of_basis(a, c)) + lhd.apply(lhd.of_basis(b, a), ec));
        vec_witness(rep, opts, s, "pN-3", {a, b, c},
                    rhd.apply(circ.of_basis(a, b), ec) - lhd.apply(rhd.of_basis(a, c), eb));
        vec_witness(rep, opts, s, "pN-4", {a, b, c},
                    lhd.apply(lhd.of_basis(a, b), ec) - lhd.apply(lhd.of_basis(a, c), eb));
      }
  return rep;
}

CheckReport check_pre_novikov_coalgebra(const CoOp& alpha, const CoOp& beta,
                                        const CheckOptions& opts) {
  CheckReport rep;
  const BasisSpace& s = alpha.space();
  if (beta.space().dim() != s.dim())
    throw std::invalid_argument("dimension mismatch between α and β");
  for (int a = 0; a < s.dim(); ++a) {
    const Tensor2 aa = alpha.image(a);
    const Tensor2 ba = beta.image(a);
    Tensor3 cob1 = apply_coop_leg(alpha, aa, 0) + flip12(apply_coop_leg(alpha, ba, 1)) -
                   apply_coop_leg(alpha, aa, 1) - apply_coop_leg(beta, aa, 1) -
                   flip12(apply_coop_leg(beta, aa, 0));
    ten3_witness(rep, opts, s, "cob1", {a}, cob1);
    Tensor3 cob2 = apply_coop_leg(beta, ba, 1) +
                   flip12(apply_coop_leg(alpha, ba, 0) + apply_coop_leg(beta, ba, 0)) -
                   apply_coop_leg(alpha, ba, 0) - apply_coop_leg(beta, ba, 0) -
                   flip12(apply_coop_leg(beta, ba, 1));
    ten3_witness(rep, opts, s, "cob2", {a}, cob2);
    Tensor3 cob3 = flip23(apply_coop_leg(beta, aa, 0)) - apply_coop_leg(alpha, ba, 0) -
                   apply_coop_leg(beta, ba, 0);
    ten3_witness(rep, opts, s, "cob3", {a}, cob3);
    Tensor3 cob4 = flip23(apply_coop_leg(alpha, aa, 0)) - apply_coop_leg(alpha, aa, 0);
    ten3_witness(rep, opts, s, "cob4", {a}, cob4);
  }
  return rep;
}

CheckReport check_right_novikov_coalgebra(const CoOp& d, const CheckOptions& opts) {
  CheckReport rep;
  const BasisSpace& s = d.space();
  for (int x = 0; x < s.dim(); ++x) {
    const Tensor2 dx = d.image(x);
    const Tensor3 dd0 = apply_coop_leg(d, dx, 0);  // (Δ⊗id)Δ
    const Tensor3 dd1 = apply_coop_leg(d, dx, 1);  // (id⊗Δ)Δ
    ten3_witness(rep, opts, s, "top-Nov-Coalg-1", {x},
                 dd0 - flip23(dd0) - dd1 + flip23(dd1));
    ten3_witness(rep, opts, s, "top-Nov-Coalg-2", {x}, dd1 - flip12(dd1));
  }
  return rep;
}

CheckReport check_right_novikov_co_dialgebra(const CoOp& da, const CoOp& db,
                                             const CheckOptions& opts) {
  CheckReport rep;
  const BasisSpace& s = da.space();
  if (db.space().dim() != s.dim())
    throw std::invalid_argument("dimension mismatch between Δ_α and Δ_β");
  for (int x = 0; x < s.dim(); ++x) {
    const Tensor2 dax = da.image(x);
    const Tensor2 dbx = db.image(x);
    const Tensor3 b_b1 = apply_coop_leg(db, dbx, 1);   // (id⊗Δβ)Δβ
    const Tensor3 a_b1 = apply_coop_leg(da, dbx, 1);   // (id⊗Δα)Δβ
    const Tensor3 a_a1 = apply_coop_leg(da, dax, 1);   // (id⊗Δα)Δα
    const Tensor3 b_a1 = apply_coop_leg(db, dax, 1);   // (id⊗Δβ)Δα
    const Tensor3 b_b0 = apply_coop_leg(db, dbx, 0);   // (Δβ⊗id)Δβ
    const Tensor3 a_b0 = apply_coop_leg(da, dbx, 0);   // (Δα⊗id)Δβ
    const Tensor3 b_a0 = apply_coop_leg(db, dax, 0);   // (Δβ⊗id)Δα
    const Tensor3 a_a0 = apply_coop_leg(da, dax, 0);   // (Δα⊗id)Δα
    ten3_witness(rep, opts, s, "RNov-Codialg-1a", {x}, b_b1 - flip12(b_b1));
    ten3_witness(rep, opts, s, "RNov-Codialg-1b", {x}, a_b1 - flip12(a_a1));
    ten3_witness(rep, opts, s, "RNov-Codialg-2a", {x}, b_b0 - a_b0);
    ten3_witness(rep, opts, s, "RNov-Codialg-2b", {x}, b_a1 - a_a1);
    ten3_witness(rep, opts, s, "RNov-Codialg-3", {x},
                 b_b1 - flip23(a_b1) - b_b0 + flip23(b_a0));
    ten3_witness(rep, opts, s, "RNov-Codialg-4", {x},
                 b_a1 - flip23(a_a1) - a_a0 + flip23(a_a0));
  }
  return rep;
}

CheckReport check_pre_lie_coalgebra(const CoOp& d, const CheckOptions& opts) {
  CheckReport rep;
  const BasisSpace& s = d.space();
  for (int a = 0; a < s.dim(); ++a) {
    const Tensor2 da = d.image(a);
    const Tensor3 d1 = apply_coop_leg(d, da, 1);  // (id⊗δ)δ
    const Tensor3 d0 = apply_coop_leg(d, da, 0);  // (δ⊗id)δ
    ten3_witness(rep, opts, s, "co-pL", {a}, d1 - flip12(d1) - d0 + flip12(d0));
  }
  return rep;
}

CheckReport check_jacobi(const BilinearOp& br, const CheckOptions& opts) {
  CheckReport rep;
  const BasisSpace& s = br.space();
  for (int a = 0; a < s.dim(); ++a)
    for (int b = 0; b < s.dim(); ++b) {
      vec_witness(rep, opts, s, "antisym", {a, b},
                  br.of_basis(a, b) + br.of_basis(b, a));
      for (int c = 0; c < s.dim(); ++c) {
        Tensor1 r = br.apply(br.of_basis(a, b), basis_vec(c)) +
                    br.apply(br.of_basis(b, c), basis_vec(a)) +
                    br.apply(br.of_basis(c, a), basis_vec(b));
        vec_witness(rep, opts, s, "jacobi", {a, b, c}, r);
      }
    }
  return rep;
}

CheckReport check_quasi_frobenius(const BilinearOp& m, const BilinearForm& omega,
                                  const CheckOptions& opts) {
  CheckReport rep;
  const BasisSpace& s = m.space();
  if (omega.space().dim() != s.dim())
    throw std::invalid_argument("dimension mismatch between ∘ and ω");
  form_preconditions(rep, opts, omega, /*want_symmetric=*/false, "qn");
  for (int a = 0; a < s.dim(); ++a)
    for (int b = 0; b < s.dim(); ++b)
      for (int c = 0; c < s.dim(); ++c) {
        Rational r = omega.apply(m.of_basis(a, b), basis_vec(c)) -
                     omega.apply(m.of_basis(a, c) + m.of_basis(c, a), basis_vec(b)) +
                     omega.apply(m.of_basis(c, b), basis_vec(a));
        scalar_witness(rep, opts, s, "qn", {a, b, c}, r);
      }
  return rep;
}

CheckReport check_quadratic_pre_novikov(const BilinearOp& lhd, const BilinearOp& rhd,
                                        const BilinearForm& omega, const CheckOptions& opts) {
  CheckReport rep = check_pre_novikov(lhd, rhd, opts);
  const BasisSpace& s = lhd.space();
  form_preconditions(rep, opts, omega, /*want_symmetric=*/false, "quad-pN");
  const BilinearOp circ = lhd + rhd;
  for (int a = 0; a < s.dim(); ++a)
    for (int b = 0; b < s.dim(); ++b)
      for (int c = 0; c < s.dim(); ++c) {
        scalar_witness(rep, opts, s, "t11", {a, b, c},
                       omega.apply(rhd.of_basis(a, b), basis_vec(c)) -
                           omega.apply(circ.of_basis(a, c) + circ.of_basis(c, a), basis_vec(b)));
        scalar_witness(rep, opts, s, "t12", {a, b, c},
                       omega.apply(lhd.of_basis(a, b), basis_vec(c)) -
                           omega.apply(basis_vec(a), circ.of_basis(c, b)));
      }
  return rep;
}

CheckReport check_quadratic_pre_lie(const BilinearOp& m, const BilinearForm& omega_p,
                                    const CheckOptions& opts) {
  CheckReport rep = check_pre_lie(m, opts);
  const BasisSpace& s = m.space();
  form_preconditions(rep, opts, omega_p, /*want_symmetric=*/false, "quad-pL");
  for (int x = 0; x < s.dim(); ++x)
    for (int y = 0; y < s.dim(); ++y)
      for (int z = 0; z < s.dim(); ++z) {
        // ω_p(x∘y, z) = −ω_p(y, [x,z])
        Rational r = omega_p.apply(m.of_basis(x, y), basis_vec(z)) +
                     omega_p.apply(basis_vec(y), m.of_basis(x, z) - m.of_basis(z, x));
        scalar_witness(rep, opts, s, "t13", {x, y, z}, r);
      }
  return rep;
}

CheckReport check_quadratic_right_novikov(const BilinearOp& d, const BilinearForm& form,
                                          const CheckOptions& opts) {
  CheckReport rep = check_right_novikov(d, opts);
  const BasisSpace& s = d.space();
  form_preconditions(rep, opts, form, /*want_symmetric=*/true, "Nov-qua");
  for (int x = 0; x < s.dim(); ++x)
    for (int y = 0; y < s.dim(); ++y)
      for (int z = 0; z < s.dim(); ++z) {
        // (x⋄y, z) = −(x, y⋄z + z⋄y)
        Rational r = form.apply(d.of_basis(x, y), basis_vec(z)) +
                     form.apply(basis_vec(x), d.of_basis(y, z) + d.of_basis(z, y));
        scalar_witness(rep, opts, s, "Nov-qua", {x, y, z}, r);
      }
  return rep;
}

CheckReport check_graded_form(const BilinearForm& form, const Grading& grading,
                              const CheckOptions& opts) {
  CheckReport rep;
  rep.declare_axiom("quad");
  if (!form.grading_shift())
    throw std::invalid_argument("graded form check needs a declared shift m");
  const long m = *form.grading_shift();
  const BasisSpace& s = form.space();
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j) {
      if (form.value(i, j) == 0) continue;
      if (grading.degree(i) + grading.degree(j) + m != 0)
        rep.add_witness(opts, Witness{"quad",
                                      {s.label(i), s.label(j)},
                                      rational_str(form.value(i, j))});
    }
  return rep;
}

CheckReport quadratic_tensor_obstruction(const BilinearOp& lhd, const BilinearOp& rhd,
                                         const BilinearForm& omega, const BilinearOp& dv,
                                         const BilinearOp& vd, const BilinearForm& form,
                                         const CheckOptions& opts) {
  CheckReport rep;
  const BasisSpace& sa = lhd.space();
  const BasisSpace& sb = vd.space();
  form_preconditions(rep, opts, form, /*want_symmetric=*/true, "pro-q");
  const BilinearOp circ = lhd + rhd;
  for (int a = 0; a < sa.dim(); ++a)
    for (int b = 0; b < sa.dim(); ++b)
      for (int c = 0; c < sa.dim(); ++c) {
        const Rational w_bc_a = omega.apply(circ.of_basis(b, c), basis_vec(a));
        const Rational w_cb_a = omega.apply(circ.of_basis(c, b), basis_vec(a));
        const Rational w_ac_b = omega.apply(circ.of_basis(a, c), basis_vec(b));
        const Rational w_ca_b = omega.apply(circ.of_basis(c, a), basis_vec(b));
        if (w_bc_a == 0 && w_cb_a == 0 && w_ac_b == 0 && w_ca_b == 0) continue;
        for (int x = 0; x < sb.dim(); ++x)
          for (int y = 0; y < sb.dim(); ++y)
            for (int z = 0; z < sb.dim(); ++z) {
              Tensor1 ex = basis_vec(x), ey = basis_vec(y), ez = basis_vec(z);
              const Rational y_xvz = form.apply(ey, vd.of_basis(x, z));
              const Rational y_zdx = form.apply(ey, dv.of_basis(z, x));
              const Rational y_zvx = form.apply(ey, vd.of_basis(z, x));
              const Rational y_xdz = form.apply(ey, dv.of_basis(x, z));
              const Rational xy_z = form.apply(vd.of_basis(x, y), ez);
              const Rational ydx_z = form.apply(dv.of_basis(y, x), ez);
              Rational r = w_bc_a * (-y_xvz - y_zdx + y_zvx + y_xdz) +
                           w_cb_a * (-y_zdx + y_zvx) + w_ac_b * (xy_z - y_xvz) +
                           w_ca_b * (xy_z + ydx_z + y_zdx);
              if (r == 0) continue;
              rep.declare_axiom("pro-q");
              rep.add_witness(opts, Witness{"pro-q",
                                            {sa.label(a), sa.label(b), sa.label(c),
                                             sb.label(x), sb.label(y), sb.label(z)},
                                            rational_str(r)});
            }
      }
  rep.declare_axiom("pro-q");
  return rep;
}

}  // namespace prenov

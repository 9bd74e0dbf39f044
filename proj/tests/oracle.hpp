// Test-only helpers: deterministic random structures and independent
// brute-force oracles the implementation is checked against. Everything here
// expands tensors into explicit summand lists and works term by term, on
// purpose — it must not share evaluation machinery with the library paths it
// audits.
#pragma once

#include <random>
#include <vector>

#include "prenov/form.hpp"
#include "prenov/op.hpp"

namespace prenov::testing {

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}

  Rational small_rational(int lo = -3, int hi = 3, int max_den = 3) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
    Rational q(num(gen), den(gen));
    q.canonicalize();
    return q;
  }
  int index(int dim) {
    std::uniform_int_distribution<int> d(0, dim - 1);
    return d(gen);
  }
  bool chance(int one_in) {
    std::uniform_int_distribution<int> d(0, one_in - 1);
    return d(gen) == 0;
  }
};

inline Tensor1 random_vec(Rng& rng, int dim, int fill_one_in = 2) {
  Tensor1 t;
  for (int i = 0; i < dim; ++i)
    if (rng.chance(fill_one_in)) t.add({i}, rng.small_rational());
  return t;
}

inline Tensor2 random_ten2(Rng& rng, int dim, int fill_one_in = 3) {
  Tensor2 t;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (rng.chance(fill_one_in)) t.add({i, j}, rng.small_rational());
  return t;
}

inline BilinearOp random_op(Rng& rng, const BasisSpace& s, int fill_one_in = 4) {
  BilinearOp op(s);
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j)
      for (int k = 0; k < s.dim(); ++k)
        if (rng.chance(fill_one_in)) op.add(i, j, k, rng.small_rational());
  return op;
}

inline CoOp random_coop(Rng& rng, const BasisSpace& s, int fill_one_in = 4) {
  CoOp c(s);
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j)
      for (int k = 0; k < s.dim(); ++k)
        if (rng.chance(fill_one_in)) c.add(i, j, k, rng.small_rational());
  return c;
}

struct Summand2 {
  int a, b;
  Rational c;
};

inline std::vector<Summand2> summands(const Tensor2& t) {
  std::vector<Summand2> out;
  for (const auto& [k, c] : t.entries()) out.push_back({k[0], k[1], c});
  return out;
}

/// Brute-force slot products: expand both tensors into pure summands, take
/// the paper's four displayed conventions literally.
inline Tensor3 slot_product_oracle(const BilinearOp& m, const Tensor2& r, const Tensor2& s,
                                   int slot_r, int slot_s) {
  Tensor3 out;
  for (const auto& x : summands(r))
    for (const auto& y : summands(s)) {
      const Rational c = x.c * y.c;
      Tensor1 prod;
      if (slot_r == 12 && slot_s == 13) {
        prod = m.apply(basis_vec(x.a), basis_vec(y.a));
        for (const auto& [kp, cp] : prod.entries()) out.add({kp[0], x.b, y.b}, c * cp);
      } else if (slot_r == 13 && slot_s == 23) {
        prod = m.apply(basis_vec(x.b), basis_vec(y.b));
        for (const auto& [kp, cp] : prod.entries()) out.add({x.a, y.a, kp[0]}, c * cp);
      } else if (slot_r == 12 && slot_s == 23) {
        prod = m.apply(basis_vec(x.b), basis_vec(y.a));
        for (const auto& [kp, cp] : prod.entries()) out.add({x.a, kp[0], y.b}, c * cp);
      } else if (slot_r == 23 && slot_s == 13) {
        prod = m.apply(basis_vec(x.b), basis_vec(y.b));
        for (const auto& [kp, cp] : prod.entries()) out.add({y.a, x.a, kp[0]}, c * cp);
      }
    }
  return out;
}

/// Brute-force one-leg operator application, by summand expansion.
inline Tensor2 leg_oracle(const BilinearOp& m, const Tensor1& elem, bool elem_left,
                          const Tensor2& t, int leg) {
  Tensor2 out;
  for (const auto& x : summands(t)) {
    Tensor1 v = basis_vec(leg == 0 ? x.a : x.b);
    Tensor1 w = elem_left ? m.apply(elem, v) : m.apply(v, elem);
    for (const auto& [kw, cw] : w.entries()) {
      if (leg == 0)
        out.add({kw[0], x.b}, x.c * cw);
      else
        out.add({x.a, kw[0]}, x.c * cw);
    }
  }
  return out;
}

/// Independent transcription of the eight compatibility conditions, written
/// directly from their displayed form with the expansion helpers above.
/// Returns the residual (left side minus right side) at the basis pair (a,b).
inline Tensor2 lfd_oracle(int which, const PreNovikovOps& ops, const PreNovikovCoops& co,
                          int a, int b) {
  const BilinearOp circ = ops.lhd + ops.rhd;
  const Tensor1 ea = basis_vec(a), eb = basis_vec(b);
  auto al = [&](const Tensor1& v) { return co.alpha.apply(v); };
  auto be = [&](const Tensor1& v) { return co.beta.apply(v); };
  auto ta = [&](const Tensor1& v) { return flip(co.alpha.apply(v)); };
  auto tb = [&](const Tensor1& v) { return flip(co.beta.apply(v)); };
  auto L = [&](const BilinearOp& m, const Tensor1& e, const Tensor2& t, int leg) {
    return leg_oracle(m, e, true, t, leg);
  };
  auto R = [&](const BilinearOp& m, const Tensor1& e, const Tensor2& t, int leg) {
    return leg_oracle(m, e, false, t, leg);
  };
  const Tensor1 ab = circ.apply(ea, eb), ba = circ.apply(eb, ea);
  const Tensor1 arb = ops.rhd.apply(ea, eb), bla = ops.lhd.apply(eb, ea);
  switch (which) {
    case 1: {
      Tensor2 lhs = ta(ab) + be(ab);
      Tensor2 rhs = L(ops.rhd, ea, ta(eb) + be(eb), 0) +
                    Rational(2) * R(ops.lhd, ea, ta(eb) + be(eb), 0) +
                    L(circ, ea, ta(eb) + be(eb), 1) +
                    R(circ, eb, Rational(2) * ta(ea) + be(ea), 1) -
                    R(ops.lhd, eb, ta(ea), 0);
      return lhs - rhs;
    }
    case 2: {
      Tensor2 lhs = ta(ab - ba);
      Tensor2 rhs = L(ops.rhd, ea, ta(eb), 0) + R(ops.lhd, ea, ta(eb), 0) +
                    L(circ, ea, ta(eb), 1) - L(ops.rhd, eb, ta(ea), 0) -
                    R(ops.lhd, eb, ta(ea), 0) - L(circ, eb, ta(ea), 1);
      return lhs - rhs;
    }
    case 3: {
      Tensor2 lhs = al(arb + bla) + be(arb + bla);
      Tensor2 rhs = R(ops.rhd, eb, Rational(2) * ta(ea) + be(ea), 1) +
                    L(ops.lhd, eb, Rational(2) * ta(ea) + be(ea), 1) -
                    L(ops.lhd, eb, al(ea), 0) + L(ops.rhd, ea, al(eb) + be(eb), 0) +
                    Rational(2) * R(ops.lhd, ea, al(eb) + be(eb), 0) +
                    L(ops.rhd, ea, al(eb) + be(eb), 1) + R(ops.lhd, ea, al(eb) + be(eb), 1);
      return lhs - rhs;
    }
    case 4: {
      Tensor2 lhs = al(bla) + be(bla) - ta(bla) - tb(bla);
      Tensor2 rhs = L(ops.lhd, eb, ta(ea) + be(ea), 1) - L(ops.lhd, eb, al(ea) + tb(ea), 0) +
                    R(ops.lhd, ea, al(eb) + be(eb), 1) - R(ops.lhd, ea, ta(eb) + tb(eb), 0);
      return lhs - rhs;
    }
    case 5: {
      Tensor2 lhs = R(circ, eb, ta(ea) + be(ea), 1) - R(ops.lhd, eb, ta(ea) + be(ea), 0);
      Tensor2 rhs = R(circ, ea, ta(eb) + be(eb), 1) - R(ops.lhd, ea, ta(eb) + be(eb), 0);
      return lhs - rhs;
    }
    case 6: {
      Tensor2 lhs = ta(ab);
      Tensor2 rhs = R(circ, eb, ta(ea), 1) + L(ops.rhd, ea, ta(eb) + be(eb), 0) +
                    R(ops.lhd, ea, ta(eb) + be(eb), 0);
      return lhs - rhs;
    }
    case 7: {
      Tensor2 lhs = R(ops.rhd, eb, ta(ea), 1) + L(ops.lhd, eb, ta(ea), 1);
      Tensor2 rhs = R(ops.rhd, eb, al(ea), 0) + L(ops.lhd, eb, al(ea), 0) +
                    L(ops.rhd, ea, ta(eb) + tb(eb), 1) + R(ops.lhd, ea, ta(eb) + tb(eb), 1) -
                    L(ops.rhd, ea, al(eb) + be(eb), 0) - R(ops.lhd, ea, al(eb) + be(eb), 0);
      return lhs - rhs;
    }
    case 8: {
      Tensor2 lhs = al(bla) + be(bla);
      Tensor2 rhs = R(ops.rhd, eb, ta(ea) + be(ea), 1) + L(ops.lhd, eb, ta(ea) + be(ea), 1) +
                    R(ops.lhd, ea, al(eb) + be(eb), 0);
      return lhs - rhs;
    }
  }
  return {};
}

}  // namespace prenov::testing

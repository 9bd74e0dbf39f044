#include "prenov/bialgebra.hpp"

namespace prenov {

namespace {

const Rational kOne(1);
const Rational kTwo(2);

std::vector<LfdCondition> build_lfd_conditions() {
  using W = Word;
  const CoopTerm A{kOne, false, false};
  const CoopTerm tA{kOne, false, true};
  const CoopTerm t2A{kTwo, false, true};
  const CoopTerm B{kOne, true, false};
  const CoopTerm tB{kOne, true, true};
  auto neg = [](CoopTerm t) {
    t.coeff = -t.coeff;
    return t;
  };
  auto plain = [](Rational c, std::vector<std::pair<Rational, W>> arg,
                  std::vector<CoopTerm> coop) {
    LfdTerm t;
    t.coeff = std::move(c);
    t.arg = std::move(arg);
    t.coop = std::move(coop);
    return t;
  };
  auto op = [](Rational c, int leg, Prim prim, Actor actor,
               std::vector<CoopTerm> coop, std::vector<std::pair<Rational, W>> arg) {
    LfdTerm t;
    t.coeff = std::move(c);
    t.arg = std::move(arg);
    t.coop = std::move(coop);
    t.has_op = true;
    t.leg = leg;
    t.prim = prim;
    t.actor = actor;
    return t;
  };
  const std::vector<std::pair<Rational, W>> a{{kOne, W::A}};
  const std::vector<std::pair<Rational, W>> b{{kOne, W::B}};

  std::vector<LfdCondition> all;
  // (τα+β)(a∘b) − ((L▷+2R◁)(a)⊗id + id⊗L∘(a))(τα+β)(b)
  //   − (id⊗R∘(b))(2τα+β)(a) + (R◁(b)⊗id)τα(a)
  all.push_back(LfdCondition{
      "lfd1",
      {plain(kOne, {{kOne, W::AcB}}, {tA, B}),
       op(-kOne, 0, Prim::LRhd, Actor::A, {tA, B}, b),
       op(-kTwo, 0, Prim::RLhd, Actor::A, {tA, B}, b),
       op(-kOne, 1, Prim::LCirc, Actor::A, {tA, B}, b),
       op(-kOne, 1, Prim::RCirc, Actor::B, {t2A, B}, a),
       op(kOne, 0, Prim::RLhd, Actor::B, {tA}, a)}});
  // τα(a∘b−b∘a) − ((L▷+R◁)(a)⊗id + id⊗L∘(a))τα(b)
  //   + ((L▷+R◁)(b)⊗id + id⊗L∘(b))τα(a)
  all.push_back(LfdCondition{
      "lfd2",
      {plain(kOne, {{kOne, W::AcB}, {-kOne, W::BcA}}, {tA}),
       op(-kOne, 0, Prim::LRhd, Actor::A, {tA}, b),
       op(-kOne, 0, Prim::RLhd, Actor::A, {tA}, b),
       op(-kOne, 1, Prim::LCirc, Actor::A, {tA}, b),
       op(kOne, 0, Prim::LRhd, Actor::B, {tA}, a),
       op(kOne, 0, Prim::RLhd, Actor::B, {tA}, a),
       op(kOne, 1, Prim::LCirc, Actor::B, {tA}, a)}});
  // (α+β)(a▷b+b◁a) − (id⊗(R▷+L◁)(b))(2τα+β)(a) + (L◁(b)⊗id)α(a)
  //   − ((L▷+2R◁)(a)⊗id + id⊗(L▷+R◁)(a))(α+β)(b)
  all.push_back(LfdCondition{
      "lfd3",
      {plain(kOne, {{kOne, W::ArB}, {kOne, W::BlA}}, {A, B}),
       op(-kOne, 1, Prim::RRhd, Actor::B, {t2A, B}, a),
       op(-kOne, 1, Prim::LLhd, Actor::B, {t2A, B}, a),
       op(kOne, 0, Prim::LLhd, Actor::B, {A}, a),
       op(-kOne, 0, Prim::LRhd, Actor::A, {A, B}, b),
       op(-kTwo, 0, Prim::RLhd, Actor::A, {A, B}, b),
       op(-kOne, 1, Prim::LRhd, Actor::A, {A, B}, b),
       op(-kOne, 1, Prim::RLhd, Actor::A, {A, B}, b)}});
  // (α+β−τα−τβ)(b◁a) − (id⊗L◁(b))(τα+β)(a) + (L◁(b)⊗id)(α+τβ)(a)
  //   − (id⊗R◁(a))(α+β)(b) + (R◁(a)⊗id)(τα+τβ)(b)
  all.push_back(LfdCondition{
      "lfd4",
      {plain(kOne, {{kOne, W::BlA}}, {A, B, neg(tA), neg(tB)}),
       op(-kOne, 1, Prim::LLhd, Actor::B, {tA, B}, a),
       op(kOne, 0, Prim::LLhd, Actor::B, {A, tB}, a),
       op(-kOne, 1, Prim::RLhd, Actor::A, {A, B}, b),
       op(kOne, 0, Prim::RLhd, Actor::A, {tA, tB}, b)}});
  // (id⊗R∘(b))(τα+β)(a) − (R◁(b)⊗id)(τα+β)(a)
  //   − (id⊗R∘(a))(τα+β)(b) + (R◁(a)⊗id)(τα+β)(b)
  all.push_back(LfdCondition{
      "lfd5",
      {op(kOne, 1, Prim::RCirc, Actor::B, {tA, B}, a),
       op(-kOne, 0, Prim::RLhd, Actor::B, {tA, B}, a),
       op(-kOne, 1, Prim::RCirc, Actor::A, {tA, B}, b),
       op(kOne, 0, Prim::RLhd, Actor::A, {tA, B}, b)}});
  // τα(a∘b) − (id⊗R∘(b))τα(a) − ((L▷+R◁)(a)⊗id)(τα+β)(b)
  all.push_back(LfdCondition{
      "lfd6",
      {plain(kOne, {{kOne, W::AcB}}, {tA}),
       op(-kOne, 1, Prim::RCirc, Actor::B, {tA}, a),
       op(-kOne, 0, Prim::LRhd, Actor::A, {tA, B}, b),
       op(-kOne, 0, Prim::RLhd, Actor::A, {tA, B}, b)}});
  // (id⊗(R▷+L◁)(b))τα(a) − ((R▷+L◁)(b)⊗id)α(a)
  //   − (id⊗(L▷+R◁)(a))(τα+τβ)(b) + ((L▷+R◁)(a)⊗id)(α+β)(b)
  all.push_back(LfdCondition{
      "lfd7",
      {op(kOne, 1, Prim::RRhd, Actor::B, {tA}, a),
       op(kOne, 1, Prim::LLhd, Actor::B, {tA}, a),
       op(-kOne, 0, Prim::RRhd, Actor::B, {A}, a),
       op(-kOne, 0, Prim::LLhd, Actor::B, {A}, a),
       op(-kOne, 1, Prim::LRhd, Actor::A, {tA, tB}, b),
       op(-kOne, 1, Prim::RLhd, Actor::A, {tA, tB}, b),
       op(kOne, 0, Prim::LRhd, Actor::A, {A, B}, b),
       op(kOne, 0, Prim::RLhd, Actor::A, {A, B}, b)}});
  // (α+β)(b◁a) − (id⊗(R▷+L◁)(b))(τα+β)(a) − (R◁(a)⊗id)(α+β)(b)
  all.push_back(LfdCondition{
      "lfd8",
      {plain(kOne, {{kOne, W::BlA}}, {A, B}),
       op(-kOne, 1, Prim::RRhd, Actor::B, {tA, B}, a),
       op(-kOne, 1, Prim::LLhd, Actor::B, {tA, B}, a),
       op(-kOne, 0, Prim::RLhd, Actor::A, {A, B}, b)}});
  return all;
}

Tensor1 eval_word(Word w, const PreNovikovOps& ops, const BilinearOp& circ, int a, int b) {
  switch (w) {
    case Word::A:
      return basis_vec(a);
    case Word::B:
      return basis_vec(b);
    case Word::AcB:
      return circ.of_basis(a, b);
    case Word::BcA:
      return circ.of_basis(b, a);
    case Word::AlB:
      return ops.lhd.of_basis(a, b);
    case Word::BlA:
      return ops.lhd.of_basis(b, a);
    case Word::ArB:
      return ops.rhd.of_basis(a, b);
    case Word::BrA:
      return ops.rhd.of_basis(b, a);
  }
  return {};
}

std::string word_str(Word w) {
  switch (w) {
    case Word::A: return "a";
    case Word::B: return "b";
    case Word::AcB: return "a∘b";
    case Word::BcA: return "b∘a";
    case Word::AlB: return "a◁b";
    case Word::BlA: return "b◁a";
    case Word::ArB: return "a▷b";
    case Word::BrA: return "b▷a";
  }
  return {};
}

std::string prim_str(Prim p) {
  switch (p) {
    case Prim::LCirc: return "L∘";
    case Prim::RCirc: return "R∘";
    case Prim::LLhd: return "L◁";
    case Prim::RLhd: return "R◁";
    case Prim::LRhd: return "L▷";
    case Prim::RRhd: return "R▷";
  }
  return {};
}

}  // namespace

const std::vector<LfdCondition>& lfd_conditions() {
  static const std::vector<LfdCondition> conds = build_lfd_conditions();
  return conds;
}

Tensor2 lfd_residual(const LfdCondition& cond, const PreNovikovOps& ops,
                     const PreNovikovCoops& coops, int a, int b) {
  const BilinearOp circ = ops.circ();
  Tensor2 out;
  for (const LfdTerm& term : cond.terms) {
    Tensor1 arg;
    for (const auto& [c, w] : term.arg) arg += c * eval_word(w, ops, circ, a, b);
    Tensor2 t;
    for (const CoopTerm& ct : term.coop) {
      Tensor2 img = ct.beta ? coops.beta.apply(arg) : coops.alpha.apply(arg);
      if (ct.flipped) img = flip(img);
      t += ct.coeff * img;
    }
    if (term.has_op) {
      const Tensor1 elem = basis_vec(term.actor == Actor::A ? a : b);
      const bool left = term.prim == Prim::LCirc || term.prim == Prim::LLhd ||
                        term.prim == Prim::LRhd;
      const BilinearOp* m = nullptr;
      switch (term.prim) {
        case Prim::LCirc:
        case Prim::RCirc:
          m = &circ;
          break;
        case Prim::LLhd:
        case Prim::RLhd:
          m = &ops.lhd;
          break;
        case Prim::LRhd:
        case Prim::RRhd:
          m = &ops.rhd;
          break;
      }
      t = apply_op_leg(*m, elem, left, t, term.leg);
    }
    out += term.coeff * t;
  }
  return out;
}

std::string render_lfd(const LfdCondition& cond) {
  std::string out = cond.id + ":";
  for (const LfdTerm& term : cond.terms) {
    std::string coop;
    for (const CoopTerm& ct : term.coop) {
      std::string c;
      if (ct.coeff == -1)
        c = "-";
      else if (ct.coeff != 1)
        c = rational_str(ct.coeff);
      c += (ct.flipped ? "τ" : "");
      c += (ct.beta ? "β" : "α");
      if (!coop.empty() && ct.coeff > 0) coop += "+";
      coop += c;
    }
    std::string arg;
    for (const auto& [c, w] : term.arg) {
      std::string s;
      if (c == -1)
        s = "-";
      else if (c != 1)
        s = rational_str(c);
      s += word_str(w);
      if (!arg.empty() && c > 0) arg += "+";
      arg += s;
    }
    std::string body = "(" + coop + ")(" + arg + ")";
    if (term.has_op) {
      std::string o = prim_str(term.prim) + "(" + (term.actor == Actor::A ? "a" : "b") + ")";
      body = (term.leg == 0 ? "(" + o + "⊗id)" : "(id⊗" + o + ")") + body;
    }
    out += (term.coeff > 0 ? " + " : " - ");
    Rational abs_c = term.coeff > 0 ? term.coeff : Rational(-term.coeff);
    if (abs_c != 1) out += rational_str(abs_c) + "*";
    out += body;
  }
  return out;
}

CheckReport check_pre_novikov_bialgebra(const PreNovikovOps& ops,
                                        const PreNovikovCoops& coops,
                                        const CheckOptions& opts) {
  CheckReport rep;
  const BasisSpace& s = ops.lhd.space();
  for (const LfdCondition& cond : lfd_conditions()) {
    rep.declare_axiom(cond.id);
    for (int a = 0; a < s.dim(); ++a)
      for (int b = 0; b < s.dim(); ++b) {
        Tensor2 r = lfd_residual(cond, ops, coops, a, b);
        if (r.zero()) continue;
        rep.add_witness(opts,
                        Witness{cond.id, {s.label(a), s.label(b)}, to_string(r, s)});
      }
  }
  return rep;
}

CheckReport check_pre_novikov_bialgebra_full(const PreNovikovBialgebra& pnb,
                                             const CheckOptions& opts) {
  CheckReport rep = check_pre_novikov(pnb.ops.lhd, pnb.ops.rhd, opts);
  rep.merge(check_pre_novikov_coalgebra(pnb.coops.alpha, pnb.coops.beta, opts));
  rep.merge(check_pre_novikov_bialgebra(pnb.ops, pnb.coops, opts));
  return rep;
}

CheckReport check_pre_lie_bialgebra(const PreLieBialgebra& plb, const CheckOptions& opts) {
  CheckReport rep = check_pre_lie(plb.circ, opts);
  rep.merge(check_pre_lie_coalgebra(plb.delta, opts));
  rep.declare_axiom("pre-Lbi1");
  rep.declare_axiom("pre-Lbi2");
  const BasisSpace& s = plb.circ.space();
  const BilinearOp& m = plb.circ;
  const CoOp& d = plb.delta;
  for (int a = 0; a < s.dim(); ++a)
    for (int b = 0; b < s.dim(); ++b) {
      const Tensor1 ea = basis_vec(a), eb = basis_vec(b);
      const Tensor2 da = d.image(a);
      const Tensor2 db = d.image(b);
      const Tensor2 dmt_b = db - flip(db);
      const Tensor2 dmt_ab = [&] {
        Tensor2 t = d.apply(m.of_basis(a, b));
        return t - flip(t);
      }();
      Tensor2 r1 = dmt_ab - apply_op_leg(m, ea, true, dmt_b, 0) -
                   apply_op_leg(m, ea, true, dmt_b, 1) - apply_op_leg(m, eb, false, da, 1) +
                   apply_op_leg(m, eb, false, flip(da), 0);
      if (!r1.zero())
        rep.add_witness(opts, Witness{"pre-Lbi1", {s.label(a), s.label(b)}, to_string(r1, s)});
      Tensor2 r2 = d.apply(m.of_basis(a, b) - m.of_basis(b, a)) -
                   (apply_op_leg(m, eb, false, da, 1) - apply_op_leg(m, eb, true, da, 1)) -
                   (apply_op_leg(m, ea, true, db, 1) - apply_op_leg(m, ea, false, db, 1)) -
                   apply_op_leg(m, ea, true, db, 0) + apply_op_leg(m, eb, true, da, 0);
      if (!r2.zero())
        rep.add_witness(opts, Witness{"pre-Lbi2", {s.label(a), s.label(b)}, to_string(r2, s)});
    }
  return rep;
}

PreLieBialgebra build_pre_lie_bialgebra(const PreNovikovBialgebra& pnb,
                                        const BilinearOp& diamond, const BilinearForm& form) {
  {
    CheckReport r = check_pre_novikov_bialgebra_full(pnb);
    if (!r.passed()) {
      std::string ids;
      for (const auto& id : r.failed_axioms()) ids += (ids.empty() ? "" : ", ") + id;
      throw std::invalid_argument("input is not a pre-Novikov bialgebra (failed: " + ids + ")");
    }
  }
  {
    CheckReport r = check_quadratic_right_novikov(diamond, form);
    if (!r.passed()) {
      std::string ids;
      for (const auto& id : r.failed_axioms()) ids += (ids.empty() ? "" : ", ") + id;
      throw std::invalid_argument("input is not a quadratic right Novikov algebra (failed: " +
                                  ids + ")");
    }
  }
  const CoOp delta_b = coproduct_from_form(diamond, form);
  TensorAlgebra ta = induced_pre_lie(pnb.ops, diamond, diamond);
  CoOp delta = coalgebra_tensor_delta(pnb.coops.alpha, pnb.coops.beta, delta_b, delta_b);
  return PreLieBialgebra{std::move(ta.circ), std::move(delta)};
}

}  // namespace prenov

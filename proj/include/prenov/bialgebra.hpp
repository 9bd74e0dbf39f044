#pragma once

#include <string>
#include <vector>

#include "prenov/axioms.hpp"
#include "prenov/check.hpp"
#include "prenov/constructions.hpp"
#include "prenov/form.hpp"
#include "prenov/op.hpp"

namespace prenov {

// The eight compatibility conditions between (◁,▷) and (α,β) are long, so
// they are stored as data (argument word, cooperation combination, optional
// single-leg operator per term) and run by one evaluator. The encoding can be
// rendered for cross-checking, and reports embed it.

enum class Word { A, B, AcB, BcA, AlB, BlA, ArB, BrA };          // c=∘, l=◁, r=▷
enum class Prim { LCirc, RCirc, LLhd, RLhd, LRhd, RRhd };
enum class Actor { A, B };

struct CoopTerm {
  Rational coeff;
  bool beta;     // α when false
  bool flipped;  // τα / τβ
};

struct LfdTerm {
  Rational coeff;
  std::vector<std::pair<Rational, Word>> arg;  // element of A fed to the coops
  std::vector<CoopTerm> coop;
  bool has_op = false;
  int leg = 0;  // 0 or 1
  Prim prim = Prim::LCirc;
  Actor actor = Actor::A;
};

struct LfdCondition {
  std::string id;  // "lfd1" … "lfd8"
  std::vector<LfdTerm> terms;
};

const std::vector<LfdCondition>& lfd_conditions();

/// Residual of one encoded condition at the basis pair (a,b).
Tensor2 lfd_residual(const LfdCondition& cond, const PreNovikovOps& ops,
                     const PreNovikovCoops& coops, int a, int b);

/// Human-readable rendering of a condition's encoding.
std::string render_lfd(const LfdCondition& cond);

/// All eight conditions over all basis pairs.
CheckReport check_pre_novikov_bialgebra(const PreNovikovOps& ops,
                                        const PreNovikovCoops& coops,
                                        const CheckOptions& opts = {});

struct PreNovikovBialgebra {
  PreNovikovOps ops;
  PreNovikovCoops coops;
};

/// Full pre-Novikov bialgebra check: algebra + coalgebra + lfd1..8.
CheckReport check_pre_novikov_bialgebra_full(const PreNovikovBialgebra& pnb,
                                             const CheckOptions& opts = {});

struct PreLieBialgebra {
  BilinearOp circ;
  CoOp delta;
};

/// Finite pre-Lie bialgebra conditions at all basis pairs:
///   pre-Lbi1: (δ−τδ)(a∘b) − (L∘(a)⊗id)(δ−τδ)(b) − (id⊗L∘(a))(δ−τδ)(b)
///             − (id⊗R∘(b))δ(a) + (R∘(b)⊗id)τδ(a) = 0
///   pre-Lbi2: δ(a∘b−b∘a) − (id⊗(R∘(b)−L∘(b)))δ(a) − (id⊗(L∘(a)−R∘(a)))δ(b)
///             − (L∘(a)⊗id)δ(b) + (L∘(b)⊗id)δ(a) = 0
/// together with the pre-Lie and pre-Lie-coalgebra axioms.
CheckReport check_pre_lie_bialgebra(const PreLieBialgebra& plb, const CheckOptions& opts = {});

/// Theorem pipeline: induced product with ⊣=⊢=⋄ plus the coproduct dual to
/// the form, assembled into δ(a⊗x) = β(a)•Δ(x) − τα(a)•τΔ(x). Inputs are
/// validated against their checkers first.
PreLieBialgebra build_pre_lie_bialgebra(const PreNovikovBialgebra& pnb,
                                        const BilinearOp& diamond, const BilinearForm& form);

}  // namespace prenov

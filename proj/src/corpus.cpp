#include "prenov/axioms.hpp"
#include "prenov/bialgebra.hpp"
#include "prenov/constructions.hpp"
#include "prenov/io.hpp"
#include "prenov/yang_baxter.hpp"

namespace prenov {

namespace {

Rational R(long n) { return Rational(n); }

WorkbenchFile make_ex1() {
  WorkbenchFile f;
  f.kind = "pre-novikov-bialgebra";
  f.metadata["name"] = "ex1";
  f.metadata["description"] = "two-dimensional pre-Novikov bialgebra";
  BasisSpace A("A", {"e1", "e2"});
  f.spaces.push_back(A);
  BilinearOp lhd(A), rhd(A);
  lhd.add(0, 0, 0, R(1));  // e1◁e1 = e1
  lhd.add(0, 1, 1, R(1));  // e1◁e2 = e2
  lhd.add(1, 0, 1, R(1));  // e2◁e1 = e2
  f.operations.emplace("lhd", std::move(lhd));
  f.operations.emplace("rhd", std::move(rhd));
  CoOp alpha(A), beta(A);
  alpha.add(0, 1, 1, R(1));  // α(e1) = e2⊗e2
  beta.add(0, 1, 1, R(-1));  // β(e1) = −e2⊗e2
  f.cooperations.emplace("alpha", std::move(alpha));
  f.cooperations.emplace("beta", std::move(beta));
  return f;
}

WorkbenchFile make_quadratic_ex() {
  WorkbenchFile f;
  f.kind = "quadratic-right-novikov";
  f.metadata["name"] = "quadratic-ex";
  f.metadata["description"] = "two-dimensional quadratic right Novikov algebra";
  BasisSpace C("C", {"x", "y"});
  f.spaces.push_back(C);
  BilinearOp d(C);
  d.add(0, 1, 0, R(-2));  // x⋄y = −2x
  d.add(1, 0, 0, R(1));   // y⋄x = x
  d.add(1, 1, 1, R(1));   // y⋄y = y
  f.operations.emplace("diamond", std::move(d));
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = R(1);
  m(1, 0) = R(1);
  f.forms.emplace("form", BilinearForm(C, std::move(m)));
  return f;
}

WorkbenchFile make_fourdim() {
  WorkbenchFile f;
  f.kind = "pre-novikov";
  f.metadata["name"] = "fourdim";
  f.metadata["description"] =
      "four-dimensional pre-Novikov algebra carrying the symmetric Yang-Baxter solution r";
  BasisSpace A("A4", {"e1", "e2", "e3", "e4"});
  f.spaces.push_back(A);
  BilinearOp lhd(A), rhd(A);
  lhd.add(0, 0, 0, R(1));  // e1◁e1 = e1
  lhd.add(0, 1, 1, R(1));  // e1◁e2 = e2
  lhd.add(1, 0, 1, R(1));  // e2◁e1 = e2
  rhd.add(0, 2, 2, R(-2));  // e1▷e3 = −2e3
  rhd.add(1, 3, 2, R(-2));  // e2▷e4 = −2e3
  rhd.add(0, 3, 3, R(-2));  // e1▷e4 = −2e4
  lhd.add(0, 2, 2, R(1));   // e1◁e3 = e3
  lhd.add(1, 3, 2, R(1));   // e2◁e4 = e3
  lhd.add(2, 0, 2, R(1));   // e3◁e1 = e3
  lhd.add(3, 1, 2, R(1));   // e4◁e2 = e3
  lhd.add(0, 3, 3, R(1));   // e1◁e4 = e4
  lhd.add(3, 0, 3, R(1));   // e4◁e1 = e4
  f.operations.emplace("lhd", std::move(lhd));
  f.operations.emplace("rhd", std::move(rhd));
  Tensor2 r;
  r.add({1, 2}, R(1));
  r.add({2, 1}, R(1));
  f.tensors.emplace("r", std::pair{std::string("A4"), std::move(r)});
  return f;
}

WorkbenchFile make_fourdim_r() {
  WorkbenchFile f;
  f.kind = "data";
  f.metadata["name"] = "fourdim-r";
  f.metadata["description"] = "symmetric Yang-Baxter solution r = e2⊗e3 + e3⊗e2";
  BasisSpace A("A4", {"e1", "e2", "e3", "e4"});
  f.spaces.push_back(A);
  Tensor2 r;
  r.add({1, 2}, R(1));
  r.add({2, 1}, R(1));
  f.tensors.emplace("r", std::pair{std::string("A4"), std::move(r)});
  return f;
}

WorkbenchFile make_laurent(const GradedWindow& w) {
  WorkbenchFile f;
  f.kind = "laurent-right-novikov";
  f.metadata["name"] = "laurent";
  f.metadata["description"] =
      "k[t,1/t] with t^i⋄t^j = i t^{i+j-1} and (t^i,t^j) = δ_{i+j+1,0}, on a window";
  std::vector<std::string> labels;
  for (long e = w.lo; e <= w.hi; ++e) labels.push_back("t^" + std::to_string(e));
  BasisSpace B("B", std::move(labels));
  f.spaces.push_back(B);
  const int n = B.dim();
  auto idx = [&](long e) { return static_cast<int>(e - w.lo); };
  BilinearOp d(B);
  for (long i = w.lo; i <= w.hi; ++i)
    for (long j = w.lo; j <= w.hi; ++j) {
      auto [c, e] = laurent_product(i, j);
      if (c != 0 && w.contains(e)) d.add(idx(i), idx(j), idx(e), R(c));
    }
  f.operations.emplace("diamond", std::move(d));
  Matrix m = Matrix::Zero(n, n);
  for (long i = w.lo; i <= w.hi; ++i)
    for (long j = w.lo; j <= w.hi; ++j) m(idx(i), idx(j)) = laurent_form(i, j);
  f.forms.emplace("form", BilinearForm(B, std::move(m), 1));
  Grading g;
  for (long e = w.lo; e <= w.hi; ++e) g.degrees.push_back(e);
  f.gradings.emplace("exponent", std::pair{std::string("B"), std::move(g)});
  f.window = w;
  return f;
}

// The pre-Lie bialgebra on A⊗C built from ex1 and quadratic-ex; the tables
// below are the golden values the build pipeline must reproduce bit-exactly.
WorkbenchFile make_induced_ex() {
  WorkbenchFile f;
  f.kind = "pre-lie-bialgebra";
  f.metadata["name"] = "induced-ex";
  f.metadata["description"] = "pre-Lie bialgebra on A⊗C induced from ex1 and quadratic-ex";
  BasisSpace L("A⊗C", {"e1⊗x", "e1⊗y", "e2⊗x", "e2⊗y"});
  f.spaces.push_back(L);
  BilinearOp circ(L);
  // indices: e1⊗x=0, e1⊗y=1, e2⊗x=2, e2⊗y=3
  circ.add(1, 1, 1, R(-1));  // (e1⊗y)∘(e1⊗y) = −e1⊗y
  circ.add(0, 1, 0, R(-1));  // (e1⊗x)∘(e1⊗y) = −e1⊗x
  circ.add(0, 3, 2, R(-1));  // (e1⊗x)∘(e2⊗y) = −e2⊗x
  circ.add(2, 1, 2, R(-1));  // (e2⊗x)∘(e1⊗y) = −e2⊗x
  circ.add(1, 0, 0, R(2));   // (e1⊗y)∘(e1⊗x) = 2e1⊗x
  circ.add(1, 2, 2, R(2));   // (e1⊗y)∘(e2⊗x) = 2e2⊗x
  circ.add(3, 0, 2, R(2));   // (e2⊗y)∘(e1⊗x) = 2e2⊗x
  circ.add(1, 3, 3, R(-1));  // (e1⊗y)∘(e2⊗y) = −e2⊗y
  circ.add(3, 1, 3, R(-1));  // (e2⊗y)∘(e1⊗y) = −e2⊗y
  f.operations.emplace("circ", std::move(circ));
  CoOp delta(L);
  delta.add(0, 2, 2, R(-2));  // δ(e1⊗x) = −2(e2⊗x)⊗(e2⊗x)
  delta.add(1, 2, 3, R(1));   // δ(e1⊗y) = (e2⊗x)⊗(e2⊗y) + (e2⊗y)⊗(e2⊗x)
  delta.add(1, 3, 2, R(1));
  f.cooperations.emplace("delta", std::move(delta));
  return f;
}

// Double construction on A⊕A* for ex1: the Novikov product determined by the
// canonical skew pairing together with the subalgebra requirements, paired
// with ω(a+f, b+g) = <f,b> − <g,a>.
WorkbenchFile make_double_ex1() {
  WorkbenchFile f;
  f.kind = "quasi-frobenius-novikov";
  f.metadata["name"] = "double-ex1";
  f.metadata["description"] = "quasi-Frobenius Novikov algebra on A⊕A* for ex1";
  BasisSpace D("D", {"e1", "e2", "f1", "f2"});
  f.spaces.push_back(D);
  BilinearOp circ(D);
  circ.add(0, 0, 0, R(1));   // e1∘e1 = e1
  circ.add(0, 1, 1, R(1));   // e1∘e2 = e2
  circ.add(1, 0, 1, R(1));   // e2∘e1 = e2
  circ.add(2, 0, 2, R(1));   // f1∘e1 = f1
  circ.add(3, 0, 3, R(1));   // f2∘e1 = f2
  circ.add(3, 1, 2, R(1));   // f2∘e2 = f1
  circ.add(0, 2, 2, R(-1));  // e1∘f1 = −f1
  circ.add(0, 3, 1, R(1));   // e1∘f2 = e2 − f2
  circ.add(0, 3, 3, R(-1));
  circ.add(1, 3, 2, R(-1));  // e2∘f2 = −f1
  f.operations.emplace("circ", std::move(circ));
  Matrix m = Matrix::Zero(4, 4);
  m(2, 0) = R(1);   // ω(f1, e1) = 1
  m(3, 1) = R(1);   // ω(f2, e2) = 1
  m(0, 2) = R(-1);  // ω(e1, f1) = −1
  m(1, 3) = R(-1);  // ω(e2, f2) = −1
  f.forms.emplace("omega", BilinearForm(D, std::move(m)));
  return f;
}

}  // namespace

const std::map<std::string, WorkbenchFile>& corpus() {
  static const std::map<std::string, WorkbenchFile> entries = [] {
    std::map<std::string, WorkbenchFile> m;
    m.emplace("ex1", make_ex1());
    m.emplace("quadratic-ex", make_quadratic_ex());
    m.emplace("fourdim", make_fourdim());
    m.emplace("fourdim-r", make_fourdim_r());
    m.emplace("laurent", make_laurent(GradedWindow(-8, 8)));
    m.emplace("induced-ex", make_induced_ex());
    m.emplace("double-ex1", make_double_ex1());
    return m;
  }();
  return entries;
}

std::vector<std::pair<std::string, bool>> corpus_cross_checks(const GradedWindow& window) {
  std::vector<std::pair<std::string, bool>> out;
  auto step = [&](const std::string& name, bool ok) { out.emplace_back(name, ok); };
  const auto& c = corpus();
  const WorkbenchFile& ex1 = c.at("ex1");
  const WorkbenchFile& qex = c.at("quadratic-ex");
  const WorkbenchFile& fourdim = c.at("fourdim");
  const WorkbenchFile& induced = c.at("induced-ex");
  const WorkbenchFile& dbl = c.at("double-ex1");

  for (const auto& [name, file] : c)
    step("corpus '" + name + "' passes kind '" + file.kind + "'",
         run_check(file, file.kind, window).passed());

  const PreNovikovOps ex1_ops = ex1.pre_novikov_ops();
  const PreNovikovCoops ex1_coops = ex1.pre_novikov_coops();
  const BilinearOp& diamond = qex.op("diamond");
  const BilinearForm& cform = qex.form("form");

  // Associated Novikov product and its sub-adjacent bracket.
  const BilinearOp assoc = associated_novikov(ex1_ops.lhd, ex1_ops.rhd);
  step("associated Novikov product of ex1 passes", check_novikov(assoc).passed());
  step("sub-adjacent bracket of ex1 is zero", sub_adjacent_lie(assoc).zero());

  // Induced pre-Lie product on A⊗C; matches the golden table and passes.
  TensorAlgebra ind = induced_pre_lie(ex1_ops, diamond, diamond);
  step("induced product on A⊗C matches the golden table",
       ind.circ.same_constants(induced.op("circ")));
  step("induced product passes pre-Lie", check_pre_lie(ind.circ).passed());
  step("sub-adjacent bracket on A⊗C passes Jacobi",
       check_jacobi(sub_adjacent_lie(ind.circ)).passed());

  // Coproduct dual to the form on C.
  const CoOp delta_c = coproduct_from_form(diamond, cform);
  step("coproduct dual to the form passes (coalgebra)",
       check_right_novikov_coalgebra(delta_c).passed());
  step("coproduct dual to the form passes (co-dialgebra)",
       check_right_novikov_co_dialgebra(delta_c, delta_c).passed());

  // Full bialgebra build reproduces the golden tables and passes its checker.
  PreLieBialgebra built = build_pre_lie_bialgebra({ex1_ops, ex1_coops}, diamond, cform);
  step("built pre-Lie bialgebra matches the golden tables",
       built.circ.same_constants(induced.op("circ")) &&
           built.delta.same_constants(induced.coop("delta")));
  step("built pre-Lie bialgebra passes its checker",
       check_pre_lie_bialgebra(built).passed());

  // Quasi-Frobenius double: compatible pre-Novikov structure round-trips.
  const BilinearOp& dcirc = dbl.op("circ");
  const BilinearForm& domega = dbl.form("omega");
  PreNovikovOps dops = compatible_pre_novikov_from_qf(dcirc, domega);
  step("compatible pre-Novikov structure on the double passes",
       check_quadratic_pre_novikov(dops.lhd, dops.rhd, domega).passed());

  // Product form on (A⊕A*)⊗C is symplectic for the induced bracket, and the
  // compatible pre-Lie structure recovered from it has the same commutator.
  const BilinearForm omega_p = product_form(domega, cform);
  TensorAlgebra dind = induced_pre_lie(dops, diamond, diamond);
  step("product form is quadratic pre-Lie for the induced product",
       check_quadratic_pre_lie(dind.circ, omega_p).passed());
  const BilinearOp bracket = sub_adjacent_lie(dind.circ);
  const BilinearOp rec = compatible_pre_lie_from_symplectic(bracket, omega_p);
  step("symplectic reconstruction has the same commutator",
       sub_adjacent_lie(rec).same_constants(bracket));

  // Obstruction residual vanishes when the right factor is quadratic.
  step("product-form obstruction vanishes on (double-ex1, quadratic-ex)",
       quadratic_tensor_obstruction(dops.lhd, dops.rhd, domega, diamond, diamond, cform)
           .passed());

  // Affinization of ex1 (both directions exercised by the acceptance suite).
  step("affinized ex1 passes the pre-Lie check",
       check_affine_pre_lie(ex1_ops, window).passed());
  step("affinized ex1 passes the coalgebra check",
       check_affine_pre_lie_coalgebra(ex1_coops, window).passed());
  step("affinized ex1 passes the bialgebra check",
       check_affine_pre_lie_bialgebra(ex1_ops, ex1_coops, window).passed());

  // Yang-Baxter pipeline on the four-dimensional example.
  const PreNovikovOps ops4 = fourdim.pre_novikov_ops();
  const Tensor2& r = fourdim.tensor("r");
  step("r solves the Yang-Baxter equation", pnybe_residual(ops4, r).zero());
  const PreNovikovCoops cb = coboundary_alpha_beta(ops4, r);
  step("coboundary cooperations give a pre-Novikov bialgebra",
       check_pre_novikov_bialgebra_full({ops4, cb}).passed());
  const Tensor2 rl = lift_r_finite(r, cform);
  TensorAlgebra l4 = induced_pre_lie(ops4, diamond, diamond);
  step("finite lift is symmetric", flip(rl) == rl);
  step("finite lift solves the S-equation", s_equation_residual(l4.circ, rl).zero());
  {
    bool all_zero = true;
    for (long p = window.lo; p <= window.hi && all_zero; ++p)
      for (long q = window.lo; q <= window.hi && all_zero; ++q) {
        const long s = -3 - p - q;
        if (!window.contains(s)) continue;
        if (!affine_s_equation_component(ops4, r, p, q, s).zero()) all_zero = false;
      }
    step("Laurent lift has zero windowed S-residual components", all_zero);
  }
  {
    PreLieBialgebra via_bialg = build_pre_lie_bialgebra({ops4, cb}, diamond, cform);
    CoOp via_lift = coboundary_delta(l4.circ, rl);
    step("coboundary square commutes on A⊗C",
         via_bialg.delta.same_constants(via_lift) &&
             via_bialg.circ.same_constants(l4.circ));
  }
  {
    auto sols = search_pnybe(ops4, {R(-1), R(0), R(1)}, {{1, 1}, {1, 2}, {2, 2}});
    bool has_zero = false, has_r = false;
    for (const auto& s : sols) {
      if (s.t.zero()) has_zero = true;
      if (s.t == r) has_r = true;
    }
    step("search finds 0 and r over {-1,0,1} on {e2,e3}^2", has_zero && has_r);
  }
  {
    DualBasisPair db = dual_basis(cform);
    bool ok = db.dual[0] == basis_vec(1) && db.dual[1] == basis_vec(0);
    step("dual basis of {x,y} is {y,x}", ok);
  }
  return out;
}

}  // namespace prenov

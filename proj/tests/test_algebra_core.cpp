#include <doctest.h>

#include "oracle.hpp"
#include "prenov/form.hpp"
#include "prenov/io.hpp"
#include "prenov/op.hpp"

using namespace prenov;
using prenov::testing::Rng;

TEST_CASE("rationals stay canonical and reject bad input") {
  CHECK(rational_str(parse_rational("3/6")) == "1/2");
  CHECK(rational_str(parse_rational("-14/6")) == "-7/3");
  CHECK(rational_str(parse_rational("7")) == "7");
  CHECK(rational_str(parse_rational("0/5")) == "0");
  CHECK(parse_rational("2/-4") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("basis spaces demand distinct labels") {
  CHECK_THROWS_AS(BasisSpace("A", {"e1", "e1"}), std::invalid_argument);
  BasisSpace a("A", {"e1", "e2"});
  CHECK(a.index("e2") == 1);
  CHECK_THROWS_AS(a.index("nope"), std::invalid_argument);
  CHECK(dual_space(dual_space(a)) == a);
}

TEST_CASE("sparse tensors are canonical") {
  Tensor2 t;
  t.add({0, 1}, Rational(1, 2));
  t.add({0, 1}, Rational(-1, 2));
  CHECK(t.zero());
  t.add({1, 0}, Rational(3));
  Tensor2 s;
  s.add({1, 0}, Rational(3));
  CHECK(t == s);
  CHECK((Rational(0) * t).zero());
}

TEST_CASE("flips are involutions") {
  Rng rng(1);
  for (int it = 0; it < 50; ++it) {
    Tensor2 t = prenov::testing::random_ten2(rng, 4);
    CHECK(flip(flip(t)) == t);
    Tensor3 u = outer<2, 1>(t, prenov::testing::random_vec(rng, 4));
    CHECK(flip13(flip13(u)) == u);
    CHECK(flip23(flip23(u)) == u);
    CHECK(flip12(flip12(u)) == u);
  }
  Tensor2 e12;
  e12.add({0, 1}, Rational(1));
  Tensor2 e21;
  e21.add({1, 0}, Rational(1));
  CHECK(flip(e12) == e21);
  Tensor2 sym = e12 + e21;
  CHECK(flip(sym) == sym);
  Tensor3 abc;
  abc.add({0, 1, 2}, Rational(1));
  Tensor3 cba;
  cba.add({2, 1, 0}, Rational(1));
  CHECK(flip13(abc) == cba);
}

TEST_CASE("apply_op matches the ex1 table and is bilinear") {
  const auto& ex1 = corpus().at("ex1");
  const BilinearOp& lhd = ex1.op("lhd");
  CHECK(lhd.apply(basis_vec(0), basis_vec(1)) == basis_vec(1));  // e1◁e2 = e2
  CHECK(lhd.apply(Tensor1{}, basis_vec(1)).zero());

  Rng rng(2);
  BasisSpace s("V", {"v1", "v2", "v3"});
  for (int it = 0; it < 50; ++it) {
    BilinearOp m = prenov::testing::random_op(rng, s);
    Tensor1 u1 = prenov::testing::random_vec(rng, 3);
    Tensor1 u2 = prenov::testing::random_vec(rng, 3);
    Tensor1 v = prenov::testing::random_vec(rng, 3);
    Rational c = rng.small_rational();
    CHECK(m.apply(u1 + c * u2, v) == m.apply(u1, v) + c * m.apply(u2, v));
    CHECK(m.apply(v, u1 + c * u2) == m.apply(v, u1) + c * m.apply(v, u2));
  }
  CHECK_THROWS_AS(lhd.apply(basis_vec(0), basis_vec(5)), std::invalid_argument);
}

TEST_CASE("windowed Laurent table multiplies t^2 by t^3") {
  const auto& laurent = corpus().at("laurent");
  const BasisSpace& b = laurent.op("diamond").space();
  Tensor1 p = laurent.op("diamond").apply(basis_vec(b.index("t^2")), basis_vec(b.index("t^3")));
  Tensor1 expect;
  expect.add({b.index("t^4")}, Rational(2));
  CHECK(p == expect);
}

TEST_CASE("apply_coop matches ex1 and is linear") {
  const auto& ex1 = corpus().at("ex1");
  const CoOp& alpha = ex1.coop("alpha");
  Tensor2 e22;
  e22.add({1, 1}, Rational(1));
  CHECK(alpha.apply(basis_vec(0)) == e22);  // α(e1) = e2⊗e2
  CHECK(alpha.apply(basis_vec(1)).zero());  // α(e2) = 0
  CoOp zero(alpha.space());
  CHECK(zero.apply(basis_vec(0)).zero());

  Rng rng(3);
  BasisSpace s("V", {"v1", "v2", "v3"});
  for (int it = 0; it < 30; ++it) {
    CoOp c = prenov::testing::random_coop(rng, s);
    Tensor1 u1 = prenov::testing::random_vec(rng, 3);
    Tensor1 u2 = prenov::testing::random_vec(rng, 3);
    Rational k = rng.small_rational();
    CHECK(c.apply(u1 + k * u2) == c.apply(u1) + k * c.apply(u2));
  }
}

TEST_CASE("dualize transposes the pairing and round-trips") {
  Rng rng(4);
  BasisSpace s("V", {"v1", "v2", "v3"});
  for (int it = 0; it < 30; ++it) {
    BilinearOp m = prenov::testing::random_op(rng, s);
    CoOp d = dualize_op(m);
    // ⟨Δ(f), u⊗v⟩ = ⟨f, m(u,v)⟩ on basis functionals
    for (int f = 0; f < 3; ++f)
      for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
          CHECK(d.image(f).coeff({u, v}) == m.of_basis(u, v).coeff({f}));
    BilinearOp back = dualize_coop(d);
    CHECK(back.same_constants(m));
    CHECK(back.space() == m.space());

    CoOp c = prenov::testing::random_coop(rng, s);
    CHECK(dualize_op(dualize_coop(c)).same_constants(c));
  }
  BilinearOp zero(s);
  CHECK(dualize_op(zero).zero());
}

TEST_CASE("slot products match the brute-force oracle and the worked values") {
  const auto& ex1 = corpus().at("ex1");
  const BilinearOp circ = ex1.op("lhd") + ex1.op("rhd");
  Tensor2 r;
  r.add({0, 0}, Rational(1));  // e1⊗e1
  Tensor3 expect;
  expect.add({0, 0, 0}, Rational(1));
  CHECK(slot_product(circ, r, r, 12, 13) == expect);  // e1∘e1 = e1
  CHECK(slot_product(circ, Tensor2{}, r, 12, 13).zero());

  // 4-dim r with ◁ in slots (12,23): every middle product vanishes
  const auto& fd = corpus().at("fourdim");
  const Tensor2& r4 = fd.tensor("r");
  CHECK(slot_product(fd.op("lhd"), r4, r4, 12, 23).zero());
  CHECK(slot_product(fd.op("lhd"), r4, r4, 12, 23) ==
        prenov::testing::slot_product_oracle(fd.op("lhd"), r4, r4, 12, 23));

  CHECK_THROWS_AS(slot_product(circ, r, r, 13, 12), std::invalid_argument);
  CHECK_THROWS_AS(slot_product(circ, r, r, 23, 12), std::invalid_argument);

  Rng rng(5);
  BasisSpace s("V", {"v1", "v2", "v3", "v4"});
  const int pairs[4][2] = {{12, 13}, {13, 23}, {12, 23}, {23, 13}};
  for (int it = 0; it < 100; ++it) {
    BilinearOp m = prenov::testing::random_op(rng, s);
    Tensor2 a = prenov::testing::random_ten2(rng, 4);
    Tensor2 b = prenov::testing::random_ten2(rng, 4);
    for (auto [sr, ss] : pairs)
      CHECK(slot_product(m, a, b, sr, ss) ==
            prenov::testing::slot_product_oracle(m, a, b, sr, ss));
  }
}

TEST_CASE("bullet interleaves tensor legs") {
  // (e2⊗e2)•(x⊗x) over dim-2 factors: product indices fuse as i*2+p
  Tensor2 a;
  a.add({1, 1}, Rational(1));
  Tensor2 x;
  x.add({0, 0}, Rational(1));
  Tensor2 out = bullet<2>(a, x, 2);
  Tensor2 expect;
  expect.add({2, 2}, Rational(1));  // (e2⊗x)⊗(e2⊗x)
  CHECK(out == expect);

  // (−e2⊗e2)•(x⊗y − 2 y⊗x) = −(e2⊗x)⊗(e2⊗y) + 2(e2⊗y)⊗(e2⊗x)
  Tensor2 na = -a;
  Tensor2 xy;
  xy.add({0, 1}, Rational(1));
  xy.add({1, 0}, Rational(-2));
  Tensor2 out2 = bullet<2>(na, xy, 2);
  Tensor2 expect2;
  expect2.add({2, 3}, Rational(-1));
  expect2.add({3, 2}, Rational(2));
  CHECK(out2 == expect2);

  CHECK(bullet<2>(a, Tensor2{}, 2).zero());

  Rng rng(6);
  for (int it = 0; it < 30; ++it) {
    Tensor2 u = prenov::testing::random_ten2(rng, 2);
    Tensor2 v = prenov::testing::random_ten2(rng, 3);
    Tensor2 w = prenov::testing::random_ten2(rng, 3);
    Rational c = rng.small_rational();
    CHECK(bullet<2>(u, v + c * w, 3) == bullet<2>(u, v, 3) + c * bullet<2>(u, w, 3));
  }
}

TEST_CASE("multi_pair multiplies pairwise form values") {
  const auto& q = corpus().at("quadratic-ex");
  const BilinearForm& form = q.form("form");
  Tensor2 xx, yy, xy;
  xx.add({0, 0}, Rational(1));
  yy.add({1, 1}, Rational(1));
  xy.add({0, 1}, Rational(1));
  CHECK(multi_pair(form, xx, yy) == Rational(1));
  CHECK(multi_pair(form, xx, xy) == Rational(0));
  CHECK(multi_pair(form, Tensor2{}, xy) == Rational(0));

  // left nondegeneracy: pairings against all basis pairs separate tensors
  Rng rng(7);
  for (int it = 0; it < 30; ++it) {
    Tensor2 t1 = prenov::testing::random_ten2(rng, 2);
    Tensor2 t2 = prenov::testing::random_ten2(rng, 2);
    bool all_equal = true;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Tensor2 basis;
        basis.add({i, j}, Rational(1));
        if (multi_pair(form, t1, basis) != multi_pair(form, t2, basis)) all_equal = false;
      }
    CHECK(all_equal == (t1 == t2));
  }
}

TEST_CASE("forms know symmetry and degeneracy") {
  BasisSpace s("V", {"v1", "v2"});
  Matrix skew = Matrix::Zero(2, 2);
  skew(0, 1) = Rational(1);
  skew(1, 0) = Rational(-1);
  BilinearForm f(s, skew);
  CHECK(f.skew_symmetric());
  CHECK(!f.symmetric());
  CHECK(f.nondegenerate());
  Matrix sing = Matrix::Zero(2, 2);
  sing(0, 0) = Rational(1);
  BilinearForm g(s, sing);
  CHECK(!g.nondegenerate());
  CHECK_THROWS_AS(g.inverse(), std::domain_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "loopalg/errors.hpp"
#include "loopalg/module.hpp"
#include "loopalg/spec_io.hpp"
#include "loopalg/structure.hpp"

using namespace loopalg;

namespace {

Module v1_2_v1_3() {
  return Module::tensor(Mode::Borel, {{1, Rational(2)}, {1, Rational(3)}});
}

// V_1(2) written out as explicit sparse matrices up to degree K
Module explicit_v1_2(int K, Vec psi) {
  std::map<std::pair<Kind, int>, SpMat> mats;
  for (int k = 0; k <= K; ++k) {
    Rational scale(1);
    for (int i = 0; i < k; ++i) scale *= Rational(2);
    SpMat h(2, 2), e(2, 2), f(2, 2);
    h.insert(0, 0) = scale;
    h.insert(1, 1) = -scale;
    e.insert(0, 1) = scale;
    f.insert(1, 0) = scale;
    mats[{Kind::Cartan, k}] = h;
    mats[{Kind::Raise, k}] = e;
    if (k >= 1) mats[{Kind::Lower, k}] = f;
  }
  return Module::explicit_module(Mode::Borel, 2, K, std::move(mats), std::move(psi));
}

Vec unit(Eigen::Index dim, Eigen::Index i) {
  Vec v = Vec::Constant(dim, Rational(0));
  v[i] = Rational(1);
  return v;
}

bool vec_eq(const Vec& a, const Vec& b) { return a.size() == b.size() && is_zero_vec(a - b); }

}  // namespace

TEST_CASE("single evaluation factor matrices") {
  Module m = Module::tensor(Mode::Borel, {{1, Rational(2)}});
  CHECK(m.dim() == 2);
  Mat f1 = m.act(GenSymbol{Kind::Lower, 1});
  CHECK(f1(1, 0) == Rational(2));
  CHECK(f1(0, 0) == Rational(0));
  CHECK(f1(0, 1) == Rational(0));
  CHECK(f1(1, 1) == Rational(0));
  Mat h0 = m.act(GenSymbol{Kind::Cartan, 0});
  CHECK(h0(0, 0) == Rational(1));
  CHECK(h0(1, 1) == Rational(-1));
  Mat e2 = m.act(GenSymbol{Kind::Raise, 2});
  CHECK(e2(0, 1) == Rational(4));
  CHECK(m.describe() == "V_1(2) [borel]");
}

TEST_CASE("evaluation at point zero keeps only degree-dependent terms") {
  Module m = Module::tensor(Mode::Borel, {{1, Rational(0)}});
  // 0^0 = 1: h_0 and x_0^+ act, every positive degree acts as zero
  CHECK(m.act(GenSymbol{Kind::Cartan, 0})(0, 0) == Rational(1));
  CHECK(is_zero_vec(m.apply(GenSymbol{Kind::Lower, 1}, m.psi())));
  CHECK(is_zero_vec(m.apply(GenSymbol{Kind::Cartan, 1}, unit(2, 0))));
  // negative degrees at the point 0 are undefined (full loop mode)
  Module loop = Module::tensor(Mode::FullLoop, {{1, Rational(0)}});
  CHECK_THROWS_AS(loop.apply(GenSymbol{Kind::Lower, -1}, loop.psi()), DegreeOutOfRange);
}

TEST_CASE("borel mode rejects x_0^- and negative degrees") {
  Module m = v1_2_v1_3();
  CHECK_THROWS_AS(m.apply(GenSymbol{Kind::Lower, 0}, m.psi()), BorelViolation);
  CHECK_THROWS_AS(m.apply(GenSymbol{Kind::Raise, -1}, m.psi()), BorelViolation);
  Module loop = Module::tensor(Mode::FullLoop, {{1, Rational(2)}});
  CHECK(loop.act(GenSymbol{Kind::Lower, 0})(1, 0) == Rational(1));
  CHECK(loop.act(GenSymbol{Kind::Lower, -1})(1, 0) == Rational(1, 2));
}

TEST_CASE("tensor action on the 4-dimensional product") {
  Module m = v1_2_v1_3();
  REQUIRE(m.dim() == 4);
  // basis order: v(x)v', v(x)fv', fv(x)v', fv(x)fv'
  Vec x1 = m.apply(GenSymbol{Kind::Lower, 1}, m.psi());
  CHECK(x1[1] == Rational(3));
  CHECK(x1[2] == Rational(2));
  CHECK(x1[0] == Rational(0));
  CHECK(x1[3] == Rational(0));
  Vec x2 = m.apply(GenSymbol{Kind::Lower, 2}, m.psi());
  CHECK(x2[1] == Rational(9));
  CHECK(x2[2] == Rational(4));
  // (x_1^-)^2 psi = 12 (fv (x) fv'), divided square = 6
  Vec sq = m.apply(GenSymbol{Kind::Lower, 1}, x1);
  CHECK(sq[3] == Rational(12));
  Vec div = m.apply(OperatorWord({{Current(GenSymbol{Kind::Lower, 1}), 2}}), m.psi());
  CHECK(div[3] == Rational(6));
  CHECK(is_zero_vec(m.apply(GenSymbol{Kind::Lower, 1}, sq)));
  CHECK(m.describe() == "V_1(2) (x) V_1(3) [borel]");
}

TEST_CASE("operator words: negative divided powers are the zero operator") {
  Module m = v1_2_v1_3();
  OperatorWord w({{Current(GenSymbol{Kind::Lower, 1}), -1}});
  CHECK(is_zero_vec(m.apply(w, m.psi())));
  CHECK(is_zero_vec(m.act(w).col(0)));
  // identity word
  CHECK(vec_eq(m.apply(OperatorWord::identity(), m.psi()), m.psi()));
}

TEST_CASE("shift factor moves only h_0") {
  Module m = Module::tensor(Mode::Borel, {{1, Rational(2)}}, ShiftFactor{Rational(1, 2)});
  CHECK(m.act(GenSymbol{Kind::Cartan, 0})(0, 0) == Rational(3, 2));
  CHECK(m.act(GenSymbol{Kind::Cartan, 1})(0, 0) == Rational(2));
  CHECK(m.act(GenSymbol{Kind::Lower, 1})(1, 0) == Rational(2));
  CHECK(m.describe() == "V_1(2) (x) Shift(1/2) [borel]");
  CHECK_THROWS(Module::tensor(Mode::FullLoop, {{1, Rational(2)}}, ShiftFactor{Rational(1)}));
}

TEST_CASE("highest weight vector and weight sequence") {
  Module m = v1_2_v1_3();
  HighestWeight hw = highest_weight_vector(m);
  CHECK(vec_eq(hw.psi, m.psi()));
  CHECK(hw.d_at(0) == Rational(2));
  CHECK(hw.d_at(1) == Rational(5));
  CHECK(hw.d_at(2) == Rational(13));
  CHECK(hw.d_at(3) == Rational(35));
}

TEST_CASE("cyclic span sectors and nilpotency degree") {
  Module m = v1_2_v1_3();
  SectorDecomposition dec = cyclic_span(m, m.psi());
  CHECK(dec.r == 2);
  CHECK(dec.total_dim() == 4);
  CHECK(dec.sector_dim(0) == 1);
  CHECK(dec.sector_dim(1) == 2);
  CHECK(dec.sector_dim(2) == 1);
  CHECK(nilpotency_degree(m, m.psi()) == 2);

  // sector grading: every basis vector is an h_0 eigenvector with d_0 - 2n
  for (int n = 0; n <= dec.r; ++n)
    for (const Vec& v : dec.sectors[n].rows()) {
      Vec hv = m.apply(GenSymbol{Kind::Cartan, 0}, v);
      CHECK(vec_eq(hv, v * Rational(2 - 2 * n)));
    }
}

TEST_CASE("spin-0 factor at any point is trivial") {
  Module m = Module::tensor(Mode::Borel, {{0, Rational(5)}});
  CHECK(m.dim() == 1);
  SectorDecomposition dec = cyclic_span(m, m.psi());
  CHECK(dec.r == 0);
  CHECK(nilpotency_degree(m, m.psi()) == 0);
}

TEST_CASE("defining relations hold on tensor modules") {
  Module m = v1_2_v1_3();
  RelationReport rep = check_defining_relations(m, 3);
  CHECK(rep.all_ok);
  CHECK(!rep.items.empty());
  CHECK_NOTHROW(require_defining_relations(m, 3));
  Module shifted = Module::tensor(Mode::Borel, {{2, Rational(1, 2)}}, ShiftFactor{Rational(-1)});
  CHECK(check_defining_relations(shifted, 3).all_ok);
  Module loop = Module::tensor(Mode::FullLoop, {{1, Rational(2)}, {2, Rational(-1)}});
  CHECK(check_defining_relations(loop, 2).all_ok);
}

TEST_CASE("explicit modules: zero defaults, caps and validation") {
  Module m = explicit_v1_2(4, unit(2, 0));
  CHECK(m.is_explicit());
  CHECK(m.degree_cap() == 4);
  CHECK(m.describe() == "explicit dim=2 K=4 [borel]");
  CHECK_NOTHROW(require_defining_relations(m, 2));
  HighestWeight hw = highest_weight_vector(m);
  CHECK(hw.d_at(0) == Rational(1));
  CHECK(hw.d_at(1) == Rational(2));
  CHECK(nilpotency_degree(m, m.psi()) == 1);
  CHECK_THROWS_AS(m.apply(GenSymbol{Kind::Lower, 5}, m.psi()), DegreeOutOfRange);

  CHECK_THROWS_AS(highest_weight_vector(explicit_v1_2(4, unit(2, 1))), NotHighestWeight);
  try {
    highest_weight_vector(explicit_v1_2(4, unit(2, 1)));
  } catch (const NotHighestWeight& e) {
    CHECK(e.k >= 0);
  }
}

TEST_CASE("explicit module violating a relation is rejected by the checker") {
  // x_2^- deliberately wrong: scale 5 instead of 4
  std::map<std::pair<Kind, int>, SpMat> mats;
  SpMat h0(2, 2), e0(2, 2), f1(2, 2), f2(2, 2), h1(2, 2), e1(2, 2);
  h0.insert(0, 0) = Rational(1);
  h0.insert(1, 1) = Rational(-1);
  h1.insert(0, 0) = Rational(2);
  h1.insert(1, 1) = Rational(-2);
  e0.insert(0, 1) = Rational(1);
  e1.insert(0, 1) = Rational(2);
  f1.insert(1, 0) = Rational(2);
  f2.insert(1, 0) = Rational(5);
  mats[{Kind::Cartan, 0}] = h0;
  mats[{Kind::Cartan, 1}] = h1;
  mats[{Kind::Raise, 0}] = e0;
  mats[{Kind::Raise, 1}] = e1;
  mats[{Kind::Lower, 1}] = f1;
  mats[{Kind::Lower, 2}] = f2;
  Module bad = Module::explicit_module(Mode::Borel, 2, 2, std::move(mats), unit(2, 0));
  CHECK(!check_defining_relations(bad, 2).all_ok);
  CHECK_THROWS_AS(require_defining_relations(bad, 2), RelationViolation);
}

TEST_CASE("module spec parsing round trip") {
  std::istringstream in(
      "# tensor example\n"
      "mode borel\n"
      "factor spin2=1 a=2\n"
      "factor spin2=1 a=3\n"
      "shift c=1/2\n");
  Module m = parse_module_spec(in);
  CHECK(m.dim() == 4);
  CHECK(m.mode() == Mode::Borel);
  REQUIRE(m.shift().has_value());
  CHECK(m.shift()->c == Rational(1, 2));
  HighestWeight hw = highest_weight_vector(m);
  CHECK(hw.d_at(0) == Rational(5, 2));
  CHECK(hw.d_at(1) == Rational(5));
}

TEST_CASE("module spec parsing: explicit matrices and mode override") {
  std::istringstream in(
      "mode borel\n"
      "explicit dim=2 K=1\n"
      "psi 1 0\n"
      "mat kind=h k=0 0 0 1\n"
      "mat kind=h k=0 1 1 -1\n"
      "mat kind=h k=1 0 0 2\n"
      "mat kind=h k=1 1 1 -2\n"
      "mat kind=xp k=0 0 1 1\n"
      "mat kind=xp k=1 0 1 2\n"
      "mat kind=xm k=1 1 0 2\n");
  Module m = parse_module_spec(in);
  CHECK(m.is_explicit());
  CHECK(m.dim() == 2);
  CHECK(m.act(GenSymbol{Kind::Lower, 1})(1, 0) == Rational(2));

  std::istringstream in2("factor spin2=1 a=2\n");
  Module loop = parse_module_spec(in2, Mode::FullLoop);
  CHECK(loop.mode() == Mode::FullLoop);
}

TEST_CASE("module spec parse errors carry line numbers") {
  auto expect_line = [](const std::string& text, int line) {
    std::istringstream in(text);
    try {
      parse_module_spec(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == line);
    }
  };
  expect_line("mode borel\nfactor spin2=oops a=2\n", 2);
  expect_line("bogus directive\n", 1);
  expect_line("mode borel\nfactor spin2=1 a=2\nshift c=\n", 3);
  // psi-length mismatch is attributed to the explicit declaration line
  expect_line("explicit dim=2 K=1\npsi 1\n", 1);
}

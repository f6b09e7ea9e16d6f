#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "loopalg/errors.hpp"
#include "loopalg/verify.hpp"

using namespace loopalg;

namespace {

Module v1_2_v1_3() {
  return Module::tensor(Mode::Borel, {{1, Rational(2)}, {1, Rational(3)}});
}

struct Pipeline {
  Module m;
  HighestWeight hw;
  SectorDecomposition dec;
};

Pipeline pipeline(Module m) {
  HighestWeight hw = highest_weight_vector(m);
  SectorDecomposition dec = cyclic_span(m, hw.psi);
  return {std::move(m), std::move(hw), std::move(dec)};
}

}  // namespace

TEST_CASE("null relation: the defining-relation instance") {
  auto p = pipeline(v1_2_v1_3());
  // l=1, n=1, m=0, t=0 reduces to x_1^+ x_1^- psi = h_2 psi
  CheckResult cr = check_null_rel(p.m, p.hw, 1, 1, 0, 0, {});
  CHECK(cr.passed());
  CHECK(cr.residual_zero);
}

TEST_CASE("null relation across an index grid") {
  for (Module m : {v1_2_v1_3(),
                   Module::tensor(Mode::Borel, {{2, Rational(1, 2)}, {1, Rational(-1)}}),
                   Module::tensor(Mode::Borel, {{1, Rational(1)}}, ShiftFactor{Rational(-1)})}) {
    auto p = pipeline(std::move(m));
    for (int ell = 0; ell <= 2; ++ell)
      for (int n = 1; n <= 2; ++n)
        for (int mm = 0; mm <= 3; ++mm)
          for (int t = 0; t <= std::min(mm + 1, 2); ++t) {
            std::vector<int> ks;
            for (int i = 0; i < t; ++i) ks.push_back(i + 1);
            CheckResult cr = check_null_rel(p.m, p.hw, ell, n, mm, t, ks);
            CHECK(cr.residual_zero);
          }
  }
}

TEST_CASE("null relation input validation") {
  auto p = pipeline(v1_2_v1_3());
  CHECK_THROWS_AS(check_null_rel(p.m, p.hw, 0, 1, 1, 3, {1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(check_null_rel(p.m, p.hw, 0, 1, 1, 1, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(check_null_rel(p.m, p.hw, 0, 0, 1, 0, {}), std::invalid_argument);
}

TEST_CASE("collapse onto the top sector") {
  auto p = pipeline(v1_2_v1_3());
  REQUIRE(p.dec.r == 2);
  // m = r: the constant A exists and is order-independent in the k-list
  CheckResult c12 = check_collapse(p.m, p.hw, 2, 2, 2, {1, 2});
  CheckResult c21 = check_collapse(p.m, p.hw, 2, 2, 2, {2, 1});
  CHECK(c12.residual_zero);
  REQUIRE(c12.constant.has_value());
  REQUIRE(c21.constant.has_value());
  CHECK(*c12.constant == *c21.constant);
  // x_1^- x_2^- psi vs (x_1^-)^2 psi: 30 vs 12 on fv (x) fv'
  CHECK(*c12.constant == Rational(30, 12));
  // m > r: the left side must vanish outright
  CheckResult beyond = check_collapse(p.m, p.hw, 2, 3, 2, {2, 3});
  CHECK(beyond.residual_zero);
  CHECK(*beyond.constant == Rational(0));
  CHECK_THROWS_AS(check_collapse(p.m, p.hw, 2, 1, 1, {2}), std::invalid_argument);
}

TEST_CASE("recursive formulas A_n, B_n, C_n") {
  for (Module m : {v1_2_v1_3(), Module::tensor(Mode::Borel, {{2, Rational(3)}, {1, Rational(2)}}),
                   Module::tensor(Mode::Borel, {{1, Rational(1, 2)}}, ShiftFactor{Rational(7)})}) {
    auto p = pipeline(std::move(m));
    for (int n = 1; n <= 4; ++n) {
      AbcResult abc = check_ABC(p.m, p.hw, n);
      CHECK(abc.a.residual_zero);
      CHECK(abc.b.residual_zero);
      CHECK(abc.c.residual_zero);
    }
  }
}

TEST_CASE("square-zero lemma for distinct parameters") {
  auto p = pipeline(v1_2_v1_3());
  DrinfeldData dd = drinfeld_data(p.m, p.hw, p.dec.r);
  for (int j = 1; j <= dd.s(); ++j) {
    CheckResult cr = check_square_zero(p.m, p.hw, dd, j);
    CHECK(cr.residual_zero);
  }
  CHECK_THROWS_AS(check_square_zero(p.m, p.hw, dd, 3), std::out_of_range);

  auto q = pipeline(Module::tensor(Mode::Borel, {{1, Rational(2)}, {1, Rational(2)}}));
  DrinfeldData dq = drinfeld_data(q.m, q.hw, q.dec.r);
  CHECK_THROWS_AS(check_square_zero(q.m, q.hw, dq, 1), DegenerateParameters);
}

TEST_CASE("vanish lemma and its inconclusive branch") {
  auto p = pipeline(v1_2_v1_3());
  // A = {2,3,0} annihilates psi (the reduction relation), so any B keeps it zero
  ParamSet a = extended_set(ParamSet{Rational(2), Rational(3)}, 1);
  for (const ParamSet& b :
       {ParamSet{Rational(7)}, ParamSet{Rational(0)}, ParamSet{Rational(1), Rational(2)}}) {
    CheckResult cr = check_vanish_lemma(p.m, p.hw, a, b);
    CHECK(cr.applicable);
    CHECK(cr.residual_zero);
  }
  // hypothesis fails: x_1^-({0}) psi != 0
  CheckResult inc = check_vanish_lemma(p.m, p.hw, ParamSet{Rational(0)}, ParamSet{Rational(1)});
  CHECK(!inc.applicable);
  CHECK(inc.passed());
}

TEST_CASE("suite parsing") {
  CHECK(parse_suite("relations") == Suite::Relations);
  CHECK(parse_suite("lemmas") == Suite::Lemmas);
  CHECK(parse_suite("drinfeld") == Suite::Drinfeld);
  CHECK(parse_suite("all") == Suite::All);
  CHECK_THROWS_AS(parse_suite("everything"), std::invalid_argument);
}

TEST_CASE("full suite passes on the reference product") {
  Module m = v1_2_v1_3();
  SuiteReport rep = run_suite(m, Suite::All, 4);
  CHECK(rep.ok());
  CHECK(rep.failed == 0);
  CHECK(rep.passed > 100);
  std::string text = rep.str();
  CHECK(text.find("# verdict\tPASS") != std::string::npos);
  // deterministic byte-for-byte
  CHECK(run_suite(m, Suite::All, 4).str() == text);
}

TEST_CASE("lemma suite degenerates gracefully on the trivial module") {
  Module m = Module::tensor(Mode::Borel, {{1, Rational(0)}});
  SuiteReport rep = run_suite(m, Suite::Lemmas, 3);
  CHECK(rep.ok());
}

TEST_CASE("relations suite flags a corrupted explicit module") {
  std::map<std::pair<Kind, int>, SpMat> mats;
  SpMat h0(2, 2), e0(2, 2), f1(2, 2), f2(2, 2), h1(2, 2), e1(2, 2);
  h0.insert(0, 0) = Rational(1);
  h0.insert(1, 1) = Rational(-1);
  h1.insert(0, 0) = Rational(2);
  h1.insert(1, 1) = Rational(-2);
  e0.insert(0, 1) = Rational(1);
  e1.insert(0, 1) = Rational(2);
  f1.insert(1, 0) = Rational(2);
  f2.insert(1, 0) = Rational(5);  // should be 4
  mats[{Kind::Cartan, 0}] = h0;
  mats[{Kind::Cartan, 1}] = h1;
  mats[{Kind::Raise, 0}] = e0;
  mats[{Kind::Raise, 1}] = e1;
  mats[{Kind::Lower, 1}] = f1;
  mats[{Kind::Lower, 2}] = f2;
  Vec psi = Vec::Constant(2, Rational(0));
  psi[0] = Rational(1);
  Module bad = Module::explicit_module(Mode::Borel, 2, 2, std::move(mats), std::move(psi));
  SuiteReport rep = run_suite(bad, Suite::Relations, 2);
  CHECK(!rep.ok());
  CHECK(rep.failed > 0);
  CHECK(rep.str().find("# verdict\tFAIL") != std::string::npos);
}

#include "slgf/mvseries.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace slgf;

namespace {

VariableSet hodge_vars(int r) { return VariableSet::hodge(r); }

TruncatedSeries u_series(int t_max, const std::vector<long>& coeffs) {
  auto vars = VariableSet(0, true, false, false, 0);
  auto spec = TruncationSpec::for_complexity(t_max);
  TruncatedSeries s(vars, spec);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    s += TruncatedSeries::variable(vars, spec, Var::u(), static_cast<int>(i), Rational(coeffs[i]));
  }
  return s;
}

// Random series over x1..x_r, u with small integer coefficients.
TruncatedSeries random_series(std::mt19937_64& rng, int r, int t_max, bool unit_constant, int nterms) {
  auto vars = hodge_vars(r);
  auto spec = TruncationSpec::for_complexity(t_max);
  TruncatedSeries s(vars, spec);
  if (unit_constant) s.add_term(Monomial(), Rational(1));
  std::uniform_int_distribution<int> deg(0, 3);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int k = 0; k < nterms; ++k) {
    Monomial m;
    for (int i = 0; i <= r; ++i) m.set(i, deg(rng));
    if (m.is_one()) continue;
    s.add_term(m, Rational(coef(rng), 1 + (k % 3)));
  }
  return s;
}

}  // namespace

TEST(MvSeries, AddExamples) {
  auto a = u_series(4, {1, 1});
  auto b = u_series(4, {1, -1});
  EXPECT_EQ(to_text(a + b), "2");
  TruncatedSeries zero(a.vars(), a.spec());
  EXPECT_EQ(a + zero, a);

  auto vars = hodge_vars(2);
  auto spec = TruncationSpec::for_complexity(3);
  auto x1u = TruncatedSeries::monomial(vars, spec, Monomial::of(vars, {{Var::x(1), 1}, {Var::u(), 1}}));
  auto x2u = TruncatedSeries::monomial(vars, spec, Monomial::of(vars, {{Var::x(2), 1}, {Var::u(), 1}}));
  EXPECT_EQ(to_text(x1u + x2u), "x1*u + x2*u");
}

TEST(MvSeries, AddUsesCommonSpec) {
  auto a = u_series(6, {0, 0, 0, 0, 0, 1});
  auto b = u_series(3, {1});
  auto c = a + b;
  EXPECT_EQ(c.spec().u_max, 3);
  EXPECT_EQ(to_text(c), "1");
}

TEST(MvSeries, MismatchedVariablesRejected) {
  auto a = u_series(3, {1});
  auto b = TruncatedSeries::constant(hodge_vars(1), TruncationSpec::for_complexity(3), Rational(1));
  EXPECT_THROW(a + b, std::invalid_argument);
  EXPECT_THROW(mul(a, b), std::invalid_argument);
}

TEST(MvSeries, MulExamples) {
  const int t = 7;
  std::vector<long> ones(t + 1, 1);
  EXPECT_EQ(to_text(mul(u_series(t, {1, -1}), u_series(t, ones))), "1");
  auto s = u_series(t, {2, 0, 5});
  EXPECT_EQ(mul(s, u_series(t, {1})), s);

  auto vars = hodge_vars(2);
  auto spec = TruncationSpec::for_complexity(3);
  auto x = TruncatedSeries::variable(vars, spec, Var::x(1)) + TruncatedSeries::variable(vars, spec, Var::x(2));
  EXPECT_EQ(to_text(mul(x, x)), "x1^2 + 2*x1*x2 + x2^2");
}

TEST(MvSeries, ExpExamples) {
  auto e = exp(u_series(3, {}));
  EXPECT_EQ(to_text(e), "1");
  EXPECT_EQ(to_text(exp(u_series(3, {0, 1}))), "1 + u + 1/2*u^2 + 1/6*u^3");
  EXPECT_EQ(to_text(exp(log(u_series(5, {1, 1})))), "1 + u");
  EXPECT_THROW(exp(u_series(3, {1, 1})), std::domain_error);
}

TEST(MvSeries, LogExamples) {
  EXPECT_EQ(to_text(log(u_series(4, {1}))), "0");
  EXPECT_EQ(to_text(log(u_series(4, {1, -1}))), "-u - 1/2*u^2 - 1/3*u^3 - 1/4*u^4");
  auto a = u_series(6, {1, -1});
  EXPECT_EQ(to_text(log(mul(reciprocal(a), a))), "0");
  EXPECT_THROW(log(u_series(4, {2, 1})), std::domain_error);
}

TEST(MvSeries, PowSeriesExponent) {
  auto base = u_series(3, {1, -1});
  EXPECT_EQ(to_text(pow_series_exponent(base, u_series(3, {}))), "1");
  EXPECT_EQ(to_text(pow_series_exponent(base, u_series(3, {-2}))), "1 + 2*u + 3*u^2 + 4*u^3");

  auto vars = hodge_vars(1);
  auto spec = TruncationSpec::for_complexity(2);
  auto one_minus_u = TruncatedSeries::constant(vars, spec, Rational(1)) -
                     TruncatedSeries::variable(vars, spec, Var::u());
  auto x = TruncatedSeries::variable(vars, spec, Var::x(1));
  // 1 - x u + x(x-1)/2 u^2
  EXPECT_EQ(to_text(pow_series_exponent(one_minus_u, x)), "1 - x1*u - 1/2*x1*u^2 + 1/2*x1^2*u^2");
  EXPECT_THROW(pow_series_exponent(u_series(3, {2, 1}), x.truncated(TruncationSpec::for_complexity(2))),
               std::exception);
}

TEST(MvSeries, SubstituteExamples) {
  auto vars = hodge_vars(1);
  auto spec = TruncationSpec::for_complexity(4);
  auto x1u = TruncatedSeries::monomial(vars, spec, Monomial::of(vars, {{Var::x(1), 1}, {Var::u(), 1}}));
  auto sq = substitute(x1u, {{Var::x(1), TruncatedSeries::variable(vars, spec, Var::x(1), 2)},
                             {Var::u(), TruncatedSeries::variable(vars, spec, Var::u(), 2)}});
  EXPECT_EQ(to_text(sq), "x1^2*u^2");

  // p_l <- 0 keeps the p-free part.
  VariableSet pv(0, true, false, false, 2);
  TruncationSpec ps;
  ps.u_max = 3;
  ps.p_max = 4;
  auto f = TruncatedSeries::constant(pv, ps, Rational(5)) + TruncatedSeries::variable(pv, ps, Var::u()) +
           TruncatedSeries::variable(pv, ps, Var::p(1), 2) + TruncatedSeries::variable(pv, ps, Var::p(2));
  auto g = substitute(f, {{Var::p(1), TruncatedSeries(pv, ps)}, {Var::p(2), TruncatedSeries(pv, ps)}});
  EXPECT_EQ(to_text(g), "5 + u");

  // 1/(1-p1) with p1 <- z u x1 at weight 3.
  VariableSet src(0, false, false, false, 1);
  TruncationSpec ss;
  ss.p_max = 3;
  auto geom = reciprocal(TruncatedSeries::constant(src, ss, Rational(1)) - TruncatedSeries::variable(src, ss, Var::p(1)));
  VariableSet dst(1, true, true, false, 0);
  TruncationSpec ds;
  ds.u_max = 3;
  ds.x_max = 3;
  ds.z = {0, 3};
  auto zux = TruncatedSeries::monomial(dst, ds, Monomial::of(dst, {{Var::z(), 1}, {Var::u(), 1}, {Var::x(1), 1}}));
  auto h = substitute(geom, {{Var::p(1), zux}}, dst, ds);
  EXPECT_EQ(to_text(h), "1 + x1*u*z + x1^2*u^2*z^2 + x1^3*u^3*z^3");
}

TEST(MvSeries, SubstituteRejectsConstantForU) {
  auto s = u_series(3, {1, 1});
  auto c = TruncatedSeries::constant(s.vars(), s.spec(), Rational(1));
  EXPECT_THROW(substitute(s, {{Var::u(), c}}), TruncationError);
}

TEST(MvSeries, SubstituteIdentity) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 20; ++iter) {
    auto a = random_series(rng, 2, 5, false, 20);
    auto id = substitute(a, {{Var::x(1), TruncatedSeries::variable(a.vars(), a.spec(), Var::x(1))},
                             {Var::u(), TruncatedSeries::variable(a.vars(), a.spec(), Var::u())}});
    EXPECT_EQ(id, a);
  }
}

TEST(MvSeries, SubstituteMultiTermMatchesProducts) {
  auto vars = hodge_vars(1);
  auto spec = TruncationSpec::for_complexity(5);
  auto u = TruncatedSeries::variable(vars, spec, Var::u());
  auto x = TruncatedSeries::variable(vars, spec, Var::x(1));
  auto a = mul(mul(u, u), x) + u;
  auto repl = u + mul(u, x);
  auto got = substitute(a, {{Var::u(), repl}});
  auto want = mul(mul(repl, repl), x) + repl;
  EXPECT_EQ(got, want);
}

TEST(MvSeries, CoefficientExamples) {
  auto s = u_series(3, {1, 3});
  EXPECT_EQ(s.coefficient(Monomial::of(s.vars(), {{Var::u(), 1}})), Rational(3));
  EXPECT_EQ(s.coefficient(Monomial::of(s.vars(), {{Var::u(), 2}})), Rational(0));
  EXPECT_THROW(s.coefficient(Monomial::of(s.vars(), {{Var::u(), 4}})), TruncationError);

  auto vars = hodge_vars(2);
  auto spec = TruncationSpec::for_complexity(3);
  auto x = TruncatedSeries::variable(vars, spec, Var::x(1)) + TruncatedSeries::variable(vars, spec, Var::x(2));
  auto q = mul(x, x) - TruncatedSeries::monomial(vars, spec, Monomial::of(vars, {{Var::x(1), 1}, {Var::x(2), 1}}));
  EXPECT_EQ(q.coefficient(Monomial::of(vars, {{Var::x(1), 1}, {Var::x(2), 1}})), Rational(1));
  EXPECT_THROW(q.coefficient(Monomial::of(vars, {{Var::x(1), 5}})), TruncationError);
}

TEST(MvSeries, GradeExtractExamples) {
  VariableSet vars(0, false, false, true, 1);
  TruncationSpec spec;
  spec.p_max = 2;
  spec.hbar = {-2, 3};
  auto a = TruncatedSeries::variable(vars, spec, Var::p(1), 1, Rational(2));
  auto b = TruncatedSeries::monomial(vars, spec, Monomial::of(vars, {{Var::p(1), 2}, {Var::hbar(), 1}}), Rational(7));
  auto s = a + b;
  EXPECT_EQ(grade_extract(s, Var::hbar(), 0), a);
  EXPECT_TRUE(grade_extract(s, Var::hbar(), -1).is_zero());

  std::vector<long> ones(6, 1);
  EXPECT_EQ(to_text(grade_extract(u_series(5, ones), Var::u(), 3)), "1");
}

TEST(MvSeries, LaurentWindow) {
  VariableSet vars(0, true, false, true, 0);
  TruncationSpec spec;
  spec.u_max = 4;
  spec.hbar = {-2, 2};
  auto inv = TruncatedSeries::monomial(vars, spec, Monomial::of(vars, {{Var::hbar(), -1}, {Var::u(), 1}}));
  auto h = TruncatedSeries::variable(vars, spec, Var::hbar());
  EXPECT_EQ(to_text(mul(inv, h)), "u");
  EXPECT_EQ(to_text(mul(inv, inv)), "u^2*hbar^-2");
  EXPECT_TRUE(mul(mul(inv, inv), inv).is_zero());
}

TEST(MvSeries, RandomExpLogInverse) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 12; ++iter) {
    int r = 1 + iter % 2;
    int t = 3 + iter % 4;
    auto a = random_series(rng, r, t, false, 6);
    EXPECT_EQ(log(exp(a)), a) << iter;
    auto b = random_series(rng, r, t, true, 6);
    EXPECT_EQ(exp(log(b)), b) << iter;
  }
}

TEST(MvSeries, RandomExpLogThreeVariablesT8) {
  std::mt19937_64 rng(12);
  auto a = random_series(rng, 2, 8, false, 5);
  EXPECT_EQ(log(exp(a)), a);
}

TEST(MvSeries, RandomMulCommutativeAssociative) {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 10; ++iter) {
    auto a = random_series(rng, 2, 6, true, 12);
    auto b = random_series(rng, 2, 6, false, 12);
    auto c = random_series(rng, 2, 6, true, 12);
    EXPECT_EQ(mul(a, b), mul(b, a));
    EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
    EXPECT_EQ(mul(a, b + c), mul(a, b) + mul(a, c));
  }
}

TEST(MvSeries, RandomLogOfProduct) {
  std::mt19937_64 rng(14);
  for (int iter = 0; iter < 8; ++iter) {
    auto a = random_series(rng, 2, 5, true, 8);
    auto b = random_series(rng, 2, 5, true, 8);
    EXPECT_EQ(log(mul(a, b)), log(a) + log(b)) << iter;
    EXPECT_EQ(mul(a, reciprocal(a)), TruncatedSeries::constant(a.vars(), a.spec(), Rational(1)));
  }
}

TEST(MvSeries, PowerMatchesRepeatedMul) {
  std::mt19937_64 rng(15);
  auto a = random_series(rng, 1, 6, true, 8);
  auto p = TruncatedSeries::constant(a.vars(), a.spec(), Rational(1));
  for (int k = 0; k < 6; ++k) {
    EXPECT_EQ(power(a, k), p);
    p = mul(p, a);
  }
}

TEST(MvSeries, NonNilpotentRejected) {
  VariableSet vars(0, true, true, false, 0);
  TruncationSpec spec;
  spec.u_max = 3;
  spec.z = {-3, 3};
  auto z = TruncatedSeries::variable(vars, spec, Var::z());
  EXPECT_THROW(exp(z), TruncationError);
}

TEST(MvSeries, CanonicalTextOrder) {
  VariableSet vars(0, false, false, false, 3);
  TruncationSpec spec;
  spec.p_max = 3;
  auto s = TruncatedSeries::variable(vars, spec, Var::p(3), 1, Rational(1, 3)) +
           TruncatedSeries::variable(vars, spec, Var::p(1), 3, Rational(1, 6)) +
           TruncatedSeries::monomial(vars, spec, Monomial::of(vars, {{Var::p(1), 1}, {Var::p(2), 1}}),
                                     Rational(-1, 2)) +
           TruncatedSeries::variable(vars, spec, Var::p(1));
  EXPECT_EQ(to_text(s), "p1 + 1/6*p1^3 - 1/2*p1*p2 + 1/3*p3");
}

#include "slgf/exactmath.hpp"

#include <gtest/gtest.h>

#include <random>
#include <thread>

using slgf::Integer;
using slgf::Rational;

namespace {

// Trial-division reference for mu.
int mobius_by_factoring(long n) {
  int sign = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

}  // namespace

TEST(Mobius, SmallValues) {
  EXPECT_EQ(slgf::mobius(1), 1);
  EXPECT_EQ(slgf::mobius(4), 0);
  EXPECT_EQ(slgf::mobius(6), 1);
  EXPECT_EQ(slgf::mobius(7), -1);
  EXPECT_EQ(slgf::mobius(30), -1);
}

TEST(Mobius, RejectsZero) {
  EXPECT_THROW(slgf::mobius(0), std::invalid_argument);
  EXPECT_THROW(slgf::totient(0), std::invalid_argument);
}

TEST(Mobius, MatchesFactoring) {
  for (long n = 1; n <= 5000; ++n) ASSERT_EQ(slgf::mobius(n), mobius_by_factoring(n)) << n;
}

TEST(Mobius, DivisorSumIsDelta) {
  for (long n = 1; n <= 10000; ++n) {
    long s = 0;
    for (long a : slgf::divisors(n)) s += slgf::mobius(a);
    ASSERT_EQ(s, n == 1 ? 1 : 0) << n;
  }
}

TEST(Totient, SmallValues) {
  EXPECT_EQ(slgf::totient(1), 1);
  EXPECT_EQ(slgf::totient(6), 2);
  EXPECT_EQ(slgf::totient(12), 4);
}

TEST(Totient, DivisorSumIsIdentity) {
  for (long n = 1; n <= 10000; ++n) {
    long s = 0;
    for (long a : slgf::divisors(n)) s += slgf::totient(a);
    ASSERT_EQ(s, n) << n;
  }
}

TEST(Totient, MobiusInversion) {
  for (long n = 1; n <= 2000; ++n) {
    long s = 0;
    for (long a : slgf::divisors(n)) s += slgf::mobius(a) * (n / a);
    ASSERT_EQ(s, slgf::totient(n)) << n;
  }
}

TEST(Bernoulli, FirstValues) {
  EXPECT_EQ(slgf::bernoulli(0), Rational(1));
  EXPECT_EQ(slgf::bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(slgf::bernoulli(2), Rational(1, 6));
  EXPECT_EQ(slgf::bernoulli(3), Rational(0));
  EXPECT_EQ(slgf::bernoulli(4), Rational(-1, 30));
  EXPECT_EQ(slgf::bernoulli(12), Rational(-691, 2730));
}

TEST(Bernoulli, OddIndicesVanish) {
  for (long n = 1; n <= 30; ++n) EXPECT_TRUE(slgf::bernoulli(2 * n + 1).is_zero()) << n;
}

TEST(Bernoulli, MatchesSeriesOfXOverExpMinusOne) {
  // x/(e^x-1) * (e^x-1)/x = 1, i.e. sum_{i<=n} B_i / (i! (n+1-i)!) = [n == 0].
  Rational fact(1);
  std::vector<Rational> factorial{Rational(1)};
  for (int i = 1; i <= 25; ++i) factorial.push_back(factorial.back() * Rational(i));
  for (int n = 0; n < 24; ++n) {
    Rational s;
    for (int i = 0; i <= n; ++i) s += slgf::bernoulli(i) / (factorial[i] * factorial[n + 1 - i]);
    EXPECT_EQ(s, Rational(n == 0 ? 1 : 0)) << n;
  }
}

TEST(Binomial, Values) {
  EXPECT_EQ(slgf::binomial(5, 2), Integer(10));
  EXPECT_EQ(slgf::binomial(7, 0), Integer(1));
  EXPECT_EQ(slgf::binomial(-7, 0), Integer(1));
  EXPECT_EQ(slgf::binomial(-1, 3), Integer(-1));
  EXPECT_EQ(slgf::binomial(-2, 3), Integer(-4));
  EXPECT_EQ(slgf::binomial(3, 5), Integer(0));
  EXPECT_EQ(slgf::binomial(60, 30), Integer("118264581564861424"));
}

TEST(Binomial, GeneralizedAgreesWithFallingFactorial) {
  for (long n = -12; n <= 12; ++n) {
    for (long k = 0; k <= 10; ++k) {
      EXPECT_EQ(Rational(slgf::binomial(n, k)), slgf::binomial(Rational(n), k)) << n << " " << k;
    }
  }
  EXPECT_EQ(slgf::binomial(Rational(1, 2), 2), Rational(-1, 8));
}

TEST(RationalTest, CanonicalForm) {
  Rational q(6, -4);
  EXPECT_EQ(q.numerator(), Integer(-3));
  EXPECT_EQ(q.denominator(), Integer(2));
  EXPECT_EQ(q.str(), "-3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational::parse("10/-4"), Rational(-5, 2));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(1, 2).to_integer(), std::domain_error);
}

TEST(RationalTest, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 5000);
  for (int iter = 0; iter < 2000; ++iter) {
    Rational a(num(rng), den(rng));
    Rational b(num(rng), den(rng));
    Rational c(num(rng), den(rng));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, Rational(0));
    if (!b.is_zero()) ASSERT_EQ((a / b) * b, a);
    Rational d = a;
    d.add_product(b, c);
    ASSERT_EQ(d, a + b * c);
    ASSERT_TRUE(d.denominator() > 0);
  }
}

TEST(Caches, ConcurrentFillIsConsistent) {
  std::vector<std::thread> threads;
  std::vector<long> sums(4, 0);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([t, &sums] {
      long s = 0;
      for (long n = 20000 - t; n >= 1; n -= 3) s += slgf::mobius(n) + slgf::totient(n);
      for (long p = 0; p < 40; ++p) s += slgf::bernoulli(p).sign();
      sums[t] = s;
    });
  }
  for (auto& th : threads) th.join();
  for (int t = 0; t < 4; ++t) {
    long s = 0;
    for (long n = 20000 - t; n >= 1; n -= 3) s += slgf::mobius(n) + slgf::totient(n);
    for (long p = 0; p < 40; ++p) s += slgf::bernoulli(p).sign();
    EXPECT_EQ(sums[t], s);
  }
}

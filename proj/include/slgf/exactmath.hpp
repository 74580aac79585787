#ifndef SLGF_EXACTMATH_HPP
#define SLGF_EXACTMATH_HPP

// Exact integer/rational arithmetic and the elementary number theory
// (Moebius, totient, Bernoulli, binomial) shared by every series formula.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace slgf {

using Integer = mpz_class;

/// Arbitrary-precision rational kept in lowest terms with a positive
/// denominator. All arithmetic is exact.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : value_(v) {}  // NOLINT
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Parses "a" or "a/b".
  static Rational parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) {
      throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    return Rational(q);
  }

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  const mpq_class& raw() const { return value_; }

  /// Integer value; throws when the rational is not integral.
  Integer to_integer() const {
    if (!is_integer()) throw std::domain_error("Rational: not an integer: " + str());
    return value_.get_num();
  }

  /// "num" for integers, "num/den" otherwise.
  std::string str() const { return value_.get_str(10); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  /// this += a * b without a temporary Rational.
  void add_product(const Rational& a, const Rational& b) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), tmp.get_mpq_t());
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  explicit Rational(mpq_class q) : value_(std::move(q)) {}
  mpq_class value_{0};
};

/// (-1)^n for any integer n.
constexpr int neg_one_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

namespace detail {

// Append-only memo table guarded by a shared mutex; concurrent fills are
// idempotent because every entry is a pure function of its index.
template <typename T>
class MemoTable {
 public:
  explicit MemoTable(std::function<void(std::vector<T>&, std::size_t)> extend)
      : extend_(std::move(extend)) {}

  T get(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    if (n >= values_.size()) extend_(values_, n);
    return values_[n];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<T> values_;
  std::function<void(std::vector<T>&, std::size_t)> extend_;
};

inline void extend_sieve(std::vector<int>& mu, std::vector<long>& phi, std::size_t n) {
  // Rebuild both tables up to max(n, 2*old) with a linear sieve.
  std::size_t limit = std::max<std::size_t>(n + 1, 2 * mu.size());
  limit = std::max<std::size_t>(limit, 64);
  mu.assign(limit, 0);
  phi.assign(limit, 0);
  std::vector<long> primes;
  std::vector<bool> composite(limit, false);
  if (limit > 1) {
    mu[1] = 1;
    phi[1] = 1;
  }
  for (std::size_t i = 2; i < limit; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<long>(i));
      mu[i] = -1;
      phi[i] = static_cast<long>(i) - 1;
    }
    for (long p : primes) {
      std::size_t ip = i * static_cast<std::size_t>(p);
      if (ip >= limit) break;
      composite[ip] = true;
      if (i % static_cast<std::size_t>(p) == 0) {
        mu[ip] = 0;
        phi[ip] = phi[i] * p;
        break;
      }
      mu[ip] = -mu[i];
      phi[ip] = phi[i] * (p - 1);
    }
  }
}

struct ArithmeticTables {
  std::shared_mutex mutex;
  std::vector<int> mu;
  std::vector<long> phi;
};

inline ArithmeticTables& arithmetic_tables() {
  static ArithmeticTables tables;
  return tables;
}

inline void require_positive(long n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": argument must be >= 1");
}

}  // namespace detail

/// Moebius function mu(n), n >= 1.
inline int mobius(long n) {
  detail::require_positive(n, "mobius");
  auto& t = detail::arithmetic_tables();
  auto idx = static_cast<std::size_t>(n);
  {
    std::shared_lock lock(t.mutex);
    if (idx < t.mu.size()) return t.mu[idx];
  }
  std::unique_lock lock(t.mutex);
  if (idx >= t.mu.size()) detail::extend_sieve(t.mu, t.phi, idx);
  return t.mu[idx];
}

/// Euler's totient phi(n), n >= 1.
inline long totient(long n) {
  detail::require_positive(n, "totient");
  auto& t = detail::arithmetic_tables();
  auto idx = static_cast<std::size_t>(n);
  {
    std::shared_lock lock(t.mutex);
    if (idx < t.phi.size()) return t.phi[idx];
  }
  std::unique_lock lock(t.mutex);
  if (idx >= t.phi.size()) detail::extend_sieve(t.mu, t.phi, idx);
  return t.phi[idx];
}

/// Positive divisors of n in increasing order.
inline std::vector<long> divisors(long n) {
  detail::require_positive(n, "divisors");
  std::vector<long> small, large;
  for (long a = 1; a * a <= n; ++a) {
    if (n % a == 0) {
      small.push_back(a);
      if (a != n / a) large.push_back(n / a);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k!, valid for negative n.
inline Integer binomial(long n, long k) {
  if (k < 0) throw std::invalid_argument("binomial: k must be >= 0");
  if (n >= 0) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  }
  // C(n, k) = (-1)^k C(k - n - 1, k) for n < 0.
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
  return (k % 2 == 0) ? r : Integer(-r);
}

/// Generalized binomial coefficient with a rational upper argument.
inline Rational binomial(const Rational& top, long k) {
  if (k < 0) throw std::invalid_argument("binomial: k must be >= 0");
  Rational r(1);
  for (long i = 0; i < k; ++i) {
    r *= (top - Rational(i));
    r /= Rational(i + 1);
  }
  return r;
}

/// Bernoulli number B_p with sum_p B_p x^p / p! = x / (e^x - 1), so B_1 = -1/2.
inline Rational bernoulli(long p) {
  if (p < 0) throw std::invalid_argument("bernoulli: p must be >= 0");
  static detail::MemoTable<Rational> table([](std::vector<Rational>& b, std::size_t n) {
    if (b.empty()) b.emplace_back(1);
    for (std::size_t m = b.size(); m <= n; ++m) {
      // sum_{i=0}^{m} C(m+1, i) B_i = 0
      Rational acc;
      for (std::size_t i = 0; i < m; ++i) {
        acc.add_product(Rational(binomial(static_cast<long>(m + 1), static_cast<long>(i))), b[i]);
      }
      b.push_back(-acc / Rational(static_cast<long>(m + 1)));
    }
  });
  return table.get(static_cast<std::size_t>(p));
}

}  // namespace slgf

#endif  // SLGF_EXACTMATH_HPP

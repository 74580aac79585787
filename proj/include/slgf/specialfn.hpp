#ifndef SLGF_SPECIALFN_HPP
#define SLGF_SPECIALFN_HPP

// The polynomials E_l, F_l, S_j, the series Gamma(X, U) and the plethystic
// logarithm / exponential.

#include "slgf/exactmath.hpp"
#include "slgf/mvseries.hpp"

#include <string>
#include <vector>

namespace slgf {

/// Dense univariate polynomial with rational coefficients, trailing zeros trimmed.
class UniPolynomial {
 public:
  UniPolynomial() = default;
  explicit UniPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int i) const {
    return (i >= 0 && i <= degree()) ? coeffs_[static_cast<std::size_t>(i)] : Rational();
  }

  Rational evaluate(const Rational& x) const {
    Rational acc;
    for (int i = degree(); i >= 0; --i) {
      acc *= x;
      acc += coeffs_[static_cast<std::size_t>(i)];
    }
    return acc;
  }

  /// Sum of c_i * powers[i]; powers[0] must be the unit series.
  TruncatedSeries evaluate(const std::vector<TruncatedSeries>& powers) const {
    if (powers.empty()) throw std::invalid_argument("UniPolynomial::evaluate: no powers supplied");
    if (static_cast<int>(powers.size()) <= degree()) {
      throw std::invalid_argument("UniPolynomial::evaluate: not enough powers");
    }
    TruncatedSeries acc(powers[0].vars(), powers[0].spec());
    for (int i = 0; i <= degree(); ++i) {
      const auto& c = coeffs_[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      for (const auto& [m, v] : powers[static_cast<std::size_t>(i)].terms()) acc.add_term(m, v * c);
    }
    return acc;
  }

  TruncatedSeries evaluate(const TruncatedSeries& x) const {
    std::vector<TruncatedSeries> powers{TruncatedSeries::constant(x.vars(), x.spec(), Rational(1))};
    for (int i = 1; i <= degree(); ++i) powers.push_back(mul(powers.back(), x));
    return evaluate(powers);
  }

  std::string to_text(const std::string& var = "x") const {
    std::vector<Rational> c = coeffs_;
    std::string out;
    for (int i = 0; i <= degree(); ++i) {
      const auto& q = c[static_cast<std::size_t>(i)];
      if (q.is_zero()) continue;
      Rational mag = q.sign() < 0 ? -q : q;
      if (out.empty()) {
        if (q.sign() < 0) out += "-";
      } else {
        out += q.sign() < 0 ? " - " : " + ";
      }
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      if (mono.empty()) {
        out += mag.str();
      } else if (mag == Rational(1)) {
        out += mono;
      } else {
        out += mag.str() + "*" + mono;
      }
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const UniPolynomial& a, const UniPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

namespace detail {

inline void require_index(long n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": index must be >= 1");
}

inline UniPolynomial build_e(long l) {
  std::vector<Rational> c(static_cast<std::size_t>(l + 1));
  for (long p : divisors(l)) c[static_cast<std::size_t>(l / p)] += Rational(mobius(p), l);
  return UniPolynomial(std::move(c));
}

inline UniPolynomial build_f(long l) {
  std::vector<Rational> c(static_cast<std::size_t>(l + 1));
  for (long t : divisors(l)) c[static_cast<std::size_t>(l - l / t)] += Rational(mobius(t));
  return UniPolynomial(std::move(c));
}

inline UniPolynomial build_s(long j) {
  std::vector<Rational> c(static_cast<std::size_t>(j + 2));
  for (long p = 0; p <= j; ++p) {
    Rational term = Rational(binomial(j + 1, p)) * bernoulli(p) * Rational(neg_one_pow(p));
    c[static_cast<std::size_t>(j + 1 - p)] += term / Rational(j + 1);
  }
  return UniPolynomial(std::move(c));
}

template <UniPolynomial (*Build)(long)>
MemoTable<UniPolynomial>& poly_table() {
  static MemoTable<UniPolynomial> table([](std::vector<UniPolynomial>& v, std::size_t n) {
    if (v.empty()) v.emplace_back();
    for (std::size_t i = v.size(); i <= n; ++i) v.push_back(Build(static_cast<long>(i)));
  });
  return table;
}

}  // namespace detail

/// E_l(x) = (1/l) sum_{p | l} mu(p) x^{l/p}.
inline UniPolynomial e_poly(long l) {
  detail::require_index(l, "e_poly");
  return detail::poly_table<detail::build_e>().get(static_cast<std::size_t>(l));
}

/// F_l(u) = sum_{t | l} mu(t) u^{l - l/t}.
inline UniPolynomial f_poly(long l) {
  detail::require_index(l, "f_poly");
  return detail::poly_table<detail::build_f>().get(static_cast<std::size_t>(l));
}

/// S_j(x) = (1/(j+1)) sum_{p=0}^{j} (-1)^p C(j+1, p) B_p x^{j+1-p}; S_j(n) = 1^j + ... + n^j.
inline UniPolynomial s_poly(long j) {
  detail::require_index(j, "s_poly");
  return detail::poly_table<detail::build_s>().get(static_cast<std::size_t>(j));
}

namespace detail {

inline void require_u_free(const TruncatedSeries& x, const char* op) {
  if (!x.vars().has_u()) return;
  int ui = x.vars().at(Var::u());
  for (const auto& [m, c] : x.terms()) {
    if (m[ui] != 0) throw std::invalid_argument(std::string(op) + ": X must not depend on u");
  }
}

inline void require_positive_u_order(const TruncatedSeries& u, const char* op) {
  if (!u.vars().has_u()) throw std::invalid_argument(std::string(op) + ": U needs the variable u");
  int ui = u.vars().at(Var::u());
  for (const auto& [m, c] : u.terms()) {
    if (m[ui] < 1) throw std::domain_error(std::string(op) + ": U must have zero constant term in u");
  }
}

}  // namespace detail

/// ln Gamma(X, U) = sum_{j>=1} S_j(X) U^j / j.
inline TruncatedSeries log_gamma_series(const TruncatedSeries& X, const TruncatedSeries& U) {
  detail::require_u_free(X, "gamma_series");
  detail::require_positive_u_order(U, "gamma_series");
  detail::require_same_vars(X, U, "gamma_series");
  TruncationSpec spec = common(X.spec(), U.spec());
  const int j_max = spec.u_max;
  const auto x = X.truncated(spec);
  std::vector<TruncatedSeries> xpow{TruncatedSeries::constant(X.vars(), spec, Rational(1))};
  TruncatedSeries sum(X.vars(), spec);
  TruncatedSeries upow = TruncatedSeries::constant(X.vars(), spec, Rational(1));
  for (int j = 1; j <= j_max; ++j) {
    upow = mul(upow, U.truncated(spec));
    if (upow.is_zero()) break;
    while (static_cast<int>(xpow.size()) <= j + 1) xpow.push_back(mul(xpow.back(), x));
    sum += mul(s_poly(j).evaluate(xpow), upow) * Rational(1, j);
  }
  return sum;
}

/// Gamma(X, U) = exp(sum_{j>=1} S_j(X) U^j / j).
inline TruncatedSeries gamma_series(const TruncatedSeries& X, const TruncatedSeries& U) {
  return exp(log_gamma_series(X, U));
}

namespace detail {

// x_i <- x_i^l, u <- u^l.
inline TruncatedSeries adams(const TruncatedSeries& f, int l) {
  const auto& vars = f.vars();
  std::vector<Assignment> as;
  for (int i = 1; i <= vars.hodge_count(); ++i) {
    as.push_back({Var::x(i), TruncatedSeries::variable(vars, f.spec(), Var::x(i), l)});
  }
  if (vars.has_u()) as.push_back({Var::u(), TruncatedSeries::variable(vars, f.spec(), Var::u(), l)});
  return substitute(f, as);
}

}  // namespace detail

/// sum_{l=1}^{max(T,S)} mu(l)/l * log F(x^l, u^l).
inline TruncatedSeries plethystic_log(const TruncatedSeries& F) {
  if (F.constant_term() != Rational(1)) throw std::domain_error("plethystic_log: constant term must be 1");
  const auto& vars = F.vars();
  if (vars.has_z() || vars.has_hbar() || vars.pcount() > 0) {
    throw std::invalid_argument("plethystic_log: series must be in x_1..x_r, u");
  }
  int L = std::max(vars.has_u() ? F.spec().u_max : 0, vars.hodge_count() > 0 ? F.spec().x_max : 0);
  TruncatedSeries out(vars, F.spec());
  for (int l = 1; l <= L; ++l) {
    int mu = mobius(l);
    if (mu == 0) continue;
    auto g = l == 1 ? log(F) : log(detail::adams(F, l));
    out += g * Rational(mu, l);
  }
  return out;
}

/// prod over monomials m of G of (1 - m)^{-c_m}, G with integer coefficients.
inline TruncatedSeries plethystic_exp(const TruncatedSeries& G) {
  if (!G.constant_term().is_zero()) throw std::domain_error("plethystic_exp: nonzero constant term");
  detail::require_positive_weight(G, "plethystic_exp");
  for (const auto& [m, c] : G.terms()) {
    if (!c.is_integer()) throw std::domain_error("plethystic_exp: non-integer coefficient " + c.str());
  }
  const auto& vars = G.vars();
  const TruncatedSeries probe(vars, G.spec());
  TruncatedSeries::TermMap acc;
  acc.emplace(Monomial(), Rational(1));
  for (const auto& [m, c] : canonical_terms(G)) {
    // (1 - m)^{-c} = sum_k C(c + k - 1, k) m^k
    std::vector<std::pair<Monomial, Rational>> factor;
    Monomial mk = m;
    long cc = c.to_integer().get_si();
    for (long k = 1;; ++k) {
      if (!probe.in_bounds(mk)) break;
      Integer b = binomial(cc + k - 1, k);
      if (b != 0) factor.emplace_back(mk, Rational(b));
      mk = mk * m;
    }
    if (factor.empty()) continue;
    std::vector<std::pair<Monomial, Rational>> delta;
    for (const auto& [am, ac] : acc) {
      for (const auto& [fm, fc] : factor) {
        Monomial prod = am * fm;
        if (!probe.in_bounds(prod)) continue;
        delta.emplace_back(prod, ac * fc);
      }
    }
    for (auto& [dm, dc] : delta) {
      auto [it, inserted] = acc.try_emplace(dm, dc);
      if (!inserted) {
        it->second += dc;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  return detail::from_map(vars, G.spec(), acc);
}

}  // namespace slgf

#endif  // SLGF_SPECIALFN_HPP

#ifndef SLGF_GENFUN_HPP
#define SLGF_GENFUN_HPP

// Generating functions of Euler characteristics for the homology (F^H) and
// homotopy (F^pi) of string-link spaces, their genus refinement, the genus
// zero and one closed forms, and table extraction.

#include "slgf/exactmath.hpp"
#include "slgf/mvseries.hpp"
#include "slgf/specialfn.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace slgf {

/// Source dimensions m_1..m_r and ambient dimension d.
class LinkConfig {
 public:
  LinkConfig(std::vector<int> m, int d, bool exact_dimensions = true)
      : m_(std::move(m)), d_(d), exact_(exact_dimensions) {
    if (m_.empty()) throw std::invalid_argument("LinkConfig: r must be >= 1");
    for (int mi : m_) {
      if (mi < 1) throw std::invalid_argument("LinkConfig: m_i must be >= 1");
    }
    if (d_ < 2) throw std::invalid_argument("LinkConfig: d must be >= 2");
  }

  /// Parity-only configuration; representatives m = 1 or 2, d = 3 or 2.
  static LinkConfig from_parities(const std::vector<bool>& m_odd, bool d_odd) {
    std::vector<int> m;
    for (bool odd : m_odd) m.push_back(odd ? 1 : 2);
    return LinkConfig(std::move(m), d_odd ? 3 : 2, false);
  }

  int r() const { return static_cast<int>(m_.size()); }
  const std::vector<int>& m() const { return m_; }
  int m(int i) const { return m_[static_cast<std::size_t>(i - 1)]; }  // 1-based
  int d() const { return d_; }
  bool exact_dimensions() const { return exact_; }

  /// (-1)^{m_i}, 1-based.
  int m_sign(int i) const { return neg_one_pow(m(i)); }
  int d_sign() const { return neg_one_pow(d_); }

  /// d > 2 max(m_i) + 1.
  bool in_validity_range() const {
    return d_ > 2 * *std::max_element(m_.begin(), m_.end()) + 1;
  }

  bool same_m_parity() const {
    for (int mi : m_) {
      if ((mi - m_[0]) % 2 != 0) return false;
    }
    return true;
  }

 private:
  std::vector<int> m_;
  int d_;
  bool exact_;
};

namespace detail {

inline Monomial x_power(const VariableSet& vars, int i, int e) {
  Monomial m;
  m.set(vars.at(Var::x(i)), e);
  return m;
}

// sum_i (-1)^{m_i - 1} E_l(x_i^k)
inline TruncatedSeries hodge_e_sum(const LinkConfig& cfg, const VariableSet& vars, const TruncationSpec& spec,
                                   int l, int k) {
  TruncatedSeries s(vars, spec);
  const auto e = e_poly(l);
  for (int i = 1; i <= cfg.r(); ++i) {
    Rational sign(-cfg.m_sign(i));
    for (int p = 1; p <= e.degree(); ++p) {
      if (e.coefficient(p).is_zero()) continue;
      s.add_term(x_power(vars, i, k * p), e.coefficient(p) * sign);
    }
  }
  return s;
}

// sum_i (-1)^{m_i} x_i^l, the Euler specialization of alpha_l.
inline TruncatedSeries alpha_euler(const LinkConfig& cfg, const VariableSet& vars, const TruncationSpec& spec,
                                   int l) {
  TruncatedSeries s(vars, spec);
  for (int i = 1; i <= cfg.r(); ++i) s.add_term(x_power(vars, i, l), Rational(cfg.m_sign(i)));
  return s;
}

// Univariate polynomial in u, optionally at u^k, as a series.
inline TruncatedSeries u_poly(const UniPolynomial& p, const VariableSet& vars, const TruncationSpec& spec,
                              int k = 1) {
  TruncatedSeries s(vars, spec);
  for (int i = 0; i <= p.degree(); ++i) {
    Monomial m;
    if (i) m.set(vars.at(Var::u()), i * k);
    s.add_term(m, p.coefficient(i));
  }
  return s;
}

inline TruncatedSeries one(const VariableSet& vars, const TruncationSpec& spec) {
  return TruncatedSeries::constant(vars, spec, Rational(1));
}

// (-1)^{d-1} l u^l / F_l(u)
inline TruncatedSeries gamma_argument(const LinkConfig& cfg, const VariableSet& vars, const TruncationSpec& spec,
                                      int l) {
  auto head = TruncatedSeries::variable(vars, spec, Var::u(), l, Rational(-cfg.d_sign() * l));
  return mul(head, reciprocal(u_poly(f_poly(l), vars, spec)));
}

// ln F^H as sum_l [ln Gamma(X_l, U_l) - X_l ln F_l(u)]; X_l is produced by make_x.
template <typename MakeX>
TruncatedSeries log_homology(const LinkConfig& cfg, const VariableSet& vars, const TruncationSpec& spec,
                             int l_max, MakeX&& make_x) {
  TruncatedSeries sum(vars, spec);
  for (int l = 1; l <= l_max; ++l) {
    TruncatedSeries X = make_x(l);
    if (X.is_zero()) continue;
    if (l <= spec.u_max) sum += log_gamma_series(X, gamma_argument(cfg, vars, spec, l));
    sum -= mul(X, log(u_poly(f_poly(l), vars, spec)));
  }
  return sum;
}

}  // namespace detail

/// F^H truncated at u^T and total Hodge degree T+1; l_max overrides the
/// factor bound 2T (for stability checks only).
inline TruncatedSeries f_homology(const LinkConfig& cfg, int T, int l_max = -1) {
  if (T < 0) throw std::invalid_argument("f_homology: T must be >= 0");
  auto vars = VariableSet::hodge(cfg.r());
  auto spec = TruncationSpec::for_complexity(T);
  if (l_max < 0) l_max = 2 * T;
  auto lg = detail::log_homology(cfg, vars, spec, l_max,
                                 [&](int l) { return detail::hodge_e_sum(cfg, vars, spec, l, 1); });
  return exp(lg);
}

/// F^H under an explicit (u_max, x_max) truncation. Hodge degree at u^t is at
/// most 2t, so x_max = 2 u_max keeps every term through u^{u_max}.
inline TruncatedSeries f_homology(const LinkConfig& cfg, const TruncationSpec& spec) {
  spec.validate();
  auto vars = VariableSet::hodge(cfg.r());
  auto lg = detail::log_homology(cfg, vars, spec, 2 * spec.u_max,
                                 [&](int l) { return detail::hodge_e_sum(cfg, vars, spec, l, 1); });
  return exp(lg);
}

/// F^H as the literal product of Gamma factors and F_l powers (slow reference).
inline TruncatedSeries f_homology_product(const LinkConfig& cfg, int T) {
  auto vars = VariableSet::hodge(cfg.r());
  auto spec = TruncationSpec::for_complexity(T);
  auto result = detail::one(vars, spec);
  for (int l = 1; l <= 2 * T; ++l) {
    auto X = detail::hodge_e_sum(cfg, vars, spec, l, 1);
    if (l <= T) result = mul(result, gamma_series(X, detail::gamma_argument(cfg, vars, spec, l)));
    result = mul(result, pow_series_exponent(detail::u_poly(f_poly(l), vars, spec), -X));
  }
  return result;
}

/// F^H with every x_i replaced by the constant values[i-1]; a series in u only.
inline TruncatedSeries f_homology_at(const LinkConfig& cfg, int T, const std::vector<Rational>& values) {
  if (static_cast<int>(values.size()) != cfg.r()) throw std::invalid_argument("f_homology_at: need r values");
  VariableSet vars(0, true, false, false, 0);
  auto spec = TruncationSpec::for_complexity(T);
  auto lg = detail::log_homology(cfg, vars, spec, 2 * T, [&](int l) {
    Rational c;
    for (int i = 1; i <= cfg.r(); ++i) c -= e_poly(l).evaluate(values[static_cast<std::size_t>(i - 1)]) * Rational(cfg.m_sign(i));
    return TruncatedSeries::constant(vars, spec, c);
  });
  return exp(lg);
}

/// F^pi from the closed double/triple sums (k l j <= T, k l <= 2T).
inline TruncatedSeries f_homotopy_direct(const LinkConfig& cfg, int T) {
  if (T < 0) throw std::invalid_argument("f_homotopy_direct: T must be >= 0");
  auto vars = VariableSet::hodge(cfg.r());
  auto spec = TruncationSpec::for_complexity(T);
  TruncatedSeries out(vars, spec);
  std::vector<std::optional<TruncatedSeries>> log_f(static_cast<std::size_t>(2 * T + 1));
  std::vector<std::optional<TruncatedSeries>> inv_f(static_cast<std::size_t>(T + 1));
  for (int k = 1; k <= 2 * T; ++k) {
    int mu = mobius(k);
    if (mu == 0) continue;
    for (int l = 1; k * l <= 2 * T; ++l) {
      auto X = detail::hodge_e_sum(cfg, vars, spec, l, k);
      if (X.is_zero()) continue;
      // - mu(k)/k X_l(x^k) ln F_l(u^k)
      auto& lf = log_f[static_cast<std::size_t>(l)];
      if (!lf) lf = log(detail::u_poly(f_poly(l), vars, spec));
      auto lfk = k == 1 ? *lf : substitute(*lf, {{Var::u(), TruncatedSeries::variable(vars, spec, Var::u(), k)}});
      out -= mul(X, lfk) * Rational(mu, k);
      if (k * l > T) continue;
      // mu(k)/(k j) S_j(X_l(x^k)) ((-1)^{d-1} l u^{kl} / F_l(u^k))^j
      auto& invf = inv_f[static_cast<std::size_t>(l)];
      if (!invf) invf = reciprocal(detail::u_poly(f_poly(l), vars, spec));
      auto invfk = k == 1 ? *invf : substitute(*invf, {{Var::u(), TruncatedSeries::variable(vars, spec, Var::u(), k)}});
      auto V = mul(TruncatedSeries::variable(vars, spec, Var::u(), k * l, Rational(-cfg.d_sign() * l)), invfk);
      std::vector<TruncatedSeries> xpow{detail::one(vars, spec)};
      auto Vj = detail::one(vars, spec);
      for (int j = 1; k * l * j <= T; ++j) {
        Vj = mul(Vj, V);
        while (static_cast<int>(xpow.size()) <= j + 1) xpow.push_back(mul(xpow.back(), X));
        out += mul(s_poly(j).evaluate(xpow), Vj) * Rational(mu, k * j);
      }
    }
  }
  return out;
}

/// F^pi as the plethystic logarithm of F^H.
inline TruncatedSeries f_homotopy_via_pleth(const LinkConfig& cfg, int T) {
  return plethystic_log(f_homology(cfg, T));
}

/// Raised when a series that must be free of negative powers is not.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// hbar F^pi(x/hbar, u hbar): the hbar-exponent of x^s u^t becomes the genus
/// 1 + t - |s|. Genus is kept in [0, G]; any nonzero negative-genus term is an error.
inline TruncatedSeries genus_graded(const TruncatedSeries& fpi, int G) {
  if (G < 0) throw std::invalid_argument("genus_graded: G must be >= 0");
  const auto& src = fpi.vars();
  VariableSet vars(src.hodge_count(), true, false, true, 0);
  TruncationSpec spec = fpi.spec();
  spec.hbar = {-spec.x_max, spec.u_max};
  std::vector<Assignment> as;
  for (int i = 1; i <= src.hodge_count(); ++i) {
    as.push_back({Var::x(i), TruncatedSeries::monomial(vars, spec,
                                                       Monomial::of(vars, {{Var::x(i), 1}, {Var::hbar(), -1}}))});
  }
  as.push_back({Var::u(), TruncatedSeries::monomial(vars, spec, Monomial::of(vars, {{Var::u(), 1}, {Var::hbar(), 1}}))});
  auto sub = substitute(fpi, as, vars, spec);
  spec.hbar.lo = 0;
  spec.hbar.hi = G;
  TruncatedSeries out(vars, spec);
  int hi = vars.at(Var::hbar());
  for (const auto& [m, c] : sub.terms()) {
    Monomial g = m;
    g.add(hi, 1);
    if (g[hi] < 0) {
      throw ConsistencyError("genus_graded: nonzero coefficient of negative genus at " +
                             monomial_text(vars, g));
    }
    out.add_term(g, c);
  }
  return out;
}

/// Genus-graded F^pi in x, u, hbar.
inline TruncatedSeries f_homotopy_graded(const LinkConfig& cfg, int T, int G) {
  return genus_graded(f_homotopy_direct(cfg, T), G);
}

/// The genus-g part of a genus-graded series, as a series in x, u.
inline TruncatedSeries genus_part(const TruncatedSeries& graded, int g) {
  const auto& gv = graded.vars();
  VariableSet vars = VariableSet::hodge(gv.hodge_count());
  TruncationSpec spec = graded.spec();
  spec.hbar = {0, 0};
  TruncatedSeries out(vars, spec);
  int hi = gv.at(Var::hbar());
  for (const auto& [m, c] : graded.terms()) {
    if (m[hi] != g) continue;
    Monomial o;
    for (int i = 1; i <= vars.hodge_count(); ++i) o.set(vars.at(Var::x(i)), m[gv.at(Var::x(i))]);
    o.set(vars.at(Var::u()), m[gv.at(Var::u())]);
    out.add_term(o, c);
  }
  return out;
}

namespace detail {

// sum_l mu(l)/l ln(1 - c_l u^l A_l) or the phi-weighted variant, where the
// argument series arg(l) is supplied by the caller and has u-order l.
template <typename Arg>
TruncatedSeries weighted_log_sum(const VariableSet& vars, const TruncationSpec& spec, bool totient_weights,
                                 Arg&& arg) {
  TruncatedSeries sum(vars, spec);
  for (int l = 1; l <= spec.u_max; ++l) {
    Rational w = totient_weights ? Rational(totient(l), l) : Rational(mobius(l), l);
    if (w.is_zero()) continue;
    auto a = arg(l);
    if (a.is_zero()) continue;
    sum += log(one(vars, spec) - a) * w;
  }
  return sum;
}

inline void require_no_constant_u(const TruncatedSeries& s, const char* op) {
  if (!grade_extract(s, Var::u(), 0).is_zero()) {
    throw ConsistencyError(std::string(op) + ": negative power of u survives");
  }
}

}  // namespace detail

/// Genus-zero Euler characteristic series F^{pi 0}.
inline TruncatedSeries genus0_closed(const LinkConfig& cfg, int T) {
  auto vars = VariableSet::hodge(cfg.r());
  auto spec = TruncationSpec::for_complexity(T);
  auto wide = spec;
  wide.u_max = T + 1;
  const Rational sd(cfg.d_sign());
  auto u = TruncatedSeries::variable(vars, wide, Var::u());
  auto L = detail::weighted_log_sum(vars, wide, false, [&](int l) {
    return mul(TruncatedSeries::variable(vars, wide, Var::u(), l, sd), detail::alpha_euler(cfg, vars, wide, l));
  });
  auto uA1 = mul(u, detail::alpha_euler(cfg, vars, wide, 1));
  // u F = -u A_1 + (u A_1 - (-1)^d) L
  auto uf = mul(uA1 - TruncatedSeries::constant(vars, wide, sd), L) - uA1;
  detail::require_no_constant_u(uf, "genus0_closed");
  return shift(uf, Var::u(), -1, spec);
}

/// Genus-one Euler characteristic series F^{pi 1}.
inline TruncatedSeries genus1_closed(const LinkConfig& cfg, int T) {
  auto vars = VariableSet::hodge(cfg.r());
  auto spec = TruncationSpec::for_complexity(T);
  const Rational sd(cfg.d_sign());
  auto L = detail::weighted_log_sum(vars, spec, true, [&](int l) {
    return mul(TruncatedSeries::variable(vars, spec, Var::u(), l, sd), detail::alpha_euler(cfg, vars, spec, l));
  });
  auto A1 = detail::alpha_euler(cfg, vars, spec, 1);
  auto A2 = detail::alpha_euler(cfg, vars, spec, 2);
  auto u = TruncatedSeries::variable(vars, spec, Var::u());
  auto u2 = TruncatedSeries::variable(vars, spec, Var::u(), 2);
  auto num = mul(u2, mul(A1, A1)) + mul(u2, A2) * sd - mul(u, A1) * (Rational(2) * sd);
  auto den = (detail::one(vars, spec) - mul(u2, A2) * sd) * Rational(4);
  return L * Rational(-1, 2) + mul(num, reciprocal(den)) * Rational(-cfg.d_sign());
}

namespace detail {

inline void require_exact(const LinkConfig& cfg, const char* op) {
  if (!cfg.exact_dimensions()) {
    throw std::invalid_argument(std::string(op) + ": needs actual m_i and d, not parities");
  }
}

// Window for z wide enough for every term of the dimension series.
inline Window dims_z_window(const LinkConfig& cfg, int T) {
  int mmax = *std::max_element(cfg.m().begin(), cfg.m().end());
  int slack = std::abs(cfg.d() - 3) + 2;
  return {-mmax * (T + 2) - slack, (cfg.d() - 2) * (T + 2) + slack};
}

// alpha_l(1/z) = sum_i (-1)^{m_i (l-1)} x_i^l z^{-m_i l}
inline TruncatedSeries alpha_inverse_z(const LinkConfig& cfg, const VariableSet& vars, const TruncationSpec& spec,
                                       int l) {
  TruncatedSeries s(vars, spec);
  for (int i = 1; i <= cfg.r(); ++i) {
    s.add_term(Monomial::of(vars, {{Var::x(i), l}, {Var::z(), -cfg.m(i) * l}}),
               Rational(neg_one_pow(static_cast<long>(cfg.m(i)) * (l - 1))));
  }
  return s;
}

// c z^a u^b
inline TruncatedSeries zu(const VariableSet& vars, const TruncationSpec& spec, int a, int b,
                          const Rational& c = Rational(1)) {
  return TruncatedSeries::monomial(vars, spec, Monomial::of(vars, {{Var::z(), a}, {Var::u(), b}}), c);
}

}  // namespace detail

/// Genus-zero dimension series R^{pi 0} in x, z, u.
inline TruncatedSeries genus0_dims(const LinkConfig& cfg, int T) {
  detail::require_exact(cfg, "genus0_dims");
  VariableSet vars(cfg.r(), true, true, false, 0);
  auto spec = TruncationSpec::for_complexity(T);
  spec.z = detail::dims_z_window(cfg, T);
  auto wide = spec;
  wide.u_max = T + 1;
  const int d = cfg.d();
  auto L = detail::weighted_log_sum(vars, wide, false, [&](int l) {
    return mul(detail::zu(vars, wide, (d - 2) * l, l, Rational(neg_one_pow(static_cast<long>(l - 1) * d))),
               detail::alpha_inverse_z(cfg, vars, wide, l));
  });
  auto w = mul(detail::zu(vars, wide, d - 2, 1), detail::alpha_inverse_z(cfg, vars, wide, 1));
  // z^{d-3} u R = z^{d-2} u alpha_1 + (1 - z^{d-2} u alpha_1) L
  auto q = w + mul(detail::one(vars, wide) - w, L);
  detail::require_no_constant_u(q, "genus0_dims");
  return shift(shift(q, Var::u(), -1, wide), Var::z(), -(d - 3), spec);
}

/// Genus-one dimension series R^{pi 1} in x, z, u.
inline TruncatedSeries genus1_dims(const LinkConfig& cfg, int T) {
  detail::require_exact(cfg, "genus1_dims");
  VariableSet vars(cfg.r(), true, true, false, 0);
  auto spec = TruncationSpec::for_complexity(T);
  spec.z = detail::dims_z_window(cfg, T);
  const int d = cfg.d();
  const Rational sd(cfg.d_sign());
  auto L = detail::weighted_log_sum(vars, spec, true, [&](int l) {
    return mul(detail::zu(vars, spec, (d - 2) * l, l, Rational(neg_one_pow(static_cast<long>(l - 1) * d))),
               detail::alpha_inverse_z(cfg, vars, spec, l));
  });
  auto a1 = detail::alpha_inverse_z(cfg, vars, spec, 1);
  auto a2 = detail::alpha_inverse_z(cfg, vars, spec, 2);
  auto q2 = detail::zu(vars, spec, 2 * d - 4, 2);
  auto q1 = detail::zu(vars, spec, d - 2, 1);
  auto num = mul(q2, mul(a1, a1)) + mul(q2, a2) * sd - mul(q1, a1) * Rational(2);
  auto den = (detail::one(vars, spec) - mul(q2, a2) * sd) * Rational(4);
  return L * Rational(-1, 2) + mul(num, reciprocal(den)) * Rational(-cfg.d_sign());
}

// ---------------------------------------------------------------------------
// Euler characteristic tables.

/// chi^{pi g}_{s, t} for 1 <= t <= t_max. Columns are the tails (s_2..s_r)
/// with entries in [0, t_max]; s_1 = t + 1 - g - (s_2 + ... + s_r).
class EulerTable {
 public:
  EulerTable(int genus, int r, int t_max) : genus_(genus), r_(r), t_max_(t_max) {
    std::vector<int> tail(static_cast<std::size_t>(r - 1), 0);
    enumerate(tail, 0);
    cells_.assign(static_cast<std::size_t>(std::max(t_max, 0)),
                  std::vector<Integer>(columns_.size(), Integer(0)));
  }

  int genus() const { return genus_; }
  int r() const { return r_; }
  int t_max() const { return t_max_; }
  const std::vector<std::vector<int>>& columns() const { return columns_; }

  const Integer& at(int t, std::size_t column) const {
    return cells_[static_cast<std::size_t>(t - 1)][column];
  }
  Integer& at(int t, std::size_t column) { return cells_[static_cast<std::size_t>(t - 1)][column]; }

  /// Value for a full Hodge vector s (0 when s is off the genus slice or outside the grid).
  Integer value(int t, const std::vector<int>& s) const {
    if (t < 1 || t > t_max_ || static_cast<int>(s.size()) != r_) return 0;
    int total = 0;
    for (int v : s) total += v;
    if (total != t + 1 - genus_) return 0;
    std::vector<int> tail(s.begin() + 1, s.end());
    auto it = std::find(columns_.begin(), columns_.end(), tail);
    if (it == columns_.end()) return 0;
    return at(t, static_cast<std::size_t>(it - columns_.begin()));
  }

  /// "s1=t-s2+1" style caption for the genus slice.
  std::string convention() const {
    std::string c = "s1=t";
    for (int i = 2; i <= r_; ++i) c += "-s" + std::to_string(i);
    int off = 1 - genus_;
    if (off > 0) c += "+" + std::to_string(off);
    if (off < 0) c += "-" + std::to_string(-off);
    return c;
  }

  std::string column_label(std::size_t c) const {
    const auto& tail = columns_[c];
    if (tail.empty()) return "chi";
    std::string out;
    for (std::size_t i = 0; i < tail.size(); ++i) {
      if (i) out += ":";
      out += std::to_string(tail[i]);
    }
    return out;
  }

 private:
  void enumerate(std::vector<int>& tail, std::size_t pos) {
    if (pos == tail.size()) {
      columns_.push_back(tail);
      return;
    }
    int used = 0;
    for (std::size_t i = 0; i < pos; ++i) used += tail[i];
    for (int v = 0; v <= t_max_ && used + v <= t_max_ + std::max(0, 1 - genus_); ++v) {
      tail[pos] = v;
      enumerate(tail, pos + 1);
    }
    tail[pos] = 0;
  }

  int genus_;
  int r_;
  int t_max_;
  std::vector<std::vector<int>> columns_;
  std::vector<std::vector<Integer>> cells_;
};

/// Extracts the genus-g table from an F^pi series truncated at u^{>= t_max}.
inline EulerTable euler_table_from(const TruncatedSeries& fpi, int r, int g, int t_max) {
  if (g < 0) throw std::invalid_argument("euler_table: genus must be >= 0");
  if (t_max > fpi.spec().u_max) throw std::invalid_argument("euler_table: t_max exceeds the series truncation");
  EulerTable table(g, r, t_max);
  const auto& vars = fpi.vars();
  for (int t = 1; t <= t_max; ++t) {
    for (std::size_t c = 0; c < table.columns().size(); ++c) {
      const auto& tail = table.columns()[c];
      int s1 = t + 1 - g;
      for (int v : tail) s1 -= v;
      if (s1 < 0) continue;
      Monomial m;
      m.set(vars.at(Var::x(1)), s1);
      for (std::size_t i = 0; i < tail.size(); ++i) m.set(vars.at(Var::x(static_cast<int>(i) + 2)), tail[i]);
      m.set(vars.at(Var::u()), t);
      if (!fpi.in_bounds(m)) continue;
      table.at(t, c) = fpi.coefficient(m).to_integer();
    }
  }
  return table;
}

/// chi^{pi g}_{s, t} for t <= t_max with |s| = t + 1 - g.
inline EulerTable euler_table(const LinkConfig& cfg, int g, int t_max) {
  if (g < 0) throw std::invalid_argument("euler_table: genus must be >= 0");
  return euler_table_from(f_homotopy_direct(cfg, std::max(t_max, 0)), cfg.r(), g, t_max);
}

}  // namespace slgf

#endif  // SLGF_GENFUN_HPP

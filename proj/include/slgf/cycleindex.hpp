#ifndef SLGF_CYCLEINDEX_HPP
#define SLGF_CYCLEINDEX_HPP

// Cycle index sums over p_1..p_W (weight(p_l) = l): commutative and cyclic
// Lie species, coloured tensor powers, the genus zero and one graph
// homology, the supercharacter of the hairy graph complexes and the
// positive-arity supercharacters of the modular envelopes of L-infinity.

#include "slgf/exactmath.hpp"
#include "slgf/genfun.hpp"
#include "slgf/mvseries.hpp"
#include "slgf/specialfn.hpp"

#include <numeric>
#include <optional>
#include <vector>

namespace slgf {

/// A TruncatedSeries in p_1..p_W with optional u, z, hbar; p_max = W.
using CycleIndexSum = TruncatedSeries;

namespace detail {

inline void require_weight(int W, int lo, const char* op) {
  if (W < lo) throw std::invalid_argument(std::string(op) + ": W must be >= " + std::to_string(lo));
  if (W + 3 > kMaxVariables) throw std::invalid_argument(std::string(op) + ": W too large");
}

inline TruncationSpec p_spec(int W) {
  TruncationSpec s;
  s.p_max = W;
  return s;
}

inline TruncatedSeries p_term(const VariableSet& vars, const TruncationSpec& spec, int l, const Rational& c) {
  return TruncatedSeries::variable(vars, spec, Var::p(l), 1, c);
}

// c * u^a z^b p_l
inline TruncatedSeries graded_p(const VariableSet& vars, const TruncationSpec& spec, int l, int a, int b,
                                const Rational& c) {
  Monomial m;
  m.set(vars.at(Var::p(l)), 1);
  if (a) m.set(vars.at(Var::u()), a);
  if (b) m.set(vars.at(Var::z()), b);
  return TruncatedSeries::monomial(vars, spec, m, c);
}

// sum_{l<=W} mu(l)/l ln(1 - p_l)
inline TruncatedSeries mobius_log_sum(const VariableSet& vars, const TruncationSpec& spec, int W) {
  TruncatedSeries s(vars, spec);
  auto one = TruncatedSeries::constant(vars, spec, Rational(1));
  for (int l = 1; l <= W; ++l) {
    int mu = mobius(l);
    if (mu == 0) continue;
    s += log(one - p_term(vars, spec, l, Rational(1))) * Rational(mu, l);
  }
  return s;
}

}  // namespace detail

/// Z_Com = exp(sum_l p_l / l).
inline CycleIndexSum z_com(int W) {
  detail::require_weight(W, 0, "z_com");
  VariableSet vars(0, false, false, false, W);
  auto spec = detail::p_spec(W);
  TruncatedSeries a(vars, spec);
  for (int l = 1; l <= W; ++l) a += detail::p_term(vars, spec, l, Rational(1, l));
  return exp(a);
}

/// Z_Lie((.)) = (1 - p_1) sum_l mu(l) ln(1 - p_l) / l + p_1.
inline CycleIndexSum z_lie_cyclic(int W) {
  detail::require_weight(W, 1, "z_lie_cyclic");
  VariableSet vars(0, false, false, false, W);
  auto spec = detail::p_spec(W);
  auto p1 = detail::p_term(vars, spec, 1, Rational(1));
  auto one = TruncatedSeries::constant(vars, spec, Rational(1));
  return mul(one - p1, detail::mobius_log_sum(vars, spec, W)) + p1;
}

/// exp(sum_l alpha_l(z, x) p_l / l), alpha_l = sum_i (-1)^{m_i(l-1)} x_i^l z^{m_i l}.
inline CycleIndexSum z_colors(const LinkConfig& cfg, int W) {
  detail::require_weight(W, 0, "z_colors");
  detail::require_exact(cfg, "z_colors");
  VariableSet vars(cfg.r(), false, true, false, W);
  TruncationSpec spec = detail::p_spec(W);
  spec.x_max = W;
  spec.z = {0, *std::max_element(cfg.m().begin(), cfg.m().end()) * W};
  TruncatedSeries a(vars, spec);
  for (int l = 1; l <= W; ++l) {
    for (int i = 1; i <= cfg.r(); ++i) {
      Monomial m;
      m.set(vars.at(Var::x(i)), l);
      m.set(vars.at(Var::z()), cfg.m(i) * l);
      m.set(vars.at(Var::p(l)), 1);
      a.add_term(m, Rational(neg_one_pow(cfg.m(i) * (l - 1)), l));
    }
  }
  return exp(a);
}

/// Replaces p_l by alpha_l(1/z, x). With at_z = c the variable z (if present)
/// is set to c and p_l <- alpha_l(1/c, x); c = -1 gives the Euler
/// specialization p_l <- sum_i (-1)^{m_i} x_i^l. Only c = +-1 is meaningful
/// for parity-only configurations.
inline TruncatedSeries specialize_colors(const CycleIndexSum& Z, const LinkConfig& cfg,
                                         std::optional<int> at_z = std::nullopt) {
  const auto& src = Z.vars();
  if (src.hodge_count() > 0) throw std::invalid_argument("specialize_colors: series already has Hodge variables");
  if (at_z && *at_z == 0) throw std::invalid_argument("specialize_colors: z must be nonzero");
  if (!at_z || (*at_z != 1 && *at_z != -1)) detail::require_exact(cfg, "specialize_colors");
  const int W = src.pcount();
  const int mmax = *std::max_element(cfg.m().begin(), cfg.m().end());
  VariableSet vars(cfg.r(), src.has_u(), !at_z, src.has_hbar(), 0);
  TruncationSpec spec = Z.spec();
  spec.x_max = Z.spec().p_max;
  spec.p_max = 0;
  if (!at_z) {
    Window zw = src.has_z() ? Z.spec().z : Window{0, 0};
    spec.z = {zw.lo - mmax * W, zw.hi};
  } else {
    spec.z = {0, 0};
  }
  std::vector<Assignment> as;
  if (at_z && src.has_z()) {
    as.push_back({Var::z(), TruncatedSeries::constant(vars, spec, Rational(*at_z))});
  }
  for (int l = 1; l <= W; ++l) {
    TruncatedSeries a(vars, spec);
    for (int i = 1; i <= cfg.r(); ++i) {
      int e = cfg.m(i) * l;
      Rational c(neg_one_pow(cfg.m(i) * (l - 1)));
      Monomial m;
      m.set(vars.at(Var::x(i)), l);
      if (at_z) {
        Rational zc(*at_z);
        for (int k = 0; k < e; ++k) c /= zc;
      } else {
        m.set(vars.at(Var::z()), -e);
      }
      a.add_term(m, c);
    }
    as.push_back({Var::p(l), std::move(a)});
  }
  return substitute(Z, as, vars, spec);
}

/// p_1 <- x1, p_l <- 0 (l >= 2): the graded dimension generating function.
/// The coefficient of x1^k times k! is the graded dimension in arity k.
inline TruncatedSeries identity_trace(const CycleIndexSum& Z) {
  const auto& src = Z.vars();
  VariableSet vars(1, src.has_u(), src.has_z(), src.has_hbar(), 0);
  TruncationSpec spec = Z.spec();
  spec.x_max = Z.spec().p_max;
  spec.p_max = 0;
  std::vector<Assignment> as;
  for (int l = 1; l <= src.pcount(); ++l) {
    as.push_back({Var::p(l), l == 1 ? TruncatedSeries::variable(vars, spec, Var::x(1)) : TruncatedSeries(vars, spec)});
  }
  return substitute(Z, as, vars, spec);
}

/// Homology of genus-zero graphs in P_d: (1/(z^{d-3} u)) Z_Lie((.)) with
/// p_l <- (-1)^{(l-1)d} (z^{d-2} u)^l p_l. Arity k sits at u^{k-1}.
inline CycleIndexSum z_M0(int d, int W) {
  if (d < 2) throw std::invalid_argument("z_M0: d must be >= 2");
  auto lie = z_lie_cyclic(W);
  VariableSet vars(0, true, true, false, W);
  TruncationSpec spec = detail::p_spec(W);
  spec.u_max = W;
  spec.z = {0, (d - 2) * W};
  std::vector<Assignment> as;
  for (int l = 1; l <= W; ++l) {
    as.push_back({Var::p(l), detail::graded_p(vars, spec, l, l, (d - 2) * l, Rational(neg_one_pow((l - 1) * d)))});
  }
  auto sub = substitute(lie, as, vars, spec);
  TruncationSpec mid = spec;
  mid.u_max = W - 1;
  auto shifted = shift(sub, Var::u(), -1, mid);
  TruncationSpec fin = mid;
  fin.z = {mid.z.lo + 3 - d, mid.z.hi + 3 - d};
  return shift(shifted, Var::z(), 3 - d, fin);
}

/// lambda_n(sigma) = sign(sigma)^d or(sigma)^{n+d+1} for sigma in D_n acting
/// on the n vertices of the polygon; `reflection` marks the reflections.
inline int dihedral_character(const std::vector<int>& perm, bool reflection, int d) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
    }
  }
  int sign = neg_one_pow(n - cycles);
  int s = neg_one_pow(d) == 1 ? 1 : sign;
  if (reflection && neg_one_pow(n + d + 1) == -1) s = -s;
  return s;
}

/// Z of Ind_{D_n}^{S_n} lambda_n summed over 1 <= n <= W, by averaging over
/// the 2n elements of D_n.
inline CycleIndexSum z_dihedral(int d, int W) {
  detail::require_weight(W, 0, "z_dihedral");
  VariableSet vars(0, false, false, false, W);
  auto spec = detail::p_spec(W);
  TruncatedSeries out(vars, spec);
  for (int n = 1; n <= W; ++n) {
    for (int refl = 0; refl <= 1; ++refl) {
      for (int k = 0; k < n; ++k) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = refl ? ((k - i) % n + n) % n : (i + k) % n;
        Monomial m;
        std::vector<bool> seen(perm.size(), false);
        for (int i = 0; i < n; ++i) {
          if (seen[static_cast<std::size_t>(i)]) continue;
          int len = 0;
          for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            ++len;
          }
          m.add(vars.at(Var::p(len)), 1);
        }
        out.add_term(m, Rational(dihedral_character(perm, refl == 1, d), 2 * n));
      }
    }
  }
  return out;
}

/// Closed form of z_dihedral:
/// -1/2 sum_l phi(l)/l ln(1 - (-1)^{d(l-1)} p_l)
///   + (-1)^{d+1} (p_1^2 + (-1)^d p_2 - 2 p_1) / (4 (1 - (-1)^d p_2)).
inline CycleIndexSum z_dihedral_closed(int d, int W) {
  detail::require_weight(W, 0, "z_dihedral_closed");
  VariableSet vars(0, false, false, false, W);
  auto spec = detail::p_spec(W);
  auto one = TruncatedSeries::constant(vars, spec, Rational(1));
  TruncatedSeries out(vars, spec);
  for (int l = 1; l <= W; ++l) {
    auto arg = one - detail::p_term(vars, spec, l, Rational(neg_one_pow(d * (l - 1))));
    out += log(arg) * Rational(-totient(l), 2 * l);
  }
  if (W >= 1) {
    int sd = neg_one_pow(d);
    auto p1 = detail::p_term(vars, spec, 1, Rational(1));
    TruncatedSeries p2(vars, spec);
    if (W >= 2) p2 = detail::p_term(vars, spec, 2, Rational(1));
    auto num = mul(p1, p1) + p2 * Rational(sd) - p1 * Rational(2);
    auto den = reciprocal(one - p2 * Rational(sd));
    out += mul(num, den) * Rational(-sd, 4);
  }
  return out;
}

/// Homology of genus-one graphs in P_d: z_dihedral with p_l <- z^{(d-2)l} u^l p_l.
/// Arity k sits at u^k.
inline CycleIndexSum z_M1(int d, int W) {
  if (d < 2) throw std::invalid_argument("z_M1: d must be >= 2");
  auto zd = z_dihedral(d, W);
  VariableSet vars(0, true, true, false, W);
  TruncationSpec spec = detail::p_spec(W);
  spec.u_max = W;
  spec.z = {0, (d - 2) * W};
  std::vector<Assignment> as;
  for (int l = 1; l <= W; ++l) {
    as.push_back({Var::p(l), detail::graded_p(vars, spec, l, l, (d - 2) * l, Rational(1))});
  }
  return substitute(zd, as, vars, spec);
}

namespace detail {

// sum_{a | l, a k <= W} mu(l/a) p_{ak}
inline TruncatedSeries mobius_p_sum(const VariableSet& vars, const TruncationSpec& spec, int k, int l, int W) {
  TruncatedSeries s(vars, spec);
  for (int a : divisors(l)) {
    if (a * k > W) continue;
    int mu = mobius(l / a);
    if (mu) s += p_term(vars, spec, a * k, Rational(mu));
  }
  return s;
}

// u-series over an arbitrary VariableSet containing u: F_l(u^k).
inline TruncatedSeries f_poly_at(const VariableSet& vars, const TruncationSpec& spec, int l, int k) {
  return u_poly(f_poly(l), vars, spec, k);
}

// Moves every u exponent onto hbar (the u <- hbar substitution).
inline TruncatedSeries u_to_hbar(const TruncatedSeries& s, const VariableSet& vars, const TruncationSpec& spec) {
  const auto& src = s.vars();
  TruncatedSeries out(vars, spec);
  for (const auto& [m, c] : s.terms()) {
    Monomial o;
    for (int i = 0; i < src.size(); ++i) {
      Var v = src.var(i);
      if (m[i] == 0) continue;
      o.add(vars.at(v.kind == VarKind::kU ? Var::hbar() : v), m[i]);
    }
    out.add_term(o, c);
  }
  return out;
}

}  // namespace detail

/// Supercharacter of the complexes M(P_d^k), k >= 1, in u and p_1..p_W:
///   sum_{klj<=T} mu(k)/(kj) S_j(-(1/l) sum_{a|l} mu(l/a) p_{ak}) ((-1)^{d-1} l u^{kl} / F_l(u^k))^j
/// + sum_{kl<=2T} mu(k)/(kl) (sum_{a|l} mu(l/a) p_{ak}) ln F_l(u^k).
inline CycleIndexSum supercharacter_mpd(bool d_odd, int W, int T) {
  detail::require_weight(W, 1, "supercharacter_mpd");
  if (T < 1) throw std::invalid_argument("supercharacter_mpd: T must be >= 1");
  VariableSet vars(0, true, false, false, W);
  TruncationSpec spec = detail::p_spec(W);
  spec.u_max = T;
  const int dsign = d_odd ? 1 : -1;  // (-1)^{d-1}
  TruncatedSeries out(vars, spec);
  for (int k = 1; k <= 2 * T; ++k) {
    int mu = mobius(k);
    if (mu == 0) continue;
    for (int l = 1; k * l <= 2 * T; ++l) {
      auto q = detail::mobius_p_sum(vars, spec, k, l, W);
      if (q.is_zero()) continue;
      out += mul(q, log(detail::f_poly_at(vars, spec, l, k))) * Rational(mu, k * l);
      if (k * l > T) continue;
      auto Y = q * Rational(-1, l);
      auto V = mul(TruncatedSeries::variable(vars, spec, Var::u(), k * l, Rational(dsign * l)),
                   reciprocal(detail::f_poly_at(vars, spec, l, k)));
      std::vector<TruncatedSeries> ypow{TruncatedSeries::constant(vars, spec, Rational(1))};
      auto Vj = ypow[0];
      for (int j = 1; k * l * j <= T; ++j) {
        Vj = mul(Vj, V);
        while (static_cast<int>(ypow.size()) <= j + 1) ypow.push_back(mul(ypow.back(), Y));
        out += mul(s_poly(j).evaluate(ypow), Vj) * Rational(mu, k * j);
      }
    }
  }
  return out;
}

enum class Twist { kPlain, kDet };

namespace detail {

inline VariableSet envelope_vars(int W) { return VariableSet(0, false, false, true, W); }

inline TruncationSpec envelope_spec(int W, int G) {
  TruncationSpec s = p_spec(W);
  s.hbar = {0, G};
  return s;
}

// Keeps hbar exponents in [0, G]; a negative exponent is an error.
inline TruncatedSeries nonnegative_genus(const TruncatedSeries& s, int W, int G, const char* op) {
  auto vars = envelope_vars(W);
  TruncatedSeries out(vars, envelope_spec(W, G));
  int hi = vars.at(Var::hbar());
  for (const auto& [m, c] : s.terms()) {
    if (m[hi] < 0) throw ConsistencyError(std::string(op) + ": negative genus at " + monomial_text(vars, m));
    out.add_term(m, c);
  }
  return out;
}

}  // namespace detail

/// Positive-arity supercharacter Z^{>0} of Mod(L_infinity) (plain) or
/// Mod_Det(L_infinity) (Det), in hbar (genus) and p_1..p_W:
///   plain:  hbar Z_{M(P_3)}(u <- hbar, p_l <- -p_l / hbar^l)
///   Det:   -hbar Z_{M(P_2)}(u <- hbar, p_l <- +p_l / hbar^l)
/// The arity-zero part is not included.
inline CycleIndexSum mod_envelope_supercharacter(Twist twist, int W, int G) {
  if (W < 0 || G < 0) throw std::invalid_argument("mod_envelope_supercharacter: W, G must be >= 0");
  detail::require_weight(W, 0, "mod_envelope_supercharacter");
  auto vars = detail::envelope_vars(W);
  if (W == 0) return TruncatedSeries(vars, detail::envelope_spec(W, G));
  const int T = std::max(1, G + W - 1);
  const bool plain = twist == Twist::kPlain;
  auto Z = supercharacter_mpd(plain, W, T);
  TruncationSpec spec = detail::p_spec(W);
  spec.hbar = {-W, T + 1};
  auto moved = detail::u_to_hbar(Z, vars, spec);
  std::vector<Assignment> as;
  for (int l = 1; l <= W; ++l) {
    Monomial m;
    m.set(vars.at(Var::p(l)), 1);
    m.set(vars.at(Var::hbar()), -l);
    as.push_back({Var::p(l), TruncatedSeries::monomial(vars, spec, m, Rational(plain ? -1 : 1))});
  }
  auto sub = substitute(moved, as, vars, spec);
  auto scaled = shift(sub, Var::hbar(), 1, spec) * Rational(plain ? 1 : -1);
  return detail::nonnegative_genus(scaled, W, G, "mod_envelope_supercharacter");
}

/// The same series from the closed hbar-formulas (minus the arity-zero terms):
///   plain: hbar [ sum mu(k)/(kj) S_j(q/l) (l hbar^{kl}/F_l(hbar^k))^j - sum mu(k)/(kl) q ln F_l(hbar^k) ]
///   Det:   hbar [-sum mu(k)/(kj) S_j(-q/l) (-l hbar^{kl}/F_l(hbar^k))^j - sum mu(k)/(kl) q ln F_l(hbar^k) ]
/// with q = sum_{a|l} mu(l/a) p_{ak} / hbar^{ak}.
inline CycleIndexSum mod_envelope_direct(Twist twist, int W, int G) {
  if (W < 0 || G < 0) throw std::invalid_argument("mod_envelope_direct: W, G must be >= 0");
  detail::require_weight(W, 0, "mod_envelope_direct");
  auto vars = detail::envelope_vars(W);
  if (W == 0) return TruncatedSeries(vars, detail::envelope_spec(W, G));
  const int T = std::max(1, G + W - 1);
  const int sigma = twist == Twist::kPlain ? 1 : -1;
  TruncationSpec spec = detail::p_spec(W);
  spec.hbar = {-W, T};
  // u-only factors are computed in u and then moved to hbar.
  VariableSet uvars(0, true, false, false, 0);
  TruncationSpec uspec;
  uspec.u_max = T;
  TruncatedSeries out(vars, spec);
  for (int k = 1; k <= 2 * T; ++k) {
    int mu = mobius(k);
    if (mu == 0) continue;
    for (int l = 1; k * l <= 2 * T; ++l) {
      TruncatedSeries q(vars, spec);
      for (int a : divisors(l)) {
        if (a * k > W) continue;
        int ml = mobius(l / a);
        if (ml == 0) continue;
        Monomial m;
        m.set(vars.at(Var::p(a * k)), 1);
        m.set(vars.at(Var::hbar()), -a * k);
        q.add_term(m, Rational(ml));
      }
      if (q.is_zero()) continue;
      auto lnf = detail::u_to_hbar(log(detail::u_poly(f_poly(l), uvars, uspec, k)), vars, spec);
      out -= mul(q, lnf) * Rational(mu, k * l);
      if (k * l > T) continue;
      auto Y = q * Rational(sigma, l);
      auto Vu = mul(TruncatedSeries::variable(uvars, uspec, Var::u(), k * l, Rational(sigma * l)),
                    reciprocal(detail::u_poly(f_poly(l), uvars, uspec, k)));
      std::vector<TruncatedSeries> ypow{TruncatedSeries::constant(vars, spec, Rational(1))};
      auto Vj = TruncatedSeries::constant(uvars, uspec, Rational(1));
      for (int j = 1; k * l * j <= T; ++j) {
        Vj = mul(Vj, Vu);
        while (static_cast<int>(ypow.size()) <= j + 1) ypow.push_back(mul(ypow.back(), Y));
        out += mul(s_poly(j).evaluate(ypow), detail::u_to_hbar(Vj, vars, spec)) * Rational(sigma * mu, k * j);
      }
    }
  }
  TruncationSpec wide = spec;
  wide.hbar = {spec.hbar.lo + 1, spec.hbar.hi + 1};
  return detail::nonnegative_genus(shift(out, Var::hbar(), 1, wide), W, G, "mod_envelope_direct");
}

/// -Z(p_l <- -p_l); relates the envelopes to the Feynman transforms of Com.
inline CycleIndexSum feynman_regrade(const CycleIndexSum& Z) {
  const auto& vars = Z.vars();
  TruncatedSeries out(vars, Z.spec());
  for (const auto& [m, c] : Z.terms()) {
    int parts = 0;
    for (int l = 1; l <= vars.pcount(); ++l) parts += m[vars.at(Var::p(l))];
    out.add_term(m, neg_one_pow(parts + 1) == 1 ? c : -c);
  }
  return out;
}

}  // namespace slgf

#endif  // SLGF_CYCLEINDEX_HPP

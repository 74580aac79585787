#ifndef SLGF_MVSERIES_HPP
#define SLGF_MVSERIES_HPP

// Sparse truncated multivariate formal power series over Rational.
//
// Variables come in five kinds: Hodge variables x_1..x_r, the complexity
// variable u, the homological degree z, the genus variable hbar and the
// power sums p_1..p_L. The exponents of x, u and p are nonnegative and are
// truncated from above (u-degree <= T, total x-degree <= S, p-weight <= W with
// weight(p_l) = l). Those three bounds define a monomial ideal, so products,
// exp and log computed modulo it are exact on every retained coefficient.
//
// z and hbar are Laurent and only confined to a window [lo, hi]. A window is
// not closed under multiplication, so callers size windows to contain every
// exponent their computation can produce. Terms leaving the window are dropped.

#include "slgf/exactmath.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace slgf {

inline constexpr int kMaxVariables = 24;

enum class VarKind { kHodge, kU, kZ, kHbar, kP };

/// Identity of a variable independent of any VariableSet layout.
struct Var {
  VarKind kind;
  int index = 0;  // 1-based for x_i and p_l, unused otherwise

  static Var x(int i) { return {VarKind::kHodge, i}; }
  static Var u() { return {VarKind::kU, 0}; }
  static Var z() { return {VarKind::kZ, 0}; }
  static Var hbar() { return {VarKind::kHbar, 0}; }
  static Var p(int l) { return {VarKind::kP, l}; }

  friend bool operator==(const Var& a, const Var& b) {
    return a.kind == b.kind && a.index == b.index;
  }
};

/// Error raised when a series operation would violate its truncation contract.
class TruncationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Ordered set of variables: x_1..x_r, then u, z, hbar if present, then p_1..p_L.
class VariableSet {
 public:
  VariableSet() = default;
  VariableSet(int hodge_count, bool has_u, bool has_z, bool has_hbar, int pcount)
      : hodge_count_(hodge_count), has_u_(has_u), has_z_(has_z), has_hbar_(has_hbar),
        pcount_(pcount) {
    if (hodge_count < 0 || pcount < 0) throw std::invalid_argument("VariableSet: negative count");
    if (size() > kMaxVariables) throw std::invalid_argument("VariableSet: too many variables");
  }

  /// x_1..x_r and u.
  static VariableSet hodge(int r) { return {r, true, false, false, 0}; }

  int hodge_count() const { return hodge_count_; }
  int pcount() const { return pcount_; }
  bool has_u() const { return has_u_; }
  bool has_z() const { return has_z_; }
  bool has_hbar() const { return has_hbar_; }
  int size() const { return hodge_count_ + has_u_ + has_z_ + has_hbar_ + pcount_; }

  bool contains(Var v) const { return index_of(v).has_value(); }

  std::optional<int> index_of(Var v) const {
    switch (v.kind) {
      case VarKind::kHodge:
        if (v.index >= 1 && v.index <= hodge_count_) return v.index - 1;
        return std::nullopt;
      case VarKind::kU:
        if (has_u_) return hodge_count_;
        return std::nullopt;
      case VarKind::kZ:
        if (has_z_) return hodge_count_ + has_u_;
        return std::nullopt;
      case VarKind::kHbar:
        if (has_hbar_) return hodge_count_ + has_u_ + has_z_;
        return std::nullopt;
      case VarKind::kP:
        if (v.index >= 1 && v.index <= pcount_) return hodge_count_ + has_u_ + has_z_ + has_hbar_ + v.index - 1;
        return std::nullopt;
    }
    return std::nullopt;
  }

  int at(Var v) const {
    auto i = index_of(v);
    if (!i) throw std::invalid_argument("VariableSet: variable " + name(v) + " not present");
    return *i;
  }

  Var var(int idx) const {
    if (idx < hodge_count_) return Var::x(idx + 1);
    idx -= hodge_count_;
    if (has_u_) { if (idx == 0) return Var::u(); --idx; }
    if (has_z_) { if (idx == 0) return Var::z(); --idx; }
    if (has_hbar_) { if (idx == 0) return Var::hbar(); --idx; }
    return Var::p(idx + 1);
  }

  static std::string name(Var v) {
    switch (v.kind) {
      case VarKind::kHodge: return "x" + std::to_string(v.index);
      case VarKind::kU: return "u";
      case VarKind::kZ: return "z";
      case VarKind::kHbar: return "hbar";
      case VarKind::kP: return "p" + std::to_string(v.index);
    }
    return "?";
  }
  std::string name(int idx) const { return name(var(idx)); }

  friend bool operator==(const VariableSet& a, const VariableSet& b) {
    return a.hodge_count_ == b.hodge_count_ && a.has_u_ == b.has_u_ && a.has_z_ == b.has_z_ &&
           a.has_hbar_ == b.has_hbar_ && a.pcount_ == b.pcount_;
  }
  friend bool operator!=(const VariableSet& a, const VariableSet& b) { return !(a == b); }

 private:
  int hodge_count_ = 0;
  bool has_u_ = false;
  bool has_z_ = false;
  bool has_hbar_ = false;
  int pcount_ = 0;
};

/// Exponent vector over a VariableSet (stored positionally).
class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  void set(int i, int e) { exps_[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(e); }
  void add(int i, int e) { set(i, (*this)[i] + e); }

  static Monomial of(const VariableSet& vars, std::initializer_list<std::pair<Var, int>> exps) {
    Monomial m;
    for (const auto& [v, e] : exps) m.add(vars.at(v), e);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      r.exps_[i] = static_cast<std::int16_t>(a.exps_[i] + b.exps_[i]);
    }
    return r;
  }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::int16_t e) { return e == 0; });
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

  std::size_t hash() const {
    std::uint64_t words[kMaxVariables * 2 / 8];
    std::memcpy(words, exps_.data(), sizeof(words));
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : words) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }

 private:
  std::array<std::int16_t, kMaxVariables> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Closed integer interval for a Laurent variable's exponent.
struct Window {
  int lo = 0;
  int hi = 0;
  bool contains(int e) const { return lo <= e && e <= hi; }
  friend bool operator==(const Window& a, const Window& b) { return a.lo == b.lo && a.hi == b.hi; }
};

/// Truncation bounds. Variables absent from the VariableSet ignore their bound.
struct TruncationSpec {
  int u_max = 0;        // T
  int x_max = 1;        // S, total Hodge degree
  int p_max = 0;        // W, p-weight
  Window z{0, 0};
  Window hbar{0, 0};

  /// u^T with total Hodge degree T+1.
  static TruncationSpec for_complexity(int t_max) {
    TruncationSpec s;
    s.u_max = t_max;
    s.x_max = t_max + 1;
    return s;
  }

  void validate() const {
    if (u_max < 0 || x_max < 0 || p_max < 0) throw std::invalid_argument("TruncationSpec: negative bound");
    if (z.lo > z.hi || hbar.lo > hbar.hi) throw std::invalid_argument("TruncationSpec: empty window");
  }

  friend TruncationSpec common(const TruncationSpec& a, const TruncationSpec& b) {
    TruncationSpec r;
    r.u_max = std::min(a.u_max, b.u_max);
    r.x_max = std::min(a.x_max, b.x_max);
    r.p_max = std::min(a.p_max, b.p_max);
    r.z = {std::max(a.z.lo, b.z.lo), std::min(a.z.hi, b.z.hi)};
    r.hbar = {std::max(a.hbar.lo, b.hbar.lo), std::min(a.hbar.hi, b.hbar.hi)};
    if (r.z.lo > r.z.hi || r.hbar.lo > r.hbar.hi) {
      throw TruncationError("TruncationSpec: windows do not overlap");
    }
    return r;
  }

  friend bool operator==(const TruncationSpec& a, const TruncationSpec& b) {
    return a.u_max == b.u_max && a.x_max == b.x_max && a.p_max == b.p_max && a.z == b.z &&
           a.hbar == b.hbar;
  }
};

namespace detail {

// Per-monomial gradings used for bound checks and bucketing.
struct Grades {
  int u = 0;
  int x = 0;
  int p = 0;
  int z = 0;
  int hbar = 0;
  int weight() const { return u + x + p; }
};

inline Grades grades_of(const VariableSet& vars, const Monomial& m) {
  Grades g;
  for (int i = 0; i < vars.hodge_count(); ++i) g.x += m[i];
  if (vars.has_u()) g.u = m[vars.at(Var::u())];
  if (vars.has_z()) g.z = m[vars.at(Var::z())];
  if (vars.has_hbar()) g.hbar = m[vars.at(Var::hbar())];
  for (int l = 1; l <= vars.pcount(); ++l) g.p += l * m[vars.at(Var::p(l))];
  return g;
}

inline bool nonnegative_where_required(const VariableSet& vars, const Monomial& m) {
  for (int i = 0; i < vars.size(); ++i) {
    auto k = vars.var(i).kind;
    if (k != VarKind::kZ && k != VarKind::kHbar && m[i] < 0) return false;
  }
  return true;
}

inline bool grades_within(const VariableSet& vars, const TruncationSpec& s, const Grades& g) {
  if (vars.has_u() && g.u > s.u_max) return false;
  if (vars.hodge_count() > 0 && g.x > s.x_max) return false;
  if (vars.pcount() > 0 && g.p > s.p_max) return false;
  if (vars.has_z() && !s.z.contains(g.z)) return false;
  if (vars.has_hbar() && !s.hbar.contains(g.hbar)) return false;
  return true;
}

}  // namespace detail

/// Sparse truncated series; no zero coefficient is ever stored.
class TruncatedSeries {
 public:
  using TermMap = std::unordered_map<Monomial, Rational, MonomialHash>;

  TruncatedSeries() = default;
  TruncatedSeries(VariableSet vars, TruncationSpec spec) : vars_(vars), spec_(spec) {
    spec_.validate();
  }

  static TruncatedSeries constant(VariableSet vars, TruncationSpec spec, const Rational& c) {
    TruncatedSeries s(vars, spec);
    s.add_term(Monomial(), c);
    return s;
  }

  /// c * v^e for a single variable.
  static TruncatedSeries variable(VariableSet vars, TruncationSpec spec, Var v, int e = 1,
                                  const Rational& c = Rational(1)) {
    TruncatedSeries s(vars, spec);
    Monomial m;
    m.set(vars.at(v), e);
    s.add_term(m, c);
    return s;
  }

  static TruncatedSeries monomial(VariableSet vars, TruncationSpec spec, const Monomial& m,
                                  const Rational& c = Rational(1)) {
    TruncatedSeries s(vars, spec);
    s.add_term(m, c);
    return s;
  }

  const VariableSet& vars() const { return vars_; }
  const TruncationSpec& spec() const { return spec_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool in_bounds(const Monomial& m) const {
    return detail::nonnegative_where_required(vars_, m) &&
           detail::grades_within(vars_, spec_, detail::grades_of(vars_, m));
  }

  /// Adds c*m, silently dropping monomials beyond the truncation.
  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero() || !in_bounds(m)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Coefficient of m; throws TruncationError when m lies beyond the spec.
  Rational coefficient(const Monomial& m) const {
    if (!in_bounds(m)) throw TruncationError("coefficient: monomial outside truncation");
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
  }

  Rational constant_term() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Rational() : it->second;
  }

  /// Same terms restricted to a (not larger) spec.
  TruncatedSeries truncated(const TruncationSpec& spec) const {
    TruncatedSeries r(vars_, spec);
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    return r;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& c) {
    if (c.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [m, v] : terms_) v *= c;
    }
    return *this;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.vars_ == b.vars_ && a.spec_ == b.spec_ && a.terms_ == b.terms_;
  }

 private:
  VariableSet vars_;
  TruncationSpec spec_;
  TermMap terms_;
};

namespace detail {

inline void require_same_vars(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
  if (a.vars() != b.vars()) throw std::invalid_argument(std::string(op) + ": mismatched VariableSet");
}

struct GradedTerm {
  Monomial m;
  const Rational* c;
  Grades g;
};

inline std::vector<GradedTerm> graded_terms(const TruncatedSeries& s) {
  std::vector<GradedTerm> out;
  out.reserve(s.size());
  for (const auto& [m, c] : s.terms()) out.push_back({m, &c, grades_of(s.vars(), m)});
  return out;
}

// Terms of one factor bucketed by (u, x, p) grades so that whole buckets can be
// skipped when they would overflow a bound.
class BucketedFactor {
 public:
  BucketedFactor(const std::vector<GradedTerm>& terms) {  // NOLINT
    std::map<std::array<int, 3>, std::size_t> index;
    for (const auto& t : terms) {
      std::array<int, 3> key{t.g.u, t.g.x, t.g.p};
      auto [it, inserted] = index.try_emplace(key, buckets_.size());
      if (inserted) buckets_.push_back({t.g.u, t.g.x, t.g.p, {}});
      buckets_[it->second].terms.push_back(&t);
    }
  }

  template <typename Fn>
  void for_each_compatible(int u_room, int x_room, int p_room, Fn&& fn) const {
    for (const auto& b : buckets_) {
      if (b.u > u_room || b.x > x_room || b.p > p_room) continue;
      for (const GradedTerm* t : b.terms) fn(*t);
    }
  }

 private:
  struct Bucket {
    int u, x, p;
    std::vector<const GradedTerm*> terms;
  };
  std::vector<Bucket> buckets_;
};

// acc += scale * (a * b), dropping monomials beyond spec.
inline void accumulate_product(TruncatedSeries::TermMap& acc, const VariableSet& vars,
                               const TruncationSpec& spec, const std::vector<GradedTerm>& a,
                               const std::vector<GradedTerm>& b, const Rational* scale = nullptr) {
  if (a.empty() || b.empty()) return;
  const int big = 1 << 28;
  const int u_max = vars.has_u() ? spec.u_max : big;
  const int x_max = vars.hodge_count() > 0 ? spec.x_max : big;
  const int p_max = vars.pcount() > 0 ? spec.p_max : big;
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  BucketedFactor buckets(large);
  Rational coef;
  for (const auto& s : small) {
    if (s.g.u > u_max || s.g.x > x_max || s.g.p > p_max) continue;
    buckets.for_each_compatible(u_max - s.g.u, x_max - s.g.x, p_max - s.g.p, [&](const GradedTerm& t) {
      if (vars.has_z() && !spec.z.contains(s.g.z + t.g.z)) return;
      if (vars.has_hbar() && !spec.hbar.contains(s.g.hbar + t.g.hbar)) return;
      Monomial m = s.m * t.m;
      auto [it, inserted] = acc.try_emplace(m);
      if (scale) {
        coef = *s.c;
        coef *= *t.c;
        it->second.add_product(coef, *scale);
      } else {
        it->second.add_product(*s.c, *t.c);
      }
    });
  }
}

inline void drop_zeros(TruncatedSeries::TermMap& acc) {
  for (auto it = acc.begin(); it != acc.end();) {
    if (it->second.is_zero()) {
      it = acc.erase(it);
    } else {
      ++it;
    }
  }
}

inline TruncatedSeries from_map(const VariableSet& vars, const TruncationSpec& spec,
                                const TruncatedSeries::TermMap& acc) {
  TruncatedSeries r(vars, spec);
  for (const auto& [m, c] : acc) r.add_term(m, c);
  return r;
}

// Splits a series into homogeneous parts by weight = u + x + p (z, hbar excluded).
inline std::vector<std::vector<GradedTerm>> weight_components(const TruncatedSeries& s, int max_weight) {
  std::vector<std::vector<GradedTerm>> parts(static_cast<std::size_t>(max_weight + 1));
  for (const auto& t : graded_terms(s)) {
    int w = t.g.weight();
    if (w <= max_weight) parts[static_cast<std::size_t>(w)].push_back(t);
  }
  return parts;
}

inline int max_weight(const VariableSet& vars, const TruncationSpec& spec) {
  int w = 0;
  if (vars.has_u()) w += spec.u_max;
  if (vars.hodge_count() > 0) w += spec.x_max;
  if (vars.pcount() > 0) w += spec.p_max;
  return w;
}

// Stored graded terms that own their coefficients.
struct OwnedComponent {
  std::vector<Monomial> monos;
  std::vector<Rational> coefs;
  std::vector<GradedTerm> view(const VariableSet& vars) const {
    std::vector<GradedTerm> out;
    out.reserve(monos.size());
    for (std::size_t i = 0; i < monos.size(); ++i) out.push_back({monos[i], &coefs[i], grades_of(vars, monos[i])});
    return out;
  }
};

inline OwnedComponent own(const TruncatedSeries::TermMap& acc) {
  OwnedComponent c;
  for (const auto& [m, v] : acc) {
    if (v.is_zero()) continue;
    c.monos.push_back(m);
    c.coefs.push_back(v);
  }
  return c;
}

}  // namespace detail

inline TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  detail::require_same_vars(*this, o, "add");
  TruncationSpec s = common(spec_, o.spec_);
  if (!(s == spec_)) *this = truncated(s);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

inline TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  detail::require_same_vars(*this, o, "sub");
  TruncationSpec s = common(spec_, o.spec_);
  if (!(s == spec_)) *this = truncated(s);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

inline TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
inline TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
inline TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
inline TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return a *= c; }
inline TruncatedSeries operator-(TruncatedSeries a) { return a *= Rational(-1); }

inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }

/// Truncated product; the result spec is the common spec of the factors.
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  detail::require_same_vars(a, b, "mul");
  TruncationSpec spec = common(a.spec(), b.spec());
  TruncatedSeries::TermMap acc;
  detail::accumulate_product(acc, a.vars(), spec, detail::graded_terms(a), detail::graded_terms(b));
  detail::drop_zeros(acc);
  return detail::from_map(a.vars(), spec, acc);
}

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

namespace detail {

inline void require_positive_weight(const TruncatedSeries& a, const char* op) {
  for (const auto& [m, c] : a.terms()) {
    if (m.is_one()) continue;
    if (grades_of(a.vars(), m).weight() <= 0) {
      throw TruncationError(std::string(op) +
                            ": non-constant monomial of zero u/x/p weight is not nilpotent under truncation");
    }
  }
}

}  // namespace detail

/// exp(a) for a with zero constant term.
inline TruncatedSeries exp(const TruncatedSeries& a) {
  if (!a.constant_term().is_zero()) throw std::domain_error("exp: nonzero constant term");
  detail::require_positive_weight(a, "exp");
  const auto& vars = a.vars();
  const auto& spec = a.spec();
  const int wmax = detail::max_weight(vars, spec);
  auto parts = detail::weight_components(a, wmax);
  // E_n = (1/n) sum_{k=1}^{n} k A_k E_{n-k}
  std::vector<detail::OwnedComponent> e(static_cast<std::size_t>(wmax + 1));
  e[0].monos.push_back(Monomial());
  e[0].coefs.emplace_back(1);
  std::vector<std::vector<detail::GradedTerm>> e_view(static_cast<std::size_t>(wmax + 1));
  e_view[0] = e[0].view(vars);
  for (int n = 1; n <= wmax; ++n) {
    TruncatedSeries::TermMap acc;
    for (int k = 1; k <= n; ++k) {
      const auto& ak = parts[static_cast<std::size_t>(k)];
      if (ak.empty()) continue;
      Rational scale(k, n);
      detail::accumulate_product(acc, vars, spec, ak, e_view[static_cast<std::size_t>(n - k)], &scale);
    }
    e[static_cast<std::size_t>(n)] = detail::own(acc);
    e_view[static_cast<std::size_t>(n)] = e[static_cast<std::size_t>(n)].view(vars);
  }
  TruncatedSeries r(vars, spec);
  for (const auto& comp : e) {
    for (std::size_t i = 0; i < comp.monos.size(); ++i) r.add_term(comp.monos[i], comp.coefs[i]);
  }
  return r;
}

/// log(a) for a with constant term exactly 1.
inline TruncatedSeries log(const TruncatedSeries& a) {
  if (a.constant_term() != Rational(1)) throw std::domain_error("log: constant term must be 1");
  detail::require_positive_weight(a, "log");
  const auto& vars = a.vars();
  const auto& spec = a.spec();
  const int wmax = detail::max_weight(vars, spec);
  auto parts = detail::weight_components(a, wmax);
  // L_n = A_n - (1/n) sum_{k=1}^{n-1} k L_k A_{n-k}
  std::vector<detail::OwnedComponent> l(static_cast<std::size_t>(wmax + 1));
  std::vector<std::vector<detail::GradedTerm>> l_view(static_cast<std::size_t>(wmax + 1));
  for (int n = 1; n <= wmax; ++n) {
    TruncatedSeries::TermMap acc;
    for (const auto& t : parts[static_cast<std::size_t>(n)]) acc[t.m] += *t.c;
    for (int k = 1; k < n; ++k) {
      const auto& ank = parts[static_cast<std::size_t>(n - k)];
      if (ank.empty() || l_view[static_cast<std::size_t>(k)].empty()) continue;
      Rational scale(-k, n);
      detail::accumulate_product(acc, vars, spec, l_view[static_cast<std::size_t>(k)], ank, &scale);
    }
    l[static_cast<std::size_t>(n)] = detail::own(acc);
    l_view[static_cast<std::size_t>(n)] = l[static_cast<std::size_t>(n)].view(vars);
  }
  TruncatedSeries r(vars, spec);
  for (const auto& comp : l) {
    for (std::size_t i = 0; i < comp.monos.size(); ++i) r.add_term(comp.monos[i], comp.coefs[i]);
  }
  return r;
}

/// 1/a for a whose weight-zero part is a nonzero constant.
inline TruncatedSeries reciprocal(const TruncatedSeries& a) {
  Rational c0 = a.constant_term();
  if (c0.is_zero()) throw std::domain_error("reciprocal: zero constant term");
  detail::require_positive_weight(a, "reciprocal");
  const auto& vars = a.vars();
  const auto& spec = a.spec();
  const int wmax = detail::max_weight(vars, spec);
  auto parts = detail::weight_components(a, wmax);
  const Rational inv = Rational(1) / c0;
  // B_n = -(1/c0) sum_{k=1}^{n} A_k B_{n-k}
  std::vector<detail::OwnedComponent> b(static_cast<std::size_t>(wmax + 1));
  b[0].monos.push_back(Monomial());
  b[0].coefs.push_back(inv);
  std::vector<std::vector<detail::GradedTerm>> b_view(static_cast<std::size_t>(wmax + 1));
  b_view[0] = b[0].view(vars);
  const Rational scale = -inv;
  for (int n = 1; n <= wmax; ++n) {
    TruncatedSeries::TermMap acc;
    for (int k = 1; k <= n; ++k) {
      const auto& ak = parts[static_cast<std::size_t>(k)];
      if (ak.empty()) continue;
      detail::accumulate_product(acc, vars, spec, ak, b_view[static_cast<std::size_t>(n - k)], &scale);
    }
    b[static_cast<std::size_t>(n)] = detail::own(acc);
    b_view[static_cast<std::size_t>(n)] = b[static_cast<std::size_t>(n)].view(vars);
  }
  TruncatedSeries r(vars, spec);
  for (const auto& comp : b) {
    for (std::size_t i = 0; i < comp.monos.size(); ++i) r.add_term(comp.monos[i], comp.coefs[i]);
  }
  return r;
}

/// base^expnt := exp(expnt * log(base)) for base with constant term 1.
inline TruncatedSeries pow_series_exponent(const TruncatedSeries& base, const TruncatedSeries& expnt) {
  if (base.constant_term() != Rational(1)) {
    throw std::domain_error("pow_series_exponent: base constant term must be 1");
  }
  return exp(mul(expnt, log(base)));
}

/// a^n for n >= 0 by repeated squaring.
inline TruncatedSeries power(const TruncatedSeries& a, int n) {
  if (n < 0) throw std::invalid_argument("power: negative exponent");
  TruncatedSeries result = TruncatedSeries::constant(a.vars(), a.spec(), Rational(1));
  TruncatedSeries base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n) base = mul(base, base);
  }
  return result;
}

/// One replacement in a simultaneous substitution.
struct Assignment {
  Var variable;
  TruncatedSeries replacement;
};

namespace detail {

inline bool is_truncating(VarKind k) { return k == VarKind::kHodge || k == VarKind::kU || k == VarKind::kP; }

}  // namespace detail

/// Simultaneous substitution. Unassigned variables of `a` carry over to the
/// same variable of `result_vars`. Replacements live in result_vars; a
/// replacement for a truncated variable (x, u, p) must have positive weight
/// in every term so that beyond-bound monomials of `a` cannot land inside
/// result_spec. Negative exponents need a single-term replacement.
inline TruncatedSeries substitute(const TruncatedSeries& a, const std::vector<Assignment>& assignments,
                                  const VariableSet& result_vars, const TruncationSpec& result_spec) {
  const auto& src = a.vars();
  const int n = src.size();
  std::vector<const TruncatedSeries*> repl(static_cast<std::size_t>(n), nullptr);
  for (const auto& as : assignments) {
    int idx = src.at(as.variable);
    if (as.replacement.vars() != result_vars) {
      throw std::invalid_argument("substitute: replacement not over the result VariableSet");
    }
    if (detail::is_truncating(as.variable.kind)) {
      for (const auto& [m, c] : as.replacement.terms()) {
        if (detail::grades_of(result_vars, m).weight() <= 0) {
          throw TruncationError("substitute: replacement for " + VariableSet::name(as.variable) +
                                " has a term of zero weight; truncation cannot be respected");
        }
      }
    }
    repl[static_cast<std::size_t>(idx)] = &as.replacement;
  }
  // Carried-over variable positions in the result.
  std::vector<int> carry(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (repl[static_cast<std::size_t>(i)]) continue;
    auto j = result_vars.index_of(src.var(i));
    if (j) carry[static_cast<std::size_t>(i)] = *j;
  }

  bool all_single = true;
  for (int i = 0; i < n; ++i) {
    if (repl[static_cast<std::size_t>(i)] && repl[static_cast<std::size_t>(i)]->size() > 1) all_single = false;
  }

  TruncatedSeries result(result_vars, result_spec);
  auto single_term = [](const TruncatedSeries& s) -> std::pair<Monomial, Rational> {
    if (s.is_zero()) return {Monomial(), Rational()};
    const auto& [m, c] = *s.terms().begin();
    return {m, c};
  };

  auto missing = [&](int i) {
    throw std::invalid_argument("substitute: variable " + src.name(i) + " has no image in result");
  };

  if (all_single) {
    for (const auto& [m, c] : a.terms()) {
      Monomial out;
      Rational coef = c;
      for (int i = 0; i < n && !coef.is_zero(); ++i) {
        int e = m[i];
        if (e == 0) continue;
        if (const auto* r = repl[static_cast<std::size_t>(i)]) {
          auto [rm, rc] = single_term(*r);
          if (rc.is_zero()) {
            coef = Rational();
            break;
          }
          Rational f(1);
          int ae = e < 0 ? -e : e;
          for (int k = 0; k < ae; ++k) f *= rc;
          if (e < 0) f = Rational(1) / f;
          coef *= f;
          for (int j = 0; j < result_vars.size(); ++j) out.add(j, rm[j] * e);
        } else {
          if (carry[static_cast<std::size_t>(i)] < 0) missing(i);
          out.add(carry[static_cast<std::size_t>(i)], e);
        }
      }
      if (!coef.is_zero()) {
        if (!detail::nonnegative_where_required(result_vars, out)) {
          throw TruncationError("substitute: negative exponent on a nonnegative variable");
        }
        result.add_term(out, coef);
      }
    }
    return result;
  }

  // General path: cache powers of every multi-term replacement.
  std::vector<std::vector<TruncatedSeries>> powers(static_cast<std::size_t>(n));
  auto power_of = [&](int i, int e) -> const TruncatedSeries& {
    auto& cache = powers[static_cast<std::size_t>(i)];
    if (cache.empty()) cache.push_back(TruncatedSeries::constant(result_vars, result_spec, Rational(1)));
    while (static_cast<int>(cache.size()) <= e) {
      cache.push_back(mul(cache.back(), repl[static_cast<std::size_t>(i)]->truncated(result_spec)));
    }
    return cache[static_cast<std::size_t>(e)];
  };

  for (const auto& [m, c] : a.terms()) {
    Monomial carried;
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      int e = m[i];
      if (e == 0 || repl[static_cast<std::size_t>(i)]) continue;
      if (carry[static_cast<std::size_t>(i)] < 0) missing(i);
      carried.add(carry[static_cast<std::size_t>(i)], e);
    }
    TruncatedSeries term = TruncatedSeries::monomial(result_vars, result_spec, Monomial(), c);
    for (int i = 0; i < n && ok; ++i) {
      int e = m[i];
      const auto* r = repl[static_cast<std::size_t>(i)];
      if (e == 0 || !r) continue;
      if (e < 0) {
        if (r->size() != 1) throw TruncationError("substitute: negative power of a multi-term replacement");
        auto [rm, rc] = single_term(*r);
        Rational f(1);
        for (int k = 0; k < -e; ++k) f *= rc;
        Monomial inv;
        for (int j = 0; j < result_vars.size(); ++j) inv.set(j, rm[j] * e);
        term = mul(term, TruncatedSeries::monomial(result_vars, result_spec, inv, Rational(1) / f));
      } else {
        term = mul(term, power_of(i, e));
      }
      if (term.is_zero()) ok = false;
    }
    if (!ok) continue;
    for (const auto& [tm, tc] : term.terms()) {
      Monomial out = tm * carried;
      if (!detail::nonnegative_where_required(result_vars, out)) {
        throw TruncationError("substitute: negative exponent on a nonnegative variable");
      }
      result.add_term(out, tc);
    }
  }
  return result;
}

/// Substitution within the same VariableSet and spec.
inline TruncatedSeries substitute(const TruncatedSeries& a, const std::vector<Assignment>& assignments) {
  return substitute(a, assignments, a.vars(), a.spec());
}

/// Monomials with exponent exactly `degree` in v, with the v-factor removed.
inline TruncatedSeries grade_extract(const TruncatedSeries& a, Var v, int degree) {
  int idx = a.vars().at(v);
  TruncatedSeries r(a.vars(), a.spec());
  for (const auto& [m, c] : a.terms()) {
    if (m[idx] != degree) continue;
    Monomial out = m;
    out.set(idx, 0);
    r.add_term(out, c);
  }
  return r;
}

/// a * v^delta, throwing if a nonnegative variable would go negative.
inline TruncatedSeries shift(const TruncatedSeries& a, Var v, int delta, const TruncationSpec& spec) {
  int idx = a.vars().at(v);
  TruncatedSeries r(a.vars(), spec);
  for (const auto& [m, c] : a.terms()) {
    Monomial out = m;
    out.add(idx, delta);
    if (!detail::nonnegative_where_required(a.vars(), out)) {
      throw TruncationError("shift: negative exponent on " + VariableSet::name(v));
    }
    r.add_term(out, c);
  }
  return r;
}

/// First monomial (in canonical order) where a and b differ within the common
/// spec, if any.
inline std::optional<Monomial> first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
  detail::require_same_vars(a, b, "first_difference");
  TruncationSpec s = common(a.spec(), b.spec());
  auto ra = a.truncated(s);
  auto rb = b.truncated(s);
  std::vector<Monomial> diffs;
  for (const auto& [m, c] : ra.terms()) {
    auto it = rb.terms().find(m);
    if (it == rb.terms().end() || it->second != c) diffs.push_back(m);
  }
  for (const auto& [m, c] : rb.terms()) {
    if (!ra.terms().count(m)) diffs.push_back(m);
  }
  if (diffs.empty()) return std::nullopt;
  return *std::min_element(diffs.begin(), diffs.end());
}

/// True when a and b agree on every monomial of their common spec.
inline bool agree(const TruncatedSeries& a, const TruncatedSeries& b) { return !first_difference(a, b); }

// ---------------------------------------------------------------------------
// Canonical text form.

inline std::string monomial_text(const VariableSet& vars, const Monomial& m) {
  std::string out;
  for (int i = 0; i < vars.size(); ++i) {
    int e = m[i];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.name(i);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace detail {

inline int text_degree(const VariableSet& vars, const Monomial& m) {
  int d = 0;
  for (int i = 0; i < vars.size(); ++i) {
    Var v = vars.var(i);
    d += (v.kind == VarKind::kP ? v.index : 1) * m[i];
  }
  return d;
}

}  // namespace detail

/// Terms sorted by weighted total degree (weight(p_l) = l), then by exponent
/// vector in descending lexicographic order.
inline std::vector<std::pair<Monomial, Rational>> canonical_terms(const TruncatedSeries& s) {
  std::vector<std::pair<Monomial, Rational>> terms(s.terms().begin(), s.terms().end());
  const auto& vars = s.vars();
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    int da = detail::text_degree(vars, a.first);
    int db = detail::text_degree(vars, b.first);
    if (da != db) return da < db;
    for (int i = 0; i < vars.size(); ++i) {
      if (a.first[i] != b.first[i]) return a.first[i] > b.first[i];
    }
    return false;
  });
  return terms;
}

/// "1 + 3*u - 1/2*x1^2*u"; "0" for the zero series.
inline std::string to_text(const TruncatedSeries& s) {
  auto terms = canonical_terms(s);
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono = monomial_text(s.vars(), m);
    if (mono.empty()) {
      os << mag.str();
    } else if (mag == Rational(1)) {
      os << mono;
    } else {
      os << mag.str() << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace slgf

#endif  // SLGF_MVSERIES_HPP

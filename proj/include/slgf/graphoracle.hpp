#ifndef SLGF_GRAPHORACLE_HPP
#define SLGF_GRAPHORACLE_HPP

// Brute-force enumeration of coloured hairy graphs and their Euler
// characteristics, independent of every generating-function route.

#include "slgf/exactmath.hpp"
#include "slgf/genfun.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slgf {

/// Vertices 0..internal-1 are internal; hair j is vertex internal + j.
/// Edges are stored with a <= b in sorted order; loops have a == b and
/// parallel edges are repeated.
struct HairyGraph {
  int internal = 0;
  std::vector<int> hair_colors;  // 1..r
  std::vector<std::pair<int, int>> edges;

  int vertex_count() const { return internal + static_cast<int>(hair_colors.size()); }
  int color(int v) const { return v < internal ? 0 : hair_colors[static_cast<std::size_t>(v - internal)]; }
  int genus() const { return static_cast<int>(edges.size()) - vertex_count() + 1; }
  int complexity() const { return genus() + static_cast<int>(hair_colors.size()) - 1; }

  std::vector<std::vector<int>> adjacency() const {
    int n = vertex_count();
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (auto [x, y] : edges) {
      a[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] += 1;
      if (x != y) a[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] += 1;
    }
    return a;
  }

  /// (d-1)|E| - d|I| - sum over hairs of m_color.
  int degree(const LinkConfig& cfg) const {
    int deg = (cfg.d() - 1) * static_cast<int>(edges.size()) - cfg.d() * internal;
    for (int c : hair_colors) deg -= cfg.m(c);
    return deg;
  }
};

/// Canonical key plus the colour-preserving vertex automorphisms.
struct CanonicalForm {
  std::string key;
  std::vector<int> labeling;                   // position -> vertex
  std::vector<std::vector<int>> automorphisms;  // vertex -> vertex, identity included
};

namespace detail {

using Partition = std::vector<std::vector<int>>;

inline void refine(Partition& cells, const std::vector<std::vector<int>>& adj) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> cell_of(adj.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (int v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
    Partition next;
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> sig;
      for (int v : cell) {
        std::vector<int> s(cells.size() + 1, 0);
        s[0] = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)];
        for (std::size_t w = 0; w < adj.size(); ++w) {
          if (static_cast<int>(w) == v) continue;
          s[static_cast<std::size_t>(cell_of[w]) + 1] += adj[static_cast<std::size_t>(v)][w];
        }
        sig.emplace_back(std::move(s), v);
      }
      std::sort(sig.begin(), sig.end());
      std::vector<int> cur{sig[0].second};
      for (std::size_t i = 1; i < sig.size(); ++i) {
        if (sig[i].first != sig[i - 1].first) {
          next.push_back(cur);
          cur.clear();
          changed = true;
        }
        cur.push_back(sig[i].second);
      }
      next.push_back(cur);
    }
    cells = std::move(next);
  }
}

struct CanonSearch {
  const std::vector<std::vector<int>>& adj;
  const std::vector<int>& colors;
  std::vector<int> best;
  std::vector<std::vector<int>> best_orders;

  std::vector<int> encode(const std::vector<int>& order) const {
    std::vector<int> e;
    for (int v : order) e.push_back(colors[static_cast<std::size_t>(v)]);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i; j < order.size(); ++j) {
        e.push_back(adj[static_cast<std::size_t>(order[i])][static_cast<std::size_t>(order[j])]);
      }
    }
    return e;
  }

  void search(Partition cells) {
    refine(cells, adj);
    auto it = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (it == cells.end()) {
      std::vector<int> order;
      for (const auto& c : cells) order.push_back(c[0]);
      auto e = encode(order);
      if (best_orders.empty() || e < best) {
        best = std::move(e);
        best_orders = {order};
      } else if (e == best) {
        best_orders.push_back(order);
      }
      return;
    }
    const std::size_t idx = static_cast<std::size_t>(it - cells.begin());
    for (int v : cells[idx]) {
      Partition next(cells.begin(), cells.begin() + static_cast<long>(idx));
      next.push_back({v});
      std::vector<int> rest;
      for (int w : cells[idx]) {
        if (w != v) rest.push_back(w);
      }
      next.push_back(rest);
      next.insert(next.end(), cells.begin() + static_cast<long>(idx) + 1, cells.end());
      search(std::move(next));
    }
  }
};

}  // namespace detail

/// Canonical labeling by colour refinement and exhaustive individualization.
/// Two graphs are isomorphic (preserving hair colours) iff their keys agree.
inline CanonicalForm canonical_form(const HairyGraph& g) {
  const int n = g.vertex_count();
  auto adj = g.adjacency();
  std::vector<int> colors(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) colors[static_cast<std::size_t>(v)] = g.color(v);
  std::map<int, std::vector<int>> by_color;
  for (int v = 0; v < n; ++v) by_color[colors[static_cast<std::size_t>(v)]].push_back(v);
  detail::Partition cells;
  for (auto& [c, vs] : by_color) cells.push_back(vs);
  detail::CanonSearch s{adj, colors, {}, {}};
  if (n > 0) s.search(cells);
  CanonicalForm out;
  for (std::size_t i = 0; i < s.best.size(); ++i) {
    if (i) out.key += ',';
    out.key += std::to_string(s.best[i]);
  }
  if (n == 0) return out;
  out.labeling = s.best_orders.front();
  for (const auto& order : s.best_orders) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      perm[static_cast<std::size_t>(out.labeling[static_cast<std::size_t>(i)])] = order[static_cast<std::size_t>(i)];
    }
    out.automorphisms.push_back(std::move(perm));
  }
  return out;
}

namespace detail {

inline int perm_sign(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

inline int parity_power(int sign, int e) { return (e % 2 != 0) ? sign : 1; }

}  // namespace detail

/// Sign by which the vertex automorphism `perm` (lifted to edges in the
/// order-preserving way) acts on the orientation: internal vertices of degree
/// -d, edges of degree d-1, hairs of degree -m_colour, and (-1)^d per
/// reversed edge.
inline int orientation_sign(const HairyGraph& g, const std::vector<int>& perm, const LinkConfig& cfg) {
  const int k = g.internal;
  std::vector<int> pi(static_cast<std::size_t>(k));
  for (int v = 0; v < k; ++v) pi[static_cast<std::size_t>(v)] = perm[static_cast<std::size_t>(v)];
  int sign = detail::parity_power(detail::perm_sign(pi), cfg.d());

  std::map<int, std::vector<int>> hairs_by_color;
  for (std::size_t j = 0; j < g.hair_colors.size(); ++j) hairs_by_color[g.hair_colors[j]].push_back(k + static_cast<int>(j));
  for (const auto& [c, hs] : hairs_by_color) {
    std::map<int, int> pos;
    for (std::size_t i = 0; i < hs.size(); ++i) pos[hs[i]] = static_cast<int>(i);
    std::vector<int> ph(hs.size());
    for (std::size_t i = 0; i < hs.size(); ++i) ph[i] = pos.at(perm[static_cast<std::size_t>(hs[i])]);
    sign *= detail::parity_power(detail::perm_sign(ph), cfg.m(c));
  }

  std::map<std::pair<int, int>, int> first;
  for (std::size_t e = 0; e < g.edges.size(); ++e) first.try_emplace(g.edges[e], static_cast<int>(e));
  std::vector<int> pe(g.edges.size());
  int flips = 0;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [a, b] = g.edges[e];
    int occurrence = static_cast<int>(e) - first.at(g.edges[e]);
    int pa = perm[static_cast<std::size_t>(a)];
    int pb = perm[static_cast<std::size_t>(b)];
    if (pa > pb) {
      std::swap(pa, pb);
      ++flips;
    }
    pe[e] = first.at({pa, pb}) + occurrence;
  }
  sign *= detail::parity_power(detail::perm_sign(pe), cfg.d() - 1);
  sign *= detail::parity_power(-1, cfg.d() * flips);
  return sign;
}

/// True when some automorphism reverses the orientation. The automorphism
/// group is generated by lifts of vertex automorphisms, swaps of parallel
/// edges and loops, and loop reversals.
inline bool is_killed(const HairyGraph& g, const std::vector<std::vector<int>>& vertex_auts, const LinkConfig& cfg) {
  std::map<std::pair<int, int>, int> mult;
  for (const auto& e : g.edges) mult[e] += 1;
  for (const auto& [e, c] : mult) {
    if (e.first == e.second && neg_one_pow(cfg.d()) == -1) return true;  // loop reversal
    if (c >= 2 && neg_one_pow(cfg.d() - 1) == -1) return true;          // parallel swap
  }
  for (const auto& p : vertex_auts) {
    if (orientation_sign(g, p, cfg) == -1) return true;
  }
  return false;
}

struct HairyGraphClass {
  HairyGraph graph;
  std::string key;
  int genus = 0;
  int complexity = 0;
  int degree = 0;
  bool killed = false;
  std::size_t automorphism_count = 0;  // colour-preserving vertex automorphisms

  /// Contribution to the Euler characteristic.
  int sign() const { return killed ? 0 : neg_one_pow(degree); }
};

/// Enumeration limits; requests beyond them are refused.
struct OracleBudget {
  int max_complexity = 5;
  int max_hairs = 6;
};

class BudgetExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

// All ways to write `total` as an ordered sum of `parts` nonnegative integers.
inline void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int v = total; v >= 0; --v) {
    cur.push_back(v);
    compositions(total - v, parts - 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions(total, parts, cur, out);
  return out;
}

// Multigraphs (loops count 2) on k labelled vertices with internal degrees rem.
class DegreeRealizer {
 public:
  DegreeRealizer(int k, std::vector<int> rem) : k_(k), rem_(std::move(rem)) {}

  template <typename Fn>
  void run(Fn&& emit) {
    edges_.clear();
    vertex(0, emit);
  }

 private:
  template <typename Fn>
  void vertex(int i, Fn& emit) {
    if (i == k_) {
      emit(edges_);
      return;
    }
    auto& r = rem_[static_cast<std::size_t>(i)];
    for (int loops = r / 2; loops >= 0; --loops) {
      r -= 2 * loops;
      for (int c = 0; c < loops; ++c) edges_.emplace_back(i, i);
      pair(i, i + 1, emit);
      for (int c = 0; c < loops; ++c) edges_.pop_back();
      r += 2 * loops;
    }
  }

  template <typename Fn>
  void pair(int i, int j, Fn& emit) {
    auto& ri = rem_[static_cast<std::size_t>(i)];
    if (j == k_) {
      if (ri == 0) vertex(i + 1, emit);
      return;
    }
    auto& rj = rem_[static_cast<std::size_t>(j)];
    int most = std::min(ri, rj);
    for (int c = most; c >= 0; --c) {
      ri -= c;
      rj -= c;
      for (int t = 0; t < c; ++t) edges_.emplace_back(i, j);
      pair(i, j + 1, emit);
      for (int t = 0; t < c; ++t) edges_.pop_back();
      ri += c;
      rj += c;
    }
  }

  int k_;
  std::vector<int> rem_;
  std::vector<std::pair<int, int>> edges_;
};

inline bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n == 0) return true;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int comps = n;
  for (auto [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[static_cast<std::size_t>(ra)] = rb;
      --comps;
    }
  }
  return comps == 1;
}

}  // namespace detail

/// Isomorphism classes of connected hairy graphs with s[c-1] hairs of colour
/// c and complexity t (genus t + 1 - |s|), internal vertices of valence >= 3.
/// Classes come sorted by key.
inline std::vector<HairyGraphClass> enumerate_classes(const LinkConfig& cfg, const std::vector<int>& s, int t,
                                                      const OracleBudget& budget = {}) {
  if (static_cast<int>(s.size()) != cfg.r()) throw std::invalid_argument("enumerate_classes: need r hair counts");
  int H = 0;
  for (int v : s) {
    if (v < 0) throw std::invalid_argument("enumerate_classes: negative hair count");
    H += v;
  }
  if (H < 1) throw std::invalid_argument("enumerate_classes: at least one hair required");
  if (t > budget.max_complexity || H > budget.max_hairs) {
    throw BudgetExceeded("enumerate_classes: (t=" + std::to_string(t) + ", hairs=" + std::to_string(H) +
                         ") exceeds the enumeration budget");
  }
  const int g = t + 1 - H;
  if (g < 0) return {};
  const bool all_odd = neg_one_pow(cfg.d()) == -1 &&
                       std::all_of(cfg.m().begin(), cfg.m().end(), [](int m) { return m % 2 != 0; });

  std::vector<int> colors;
  for (int c = 1; c <= cfg.r(); ++c) {
    for (int i = 0; i < s[static_cast<std::size_t>(c - 1)]; ++i) colors.push_back(c);
  }

  std::map<std::string, HairyGraphClass> found;
  auto record = [&](HairyGraph gr) {
    std::sort(gr.edges.begin(), gr.edges.end());
    auto cf = canonical_form(gr);
    if (found.count(cf.key)) return;
    HairyGraphClass cls;
    cls.genus = gr.genus();
    cls.complexity = gr.complexity();
    cls.degree = gr.degree(cfg);
    cls.killed = is_killed(gr, cf.automorphisms, cfg);
    cls.automorphism_count = cf.automorphisms.size();
    if (cls.genus != g || cls.complexity != t) throw std::logic_error("enumerate_classes: grading mismatch");
    if (all_odd && neg_one_pow(cls.degree) != neg_one_pow(gr.internal + H)) {
      throw std::logic_error("enumerate_classes: degree parity differs from (-1)^{|I|+|H|}");
    }
    cls.key = cf.key;
    cls.graph = std::move(gr);
    found.emplace(cls.key, std::move(cls));
  };

  // No internal vertex: only the single edge joining two hairs.
  if (H == 2 && g == 0) {
    HairyGraph gr;
    gr.hair_colors = colors;
    gr.edges = {{0, 1}};
    record(gr);
  }

  // |E| = g - 1 + |I| + |H| and valence >= 3 give |I| <= g + t - 1, |E| <= 3t - |H|.
  for (int k = 1; k <= g + t - 1; ++k) {
    const int e_int = g - 1 + k;
    if (e_int < 0) continue;
    // hair counts per (vertex, colour)
    std::vector<std::vector<std::vector<int>>> per_color;
    for (int c = 0; c < cfg.r(); ++c) per_color.push_back(detail::compositions(s[static_cast<std::size_t>(c)], k));
    std::vector<std::size_t> pick(static_cast<std::size_t>(cfg.r()), 0);
    while (true) {
      std::vector<int> hairs_at(static_cast<std::size_t>(k), 0);
      for (int c = 0; c < cfg.r(); ++c) {
        const auto& comp = per_color[static_cast<std::size_t>(c)][pick[static_cast<std::size_t>(c)]];
        for (int v = 0; v < k; ++v) hairs_at[static_cast<std::size_t>(v)] += comp[static_cast<std::size_t>(v)];
      }
      for (const auto& delta : detail::compositions(2 * e_int, k)) {
        bool ok = true;
        for (int v = 0; v < k && ok; ++v) {
          if (delta[static_cast<std::size_t>(v)] + hairs_at[static_cast<std::size_t>(v)] < 3) ok = false;
        }
        // vertices ordered by (internal degree, hair counts) to cut relabelings
        for (int v = 0; v + 1 < k && ok; ++v) {
          auto sig = [&](int w) {
            std::vector<int> x{delta[static_cast<std::size_t>(w)]};
            for (int c = 0; c < cfg.r(); ++c) {
              x.push_back(per_color[static_cast<std::size_t>(c)][pick[static_cast<std::size_t>(c)]][static_cast<std::size_t>(w)]);
            }
            return x;
          };
          if (sig(v) < sig(v + 1)) ok = false;
        }
        if (!ok) continue;
        detail::DegreeRealizer realizer(k, delta);
        realizer.run([&](const std::vector<std::pair<int, int>>& internal_edges) {
          if (!detail::connected(k, internal_edges)) return;
          HairyGraph gr;
          gr.internal = k;
          gr.edges = internal_edges;
          int next_hair = k;
          for (int c = 0; c < cfg.r(); ++c) {
            const auto& comp = per_color[static_cast<std::size_t>(c)][pick[static_cast<std::size_t>(c)]];
            for (int v = 0; v < k; ++v) {
              for (int i = 0; i < comp[static_cast<std::size_t>(v)]; ++i) {
                gr.hair_colors.push_back(c + 1);
                gr.edges.emplace_back(v, next_hair++);
              }
            }
          }
          record(std::move(gr));
        });
      }
      int c = 0;
      while (c < cfg.r()) {
        auto& p = pick[static_cast<std::size_t>(c)];
        if (++p < per_color[static_cast<std::size_t>(c)].size()) break;
        p = 0;
        ++c;
      }
      if (c == cfg.r()) break;
    }
  }

  std::vector<HairyGraphClass> out;
  for (auto& [key, cls] : found) out.push_back(std::move(cls));
  return out;
}

/// Sum over non-killed classes of (-1)^degree.
inline long euler_char_oracle(const LinkConfig& cfg, const std::vector<int>& s, int t,
                              const OracleBudget& budget = {}) {
  long chi = 0;
  for (const auto& cls : enumerate_classes(cfg, s, t, budget)) chi += cls.sign();
  return chi;
}

}  // namespace slgf

#endif  // SLGF_GRAPHORACLE_HPP

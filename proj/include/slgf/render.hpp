#ifndef SLGF_RENDER_HPP
#define SLGF_RENDER_HPP

// Text, CSV and JSON renderings of series, tables and graph listings.

#include "slgf/genfun.hpp"
#include "slgf/graphoracle.hpp"
#include "slgf/mvseries.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace slgf {

enum class Format { kText, kCsv, kJson };

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::kText;
  if (s == "csv") return Format::kCsv;
  if (s == "json") return Format::kJson;
  throw std::invalid_argument("unknown format '" + s + "' (expected text, csv or json)");
}

namespace detail {

// JSON number when it fits in 64 bits, decimal string otherwise.
inline nlohmann::json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

}  // namespace detail

/// Text is the canonical form; CSV is "monomial,coefficient" rows; JSON lists
/// the variables and the terms in canonical order.
inline std::string render_series(const TruncatedSeries& s, Format f) {
  const auto terms = canonical_terms(s);
  switch (f) {
    case Format::kText:
      return to_text(s) + "\n";
    case Format::kCsv: {
      std::string out = "monomial,coefficient\n";
      for (const auto& [m, c] : terms) {
        std::string mono = monomial_text(s.vars(), m);
        out += (mono.empty() ? "1" : mono) + "," + c.str() + "\n";
      }
      return out;
    }
    case Format::kJson: {
      nlohmann::json j;
      j["variables"] = nlohmann::json::array();
      for (int i = 0; i < s.vars().size(); ++i) j["variables"].push_back(s.vars().name(i));
      j["terms"] = nlohmann::json::array();
      for (const auto& [m, c] : terms) {
        std::string mono = monomial_text(s.vars(), m);
        j["terms"].push_back({{"monomial", mono.empty() ? "1" : mono}, {"coefficient", c.str()}});
      }
      return j.dump(2) + "\n";
    }
  }
  return {};
}

/// Text: "# genus g (convention)", a header "t c0 c1 ...", then one row per t.
/// CSV: same grid, comma separated. JSON: {"genus", "convention", "rows"}; for
/// r > 2 a "columns" array names the (s2:...:sr) column labels.
inline std::string render_table(const EulerTable& table, Format f) {
  const auto& cols = table.columns();
  switch (f) {
    case Format::kText:
    case Format::kCsv: {
      const std::string sep = f == Format::kCsv ? "," : " ";
      std::ostringstream os;
      if (f == Format::kText) os << "# genus " << table.genus() << " (" << table.convention() << ")\n";
      os << "t";
      for (std::size_t c = 0; c < cols.size(); ++c) os << sep << table.column_label(c);
      os << "\n";
      for (int t = 1; t <= table.t_max(); ++t) {
        os << t;
        for (std::size_t c = 0; c < cols.size(); ++c) os << sep << table.at(t, c).get_str();
        os << "\n";
      }
      return os.str();
    }
    case Format::kJson: {
      nlohmann::json j;
      j["genus"] = table.genus();
      j["convention"] = table.convention();
      if (table.r() > 2) {
        j["columns"] = nlohmann::json::array();
        for (std::size_t c = 0; c < cols.size(); ++c) j["columns"].push_back(table.column_label(c));
      }
      j["rows"] = nlohmann::json::array();
      for (int t = 1; t <= table.t_max(); ++t) {
        nlohmann::json chi = nlohmann::json::array();
        for (std::size_t c = 0; c < cols.size(); ++c) chi.push_back(detail::integer_json(table.at(t, c)));
        j["rows"].push_back({{"t", t}, {"chi", chi}});
      }
      return j.dump() + "\n";
    }
  }
  return {};
}

inline nlohmann::json classes_json(const std::vector<HairyGraphClass>& classes) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& cls : classes) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : cls.graph.edges) edges.push_back({a, b});
    arr.push_back({{"key", cls.key},
                   {"degree", cls.degree},
                   {"killed", cls.killed},
                   {"sign", cls.sign()},
                   {"genus", cls.genus},
                   {"internal_vertices", cls.graph.internal},
                   {"hair_colors", cls.graph.hair_colors},
                   {"edges", edges},
                   {"automorphisms", cls.automorphism_count}});
  }
  return arr;
}

}  // namespace slgf

#endif  // SLGF_RENDER_HPP

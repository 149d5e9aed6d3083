#include "partalg/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <tuple>

#include "partalg/errors.hpp"

namespace partalg {

  Json integer_to_json(Integer const& x) {
    if (x >= std::numeric_limits<std::int64_t>::min()
        && x <= std::numeric_limits<std::int64_t>::max()) {
      return static_cast<std::int64_t>(x);
    }
    return x.str();
  }

  Integer integer_from_json(Json const& j) {
    if (j.is_number_integer()) {
      return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
      try {
        return Integer(j.get<std::string>());
      } catch (std::exception const&) {
        throw ParseError("not an integer: " + j.dump());
      }
    }
    throw ParseError("expected an integer, got " + j.dump());
  }

  Json diagram_to_json(Diagram const& d) {
    Json out = Json::array();
    for (RawBlock const& block : d.blocks()) {
      Json b = Json::array();
      for (Vertex v : block) {
        b.push_back(v.primed ? -v.index : v.index);
      }
      out.push_back(std::move(b));
    }
    return out;
  }

  Diagram diagram_from_json(Json const& j, int rank) {
    if (!j.is_array()) {
      throw ParseError("diagram must be an array of blocks");
    }
    std::vector<RawBlock> blocks;
    int                   largest = 0;
    for (Json const& b : j) {
      if (!b.is_array() || b.empty()) {
        throw ParseError("block must be a nonempty array of labels");
      }
      RawBlock block;
      for (Json const& label : b) {
        if (!label.is_number_integer()) {
          throw ParseError("label must be an integer, got " + label.dump());
        }
        long long const x = label.get<long long>();
        if (x == 0 || x > kMaxRank || x < -kMaxRank) {
          throw MalformedPartition("label " + std::to_string(x)
                                   + " is out of range");
        }
        int const a = static_cast<int>(x < 0 ? -x : x);
        largest     = std::max(largest, a);
        block.push_back({a, x < 0});
      }
      blocks.push_back(std::move(block));
    }
    return Diagram::from_blocks(blocks, rank < 0 ? largest : rank);
  }

  Diagram parse_diagram_any(std::string_view text, int rank) {
    auto const first = std::find_if_not(text.begin(), text.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c));
    });
    if (first != text.end() && *first == '[') {
      Json j;
      try {
        j = Json::parse(text);
      } catch (Json::parse_error const& e) {
        throw ParseError(std::string("invalid diagram JSON: ") + e.what());
      }
      return diagram_from_json(j, rank);
    }
    return parse_diagram(text, rank);
  }

  Json element_to_json(AlgebraElement const& a) {
    std::vector<std::pair<std::string, AlgebraElement::Term const*>> order;
    for (auto const& term : a.terms()) {
      order.emplace_back(term.first.to_string(), &term);
    }
    std::sort(order.begin(), order.end(),
              [](auto const& x, auto const& y) { return x.first < y.first; });
    Json terms = Json::array();
    for (auto const& [text, term] : order) {
      Json coeff = Json::array();
      for (Integer const& c : term->second.coefficients()) {
        coeff.push_back(integer_to_json(c));
      }
      Json t;
      t["diagram"] = diagram_to_json(term->first);
      t["coeff"]   = std::move(coeff);
      terms.push_back(std::move(t));
    }
    Json out;
    out["rank"]  = a.rank();
    out["terms"] = std::move(terms);
    return out;
  }

  AlgebraElement element_from_json(Json const& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("terms")
        || !j["rank"].is_number_integer() || !j["terms"].is_array()) {
      throw ParseError("element must have integer \"rank\" and array \"terms\"");
    }
    int const rank = j["rank"].get<int>();
    if (rank < 0 || rank > kMaxRank) {
      throw ParseError("element rank " + std::to_string(rank)
                       + " is out of range");
    }
    std::vector<AlgebraElement::Term> terms;
    for (Json const& t : j["terms"]) {
      if (!t.is_object() || !t.contains("diagram") || !t.contains("coeff")
          || !t["coeff"].is_array()) {
        throw ParseError("term must have \"diagram\" and array \"coeff\"");
      }
      std::vector<Integer> coeffs;
      for (Json const& c : t["coeff"]) {
        coeffs.push_back(integer_from_json(c));
      }
      terms.emplace_back(diagram_from_json(t["diagram"], rank),
                         IntPolynomial::from_coefficients(std::move(coeffs)));
    }
    return AlgebraElement::from_terms(rank, std::move(terms));
  }

  Json report_to_json(VerificationReport const& r) {
    Json out;
    out["suite"] = r.suite;
    out["rank"]  = r.rank;
    if (r.n) {
      out["n"] = *r.n;
    }
    Json checks = Json::array();
    for (CheckResult const& c : r.checks) {
      Json entry;
      entry["id"]      = c.id;
      entry["indices"] = c.indices;
      entry["pass"]    = c.pass;
      checks.push_back(std::move(entry));
    }
    out["checks"]       = std::move(checks);
    out["vacuous"]      = r.vacuous();
    out["out_of_range"] = r.out_of_range;
    out["notes"]        = r.notes;
    return out;
  }

  Json operator_to_json(SparseOperator const& op) {
    std::vector<std::tuple<TensorIndex, TensorIndex, Integer>> entries;
    for (auto const& [col, image] : op.columns()) {
      for (auto const& [row, val] : image) {
        entries.emplace_back(row, col, val);
      }
    }
    std::sort(entries.begin(), entries.end(),
              [](auto const& x, auto const& y) {
                return std::tie(std::get<0>(x), std::get<1>(x))
                       < std::tie(std::get<0>(y), std::get<1>(y));
              });
    Json list = Json::array();
    for (auto const& [row, col, val] : entries) {
      list.push_back(Json::array({row, col, integer_to_json(val)}));
    }
    Json out;
    out["n"]       = op.config().n;
    out["r"]       = op.config().r;
    out["entries"] = std::move(list);
    return out;
  }

}  // namespace partalg

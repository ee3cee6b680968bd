#pragma once

#include <json.hpp>

#include <string>

#include "contactify/clifford.hpp"
#include "contactify/forms.hpp"
#include "contactify/magical.hpp"
#include "contactify/representation.hpp"
#include "contactify/tanaka.hpp"

namespace contactify {

using nlohmann::json;

/// Matrices serialize as arrays of rows; every scalar is the exact string
/// "p/q" (or "p" when the denominator is 1). All indices in serialized
/// structures are 1-based.
inline json to_json(const QMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); i++) {
    json row = json::array();
    for (int j = 0; j < m.cols(); j++) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline QMatrix matrix_from_json(const json& j) {
  int rows = int(j.size());
  int cols = rows ? int(j[0].size()) : 0;
  QMatrix m(rows, cols);
  for (int i = 0; i < rows; i++)
    for (int c = 0; c < cols; c++) m(i, c) = Rational::parse(j[i][c].get<std::string>());
  return m;
}

inline json to_json(const Representation& rep) {
  json out;
  out["labels"] = rep.labels;
  out["size"] = rep.space_dim();
  json mats = json::array();
  for (const auto& m : rep.matrices) mats.push_back(to_json(m));
  out["matrices"] = std::move(mats);
  return out;
}

inline json to_json(const StructureConstants& sc) {
  json triples = json::array();
  for (int i = 0; i < sc.dim; i++)
    for (int j = i + 1; j < sc.dim; j++)
      for (auto& [k, v] : sc.upper(i, j))
        triples.push_back(json::array({i + 1, j + 1, k + 1, v.str()}));
  return triples;
}

inline json to_json(const OmegaMap& w) {
  json out = json::array();
  for (int i = 0; i < w.r; i++)
    for (int mu = 0; mu < w.s; mu++)
      for (int nu = mu + 1; nu < w.s; nu++) {
        const Rational& c = w.component[i](mu, nu);
        if (!c.is_zero()) out.push_back(json::array({i + 1, mu + 1, nu + 1, c.str()}));
      }
  return out;
}

inline json to_json(const CliffordGenerators& g) {
  json out;
  out["label"] = g.label;
  out["metric"] = g.metric;
  json words = json::array();
  json mats = json::array();
  for (const auto& m : g.generators) {
    mats.push_back(to_json(m));
    auto w = to_word(m);
    if (w)
      words.push_back((w->first < 0 ? std::string("-") : std::string()) + w->second);
    else
      words.push_back(nullptr);
  }
  out["generators"] = std::move(mats);
  out["words"] = std::move(words);
  return out;
}

inline json to_json(const GradedLieAlgebra& g) {
  json out;
  out["grades"] = g.grades;
  out["structure_constants"] = to_json(g.sc);
  out["provenance"] = g.provenance;
  return out;
}

/// LaTeX rendering of a form in the same canonical term order.
inline std::string to_latex(const PolyForm& f) {
  if (f.is_zero()) return "0";
  auto coord_tex = [&](int idx) {
    std::string n = f.coords().name(idx);  // "u^3" or "x^12"
    auto caret = n.find('^');
    return n.substr(0, caret) + "^{" + n.substr(caret + 1) + "}";
  };
  std::string out;
  bool first = true;
  for (auto& [k, v] : f.terms()) {
    Rational c = v;
    if (first) {
      if (c.sign() < 0) {
        out += "-";
        c = -c;
      }
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    bool has_factors = !k.diffs.empty();
    for (int i = 0; i < f.coords().dim(); i++) has_factors = has_factors || k.mono[i] > 0;
    if (!(c == Rational(1)) || !has_factors) {
      if (c.is_integer())
        out += c.str();
      else
        out += "\\tfrac{" + c.num().get_str() + "}{" + c.den().get_str() + "}";
    }
    for (int i = 0; i < f.coords().dim(); i++) {
      if (k.mono[i] == 0) continue;
      out += coord_tex(i);
      if (k.mono[i] > 1) out += "^{" + std::to_string(int(k.mono[i])) + "}";
    }
    for (size_t i = 0; i < k.diffs.size(); i++) {
      if (i) out += "\\wedge ";
      out += "{\\rm d}" + coord_tex(k.diffs[i]);
    }
  }
  return out;
}

}  // namespace contactify

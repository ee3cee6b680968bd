#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "contactify/magical.hpp"
#include "contactify/matrix.hpp"

namespace contactify {

/// Coordinates (u^1..u^r, x^1..x^s) with weights 2 and 1. Index order: u's
/// first, then x's; this is also the monomial block order used for printing.
struct CoordSystem {
  int r = 0, s = 0;

  int dim() const { return r + s; }
  int weight(int idx) const { return idx < r ? 2 : 1; }
  std::string name(int idx) const {
    return idx < r ? "u^" + std::to_string(idx + 1) : "x^" + std::to_string(idx - r + 1);
  }
  int u_index(int i) const { return i; }          // 0-based i < r
  int x_index(int mu) const { return r + mu; }    // 0-based mu < s

  friend bool operator==(const CoordSystem& a, const CoordSystem& b) {
    return a.r == b.r && a.s == b.s;
  }
};

/// Exterior differential form with polynomial coefficients. Terms are keyed
/// by (ascending differential index tuple, exponent vector); the map order is
/// the canonical print order.
class PolyForm {
public:
  using Monomial = std::vector<uint8_t>;
  struct Key {
    std::vector<uint8_t> diffs;  // strictly increasing coordinate indices
    Monomial mono;
    friend bool operator<(const Key& a, const Key& b) {
      if (a.diffs != b.diffs) return a.diffs < b.diffs;
      return a.mono < b.mono;
    }
    friend bool operator==(const Key& a, const Key& b) {
      return a.diffs == b.diffs && a.mono == b.mono;
    }
  };

  PolyForm() = default;
  PolyForm(CoordSystem coords, int degree) : coords_(coords), degree_(degree) {}

  const CoordSystem& coords() const { return coords_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const { return terms_; }

  /// Adds coeff * mono * d(coordinates in diffs); diffs need not be sorted
  /// (the sign of the sorting permutation is applied), repeated indices kill
  /// the term.
  void add_term(std::vector<uint8_t> diffs, Monomial mono, Rational coeff) {
    if (int(diffs.size()) != degree_) throw std::invalid_argument("PolyForm: degree mismatch");
    if (coeff.is_zero()) return;
    int sign = 1;
    for (size_t i = 0; i < diffs.size(); i++)
      for (size_t j = i + 1; j < diffs.size(); j++) {
        if (diffs[i] == diffs[j]) return;  // dx ^ dx = 0
        if (diffs[i] > diffs[j]) {
          std::swap(diffs[i], diffs[j]);
          sign = -sign;
        }
      }
    mono.resize(coords_.dim(), 0);
    Key k{std::move(diffs), std::move(mono)};
    Rational& slot = terms_[k];
    slot += Rational(sign) * coeff;
    if (slot.is_zero()) terms_.erase(k);
  }

  PolyForm operator-() const {
    PolyForm f = *this;
    for (auto& [k, v] : f.terms_) v = -v;
    return f;
  }
  friend PolyForm operator+(const PolyForm& a, const PolyForm& b) {
    a.check_compatible(b);
    PolyForm f = a;
    for (auto& [k, v] : b.terms_) {
      Rational& slot = f.terms_[k];
      slot += v;
      if (slot.is_zero()) f.terms_.erase(k);
    }
    return f;
  }
  friend PolyForm operator-(const PolyForm& a, const PolyForm& b) { return a + (-b); }
  friend PolyForm operator*(const Rational& c, const PolyForm& a) {
    PolyForm f = a;
    if (c.is_zero()) {
      f.terms_.clear();
      return f;
    }
    for (auto& [k, v] : f.terms_) v *= c;
    return f;
  }
  friend bool operator==(const PolyForm& a, const PolyForm& b) {
    return a.coords_ == b.coords_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  friend PolyForm wedge(const PolyForm& a, const PolyForm& b) {
    if (!(a.coords_ == b.coords_)) throw std::invalid_argument("wedge: coordinate mismatch");
    PolyForm f(a.coords_, a.degree_ + b.degree_);
    for (auto& [ka, va] : a.terms_)
      for (auto& [kb, vb] : b.terms_) {
        std::vector<uint8_t> diffs = ka.diffs;
        diffs.insert(diffs.end(), kb.diffs.begin(), kb.diffs.end());
        Monomial mono(a.coords_.dim(), 0);
        for (int i = 0; i < a.coords_.dim(); i++)
          mono[i] = uint8_t(ka.mono[i] + kb.mono[i]);
        f.add_term(std::move(diffs), std::move(mono), va * vb);
      }
    return f;
  }

  /// Exterior derivative.
  friend PolyForm d(const PolyForm& f) {
    PolyForm out(f.coords_, f.degree_ + 1);
    for (auto& [k, v] : f.terms_)
      for (int var = 0; var < f.coords_.dim(); var++) {
        if (k.mono[var] == 0) continue;
        Monomial mono = k.mono;
        mono[var]--;
        std::vector<uint8_t> diffs;
        diffs.push_back(uint8_t(var));
        diffs.insert(diffs.end(), k.diffs.begin(), k.diffs.end());
        out.add_term(std::move(diffs), std::move(mono), Rational(long(k.mono[var])) * v);
      }
    return out;
  }

  /// Canonical text: terms in key order, e.g. "du^1 + x^1 dx^2 - x^7 dx^8".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : terms_) {
      Rational c = v;
      if (first) {
        if (c.sign() < 0) {
          os << "-";
          c = -c;
        }
        first = false;
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
        if (c.sign() < 0) c = -c;
      }
      bool has_factors = false;
      for (int i = 0; i < coords_.dim(); i++) has_factors = has_factors || k.mono[i] > 0;
      has_factors = has_factors || !k.diffs.empty();
      std::string pieces;
      bool need_space = false;
      if (!(c == Rational(1)) || !has_factors) {
        pieces += c.str();
        need_space = true;
      }
      for (int i = 0; i < coords_.dim(); i++) {
        if (k.mono[i] == 0) continue;
        if (need_space) pieces += " ";
        if (k.mono[i] == 1)
          pieces += coords_.name(i);
        else
          pieces += "(" + coords_.name(i) + ")^" + std::to_string(int(k.mono[i]));
        need_space = true;
      }
      if (!k.diffs.empty()) {
        if (need_space) pieces += " ";
        for (size_t i = 0; i < k.diffs.size(); i++) {
          if (i) pieces += "∧";  // wedge
          pieces += "d" + coords_.name(k.diffs[i]);
        }
      }
      os << pieces;
    }
    return os.str();
  }

  /// Parses the canonical syntax (also accepts unsorted differentials and
  /// repeated terms, so transcriptions can keep their source order).
  static PolyForm parse(const std::string& text, const CoordSystem& coords);

private:
  void check_compatible(const PolyForm& o) const {
    if (!(coords_ == o.coords_) || degree_ != o.degree_)
      throw std::invalid_argument("PolyForm: incompatible operands");
  }

  CoordSystem coords_;
  int degree_ = 0;
  std::map<Key, Rational> terms_;
};

namespace formdetail {

struct Token {
  enum Kind { Sign, Number, Coord, Diff, End } kind;
  int sign = 1;
  Rational value;
  int coord = -1;  // coordinate index
  int power = 1;
};

class Lexer {
public:
  Lexer(const std::string& text, const CoordSystem& coords) : s_(text), coords_(coords) {}

  Token next() {
    skip_ws();
    if (pos_ >= s_.size()) return {Token::End};
    char c = s_[pos_];
    if (c == '+' || c == '-') {
      pos_++;
      return {Token::Sign, c == '-' ? -1 : 1};
    }
    if (s_.compare(pos_, 3, "∧") == 0) {
      pos_ += 3;
      return next();  // wedge separator acts like whitespace between d-factors
    }
    if (std::isdigit(c)) {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(s_[pos_]) || s_[pos_] == '/')) pos_++;
      Token t{Token::Number};
      t.value = Rational::parse(s_.substr(start, pos_ - start));
      return t;
    }
    if (c == '(') {  // (x^k)^e
      size_t close = s_.find(')', pos_);
      if (close == std::string::npos) throw std::invalid_argument("PolyForm::parse: bad '('");
      std::string inner = s_.substr(pos_ + 1, close - pos_ - 1);
      int coord = coord_index(inner);
      pos_ = close + 1;
      int power = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        pos_++;
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(s_[pos_])) pos_++;
        power = std::stoi(s_.substr(start, pos_ - start));
      }
      Token t{Token::Coord};
      t.coord = coord;
      t.power = power;
      return t;
    }
    if (c == 'd' || c == 'u' || c == 'x') {
      size_t start = pos_;
      bool is_diff = c == 'd';
      if (is_diff) pos_++;
      if (pos_ >= s_.size() || (s_[pos_] != 'u' && s_[pos_] != 'x'))
        throw std::invalid_argument("PolyForm::parse: bad coordinate at '" + s_.substr(start) + "'");
      char kind = s_[pos_++];
      if (pos_ >= s_.size() || s_[pos_] != '^')
        throw std::invalid_argument("PolyForm::parse: expected '^' in coordinate");
      pos_++;
      size_t nstart = pos_;
      while (pos_ < s_.size() && std::isdigit(s_[pos_])) pos_++;
      int num = std::stoi(s_.substr(nstart, pos_ - nstart));
      int idx = kind == 'u' ? num - 1 : coords_.r + num - 1;
      if (idx < 0 || idx >= coords_.dim())
        throw std::invalid_argument("PolyForm::parse: coordinate out of range");
      Token t{is_diff ? Token::Diff : Token::Coord};
      t.coord = idx;
      return t;
    }
    throw std::invalid_argument("PolyForm::parse: unexpected character '" + std::string(1, c) + "'");
  }

private:
  int coord_index(const std::string& name) {
    for (int i = 0; i < coords_.dim(); i++)
      if (coords_.name(i) == name) return i;
    throw std::invalid_argument("PolyForm::parse: unknown coordinate " + name);
  }
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) pos_++;
  }
  const std::string& s_;
  CoordSystem coords_;
  size_t pos_ = 0;
};

}  // namespace formdetail

inline PolyForm PolyForm::parse(const std::string& text, const CoordSystem& coords) {
  if (text == "0") return PolyForm(coords, 0);
  formdetail::Lexer lex(text, coords);
  struct Term {
    int sign = 1;
    Rational coeff = Rational(1);
    Monomial mono;
    std::vector<uint8_t> diffs;
    bool touched = false;
  };
  std::vector<Term> parsed;
  Term cur;
  cur.mono.assign(coords.dim(), 0);
  auto flush = [&]() {
    if (cur.touched) parsed.push_back(cur);
    cur = Term{};
    cur.mono.assign(coords.dim(), 0);
  };
  for (;;) {
    auto t = lex.next();
    if (t.kind == formdetail::Token::End) break;
    switch (t.kind) {
      case formdetail::Token::Sign:
        flush();
        cur.sign = t.sign;
        break;
      case formdetail::Token::Number:
        cur.coeff *= t.value;
        cur.touched = true;
        break;
      case formdetail::Token::Coord:
        for (int e = 0; e < t.power; e++) cur.mono[t.coord]++;
        cur.touched = true;
        break;
      case formdetail::Token::Diff:
        cur.diffs.push_back(uint8_t(t.coord));
        cur.touched = true;
        break;
      default:
        break;
    }
  }
  flush();
  if (parsed.empty()) throw std::invalid_argument("PolyForm::parse: empty expression");
  int degree = int(parsed[0].diffs.size());
  PolyForm f(coords, degree);
  for (auto& term : parsed) {
    if (int(term.diffs.size()) != degree)
      throw std::invalid_argument("PolyForm::parse: mixed degrees");
    f.add_term(term.diffs, term.mono, Rational(term.sign) * term.coeff);
  }
  return f;
}

/// The r contact 1-forms lambda^i = du^i + sign * sum_{mu<nu} w^i_{mu nu}
/// x^mu dx^nu on R^(r+s), with the matching 2-forms
/// omega^i = sign * sum_{mu<nu} w^i_{mu nu} dx^mu ^ dx^nu = d lambda^i.
struct ContactSystem {
  int r = 0, s = 0;
  int sign_convention = 1;
  OmegaMap omega;
  CoordSystem coords;
  std::vector<PolyForm> lambdas;

  PolyForm omega_form(int i) const {
    PolyForm f(coords, 2);
    for (int mu = 0; mu < s; mu++)
      for (int nu = mu + 1; nu < s; nu++) {
        const Rational& c = omega.component[i](mu, nu);
        if (!c.is_zero())
          f.add_term({uint8_t(coords.x_index(mu)), uint8_t(coords.x_index(nu))}, {},
                     Rational(sign_convention) * c);
      }
    return f;
  }
};

inline ContactSystem contactify(const OmegaMap& omega, int sign_convention = 1) {
  ContactSystem cs;
  cs.r = omega.r;
  cs.s = omega.s;
  cs.sign_convention = sign_convention;
  cs.omega = omega;
  cs.coords = CoordSystem{omega.r, omega.s};
  for (int i = 0; i < omega.r; i++) {
    PolyForm lambda(cs.coords, 1);
    lambda.add_term({uint8_t(cs.coords.u_index(i))}, {}, Rational(1));
    for (int mu = 0; mu < omega.s; mu++)
      for (int nu = mu + 1; nu < omega.s; nu++) {
        const Rational& c = omega.component[i](mu, nu);
        if (c.is_zero()) continue;
        PolyForm::Monomial mono(cs.coords.dim(), 0);
        mono[cs.coords.x_index(mu)] = 1;
        lambda.add_term({uint8_t(cs.coords.x_index(nu))}, std::move(mono),
                        Rational(sign_convention) * c);
      }
    cs.lambdas.push_back(std::move(lambda));
  }
  return cs;
}

/// Checks of the contactification conditions:
///  - det(X_i -| lambda^j) with X_i the vertical frame (a constant here);
///  - d lambda^i = omega^i exactly (coefficients a = Id, mu = 0);
///  - surjectivity of omega;
///  - for r = 1, the classical contact condition (d lambda)^n ^ lambda != 0.
struct ContactReport {
  bool vertical_nondegenerate = false;
  bool dlambda_matches = false;
  bool surjective = false;
  bool contact_condition = true;  // only meaningful when r == 1
  bool pass() const {
    return vertical_nondegenerate && dlambda_matches && surjective && contact_condition;
  }
};

inline ContactReport contact_checks(const ContactSystem& cs) {
  ContactReport rep;
  // vertical frame pairing: coefficient of du^i in lambda^j, as a constant
  QMatrix pairing(cs.r, cs.r);
  bool constant = true;
  for (int j = 0; j < cs.r; j++)
    for (auto& [k, v] : cs.lambdas[j].terms()) {
      if (k.diffs.size() != 1) continue;
      int idx = k.diffs[0];
      if (idx < cs.r) {
        bool mono_trivial = true;
        for (auto e : k.mono) mono_trivial = mono_trivial && e == 0;
        if (!mono_trivial) constant = false;
        else pairing(idx, j) = v;
      }
    }
  rep.vertical_nondegenerate = constant && rank(pairing) == cs.r;
  rep.dlambda_matches = true;
  for (int i = 0; i < cs.r; i++)
    rep.dlambda_matches = rep.dlambda_matches && d(cs.lambdas[i]) == cs.omega_form(i);
  rep.surjective = cs.omega.full();
  if (cs.r == 1 && cs.s % 2 == 0) {
    PolyForm top = cs.lambdas[0];
    PolyForm dl = d(cs.lambdas[0]);
    for (int k = 0; k < cs.s / 2; k++) top = wedge(dl, top);
    rep.contact_condition = !top.is_zero();
  }
  return rep;
}

/// The invariant 4-form Phi = h_ij omega^i ^ omega^j (constant coefficients).
inline PolyForm four_form(const OmegaMap& omega, const QMatrix& h) {
  if (!h.is_symmetric() || h.rows() != omega.r)
    throw std::invalid_argument("four_form: h must be symmetric r x r");
  CoordSystem coords{omega.r, omega.s};
  ContactSystem cs = contactify(omega, 1);
  PolyForm phi(coords, 4);
  std::vector<PolyForm> wforms;
  for (int i = 0; i < omega.r; i++) wforms.push_back(cs.omega_form(i));
  for (int i = 0; i < omega.r; i++)
    for (int j = 0; j < omega.r; j++)
      if (!h(i, j).is_zero()) phi = phi + h(i, j) * wedge(wforms[i], wforms[j]);
  return phi;
}

enum class StabilizerMode { strict, conformal };

/// Solves A^a_mu Phi_{a nu rho sigma} + (three more cyclic insertions)
/// = S Phi_{mu nu rho sigma} for A in gl(s, R); strict mode fixes S = 0,
/// conformal mode solves jointly for (A, S). Returns a basis of the solution
/// space and the S-weight of each basis element.
inline std::pair<std::vector<QMatrix>, std::vector<Rational>> stabilizer(
    const PolyForm& phi, StabilizerMode mode) {
  if (phi.degree() != 4) throw std::invalid_argument("stabilizer: need a 4-form");
  int r = phi.coords().r, s = phi.coords().s;
  // tensor access with antisymmetric continuation
  std::map<std::vector<uint8_t>, Rational> comp;
  for (auto& [k, v] : phi.terms()) {
    for (auto e : k.mono)
      if (e) throw std::invalid_argument("stabilizer: 4-form must be constant-coefficient");
    std::vector<uint8_t> key = k.diffs;
    for (auto& idx : key) {
      if (idx < r) throw std::invalid_argument("stabilizer: 4-form must live on the base");
      idx = uint8_t(idx - r);
    }
    comp[key] = v;
  }
  auto tensor = [&](int a, int b, int c, int dd) -> Rational {
    std::array<int, 4> v{a, b, c, dd};
    int sign = 1;
    for (int i = 0; i < 4; i++)
      for (int j = i + 1; j < 4; j++) {
        if (v[i] == v[j]) return Rational(0);
        if (v[i] > v[j]) {
          std::swap(v[i], v[j]);
          sign = -sign;
        }
      }
    auto it = comp.find({uint8_t(v[0]), uint8_t(v[1]), uint8_t(v[2]), uint8_t(v[3])});
    if (it == comp.end()) return Rational(0);
    return Rational(sign) * it->second;
  };
  bool conformal = mode == StabilizerMode::conformal;
  int unknowns = s * s + (conformal ? 1 : 0);
  SparseSystem sys(unknowns);
  for (int mu = 0; mu < s; mu++)
    for (int nu = mu + 1; nu < s; nu++)
      for (int rho = nu + 1; rho < s; rho++)
        for (int sg = rho + 1; sg < s; sg++) {
          SparseSystem::Row row;
          for (int a = 0; a < s; a++) {
            Rational c1 = tensor(a, nu, rho, sg);
            if (!c1.is_zero()) row.emplace_back(a * s + mu, c1);
            Rational c2 = tensor(mu, a, rho, sg);
            if (!c2.is_zero()) row.emplace_back(a * s + nu, c2);
            Rational c3 = tensor(mu, nu, a, sg);
            if (!c3.is_zero()) row.emplace_back(a * s + rho, c3);
            Rational c4 = tensor(mu, nu, rho, a);
            if (!c4.is_zero()) row.emplace_back(a * s + sg, c4);
          }
          if (conformal) {
            Rational t = tensor(mu, nu, rho, sg);
            if (!t.is_zero()) row.emplace_back(s * s, -t);
          }
          sys.add_row(std::move(row));
        }
  auto kernel = sys.kernel();
  std::vector<QMatrix> mats;
  std::vector<Rational> weights;
  for (const auto& v : kernel) {
    QMatrix m(s, s);
    for (int i = 0; i < s; i++)
      for (int j = 0; j < s; j++) m(i, j) = v(i * s + j, 0);
    mats.push_back(std::move(m));
    weights.push_back(conformal ? v(s * s, 0) : Rational(0));
  }
  return {std::move(mats), std::move(weights)};
}

}  // namespace contactify

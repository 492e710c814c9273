#include "hurwitz/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hurwitz {

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_[Monomial{}] = c;
}

Polynomial::Polynomial(long c) {
  if (c != 0) terms_[Monomial{}] = Rational(c);
}

Polynomial Polynomial::variable(const std::string& name, int exp) {
  Polynomial p;
  if (exp == 0) return Polynomial(1);
  p.terms_[Monomial{{name, exp}}] = Rational(1);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  Monomial clean;
  for (const auto& [v, e] : m)
    if (e != 0) clean[v] = e;
  auto it = terms_.find(clean);
  if (it == terms_.end()) {
    terms_[clean] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      for (const auto& [v, e] : mb) m[v] += e;
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
  return r;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  *this = *this * c;
  return *this;
}

Polynomial Polynomial::pow(int e) const {
  Polynomial acc(1);
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

Polynomial Polynomial::substitute(
    const std::map<std::string, Polynomial>& repl) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    Polynomial term(c);
    for (const auto& [v, e] : m) {
      auto it = repl.find(v);
      if (it == repl.end()) {
        term = term * variable(v, e);
      } else {
        term = term * it->second.pow(e);
      }
    }
    r += term;
  }
  return r;
}

Rational Polynomial::evaluate(
    const std::map<std::string, Rational>& vals) const {
  Rational r(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m) {
      auto it = vals.find(v);
      if (it == vals.end())
        throw CalcError("evaluate: no value for variable " + v);
      t *= rat_pow(it->second, e);
    }
    r += t;
  }
  return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw CalcError("divide_exact: zero divisor");
  // Pick the divisor's leading term under the canonical order and perform
  // multivariate long division; the remainder must come out zero.
  auto lead = divisor.terms_.begin();
  for (auto it = divisor.terms_.begin(); it != divisor.terms_.end(); ++it)
    if (term_order(it->first, lead->first)) lead = it;
  const Monomial& lm = lead->first;
  const Rational& lc = lead->second;

  Polynomial rem = *this;
  Polynomial quot;
  while (!rem.is_zero()) {
    // Find a term of rem divisible by the leading monomial.
    bool progressed = false;
    for (const auto& [m, c] : rem.terms_) {
      Monomial q = m;
      bool divisible = true;
      for (const auto& [v, e] : lm) {
        auto it = q.find(v);
        if (it == q.end() || it->second < e) {
          divisible = false;
          break;
        }
        it->second -= e;
        if (it->second == 0) q.erase(it);
      }
      if (!divisible) continue;
      Polynomial piece;
      piece.add_term(q, c / lc);
      quot += piece;
      rem -= piece * divisor;
      progressed = true;
      break;
    }
    if (!progressed)
      throw CalcError("divide_exact: division leaves a remainder");
  }
  return quot;
}

Polynomial Polynomial::filter(
    const std::function<bool(const Monomial&)>& pred) const {
  Polynomial r;
  for (const auto& [m, c] : terms_)
    if (pred(m)) r.terms_[m] = c;
  return r;
}

int Polynomial::monomial_weight(const Monomial& m, const WeightTable& w) {
  int d = 0;
  for (const auto& [v, e] : m) {
    auto it = w.find(v);
    if (it == w.end())
      throw CalcError("monomial_weight: no weight for variable " + v);
    d += it->second * e;
  }
  return d;
}

int Polynomial::weighted_degree(const WeightTable& w) const {
  if (terms_.empty())
    throw ZeroPolynomial("weighted_degree of the zero polynomial");
  int d = monomial_weight(terms_.begin()->first, w);
  for (const auto& [m, c] : terms_) {
    int dm = monomial_weight(m, w);
    if (dm != d)
      throw NotHomogeneous("weighted_degree: mixed weights " +
                           std::to_string(d) + " and " + std::to_string(dm));
  }
  return d;
}

Polynomial Polynomial::truncate_weight(const WeightTable& w, int bound) const {
  return filter(
      [&](const Monomial& m) { return monomial_weight(m, w) <= bound; });
}

int Polynomial::degree_in(const std::string& var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(var);
    if (it != m.end()) d = std::max(d, it->second);
  }
  return d;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (const auto& [v, e] : m) t += e;
    d = std::max(d, t);
  }
  return d;
}

std::vector<std::string> Polynomial::variables() const {
  std::set<std::string> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) vs.insert(v);
  return {vs.begin(), vs.end()};
}

bool Polynomial::term_order(const Monomial& a, const Monomial& b) {
  int da = 0, db = 0;
  for (const auto& [v, e] : a) da += e;
  for (const auto& [v, e] : b) db += e;
  if (da != db) return da > db;
  // Merge variable names in bytewise order; first differing exponent decides
  // (smaller exponent first).
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ia == a.end()) return true;  // a has 0 at this var, b positive
    if (ib == b.end()) return false;
    if (ia->first < ib->first) return false;  // a positive where b has 0
    if (ib->first < ia->first) return true;
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return false;
}

namespace {

std::string render_monomial(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : m) {
    if (!first) os << "*";
    first = false;
    os << v;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::vector<std::pair<Monomial, Rational>> ordered_terms(
    const std::map<Monomial, Rational>& terms) {
  std::vector<std::pair<Monomial, Rational>> v(terms.begin(), terms.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return Polynomial::term_order(a.first, b.first);
  });
  return v;
}

}  // namespace

std::string Polynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ordered_terms(terms_)) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string mono = render_monomial(m);
    if (mono.empty()) {
      os << rat_to_string(a);
    } else if (a == 1) {
      os << mono;
    } else {
      os << rat_to_string(a) << "*" << mono;
    }
  }
  return os.str();
}

nlohmann::json Polynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : ordered_terms(terms_)) {
    nlohmann::json mono = nlohmann::json::object();
    for (const auto& [v, e] : m) mono[v] = e;
    arr.push_back({{"mono", mono}, {"coef", rat_to_string(c)}});
  }
  return nlohmann::json{{"terms", arr}};
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
  Polynomial p;
  for (const auto& t : j.at("terms")) {
    Monomial m;
    for (auto it = t.at("mono").begin(); it != t.at("mono").end(); ++it)
      m[it.key()] = it.value().get<int>();
    p.add_term(m, rat_from_string(t.at("coef").get<std::string>()));
  }
  return p;
}

Polynomial geometric_series(const Polynomial& u, const WeightTable& w,
                            int bound) {
  Polynomial acc(1), pw(1);
  for (int j = 1; j <= bound; ++j) {
    pw = (pw * u).truncate_weight(w, bound);
    if (pw.is_zero()) break;
    acc += pw;
  }
  return acc;
}

Polynomial exp_series(const Polynomial& u, const WeightTable& w, int bound) {
  Polynomial acc(1), pw(1);
  Rational fact(1);
  for (int j = 1; j <= bound; ++j) {
    pw = (pw * u).truncate_weight(w, bound);
    if (pw.is_zero()) break;
    fact *= j;
    acc += pw * (Rational(1) / fact);
  }
  return acc;
}

Polynomial log1p_series(const Polynomial& u, const WeightTable& w, int bound) {
  Polynomial acc, pw(1);
  for (int j = 1; j <= bound; ++j) {
    pw = (pw * u).truncate_weight(w, bound);
    if (pw.is_zero()) break;
    Rational c = Rational((j % 2 == 1) ? 1 : -1) / Rational(j);
    acc += pw * c;
  }
  return acc;
}

// ----------------------------------------------------------------------
// Expression parser.

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }

  bool eof() {
    skip_ws();
    return i >= s.size();
  }

  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("parse error at position " + std::to_string(i) + ": " +
                     what);
  }

  static bool ident_start(unsigned char c) {
    return std::isalpha(c) || c >= 0x80 || c == '_';
  }
  static bool ident_char(unsigned char c) {
    return std::isalnum(c) || c >= 0x80 || c == '_' || c == '{' || c == '}' ||
           c == ',';
  }

  Polynomial parse_expr() {
    Polynomial acc;
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = (s[i] == '-');
      ++i;
    }
    acc = parse_term();
    if (neg) acc = -acc;
    while (peek() == '+' || peek() == '-') {
      bool minus = (s[i] == '-');
      ++i;
      Polynomial t = parse_term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++i;
        acc *= parse_factor();
      } else if (c == '(' || ident_start(static_cast<unsigned char>(c))) {
        acc *= parse_factor();  // implicit multiplication: 2Σ, (a)(b)
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_base();
    if (peek() == '^') {
      ++i;
      skip_ws();
      bool neg = false;
      if (i < s.size() && s[i] == '-') {
        neg = true;
        ++i;
      }
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        fail("expected exponent");
      int e = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        e = e * 10 + (s[i++] - '0');
      if (neg) fail("negative exponent not supported");
      return base.pow(e);
    }
    return base;
  }

  Polynomial parse_base() {
    char c = peek();
    if (c == '(') {
      ++i;
      Polynomial e = parse_expr();
      if (peek() != ')') fail("expected ')'");
      ++i;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        num += s[i++];
      skip_ws();
      if (i < s.size() && s[i] == '/') {
        // Rational literal p/q (q must follow immediately as digits).
        size_t save = i;
        ++i;
        skip_ws();
        std::string den;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          den += s[i++];
        if (den.empty()) {
          i = save;
        } else {
          num += "/" + den;
        }
      }
      return Polynomial(rat_from_string(num));
    }
    if (ident_start(static_cast<unsigned char>(c))) {
      std::string name;
      while (i < s.size() && ident_char(static_cast<unsigned char>(s[i])))
        name += s[i++];
      return Polynomial::variable(name);
    }
    fail("unexpected character");
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
  Parser p(text);
  Polynomial r = p.parse_expr();
  if (!p.eof()) p.fail("trailing input");
  return r;
}

}  // namespace hurwitz

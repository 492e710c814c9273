#include "hurwitz/strata.hpp"

#include <algorithm>
#include <map>

#include "hurwitz/assembly.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/ring.hpp"
#include "hurwitz/vars.hpp"

namespace hurwitz {

using vars::V;

namespace {

Polynomial k(long a, long b = 1) { return Polynomial(Rational(a, b)); }

struct B {
  Polynomial ps = V(vars::psi);
  Polynomial nn = V(vars::n);
  Polynomial x0 = V(vars::xi(0));
  Polynomial x1 = V(vars::xi(1));
  Polynomial x2 = V(vars::xi(2));
  Polynomial d00 = V(vars::delta(0, 0));
  Polynomial d10 = V(vars::delta(1, 0));
};

}  // namespace

const std::vector<std::pair<std::string, Polynomial>>& golden_general_table() {
  static const std::vector<std::pair<std::string, Polynomial>> table = [] {
    B b;
    auto& [ps, nn, x0, x1, x2, d00, d10] = b;
    std::vector<std::pair<std::string, Polynomial>> t;
    t.emplace_back("2^1", -ps * x0 + k(2) * x1 - d00);
    t.emplace_back("1^2",
                   k(1, 2) * ps * x0 * (x0 + k(2)) - k(3) * x1 + d00);
    t.emplace_back("3^1", k(2) * x0 * ps * ps - k(7) * x1 * ps -
                              k(5) * d00 * ps + k(6) * x2 + k(2) * d10);
    t.emplace_back("1^1,2^1",
                   -x0 * (x0 + k(6)) * ps * ps +
                       k(2) * (x0 + k(12)) * x1 * ps +
                       (k(18) - x0) * d00 * ps - k(24) * x2 - k(6) * d10);
    t.emplace_back("1^3",
                   k(1, 6) * x0 * (x0 * x0 + k(6) * x0 + k(24)) * ps * ps -
                       k(1, 3) * (k(9) * x0 + k(52)) * x1 * ps +
                       k(1, 3) * (k(3) * x0 - k(40)) * d00 * ps + k(20) * x2 +
                       k(4) * d10);
    t.emplace_back("2^1;2^1",
                   k(1, 2) * (x0 - k(6)) * x0 * ps * ps -
                       (k(2) * x0 - k(11)) * x1 * ps + k(1, 2) * d00 * d00 +
                       k(2) * x1 * x1 - k(10) * x2 + (x0 + k(7)) * d00 * ps -
                       k(2) * x1 * d00 - k(5, 2) * d10);
    t.emplace_back("2^1;1^2",
                   -k(1, 2) * x0 * (x0 * x0 - k(2) * x0 - k(12)) * ps * ps +
                       (x0 * x0 + x0 - k(27)) * x1 * ps - d00 * d00 -
                       k(6) * x1 * x1 + k(30) * x2 -
                       k(1, 2) * (x0 * x0 + k(42)) * d00 * ps +
                       k(5) * x1 * d00 + k(6) * d10);
    t.emplace_back(
        "1^2;1^2",
        k(1, 8) * (x0 - k(4)) * x0 * (x0 * x0 + k(4) * x0 + k(6)) * ps * ps -
            k(3, 4) * (k(2) * x0 * x0 - k(4) * x0 - k(21)) * x1 * ps +
            k(1, 2) * d00 * d00 + k(9, 2) * x1 * x1 - k(45, 2) * x2 +
            k(1, 4) * (k(2) * x0 * x0 - k(4) * x0 + k(57)) * d00 * ps -
            k(3) * x1 * d00 - k(7, 2) * d10);
    return t;
  }();
  return table;
}

const std::vector<std::pair<std::string, Polynomial>>& golden_g0_table() {
  static const std::vector<std::pair<std::string, Polynomial>> table = [] {
    B b;
    auto& [ps, nn, x0, x1, x2, d00, d10] = b;
    std::vector<std::pair<std::string, Polynomial>> t;
    t.emplace_back("2^1", k(6) * (nn - k(1)) * ps - k(3) * d00);
    t.emplace_back("1^2",
                   k(2) * (nn - k(6)) * (nn - k(1)) * ps + k(4) * d00);
    t.emplace_back("3^1", -k(24) * (nn - k(1)) * ps * ps + k(2) * d00 * ps +
                              k(6) * x2 + k(2) * d10);
    t.emplace_back("1^1,2^1",
                   k(12) * (nn - k(1)) * (nn + k(6)) * ps * ps -
                       k(6) * nn * d00 * ps - k(24) * x2 - k(6) * d10);
    t.emplace_back("1^3",
                   k(4, 3) * (nn - k(1)) * (nn * nn - k(17) * nn - k(30)) *
                           ps * ps +
                       k(4) * (k(2) * nn - k(1)) * d00 * ps + k(20) * x2 +
                       k(4) * d10);
    t.emplace_back("2^1;2^1",
                   k(2) * (nn - k(1)) * (k(9) * nn + k(10)) * ps * ps -
                       k(2) * (k(9) * nn - k(7)) * d00 * ps +
                       k(9, 2) * d00 * d00 - k(10) * x2 - k(5, 2) * d10);
    t.emplace_back("2^1;1^2",
                   k(12) * (nn - k(9)) * (nn - k(1)) * nn * ps * ps -
                       k(6) * (nn * nn - k(13) * nn + k(11)) * d00 * ps -
                       k(12) * d00 * d00 + k(30) * x2 + k(6) * d10);
    t.emplace_back("1^2;1^2",
                   (nn - k(1)) *
                           (k(2) * nn * nn * nn - k(30) * nn * nn +
                            k(145) * nn - k(60)) *
                           ps * ps +
                       k(1, 2) * (k(16) * nn * nn - k(144) * nn + k(125)) *
                           d00 * ps +
                       k(8) * d00 * d00 - k(45, 2) * x2 - k(7, 2) * d10);
    return t;
  }();
  return table;
}

StratumExpression assemble(const MultiPartition& label, ResidualCalculus& rc) {
  auto pushed = [&rc](const MultiPartition& m) {
    return p_push(reduce(rc.residual(m)));
  };
  StratumExpression se;
  se.label = label;
  se.general_g = assemble_class(label, pushed, V(vars::psi));
  se.genus0 = genus0_reduce(se.general_g);
  const std::string name = label.to_string();
  for (const auto& [gname, gvalue] : golden_general_table())
    if (gname == name && !(gvalue == se.general_g))
      throw ConventionMismatch("assemble: " + name +
                               " differs from the stored table");
  for (const auto& [gname, gvalue] : golden_g0_table())
    if (gname == name && !(gvalue == se.genus0))
      throw ConventionMismatch("assemble: genus-0 " + name +
                               " differs from the stored table");
  return se;
}

Polynomial sigma_g0(const MultiPartition& label, ResidualCalculus& rc) {
  return assemble(label, rc).genus0;
}

Rational PowerForm::value(long n) const {
  return pre.evaluate({{vars::n, Rational(n)}}) *
         rat_pow(Rational(n), n + offset);
}

const std::vector<std::pair<std::string, PowerForm>>& basic_degree_forms() {
  static const std::vector<std::pair<std::string, PowerForm>> table = [] {
    Polynomial nn = V(vars::n);
    std::vector<std::pair<std::string, PowerForm>> t;
    t.push_back({"1", {k(1), -3}});
    t.push_back({"δ_{0,0}", {k(1, 2) * (nn - k(1)) * (nn + k(6)), -4}});
    t.push_back(
        {"ξ_2",
         {k(1, 3) * (nn - k(1)) * (k(17) * nn * nn - k(28) * nn + k(12)),
          -5}});
    t.push_back(
        {"δ_{1,0}",
         {-k(1, 6) * (nn - k(1)) * (nn * nn + k(10) * nn - k(120)), -5}});
    t.push_back({"δ_{0,0}^2",
                 {k(1, 12) * (nn - k(1)) *
                      (k(3) * nn * nn * nn + k(31) * nn * nn + k(82) * nn -
                       k(120)),
                  -5}});
    return t;
  }();
  return table;
}

namespace {

const std::map<Monomial, PowerForm>& basic_degree_index() {
  static const std::map<Monomial, PowerForm> index = [] {
    std::map<Monomial, PowerForm> idx;
    for (const auto& [name, form] : basic_degree_forms()) {
      Monomial key;
      if (name == "δ_{0,0}")
        key[vars::delta(0, 0)] = 1;
      else if (name == "δ_{0,0}^2")
        key[vars::delta(0, 0)] = 2;
      else if (name == "ξ_2")
        key[vars::xi(2)] = 1;
      else if (name == "δ_{1,0}")
        key[vars::delta(1, 0)] = 1;
      idx[key] = form;
    }
    return idx;
  }();
  return index;
}

std::string render_basic(const Monomial& m) {
  Polynomial p;
  p.add_term(m, Rational(1));
  return p.to_text();
}

}  // namespace

Rational degree(const Polynomial& b, long n) {
  Rational total(0);
  for (const auto& [mono, coef] : b.terms()) {
    Rational c = coef;
    Monomial key;
    for (const auto& [v, e] : mono) {
      if (v == vars::psi) continue;  // absorbed by the 1/(1-psi) pairing
      if (v == vars::n)
        c *= rat_pow(Rational(n), e);
      else
        key[v] = e;
    }
    auto it = basic_degree_index().find(key);
    if (it == basic_degree_index().end())
      throw UnknownMonomialDegree("degree: no table entry for " +
                                  render_basic(key));
    total += c * it->second.value(n);
  }
  return total;
}

const std::vector<std::pair<std::string, PowerForm>>& deg_sigma_forms() {
  static const std::vector<std::pair<std::string, PowerForm>> table = [] {
    Polynomial nn = V(vars::n);
    auto lin = [&](long r) { return nn - k(r); };
    std::vector<std::pair<std::string, PowerForm>> t;
    t.push_back({"2^1", {k(9, 2) * lin(2) * lin(1), -4}});
    t.push_back({"1^2", {k(2) * lin(3) * lin(2) * lin(1), -4}});
    t.push_back({"3^1", {k(32, 3) * lin(3) * lin(2) * lin(1), -5}});
    t.push_back({"1^1,2^1", {k(9) * lin(4) * lin(3) * lin(2) * lin(1), -5}});
    t.push_back(
        {"1^3", {k(4, 3) * lin(5) * lin(4) * lin(3) * lin(2) * lin(1), -5}});
    t.push_back({"2^1;2^1",
                 {k(3, 8) * lin(2) * lin(1) *
                      (k(27) * nn * nn - k(137) * nn + k(180)),
                  -5}});
    t.push_back({"2^1;1^2",
                 {k(3) * lin(3) * lin(2) * lin(1) *
                      (k(3) * nn * nn - k(15) * nn + k(20)),
                  -5}});
    t.push_back({"1^2;1^2",
                 {lin(3) * lin(2) * lin(1) *
                      (k(2) * nn * nn * nn - k(16) * nn * nn + k(43) * nn -
                       k(40)),
                  -5}});
    return t;
  }();
  return table;
}

Rational mzn_psi_integral(const std::vector<int>& a) {
  long n = static_cast<long>(a.size());
  long sum = 0;
  for (int ai : a) {
    if (ai < 0) throw DimensionMismatch("mzn_psi_integral: negative exponent");
    sum += ai;
  }
  if (n < 3 || sum != n - 3)
    throw DimensionMismatch("mzn_psi_integral: exponents must sum to n-3");
  Rational r = factorial(n - 3);
  for (int ai : a) r /= factorial(ai);
  return r;
}

Rational hurwitz_number(const MultiPartition& label, long n,
                        ResidualCalculus& rc) {
  int m = m_count(label, static_cast<int>(n), 0);
  return Rational(aut_set_order(label)) * factorial(m) / factorial(n) *
         degree(sigma_g0(label, rc), n);
}

Rational HurwitzForm::value(long n) const {
  if (!valid(n)) throw CalcError("HurwitzForm: factorial of negative number");
  return pre.evaluate({{vars::n, Rational(n)}}) * factorial(2 * n + fa) /
         factorial(n + fb) * rat_pow(Rational(n), n + off);
}

const std::vector<std::pair<std::string, HurwitzForm>>& h_closed_forms() {
  static const std::vector<std::pair<std::string, HurwitzForm>> table = [] {
    Polynomial nn = V(vars::n);
    std::vector<std::pair<std::string, HurwitzForm>> t;
    t.push_back({"2^1", {k(9, 2), -4, -3, -5}});
    t.push_back({"1^2", {k(2), -4, -4, -5}});
    t.push_back({"3^1", {k(32, 3), -5, -4, -6}});
    t.push_back({"1^1,2^1", {k(9), -5, -5, -6}});
    t.push_back({"1^3", {k(4, 3), -5, -6, -6}});
    t.push_back({"2^1;2^1",
                 {k(3, 4) * (k(27) * nn * nn - k(137) * nn + k(180)), -6, -3,
                  -6}});
    t.push_back({"2^1;1^2",
                 {k(3) * (k(3) * nn * nn - k(15) * nn + k(20)), -6, -4, -6}});
    t.push_back({"1^2;1^2",
                 {k(2) * (k(2) * nn * nn * nn - k(16) * nn * nn + k(43) * nn -
                          k(40)),
                  -6, -4, -6}});
    return t;
  }();
  return table;
}

const HurwitzForm& h_closed_form(const MultiPartition& label) {
  const std::string name = label.to_string();
  for (const auto& [fname, form] : h_closed_forms())
    if (fname == name) return form;
  throw UnknownLabel("h_closed_form: " + name);
}

const PowerForm& i_infty_form() {
  static const PowerForm form = [] {
    Polynomial nn = V(vars::n);
    return PowerForm{k(1, 8) * (nn - k(1)) *
                         (nn * nn * nn + k(11) * nn * nn + k(34) * nn -
                          k(120)),
                     -5};
  }();
  return form;
}

Rational i_infty(long n) { return i_infty_form().value(n); }

int correction(const MultiPartition& label) {
  const std::string name = label.to_string();
  for (const auto& rec : nonisolated_data())
    if (rec.label == name) return rec.corr;
  throw UnknownLabel("correction: " + name);
}

const std::vector<NonisolatedRecord>& nonisolated_data() {
  static const std::vector<NonisolatedRecord> data = {
      {"4^1", 5, 4, Rational(125), Rational(-1000), 5},
      {"1^1,3^1", 6, 6, Rational(2560), Rational(44320), -16},
      {"2^2", 6, 6, Rational(1215), Rational(24705), -9},
      {"1^2,2^1", 7, 8, Rational(45360), Rational(-1277640), 36},
      {"1^4", 8, 10, Rational(215040), Rational(10020864), -16},
  };
  return data;
}

// ----------------------------------------------------------------------
// LaTeX rendering

namespace {

std::string latex_rat(const Rational& r, bool with_sign) {
  Rational a = abs(r);
  std::string s;
  if (a.get_den() == 1)
    s = a.get_num().get_str();
  else
    s = "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() +
        "}";
  if (with_sign && r < 0) s = "-" + s;
  return s;
}

std::string latex_var(const std::string& v) {
  if (v == vars::psi) return "\\psi";
  if (v == vars::n) return "n";
  if (v.rfind("ξ", 0) == 0) return "\\xi" + v.substr(std::string("ξ").size());
  if (v.rfind("δ", 0) == 0)
    return "\\delta" + v.substr(std::string("δ").size());
  return v;
}

std::string latex_monomial(const Monomial& m) {
  std::string s;
  for (const auto& [v, e] : m) {
    s += latex_var(v);
    if (e > 1) s += e < 10 ? "^" + std::to_string(e)
                           : "^{" + std::to_string(e) + "}";
  }
  return s;
}

// Renders a univariate polynomial in n with descending powers, no spaces.
std::string latex_npoly(const std::map<int, Rational>& coeffs) {
  std::string s;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    const auto& [e, c] = *it;
    if (c == 0) continue;
    std::string piece;
    Rational a = abs(c);
    if (a != 1 || e == 0) piece += latex_rat(a, false);
    if (e >= 1) piece += "n";
    if (e >= 2)
      piece += e < 10 ? "^" + std::to_string(e)
                      : "^{" + std::to_string(e) + "}";
    if (s.empty())
      s += (c < 0 ? "-" : "") + piece;
    else
      s += (c < 0 ? "-" : "+") + piece;
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string latex_bclass(const Polynomial& p) {
  if (p.is_zero()) return "0";
  // Group terms by the monomial with n removed; the coefficient of each
  // group is a polynomial in n.
  std::map<Monomial, std::map<int, Rational>> groups;
  std::map<Monomial, Monomial> leading;  // canonical-first full monomial
  for (const auto& [mono, coef] : p.terms()) {
    Monomial key = mono;
    int ne = 0;
    auto it = key.find(vars::n);
    if (it != key.end()) {
      ne = it->second;
      key.erase(it);
    }
    groups[key][ne] += coef;
    auto lit = leading.find(key);
    if (lit == leading.end() || Polynomial::term_order(mono, lit->second))
      leading[key] = mono;
  }
  std::vector<Monomial> keys;
  for (const auto& [key, c] : groups) keys.push_back(key);
  std::sort(keys.begin(), keys.end(), [&](const Monomial& a,
                                          const Monomial& b) {
    return Polynomial::term_order(leading[a], leading[b]);
  });

  std::string out;
  for (const Monomial& key : keys) {
    std::map<int, Rational> coef = groups[key];
    // Content: the coefficient of the top power, normalized so the factored
    // part is monic; extract integer roots.
    int deg = 0;
    for (const auto& [e, c] : coef)
      if (c != 0 && e > deg) deg = e;
    Rational content = coef[deg];
    if (content == 0) continue;
    std::map<int, Rational> monic;
    for (const auto& [e, c] : coef) monic[e] = c / content;
    // Integer root extraction by synthetic division.
    std::map<long, int> roots;
    bool progress = true;
    while (deg >= 1 && progress) {
      progress = false;
      for (long r = -200; r <= 200 && !progress; ++r) {
        Rational val(0);
        for (int e = deg; e >= 0; --e) val = val * Rational(r) + monic[e];
        if (val != 0) continue;
        std::map<int, Rational> quot;
        Rational carry(0);
        for (int e = deg; e >= 1; --e) {
          carry = monic[e] + carry * Rational(r);
          quot[e - 1] = carry;
          carry = quot[e - 1];
        }
        monic = quot;
        --deg;
        ++roots[r];
        progress = true;
      }
    }
    std::string piece = latex_rat(content, false);
    bool unit_content = (abs(content) == 1);
    std::string factors;
    for (const auto& [r, mult] : roots) {
      std::string f;
      if (r == 0)
        f = "n";
      else if (r > 0)
        f = "(n-" + std::to_string(r) + ")";
      else
        f = "(n+" + std::to_string(-r) + ")";
      if (mult > 1) f += "^" + std::to_string(mult);
      factors += f;
    }
    bool trivial_rest = (deg == 0 && monic[0] == 1);
    std::string rest;
    if (!trivial_rest) rest = "(" + latex_npoly(monic) + ")";
    std::string mono_tex = latex_monomial(key);
    std::string body;
    if (unit_content && (!factors.empty() || !rest.empty() ||
                         !mono_tex.empty()))
      body = factors + rest + mono_tex;
    else
      body = piece + factors + rest + mono_tex;
    if (body.empty()) body = piece;
    std::string sign = content < 0 ? "-" : "+";
    if (out.empty())
      out += (content < 0 ? "-" : "") + body;
    else
      out += sign + body;
  }
  return out.empty() ? "0" : out;
}

}  // namespace hurwitz

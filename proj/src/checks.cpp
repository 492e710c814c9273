#include "hurwitz/checks.hpp"

#include <functional>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hurwitz/errors.hpp"
#include "hurwitz/grr.hpp"
#include "hurwitz/local_models.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/ring.hpp"
#include "hurwitz/strata.hpp"
#include "hurwitz/vars.hpp"

namespace hurwitz {

using vars::V;

bool Report::pass() const {
  for (const auto& item : items)
    if (!item.pass) return false;
  return true;
}

std::string Report::to_text() const {
  std::ostringstream out;
  if (items.empty()) {
    out << "PASS (0 items)\n";
    return out.str();
  }
  for (const auto& item : items) {
    out << (item.pass ? "PASS" : "FAIL") << "  " << bundle << "/" << item.name;
    if (!item.pass)
      out << "  expected: " << item.expected << "  computed: " << item.computed;
    out << "\n";
  }
  out << (pass() ? "PASS" : "FAIL") << "  " << bundle << " ("
      << items.size() << " items)\n";
  return out.str();
}

nlohmann::json Report::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& item : items)
    arr.push_back({{"name", item.name},
                   {"expected", item.expected},
                   {"computed", item.computed},
                   {"status", item.pass ? "PASS" : "FAIL"}});
  return {{"bundle", bundle},
          {"items", arr},
          {"overall", pass() ? "PASS" : "FAIL"}};
}

namespace {

Polynomial k(long a, long b = 1) { return Polynomial(Rational(a, b)); }

void add_item(Report& r, const std::string& name, const std::string& expected,
              const std::string& computed) {
  r.items.push_back({name, expected, computed, expected == computed});
}

void add_poly(Report& r, const std::string& name, const Polynomial& expected,
              const Polynomial& computed) {
  r.items.push_back({name, expected.to_text(), computed.to_text(),
                     expected == computed});
}

void add_bool(Report& r, const std::string& name, bool expected,
              bool computed) {
  add_item(r, name, expected ? "true" : "false",
           computed ? "true" : "false");
}

ResidualCalculus& shared_rc() {
  static ResidualCalculus rc;
  return rc;
}

// ----- golden formula tables (built once) -----

std::vector<std::pair<std::string, Polynomial>> golden_residuals_single() {
  Polynomial S = V(vars::Sigma), P = V(vars::Psi), Nn = V(vars::N),
             D = V(vars::Delta);
  std::vector<std::pair<std::string, Polynomial>> t;
  t.emplace_back("1^2", k(2) * (S * P - k(3) * S * S + D));
  t.emplace_back("1^1,2^1", -k(6) * S * (k(2) * S - P).pow(2) +
                                k(6) * D * (k(3) * P - Nn));
  t.emplace_back("1^3",
                 k(8) * S * (k(15) * S * S - k(13) * S * P + k(3) * P * P) -
                     k(8) * D * (k(10) * P - k(3) * Nn));
  t.emplace_back("1^1,3^1",
                 -k(4) * S * (k(5) * S - k(3) * P) * (k(3) * S - k(2) * P) *
                         (k(2) * S - P) +
                     k(4) * D * (k(20) * P * P - k(17) * Nn * P +
                                 k(6) * Nn * Nn - k(8) * D));
  t.emplace_back("2^2",
                 -k(3) * S * (k(2) * S - P) *
                         (k(20) * S * S - k(25) * S * P + k(8) * P * P) +
                     k(3) * D * (k(25) * P * P - k(21) * Nn * P +
                                 k(8) * Nn * Nn - k(12) * D));
  t.emplace_back("1^2,2^1",
                 k(24) * S * (k(2) * S - P) *
                         (k(15) * S * S - k(17) * S * P + k(5) * P * P) -
                     k(24) * D * (k(20) * P * P - k(15) * Nn * P +
                                  k(5) * Nn * Nn - k(7) * D));
  t.emplace_back("1^4",
                 -k(48) * S *
                         (k(105) * S * S * S - k(160) * S * S * P +
                          k(84) * S * P * P - k(15) * P * P * P) +
                     k(48) * D * (k(70) * P * P - k(48) * Nn * P +
                                  k(15) * Nn * Nn - k(21) * D));
  return t;
}

std::vector<std::pair<std::string, Polynomial>> golden_residuals_pair() {
  Polynomial S = V(vars::Sigma), P = V(vars::Psi), Nn = V(vars::N),
             D = V(vars::Delta);
  std::vector<std::pair<std::string, Polynomial>> t;
  t.emplace_back("2^1;2^1",
                 -k(2) * S * (k(2) * S - P) * (k(5) * S - k(3) * P) +
                     D * (k(14) * P - k(5) * Nn));
  t.emplace_back("2^1;1^2",
                 k(6) * S * (k(2) * S - P) * (k(5) * S - k(2) * P) -
                     k(6) * D * (k(7) * P - k(2) * Nn));
  t.emplace_back("1^2;1^2",
                 -k(6) * S * (k(30) * S * S - k(21) * P * S + k(4) * P * P) +
                     k(2) * D * (k(57) * P - k(14) * Nn));
  return t;
}

std::vector<Polynomial> golden_Q() {
  Polynomial P = V(vars::Psi), Nn = V(vars::N), D = V(vars::Delta);
  std::vector<Polynomial> q;
  q.push_back(-k(1));
  q.push_back(k(2) * Nn - k(5) * P);
  q.push_back(-(k(6) * Nn * Nn - k(15) * Nn * P + k(15) * P * P - k(8) * D));
  q.push_back(k(24) * Nn.pow(3) - k(62) * Nn * Nn * P + k(63) * Nn * P * P -
              k(35) * P.pow(3) - k(60) * Nn * D + k(84) * P * D);
  q.push_back(-(k(120) * Nn.pow(4) - k(322) * Nn.pow(3) * P +
                k(343) * Nn.pow(2) * P.pow(2) - k(196) * Nn * P.pow(3) +
                k(70) * P.pow(4) - k(432) * Nn.pow(2) * D +
                k(812) * Nn * P * D - k(469) * P.pow(2) * D +
                k(180) * D * D));
  return q;
}

// ----- individual bundles -----

Report check_q(int, bool) {
  Report r{"eq2.2-Q", {}};
  // Thom classes restrict to the falling factorial on every A model.
  for (int i = 1; i <= 8; ++i) {
    bool ok = true;
    for (int kk = 1; kk <= 12; ++kk) {
      Polynomial expected = Polynomial::variable(vars::T, 1).pow(i) *
                            falling_factorial(Rational(kk), i);
      if (!(LocalModel::A(kk).substitute(thom_Ai(i)) == expected)) ok = false;
    }
    add_bool(r, "thom-A" + std::to_string(i) + "-restriction", true, ok);
  }
  // Square-system counts.
  for (int i = 2; i <= 8; ++i) {
    int unknowns = 0;
    for (int c = 0; 2 * c <= i - 2; ++c) unknowns += i - 2 - 2 * c + 1;
    int constraints = 0;
    for (int s = 2; s <= i; ++s) constraints += s / 2;
    add_item(r, "unknown-count-i" + std::to_string(i),
             std::to_string(i * i / 4),
             std::to_string(unknowns) + (unknowns == constraints
                                             ? ""
                                             : "!=" + std::to_string(
                                                          constraints)));
  }
  std::vector<Polynomial> q = golden_Q();
  for (int j = 0; j <= 4; ++j)
    add_poly(r, "Q" + std::to_string(j), q[static_cast<size_t>(j)],
             solve_Q(j + 2));
  return r;
}

Report check_residual_single(int, bool) {
  Report r{"sec2.3-R", {}};
  ResidualCalculus& rc = shared_rc();
  for (const auto& [name, golden] : golden_residuals_single())
    add_poly(r, "R_" + name, golden, rc.residual(parse_label(name)));
  return r;
}

Report check_residual_pair(int, bool) {
  Report r{"sec2.4-R", {}};
  ResidualCalculus& rc = shared_rc();
  for (const auto& [name, golden] : golden_residuals_pair())
    add_poly(r, "R_" + name, golden, rc.residual(parse_label(name)));
  return r;
}

// One random single-step rewriting pass for the confluence experiment.
// A monomial is given by its exponents of Sigma, Psi, N, Delta, Pi plus a
// sign; the four rules are applied one minimal step at a time in random
// order until none applies.
struct MonomialState {
  long sign = 1;  // 0 means the monomial was rewritten to zero
  int s = 0, psi = 0, nn = 0, d = 0, pi = 0;
};

bool apply_rule(MonomialState& m, int rule) {
  switch (rule) {
    case 0:  // Pi^2 -> -Psi Pi
      if (m.pi >= 2) {
        m.pi -= 1;
        m.psi += 1;
        m.sign = -m.sign;
        return true;
      }
      return false;
    case 1:  // Sigma Pi -> 0
      if (m.s >= 1 && m.pi >= 1) {
        m = MonomialState{0, 0, 0, 0, 0, 0};
        return true;
      }
      return false;
    case 2:  // Pi Delta -> 0
      if (m.pi >= 1 && m.d >= 1) {
        m = MonomialState{0, 0, 0, 0, 0, 0};
        return true;
      }
      return false;
    case 3:  // Sigma Delta -> Psi Delta (one Sigma at a time)
      if (m.s >= 1 && m.d >= 1) {
        m.s -= 1;
        m.psi += 1;
        return true;
      }
      return false;
    default:
      return false;
  }
}

Report check_ring(int, bool) {
  Report r{"thm3.3", {}};
  add_bool(r, "product-formula-order6", true, verify_structure_identity(6));
  RingRules broken;
  broken.sigma_pi = false;
  add_bool(r, "product-formula-fails-without-SigmaPi-rule", false,
           verify_structure_identity(4, broken));

  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> exp_dist(0, 4);
  std::uniform_int_distribution<int> rule_dist(0, 3);
  int agreements = 0;
  const int cases = 10000;
  for (int t = 0; t < cases; ++t) {
    MonomialState m;
    m.s = exp_dist(rng);
    m.psi = exp_dist(rng);
    m.d = exp_dist(rng);
    m.nn = m.d > 0 ? exp_dist(rng) : 0;  // N only rides along with Delta
    m.pi = exp_dist(rng);
    Monomial mono;
    if (m.s) mono[vars::Sigma] = m.s;
    if (m.psi) mono[vars::Psi] = m.psi;
    if (m.nn) mono[vars::N] = m.nn;
    if (m.d) mono[vars::Delta] = m.d;
    if (m.pi) mono[vars::Pi] = m.pi;
    Polynomial input;
    input.add_term(mono, Rational(1));
    Polynomial canonical = reduce(input);
    // Random-order single-step rewriting until no rule applies.
    bool active = true;
    while (active && m.sign != 0) {
      int first = rule_dist(rng);
      active = false;
      for (int j = 0; j < 4 && !active; ++j)
        active = apply_rule(m, (first + j) % 4);
    }
    Polynomial stepped;
    if (m.sign != 0) {
      Monomial out;
      if (m.s) out[vars::Sigma] = m.s;
      if (m.psi) out[vars::Psi] = m.psi;
      if (m.nn) out[vars::N] = m.nn;
      if (m.d) out[vars::Delta] = m.d;
      if (m.pi) out[vars::Pi] = m.pi;
      stepped.add_term(out, Rational(m.sign));
    }
    if (stepped == canonical) ++agreements;
  }
  add_item(r, "reduction-confluence", std::to_string(cases) + "/" +
                                          std::to_string(cases),
           std::to_string(agreements) + "/" + std::to_string(cases));
  return r;
}

Report check_grr(int, bool) {
  Report r{"eq3.6", {}};
  // Todd expansion through degree 4 in generic Chern classes.
  WeightTable w{{"c1", 1}, {"c2", 2}, {"c3", 3}, {"c4", 4}};
  ChernVector e{Rational(4), {V("c1"), V("c2"), V("c3"), V("c4")}};
  std::vector<Polynomial> td = td_series(e, 4, w);
  Polynomial c1 = V("c1"), c2 = V("c2"), c3 = V("c3"), c4 = V("c4");
  add_poly(r, "td0", k(1), td[0]);
  add_poly(r, "td1", k(1, 2) * c1, td[1]);
  add_poly(r, "td2", k(1, 12) * (c1 * c1 + c2), td[2]);
  add_poly(r, "td3", k(1, 24) * c1 * c2, td[3]);
  add_poly(r, "td4",
           k(1, 720) * (-c1.pow(4) + k(4) * c1 * c1 * c2 + k(3) * c2 * c2 +
                        c1 * c3 - c4),
           td[4]);

  // The direct-image expansion levels.
  std::vector<GrrLevel> levels = grr_rhs(7);
  Polynomial om = V(vars::Omega), Nn = V(vars::N), D = V(vars::Delta);
  auto check_level = [&](int d, const Rational& coef, const Polynomial& cls) {
    add_item(r, "level" + std::to_string(d) + "-coefficient",
             rat_to_string(coef),
             rat_to_string(levels[static_cast<size_t>(d)].coefficient));
    add_poly(r, "level" + std::to_string(d) + "-class", cls,
             levels[static_cast<size_t>(d)].cls);
  };
  check_level(1, Rational(1, 2), om);
  check_level(2, Rational(1, 12), om * om + D);
  check_level(4, Rational(-1, 720), om.pow(4) + (Nn * Nn - k(3) * D) * D);
  check_level(6, Rational(1, 30240),
              om.pow(6) + (Nn.pow(4) - k(5) * Nn * Nn * D + k(5) * D * D) * D);
  for (int d : {3, 5, 7})
    add_bool(r, "level" + std::to_string(d) + "-vanishes", true,
             levels[static_cast<size_t>(d)].combined.is_zero());

  // Hodge character components.
  add_poly(r, "hodge-ch-level0", V(vars::g) - k(1), hodge_ch(0));
  for (int level : {2, 4, 6})
    add_bool(r, "hodge-ch-level" + std::to_string(level) + "-vanishes", true,
             hodge_ch(level).is_zero());

  // Genus-zero identity from the degree-2 class.
  Polynomial expected = V(vars::xi(1)) -
                        k(4) * (V(vars::n) - k(1)) * V(vars::psi) +
                        V(vars::delta(0, 0));
  add_poly(r, "genus0-first-identity", expected, genus0_identities()[0]);
  return r;
}

Report check_strata(int, bool) {
  Report r{"sec4.1-strata", {}};
  ResidualCalculus& rc = shared_rc();
  for (size_t i = 0; i < golden_general_table().size(); ++i) {
    const auto& [name, general] = golden_general_table()[i];
    const auto& [gname, g0] = golden_g0_table()[i];
    try {
      StratumExpression se = assemble(parse_label(name), rc);
      add_poly(r, "sigma_" + name + "-general", general, se.general_g);
      add_poly(r, "sigma_" + name + "-genus0", g0, se.genus0);
    } catch (const ConventionMismatch& e) {
      add_item(r, "sigma_" + name, general.to_text(),
               std::string("ConventionMismatch: ") + e.what());
    }
    add_poly(r, "sigma_" + name + "-reduction", g0, genus0_reduce(general));
  }
  return r;
}

Report check_degrees(int, bool) {
  Report r{"sec4.2-degrees", {}};
  add_item(r, "deg(1)-n4", "4", rat_to_string(degree(k(1), 4)));
  add_item(r, "deg(δ_{0,0})-n4", "15",
           rat_to_string(degree(V(vars::delta(0, 0)), 4)));
  ResidualCalculus& rc = shared_rc();
  for (const auto& [name, form] : deg_sigma_forms()) {
    Polynomial g0 = sigma_g0(parse_label(name), rc);
    bool ok = true;
    for (long n = 3; n <= 12; ++n)
      if (degree(g0, n) != form.value(n)) ok = false;
    add_bool(r, "deg-sigma_" + name + "-n3..12", true, ok);
  }
  // Cayley cross-check of deg(1) through the psi-intersection numbers.
  for (int n = 3; n <= 9; ++n) {
    Rational sum(0);
    std::vector<int> a(static_cast<size_t>(n), 0);
    // Enumerate exponent vectors summing to n-3.
    std::function<void(size_t, int)> rec = [&](size_t pos, int left) {
      if (pos + 1 == a.size()) {
        a[pos] = left;
        sum += mzn_psi_integral(a);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        a[pos] = v;
        rec(pos + 1, left - v);
      }
    };
    rec(0, n - 3);
    add_item(r, "cayley-n" + std::to_string(n),
             rat_to_string(rat_pow(Rational(n), n - 3)), rat_to_string(sum));
  }
  return r;
}

Report check_h(int, bool) {
  Report r{"thm1.2-h", {}};
  ResidualCalculus& rc = shared_rc();
  for (const auto& [name, form] : h_closed_forms()) {
    MultiPartition label = parse_label(name);
    bool ok = true;
    int compared = 0;
    for (long n = 4; n <= 12; ++n) {
      if (!form.valid(n)) continue;
      ++compared;
      if (hurwitz_number(label, n, rc) != form.value(n)) ok = false;
    }
    add_bool(r, "h_" + name + "-n4..12(" + std::to_string(compared) + ")",
             true, ok && compared > 0);
  }
  return r;
}

Report check_oracle(int max_n, bool override_bound) {
  Report r{"oracle-crosscheck", {}};
  ResidualCalculus& rc = shared_rc();
  for (const auto& [name, form] : h_closed_forms()) {
    MultiPartition label = parse_label(name);
    std::string compared;
    bool ok = true;
    for (int n = 3; n <= max_n; ++n) {
      Rational symbolic;
      try {
        for (const auto& entry : label.entries())
          reduced_to_cycle_type(entry, n);
        m_count(label, n, 0);
        symbolic = hurwitz_number(label, n, rc);
      } catch (const TooLarge&) {
        continue;
      } catch (const NegativeSimplePoints&) {
        continue;
      }
      if (hurwitz_oracle(label, n, 0, override_bound) != symbolic) ok = false;
      compared += (compared.empty() ? "" : ",") + std::to_string(n);
    }
    add_bool(r, "oracle-vs-h_" + name + "-n{" + compared + "}", true,
             ok && !compared.empty());
  }
  // The naive enumeration agrees with the class-algebra path.
  struct NaiveCase {
    const char* label;
    int n;
  };
  for (const NaiveCase& c : {NaiveCase{"2^1", 3}, NaiveCase{"1^2", 4},
                             NaiveCase{"3^1", 4}, NaiveCase{"2^1;2^1", 4},
                             NaiveCase{"1^1,2^1", 5}}) {
    MultiPartition label = parse_label(c.label);
    FactorizationSpec spec;
    spec.n = c.n;
    for (const auto& entry : label.entries())
      spec.fixed_classes.push_back(reduced_to_cycle_type(entry, c.n));
    spec.num_transpositions = m_count(label, c.n, 0);
    add_item(r, std::string("naive-vs-algebra-") + c.label + "-n" +
                    std::to_string(c.n),
             rat_to_string(count_connected(spec)),
             rat_to_string(count_connected_naive(spec)));
    add_item(r, std::string("naive-all-vs-algebra-") + c.label + "-n" +
                    std::to_string(c.n),
             rat_to_string(count_all(spec)),
             rat_to_string(count_all_naive(spec)));
  }
  return r;
}

Report check_nonisolated(int max_n, bool override_bound) {
  Report r{"sec4.3-data", {}};
  add_item(r, "deg-I-infty-n4", "24", rat_to_string(i_infty(4)));
  for (const auto& rec : nonisolated_data()) {
    add_item(r, "correction-consistency-" + rec.label,
             rat_to_string(Rational(rec.corr) * i_infty(rec.n)),
             rat_to_string(rec.deg_sigma - rec.deg_sigma_exp));
    if (rec.n <= max_n) {
      // Independent recount of the stored stratum degree.
      MultiPartition label = parse_label(rec.label);
      FactorizationSpec spec;
      spec.n = static_cast<int>(rec.n);
      for (const auto& entry : label.entries())
        spec.fixed_classes.push_back(
            reduced_to_cycle_type(entry, spec.n));
      spec.num_transpositions = static_cast<int>(rec.m);
      Rational recount = count_connected(spec, override_bound) /
                         (Rational(aut_set_order(label)) * factorial(rec.m));
      add_item(r, "deg-sigma-recount-" + rec.label,
               rat_to_string(rec.deg_sigma), rat_to_string(recount));
    }
  }
  return r;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "eq2.2-Q",        "sec2.3-R",       "sec2.4-R",  "thm3.3",
      "eq3.6",          "sec4.1-strata",  "sec4.2-degrees",
      "thm1.2-h",       "oracle-crosscheck", "sec4.3-data"};
  return names;
}

Report run_check(const std::string& name, int max_n, bool override_bound) {
  if (name == "eq2.2-Q") return check_q(max_n, override_bound);
  if (name == "sec2.3-R") return check_residual_single(max_n, override_bound);
  if (name == "sec2.4-R") return check_residual_pair(max_n, override_bound);
  if (name == "thm3.3") return check_ring(max_n, override_bound);
  if (name == "eq3.6") return check_grr(max_n, override_bound);
  if (name == "sec4.1-strata") return check_strata(max_n, override_bound);
  if (name == "sec4.2-degrees") return check_degrees(max_n, override_bound);
  if (name == "thm1.2-h") return check_h(max_n, override_bound);
  if (name == "oracle-crosscheck") return check_oracle(max_n, override_bound);
  if (name == "sec4.3-data") return check_nonisolated(max_n, override_bound);
  throw UnknownLabel("run_check: unknown bundle " + name);
}

std::vector<Report> run_all(int max_n, bool override_bound) {
  std::vector<Report> reports;
  for (const auto& name : check_names())
    reports.push_back(run_check(name, max_n, override_bound));
  return reports;
}

}  // namespace hurwitz

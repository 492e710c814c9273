#include "hurwitz/local_models.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "hurwitz/assembly.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/linear.hpp"
#include "hurwitz/vars.hpp"

namespace hurwitz {

using vars::V;

LocalModel LocalModel::A(int k) {
  if (k < 1) throw CalcError("LocalModel::A: k must be >= 1");
  return LocalModel(Kind::A, k, 0);
}

LocalModel LocalModel::I(int k, int l) {
  if (l < 1 || k < l) throw CalcError("LocalModel::I: need k >= l >= 1");
  return LocalModel(Kind::I, k, l);
}

std::string LocalModel::name() const {
  if (kind_ == Kind::A) return "A" + std::to_string(k_);
  return "I" + std::to_string(k_) + "," + std::to_string(l_);
}

std::vector<int> LocalModel::weights() const {
  std::vector<int> w;
  if (kind_ == Kind::A) {
    for (int j = 1; j <= k_; ++j) w.push_back(j);
  } else {
    w.push_back(l_);
    for (int j = 1; j <= k_ - 1; ++j) w.push_back(j * l_);
    w.push_back(k_);
    for (int j = 1; j <= l_ - 1; ++j) w.push_back(j * k_);
  }
  return w;
}

int LocalModel::degree_f() const {
  return kind_ == Kind::A ? k_ + 1 : k_ + l_;
}

int LocalModel::dim() const {
  return kind_ == Kind::A ? k_ - 1 : k_ + l_ - 1;
}

Rational LocalModel::p_degree() const {
  return Rational(kind_ == Kind::A ? k_ : k_ + l_);
}

Polynomial LocalModel::sigma_value() const {
  long c = kind_ == Kind::A ? k_ : static_cast<long>(k_) * l_;
  return V(vars::T) * Rational(c);
}

Polynomial LocalModel::psi_value() const {
  long c = kind_ == Kind::A ? k_ + 1 : static_cast<long>(k_) * l_;
  return V(vars::T) * Rational(c);
}

Polynomial LocalModel::n_value() const {
  if (kind_ == Kind::A)
    throw CalcError("LocalModel: N has no value on an A model");
  return V(vars::T) * Rational(k_ + l_);
}

Polynomial LocalModel::delta_value() const {
  if (kind_ == Kind::A) return Polynomial();
  return Polynomial::variable(vars::T, 2) * Rational(static_cast<long>(k_) * l_);
}

Polynomial LocalModel::substitute(const Polynomial& p) const {
  std::map<std::string, Polynomial> repl{{vars::Sigma, sigma_value()},
                                         {vars::Psi, psi_value()},
                                         {vars::Delta, delta_value()}};
  if (kind_ == Kind::I) repl[vars::N] = n_value();
  if (p.degree_in(vars::N) > 0 && kind_ == Kind::A)
    throw MalformedClass("substitute: N on an A model");
  return p.substitute(repl);
}

Polynomial LocalModel::push(const Polynomial& p) const {
  Polynomial out;
  for (const auto& [mono, coef] : p.terms()) {
    int eS = 0, ePsi = 0, eN = 0, eD = 0;
    Monomial passthrough;
    for (const auto& [v, e] : mono) {
      if (v == vars::Sigma)
        eS = e;
      else if (v == vars::Psi)
        ePsi = e;
      else if (v == vars::N)
        eN = e;
      else if (v == vars::Delta)
        eD = e;
      else
        passthrough[v] = e;
    }
    Polynomial target;
    if (eD >= 1) {
      if (kind_ == Kind::A) continue;  // no nodal locus on an A model
      target = psi_value().pow(ePsi) * sigma_value().pow(eS) *
               n_value().pow(eN) * delta_value().pow(eD - 1) *
               (V(vars::T) * Rational(k_ + l_));
    } else if (eS >= 1) {
      if (eN > 0) throw MalformedClass("push: N without Delta");
      target = psi_value().pow(ePsi) * sigma_value().pow(eS - 1) *
               Polynomial(p_degree());
    } else {
      if (eN > 0) throw MalformedClass("push: N without Delta");
      continue;  // fiberwise-constant class pushes to zero
    }
    Polynomial pass;
    pass.add_term(passthrough, coef);
    out += pass * target;
  }
  return out;
}

Rational wps_degree(const std::vector<int>& weights) {
  if (weights.empty()) throw CalcError("wps_degree: empty weight list");
  Rational prod(1);
  for (int w : weights) prod *= w;
  return Rational(1) / prod;
}

Polynomial thom_Ai(int i) {
  if (i < 1) throw CalcError("thom_Ai: i must be >= 1");
  Polynomial acc(1);
  for (int j = 1; j <= i; ++j)
    acc *= V(vars::Sigma) * Rational(j) - V(vars::Psi) * Rational(j - 1);
  return acc;
}

Polynomial pochhammer_poly(int m) {
  Polynomial acc(1);
  for (int i = 0; i < m; ++i) acc *= V(vars::K) + Polynomial(1 - i);
  return acc;
}

Rational gen_series_coefficient(const ReducedPartition& alpha, int k) {
  int m = alpha.weight() + static_cast<int>(alpha.parts().size());
  return falling_factorial(Rational(k + 1), m);
}

namespace {

// Deterministic list of monomials N^a Psi^b Delta^c with a + b + 2c = deg.
std::vector<Monomial> nodal_monomials(int deg) {
  std::vector<Monomial> out;
  for (int c = 0; 2 * c <= deg; ++c) {
    for (int a = deg - 2 * c; a >= 0; --a) {
      int b = deg - 2 * c - a;
      Monomial m;
      if (a) m[vars::N] = a;
      if (b) m[vars::Psi] = b;
      if (c) m[vars::Delta] = c;
      out.push_back(m);
    }
  }
  return out;
}

// I models with k + l <= bound, ordered by (k+l, k).
std::vector<LocalModel> nodal_models(int bound) {
  std::vector<LocalModel> out;
  for (int s = 2; s <= bound; ++s)
    for (int l = s / 2; l >= 1; --l) out.push_back(LocalModel::I(s - l, l));
  return out;
}

// Extracts, for each power of t, the coefficient (a polynomial in the
// undetermined variables) and adds the corresponding vanishing equation.
void add_vanishing_equations(LinearSystem& sys, const Polynomial& expr) {
  std::map<int, Polynomial> by_power;
  for (const auto& [m, c] : expr.terms()) {
    int e = 0;
    Monomial rest;
    for (const auto& [v, x] : m) {
      if (v == vars::T)
        e = x;
      else
        rest[v] = x;
    }
    Polynomial piece;
    piece.add_term(rest, c);
    by_power[e] += piece;
  }
  for (const auto& [e, piece] : by_power) sys.add_zero_equation(piece);
}

}  // namespace

Polynomial solve_Q(int i) {
  if (i < 2) throw CalcError("solve_Q: i must be >= 2");
  std::vector<Monomial> mons = nodal_monomials(i - 2);
  std::vector<LocalModel> models = nodal_models(i);
  if (mons.size() != models.size())
    throw SystemNotSquare("solve_Q: " + std::to_string(mons.size()) +
                          " unknowns vs " + std::to_string(models.size()) +
                          " constraints");
  LinearSystem sys;
  for (size_t j = 0; j < mons.size(); ++j)
    sys.unknowns.push_back("q" + std::to_string(j));
  Polynomial q_trial;
  for (size_t j = 0; j < mons.size(); ++j) {
    Polynomial mp;
    mp.add_term(mons[j], Rational(1));
    q_trial += V(sys.unknowns[j]) * mp;
  }
  Polynomial r_trial = thom_Ai(i) + q_trial * V(vars::Delta);
  for (const auto& model : models)
    add_vanishing_equations(sys, model.substitute(r_trial));
  SolveResult res = solve_linear(sys);
  if (res.status != SolveStatus::Solved)
    throw UnsolvableSystem("solve_Q(" + std::to_string(i) + ")");
  std::map<std::string, Polynomial> repl;
  for (const auto& [name, value] : res.values) repl[name] = Polynomial(value);
  return q_trial.substitute(repl);
}

Polynomial universal_R(int i) {
  if (i == 1) return V(vars::Sigma);
  return thom_Ai(i) + solve_Q(i) * V(vars::Delta);
}

// ----------------------------------------------------------------------
// ResidualCalculus

ResidualCalculus::ResidualCalculus() {
  const char* dir = std::getenv("STRATA_CACHE_DIR");
  if (dir != nullptr && *dir != '\0') {
    cache_file_ = std::string(dir) + "/residuals.v1.json";
    load_cache();
  }
}

void ResidualCalculus::load_cache() {
  std::ifstream in(cache_file_);
  if (!in) return;
  try {
    nlohmann::json j;
    in >> j;
    if (j.value("schema", 0) != 1) return;
    for (auto it = j.at("residuals").begin(); it != j.at("residuals").end();
         ++it)
      cache_[parse_label(it.key())] = Polynomial::from_json(it.value());
  } catch (...) {
    cache_.clear();  // a corrupt cache is ignored, never trusted
  }
}

void ResidualCalculus::save_cache() const {
  if (cache_file_.empty()) return;
  nlohmann::json res = nlohmann::json::object();
  for (const auto& [label, poly] : cache_)
    res[label.to_string()] = poly.to_json();
  nlohmann::json j{{"schema", 1}, {"residuals", res}};
  std::error_code ec;
  std::filesystem::create_directories(
      std::filesystem::path(cache_file_).parent_path(), ec);
  std::ofstream out(cache_file_);
  if (out) out << j.dump(1) << "\n";
}

const Polynomial& ResidualCalculus::residual(const MultiPartition& label) {
  auto it = cache_.find(label);
  if (it != cache_.end()) return it->second;
  Polynomial value = compute(label);
  auto [pos, inserted] = cache_.emplace(label, std::move(value));
  if (inserted) save_cache();
  return pos->second;
}

Polynomial ResidualCalculus::compute(const MultiPartition& label) {
  if (label.empty())
    throw CalcError("residual: empty multisingularity label");
  const auto& entries = label.entries();
  const ReducedPartition simple = simple_profile();
  if (label.size() == 1 && entries[0] == simple) return V(vars::Sigma);
  // A simple branch point among several values scales the remaining class.
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] == simple) {
      std::vector<ReducedPartition> rest;
      for (size_t j = 0; j < entries.size(); ++j)
        if (j != i) rest.push_back(entries[j]);
      MultiPartition reduced(rest);
      return residual(reduced) * Rational(-reduced.weight());
    }
  }
  if (label.size() == 1) return determine_single(entries[0]);
  if (label.size() == 2) return determine_pair(label);
  throw CalcError("residual: labels with more than two degenerate values "
                  "are not supported");
}

Polynomial ResidualCalculus::sigma_psi_part(
    const ReducedPartition& alpha) const {
  // Distinct part values with multiplicities.
  std::vector<std::pair<int, int>> groups;
  for (int v : alpha.parts()) {
    if (!groups.empty() && groups.back().first == v)
      ++groups.back().second;
    else
      groups.emplace_back(v, 1);
  }
  auto marker = [](int value) { return "t_" + std::to_string(value); };

  // Equivariant generating series over sub-profiles of alpha.
  Polynomial E;
  std::vector<int> take(groups.size(), 0);
  while (true) {
    int w = 0, cnt = 0;
    Rational denom(1);
    Monomial mark;
    for (size_t i = 0; i < groups.size(); ++i) {
      w += take[i] * groups[i].first;
      cnt += take[i];
      denom *= factorial(take[i]);
      if (take[i]) mark[marker(groups[i].first)] = take[i];
    }
    Polynomial term = pochhammer_poly(w + cnt) *
                      Polynomial::variable(vars::T, 1).pow(w) *
                      (Rational(1) / denom);
    Polynomial marked;
    marked.add_term(mark, Rational(1));
    E += term * marked;
    size_t i = 0;
    for (; i < groups.size(); ++i) {
      if (++take[i] <= groups[i].second) break;
      take[i] = 0;
    }
    if (i == groups.size()) break;
  }

  // Truncated logarithm; terms whose marker exponents exceed the target
  // multiplicities are pruned eagerly.
  auto prune = [&](const Monomial& m) {
    for (size_t i = 0; i < groups.size(); ++i) {
      auto it = m.find(marker(groups[i].first));
      if (it != m.end() && it->second > groups[i].second) return false;
    }
    return true;
  };
  Polynomial u = (E - Polynomial(1)).filter(prune);
  int total_cnt = static_cast<int>(alpha.parts().size());
  Polynomial log_e;
  Polynomial pw(1);
  for (int j = 1; j <= total_cnt; ++j) {
    pw = (pw * u).filter(prune);
    if (pw.is_zero()) break;
    log_e += pw * (Rational((j % 2 == 1) ? 1 : -1) / Rational(j));
  }

  // Coefficient of the full marker monomial, times the marker factorials.
  Monomial full;
  Rational mult(1);
  for (const auto& [v, m] : groups) {
    full[marker(v)] = m;
    mult *= factorial(m);
  }
  Polynomial coef;
  for (const auto& [m, c] : log_e.terms()) {
    Monomial stripped = m;
    bool exact = true;
    for (const auto& [v, cnt] : full) {
      auto it = stripped.find(v);
      if (it == stripped.end() || it->second != cnt) {
        exact = false;
        break;
      }
      stripped.erase(it);
    }
    // No stray markers may remain.
    if (!exact) continue;
    bool stray = false;
    for (const auto& [v, e] : stripped)
      if (v != vars::T && v != vars::K) stray = true;
    if (stray) continue;
    coef.add_term(stripped, c);
  }
  coef *= mult;

  // Exact division by (k+1), then the equivariant rewriting
  // k^j t^w -> Sigma^j (Psi - Sigma)^(w-j).
  Polynomial divided = coef.divide_exact(V(vars::K) + Polynomial(1));
  Polynomial out;
  for (const auto& [m, c] : divided.terms()) {
    int j = 0, w = 0;
    for (const auto& [v, e] : m) {
      if (v == vars::K)
        j = e;
      else if (v == vars::T)
        w = e;
      else
        throw CalcError("sigma_psi_part: unexpected variable " + v);
    }
    if (j > w)
      throw CalcError("sigma_psi_part: order degree exceeds t degree");
    out += Polynomial(c) * V(vars::Sigma).pow(j) *
           (V(vars::Psi) - V(vars::Sigma)).pow(w - j);
  }
  return out;
}

Polynomial ResidualCalculus::model_sigma(
    const MultiPartition& target, const LocalModel& model,
    const std::function<Polynomial(const MultiPartition&)>& provider) {
  return assemble_class(
      target,
      [&](const MultiPartition& m) { return model.push(provider(m)); },
      model.psi_value());
}

Polynomial ResidualCalculus::determine_single(const ReducedPartition& alpha) {
  int w = alpha.weight();
  Polynomial base = sigma_psi_part(alpha);
  std::vector<Monomial> mons = nodal_monomials(w - 2);
  LinearSystem sys;
  Polynomial nodal;
  for (size_t j = 0; j < mons.size(); ++j) {
    std::string u = "u" + std::to_string(j);
    sys.unknowns.push_back(u);
    Polynomial mp;
    mp.add_term(mons[j], Rational(1));
    nodal += V(u) * mp;
  }
  Polynomial trial = base + nodal * V(vars::Delta);
  MultiPartition target({alpha});
  auto provider = [&](const MultiPartition& m) -> Polynomial {
    if (m == target) return trial;
    return residual(m);
  };
  for (const auto& model : nodal_models(w))
    add_vanishing_equations(sys, model_sigma(target, model, provider));
  SolveResult res = solve_linear(sys);
  if (res.status != SolveStatus::Solved)
    throw UnsolvableSystem("determine_single: " + alpha.to_string());
  std::map<std::string, Polynomial> repl;
  for (const auto& [name, value] : res.values) repl[name] = Polynomial(value);
  return trial.substitute(repl);
}

Polynomial ResidualCalculus::determine_pair(const MultiPartition& label) {
  int w = label.weight();
  int d = w - 1;  // weighted degree of the residual class
  LinearSystem sys;
  Polynomial trial;
  // Critical-locus part: Sigma times a homogeneous polynomial in Sigma, Psi.
  for (int j = 0; j < d; ++j) {
    std::string x = "x" + std::to_string(j);
    sys.unknowns.push_back(x);
    trial += V(x) * V(vars::Sigma) *
             Polynomial::variable(vars::Sigma, 1).pow(d - 1 - j) *
             Polynomial::variable(vars::Psi, 1).pow(j);
  }
  // Nodal part.
  std::vector<Monomial> mons = nodal_monomials(d - 2);
  for (size_t j = 0; j < mons.size(); ++j) {
    std::string y = "y" + std::to_string(j);
    sys.unknowns.push_back(y);
    Polynomial mp;
    mp.add_term(mons[j], Rational(1));
    trial += V(y) * mp * V(vars::Delta);
  }
  auto provider = [&](const MultiPartition& m) -> Polynomial {
    if (m == label) return trial;
    return residual(m);
  };
  for (int k = 1; k <= d; ++k)
    add_vanishing_equations(sys,
                            model_sigma(label, LocalModel::A(k), provider));
  for (const auto& model : nodal_models(d))
    add_vanishing_equations(sys, model_sigma(label, model, provider));
  SolveResult res = solve_linear(sys);
  if (res.status != SolveStatus::Solved)
    throw UnsolvableSystem("determine_pair: " + label.to_string());
  std::map<std::string, Polynomial> repl;
  for (const auto& [name, value] : res.values) repl[name] = Polynomial(value);
  return trial.substitute(repl);
}

}  // namespace hurwitz

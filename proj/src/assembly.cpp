#include "hurwitz/assembly.hpp"

#include <map>
#include <vector>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

using Counts = std::map<int, int>;  // part value -> multiplicity

Counts to_counts(const ReducedPartition& p) {
  Counts c;
  for (int v : p.parts()) ++c[v];
  return c;
}

// All sub-multisets of `c` (including the empty one), deterministic order.
std::vector<Counts> submultisets(const Counts& c) {
  std::vector<Counts> out{Counts{}};
  for (const auto& [v, mult] : c) {
    std::vector<Counts> next;
    for (const auto& base : out) {
      for (int take = 0; take <= mult; ++take) {
        Counts n = base;
        if (take > 0) n[v] = take;
        next.push_back(n);
      }
    }
    out = std::move(next);
  }
  return out;
}

bool fits(const Counts& sub, const Counts& rem) {
  for (const auto& [v, m] : sub) {
    auto it = rem.find(v);
    if (it == rem.end() || it->second < m) return false;
  }
  return true;
}

void subtract(Counts& rem, const Counts& sub) {
  for (const auto& [v, m] : sub) {
    rem[v] -= m;
    if (rem[v] == 0) rem.erase(v);
  }
}

void add_back(Counts& rem, const Counts& sub) {
  for (const auto& [v, m] : sub) rem[v] += m;
}

ReducedPartition from_counts(const Counts& c) {
  std::vector<int> parts;
  for (const auto& [v, m] : c)
    for (int i = 0; i < m; ++i) parts.push_back(v);
  return ReducedPartition(parts);
}

// A placed factor: one optional sub-profile per critical value.
struct PlacedFactor {
  std::vector<Counts> per_value;  // empty Counts = value not touched
  int span = 0;                   // number of touched values
};

struct Enumerator {
  const std::function<Polynomial(const MultiPartition&)>& pushed_residual;
  std::vector<PlacedFactor> factors;       // global deterministic list
  std::vector<Polynomial> factor_u;        // cached u-values, lazily filled
  std::vector<bool> factor_u_ready;
  std::vector<Counts> remaining;
  Polynomial result;
  int c = 0;

  const Polynomial& u_of(size_t idx) {
    if (!factor_u_ready[idx]) {
      std::vector<ReducedPartition> entries;
      Rational denom(1);
      for (const auto& cnt : factors[idx].per_value) {
        if (cnt.empty()) continue;
        ReducedPartition p = from_counts(cnt);
        denom *= aut_order(p);
        entries.push_back(p);
      }
      MultiPartition mp(entries);
      factor_u[idx] = pushed_residual(mp) * (Rational(1) / denom);
      factor_u_ready[idx] = true;
    }
    return factor_u[idx];
  }

  // Chooses factors with indices >= start in non-decreasing order; run_len is
  // the number of consecutive copies of factors[start-? ] already taken.
  void recurse(size_t start, int run_len, const Polynomial& acc, int spans,
               const Polynomial& psi) {
    bool done = true;
    for (const auto& r : remaining)
      if (!r.empty()) {
        done = false;
        break;
      }
    if (done) {
      result += acc * psi.pow(spans - c);
      return;
    }
    for (size_t i = start; i < factors.size(); ++i) {
      const PlacedFactor& f = factors[i];
      bool ok = true;
      for (int v = 0; v < c; ++v)
        if (!fits(f.per_value[static_cast<size_t>(v)],
                  remaining[static_cast<size_t>(v)])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      const Polynomial& u = u_of(i);
      if (u.is_zero()) continue;
      for (int v = 0; v < c; ++v)
        subtract(remaining[static_cast<size_t>(v)],
                 f.per_value[static_cast<size_t>(v)]);
      int rl = (i == start) ? run_len + 1 : 1;
      // Repetition of identical placed factors divides by the running count.
      Polynomial nacc = acc * u * (Rational(1) / Rational(rl));
      recurse(i, rl, nacc, spans + f.span, psi);
      for (int v = 0; v < c; ++v)
        add_back(remaining[static_cast<size_t>(v)],
                 f.per_value[static_cast<size_t>(v)]);
    }
  }
};

}  // namespace

Polynomial assemble_class(
    const MultiPartition& target,
    const std::function<Polynomial(const MultiPartition&)>& pushed_residual,
    const Polynomial& psi) {
  if (target.empty()) return Polynomial(1);

  Enumerator en{pushed_residual, {}, {}, {}, {}, Polynomial(), 0};
  en.c = static_cast<int>(target.size());

  std::vector<std::vector<Counts>> options;
  for (const auto& entry : target.entries()) {
    Counts full = to_counts(entry);
    en.remaining.push_back(full);
    options.push_back(submultisets(full));
  }

  // Build the global list of placed factors (cartesian product of per-value
  // options, excluding the empty choice).
  std::vector<size_t> pick(target.size(), 0);
  while (true) {
    PlacedFactor f;
    for (size_t v = 0; v < target.size(); ++v) {
      const Counts& cnt = options[v][pick[v]];
      f.per_value.push_back(cnt);
      if (!cnt.empty()) ++f.span;
    }
    if (f.span > 0) en.factors.push_back(f);
    size_t v = 0;
    for (; v < target.size(); ++v) {
      if (++pick[v] < options[v].size()) break;
      pick[v] = 0;
    }
    if (v == target.size()) break;
  }
  en.factor_u.resize(en.factors.size());
  en.factor_u_ready.assign(en.factors.size(), false);

  en.recurse(0, 0, Polynomial(1), 0, psi);
  return en.result * (Rational(1) / Rational(aut_set_order(target)));
}

}  // namespace hurwitz

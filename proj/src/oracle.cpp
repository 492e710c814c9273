#include "hurwitz/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

using Perm = std::vector<int>;

constexpr int kResourceLimit = 8;

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

CycleType cycle_type(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  CycleType t;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = static_cast<size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

struct SnData {
  int n = 0;
  std::vector<CycleType> types;       // class id -> cycle type
  std::map<CycleType, int> type_id;
  std::vector<std::vector<Perm>> members;  // class id -> all elements
  std::vector<Perm> rep;                   // class id -> representative
  int id_class = 0;
  int transposition_class = -1;

  int class_of(const Perm& p) const { return type_id.at(cycle_type(p)); }
};

const SnData& sn_data(int n) {
  static std::map<int, SnData> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  SnData d;
  d.n = n;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::map<CycleType, std::vector<Perm>> buckets;
  do {
    buckets[cycle_type(p)].push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  for (auto& [type, perms] : buckets) {
    d.type_id[type] = static_cast<int>(d.types.size());
    d.types.push_back(type);
    d.rep.push_back(perms.front());
    d.members.push_back(std::move(perms));
  }
  CycleType id_type(n, 1);
  d.id_class = d.type_id.at(id_type);
  if (n >= 2) {
    CycleType tr(n - 1, 1);
    tr.front() = 2;
    std::sort(tr.rbegin(), tr.rend());
    d.transposition_class = d.type_id.at(tr);
  }
  return memo.emplace(n, std::move(d)).first->second;
}

std::vector<Rational> convolve(const SnData& d, const std::vector<Rational>& a,
                               int cid) {
  std::vector<Rational> out(d.types.size(), Rational(0));
  for (size_t e = 0; e < d.types.size(); ++e) {
    Rational s(0);
    for (const Perm& b : d.members[cid])
      s += a[static_cast<size_t>(d.class_of(compose(d.rep[e], b)))];
    out[e] = s;
  }
  return out;
}

void check_bound(int n, bool override_bound) {
  if (n < 1) throw CalcError("oracle: n must be >= 1");
  if (n > kResourceLimit && !override_bound)
    throw ResourceBound("oracle: n = " + std::to_string(n) +
                        " exceeds the default limit " +
                        std::to_string(kResourceLimit));
}

// All distinct splittings of a cycle type into a sub-multiset summing to s
// and its complement.
std::vector<std::pair<CycleType, CycleType>> type_splits(const CycleType& t,
                                                         int s) {
  std::vector<std::pair<int, int>> groups;  // (value, multiplicity)
  for (int v : t) {
    if (!groups.empty() && groups.back().first == v)
      ++groups.back().second;
    else
      groups.emplace_back(v, 1);
  }
  std::vector<std::pair<CycleType, CycleType>> out;
  std::vector<int> take(groups.size(), 0);
  while (true) {
    int sum = 0;
    for (size_t i = 0; i < groups.size(); ++i) sum += take[i] * groups[i].first;
    if (sum == s) {
      CycleType mu, nu;
      for (size_t i = 0; i < groups.size(); ++i) {
        for (int j = 0; j < take[i]; ++j) mu.push_back(groups[i].first);
        for (int j = take[i]; j < groups[i].second; ++j)
          nu.push_back(groups[i].first);
      }
      std::sort(mu.rbegin(), mu.rend());
      std::sort(nu.rbegin(), nu.rend());
      out.emplace_back(std::move(mu), std::move(nu));
    }
    size_t i = 0;
    for (; i < groups.size(); ++i) {
      if (++take[i] <= groups[i].second) break;
      take[i] = 0;
    }
    if (i == groups.size()) break;
  }
  return out;
}

using ConnKey = std::tuple<int, std::vector<CycleType>, int>;

Rational count_connected_impl(int n, std::vector<CycleType> classes, int m,
                              bool override_bound,
                              std::map<ConnKey, Rational>& memo);

Rational count_all_impl(int n, const std::vector<CycleType>& classes, int m) {
  for (const auto& t : classes) {
    int sum = 0;
    for (int v : t) sum += v;
    if (sum != n) return Rational(0);
  }
  if (m > 0 && n < 2) return Rational(0);
  const SnData& d = sn_data(n);
  std::vector<Rational> a(d.types.size(), Rational(0));
  a[static_cast<size_t>(d.id_class)] = 1;
  for (const auto& t : classes) {
    auto it = d.type_id.find(t);
    if (it == d.type_id.end()) return Rational(0);
    a = convolve(d, a, it->second);
  }
  for (int j = 0; j < m; ++j) a = convolve(d, a, d.transposition_class);
  return a[static_cast<size_t>(d.id_class)];
}

Rational count_connected_impl(int n, std::vector<CycleType> classes, int m,
                              bool override_bound,
                              std::map<ConnKey, Rational>& memo) {
  std::sort(classes.begin(), classes.end());
  ConnKey key{n, classes, m};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Rational total = count_all_impl(n, classes, m);
  for (int s = 1; s <= n - 1; ++s) {
    // Per-class splittings: the orbit-side restriction of each prescribed
    // permutation is a permutation of s sheets.
    std::vector<std::vector<std::pair<CycleType, CycleType>>> options;
    bool feasible = true;
    for (const auto& t : classes) {
      options.push_back(type_splits(t, s));
      if (options.back().empty()) feasible = false;
    }
    if (!feasible) continue;
    std::vector<size_t> pick(options.size(), 0);
    while (true) {
      std::vector<CycleType> mu, nu;
      for (size_t i = 0; i < options.size(); ++i) {
        mu.push_back(options[i][pick[i]].first);
        nu.push_back(options[i][pick[i]].second);
      }
      for (int m1 = 0; m1 <= m; ++m1) {
        Rational conn = count_connected_impl(s, mu, m1, override_bound, memo);
        if (conn == 0) continue;
        Rational rest = count_all_impl(n - s, nu, m - m1);
        if (rest == 0) continue;
        total -= binomial(n - 1, s - 1) * binomial(m, m1) * conn * rest;
      }
      size_t i = 0;
      for (; i < options.size(); ++i) {
        if (++pick[i] < options[i].size()) break;
        pick[i] = 0;
      }
      if (i == options.size()) break;
    }
  }
  return memo.emplace(std::move(key), std::move(total)).first->second;
}

std::vector<CycleType> spec_classes(const FactorizationSpec& spec) {
  std::vector<CycleType> classes = spec.fixed_classes;
  std::sort(classes.begin(), classes.end());
  return classes;
}

}  // namespace

CycleType reduced_to_cycle_type(const ReducedPartition& alpha, int n) {
  CycleType t;
  int used = 0;
  for (int part : alpha.parts()) {
    t.push_back(part + 1);
    used += part + 1;
  }
  if (used > n)
    throw TooLarge("reduced_to_cycle_type: profile does not fit in degree " +
                   std::to_string(n));
  for (int i = used; i < n; ++i) t.push_back(1);
  std::sort(t.rbegin(), t.rend());
  return t;
}

Rational count_all(const FactorizationSpec& spec, bool override_bound) {
  check_bound(spec.n, override_bound);
  return count_all_impl(spec.n, spec_classes(spec), spec.num_transpositions);
}

Rational count_connected(const FactorizationSpec& spec, bool override_bound) {
  check_bound(spec.n, override_bound);
  static std::map<ConnKey, Rational> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  return count_connected_impl(spec.n, spec_classes(spec),
                              spec.num_transpositions, override_bound, memo);
}

namespace {

Rational count_naive(const FactorizationSpec& spec, bool transitive) {
  int n = spec.n;
  if (n > 5) throw ResourceBound("naive oracle supports n <= 5");
  const SnData& d = sn_data(n);
  std::vector<int> slot_class;
  for (const auto& t : spec.fixed_classes) {
    int sum = 0;
    for (int v : t) sum += v;
    auto it = d.type_id.find(t);
    if (sum != n || it == d.type_id.end()) return Rational(0);
    slot_class.push_back(it->second);
  }
  for (int j = 0; j < spec.num_transpositions; ++j) {
    if (d.transposition_class < 0) return Rational(0);
    slot_class.push_back(d.transposition_class);
  }
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  if (slot_class.empty())
    return Rational((!transitive || n == 1) ? 1 : 0);

  Rational count(0);
  std::vector<const Perm*> chosen(slot_class.size(), nullptr);
  // DFS over all slots but the last; the last factor is forced.
  std::function<void(size_t, const Perm&)> recurse = [&](size_t slot,
                                                         const Perm& prod) {
    if (slot + 1 == slot_class.size()) {
      // Need prod * last = id, so last = prod^{-1}.
      Perm last(n);
      for (int i = 0; i < n; ++i) last[prod[i]] = i;
      if (d.class_of(last) != slot_class[slot]) return;
      if (transitive) {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
          while (parent[x] != x) x = parent[x] = parent[parent[x]];
          return x;
        };
        auto unite = [&](const Perm& f) {
          for (int i = 0; i < n; ++i) parent[find(i)] = find(f[i]);
        };
        for (size_t j = 0; j + 1 < slot_class.size(); ++j) unite(*chosen[j]);
        unite(last);
        for (int i = 1; i < n; ++i)
          if (find(i) != find(0)) return;
      }
      count += 1;
      return;
    }
    for (const Perm& f : d.members[static_cast<size_t>(slot_class[slot])]) {
      chosen[slot] = &f;
      recurse(slot + 1, compose(prod, f));
    }
  };
  recurse(0, id);
  return count;
}

}  // namespace

Rational count_all_naive(const FactorizationSpec& spec) {
  return count_naive(spec, false);
}

Rational count_connected_naive(const FactorizationSpec& spec) {
  return count_naive(spec, true);
}

Rational hurwitz_oracle(const MultiPartition& label, int n, int g,
                        bool override_bound) {
  FactorizationSpec spec;
  spec.n = n;
  for (const auto& entry : label.entries())
    spec.fixed_classes.push_back(reduced_to_cycle_type(entry, n));
  spec.num_transpositions = m_count(label, n, g);
  spec.require_transitive = true;
  return count_connected(spec, override_bound) / factorial(n);
}

}  // namespace hurwitz

#include "hurwitz/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

ReducedPartition::ReducedPartition(std::vector<int> parts)
    : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw CalcError("ReducedPartition: parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int ReducedPartition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

bool ReducedPartition::operator<(const ReducedPartition& o) const {
  // Canonical order: lexicographically larger descending part vectors come
  // first, so that e.g. 2^1 precedes 1^2 (matching the label "2^1;1^2").
  return parts_ > o.parts_;
}

std::string ReducedPartition::to_string() const {
  if (parts_.empty()) return "";
  std::ostringstream os;
  // Ascending part values, each with its multiplicity: "1^2,2^1".
  std::vector<int> asc(parts_.rbegin(), parts_.rend());
  size_t i = 0;
  bool first = true;
  while (i < asc.size()) {
    size_t j = i;
    while (j < asc.size() && asc[j] == asc[i]) ++j;
    if (!first) os << ",";
    first = false;
    os << asc[i] << "^" << (j - i);
    i = j;
  }
  return os.str();
}

ReducedPartition simple_profile() { return ReducedPartition({1}); }

MultiPartition::MultiPartition(std::vector<ReducedPartition> ps)
    : entries_(std::move(ps)) {
  for (const auto& p : entries_)
    if (p.empty()) throw CalcError("MultiPartition: empty entry");
  std::sort(entries_.begin(), entries_.end());
}

int MultiPartition::weight() const {
  int w = 0;
  for (const auto& e : entries_) w += e.weight();
  return w;
}

std::string MultiPartition::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ";";
    os << entries_[i].to_string();
  }
  return os.str();
}

long aut_order(const ReducedPartition& a) {
  long result = 1;
  const auto& p = a.parts();
  size_t i = 0;
  while (i < p.size()) {
    size_t j = i;
    long f = 1, m = 0;
    while (j < p.size() && p[j] == p[i]) {
      ++j;
      ++m;
      f *= m;
    }
    result *= f;
    i = j;
  }
  return result;
}

long aut_set_order(const MultiPartition& m) {
  long result = 1;
  const auto& e = m.entries();
  size_t i = 0;
  while (i < e.size()) {
    size_t j = i;
    long f = 1, cnt = 0;
    while (j < e.size() && e[j] == e[i]) {
      ++j;
      ++cnt;
      f *= cnt;
    }
    result *= f;
    i = j;
  }
  return result;
}

int weight(const ReducedPartition& a) { return a.weight(); }

int codim(const MultiPartition& m) {
  return m.weight() - static_cast<int>(m.size());
}

int m_count(const MultiPartition& m, int n, int g) {
  int r = 2 * n + 2 * g - 2 - m.weight();
  if (r < 0)
    throw NegativeSimplePoints("m_count: 2n+2g-2 - total weight = " +
                               std::to_string(r));
  return r;
}

void SSum::add(const MultiPartition& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

SSum s_var(const MultiPartition& m) {
  SSum s;
  s.add(m, Rational(1));
  return s;
}

namespace {

ReducedPartition union_parts(const ReducedPartition& a,
                             const ReducedPartition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return ReducedPartition(parts);
}

// Enumerate all partial matchings between the (labeled) entries of I and J;
// matched pairs are united. Each matching contributes once.
void merge_rec(const std::vector<ReducedPartition>& is,
               const std::vector<ReducedPartition>& js, size_t i,
               std::vector<int>& match,  // per I-entry: J index or -1
               std::vector<bool>& used, SSum& out, const Rational& coef) {
  if (i == is.size()) {
    std::vector<ReducedPartition> entries;
    for (size_t a = 0; a < is.size(); ++a) {
      if (match[a] < 0)
        entries.push_back(is[a]);
      else
        entries.push_back(union_parts(is[a], js[static_cast<size_t>(match[a])]));
    }
    for (size_t b = 0; b < js.size(); ++b)
      if (!used[b]) entries.push_back(js[b]);
    out.add(MultiPartition(entries), coef);
    return;
  }
  match[i] = -1;
  merge_rec(is, js, i + 1, match, used, out, coef);
  for (size_t b = 0; b < js.size(); ++b) {
    if (used[b]) continue;
    used[b] = true;
    match[i] = static_cast<int>(b);
    merge_rec(is, js, i + 1, match, used, out, coef);
    used[b] = false;
  }
  match[i] = -1;
}

}  // namespace

SSum s_multiply(const SSum& a, const SSum& b) {
  SSum out;
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      std::vector<int> match(ma.size(), -1);
      std::vector<bool> used(mb.size(), false);
      merge_rec(ma.entries(), mb.entries(), 0, match, used, out, ca * cb);
    }
  }
  return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

ReducedPartition parse_partition(const std::string& text) {
  std::vector<int> parts;
  // Part groups are separated by ',' or whitespace: "1^2,2^1", "1^2 2^1".
  std::string norm = text;
  std::replace(norm.begin(), norm.end(), ' ', ',');
  for (const std::string& raw : split(norm, ',')) {
    std::string g = trim(raw);
    if (g.empty()) continue;
    size_t caret = g.find('^');
    try {
      if (caret == std::string::npos) {
        parts.push_back(std::stoi(g));
      } else {
        int value = std::stoi(g.substr(0, caret));
        int mult = std::stoi(g.substr(caret + 1));
        if (mult < 0) throw ParseError("negative multiplicity");
        for (int i = 0; i < mult; ++i) parts.push_back(value);
      }
    } catch (const std::invalid_argument&) {
      throw ParseError("bad partition group '" + g + "'");
    } catch (const std::out_of_range&) {
      throw ParseError("bad partition group '" + g + "'");
    }
  }
  if (parts.empty()) throw ParseError("empty partition '" + text + "'");
  return ReducedPartition(parts);
}

MultiPartition parse_label(const std::string& text) {
  std::string body = trim(text);
  if (body.empty()) return MultiPartition();
  std::vector<ReducedPartition> entries;
  for (const std::string& piece : split(body, ';'))
    entries.push_back(parse_partition(piece));
  return MultiPartition(entries);
}

}  // namespace hurwitz

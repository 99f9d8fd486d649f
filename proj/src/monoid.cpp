#include "rmon/monoid.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rmon/guards.hpp"

namespace rmon {

Elem Monoid::elem_by_label(const std::string& s) const {
  for (Elem a = 0; a < size; ++a) {
    if (label(a) == s) return a;
  }
  throw std::invalid_argument("no element labelled '" + s + "' in " + name);
}

std::string ValidationReport::summary() const {
  if (violations.empty()) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.kind + " at (" + std::to_string(v.witness[0]) + "," +
           std::to_string(v.witness[1]) + "," + std::to_string(v.witness[2]) + "): " + v.detail;
  }
  return out;
}

ValidationReport validate(const Monoid& m) {
  ValidationReport rep;
  auto bad = [&](std::string kind, int i, int j, int k, std::string detail) {
    rep.violations.push_back({std::move(kind), {i, j, k}, std::move(detail)});
  };
  if (m.size <= 0) {
    bad("shape", -1, -1, -1, "size must be positive");
    return rep;
  }
  if ((int)m.table.size() != m.size) {
    bad("shape", (int)m.table.size(), -1, -1, "table has wrong row count");
    return rep;
  }
  for (int i = 0; i < m.size; ++i) {
    if ((int)m.table[i].size() != m.size) {
      bad("shape", i, (int)m.table[i].size(), -1, "ragged row");
      return rep;
    }
  }
  if (!m.labels.empty() && (int)m.labels.size() != m.size) {
    bad("shape", (int)m.labels.size(), -1, -1, "labels must be empty or one per element");
  }
  bool in_range = true;
  for (int i = 0; i < m.size; ++i) {
    for (int j = 0; j < m.size; ++j) {
      if (m.table[i][j] < 0 || m.table[i][j] >= m.size) {
        bad("range", i, j, -1, "entry " + std::to_string(m.table[i][j]) + " out of range");
        in_range = false;
      }
    }
  }
  if (m.identity < 0 || m.identity >= m.size) {
    bad("range", m.identity, -1, -1, "identity index out of range");
    return rep;
  }
  if (!in_range) return rep;
  for (int i = 0; i < m.size; ++i) {
    if (m.mul(m.identity, i) != i) bad("identity", m.identity, i, -1, "1*a != a");
    if (m.mul(i, m.identity) != i) bad("identity", i, m.identity, -1, "a*1 != a");
  }
  for (int i = 0; i < m.size; ++i) {
    for (int j = 0; j < m.size; ++j) {
      for (int k = 0; k < m.size; ++k) {
        if (m.mul(m.mul(i, j), k) != m.mul(i, m.mul(j, k))) {
          bad("associativity", i, j, k, "(ab)c != a(bc)");
          if (rep.violations.size() > 16) return rep;  // enough evidence
        }
      }
    }
  }
  return rep;
}

Monoid family_gowers(int n) {
  if (n <= 0) throw std::invalid_argument("family_gowers: n must be positive");
  Monoid m;
  m.name = "G_" + std::to_string(n);
  m.size = n;
  m.identity = 0;
  m.table.assign(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.table[i][j] = std::min(i + j, n - 1);
    m.labels.push_back(std::to_string(i));
  }
  return m;
}

std::vector<std::vector<int>> i_carrier(int n) {
  // Value sequences with f(0)=0 and f(i+1) in {f(i), f(i)+1}, generated in
  // lexicographic order.
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int step = 0; step <= 1; ++step) {
      int v = cur[pos - 1] + step;
      if (v >= n) break;
      cur[pos] = v;
      self(self, pos + 1);
    }
  };
  if (n == 1) {
    out.push_back(cur);
  } else {
    rec(rec, 1);
  }
  return out;
}

std::vector<int> i_identity_seq(int n) {
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = i;
  return s;
}

std::vector<int> i_t_seq(int n) {
  std::vector<int> s(n, 0);
  for (int i = 1; i < n; ++i) s[i] = i - 1;
  return s;
}

std::vector<int> i_f_seq(const std::vector<int>& s) {
  int n = (int)s.size();
  std::vector<int> r(n, 0);
  for (int i = 1; i < n; ++i) r[i] = s[i - 1] + 1;
  return r;
}

std::vector<int> i_embed_seq(const std::vector<int>& s) {
  std::vector<int> r(s.size() + 1, 0);
  for (size_t i = 0; i < s.size(); ++i) r[i + 1] = s[i] + 1;
  return r;
}

std::vector<int> i_compose(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
  return r;
}

int i_index(const std::vector<std::vector<int>>& carrier, const std::vector<int>& seq) {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), seq);
  if (it == carrier.end() || *it != seq) {
    throw std::logic_error("i_index: sequence not in carrier");
  }
  return (int)(it - carrier.begin());
}

Monoid family_I(int n) {
  if (n <= 0) throw std::invalid_argument("family_I: n must be positive");
  if (n > 10) throw std::invalid_argument("family_I: digit labels need n <= 10");
  guard(1LL << (n - 1), 1 << 10, "family_I size 2^(n-1)");
  auto carrier = i_carrier(n);
  Monoid m;
  m.name = "I_" + std::to_string(n);
  m.size = (int)carrier.size();
  m.identity = i_index(carrier, i_identity_seq(n));
  m.table.assign(m.size, std::vector<Elem>(m.size));
  for (int a = 0; a < m.size; ++a) {
    for (int b = 0; b < m.size; ++b) {
      m.table[a][b] = i_index(carrier, i_compose(carrier[a], carrier[b]));
    }
    std::string lab;
    for (int v : carrier[a]) lab += char('0' + v);
    m.labels.push_back(lab);
  }
  return m;
}

Monoid family_J(const std::vector<std::string>& a_labels,
                const std::vector<std::string>& b_labels) {
  std::set<std::string> seen{"1"};
  for (const auto& s : a_labels) {
    if (!seen.insert(s).second) {
      throw std::invalid_argument("family_J: duplicate or reserved label '" + s + "'");
    }
  }
  for (const auto& s : b_labels) {
    if (!seen.insert(s).second) {
      throw std::invalid_argument("family_J: duplicate or reserved label '" + s + "'");
    }
  }
  int na = (int)a_labels.size(), nb = (int)b_labels.size();
  Monoid m;
  m.name = "J(" + std::to_string(na) + "," + std::to_string(nb) + ")";
  m.size = 1 + na + nb;
  m.identity = 0;
  m.labels.push_back("1");
  for (const auto& s : a_labels) m.labels.push_back(s);
  for (const auto& s : b_labels) m.labels.push_back(s);
  auto is_a = [&](Elem e) { return e >= 1 && e <= na; };
  m.table.assign(m.size, std::vector<Elem>(m.size));
  for (Elem c = 0; c < m.size; ++c) {
    for (Elem d = 0; d < m.size; ++d) {
      if (c == 0) {
        m.table[c][d] = d;
      } else if (d == 0) {
        m.table[c][d] = c;
      } else if (is_a(d)) {
        m.table[c][d] = c;   // right A-factors are absorbed
      } else {
        m.table[c][d] = d;   // right B-factors win
      }
    }
  }
  return m;
}

std::vector<Elem> principal_right_ideal(const Monoid& m, Elem a) {
  std::set<Elem> ideal;
  for (Elem x = 0; x < m.size; ++x) ideal.insert(m.mul(a, x));
  return {ideal.begin(), ideal.end()};
}

std::vector<std::vector<Elem>> r_classes(const Monoid& m) {
  std::map<std::vector<Elem>, std::vector<Elem>> by_ideal;
  for (Elem a = 0; a < m.size; ++a) by_ideal[principal_right_ideal(m, a)].push_back(a);
  std::vector<std::vector<Elem>> out;
  for (auto& [ideal, block] : by_ideal) out.push_back(block);  // blocks already sorted
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

bool is_r_trivial(const Monoid& m) {
  for (const auto& block : r_classes(m)) {
    if (block.size() > 1) return false;
  }
  return true;
}

bool is_almost_r_trivial(const Monoid& m) {
  for (const auto& block : r_classes(m)) {
    if (block.size() == 1) continue;
    for (Elem b : block) {
      for (Elem a = 0; a < m.size; ++a) {
        if (m.mul(a, b) != b) return false;
      }
    }
  }
  return true;
}

Monoid submonoid(const Monoid& m, std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  for (Elem e : elems) {
    if (e < 0 || e >= m.size) throw std::invalid_argument("submonoid: element out of range");
  }
  if (!std::binary_search(elems.begin(), elems.end(), m.identity)) {
    throw std::invalid_argument("submonoid: subset must contain the identity");
  }
  std::vector<int> index(m.size, -1);
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = (int)i;
  Monoid s;
  s.name = m.name + "|" + std::to_string(elems.size());
  s.size = (int)elems.size();
  s.identity = index[m.identity];
  s.table.assign(s.size, std::vector<Elem>(s.size));
  for (int i = 0; i < s.size; ++i) {
    for (int j = 0; j < s.size; ++j) {
      Elem p = m.mul(elems[i], elems[j]);
      if (index[p] < 0) {
        throw ClosureViolation(elems[i], elems[j],
                               "submonoid: product " + m.label(elems[i]) + "*" +
                                   m.label(elems[j]) + " = " + m.label(p) +
                                   " escapes the subset");
      }
      s.table[i][j] = index[p];
    }
  }
  if (!m.labels.empty()) {
    for (Elem e : elems) s.labels.push_back(m.labels[e]);
  }
  return s;
}

bool is_endomorphism(const Monoid& m, const std::vector<Elem>& f) {
  if ((int)f.size() != m.size) throw std::invalid_argument("is_endomorphism: wrong table size");
  for (Elem v : f) {
    if (v < 0 || v >= m.size) throw std::invalid_argument("is_endomorphism: image out of range");
  }
  if (f[m.identity] != m.identity) return false;
  for (Elem a = 0; a < m.size; ++a) {
    for (Elem b = 0; b < m.size; ++b) {
      if (f[m.mul(a, b)] != m.mul(f[a], f[b])) return false;
    }
  }
  return true;
}

}  // namespace rmon

#include "rmon/mu_tower.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rmon/guards.hpp"
#include "rmon/order.hpp"

namespace rmon {

ValidationReport validate(const MuTriple& tr) {
  ValidationReport rep = validate(tr.monoid);
  const Monoid& m = tr.monoid;
  if (!rep.ok()) return rep;
  if (tr.t < 0 || tr.t >= m.size) {
    rep.violations.push_back({"designated", {tr.t, -1, -1}, "t out of range"});
    return rep;
  }
  if ((int)tr.endo.size() != m.size) {
    rep.violations.push_back({"endomorphism", {-1, -1, -1}, "endo has wrong length"});
    return rep;
  }
  if (!is_endomorphism(m, tr.endo)) {
    rep.violations.push_back({"endomorphism", {-1, -1, -1}, "endo is not an endomorphism"});
  }
  for (Elem s = 0; s < m.size; ++s) {
    if (m.mul(s, tr.t) != m.mul(tr.t, tr.endo[s])) {
      rep.violations.push_back(
          {"designated", {s, tr.t, -1},
           m.label(s) + "*t != t*f(" + m.label(s) + ")"});
      break;
    }
  }
  return rep;
}

MuTriple mu(const MuTriple& tr, const std::string& tau_label) {
  {
    ValidationReport in = validate(tr);
    if (!in.ok()) {
      throw std::invalid_argument("mu: bad input triple: " + in.summary());
    }
  }
  const Monoid& m = tr.monoid;
  for (Elem s = 0; s < m.size; ++s) {
    if (m.label(s) == tau_label) {
      throw std::invalid_argument("mu: label '" + tau_label + "' already in use");
    }
  }
  int n = 2 * m.size;
  // Index encoding: s stays s, tau*s becomes m.size + s.
  auto enc = [&](int e, Elem s) { return e ? m.size + s : s; };
  auto phi = [&](int e, Elem s) {  // phi(tau^e s) = t^e f(s), in the base
    Elem fs = tr.endo[s];
    return e ? m.mul(tr.t, fs) : fs;
  };
  MuTriple out;
  out.base_size = m.size;
  out.monoid.name = "mu(" + m.name + ")";
  out.monoid.size = n;
  out.monoid.identity = m.identity;
  out.monoid.table.assign(n, std::vector<Elem>(n, 0));
  for (int e1 = 0; e1 <= 1; ++e1) {
    for (Elem s1 = 0; s1 < m.size; ++s1) {
      for (int e2 = 0; e2 <= 1; ++e2) {
        for (Elem s2 = 0; s2 < m.size; ++s2) {
          Elem prod = e2 == 0 ? enc(e1, m.mul(s1, s2))
                              : enc(1, m.mul(phi(e1, s1), s2));
          out.monoid.table[enc(e1, s1)][enc(e2, s2)] = prod;
        }
      }
    }
  }
  out.monoid.labels.resize(n);
  for (Elem s = 0; s < m.size; ++s) {
    out.monoid.labels[s] = m.label(s);
    out.monoid.labels[m.size + s] =
        s == m.identity ? tau_label : tau_label + "*" + m.label(s);
  }
  out.t = enc(1, m.identity);
  out.endo.resize(n);
  for (Elem s = 0; s < m.size; ++s) {
    out.endo[s] = phi(0, s);
    out.endo[m.size + s] = phi(1, s);
  }
  ValidationReport check = validate(out);
  if (!check.ok()) {
    throw std::logic_error("mu: extension failed verification: " + check.summary());
  }
  return out;
}

MuTriple tower(int k) {
  if (k < 1) throw std::invalid_argument("tower: height < 1");
  guard(k, 8, "tower height");
  MuTriple tr;
  tr.monoid.name = "tower(1)";
  tr.monoid.size = 1;
  tr.monoid.identity = 0;
  tr.monoid.table = {{0}};
  tr.monoid.labels = {"1"};
  tr.t = 0;
  tr.endo = {0};
  for (int j = 2; j <= k; ++j) {
    tr = mu(tr, "t" + std::to_string(j));
    tr.monoid.name = "tower(" + std::to_string(j) + ")";
  }
  return tr;
}

IsoReport iso_to_concrete(int k) {
  IsoReport rep;
  MuTriple tw = tower(k);
  Monoid c = family_I(k);
  auto carrier = i_carrier(k);

  // Image sequences by the same recursion that built the tower: the plain
  // half embeds, the tau half is t_j composed with the embedding.
  std::vector<std::vector<int>> seqs = {{0}};
  for (int j = 2; j <= k; ++j) {
    std::vector<std::vector<int>> next;
    next.reserve(2 * seqs.size());
    for (const auto& s : seqs) next.push_back(i_embed_seq(s));
    auto t = i_t_seq(j);
    size_t half = seqs.size();
    for (size_t i = 0; i < half; ++i) next.push_back(i_compose(t, next[i]));
    seqs = std::move(next);
  }
  if ((int)seqs.size() != tw.monoid.size || tw.monoid.size != c.size) {
    rep.ok = false;
    rep.detail = "size mismatch between tower and concrete family";
    return rep;
  }
  std::vector<Elem> iso(seqs.size());
  std::set<Elem> seen;
  for (size_t i = 0; i < seqs.size(); ++i) {
    iso[i] = i_index(carrier, seqs[i]);
    if (!seen.insert(iso[i]).second) {
      rep.ok = false;
      rep.detail = "image not injective at " + tw.monoid.label((Elem)i);
      return rep;
    }
  }
  for (Elem x = 0; x < tw.monoid.size; ++x) {
    for (Elem y = 0; y < tw.monoid.size; ++y) {
      if (iso[tw.monoid.mul(x, y)] != c.mul(iso[x], iso[y])) {
        rep.ok = false;
        rep.detail = "not multiplicative at (" + tw.monoid.label(x) + ", " +
                     tw.monoid.label(y) + ")";
        return rep;
      }
    }
  }
  if (iso[tw.t] != i_index(carrier, i_t_seq(k))) {
    rep.ok = false;
    rep.detail = "designated element does not map to t_" + std::to_string(k);
    return rep;
  }
  for (Elem x = 0; x < tw.monoid.size; ++x) {
    if (seqs[tw.endo[x]] != i_f_seq(seqs[x])) {
      rep.ok = false;
      rep.detail = "endomorphisms disagree at " + tw.monoid.label(x);
      return rep;
    }
  }
  if (k >= 2) {
    for (const auto& s : i_carrier(k - 1)) {
      if (i_f_seq(i_embed_seq(s)) != i_embed_seq(i_f_seq(s))) {
        rep.ok = false;
        rep.detail = "f_" + std::to_string(k) + " does not restrict to f_" +
                     std::to_string(k - 1) + " on the embedded copy";
        return rep;
      }
    }
  }
  rep.detail = std::to_string(c.size) + " elements, isomorphism verified";
  return rep;
}

namespace {

// tau^e s decomposition of g in I_{m}: e = 1 iff g(1) = 0; the base drops
// the leading slot (minus the embedding shift when e = 0).
bool leq_recursive(const std::vector<int>& g1, const std::vector<int>& g2) {
  if (g1.size() <= 1) return true;
  int e1 = g1[1] == 0 ? 1 : 0;
  int e2 = g2[1] == 0 ? 1 : 0;
  if (e2 > e1) return false;
  auto base = [](const std::vector<int>& g, int e) {
    std::vector<int> s(g.size() - 1);
    for (size_t i = 1; i < g.size(); ++i) s[i - 1] = e ? g[i] : g[i] - 1;
    return s;
  };
  std::vector<int> s1 = base(g1, e1);
  std::vector<int> s2 = base(g2, e2);
  if (e1 > e2) s2 = i_f_seq(s2);
  return leq_recursive(s1, s2);
}

}  // namespace

RecursionReport order_recursion_check(int n) {
  if (n < 1) throw std::invalid_argument("order_recursion_check: n < 1");
  RecursionReport rep;
  Monoid c = family_I(n + 1);
  auto carrier = i_carrier(n + 1);
  std::vector<std::vector<Elem>> ideals(c.size);
  for (Elem b = 0; b < c.size; ++b) ideals[b] = principal_right_ideal(c, b);
  for (Elem a = 0; a < c.size; ++a) {
    for (Elem b = 0; b < c.size; ++b) {
      bool direct = std::binary_search(ideals[b].begin(), ideals[b].end(), a);
      bool rec = leq_recursive(carrier[a], carrier[b]);
      ++rep.pairs;
      if (direct != rec) {
        rep.ok = false;
        rep.detail = "disagree at (" + c.label(a) + ", " + c.label(b) + "): direct " +
                     (direct ? "<=" : "!<=") + ", recursion " + (rec ? "<=" : "!<=");
        return rep;
      }
    }
  }
  rep.detail = std::to_string(rep.pairs) + " pairs agree";
  return rep;
}

HasseReport i4_hasse_check() {
  HasseReport rep;
  Monoid c = family_I(4);
  auto carrier = i_carrier(4);
  auto idx = [&](std::vector<int> seq) { return i_index(carrier, seq); };

  // a_i are the embeddings of the I_3 linear chain; t4 is the new generator.
  Elem one = idx({0, 1, 2, 3});
  Elem a1 = idx({0, 1, 2, 2});
  Elem a2 = idx({0, 1, 1, 2});
  Elem a3 = idx({0, 1, 1, 1});
  Elem t4 = idx({0, 0, 1, 2});
  Elem t4a1 = c.mul(t4, a1);
  Elem t4a2 = c.mul(t4, a2);
  Elem t4a3 = c.mul(t4, a3);

  std::vector<std::pair<Elem, Elem>> edges = {
      {a3, a2}, {a2, a1}, {a1, one},          // upper chain
      {t4a3, t4a2}, {t4a2, t4a1}, {t4a1, t4},  // lower chain
      {t4, a1}, {t4a1, a3}};                   // glue
  int n = c.size;
  std::vector<std::vector<char>> closure(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) closure[i][i] = 1;
  for (auto [u, v] : edges) closure[u][v] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (closure[i][k] && closure[k][j]) closure[i][j] = 1;
      }
    }
  }
  std::vector<std::vector<Elem>> ideals(n);
  for (Elem b = 0; b < n; ++b) ideals[b] = principal_right_ideal(c, b);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      bool direct = std::binary_search(ideals[b].begin(), ideals[b].end(), a);
      if (direct != (bool)closure[a][b]) {
        rep.ok = false;
        rep.detail = "order differs from the glued chains at (" + c.label(a) + ", " +
                     c.label(b) + ")";
        return rep;
      }
    }
  }
  if (closure[t4][a2] || closure[a2][t4]) {
    rep.ok = false;
    rep.detail = "t4 and a2 should be incomparable";
    return rep;
  }

  auto check_sub = [&](std::vector<Elem> keep, const std::string& which) {
    Monoid sub = submonoid(c, keep);  // throws ClosureViolation if not closed
    RamseyResult r = decide_ramsey(sub);
    if (r.verdict != RamseyVerdict::Ramsey) {
      rep.ok = false;
      rep.detail = which + " is not Ramsey: " + r.note;
    }
  };
  std::vector<Elem> m1, m2;
  for (Elem s = 0; s < n; ++s) {
    if (s != t4) m1.push_back(s);
    if (s != a2 && s != a3) m2.push_back(s);
  }
  try {
    check_sub(m1, "I_4 minus {t4}");
    if (rep.ok) check_sub(m2, "I_4 minus {a2,a3}");
  } catch (const ClosureViolation& e) {
    rep.ok = false;
    rep.detail = std::string("submonoid not closed: ") + e.what();
  }
  if (rep.ok) rep.detail = "order, incomparability and both submonoids verified";
  return rep;
}

LemmaReport lemma_tech_check(const MuTriple& ext) {
  if (ext.base_size <= 0) {
    throw std::invalid_argument("lemma_tech_check: triple was not built by mu");
  }
  LemmaReport rep;
  const Monoid& n = ext.monoid;
  int m = ext.base_size;
  for (Elem s = 0; s < m; ++s) {
    for (Elem sig = 0; sig < n.size; ++sig) {
      Elem lhs = n.mul(m + s, sig);  // (tau*s)*sigma
      bool found = false;
      for (Elem sp = 0; sp < m && !found; ++sp) {
        found = lhs == m + n.mul(s, sp);
      }
      ++rep.checks;
      if (!found) {
        rep.ok = false;
        rep.detail = "(tau*" + n.label(s) + ")*" + n.label(sig) +
                     " is not of the form tau*(" + n.label(s) + "*s')";
        return rep;
      }
    }
  }
  rep.detail = std::to_string(rep.checks) + " products covered";
  return rep;
}

}  // namespace rmon

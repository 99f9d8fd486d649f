#include "rmon/order.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rmon/guards.hpp"

namespace rmon {

ValidationReport validate(const ActedPoset& p) {
  ValidationReport rep;
  auto bad = [&](std::string kind, int i, int j, int k, std::string detail) {
    rep.violations.push_back({std::move(kind), {i, j, k}, std::move(detail)});
  };
  int n = p.points();
  if (n == 0) {
    bad("shape", -1, -1, -1, "empty poset");
    return rep;
  }
  for (int i = 0; i < n; ++i) {
    if ((int)p.leq[i].size() != n) {
      bad("shape", i, -1, -1, "ragged leq row");
      return rep;
    }
  }
  if ((int)p.action.size() != p.monoid.size) {
    bad("shape", (int)p.action.size(), -1, -1, "one action row per monoid element expected");
    return rep;
  }
  for (int a = 0; a < p.monoid.size; ++a) {
    if ((int)p.action[a].size() != n) {
      bad("shape", a, -1, -1, "ragged action row");
      return rep;
    }
    for (int x = 0; x < n; ++x) {
      if (p.action[a][x] < 0 || p.action[a][x] >= n) {
        bad("range", a, x, -1, "action image out of range");
        return rep;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!p.le(i, i)) bad("order", i, i, -1, "not reflexive");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && p.le(i, j) && p.le(j, i)) bad("order", i, j, -1, "not antisymmetric");
      for (int k = 0; k < n; ++k) {
        if (p.le(i, j) && p.le(j, k) && !p.le(i, k)) bad("order", i, j, k, "not transitive");
      }
    }
  }
  const Monoid& m = p.monoid;
  for (int a = 0; a < m.size; ++a) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (p.le(x, y) && !p.le(p.act(a, x), p.act(a, y))) {
          bad("monotone", a, x, y, "action does not preserve <=");
        }
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    if (p.act(m.identity, x) != x) bad("action", m.identity, x, -1, "identity must act trivially");
  }
  for (int a = 0; a < m.size && rep.violations.size() < 64; ++a) {
    for (int b = 0; b < m.size; ++b) {
      for (int x = 0; x < n; ++x) {
        if (p.act(m.mul(a, b), x) != p.act(a, p.act(b, x))) {
          bad("action", a, b, x, "(ab)x != a(bx)");
        }
      }
    }
  }
  return rep;
}

XPoset x_of(const Monoid& m) {
  std::map<std::vector<Elem>, std::vector<Elem>> classes;
  for (Elem a = 0; a < m.size; ++a) classes[principal_right_ideal(m, a)].push_back(a);
  XPoset x;
  x.poset.monoid = m;
  x.elem_class.assign(m.size, -1);
  for (auto& [ideal, gens] : classes) {  // map order = lexicographic on ideals
    int p = (int)x.ideals.size();
    x.ideals.push_back(ideal);
    x.reps.push_back(gens.front());
    for (Elem g : gens) x.elem_class[g] = p;
    x.poset.point_labels.push_back("[" + m.label(gens.front()) + "]");
  }
  int n = (int)x.ideals.size();
  x.poset.leq.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      x.poset.leq[i][j] =
          std::includes(x.ideals[j].begin(), x.ideals[j].end(),
                        x.ideals[i].begin(), x.ideals[i].end());
    }
  }
  // a * bM = (ab)M; the class of ab does not depend on the chosen b.
  x.poset.action.assign(m.size, std::vector<int>(n));
  for (Elem a = 0; a < m.size; ++a) {
    for (int p = 0; p < n; ++p) {
      x.poset.action[a][p] = x.elem_class[m.mul(a, x.reps[p])];
    }
  }
  return x;
}

std::optional<StrongnessWitness> strongness_witness(const ActedPoset& p) {
  int n = p.points();
  for (int y = 0; y < n; ++y) {
    for (Elem a = 0; a < p.monoid.size; ++a) {
      std::set<int> lhs, rhs;
      for (int x = 0; x < n; ++x) {
        if (p.le(x, y)) lhs.insert(p.act(a, x));
        if (p.le(x, p.act(a, y))) rhs.insert(x);
      }
      if (lhs != rhs) {
        return StrongnessWitness{
            y, a,
            "{a*x : x <= y} != {x : x <= a*y} for y=" + p.point_labels[y] +
                ", a=" + p.monoid.label(a)};
      }
    }
  }
  return std::nullopt;
}

ChainForest fr(const ActedPoset& base) {
  int n = base.points();
  guard(n, 20, "fr: base poset points");
  ChainForest f;
  f.poset.monoid = base.monoid;
  // Enumerate subsets; keep the linearly ordered ones, sorted by the base
  // order (every chain has a unique ascending listing).
  std::vector<std::vector<int>> chains;
  for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) members.push_back(i);
    }
    bool chain = true;
    for (size_t i = 0; i < members.size() && chain; ++i) {
      for (size_t j = i + 1; j < members.size(); ++j) {
        if (!base.comparable(members[i], members[j])) {
          chain = false;
          break;
        }
      }
    }
    if (!chain) continue;
    std::sort(members.begin(), members.end(),
              [&](int a, int b) { return base.lt(a, b); });
    chains.push_back(std::move(members));
  }
  std::sort(chains.begin(), chains.end());
  f.chains = std::move(chains);
  int cn = (int)f.chains.size();
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < cn; ++i) index[f.chains[i]] = i;
  for (int i = 0; i < cn; ++i) {
    std::string lab = "{";
    for (size_t k = 0; k < f.chains[i].size(); ++k) {
      if (k) lab += ",";
      lab += base.point_labels[f.chains[i][k]];
    }
    lab += "}";
    f.poset.point_labels.push_back(lab);
  }
  // End-extension: with both sides stored ascending, x <= y iff x is an
  // initial segment of y.
  f.poset.leq.assign(cn, std::vector<char>(cn, 0));
  for (int i = 0; i < cn; ++i) {
    for (int j = 0; j < cn; ++j) {
      const auto& a = f.chains[i];
      const auto& b = f.chains[j];
      f.poset.leq[i][j] =
          a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
    }
  }
  f.poset.action.assign(base.monoid.size, std::vector<int>(cn));
  for (Elem a = 0; a < base.monoid.size; ++a) {
    for (int i = 0; i < cn; ++i) {
      std::set<int> image;
      for (int x : f.chains[i]) image.insert(base.act(a, x));
      std::vector<int> img(image.begin(), image.end());
      std::sort(img.begin(), img.end(), [&](int u, int v) { return base.lt(u, v); });
      auto it = index.find(img);
      if (it == index.end()) {
        throw std::logic_error("fr: image of a chain is not a chain (action not monotone?)");
      }
      f.poset.action[a][i] = it->second;
    }
  }
  return f;
}

ChainForest y_of(const Monoid& m) { return fr(x_of(m).poset); }

std::vector<int> pi_max_map(const ChainForest& f) {
  std::vector<int> out;
  out.reserve(f.chains.size());
  for (const auto& c : f.chains) out.push_back(c.back());
  return out;
}

EpimorphismCheck check_pi_max(const ChainForest& f, const ActedPoset& base) {
  auto pi = pi_max_map(f);
  int cn = (int)f.chains.size(), n = base.points();
  std::vector<char> hit(n, 0);
  for (int v : pi) hit[v] = 1;
  for (int x = 0; x < n; ++x) {
    if (!hit[x]) return {false, "pi_max not onto: misses " + base.point_labels[x]};
  }
  for (Elem a = 0; a < base.monoid.size; ++a) {
    for (int i = 0; i < cn; ++i) {
      if (pi[f.poset.act(a, i)] != base.act(a, pi[i])) {
        return {false, "pi_max not equivariant at a=" + base.monoid.label(a) +
                           ", chain " + f.poset.point_labels[i]};
      }
    }
  }
  // Base order = image of the chain order.
  for (int i = 0; i < cn; ++i) {
    for (int j = 0; j < cn; ++j) {
      if (f.poset.le(i, j) && !base.le(pi[i], pi[j])) {
        return {false, "pi_max not order preserving"};
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!base.le(x, y)) continue;
      bool realized = false;
      for (int i = 0; i < cn && !realized; ++i) {
        for (int j = 0; j < cn; ++j) {
          if (pi[i] == x && pi[j] == y && f.poset.le(i, j)) {
            realized = true;
            break;
          }
        }
      }
      if (!realized) {
        return {false, "base pair " + base.point_labels[x] + " <= " + base.point_labels[y] +
                           " not realized by comparable chains"};
      }
    }
  }
  return {true, ""};
}

std::optional<std::pair<int, int>> incomparable_pair(const ActedPoset& p) {
  for (int i = 0; i < p.points(); ++i) {
    for (int j = i + 1; j < p.points(); ++j) {
      if (!p.comparable(i, j)) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

std::vector<int> maximal_elements(const ActedPoset& p) {
  std::vector<int> out;
  for (int i = 0; i < p.points(); ++i) {
    bool maximal = true;
    for (int j = 0; j < p.points(); ++j) {
      if (p.lt(i, j)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

int default_maximal_chain(const ChainForest& f) {
  auto maxima = maximal_elements(f.poset);
  int best = -1;
  for (int i : maxima) {
    if (best < 0 || f.chains[i].size() > f.chains[best].size() ||
        (f.chains[i].size() == f.chains[best].size() && f.chains[i] < f.chains[best])) {
      best = i;
    }
  }
  return best;
}

std::string to_string(RamseyVerdict v) {
  switch (v) {
    case RamseyVerdict::Ramsey: return "Ramsey";
    case RamseyVerdict::NotRamsey: return "NotRamsey";
    default: return "Undetermined";
  }
}

RamseyResult decide_ramsey(const Monoid& m) {
  XPoset x = x_of(m);
  if (auto pair = incomparable_pair(x.poset)) {
    Elem a = x.reps[pair->first], b = x.reps[pair->second];
    return {RamseyVerdict::NotRamsey, std::make_pair(a, b),
            "classes [" + m.label(a) + "], [" + m.label(b) + "] are incomparable in X(M)"};
  }
  if (is_almost_r_trivial(m)) {
    return {RamseyVerdict::Ramsey, std::nullopt, "X(M) linear and M almost R-trivial"};
  }
  return {RamseyVerdict::Undetermined, std::nullopt,
          "X(M) linear but M not almost R-trivial; criterion does not apply"};
}

}  // namespace rmon

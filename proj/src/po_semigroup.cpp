#include "rmon/po_semigroup.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace rmon {

static void check_letters(const ActedPoset& p, const std::vector<int>& seq) {
  for (int x : seq) {
    if (x < 0 || x >= p.points()) {
      throw std::invalid_argument("word letter out of range for this poset");
    }
  }
}

NormalWord normalize(const ActedPoset& p, std::vector<int> seq) {
  if (seq.empty()) throw std::invalid_argument("normalize: the semigroup has no empty word");
  check_letters(p, seq);
  // Leftmost comparable pair first; after a rewrite the only new pair that
  // can become comparable on the left is the one ending at the merged letter.
  size_t i = 0;
  while (i + 1 < seq.size()) {
    int a = seq[i], b = seq[i + 1];
    if (p.le(a, b) || p.le(b, a)) {
      seq[i] = p.le(a, b) ? b : a;
      seq.erase(seq.begin() + i + 1);
      if (i > 0) --i;
    } else {
      ++i;
    }
  }
  return NormalWord{std::move(seq)};
}

static void check_normal(const ActedPoset& p, const NormalWord& w, const char* who) {
  if (w.letters.empty()) throw std::invalid_argument(std::string(who) + ": empty word");
  check_letters(p, w.letters);
  for (size_t i = 0; i + 1 < w.letters.size(); ++i) {
    if (p.comparable(w.letters[i], w.letters[i + 1])) {
      throw std::invalid_argument(std::string(who) +
                                  ": operand is not normal over this poset (poset mismatch?)");
    }
  }
}

NormalWord join(const ActedPoset& p, const NormalWord& u, const NormalWord& v) {
  check_normal(p, u, "join");
  check_normal(p, v, "join");
  std::vector<int> seq = u.letters;
  seq.insert(seq.end(), v.letters.begin(), v.letters.end());
  return normalize(p, std::move(seq));
}

NormalWord act(const ActedPoset& p, Elem a, const NormalWord& w) {
  check_normal(p, w, "act");
  if (a < 0 || a >= p.monoid.size) throw std::invalid_argument("act: element out of range");
  std::vector<int> seq;
  seq.reserve(w.letters.size());
  for (int x : w.letters) seq.push_back(p.act(a, x));
  return normalize(p, std::move(seq));
}

NormalWord type_of(const ActedPoset& p, std::span<const Elem> elems, int y) {
  if (elems.empty()) throw std::invalid_argument("type_of: empty element tuple");
  if (y < 0 || y >= p.points()) throw std::invalid_argument("type_of: point out of range");
  std::vector<int> seq;
  seq.reserve(elems.size());
  for (Elem a : elems) seq.push_back(p.act(a, y));
  return normalize(p, std::move(seq));
}

std::string render(const ActedPoset& p, const NormalWord& w) {
  std::string out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += " v ";
    out += p.point_labels[w.letters[i]];
  }
  return out;
}

std::set<std::vector<int>> rewrite_closure_normal_forms(const ActedPoset& p,
                                                        const std::vector<int>& seq) {
  if (seq.empty()) throw std::invalid_argument("rewrite closure: empty word");
  check_letters(p, seq);
  std::set<std::vector<int>> seen, normal;
  std::vector<std::vector<int>> stack{seq};
  seen.insert(seq);
  while (!stack.empty()) {
    std::vector<int> cur = std::move(stack.back());
    stack.pop_back();
    bool any = false;
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      int a = cur[i], b = cur[i + 1];
      if (!p.comparable(a, b)) continue;
      any = true;
      std::vector<int> next = cur;
      next[i] = p.le(a, b) ? b : a;
      next.erase(next.begin() + i + 1);
      if (seen.insert(next).second) stack.push_back(std::move(next));
    }
    if (!any) normal.insert(cur);
  }
  return normal;
}

ActedPoset plain_poset(std::vector<std::vector<char>> leq) {
  ActedPoset p;
  p.monoid.name = "1";
  p.monoid.size = 1;
  p.monoid.identity = 0;
  p.monoid.table = {{0}};
  int n = (int)leq.size();
  for (int i = 0; i < n; ++i) p.point_labels.push_back("p" + std::to_string(i));
  p.leq = std::move(leq);
  p.action.assign(1, std::vector<int>(n));
  for (int i = 0; i < n; ++i) p.action[0][i] = i;
  return p;
}

std::vector<std::vector<std::vector<char>>> all_posets(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("all_posets: need 1 <= n <= 4");
  int pairs = n * (n - 1);  // ordered off-diagonal pairs
  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) idx.emplace_back(i, j);
    }
  }
  std::vector<std::vector<std::vector<char>>> out;
  for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) leq[i][i] = 1;
    for (int k = 0; k < pairs; ++k) {
      if (mask & (1u << k)) leq[idx[k].first][idx[k].second] = 1;
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) {
        if (i != j && leq[i][j] && leq[j][i]) ok = false;  // antisymmetry
        for (int k = 0; k < n && ok; ++k) {
          if (leq[i][j] && leq[j][k] && !leq[i][k]) ok = false;  // transitivity
        }
      }
    }
    if (ok) out.push_back(std::move(leq));
  }
  return out;
}

ConfluenceReport confluence_check(int trials, unsigned seed) {
  if (trials < 1) throw std::invalid_argument("confluence_check: trials < 1");
  ConfluenceReport rep;
  std::mt19937 rng(seed);
  for (int t = 0; t < trials; ++t) {
    int n = 1 + (int)(rng() % 6);
    // Random order: relate i -> j along a random permutation with
    // probability ~2/5, then close transitively.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) leq[i][i] = 1;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng() % 5 < 2) leq[perm[i]][perm[j]] = 1;
      }
    }
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (leq[i][k] && leq[k][j]) leq[i][j] = 1;
        }
      }
    }
    ActedPoset p = plain_poset(std::move(leq));
    int len = 1 + (int)(rng() % 5);
    std::vector<int> word(len);
    for (int& x : word) x = (int)(rng() % n);
    auto closure = rewrite_closure_normal_forms(p, word);
    NormalWord canon = normalize(p, word);
    ++rep.trials;
    if (closure.size() != 1 || *closure.begin() != canon.letters) {
      rep.ok = false;
      rep.detail = "rewrite order matters on trial " + std::to_string(t);
      return rep;
    }
    // Associativity of the join on a random triple of normal words.
    auto rand_normal = [&]() {
      std::vector<int> s(1 + rng() % 3);
      for (int& x : s) x = (int)(rng() % n);
      return normalize(p, s);
    };
    NormalWord u = rand_normal(), v = rand_normal(), w = rand_normal();
    if (join(p, join(p, u, v), w) != join(p, u, join(p, v, w))) {
      rep.ok = false;
      rep.detail = "join not associative on trial " + std::to_string(t);
      return rep;
    }
  }
  rep.detail = std::to_string(rep.trials) + " random posets";
  return rep;
}

}  // namespace rmon

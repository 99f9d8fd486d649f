#include "rmon/verifiers.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <stdexcept>

#include "rmon/guards.hpp"
#include "rmon/order.hpp"

namespace rmon {

namespace {

void require_family_words(const PointedMSet& fam, std::span<const LocatedWord> ws,
                          const char* who, bool need_dist) {
  if (ws.empty()) throw std::invalid_argument(std::string(who) + ": empty word sequence");
  if (!is_basic(ws)) throw std::invalid_argument(std::string(who) + ": sequence is not basic");
  for (const auto& w : ws) {
    for (const auto& [slot, letter] : w.entries) {
      if (letter < 0 || letter >= fam.letter_count()) {
        throw std::invalid_argument(std::string(who) + ": letter out of range for the family");
      }
    }
    if (need_dist && !contains_letter(w, fam.distinguished)) {
      throw std::invalid_argument(std::string(who) +
                                  ": every word must contain the distinguished letter");
    }
  }
}

// Increasing selections from [0,n) of each size in [1, maxk].
template <typename Fn>
void for_each_selection(int n, int maxk, Fn&& fn) {
  std::vector<int> sel;
  auto rec = [&](auto&& self, int from) -> void {
    if (!sel.empty()) fn(sel);
    if ((int)sel.size() == maxk) return;
    for (int i = from; i < n; ++i) {
      sel.push_back(i);
      self(self, i + 1);
      sel.pop_back();
    }
  };
  rec(rec, 0);
}

template <typename Fn>
void for_each_tuple(int m, int k, Fn&& fn) {
  std::vector<Elem> tup(k, 0);
  for (;;) {
    fn(tup);
    int i = k - 1;
    while (i >= 0 && tup[i] == m - 1) tup[i--] = 0;
    if (i < 0) return;
    ++tup[i];
  }
}

std::set<NormalWord> admitted_types(const ChainForest& y, int y_point,
                                    const TameParams& params) {
  const Monoid& m = y.poset.monoid;
  std::set<NormalWord> allowed(params.types.begin(), params.types.end());
  bool defaulted = params.types.empty();
  long long total = 0, pw = 1;
  for (int k = 1; k <= params.max_len; ++k) {
    pw *= m.size;
    total += pw;
  }
  guard(total, 10'000'000, "tame check: tuple space |M|^L");
  if (defaulted || params.close_suffixes) {
    for (int k = 1; k <= params.max_len; ++k) {
      for_each_tuple(m.size, k, [&](const std::vector<Elem>& tup) {
        NormalWord t = type_of(y.poset, tup, y_point);
        if (defaulted) {
          allowed.insert(t);
        } else if (params.close_suffixes && allowed.count(t)) {
          for (size_t s = 1; s < tup.size(); ++s) {
            std::vector<Elem> suf(tup.begin() + s, tup.end());
            allowed.insert(type_of(y.poset, suf, y_point));
          }
        }
      });
    }
  }
  return allowed;
}

}  // namespace

TameReport check_tame(const ChainForest& y, int y_point, const PointedMSet& fam,
                      const Coloring& col, std::span<const LocatedWord> ws,
                      const TameParams& params) {
  if (fam.monoid.size != y.poset.monoid.size) {
    throw std::invalid_argument("check_tame: family and chain forest disagree on the monoid");
  }
  if (params.max_len < 1) throw std::invalid_argument("check_tame: product length bound < 1");
  require_family_words(fam, ws, "check_tame", true);
  const Monoid& m = fam.monoid;
  std::set<NormalWord> allowed = admitted_types(y, y_point, params);
  int n = (int)ws.size();
  long long cost = 0;
  for_each_selection(n, params.max_len, [&](const std::vector<int>& sel) {
    long long pw = 1;
    for (size_t i = 0; i < sel.size(); ++i) pw *= m.size;
    cost += pw;
  });
  guard(cost, 50'000'000, "tame check: product count");

  TameReport rep;
  std::map<NormalWord, TameProduct> first_of;
  bool done = false;
  for_each_selection(n, params.max_len, [&](const std::vector<int>& sel) {
    if (done) return;
    for_each_tuple(m.size, (int)sel.size(), [&](const std::vector<Elem>& tup) {
      if (done) return;
      std::vector<LocatedWord> parts;
      parts.reserve(sel.size());
      for (size_t i = 0; i < sel.size(); ++i) {
        parts.push_back(act_word(fam, tup[i], ws[sel[i]]));
      }
      auto word = product_all(parts);
      if (!word) throw std::logic_error("check_tame: basic product undefined");
      ++rep.products;
      NormalWord t = type_of(y.poset, tup, y_point);
      if (!allowed.count(t)) return;
      TameProduct prod{sel, tup, *word, col(*word)};
      auto [it, inserted] = first_of.emplace(t, prod);
      if (!inserted && it->second.color != prod.color) {
        rep.tame = false;
        rep.violation = TameViolation{t, it->second, prod};
        done = true;
      }
    });
  });
  rep.groups = (int)first_of.size();
  return rep;
}

std::vector<LocatedWord> enumerate_words(const PointedMSet& fam, int min_slot, int max_slot,
                                         int max_len, bool require_distinguished) {
  std::vector<LocatedWord> out;
  std::vector<std::pair<int, int>> cur;
  auto rec = [&](auto&& self) -> void {
    if (!cur.empty()) {
      if (!require_distinguished ||
          std::any_of(cur.begin(), cur.end(),
                      [&](const auto& e) { return e.second == fam.distinguished; })) {
        out.push_back(LocatedWord{cur});
      }
      if ((int)cur.size() == max_len) return;
    }
    int from = cur.empty() ? min_slot : cur.back().first + 1;
    for (int s = from; s <= max_slot; ++s) {
      for (int l = 0; l < fam.letter_count(); ++l) {
        cur.emplace_back(s, l);
        self(self);
        cur.pop_back();
      }
    }
  };
  rec(rec);
  return out;
}

namespace {

struct SearchState {
  const ChainForest& y;
  int y_point;
  const PointedMSet& fam;
  const Coloring& col;
  int seq_len;
  const SearchBounds& bounds;
  const TameParams& params;
  std::set<NormalWord> allowed;
  std::map<NormalWord, int> group_color;
  std::vector<LocatedWord> seq;
  long long nodes = 0;
};

// Products introduced by appending `w`: every selection ending at the new
// index.  Inserted group colors are logged for undo.
bool admits(SearchState& st, const LocatedWord& w, std::vector<NormalWord>& added) {
  int j = (int)st.seq.size();
  const Monoid& m = st.fam.monoid;
  std::vector<int> sel;
  auto try_tuples = [&](const std::vector<int>& full_sel) -> bool {
    bool ok = true;
    for_each_tuple(m.size, (int)full_sel.size(), [&](const std::vector<Elem>& tup) {
      if (!ok) return;
      NormalWord t = type_of(st.y.poset, tup, st.y_point);
      if (!st.allowed.count(t)) return;
      std::vector<LocatedWord> parts;
      for (size_t i = 0; i < full_sel.size(); ++i) {
        const LocatedWord& base = full_sel[i] == j ? w : st.seq[full_sel[i]];
        parts.push_back(act_word(st.fam, tup[i], base));
      }
      auto word = product_all(parts);
      if (!word) throw std::logic_error("search_tame: basic product undefined");
      int color = st.col(*word);
      auto [it, inserted] = st.group_color.emplace(t, color);
      if (inserted) {
        added.push_back(t);
      } else if (it->second != color) {
        ok = false;
      }
    });
    return ok;
  };
  // Subsets of the existing indices, extended by j.
  bool ok = true;
  auto rec = [&](auto&& self, int from) -> void {
    if (!ok) return;
    std::vector<int> full = sel;
    full.push_back(j);
    if (!try_tuples(full)) {
      ok = false;
      return;
    }
    if ((int)sel.size() == st.params.max_len - 1) return;
    for (int i = from; i < j; ++i) {
      sel.push_back(i);
      self(self, i + 1);
      sel.pop_back();
    }
  };
  rec(rec, 0);
  return ok;
}

bool extend(SearchState& st) {
  if ((int)st.seq.size() == st.seq_len) return true;
  int floor = st.seq.empty() ? 0 : st.seq.back().max_slot() + 1;
  if (floor > st.bounds.max_slot) return false;
  auto candidates =
      enumerate_words(st.fam, floor, st.bounds.max_slot, st.bounds.max_word_len, true);
  for (const auto& w : candidates) {
    ++st.nodes;
    std::vector<NormalWord> added;
    if (admits(st, w, added)) {
      st.seq.push_back(w);
      if (extend(st)) return true;
      st.seq.pop_back();
    }
    for (const auto& t : added) st.group_color.erase(t);
  }
  return false;
}

}  // namespace

TameSearchResult search_tame(const ChainForest& y, int y_point, const PointedMSet& fam,
                             const Coloring& col, int seq_len, const SearchBounds& bounds,
                             const TameParams& params) {
  if (seq_len < 1) throw std::invalid_argument("search_tame: sequence length < 1");
  SearchState st{y, y_point, fam, col, seq_len, bounds, params,
                 admitted_types(y, y_point, params), {}, {}, 0};
  TameSearchResult res;
  if (extend(st)) res.witness = st.seq;
  res.nodes = st.nodes;
  return res;
}

namespace {

struct OccInfo {
  int len = 0;
  int first_a = -1;
  int first_b = -1;
};

OccInfo occurrences(const std::vector<int>& letters, int pa, int pb) {
  OccInfo o;
  o.len = (int)letters.size();
  for (int i = 0; i < o.len; ++i) {
    if (o.first_a < 0 && letters[i] == pa) o.first_a = i;
    if (o.first_b < 0 && letters[i] == pb) o.first_b = i;
  }
  return o;
}

int combined_color(const OccInfo& u, const OccInfo& v) {
  int fa = u.first_a >= 0 ? u.first_a : (v.first_a >= 0 ? u.len + v.first_a : -1);
  int fb = u.first_b >= 0 ? u.first_b : (v.first_b >= 0 ? u.len + v.first_b : -1);
  return (fa >= 0 && (fb < 0 || fa < fb)) ? 0 : 1;
}

}  // namespace

NotRamseyReport verify_not_ramsey(const Monoid& m, Elem a, Elem b,
                                  const SearchBounds& bounds, int threads) {
  XPoset x = x_of(m);
  int pa = x.elem_class[a], pb = x.elem_class[b];
  NotRamseyReport rep;
  rep.a = a;
  rep.b = b;
  if (x.poset.comparable(pa, pb)) {
    throw std::invalid_argument("verify_not_ramsey: classes of " + m.label(a) + " and " +
                                m.label(b) + " are comparable");
  }
  // [a] must avoid b*X(M) and [b] must avoid a*X(M); this is what makes the
  // first-occurrence argument go through.
  for (int p = 0; p < x.poset.points(); ++p) {
    if (x.poset.act(b, p) == pa || x.poset.act(a, p) == pb) {
      rep.detail = "image condition fails at point " + x.poset.point_labels[p];
      return rep;
    }
  }
  rep.colcheck = true;

  PointedMSet fam = pointed_xm(x);
  Coloring col = counterexample_coloring(m, a, b);
  auto words = enumerate_words(fam, 0, bounds.max_slot, bounds.max_word_len, true);
  int nw = (int)words.size();
  std::vector<OccInfo> raw(nw), under_a(nw), under_b(nw);
  std::vector<int> lo(nw), hi(nw);
  for (int i = 0; i < nw; ++i) {
    std::vector<int> letters, la, lb;
    for (const auto& [slot, letter] : words[i].entries) {
      letters.push_back(letter);
      la.push_back(fam.act(a, letter));
      lb.push_back(fam.act(b, letter));
    }
    raw[i] = occurrences(letters, pa, pb);
    under_a[i] = occurrences(la, pa, pb);
    under_b[i] = occurrences(lb, pa, pb);
    lo[i] = words[i].min_slot();
    hi[i] = words[i].max_slot();
  }

  struct ChunkResult {
    long long pairs = 0;
    long long bad0 = -1, bad1 = -1;  // first failing pair, if any
    std::string detail;
  };
  auto run_chunk = [&](int begin, int end) {
    ChunkResult r;
    for (int i = begin; i < end && r.bad0 < 0; ++i) {
      for (int j = 0; j < nw; ++j) {
        if (lo[j] <= hi[i]) continue;
        ++r.pairs;
        int c0 = combined_color(under_a[i], raw[j]);
        int c1 = combined_color(under_b[i], raw[j]);
        bool sample = (r.pairs & 0xfff) == 0;
        if (sample) {
          // spot-check the combine against the coloring itself
          auto wa = product(act_word(fam, a, words[i]), words[j]);
          auto wb = product(act_word(fam, b, words[i]), words[j]);
          if (!wa || !wb || col(*wa) != c0 || col(*wb) != c1) {
            r.bad0 = i;
            r.bad1 = j;
            r.detail = "combined color disagrees with direct coloring";
            break;
          }
        }
        if (c0 != 0 || c1 != 1) {
          r.bad0 = i;
          r.bad1 = j;
          r.detail = "colors " + std::to_string(c0) + "/" + std::to_string(c1) +
                     " instead of 0/1";
          break;
        }
      }
    }
    return r;
  };

  threads = std::max(1, threads);
  std::vector<std::future<ChunkResult>> futs;
  int chunk = (nw + threads - 1) / std::max(threads, 1);
  for (int t = 0; t < threads; ++t) {
    int begin = t * chunk, end = std::min(nw, (t + 1) * chunk);
    if (begin >= end) break;
    futs.push_back(std::async(std::launch::async, run_chunk, begin, end));
  }
  ChunkResult merged;
  for (auto& f : futs) {
    ChunkResult r = f.get();
    merged.pairs += r.pairs;
    if (r.bad0 >= 0 && (merged.bad0 < 0 || r.bad0 < merged.bad0 ||
                        (r.bad0 == merged.bad0 && r.bad1 < merged.bad1))) {
      merged.bad0 = r.bad0;
      merged.bad1 = r.bad1;
      merged.detail = r.detail;
    }
  }
  rep.pairs = merged.pairs;
  if (merged.bad0 >= 0) {
    rep.detail = "pair (" + render(fam, words[merged.bad0]) + " ; " +
                 render(fam, words[merged.bad1]) + "): " + merged.detail;
    return rep;
  }
  rep.ok = true;
  rep.detail = "all " + std::to_string(rep.pairs) + " basic pairs split 0/1";
  return rep;
}

std::vector<int> reduced_string(std::span<const int> letters, std::span<const int> keep) {
  std::set<int> keep_set(keep.begin(), keep.end());
  std::vector<int> out;
  for (int l : letters) {
    if (!keep_set.count(l)) continue;
    if (!out.empty() && out.back() == l) continue;
    out.push_back(l);
  }
  return out;
}

EmbedCheckReport reduced_string_embedding_check(const std::vector<std::string>& a_labels,
                                                const std::vector<std::string>& b_labels,
                                                int maxlen) {
  if (b_labels.empty()) {
    throw std::invalid_argument("embedding check: B must be nonempty");
  }
  if (maxlen < 1) throw std::invalid_argument("embedding check: maxlen < 1");
  Monoid j = family_J(a_labels, b_labels);
  XPoset x = x_of(j);
  ChainForest y = y_of(j);
  int na = (int)a_labels.size();
  int pb = x.elem_class[1 + na];  // class of the first B element

  std::map<std::vector<int>, int> chain_index;
  for (int i = 0; i < (int)y.chains.size(); ++i) chain_index[y.chains[i]] = i;
  auto chain_point = [&](std::vector<int> members) {
    std::sort(members.begin(), members.end(),
              [&](int u, int v) { return x.poset.lt(u, v); });
    auto it = chain_index.find(members);
    if (it == chain_index.end()) throw std::logic_error("embedding check: missing chain");
    return it->second;
  };

  int b_chain = chain_point({pb});
  std::vector<int> a_chain(na);
  for (int i = 0; i < na; ++i) a_chain[i] = chain_point({pb, x.elem_class[1 + i]});

  auto expected = [&](const std::vector<int>& reduced) {
    std::vector<int> letters;
    if (reduced.empty()) {
      letters.push_back(b_chain);
    } else {
      for (int c : reduced) letters.push_back(a_chain[c - 1]);
    }
    return normalize(y.poset, letters);
  };

  EmbedCheckReport rep;
  std::vector<int> a_letters(na);
  for (int i = 0; i < na; ++i) a_letters[i] = 1 + i;
  std::map<std::vector<int>, NormalWord> by_string;
  std::map<NormalWord, std::vector<int>> by_type;
  int letters = j.size - 1;  // A ∪ B, excluding the identity
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<int> cs(len, 1);
    for (;;) {
      ++rep.sequences;
      std::vector<Elem> elems(cs.begin(), cs.end());
      NormalWord t = type_of(y.poset, elems, default_maximal_chain(y));
      std::vector<int> red = reduced_string(cs, a_letters);
      NormalWord want = expected(red);
      if (t != want) {
        rep.ok = false;
        rep.detail = "type mismatch for a sequence of length " + std::to_string(len) +
                     ": got " + render(y.poset, t) + ", expected " + render(y.poset, want);
        return rep;
      }
      auto [it1, ins1] = by_string.emplace(red, t);
      if (!ins1 && it1->second != t) {
        rep.ok = false;
        rep.detail = "same reduced string mapped to two types";
        return rep;
      }
      auto [it2, ins2] = by_type.emplace(t, red);
      if (!ins2 && it2->second != red) {
        rep.ok = false;
        rep.detail = "image not injective: two reduced strings share a type";
        return rep;
      }
      int i = len - 1;
      while (i >= 0 && cs[i] == letters) cs[i--] = 1;
      if (i < 0) break;
      ++cs[i];
    }
  }
  rep.distinct_strings = (int)by_string.size();
  rep.detail = std::to_string(rep.sequences) + " sequences, " +
               std::to_string(rep.distinct_strings) + " reduced strings";
  return rep;
}

FkReport fk_check(const VariableFamily& var, const Coloring& col,
                  std::span<const LocatedWord> ws,
                  const std::vector<std::vector<int>>& strings, int max_len) {
  require_family_words(var.set, ws, "fk_check", true);
  if (max_len < 1) throw std::invalid_argument("fk_check: product length bound < 1");
  std::set<std::vector<int>> filter(strings.begin(), strings.end());
  std::vector<int> subs;  // substitution letters: A ∪ B
  subs.insert(subs.end(), var.a_letters.begin(), var.a_letters.end());
  subs.insert(subs.end(), var.b_letters.begin(), var.b_letters.end());
  if (subs.empty()) throw std::invalid_argument("fk_check: no substitution letters");
  int n = (int)ws.size();

  FkReport rep;
  std::map<std::vector<int>, FkProduct> first_of;
  bool done = false;
  for_each_selection(n, max_len, [&](const std::vector<int>& sel) {
    if (done) return;
    for_each_tuple((int)subs.size(), (int)sel.size(), [&](const std::vector<int>& pick) {
      if (done) return;
      std::vector<int> cs(pick.size());
      std::vector<LocatedWord> parts;
      for (size_t i = 0; i < pick.size(); ++i) {
        cs[i] = subs[pick[i]];
        parts.push_back(substitute(var.set, ws[sel[i]], cs[i]));
      }
      auto word = product_all(parts);
      if (!word) throw std::logic_error("fk_check: basic product undefined");
      ++rep.products;
      std::vector<int> red = reduced_string(cs, var.a_letters);
      if (!filter.empty() && !filter.count(red)) return;
      FkProduct prod{sel, cs, *word, col(*word)};
      auto [it, inserted] = first_of.emplace(red, prod);
      if (!inserted && it->second.color != prod.color) {
        rep.ok = false;
        rep.violation = FkViolation{red, it->second, prod};
        done = true;
      }
    });
  });
  rep.groups = (int)first_of.size();
  return rep;
}

HjResult hj_transform(const VariableFamily& var, std::span<const LocatedWord> vs, int b_letter) {
  if (vs.empty() || vs.size() % 2 == 0) {
    throw std::invalid_argument("hj_transform: expected v_0, v'_0, ..., v_n (odd count)");
  }
  bool is_b = false;
  for (int l : var.b_letters) is_b = is_b || l == b_letter;
  if (!is_b) throw std::invalid_argument("hj_transform: substitution letter must be in B");
  require_family_words(var.set, vs, "hj_transform", true);
  for (size_t i = 1; i < vs.size(); i += 2) {
    if (!is_left_variable(var.set, vs[i])) {
      throw std::invalid_argument("hj_transform: v'_" + std::to_string(i / 2) +
                                  " must start with the variable");
    }
  }
  HjResult res;
  res.words.push_back(substitute(var.set, vs[0], b_letter));
  for (size_t i = 2; i < vs.size(); i += 2) {
    auto w = product(vs[i - 1], vs[i]);
    if (!w) throw std::logic_error("hj_transform: interleaved product undefined");
    res.words.push_back(*w);
  }
  if (contains_letter(res.words[0], var.variable)) {
    throw std::logic_error("hj_transform: w_0 still contains the variable");
  }
  for (size_t i = 1; i < res.words.size(); ++i) {
    if (!is_left_variable(var.set, res.words[i])) {
      throw std::logic_error("hj_transform: w_i not left-variable");
    }
  }
  if (!is_basic(res.words)) throw std::logic_error("hj_transform: output not basic");
  return res;
}

}  // namespace rmon

#include "rmon/located_words.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rmon {

int PointedMSet::letter_by_label(const std::string& s) const {
  for (int i = 0; i < letter_count(); ++i) {
    if (letters[i] == s) return i;
  }
  throw std::invalid_argument("no letter labelled '" + s + "'");
}

ValidationReport validate(const PointedMSet& s) {
  ValidationReport rep;
  auto bad = [&](std::string kind, int i, int j, std::string detail) {
    rep.violations.push_back({std::move(kind), {i, j, -1}, std::move(detail)});
  };
  int n = s.letter_count();
  if (n == 0) {
    bad("shape", -1, -1, "empty carrier");
    return rep;
  }
  if ((int)s.action.size() != s.monoid.size) {
    bad("shape", (int)s.action.size(), -1, "one action row per monoid element expected");
    return rep;
  }
  for (int a = 0; a < s.monoid.size; ++a) {
    if ((int)s.action[a].size() != n) {
      bad("shape", a, -1, "ragged action row");
      return rep;
    }
    for (int x = 0; x < n; ++x) {
      if (s.action[a][x] < 0 || s.action[a][x] >= n) {
        bad("range", a, x, "action image out of range");
        return rep;
      }
    }
  }
  if (s.distinguished < 0 || s.distinguished >= n) {
    bad("range", s.distinguished, -1, "distinguished letter out of range");
    return rep;
  }
  const Monoid& m = s.monoid;
  for (int x = 0; x < n; ++x) {
    if (s.act(m.identity, x) != x) bad("action", m.identity, x, "identity must act trivially");
  }
  for (Elem a = 0; a < m.size && rep.violations.size() < 64; ++a) {
    for (Elem b = 0; b < m.size; ++b) {
      for (int x = 0; x < n; ++x) {
        if (s.act(m.mul(a, b), x) != s.act(a, s.act(b, x))) bad("action", a, b, "(ab)x != a(bx)");
      }
    }
  }
  std::set<int> orbit;
  for (Elem a = 0; a < m.size; ++a) orbit.insert(s.act(a, s.distinguished));
  if ((int)orbit.size() != n) {
    bad("pointed", (int)orbit.size(), n, "M*distinguished does not cover the carrier");
  }
  return rep;
}

PointedMSet pointed_self(const Monoid& m) {
  PointedMSet s;
  s.monoid = m;
  for (Elem a = 0; a < m.size; ++a) s.letters.push_back(m.label(a));
  s.action = m.table;
  s.distinguished = m.identity;
  return s;
}

PointedMSet pointed_xm(const XPoset& x) {
  PointedMSet s;
  s.monoid = x.poset.monoid;
  s.letters = x.poset.point_labels;
  s.action = x.poset.action;
  s.distinguished = x.elem_class[x.poset.monoid.identity];
  return s;
}

PointedMSet pointed_xm(const Monoid& m) { return pointed_xm(x_of(m)); }

VariableFamily variable_family(const std::vector<std::string>& a_labels,
                               const std::vector<std::string>& b_labels) {
  VariableFamily v;
  Monoid j = family_J(a_labels, b_labels);
  v.set = pointed_self(j);
  v.set.letters[j.identity] = "x";
  v.variable = j.identity;
  for (int i = 0; i < (int)a_labels.size(); ++i) v.a_letters.push_back(1 + i);
  for (int i = 0; i < (int)b_labels.size(); ++i) {
    v.b_letters.push_back(1 + (int)a_labels.size() + i);
  }
  return v;
}

static LocatedWord checked(std::vector<std::pair<int, int>> entries, int letter_bound) {
  if (entries.empty()) throw std::invalid_argument("located word: no empty words");
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first < 0) throw std::invalid_argument("located word: negative slot");
    if (i > 0 && entries[i].first <= entries[i - 1].first) {
      throw std::invalid_argument("located word: slots must be strictly increasing");
    }
    if (entries[i].second < 0 || (letter_bound >= 0 && entries[i].second >= letter_bound)) {
      throw std::invalid_argument("located word: letter out of range");
    }
  }
  return LocatedWord{std::move(entries)};
}

LocatedWord make_word(std::vector<std::pair<int, int>> entries, const PointedMSet& s) {
  return checked(std::move(entries), s.letter_count());
}

LocatedWord make_word(std::vector<std::pair<int, int>> entries) {
  return checked(std::move(entries), -1);
}

std::optional<LocatedWord> product(const LocatedWord& w1, const LocatedWord& w2) {
  if (w1.max_slot() >= w2.min_slot()) return std::nullopt;
  LocatedWord out = w1;
  out.entries.insert(out.entries.end(), w2.entries.begin(), w2.entries.end());
  return out;
}

std::optional<LocatedWord> product_all(std::span<const LocatedWord> ws) {
  if (ws.empty()) return std::nullopt;
  LocatedWord acc = ws[0];
  for (size_t i = 1; i < ws.size(); ++i) {
    auto next = product(acc, ws[i]);
    if (!next) return std::nullopt;
    acc = std::move(*next);
  }
  return acc;
}

LocatedWord act_word(const PointedMSet& s, Elem a, const LocatedWord& w) {
  if (a < 0 || a >= s.monoid.size) throw std::invalid_argument("act_word: element out of range");
  LocatedWord out = w;
  for (auto& [slot, letter] : out.entries) letter = s.act(a, letter);
  return out;
}

bool is_basic(std::span<const LocatedWord> ws) {
  for (size_t i = 0; i + 1 < ws.size(); ++i) {
    if (ws[i].max_slot() >= ws[i + 1].min_slot()) return false;
  }
  return true;
}

bool contains_letter(const LocatedWord& w, int letter) {
  for (const auto& [slot, l] : w.entries) {
    if (l == letter) return true;
  }
  return false;
}

bool is_left_variable(const PointedMSet& s, const LocatedWord& w) {
  return w.entries.front().second == s.distinguished;
}

LocatedWord substitute(const PointedMSet& s, const LocatedWord& w, int c) {
  if (c < 0 || c >= s.letter_count()) throw std::invalid_argument("substitute: letter out of range");
  LocatedWord out = w;
  for (auto& [slot, letter] : out.entries) {
    if (letter == s.distinguished) letter = c;
  }
  return out;
}

std::string render(const PointedMSet& s, const LocatedWord& w) {
  std::string out;
  for (const auto& [slot, letter] : w.entries) {
    if (!out.empty()) out += " ";
    out += "(" + std::to_string(slot) + "," + s.letters[letter] + ")";
  }
  return out;
}

}  // namespace rmon

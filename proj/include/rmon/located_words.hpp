// Located words: finite slot-indexed strings over a pointed M-set, with the
// partial product defined only when the slot blocks are disjoint and ordered.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rmon/order.hpp"

namespace rmon {

struct PointedMSet {
  Monoid monoid;
  std::vector<std::string> letters;       // carrier labels
  std::vector<std::vector<int>> action;   // action[a][x]
  int distinguished = 0;

  int letter_count() const { return (int)letters.size(); }
  int act(Elem a, int x) const { return action[a][x]; }
  int letter_by_label(const std::string& s) const;  // throws if absent
};

// Carrier axioms plus pointedness: M * distinguished covers the carrier.
ValidationReport validate(const PointedMSet& s);

// M acting on itself by left multiplication, pointed at the identity.
PointedMSet pointed_self(const Monoid& m);

// The points of X(M) with the translation action, pointed at the class of
// the identity.  Letter indices agree with x.poset point indices.
PointedMSet pointed_xm(const XPoset& x);
PointedMSet pointed_xm(const Monoid& m);

// Variable words over J(A,B): the carrier is A ∪ B ∪ {x} identified with
// J(A,B) itself, the variable x being the identity.
struct VariableFamily {
  PointedMSet set;
  std::vector<int> a_letters;
  std::vector<int> b_letters;
  int variable = 0;
};

VariableFamily variable_family(const std::vector<std::string>& a_labels,
                               const std::vector<std::string>& b_labels);

struct LocatedWord {
  std::vector<std::pair<int, int>> entries;  // (slot, letter), slots strictly increasing

  bool operator==(const LocatedWord&) const = default;
  auto operator<=>(const LocatedWord&) const = default;
  size_t length() const { return entries.size(); }
  int min_slot() const { return entries.front().first; }
  int max_slot() const { return entries.back().first; }
};

// Validates slot monotonicity and letter ranges.
LocatedWord make_word(std::vector<std::pair<int, int>> entries, const PointedMSet& s);
LocatedWord make_word(std::vector<std::pair<int, int>> entries);  // slots only

// Defined iff every slot of w1 precedes every slot of w2; Undefined is a
// value, not an error.
std::optional<LocatedWord> product(const LocatedWord& w1, const LocatedWord& w2);
std::optional<LocatedWord> product_all(std::span<const LocatedWord> ws);

// Letterwise action; slots are preserved.
LocatedWord act_word(const PointedMSet& s, Elem a, const LocatedWord& w);

// Strictly increasing slot blocks between consecutive words.
bool is_basic(std::span<const LocatedWord> ws);

bool contains_letter(const LocatedWord& w, int letter);
bool is_left_variable(const PointedMSet& s, const LocatedWord& w);

// w[c]: every occurrence of the distinguished letter becomes c.
LocatedWord substitute(const PointedMSet& s, const LocatedWord& w, int c);

std::string render(const PointedMSet& s, const LocatedWord& w);

}  // namespace rmon

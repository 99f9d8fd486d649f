// Partial orders acted on by a monoid: the ideal order X(M), the chain
// forest Fr(P), Y(M) = Fr(X(M)), and the Ramsey/NotRamsey decision.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rmon/monoid.hpp"

namespace rmon {

struct ActedPoset {
  Monoid monoid;  // acting monoid (kept by value; tables are small)
  std::vector<std::string> point_labels;
  std::vector<std::vector<char>> leq;   // leq[i][j]: i <= j
  std::vector<std::vector<int>> action; // action[a][p]

  int points() const { return (int)leq.size(); }
  bool le(int i, int j) const { return leq[i][j] != 0; }
  bool lt(int i, int j) const { return i != j && le(i, j); }
  bool comparable(int i, int j) const { return le(i, j) || le(j, i); }
  int act(Elem a, int p) const { return action[a][p]; }
};

// Poset axioms, monotone action, identity/composition laws.
ValidationReport validate(const ActedPoset& p);

struct XPoset {
  ActedPoset poset;
  std::vector<std::vector<Elem>> ideals;  // ideals[p] = the principal right ideal
  std::vector<Elem> reps;                 // least generator of each point
  std::vector<int> elem_class;            // element -> point of its R-class
};

// Points are the distinct principal right ideals ordered by inclusion, with
// a * bM = (ab)M.  Point order is lexicographic on the sorted ideals.
XPoset x_of(const Monoid& m);

struct StrongnessWitness {
  int point;
  Elem elem;
  std::string detail;
};

// A strong action satisfies {a*x : x <= y} = {x : x <= a*y} for all y, a.
std::optional<StrongnessWitness> strongness_witness(const ActedPoset& p);
inline bool is_strong(const ActedPoset& p) { return !strongness_witness(p).has_value(); }

struct ChainForest {
  ActedPoset poset;                     // the end-extension order with the lifted action
  std::vector<std::vector<int>> chains; // chains[i] = base points, ascending in the base order
};

// Nonempty chains of `base` under end-extension (x <= y iff x is an initial
// segment of y once both are sorted by the base order), with the pointwise
// action.  Subset enumeration; bases over 20 points are rejected by guard.
ChainForest fr(const ActedPoset& base);

ChainForest y_of(const Monoid& m);

// chain -> its maximum in the base poset.
std::vector<int> pi_max_map(const ChainForest& f);

struct EpimorphismCheck {
  bool ok = true;
  std::string detail;
};

// pi_max is onto, equivariant, and the base order is the image of the
// chain order under it.
EpimorphismCheck check_pi_max(const ChainForest& f, const ActedPoset& base);

std::optional<std::pair<int, int>> incomparable_pair(const ActedPoset& p);
inline bool is_linear(const ActedPoset& p) { return !incomparable_pair(p).has_value(); }

// Points with no strict upper bound.
std::vector<int> maximal_elements(const ActedPoset& p);

// The designated maximal chain: longest, ties broken lexicographically.
// Reproduces the usual choices ({b,1} over J(0,B), {b,a0,1} over J(A,B),
// the whole chain when the base is linear).
int default_maximal_chain(const ChainForest& f);

enum class RamseyVerdict { Ramsey, NotRamsey, Undetermined };

std::string to_string(RamseyVerdict v);

struct RamseyResult {
  RamseyVerdict verdict;
  // For NotRamsey: elements whose R-classes are incomparable in X(M).
  std::optional<std::pair<Elem, Elem>> witness;
  std::string note;
};

// X(M) non-linear -> NotRamsey with an incomparable class pair.
// X(M) linear and M almost R-trivial -> Ramsey.
// X(M) linear otherwise -> Undetermined (never coerced to a definite answer).
RamseyResult decide_ramsey(const Monoid& m);

}  // namespace rmon

// Function arrays over a partial semigroup: located-word arrays based on
// tuples of words, point-based arrays over the semigroup of a poset, their
// tensor products, and the density condition (every finite sample can be
// multiplied on the right through every index).
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rmon/located_words.hpp"
#include "rmon/po_semigroup.hpp"

namespace rmon {

// One index of an array over a tuple base: evaluate each (factor, element)
// term on its factor and multiply.  Factors are strictly increasing, so
// iterated tensors flatten to a single term list (associativity holds up to
// this canonical relabeling).
struct ArrayIndex {
  std::vector<std::pair<int, Elem>> terms;
  std::string label;
};

struct WordArray {
  PointedMSet set;
  int arity = 1;                    // base = (located words)^arity
  std::vector<ArrayIndex> indices;
};

// The action array: base = words over s, one index per monoid element,
// lambda_a(w) = a(w).
WordArray array_from_action(const PointedMSet& s);

// Index set Λ0 ∪ Λ1 ∪ Λ0×Λ1 over the concatenated base.
WordArray tensor(const WordArray& a0, const WordArray& a1);

std::optional<LocatedWord> eval(const WordArray& a, int index,
                                std::span<const LocatedWord> x);

// Point-based array over the semigroup of `poset`: the base is a single
// point, so each index carries its value directly.
struct PointArray {
  ActedPoset poset;
  std::vector<ArrayIndex> indices;
  std::vector<NormalWord> values;
};

// Indices are the monoid elements, values a(y) in the semigroup over y's poset.
PointArray array_point_based(const ActedPoset& y_poset, int y_point);

// Tensor of point-based arrays is point-based: the pair value is the join.
PointArray tensor(const PointArray& a0, const PointArray& a1);

enum class DedeStatus { Satisfied, Unsatisfied, BoundExhausted };

std::string to_string(DedeStatus s);

struct DedeResult {
  DedeStatus status = DedeStatus::Unsatisfied;
  std::vector<LocatedWord> witness;  // base tuple, when satisfied
  long long tried = 0;
};

// Finds the least base tuple (by slot order: staggered single-letter words
// starting at the smallest feasible offset) making s * lambda(x) defined for
// every sample element s and every index lambda.  Offsets beyond max_slot
// are not tried; running out is reported distinctly from failure.
DedeResult check_dede(const WordArray& a, std::span<const LocatedWord> sample,
                      int max_slot);

struct DedePointResult {
  DedeStatus status = DedeStatus::Satisfied;
};

// Point-based arrays live over a total semigroup: every product is defined.
DedePointResult check_dede(const PointArray& a, std::span<const NormalWord> sample);

}  // namespace rmon

// The semigroup generated by a partial order P: words over the points of P
// modulo p∨q = q∨p = q whenever p <= q.  Normal forms are the words whose
// adjacent letters are incomparable.
#pragma once

#include <set>
#include <span>
#include <vector>

#include "rmon/order.hpp"

namespace rmon {

struct NormalWord {
  std::vector<int> letters;  // point indices, adjacent letters incomparable

  bool operator==(const NormalWord&) const = default;
  auto operator<=>(const NormalWord&) const = default;
  size_t length() const { return letters.size(); }
};

// Rewrites the leftmost comparable adjacent pair to its maximum until no pair
// remains.  Empty input is rejected (no identity in the semigroup).
NormalWord normalize(const ActedPoset& p, std::vector<int> seq);

// Concatenate-then-normalize.  Operands must be valid normal words over p.
NormalWord join(const ActedPoset& p, const NormalWord& u, const NormalWord& v);

// Letterwise action followed by normalization; an endomorphism of the
// semigroup for each monoid element.
NormalWord act(const ActedPoset& p, Elem a, const NormalWord& w);

// type_of(a_0..a_k, y) = a_0(y) ∨ ... ∨ a_k(y), taken in the semigroup over
// the poset that carries y (normally Y(M)).
NormalWord type_of(const ActedPoset& p, std::span<const Elem> elems, int y);

std::string render(const ActedPoset& p, const NormalWord& w);

// Every normal form reachable by applying rewrites in all possible orders.
// Confluence holds exactly when the result is a singleton.
std::set<std::vector<int>> rewrite_closure_normal_forms(const ActedPoset& p,
                                                        const std::vector<int>& seq);

struct ConfluenceReport {
  bool ok = true;
  long long trials = 0;
  std::string detail;
};

// Random posets (up to 6 points) and random words: the rewrite closure must
// be the singleton {normalize(word)}, and join must be associative on random
// triples.  Deterministic in the seed.
ConfluenceReport confluence_check(int trials, unsigned seed);

// All partial orders on {0..n-1} as leq matrices, by brute enumeration of
// reflexive antisymmetric transitive relations.  n <= 4.
std::vector<std::vector<std::vector<char>>> all_posets(int n);

// A poset with no action attached (the acting monoid is trivial); enough
// for the pure semigroup operations.
ActedPoset plain_poset(std::vector<std::vector<char>> leq);

}  // namespace rmon

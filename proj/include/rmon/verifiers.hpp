// Desk-scale verifiers: tameness checking and search, the two-coloring that
// defeats non-linear X(M), reduced strings and their embedding into the
// chain semigroup, and the variable-word transform.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rmon/colorings.hpp"
#include "rmon/located_words.hpp"
#include "rmon/po_semigroup.hpp"

namespace rmon {

struct TameProduct {
  std::vector<int> selection;  // indices into the word sequence
  std::vector<Elem> elems;
  LocatedWord word;
  int color = 0;
};

struct TameViolation {
  NormalWord type;
  TameProduct first, second;
};

struct TameReport {
  bool tame = true;
  std::optional<TameViolation> violation;
  long long products = 0;
  int groups = 0;  // distinct admitted types encountered
};

struct TameParams {
  int max_len = 2;                 // product length bound L
  std::vector<NormalWord> types;   // admitted types F; empty = all tuple types <= L
  bool close_suffixes = false;     // enlarge F by suffix types of tuples <= L
};

// Enumerates every index-increasing selection of length <= L and every
// element tuple, groups the products a_0(w_{i_0})...a_k(w_{i_k}) by
// type_of(a_0..a_k, y), and requires each group whose type is admitted to be
// monochromatic.  ws must be basic with the distinguished letter in each word.
TameReport check_tame(const ChainForest& y, int y_point, const PointedMSet& fam,
                      const Coloring& col, std::span<const LocatedWord> ws,
                      const TameParams& params);

struct SearchBounds {
  int max_slot = 8;
  int max_word_len = 2;
};

// All nonempty words with slots in [min_slot, max_slot] and at most max_len
// entries, in lexicographic (slot, letter) order of the entry vector.
std::vector<LocatedWord> enumerate_words(const PointedMSet& fam, int min_slot, int max_slot,
                                         int max_len, bool require_distinguished);

struct TameSearchResult {
  std::optional<std::vector<LocatedWord>> witness;
  long long nodes = 0;  // candidate words attempted across the backtracking tree
};

// First (in lexicographic (slot, letter) order) basic sequence of seq_len
// words within the bounds on which the coloring is tame.  Pure backtracking:
// a prefix is abandoned as soon as its own products conflict.
TameSearchResult search_tame(const ChainForest& y, int y_point, const PointedMSet& fam,
                             const Coloring& col, int seq_len, const SearchBounds& bounds,
                             const TameParams& params);

struct NotRamseyReport {
  bool ok = false;
  Elem a = 0, b = 0;
  bool colcheck = false;  // [a] not in b*X(M) and [b] not in a*X(M)
  long long pairs = 0;
  std::string detail;
};

// Exhaustively confirms, over every basic pair (w0, w1) within the bounds
// with the identity class occurring in both, that a(w0)w1 gets color 0 and
// b(w0)w1 gets color 1 under the first-occurrence coloring.  The classes of
// a and b must be incomparable in X(M).
NotRamseyReport verify_not_ramsey(const Monoid& m, Elem a, Elem b,
                                  const SearchBounds& bounds, int threads = 1);

// Keep the letters in `keep`, then collapse adjacent repeats.
std::vector<int> reduced_string(std::span<const int> letters, std::span<const int> keep);

struct EmbedCheckReport {
  bool ok = true;
  long long sequences = 0;
  int distinct_strings = 0;
  std::string detail;
};

// For every sequence over A ∪ B up to maxlen, the type of the sequence at
// the designated maximal chain of Y(J(A,B)) equals the image of its reduced
// string (empty -> {b}, a_1...a_k -> {b,a_1} v ... v {b,a_k}), and the image
// is injective on reduced strings.  B must be nonempty.
EmbedCheckReport reduced_string_embedding_check(const std::vector<std::string>& a_labels,
                                                const std::vector<std::string>& b_labels,
                                                int maxlen);

struct FkProduct {
  std::vector<int> selection;
  std::vector<int> letters;  // substituted letters
  LocatedWord word;
  int color = 0;
};

struct FkViolation {
  std::vector<int> reduced;
  FkProduct first, second;
};

struct FkReport {
  bool ok = true;
  std::optional<FkViolation> violation;
  long long products = 0;
  int groups = 0;
};

// Substituted products w_{n_0}[c_0]...w_{n_k}[c_k] grouped by the reduced
// string of (c_0..c_k); every group whose string lies in `strings` (empty =
// no filter) must be monochromatic.
FkReport fk_check(const VariableFamily& var, const Coloring& col,
                  std::span<const LocatedWord> ws,
                  const std::vector<std::vector<int>>& strings, int max_len);

struct HjResult {
  std::vector<LocatedWord> words;
};

// From an interleaved basic sequence v_0, v'_0, v_1, v'_1, ..., v_n (each
// with the variable, each v'_i left-variable) build w_0 = v_0[b] and
// w_{i+1} = v'_i v_{i+1}: w_0 is variable-free, the rest are left-variable.
HjResult hj_transform(const VariableFamily& var, std::span<const LocatedWord> vs, int b_letter);

}  // namespace rmon

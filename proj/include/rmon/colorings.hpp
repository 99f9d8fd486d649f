// Deterministic colorings of located words, constructed from short spec
// strings so certificates can name them exactly.
#pragma once

#include <functional>
#include <string>

#include "rmon/located_words.hpp"

namespace rmon {

class Coloring {
 public:
  Coloring() = default;
  Coloring(std::string spec, int colors, std::function<int(const LocatedWord&)> fn)
      : spec_(std::move(spec)), colors_(colors), fn_(std::move(fn)) {}

  int colors() const { return colors_; }
  int operator()(const LocatedWord& w) const { return fn_(w); }
  const std::string& spec() const { return spec_; }

 private:
  std::string spec_;
  int colors_ = 1;
  std::function<int(const LocatedWord&)> fn_;
};

struct ColoringContext {
  const PointedMSet* family = nullptr;   // letters of the words being colored
  const VariableFamily* var = nullptr;   // required by reduced-string
};

// Specs: constant[:k] | parity | first-letter | expr:<mod>:<expression> |
// first-occurrence:<a>:<b> | ytype[:len] | reduced-string[:len].
// Expressions use integer literals, + - * %, parentheses, and the variables
// len, nondist, c(<letter label>).
Coloring make_coloring(const std::string& spec, const ColoringContext& ctx);

Coloring constant_coloring(int k);
Coloring parity_coloring(const PointedMSet& fam);
Coloring first_letter_coloring(const PointedMSet& fam);
Coloring expr_coloring(const PointedMSet& fam, int modulus, const std::string& expr);

// Two colors split by whether the class of `a` occurs first: color 0 iff [a]
// occurs and its first occurrence precedes every occurrence of [b].  Words
// must be over the X(M) letter family; [a] and [b] must be incomparable.
Coloring counterexample_coloring(const Monoid& m, Elem a, Elem b);

// The type itself, as a color: the join of the letterwise images of the
// designated maximal chain, against a palette of joins of length <= len
// (plus one overflow bucket).  Class representatives act; this is letter-
// well-defined when M is almost R-trivial.
Coloring ytype_coloring(const Monoid& m, int palette_len);

// Palette of reduced strings over A of length <= len plus overflow; the
// color of a word is the reduced string of its letter sequence.
Coloring reduced_string_coloring(const VariableFamily& var, int max_len);

}  // namespace rmon

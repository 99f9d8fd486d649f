// Finite monoids as multiplication tables, the three generating families,
// and the Green's R-relation predicates used by the Ramsey decision.
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmon {

using Elem = int;

struct Monoid {
  std::string name;
  int size = 0;
  Elem identity = 0;
  // table[a][b] is the product a*b; rows are indexed by the left factor.
  std::vector<std::vector<Elem>> table;
  // Optional display labels; empty or exactly `size` entries.
  std::vector<std::string> labels;

  Elem mul(Elem a, Elem b) const { return table[a][b]; }
  std::string label(Elem a) const {
    return labels.empty() ? std::to_string(a) : labels[a];
  }
  Elem elem_by_label(const std::string& s) const;  // throws if absent
};

struct Violation {
  std::string kind;              // "shape", "range", "identity", "associativity", ...
  std::array<int, 3> witness{};  // indices involved; unused slots are -1
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// Structural check: table shape, entry ranges, identity laws, associativity.
// Malformed input is reported, never thrown.
ValidationReport validate(const Monoid& m);

// G_n = ({0..n-1}, i*j = min(i+j, n-1), identity 0).
Monoid family_gowers(int n);

// I_n: nondecreasing f : n -> n with f(0) = 0 and f(i+1) <= f(i)+1, under
// composition (f*g)(i) = f(g(i)).  Elements are ordered lexicographically by
// value sequence; |I_n| = 2^(n-1).  Labels are the value sequences as digit
// strings, so n <= 10.
Monoid family_I(int n);

// J(A,B) on {1} ∪ A ∪ B: for c in A∪B, c*a = c when a in A and c*b = b when
// b in B.  A and B are disjoint label sets not containing "1".
Monoid family_J(const std::vector<std::string>& a_labels,
                const std::vector<std::string>& b_labels);

// Value-sequence helpers for I_n; shared with the mu-tower isomorphism.
std::vector<std::vector<int>> i_carrier(int n);   // lex-ordered sequences
std::vector<int> i_identity_seq(int n);           // (0,1,...,n-1)
std::vector<int> i_t_seq(int n);                  // t_n: 0,0,1,...,n-2
std::vector<int> i_f_seq(const std::vector<int>& s);    // f: 0,s(0)+1,...,s(n-2)+1
std::vector<int> i_embed_seq(const std::vector<int>& s);  // I_n -> I_{n+1}: 0,s(0)+1,...
std::vector<int> i_compose(const std::vector<int>& f, const std::vector<int>& g);
int i_index(const std::vector<std::vector<int>>& carrier, const std::vector<int>& seq);

// aM as a sorted element list.
std::vector<Elem> principal_right_ideal(const Monoid& m, Elem a);

// Partition of M by equality of principal right ideals.  Blocks are sorted
// internally and ordered by their least element.
std::vector<std::vector<Elem>> r_classes(const Monoid& m);

bool is_r_trivial(const Monoid& m);

// Every element whose R-class is not a singleton must be a right zero:
// a*b = b for all a.
bool is_almost_r_trivial(const Monoid& m);

class ClosureViolation : public std::invalid_argument {
 public:
  Elem a, b;  // a*b escapes the chosen subset
  ClosureViolation(Elem a_, Elem b_, const std::string& msg)
      : std::invalid_argument(msg), a(a_), b(b_) {}
};

// Restriction of m to `elems` (must contain the identity and be closed;
// throws ClosureViolation with the offending pair otherwise).  Elements are
// reindexed in sorted order and keep their labels.
Monoid submonoid(const Monoid& m, std::vector<Elem> elems);

// f given as an image table of length m.size.
bool is_endomorphism(const Monoid& m, const std::vector<Elem>& f);

}  // namespace rmon

// Extension of a monoid-with-endomorphism by a new generator tau obeying
// s*tau = tau*f(s), the tower that iterates it starting from the trivial
// monoid, and the checks tying the tower to the concrete I_n family.
#pragma once

#include <string>
#include <vector>

#include "rmon/monoid.hpp"

namespace rmon {

// A monoid together with a designated element t and an endomorphism f
// satisfying s*t = t*f(s) for every s.
struct MuTriple {
  Monoid monoid;
  Elem t = 0;
  std::vector<Elem> endo;
  int base_size = 0;  // size of the base monoid when built by mu(); else 0
};

// Monoid axioms, f an endomorphism, and the law s*t = t*f(s).
ValidationReport validate(const MuTriple& tr);

// The extension: carrier {s} ∪ {tau*s}, with
//   (tau^e1 s1)(tau^e2 s2) = tau^e1 (s1 s2)            if e2 = 0
//                          = tau (phi(tau^e1 s1) s2)   if e2 = 1
// where phi(tau^e s) = t^e f(s).  The new triple has t = tau and
// endo = phi.  Output invariants are re-verified.
MuTriple mu(const MuTriple& tr, const std::string& tau_label);

// k-1 extension steps from the trivial monoid; new generators are labeled
// t2, ..., tk and composite elements tk*...*t2.  Size 2^(k-1).
MuTriple tower(int k);

struct IsoReport {
  bool ok = true;
  std::string detail;
};

// tower(k) is isomorphic to I_k via the recursive embedding s -> s',
// s'(0) = 0, s'(i) = s(i-1)+1, and tau*s -> t_k (s'); the iso carries t to
// t_k and intertwines the endomorphisms, and f_k restricted to the embedded
// copy of I_{k-1} is the embedding of f_{k-1}.
IsoReport iso_to_concrete(int k);

struct RecursionReport {
  bool ok = true;
  long long pairs = 0;
  std::string detail;
};

// The order of I_{n+1} (membership in the principal right ideal) agrees with
// the recursion: tau^e1 s1 <= tau^e2 s2 iff e2 <= e1 and
// s1 <=_{I_n} f^(e1-e2)(s2), unfolded down to I_1.
RecursionReport order_recursion_check(int n);

struct HasseReport {
  bool ok = true;
  std::string detail;
};

// The order of I_4 is exactly the reflexive-transitive closure of the two
// 4-chains a3<=a2<=a1<=1 and t4a3<=t4a2<=t4a1<=t4 glued by t4<=a1 and
// t4a1<=a3; t4 and a2 are incomparable; and dropping {t4} resp. {a2,a3}
// leaves submonoids on which the Ramsey decision is positive.
HasseReport i4_hasse_check();

struct LemmaReport {
  bool ok = true;
  long long checks = 0;
  std::string detail;
};

// In an extension, every product (tau*s)*sigma is again of the form
// tau*(s*s') for some s' in the base; found by brute scan.
LemmaReport lemma_tech_check(const MuTriple& ext);

}  // namespace rmon

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rmon/mu_tower.hpp"

using namespace rmon;

namespace {

// G_2 with t the absorbing element and f the identity map: s*t = t = t*f(s).
MuTriple absorbing_triple() {
  MuTriple tr;
  tr.monoid = family_gowers(2);
  tr.t = 1;
  tr.endo = {0, 1};
  tr.base_size = 2;
  return tr;
}

}  // namespace

TEST_CASE("triple validation: the law and the endomorphism are both checked") {
  MuTriple good = absorbing_triple();
  CHECK(validate(good).ok());
  MuTriple swap = good;
  swap.endo = {1, 0};  // does not fix the identity
  CHECK(!validate(swap).ok());
  MuTriple broken = good;
  broken.t = 0;
  broken.endo = {0, 0};  // an endomorphism, but 1*t != t*f(1)
  CHECK(!validate(broken).ok());
  MuTriple short_endo = good;
  short_endo.endo = {0};
  CHECK(!validate(short_endo).ok());
}

TEST_CASE("one extension step: carrier, labels, and the defining products") {
  MuTriple ext = mu(absorbing_triple(), "T");
  CHECK(ext.monoid.size == 4);
  CHECK(ext.base_size == 2);
  CHECK(ext.t == 2);
  CHECK(ext.monoid.labels == std::vector<std::string>{"0", "1", "T", "T*1"});
  CHECK(validate(ext).ok());
  const Monoid& n = ext.monoid;
  // base products survive unchanged
  CHECK(n.mul(1, 1) == 1);
  // (tau s1) s2 = tau (s1 s2)
  CHECK(n.mul(2, 1) == 3);
  CHECK(n.mul(3, 1) == 3);
  // s (tau s2) = tau (f(s) s2), and f is the identity here
  CHECK(n.mul(1, 2) == 3);
  // (tau s1)(tau s2) = tau (t f(s1) s2), and t = 1 absorbs
  CHECK(n.mul(2, 2) == 3);
  CHECK(n.mul(3, 3) == 3);
  // the new endomorphism is phi: tau-part elements map through t*f(.)
  CHECK(ext.endo == std::vector<Elem>{0, 1, 1, 1});
}

TEST_CASE("extension rejects invalid input and label collisions") {
  MuTriple bad = absorbing_triple();
  bad.endo = {1, 0};
  CHECK_THROWS_AS(mu(bad, "T"), std::invalid_argument);
  CHECK_THROWS_AS(mu(tower(2), "t2"), std::invalid_argument);
  CHECK_THROWS_AS(mu(absorbing_triple(), "1"), std::invalid_argument);
}

TEST_CASE("the tower doubles at each step and names its generators") {
  for (int k = 1; k <= 6; ++k) {
    MuTriple tr = tower(k);
    CHECK(tr.monoid.size == (1 << (k - 1)));
    CHECK(tr.monoid.name == "tower(" + std::to_string(k) + ")");
    CHECK(validate(tr).ok());
    if (k >= 2) CHECK(tr.monoid.labels[tr.t] == "t" + std::to_string(k));
  }
  CHECK(tower(1).monoid.labels == std::vector<std::string>{"1"});
  CHECK(tower(2).monoid.labels == std::vector<std::string>{"1", "t2"});
  CHECK(tower(3).monoid.labels ==
        std::vector<std::string>{"1", "t2", "t3", "t3*t2"});
  CHECK(tower(4).monoid.labels ==
        std::vector<std::string>{"1", "t2", "t3", "t3*t2", "t4", "t4*t2", "t4*t3",
                                 "t4*t3*t2"});
  CHECK_THROWS_AS(tower(9), std::runtime_error);
  CHECK_THROWS_AS(tower(0), std::invalid_argument);
}

TEST_CASE("the abstract tower is the concrete step-function family") {
  for (int k = 1; k <= 6; ++k) {
    IsoReport rep = iso_to_concrete(k);
    CHECK(rep.ok);
    CHECK(rep.detail == std::to_string(1 << (k - 1)) + " elements, isomorphism verified");
  }
}

TEST_CASE("ideal order equals the two-case recursion") {
  for (int n = 1; n <= 4; ++n) {
    RecursionReport rep = order_recursion_check(n);
    CHECK(rep.ok);
    CHECK(rep.pairs == (1LL << n) * (1LL << n));
  }
}

TEST_CASE("the eight-element order is two glued chains") {
  HasseReport rep = i4_hasse_check();
  CHECK(rep.ok);
  CHECK(rep.detail == "order, incomparability and both submonoids verified");
}

TEST_CASE("tau-part products fold back into the tau-part") {
  MuTriple ext = mu(absorbing_triple(), "T");
  LemmaReport rep = lemma_tech_check(ext);
  CHECK(rep.ok);
  CHECK(rep.checks == 2 * 4);  // base element times every extension element
  CHECK(lemma_tech_check(tower(3)).ok);
  CHECK(lemma_tech_check(tower(4)).ok);
  MuTriple no_base = absorbing_triple();
  no_base.base_size = 0;
  CHECK_THROWS_AS(lemma_tech_check(no_base), std::invalid_argument);
}

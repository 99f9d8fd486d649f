#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "rmon/verifiers.hpp"

using namespace rmon;

namespace {

struct TameRig {
  Monoid m;
  XPoset x;
  ChainForest y;
  int y0;
  PointedMSet fam;
};

TameRig rig(const Monoid& m) {
  TameRig r{m, x_of(m), y_of(m), 0, {}};
  r.y0 = default_maximal_chain(r.y);
  r.fam = pointed_xm(r.x);
  return r;
}

// Independent word enumeration: slot subsets times letter assignments,
// sorted by entry vector; equals lexicographic order.
std::vector<LocatedWord> words_by_subsets(const PointedMSet& fam, int max_slot,
                                          int max_len) {
  std::vector<LocatedWord> out;
  int slots = max_slot + 1;
  for (unsigned mask = 1; mask < (1u << slots); ++mask) {
    std::vector<int> chosen;
    for (int s = 0; s < slots; ++s) {
      if (mask & (1u << s)) chosen.push_back(s);
    }
    if ((int)chosen.size() > max_len) continue;
    std::vector<int> letters(chosen.size(), 0);
    for (;;) {
      bool has_dist = false;
      std::vector<std::pair<int, int>> entries;
      for (size_t i = 0; i < chosen.size(); ++i) {
        entries.emplace_back(chosen[i], letters[i]);
        has_dist = has_dist || letters[i] == fam.distinguished;
      }
      if (has_dist) out.push_back(LocatedWord{entries});
      int i = (int)letters.size() - 1;
      while (i >= 0 && letters[i] == fam.letter_count() - 1) letters[i--] = 0;
      if (i < 0) break;
      ++letters[i];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("coloring specs parse and disagree only where they should") {
  TameRig r = rig(family_gowers(2));
  ColoringContext ctx;
  ctx.family = &r.fam;
  Coloring con = make_coloring("constant:3", ctx);
  Coloring par = make_coloring("parity", ctx);
  Coloring fl = make_coloring("first-letter", ctx);
  Coloring ex = make_coloring("expr:4:len+2*nondist", ctx);
  LocatedWord w = make_word({{0, 0}, {1, 1}, {4, 1}}, r.fam);
  CHECK(con(w) == 3);
  CHECK(par(w) == 0);  // two letters differ from the distinguished one
  CHECK(par(make_word({{0, 0}, {1, 1}}, r.fam)) == 1);
  CHECK(fl(w) == 0);
  CHECK(fl(make_word({{2, 1}}, r.fam)) == 1);
  CHECK(ex(w) == (3 + 2 * 2) % 4);
  CHECK_THROWS_AS(make_coloring("no-such", ctx), std::invalid_argument);
  CHECK_THROWS_AS(make_coloring("expr:2", ctx), std::invalid_argument);
}

TEST_CASE("first-occurrence coloring splits on which class appears first") {
  Monoid m = family_I(4);
  Elem t4 = m.elem_by_label("0012"), a2 = m.elem_by_label("0112");
  Coloring col = counterexample_coloring(m, t4, a2);
  XPoset x = x_of(m);
  int pa = x.elem_class[t4], pb = x.elem_class[a2], p1 = x.elem_class[m.identity];
  PointedMSet fam = pointed_xm(x);
  CHECK(col(make_word({{0, pa}, {1, pb}}, fam)) == 0);
  CHECK(col(make_word({{0, pb}, {1, pa}}, fam)) == 1);
  CHECK(col(make_word({{0, pa}, {1, p1}}, fam)) == 0);
  CHECK(col(make_word({{0, p1}}, fam)) == 1);  // no first class at all
  CHECK_THROWS_AS(counterexample_coloring(m, m.elem_by_label("0000"),
                                          m.elem_by_label("0001")),
                  std::invalid_argument);
}

TEST_CASE("tame check rejects mismatched inputs") {
  TameRig r = rig(family_gowers(2));
  Coloring col = constant_coloring(0);
  std::vector<LocatedWord> none;
  CHECK_THROWS_AS(check_tame(r.y, r.y0, r.fam, col, none, {}), std::invalid_argument);
  std::vector<LocatedWord> no_dist = {make_word({{0, 1}}, r.fam)};
  CHECK_THROWS_AS(check_tame(r.y, r.y0, r.fam, col, no_dist, {}), std::invalid_argument);
  std::vector<LocatedWord> not_basic = {make_word({{2, 0}}, r.fam),
                                        make_word({{1, 0}}, r.fam)};
  CHECK_THROWS_AS(check_tame(r.y, r.y0, r.fam, col, not_basic, {}), std::invalid_argument);
}

TEST_CASE("parity is not tame: mixing the identity pads a type group") {
  TameRig r = rig(family_gowers(2));
  ColoringContext ctx;
  ctx.family = &r.fam;
  Coloring par = make_coloring("parity", ctx);
  std::vector<LocatedWord> ws = {make_word({{0, 0}}, r.fam), make_word({{1, 0}}, r.fam)};
  TameParams params;
  TameReport rep = check_tame(r.y, r.y0, r.fam, par, ws, params);
  CHECK(!rep.tame);
  REQUIRE(rep.violation.has_value());
  // the broken group is the type of the designated chain itself
  CHECK(rep.violation->type.letters == std::vector<int>{r.y0});
  CHECK(rep.violation->first.color != rep.violation->second.color);
}

TEST_CASE("restricting the admitted types can hide the conflict") {
  TameRig r = rig(family_gowers(2));
  ColoringContext ctx;
  ctx.family = &r.fam;
  Coloring fl = make_coloring("first-letter", ctx);
  std::vector<LocatedWord> ws = {make_word({{0, 0}}, r.fam), make_word({{1, 0}}, r.fam)};
  TameReport all = check_tame(r.y, r.y0, r.fam, fl, ws, {});
  CHECK(!all.tame);  // (1,0) starts with the absorbing letter, (0,.) does not
  TameParams params;
  params.types = {type_of(r.y.poset, std::vector<Elem>{1}, r.y0)};
  TameReport rep = check_tame(r.y, r.y0, r.fam, fl, ws, params);
  CHECK(rep.tame);  // products of that type all start with the absorbing letter
  CHECK(rep.groups == 1);
}

TEST_CASE("closing the admitted types under suffixes widens the group list") {
  TameRig r = rig(family_gowers(2));
  Coloring con = constant_coloring(0);
  std::vector<LocatedWord> ws = {make_word({{0, 0}}, r.fam), make_word({{1, 0}}, r.fam)};
  NormalWord id_type = type_of(r.y.poset, std::vector<Elem>{0}, r.y0);
  TameParams narrow;
  narrow.types = {id_type};
  TameReport rep1 = check_tame(r.y, r.y0, r.fam, con, ws, narrow);
  CHECK(rep1.tame);
  CHECK(rep1.groups == 1);
  TameParams closed = narrow;
  closed.close_suffixes = true;  // (0,1) has the admitted type; its suffix (1) joins in
  TameReport rep2 = check_tame(r.y, r.y0, r.fam, con, ws, closed);
  CHECK(rep2.tame);
  CHECK(rep2.groups == 2);
}

TEST_CASE("type-derived coloring is tame on words along the designated chain") {
  TameRig r = rig(family_J({"a1", "a2"}, {"b"}));
  Monoid& j = r.m;
  int p1 = r.x.elem_class[j.identity];
  int pa1 = r.x.elem_class[j.elem_by_label("a1")];
  int pb = r.x.elem_class[j.elem_by_label("b")];
  std::vector<LocatedWord> ws = {make_word({{0, p1}}, r.fam),
                                 make_word({{1, pa1}, {2, p1}}, r.fam),
                                 make_word({{3, pb}, {4, p1}, {5, pa1}}, r.fam)};
  Coloring col = ytype_coloring(j, 3);
  TameParams params;
  TameReport rep = check_tame(r.y, r.y0, r.fam, col, ws, params);
  CHECK(rep.tame);
  CHECK(rep.groups > 2);
  CHECK(rep.products > 0);
}

TEST_CASE("tame search matches the brute-force first witness") {
  TameRig r = rig(family_gowers(2));
  ColoringContext ctx;
  ctx.family = &r.fam;
  Coloring par = make_coloring("parity", ctx);
  SearchBounds bounds{4, 2};
  TameParams params;
  // oracle: scan all basic pairs in lexicographic order, checking each
  auto words = words_by_subsets(r.fam, bounds.max_slot, bounds.max_word_len);
  std::optional<std::vector<LocatedWord>> expected;
  for (const auto& w0 : words) {
    for (const auto& w1 : words) {
      if (w1.min_slot() <= w0.max_slot()) continue;
      std::vector<LocatedWord> seq = {w0, w1};
      if (check_tame(r.y, r.y0, r.fam, par, seq, params).tame) {
        expected = seq;
        break;
      }
    }
    if (expected) break;
  }
  TameSearchResult res = search_tame(r.y, r.y0, r.fam, par, 2, bounds, params);
  REQUIRE(expected.has_value());
  REQUIRE(res.witness.has_value());
  CHECK(*res.witness == *expected);
  CHECK(res.nodes > 0);
  // the known first witness: identity-letter pairs at consecutive slots
  CHECK((*res.witness)[0].entries ==
        std::vector<std::pair<int, int>>{{0, r.fam.distinguished},
                                         {1, r.fam.distinguished}});
  CHECK((*res.witness)[1].entries ==
        std::vector<std::pair<int, int>>{{2, r.fam.distinguished},
                                         {3, r.fam.distinguished}});
}

TEST_CASE("tame search: single word, and exhaustion on hopeless bounds") {
  TameRig r = rig(family_gowers(2));
  ColoringContext ctx;
  ctx.family = &r.fam;
  Coloring par = make_coloring("parity", ctx);
  TameSearchResult one = search_tame(r.y, r.y0, r.fam, par, 1, {4, 2}, {});
  REQUIRE(one.witness.has_value());
  CHECK((*one.witness)[0].entries ==
        std::vector<std::pair<int, int>>{{0, r.fam.distinguished}});
  // two words cannot fit in two slots with every word holding the
  // distinguished letter and the parity constraint satisfied
  TameSearchResult none = search_tame(r.y, r.y0, r.fam, par, 3, {2, 1}, {});
  CHECK(!none.witness.has_value());
  CHECK(none.nodes > 0);
}

TEST_CASE("the two-coloring defeats incomparable pairs within the bounds") {
  Monoid j = family_J({"a1", "a2"}, {"b"});
  NotRamseyReport rj = verify_not_ramsey(j, j.elem_by_label("a1"),
                                         j.elem_by_label("a2"), {3, 2});
  CHECK(rj.ok);
  CHECK(rj.colcheck);
  CHECK(rj.pairs > 0);
  Monoid i4 = family_I(4);
  NotRamseyReport ri = verify_not_ramsey(i4, i4.elem_by_label("0012"),
                                         i4.elem_by_label("0112"), {3, 2});
  CHECK(ri.ok);
  // threading changes nothing
  NotRamseyReport rt = verify_not_ramsey(i4, i4.elem_by_label("0012"),
                                         i4.elem_by_label("0112"), {3, 2}, 4);
  CHECK(rt.ok);
  CHECK(rt.pairs == ri.pairs);
}

TEST_CASE("the two-coloring refuses comparable pairs") {
  Monoid j = family_J({"a1", "a2"}, {"b"});
  CHECK_THROWS_AS(
      verify_not_ramsey(j, j.elem_by_label("a1"), j.elem_by_label("b"), {3, 2}),
      std::invalid_argument);
  Monoid g = family_gowers(2);
  CHECK_THROWS_AS(verify_not_ramsey(g, 0, 1, {3, 2}), std::invalid_argument);
}

TEST_CASE("reduced strings keep a subset of letters and collapse runs") {
  std::vector<int> w = {1, 1, 3, 2, 2, 1};
  std::vector<int> keep12 = {1, 2};
  CHECK(reduced_string(w, keep12) == std::vector<int>{1, 2, 1});
  CHECK(reduced_string(w, std::vector<int>{3}) == std::vector<int>{3});
  CHECK(reduced_string(w, std::vector<int>{}) == std::vector<int>{});
  CHECK(reduced_string(std::vector<int>{}, keep12) == std::vector<int>{});
}

TEST_CASE("reduced strings: idempotence and concatenation, randomized") {
  std::mt19937 rng(99);
  std::vector<int> keep = {0, 1};
  for (int t = 0; t < 2000; ++t) {
    auto rand_word = [&](int len) {
      std::vector<int> w(len);
      for (int& x : w) x = (int)(rng() % 5);
      return w;
    };
    std::vector<int> u = rand_word(1 + rng() % 8), v = rand_word(rng() % 8);
    std::vector<int> ru = reduced_string(u, keep);
    // only kept letters, no adjacent repeats
    for (size_t i = 0; i < ru.size(); ++i) {
      CHECK(ru[i] <= 1);
      if (i > 0) CHECK(ru[i] != ru[i - 1]);
    }
    CHECK(reduced_string(ru, keep) == ru);  // idempotent
    std::vector<int> rv = reduced_string(v, keep);
    std::vector<int> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    std::vector<int> cat = ru;
    cat.insert(cat.end(), rv.begin(), rv.end());
    CHECK(reduced_string(uv, keep) == reduced_string(cat, keep));
  }
}

TEST_CASE("chain types realize exactly the reduced strings") {
  EmbedCheckReport rep = reduced_string_embedding_check({"a1", "a2"}, {"b"}, 3);
  CHECK(rep.ok);
  CHECK(rep.sequences == 3 + 9 + 27);
  CHECK(rep.distinct_strings == 7);  // e, 1, 2, 12, 21, 121, 212
  EmbedCheckReport one = reduced_string_embedding_check({"a"}, {"b"}, 4);
  CHECK(one.ok);
  CHECK(one.distinct_strings == 2);
  CHECK_THROWS_AS(reduced_string_embedding_check({"a"}, {}, 3), std::invalid_argument);
}

TEST_CASE("substituted products grouped by reduced string: coloring by the string is constant") {
  VariableFamily var = variable_family({"a1", "a2"}, {"b"});
  Coloring col = reduced_string_coloring(var, 3);
  std::vector<LocatedWord> ws = {make_word({{0, var.variable}}, var.set),
                                 make_word({{1, var.variable}, {2, var.variable}}, var.set)};
  FkReport rep = fk_check(var, col, ws, {}, 2);
  CHECK(rep.ok);
  CHECK(rep.products > 0);
  CHECK(rep.groups > 1);
}

TEST_CASE("substituted products: the first-letter coloring breaks a mixed group") {
  VariableFamily var = variable_family({"a1", "a2"}, {"b"});
  PointedMSet& fam = var.set;
  ColoringContext ctx;
  ctx.family = &fam;
  Coloring fl = make_coloring("first-letter", ctx);
  std::vector<LocatedWord> ws = {make_word({{0, var.variable}}, fam),
                                 make_word({{1, var.variable}}, fam)};
  FkReport rep = fk_check(var, fl, ws, {}, 2);
  CHECK(!rep.ok);
  REQUIRE(rep.violation.has_value());
  // the group of the single A letter mixes words starting with a1 and with b
  CHECK(rep.violation->reduced == std::vector<int>{var.a_letters[0]});
  CHECK(rep.violation->first.color != rep.violation->second.color);
  // restricting to the empty reduced string (pure B substitutions) passes
  FkReport onlyb = fk_check(var, fl, ws, {std::vector<int>{}}, 2);
  CHECK(onlyb.ok);
  CHECK(onlyb.groups == 1);
}

TEST_CASE("interleaved transform: shapes, outputs and re-expansion") {
  VariableFamily var = variable_family({"a"}, {"b"});
  int x = var.variable, a = var.a_letters[0], b = var.b_letters[0];
  LocatedWord v0 = make_word({{0, a}, {1, x}}, var.set);
  LocatedWord vp0 = make_word({{2, x}, {3, a}}, var.set);
  LocatedWord v1 = make_word({{4, x}}, var.set);
  LocatedWord vp1 = make_word({{5, x}}, var.set);
  LocatedWord v2 = make_word({{6, a}, {7, x}}, var.set);
  std::vector<LocatedWord> vs = {v0, vp0, v1, vp1, v2};
  HjResult res = hj_transform(var, vs, b);
  REQUIRE(res.words.size() == 3);
  CHECK(!contains_letter(res.words[0], x));
  CHECK(res.words[0].entries == std::vector<std::pair<int, int>>{{0, a}, {1, b}});
  CHECK(is_left_variable(var.set, res.words[1]));
  CHECK(is_left_variable(var.set, res.words[2]));
  CHECK(is_basic(res.words));
  // substituting a letter into the outputs re-expands to the interleaved product
  for (int c : {a, b, x}) {
    std::vector<LocatedWord> lhs, rhs;
    lhs.push_back(res.words[0]);
    for (size_t i = 1; i < res.words.size(); ++i) {
      lhs.push_back(substitute(var.set, res.words[i], c));
    }
    rhs.push_back(substitute(var.set, v0, b));
    for (size_t i = 1; i < vs.size(); ++i) rhs.push_back(substitute(var.set, vs[i], c));
    CHECK(*product_all(lhs) == *product_all(rhs));
  }
}

TEST_CASE("interleaved transform rejects malformed input") {
  VariableFamily var = variable_family({"a"}, {"b"});
  int x = var.variable, a = var.a_letters[0], b = var.b_letters[0];
  LocatedWord v0 = make_word({{0, x}}, var.set);
  LocatedWord good_vp = make_word({{1, x}}, var.set);
  LocatedWord v1 = make_word({{2, x}}, var.set);
  CHECK_THROWS_AS(hj_transform(var, std::vector<LocatedWord>{v0, good_vp}, b),
                  std::invalid_argument);  // even count
  LocatedWord bad_vp = make_word({{1, a}, {2, x}}, var.set);
  CHECK_THROWS_AS(hj_transform(var, std::vector<LocatedWord>{v0, bad_vp, v1}, b),
                  std::invalid_argument);  // v'_0 must be left-variable
  CHECK_THROWS_AS(hj_transform(var, std::vector<LocatedWord>{v0, good_vp, v1}, a),
                  std::invalid_argument);  // substitution letter must be in B
  LocatedWord no_var = make_word({{2, a}}, var.set);
  CHECK_THROWS_AS(hj_transform(var, std::vector<LocatedWord>{v0, good_vp, no_var}, b),
                  std::invalid_argument);  // every block carries the variable
}

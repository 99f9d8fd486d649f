#include "rmon/function_array.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmon {

WordArray array_from_action(const PointedMSet& s) {
  WordArray a;
  a.set = s;
  a.arity = 1;
  for (Elem e = 0; e < s.monoid.size; ++e) {
    a.indices.push_back({{{0, e}}, s.monoid.label(e)});
  }
  return a;
}

WordArray tensor(const WordArray& a0, const WordArray& a1) {
  if (a0.set.monoid.size != a1.set.monoid.size ||
      a0.set.letters != a1.set.letters) {
    throw std::invalid_argument("tensor: arrays over different pointed sets");
  }
  WordArray t;
  t.set = a0.set;
  t.arity = a0.arity + a1.arity;
  auto shift = [&](const ArrayIndex& ix) {
    ArrayIndex out = ix;
    for (auto& [factor, e] : out.terms) factor += a0.arity;
    return out;
  };
  for (const auto& ix : a0.indices) t.indices.push_back(ix);
  for (const auto& ix : a1.indices) t.indices.push_back(shift(ix));
  for (const auto& i0 : a0.indices) {
    for (const auto& i1 : a1.indices) {
      ArrayIndex pair = i0;
      ArrayIndex s1 = shift(i1);
      pair.terms.insert(pair.terms.end(), s1.terms.begin(), s1.terms.end());
      pair.label = "(" + i0.label + "," + i1.label + ")";
      t.indices.push_back(std::move(pair));
    }
  }
  return t;
}

std::optional<LocatedWord> eval(const WordArray& a, int index,
                                std::span<const LocatedWord> x) {
  if (index < 0 || index >= (int)a.indices.size()) {
    throw std::invalid_argument("eval: index out of range");
  }
  if ((int)x.size() != a.arity) throw std::invalid_argument("eval: base tuple arity mismatch");
  const auto& terms = a.indices[index].terms;
  std::optional<LocatedWord> acc;
  for (const auto& [factor, e] : terms) {
    LocatedWord part = act_word(a.set, e, x[factor]);
    if (!acc) {
      acc = std::move(part);
    } else {
      acc = product(*acc, part);
      if (!acc) return std::nullopt;
    }
  }
  return acc;
}

PointArray array_point_based(const ActedPoset& y_poset, int y_point) {
  if (y_point < 0 || y_point >= y_poset.points()) {
    throw std::invalid_argument("array_point_based: point out of range");
  }
  PointArray a;
  a.poset = y_poset;
  for (Elem e = 0; e < y_poset.monoid.size; ++e) {
    a.indices.push_back({{{0, e}}, y_poset.monoid.label(e)});
    a.values.push_back(normalize(y_poset, {y_poset.act(e, y_point)}));
  }
  return a;
}

PointArray tensor(const PointArray& a0, const PointArray& a1) {
  if (a0.poset.points() != a1.poset.points()) {
    throw std::invalid_argument("tensor: point arrays over different posets");
  }
  PointArray t;
  t.poset = a0.poset;
  auto shift = [&](const ArrayIndex& ix) {
    ArrayIndex out = ix;
    for (auto& [factor, e] : out.terms) factor += 1;
    return out;
  };
  for (size_t i = 0; i < a0.indices.size(); ++i) {
    t.indices.push_back(a0.indices[i]);
    t.values.push_back(a0.values[i]);
  }
  for (size_t i = 0; i < a1.indices.size(); ++i) {
    t.indices.push_back(shift(a1.indices[i]));
    t.values.push_back(a1.values[i]);
  }
  for (size_t i = 0; i < a0.indices.size(); ++i) {
    for (size_t j = 0; j < a1.indices.size(); ++j) {
      ArrayIndex pair = a0.indices[i];
      ArrayIndex s1 = shift(a1.indices[j]);
      pair.terms.insert(pair.terms.end(), s1.terms.begin(), s1.terms.end());
      pair.label = "(" + a0.indices[i].label + "," + a1.indices[j].label + ")";
      t.indices.push_back(std::move(pair));
      t.values.push_back(join(t.poset, a0.values[i], a1.values[j]));
    }
  }
  return t;
}

std::string to_string(DedeStatus s) {
  switch (s) {
    case DedeStatus::Satisfied: return "satisfied";
    case DedeStatus::Unsatisfied: return "unsatisfied";
    default: return "bound-exhausted";
  }
}

DedeResult check_dede(const WordArray& a, std::span<const LocatedWord> sample,
                      int max_slot) {
  DedeResult res;
  int start = 0;
  for (const auto& s : sample) start = std::max(start, s.max_slot() + 1);
  // Candidate tuples in slot order: arity consecutive single-letter words
  // starting at each offset.  Staggered slots make every pair product inside
  // the tuple defined; only the offset matters for definedness.
  for (int offset = start; offset + a.arity - 1 <= max_slot; ++offset) {
    ++res.tried;
    std::vector<LocatedWord> x;
    for (int i = 0; i < a.arity; ++i) {
      x.push_back(make_word({{offset + i, a.set.distinguished}}, a.set));
    }
    bool ok = true;
    for (size_t ix = 0; ix < a.indices.size() && ok; ++ix) {
      auto lx = eval(a, (int)ix, x);
      if (!lx) {
        ok = false;
        break;
      }
      for (const auto& s : sample) {
        if (!product(s, *lx)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      res.status = DedeStatus::Satisfied;
      res.witness = std::move(x);
      return res;
    }
  }
  res.status = DedeStatus::BoundExhausted;
  return res;
}

DedePointResult check_dede(const PointArray& a, std::span<const NormalWord> sample) {
  // All joins are defined in the semigroup over a poset; verify anyway so a
  // malformed sample is caught.
  for (const auto& s : sample) {
    for (const auto& v : a.values) {
      (void)join(a.poset, s, v);
    }
  }
  return {DedeStatus::Satisfied};
}

}  // namespace rmon

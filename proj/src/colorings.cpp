#include "rmon/colorings.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

#include "rmon/po_semigroup.hpp"

namespace rmon {

Coloring constant_coloring(int k) {
  if (k < 0) throw std::invalid_argument("constant coloring: negative color");
  std::string spec = k == 0 ? "constant" : "constant:" + std::to_string(k);
  return Coloring(spec, k + 1, [k](const LocatedWord&) { return k; });
}

Coloring parity_coloring(const PointedMSet& fam) {
  int dist = fam.distinguished;
  return Coloring("parity", 2, [dist](const LocatedWord& w) {
    int c = 0;
    for (const auto& [slot, letter] : w.entries) {
      if (letter != dist) ++c;
    }
    return c % 2;
  });
}

Coloring first_letter_coloring(const PointedMSet& fam) {
  return Coloring("first-letter", fam.letter_count(),
                  [](const LocatedWord& w) { return w.entries.front().second; });
}

namespace {

// Minimal recursive-descent evaluator over per-word letter counts.
struct ExprNode {
  enum Kind { Num, Len, Nondist, Count, Add, Sub, Mul, Mod } kind;
  long long value = 0;  // Num
  int letter = -1;      // Count
  int lhs = -1, rhs = -1;
};

struct ExprProgram {
  std::vector<ExprNode> nodes;
  int root = -1;

  long long eval(int node, const std::vector<long long>& counts, long long len,
                 long long nondist) const {
    const ExprNode& n = nodes[node];
    switch (n.kind) {
      case ExprNode::Num: return n.value;
      case ExprNode::Len: return len;
      case ExprNode::Nondist: return nondist;
      case ExprNode::Count: return counts[n.letter];
      case ExprNode::Add: return eval(n.lhs, counts, len, nondist) + eval(n.rhs, counts, len, nondist);
      case ExprNode::Sub: return eval(n.lhs, counts, len, nondist) - eval(n.rhs, counts, len, nondist);
      case ExprNode::Mul: return eval(n.lhs, counts, len, nondist) * eval(n.rhs, counts, len, nondist);
      default: {
        long long d = eval(n.rhs, counts, len, nondist);
        if (d == 0) throw std::invalid_argument("expr coloring: modulus by zero");
        long long v = eval(n.lhs, counts, len, nondist) % d;
        return v < 0 ? v + std::abs(d) : v;
      }
    }
  }
};

struct ExprParser {
  const std::string& src;
  const PointedMSet& fam;
  size_t pos = 0;
  ExprProgram prog;

  void skip() {
    while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  int push(ExprNode n) {
    prog.nodes.push_back(n);
    return (int)prog.nodes.size() - 1;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("expr coloring: " + why + " at offset " + std::to_string(pos));
  }

  int factor() {
    skip();
    if (pos >= src.size()) fail("unexpected end");
    if (eat('(')) {
      int e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit((unsigned char)src[pos])) {
      long long v = 0;
      while (pos < src.size() && std::isdigit((unsigned char)src[pos])) {
        v = v * 10 + (src[pos++] - '0');
      }
      return push({ExprNode::Num, v, -1, -1, -1});
    }
    if (src.compare(pos, 3, "len") == 0 && pos + 3 <= src.size() &&
        (pos + 3 == src.size() || src[pos + 3] != '(')) {
      pos += 3;
      return push({ExprNode::Len, 0, -1, -1, -1});
    }
    if (src.compare(pos, 7, "nondist") == 0) {
      pos += 7;
      return push({ExprNode::Nondist, 0, -1, -1, -1});
    }
    if (src[pos] == 'c' && pos + 1 < src.size() && src[pos + 1] == '(') {
      pos += 2;
      size_t end = src.find(')', pos);
      if (end == std::string::npos) fail("unterminated c(...)");
      std::string label = src.substr(pos, end - pos);
      pos = end + 1;
      return push({ExprNode::Count, 0, fam.letter_by_label(label), -1, -1});
    }
    fail("unexpected token");
  }

  int term() {
    int lhs = factor();
    for (;;) {
      if (eat('*')) {
        int rhs = factor();
        lhs = push({ExprNode::Mul, 0, -1, lhs, rhs});
      } else if (eat('%')) {
        int rhs = factor();
        lhs = push({ExprNode::Mod, 0, -1, lhs, rhs});
      } else {
        return lhs;
      }
    }
  }

  int expr() {
    int lhs = term();
    for (;;) {
      if (eat('+')) {
        int rhs = term();
        lhs = push({ExprNode::Add, 0, -1, lhs, rhs});
      } else if (eat('-')) {
        int rhs = term();
        lhs = push({ExprNode::Sub, 0, -1, lhs, rhs});
      } else {
        return lhs;
      }
    }
  }
};

}  // namespace

Coloring expr_coloring(const PointedMSet& fam, int modulus, const std::string& expr) {
  if (modulus <= 0) throw std::invalid_argument("expr coloring: modulus must be positive");
  ExprParser parser{expr, fam, 0, {}};
  parser.prog.root = parser.expr();
  parser.skip();
  if (parser.pos != expr.size()) parser.fail("trailing input");
  ExprProgram prog = std::move(parser.prog);
  int letters = fam.letter_count();
  int dist = fam.distinguished;
  std::string spec = "expr:" + std::to_string(modulus) + ":" + expr;
  return Coloring(spec, modulus, [prog, letters, dist, modulus](const LocatedWord& w) {
    std::vector<long long> counts(letters, 0);
    long long nondist = 0;
    for (const auto& [slot, letter] : w.entries) {
      ++counts[letter];
      if (letter != dist) ++nondist;
    }
    long long v = prog.eval(prog.root, counts, (long long)w.length(), nondist);
    return (int)(((v % modulus) + modulus) % modulus);
  });
}

Coloring counterexample_coloring(const Monoid& m, Elem a, Elem b) {
  XPoset x = x_of(m);
  int pa = x.elem_class[a], pb = x.elem_class[b];
  if (x.poset.comparable(pa, pb)) {
    throw std::invalid_argument("counterexample coloring: classes of " + m.label(a) + " and " +
                                m.label(b) + " are comparable in X(M)");
  }
  std::string spec = "first-occurrence:" + m.label(a) + ":" + m.label(b);
  return Coloring(spec, 2, [pa, pb](const LocatedWord& w) {
    int first_a = -1, first_b = -1;
    for (size_t i = 0; i < w.entries.size(); ++i) {
      if (first_a < 0 && w.entries[i].second == pa) first_a = (int)i;
      if (first_b < 0 && w.entries[i].second == pb) first_b = (int)i;
    }
    bool zero = first_a >= 0 && (first_b < 0 || first_a < first_b);
    return zero ? 0 : 1;
  });
}

Coloring ytype_coloring(const Monoid& m, int palette_len) {
  if (palette_len < 1) throw std::invalid_argument("ytype coloring: palette length must be >= 1");
  XPoset x = x_of(m);
  ChainForest y = y_of(m);
  int ypt = default_maximal_chain(y);
  int n = x.poset.points();
  // Image of the designated chain under each class representative.
  std::vector<NormalWord> img;
  for (int p = 0; p < n; ++p) {
    img.push_back(normalize(y.poset, {y.poset.act(x.reps[p], ypt)}));
  }
  std::set<NormalWord> palette(img.begin(), img.end());
  std::set<NormalWord> frontier = palette;
  for (int l = 2; l <= palette_len; ++l) {
    std::set<NormalWord> next;
    for (const auto& w : frontier) {
      for (const auto& i : img) {
        NormalWord j = join(y.poset, w, i);
        if (palette.insert(j).second) next.insert(j);
      }
    }
    frontier = std::move(next);
  }
  std::vector<NormalWord> ordered(palette.begin(), palette.end());
  ActedPoset yp = y.poset;
  int overflow = (int)ordered.size();
  std::string spec = "ytype:" + std::to_string(palette_len);
  return Coloring(spec, overflow + 1, [yp, img, ordered, overflow](const LocatedWord& w) {
    NormalWord acc;
    for (const auto& [slot, letter] : w.entries) {
      acc = acc.letters.empty() ? img[letter] : join(yp, acc, img[letter]);
    }
    auto it = std::lower_bound(ordered.begin(), ordered.end(), acc);
    if (it != ordered.end() && *it == acc) return (int)(it - ordered.begin());
    return overflow;
  });
}

Coloring reduced_string_coloring(const VariableFamily& var, int max_len) {
  if (max_len < 0) throw std::invalid_argument("reduced-string coloring: negative length");
  // Shortlex palette of strings over A with no adjacent repeats, including
  // the empty string.
  std::vector<std::vector<int>> palette{{}};
  std::vector<std::vector<int>> frontier{{}};
  for (int l = 1; l <= max_len; ++l) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier) {
      for (int a : var.a_letters) {
        if (!s.empty() && s.back() == a) continue;
        auto t = s;
        t.push_back(a);
        next.push_back(t);
      }
    }
    for (const auto& t : next) palette.push_back(t);
    frontier = std::move(next);
  }
  std::set<int> a_set(var.a_letters.begin(), var.a_letters.end());
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < palette.size(); ++i) index[palette[i]] = (int)i;
  int overflow = (int)palette.size();
  std::string spec = "reduced-string:" + std::to_string(max_len);
  return Coloring(spec, overflow + 1, [a_set, index, overflow](const LocatedWord& w) {
    std::vector<int> red;
    for (const auto& [slot, letter] : w.entries) {
      if (!a_set.count(letter)) continue;
      if (!red.empty() && red.back() == letter) continue;
      red.push_back(letter);
    }
    auto it = index.find(red);
    return it == index.end() ? overflow : it->second;
  });
}

Coloring make_coloring(const std::string& spec, const ColoringContext& ctx) {
  if (!ctx.family) throw std::invalid_argument("make_coloring: a letter family is required");
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t colon = spec.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(spec.substr(start));
      break;
    }
    parts.push_back(spec.substr(start, colon - start));
    start = colon + 1;
  }
  const std::string& head = parts[0];
  if (head == "constant") {
    int k = parts.size() > 1 ? std::stoi(parts[1]) : 0;
    return constant_coloring(k);
  }
  if (head == "parity") return parity_coloring(*ctx.family);
  if (head == "first-letter") return first_letter_coloring(*ctx.family);
  if (head == "expr") {
    if (parts.size() < 3) throw std::invalid_argument("expr coloring: expr:<mod>:<expression>");
    std::string body = parts[2];
    for (size_t i = 3; i < parts.size(); ++i) body += ":" + parts[i];
    return expr_coloring(*ctx.family, std::stoi(parts[1]), body);
  }
  if (head == "first-occurrence") {
    if (parts.size() != 3) {
      throw std::invalid_argument("first-occurrence coloring: first-occurrence:<a>:<b>");
    }
    const Monoid& m = ctx.family->monoid;
    return counterexample_coloring(m, m.elem_by_label(parts[1]), m.elem_by_label(parts[2]));
  }
  if (head == "ytype") {
    int len = parts.size() > 1 ? std::stoi(parts[1]) : 3;
    return ytype_coloring(ctx.family->monoid, len);
  }
  if (head == "reduced-string") {
    if (!ctx.var) {
      throw std::invalid_argument("reduced-string coloring needs a variable family");
    }
    int len = parts.size() > 1 ? std::stoi(parts[1]) : 4;
    return reduced_string_coloring(*ctx.var, len);
  }
  throw std::invalid_argument("unknown coloring spec '" + spec + "'");
}

}  // namespace rmon

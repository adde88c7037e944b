#include "fglschur/weyl.hpp"

#include <algorithm>
#include <set>

#include "fglschur/error.hpp"

namespace fglschur {

std::string direction_name(Direction d) {
  switch (d) {
    case Direction::Down: return "down";
    case Direction::Fixed: return "fixed";
    case Direction::Up: return "up";
  }
  return "?";
}

namespace {

using IntSet = std::set<int>;

IntSet to_set(RootSystem type, const Partition& lambda) {
  IntSet s;
  for (int p : lambda.parts()) s.insert(type == RootSystem::D ? p + 1 : p);
  if (type == RootSystem::D && lambda.length() % 2) s.insert(1);
  return s;
}

Partition from_set(RootSystem type, const IntSet& s) {
  std::vector<int> parts;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    const int p = type == RootSystem::D ? *it - 1 : *it;
    if (p > 0) parts.push_back(p);
  }
  return Partition(parts);
}

void check_strict(const Partition& lambda) {
  if (!lambda.is_strict()) throw ConfigurationError("expected a strict partition, got " + lambda.label());
}

// Positions j - lambda_j; everything beyond n counts as present.
struct Positions {
  IntSet s;
  int n;
  bool has(int k) const { return k > n || s.count(k); }
};

Positions positions(const Partition& lambda, int n) {
  if (lambda.length() > n) throw ConfigurationError("partition " + lambda.label() + " has more than n rows");
  Positions p{{}, n};
  for (int j = 1; j <= n; ++j) p.s.insert(j - lambda[j - 1]);
  return p;
}

Partition from_positions(const IntSet& s) {
  std::vector<int> parts;
  int j = 1;
  for (int k : s) parts.push_back(j++ - k);
  return Partition(parts);
}

std::vector<int> descents(RootSystem type, const Partition& lambda, int n) {
  std::vector<int> out;
  if (type == RootSystem::A) {
    const Positions p = positions(lambda, n);
    for (int k : p.s)
      if (!p.has(k + 1)) out.push_back(k);
    return out;
  }
  const IntSet s = to_set(type, lambda);
  if (type == RootSystem::C && s.count(1)) out.push_back(0);
  if (type == RootSystem::D && s.count(1) && s.count(2)) out.push_back(0);
  for (int k : s)
    if (k >= 2 && !s.count(k - 1)) out.push_back(k - 1);
  return out;
}

}  // namespace

WeylStep weyl_action_sp(RootSystem type, int i, const Partition& lambda) {
  if (type == RootSystem::A) throw ConfigurationError("type A acts on ordinary partitions");
  if (i < 0) throw ConfigurationError("simple reflections are indexed from 0");
  check_strict(lambda);
  IntSet s = to_set(type, lambda);
  Direction d = Direction::Fixed;
  if (i == 0 && type == RootSystem::C) {
    d = s.count(1) ? Direction::Down : Direction::Up;
    if (d == Direction::Down) s.erase(1);
    else s.insert(1);
  } else if (i == 0) {
    const bool a = s.count(1), b = s.count(2);
    if (a && b) {
      d = Direction::Down;
      s.erase(1);
      s.erase(2);
    } else if (!a && !b) {
      d = Direction::Up;
      s.insert({1, 2});
    }
  } else {
    const bool a = s.count(i), b = s.count(i + 1);
    if (b && !a) {
      d = Direction::Down;
      s.erase(i + 1);
      s.insert(i);
    } else if (a && !b) {
      d = Direction::Up;
      s.erase(i);
      s.insert(i + 1);
    }
  }
  return {from_set(type, s), d};
}

WeylStep weyl_action_partition(int i, const Partition& lambda, int n) {
  Positions p = positions(lambda, n);
  const bool a = p.has(i), b = p.has(i + 1);
  if (a == b) return {lambda, Direction::Fixed};
  // moving a position down by one adds a box
  if (b) {
    p.s.erase(i + 1);
    p.s.insert(i);
    return {from_positions(p.s), Direction::Up};
  }
  p.s.erase(i);
  p.s.insert(i + 1);
  return {from_positions(p.s), Direction::Down};
}

std::vector<int> raising_word(RootSystem type, const Partition& lambda, bool smallest, int n) {
  if (type != RootSystem::A) check_strict(lambda);
  std::vector<int> word;
  Partition cur = lambda;
  while (!cur.empty()) {
    const auto ds = descents(type, cur, n);
    if (ds.empty()) throw Error("no descent found for " + cur.label());
    const int i = smallest ? ds.front() : ds.back();
    word.push_back(i);
    cur = type == RootSystem::A ? weyl_action_partition(i, cur, n).result : weyl_action_sp(type, i, cur).result;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string word_to_string(RootSystem type, const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string out;
  for (int i : word) {
    if (!out.empty()) out += ' ';
    out += (type == RootSystem::D && i == 0) ? "s1^" : "s" + std::to_string(i);
  }
  return out;
}

Series kernel_at_inverse(const FormalGroupLaw& fgl, Variable b, Alphabet y, Truncation t) {
  return invert_unit(kernel_one(fgl, b, y, t));
}

DividedDifference::DividedDifference(FglPtr fgl, RootSystem type, std::optional<Alphabet> y, int n_a)
    : fgl_(std::move(fgl)), type_(type), y_(y), n_a_(n_a) {
  if (type_ == RootSystem::A && y_ && n_a_ < 1) throw ConfigurationError("type A kernel needs n >= 1");
}

Series DividedDifference::substitute_b(int i, const Series& f) const {
  const Truncation t = f.truncation();
  if (type_ == RootSystem::C && i == 0) return substitute(f, {{var_b(1), bbar(*fgl_, 1, t)}});
  if (type_ == RootSystem::D && i == 0)
    return substitute(f, {{var_b(1), bbar(*fgl_, 2, t)}, {var_b(2), bbar(*fgl_, 1, t)}});
  if (type_ != RootSystem::A && i < 0) throw ConfigurationError("simple reflections are indexed from 0");
  return f.renamed([i](Variable v) {
    if (v.family != Family::B) return v;
    if (v.index == i) return var_b(i + 1);
    if (v.index == i + 1) return var_b(i);
    return v;
  });
}

Series DividedDifference::twist(int i, Truncation t) const {
  const Series one = Series::constant(1, t);
  if (!y_) return one;
  if (type_ == RootSystem::C)
    return i == 0 ? kernel_at_inverse(*fgl_, var_b(1), *y_, t) : one;
  if (type_ == RootSystem::D)
    return i == 0 ? mul_truncated(kernel_at_inverse(*fgl_, var_b(1), *y_, t),
                                  kernel_at_inverse(*fgl_, var_b(2), *y_, t))
                  : one;
  // type A: only s_0 and s_n move the window b_1..b_n of the kernel
  if (i != 0 && i != n_a_) return one;
  const int keep = i == 0 ? 1 : n_a_, enter = i == 0 ? 0 : n_a_ + 1;
  const Series bk = bbar(*fgl_, keep, t), be = bbar(*fgl_, enter, t);
  Series out = one;
  for (int j = 1; j <= y_->n_y; ++j) {
    const Series yj = Series::variable(var_y(y_->offset + j), t);
    out = mul_truncated(out, one - mul_truncated(bk, yj));
    out = mul_truncated(out, invert_unit(one - mul_truncated(be, yj)));
  }
  return out;
}

Series DividedDifference::reflect(int i, const Series& f) const {
  const Series s = substitute_b(i, f);
  if (!y_) return s;
  return mul_truncated(s, twist(i, f.truncation()));
}

Series DividedDifference::root(int i, Truncation t) const {
  const FormalGroupLaw& F = *fgl_;
  const auto b = [&](int k) { return Series::variable(var_b(k), t); };
  if (type_ == RootSystem::C && i == 0) return F.sum(b(1), b(1));
  if (type_ == RootSystem::D && i == 0) return F.sum(b(1), b(2));
  if (type_ == RootSystem::A) return F.sum(b(i), bbar(F, i + 1, t));
  return F.sum(b(i + 1), bbar(F, i, t));
}

Series DividedDifference::negative_root(int i, Truncation t) const { return substitute_b(i, root(i, t)); }

Series DividedDifference::psi(int i, const Series& f) const {
  return exact_divide(reflect(i, f) - f, root(i, f.truncation()));
}

Series DividedDifference::hat_psi(int i, const Series& f) const { return -reflect(i, psi(i, f)); }

Series DividedDifference::hat_psi_alt(int i, const Series& f) const {
  return exact_divide(reflect(i, f) - f, negative_root(i, f.truncation()));
}

Series DividedDifference::hat_psi_word(const std::vector<int>& word, const Series& f) const {
  Series g = f;
  for (int i : word) g = hat_psi(i, g);
  return g;
}

}  // namespace fglschur

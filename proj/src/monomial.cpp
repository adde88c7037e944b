#include "fglschur/monomial.hpp"

#include <algorithm>
#include <map>

#include "fglschur/error.hpp"

namespace fglschur {

std::string Variable::name() const {
  switch (family) {
    case Family::X:
      if (index == kScratchT) return "t";
      if (index == kScratchU) return "u";
      if (index == kScratchV) return "v";
      return "x" + std::to_string(index);
    case Family::Y:
      return "y" + std::to_string(index);
    case Family::B:
      return index > 0 ? "b" + std::to_string(index) : "bn" + std::to_string(-index);
    case Family::Coeff:
      return index == 0 ? "beta" : "m" + std::to_string(index);
  }
  return "?";
}

std::string Grading::name() const {
  std::string s;
  if (counts(Family::X)) s += "x";
  if (counts(Family::Y)) s += "y";
  if (counts(Family::B)) s += "b";
  return s;
}

namespace {

std::uint32_t pack(Variable v, int e) {
  if (e <= 0 || static_cast<std::uint32_t>(e) > Monomial::kExpMask)
    throw ConfigurationError("monomial exponent out of range");
  return (v.code() << Monomial::kExpBits) | static_cast<std::uint32_t>(e);
}

}  // namespace

Monomial::Monomial(Variable v, int exponent) {
  if (exponent != 0) words_.push_back(pack(v, exponent));
}

Monomial Monomial::from_pairs(const std::vector<std::pair<Variable, int>>& pairs) {
  std::map<std::uint32_t, int> acc;
  for (const auto& [v, e] : pairs) acc[v.code()] += e;
  Monomial m;
  for (const auto& [c, e] : acc)
    if (e != 0) m.words_.push_back(pack(Variable::from_code(c), e));
  return m;
}

int Monomial::exponent(Variable v) const {
  const auto code = v.code();
  for (auto w : words_)
    if ((w >> kExpBits) == code) return static_cast<int>(w & kExpMask);
  return 0;
}

int Monomial::degree(Grading g) const {
  int d = 0;
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (g.counts(variable_at(k).family)) d += exponent_at(k);
  return d;
}

int Monomial::family_degree(Family f) const {
  int d = 0;
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (variable_at(k).family == f) d += exponent_at(k);
  return d;
}

int Monomial::coeff_weight() const {
  int w = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) w += variable_at(k).coeff_weight() * exponent_at(k);
  return w;
}

std::vector<std::pair<Variable, int>> Monomial::pairs() const {
  std::vector<std::pair<Variable, int>> out;
  out.reserve(words_.size());
  for (std::size_t k = 0; k < words_.size(); ++k) out.emplace_back(variable_at(k), exponent_at(k));
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.words_.reserve(words_.size() + other.words_.size());
  std::size_t i = 0, j = 0;
  while (i < words_.size() && j < other.words_.size()) {
    const auto ci = words_[i] >> kExpBits;
    const auto cj = other.words_[j] >> kExpBits;
    if (ci < cj) {
      r.words_.push_back(words_[i++]);
    } else if (cj < ci) {
      r.words_.push_back(other.words_[j++]);
    } else {
      const auto e = (words_[i] & kExpMask) + (other.words_[j] & kExpMask);
      if (e > kExpMask) throw ConfigurationError("monomial exponent overflow");
      r.words_.push_back((ci << kExpBits) | e);
      ++i;
      ++j;
    }
  }
  for (; i < words_.size(); ++i) r.words_.push_back(words_[i]);
  for (; j < other.words_.size(); ++j) r.words_.push_back(other.words_[j]);
  return r;
}

bool Monomial::divisible_by(const Monomial& d) const {
  std::size_t i = 0;
  for (auto w : d.words_) {
    const auto c = w >> kExpBits;
    while (i < words_.size() && (words_[i] >> kExpBits) < c) ++i;
    if (i == words_.size() || (words_[i] >> kExpBits) != c) return false;
    if ((words_[i] & kExpMask) < (w & kExpMask)) return false;
  }
  return true;
}

Monomial Monomial::divide(const Monomial& d) const {
  Monomial r;
  std::size_t j = 0;
  for (auto w : words_) {
    const auto c = w >> kExpBits;
    auto e = w & kExpMask;
    if (j < d.words_.size() && (d.words_[j] >> kExpBits) == c) {
      e -= d.words_[j] & kExpMask;
      ++j;
    }
    if (e != 0) r.words_.push_back((c << kExpBits) | e);
  }
  return r;
}

std::string Monomial::to_string() const {
  if (words_.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (k) s += '*';
    s += variable_at(k).name();
    if (exponent_at(k) != 1) s += '^' + std::to_string(exponent_at(k));
  }
  return s;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

// Lexicographic comparison where a smaller variable code dominates.
int lex_compare(const Monomial::Storage& a, const Monomial::Storage& b) {
  std::size_t i = 0;
  for (; i < a.size() && i < b.size(); ++i) {
    if (a[i] == b[i]) continue;
    const auto ca = a[i] >> Monomial::kExpBits;
    const auto cb = b[i] >> Monomial::kExpBits;
    if (ca != cb) return ca < cb ? 1 : -1;
    return (a[i] & Monomial::kExpMask) > (b[i] & Monomial::kExpMask) ? 1 : -1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() > b.size() ? 1 : -1;
}

}  // namespace

bool grlex_less(const Monomial& a, const Monomial& b) {
  const int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return lex_compare(a.words(), b.words()) > 0;
}

bool lex_less(const Monomial& a, const Monomial& b) { return lex_compare(a.words(), b.words()) < 0; }

}  // namespace fglschur

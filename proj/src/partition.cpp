#include "fglschur/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "fglschur/error.hpp"

namespace fglschur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ConfigurationError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ConfigurationError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::is_strict() const {
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] == parts_[i - 1]) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& lambda) const {
  if (lambda.length() > length()) return false;
  for (int i = 0; i < lambda.length(); ++i)
    if (lambda[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::string Partition::label() const { return parts_.empty() ? "()" : "(" + to_string() + ")"; }

Partition parse_partition(const std::string& text, bool strict) {
  std::vector<int> parts;
  std::string trimmed;
  for (char c : text)
    if (c != ' ' && c != '(' && c != ')') trimmed += c;
  if (!trimmed.empty()) {
    std::stringstream ss(trimmed);
    std::string item;
    while (std::getline(ss, item, ',')) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || v < 0)
        throw ConfigurationError("invalid partition syntax: '" + text + "'");
      parts.push_back(v);
    }
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) throw ConfigurationError("partition must be decreasing: '" + text + "'");
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (int p : parts)
    if (p == 0) throw ConfigurationError("invalid partition syntax: '" + text + "'");
  Partition out(std::move(parts));
  if (strict && !out.is_strict()) throw ConfigurationError("partition must be strict: '" + text + "'");
  return out;
}

namespace {

void gen(int remaining, int max_part, int max_length, bool strict, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_length >= 0 && static_cast<int>(cur.size()) >= max_length) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen(remaining - p, strict ? p - 1 : p, max_length, strict, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_length) {
  std::vector<Partition> out;
  std::vector<int> cur;
  gen(n, n, max_length, false, cur, out);
  return out;
}

std::vector<Partition> strict_partitions_of(int n, int max_length) {
  std::vector<Partition> out;
  std::vector<int> cur;
  gen(n, n, max_length, true, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size, int max_length) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto ps = partitions_of(n, max_length);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Partition> strict_partitions_up_to(int max_size, int max_length) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto ps = strict_partitions_of(n, max_length);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

Partition staircase(int n) {
  std::vector<int> p;
  for (int k = n; k >= 1; --k) p.push_back(k);
  return Partition(std::move(p));
}

Partition add_parts(const Partition& a, const Partition& b) {
  std::vector<int> p(std::max(a.length(), b.length()));
  for (int i = 0; i < static_cast<int>(p.size()); ++i) p[i] = a[i] + b[i];
  return Partition(std::move(p));
}

Partition hook(int a, int k) {
  if (a < 1 || a > k) throw ConfigurationError("hook arm out of range");
  std::vector<int> p{a};
  for (int i = 0; i < k - a; ++i) p.push_back(1);
  return Partition(std::move(p));
}

}  // namespace fglschur

#include "interchange/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "interchange/errors.hpp"
#include "interchange/permutation.hpp"

namespace interchange {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ParameterError("partition needs at least one part");
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    if (parts_[r] <= 0) throw ParameterError("partition parts must be positive");
    if (r > 0 && parts_[r] > parts_[r - 1]) throw ParameterError("partition parts must be nonincreasing");
    n_ += parts_[r];
  }
}

Partition Partition::parse(const std::string& text) {
  std::string body;
  for (char c : text)
    if (c != '[' && c != ']' && c != ' ') body += c;
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto end = std::min(body.find(',', start), body.size());
    const std::string token = body.substr(start, end - start);
    const auto caret = token.find('^');
    int value = 0;
    int repeat = 1;
    const std::string base = token.substr(0, caret);
    auto [p1, e1] = std::from_chars(base.data(), base.data() + base.size(), value);
    if (e1 != std::errc{} || p1 != base.data() + base.size()) throw ParameterError("bad partition '" + text + "'");
    if (caret != std::string::npos) {
      const std::string exp = token.substr(caret + 1);
      auto [p2, e2] = std::from_chars(exp.data(), exp.data() + exp.size(), repeat);
      if (e2 != std::errc{} || p2 != exp.data() + exp.size() || repeat < 1) {
        throw ParameterError("bad exponent in partition '" + text + "'");
      }
    }
    parts.insert(parts.end(), static_cast<std::size_t>(repeat), value);
    start = end + 1;
  }
  return Partition(std::move(parts));
}

std::vector<int> Partition::conjugate() const {
  std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
  for (int part : parts_)
    for (int c = 0; c < part; ++c) ++conj[static_cast<std::size_t>(c)];
  return conj;
}

bool Partition::is_standard() const { return parts_.size() == 2 && parts_[1] == 1; }

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < parts_.size();) {
    std::size_t run = r;
    while (run < parts_.size() && parts_[run] == parts_[r]) ++run;
    if (r) s += ',';
    s += std::to_string(parts_[r]);
    if (run - r > 1) s += "^" + std::to_string(run - r);
    r = run;
  }
  return s + "]";
}

std::vector<Partition> partitions(int n) {
  if (n < 1 || n > kMaxPartitionN) throw CapError("partitions supports 1 <= n <= 12");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> emit = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      emit(remaining - part, part);
      current.pop_back();
    }
  };
  emit(n, n);
  return out;
}

std::uint64_t hook_dim(const Partition& p) {
  if (p.size() > 20) throw CapError("hook_dim supports n <= 20");
  const auto conj = p.conjugate();
  // The hook product divides n! and both fit in 64 bits for n <= 20.
  std::uint64_t hooks = 1;
  for (int r = 0; r < p.rows(); ++r) {
    for (int c = 0; c < p[r]; ++c) {
      const int arm = p[r] - c - 1;
      const int leg = conj[static_cast<std::size_t>(c)] - r - 1;
      hooks *= static_cast<std::uint64_t>(arm + leg + 1);
    }
  }
  return static_cast<std::uint64_t>(factorial(p.size())) / hooks;
}

int content_sum(const Partition& p) {
  int s = 0;
  for (int r = 0; r < p.rows(); ++r)
    for (int c = 0; c < p[r]; ++c) s += c - r;
  return s;
}

double lambda_kn(const Partition& p) {
  const int n = p.size();
  return static_cast<double>(n * (n - 1) / 2 - content_sum(p));
}

}  // namespace interchange

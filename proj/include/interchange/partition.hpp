#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace interchange {

// Integer partition of n: positive, nonincreasing parts. Indexes the
// irreducible representations of S_n.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  // Accepts "[3,1^3]", "3,1,1,1" or "[5]".
  static Partition parse(const std::string& text);

  int size() const { return n_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int operator[](int row) const { return parts_[static_cast<std::size_t>(row)]; }
  const std::vector<int>& parts() const { return parts_; }
  std::vector<int> conjugate() const;

  bool is_trivial() const { return parts_.size() == 1; }  // [n]
  bool is_standard() const;                               // [n-1, 1]

  // Compact notation with exponents, e.g. "[3,1^3]".
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

inline constexpr int kMaxPartitionN = 12;

// All partitions of n (1 <= n <= 12) in reverse-lexicographic order,
// starting with [n] and ending with [1^n].
std::vector<Partition> partitions(int n);

// n! / prod(hook lengths)
std::uint64_t hook_dim(const Partition& p);

// Sum over boxes of (column - row).
int content_sum(const Partition& p);

// Scalar by which sum_{i<j} (1 - (ij)) acts on the irrep:
// C(n,2) - content_sum.
double lambda_kn(const Partition& p);

}  // namespace interchange

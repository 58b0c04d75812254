#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace interchange {

// Bijection on {0, ..., n-1}, stored by its image array.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);

  int size() const { return static_cast<int>(image_.size()); }
  int operator[](int i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& image() const { return image_; }
  bool is_identity() const;
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

// (p o q)(x) = p(q(x))
Permutation compose(const Permutation& p, const Permutation& q);
Permutation invert(const Permutation& p);

// Cycle lengths, nonincreasing, summing to n.
std::vector<int> cycle_type(const Permutation& p);
// counts[k] = number of k-cycles, k = 0..n (counts[0] is always 0).
std::vector<int> cycle_counts(std::span<const int> image);
inline std::vector<int> cycle_counts(const Permutation& p) { return cycle_counts(p.image()); }

// All of S_n in lexicographic order of image arrays; lex_rank inverts it.
std::vector<Permutation> all_permutations(int n);
std::size_t lex_rank(const Permutation& p);
std::size_t factorial(int n);

// Indices k with p = s_{k_1} o s_{k_2} o ... where s_k swaps k and k+1.
std::vector<int> adjacent_word(const Permutation& p);

}  // namespace interchange

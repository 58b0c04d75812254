#include "interchange/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "interchange/errors.hpp"

namespace interchange {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[static_cast<std::size_t>(v)]) {
      throw ParameterError("image array is not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i == j) throw ParameterError("transposition needs i != j");
  if (i < 0 || j < 0 || i >= n || j >= n) throw ParameterError("transposition index out of range");
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::swap(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(j)]);
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(image_[i]);
  }
  return s + ")";
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw SizeMismatchError("cannot compose permutations of different sizes");
  std::vector<int> image(static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) image[static_cast<std::size_t>(x)] = p[q[x]];
  return Permutation(std::move(image));
}

Permutation invert(const Permutation& p) {
  std::vector<int> image(static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x) image[static_cast<std::size_t>(p[x])] = x;
  return Permutation(std::move(image));
}

std::vector<int> cycle_counts(std::span<const int> image) {
  const std::size_t n = image.size();
  std::vector<int> counts(n + 1, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::size_t length = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(image[x])) {
      seen[x] = true;
      ++length;
    }
    ++counts[length];
  }
  return counts;
}

std::vector<int> cycle_type(const Permutation& p) {
  const auto counts = cycle_counts(p);
  std::vector<int> type;
  for (int k = p.size(); k >= 1; --k)
    for (int c = 0; c < counts[static_cast<std::size_t>(k)]; ++c) type.push_back(k);
  return type;
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1 || n > 10) throw CapError("all_permutations supports 1 <= n <= 10");
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::size_t lex_rank(const Permutation& p) {
  // Lehmer code: rank = sum_i (#smaller unused entries) * (n-1-i)!
  const int n = p.size();
  std::size_t rank = 0;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int v = 0; v < p[i]; ++v)
      if (!used[static_cast<std::size_t>(v)]) ++smaller;
    used[static_cast<std::size_t>(p[i])] = true;
    rank += static_cast<std::size_t>(smaller) * factorial(n - 1 - i);
  }
  return rank;
}

std::vector<int> adjacent_word(const Permutation& p) {
  // Bubble-sort the image; each swap at (k, k+1) right-multiplies by s_k, so
  // the word is the swap sequence reversed.
  std::vector<int> image = p.image();
  std::vector<int> swaps;
  for (std::size_t pass = 0; pass < image.size(); ++pass) {
    for (std::size_t k = 0; k + 1 < image.size(); ++k) {
      if (image[k] > image[k + 1]) {
        std::swap(image[k], image[k + 1]);
        swaps.push_back(static_cast<int>(k));
      }
    }
  }
  return {swaps.rbegin(), swaps.rend()};
}

}  // namespace interchange

#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace interchange {

// Symmetric nonnegative weights on unordered vertex pairs {i, j}, i != j.
// Vertices are 0..n-1. Zero weights are never stored, so an absent pair and
// an explicit zero are the same thing. Immutable once built.
class WeightFunction {
 public:
  using Pair = std::pair<int, int>;  // always first < second

  explicit WeightFunction(int n);
  // Entries may list each unordered pair at most once; (i, j) and (j, i)
  // count as the same pair.
  WeightFunction(int n, const std::vector<std::tuple<int, int, double>>& entries);

  static WeightFunction from_dense(const Eigen::MatrixXd& w);

  int size() const { return n_; }
  double weight(int i, int j) const;
  const std::map<Pair, double>& entries() const { return entries_; }

  // w_i = sum_{j != i} w_ij
  double vertex_weight(int i) const { return vertex_weights_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& vertex_weights() const { return vertex_weights_; }
  double total() const;  // w_tot = sum_i w_i (each edge counted twice)
  double edge_sum() const;  // sum_{i<j} w_ij, the total ring rate of the interchange process

  Eigen::MatrixXd dense() const;
  WeightFunction scaled(double s) const;
  std::vector<std::vector<int>> adjacency() const;

 private:
  int n_;
  std::map<Pair, double> entries_;
  std::vector<double> vertex_weights_;

  void insert(int i, int j, double value);
};

struct DegreeStats {
  std::vector<double> vertex_weights;
  double total = 0.0;
  double min_vertex_weight = 0.0;
  double max_vertex_weight = 0.0;
  double min_positive_weight = 0.0;  // min* w_ij
  bool connected = false;
  // Every edge has the same weight and every vertex the same degree.
  bool regular = false;
};

DegreeStats degree_stats(const WeightFunction& w);
bool is_connected(const WeightFunction& w);

enum class FamilyKind { complete, cycle, path, star, hypercube, hamming2, regular_tree, custom_file };

// Named graph family. Parameters by kind:
//   complete/cycle/path/star: size = vertex count
//   hypercube: size = dimension d (2^d vertices)
//   hamming2: size = m (m^2 vertices)
//   regular_tree: degree, depth (root has `degree` children, inner nodes degree-1)
//   custom_file: path
struct GraphFamily {
  FamilyKind kind = FamilyKind::complete;
  int size = 0;
  int degree = 0;
  int depth = 0;
  std::string path;

  std::string describe() const;
};

WeightFunction build_family(const GraphFamily& family);
WeightFunction complete_graph(int n);

// Parses "complete:5", "hypercube:3", "hamming2:3", "regular-tree:3,2",
// "file:weights.txt".
GraphFamily parse_graph_spec(const std::string& spec);
WeightFunction load_graph(const std::string& spec);

// Text format: header "n <count>", then "<i> <j> <weight>" per line, 0-based.
// Blank lines and lines starting with '#' are ignored.
// Random weights on all pairs; each pair is absent with probability
// `sparsity`, otherwise uniform in [lo, hi). Redrawn until connected when
// `connected` is set.
WeightFunction random_weights(int n, std::mt19937_64& rng, double sparsity = 0.3, double lo = 0.1, double hi = 2.0,
                              bool connected = true);

WeightFunction parse_weight_file(std::istream& in);
WeightFunction read_weight_file(const std::string& path);
std::string format_weight_file(const WeightFunction& w);

}  // namespace interchange

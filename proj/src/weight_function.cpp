#include "interchange/weight_function.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "interchange/errors.hpp"

namespace interchange {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  const std::string t = trim(text);
  const auto* end = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(t.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw ParameterError("invalid " + what + ": '" + text + "'");
  return value;
}

}  // namespace

WeightFunction::WeightFunction(int n) : n_(n), vertex_weights_(static_cast<std::size_t>(std::max(n, 0)), 0.0) {
  if (n < 2) throw ParameterError("weight function needs at least 2 vertices, got " + std::to_string(n));
}

WeightFunction::WeightFunction(int n, const std::vector<std::tuple<int, int, double>>& entries)
    : WeightFunction(n) {
  std::set<Pair> seen;
  for (const auto& [i, j, value] : entries) {
    const Pair key{std::min(i, j), std::max(i, j)};
    if (!seen.insert(key).second) {
      throw ParameterError("duplicate pair {" + std::to_string(key.first) + "," + std::to_string(key.second) + "}");
    }
    insert(i, j, value);
  }
}

void WeightFunction::insert(int i, int j, double value) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw ParameterError("vertex out of range: {" + std::to_string(i) + "," + std::to_string(j) + "} with n = " +
                         std::to_string(n_));
  }
  if (i == j) throw ParameterError("diagonal entry {" + std::to_string(i) + "," + std::to_string(i) + "}");
  if (!std::isfinite(value) || value < 0.0) throw ParameterError("weights must be finite and nonnegative");
  if (value == 0.0) return;
  entries_[{std::min(i, j), std::max(i, j)}] = value;
  vertex_weights_[static_cast<std::size_t>(i)] += value;
  vertex_weights_[static_cast<std::size_t>(j)] += value;
}

WeightFunction WeightFunction::from_dense(const Eigen::MatrixXd& w) {
  if (w.rows() != w.cols()) throw ParameterError("weight matrix must be square");
  const int n = static_cast<int>(w.rows());
  std::vector<std::tuple<int, int, double>> entries;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (w(i, j) != w(j, i)) throw ParameterError("weight matrix must be symmetric");
      entries.emplace_back(i, j, w(i, j));
    }
  }
  return WeightFunction(n, entries);
}

double WeightFunction::weight(int i, int j) const {
  if (i == j) return 0.0;
  auto it = entries_.find({std::min(i, j), std::max(i, j)});
  return it == entries_.end() ? 0.0 : it->second;
}

double WeightFunction::total() const { return std::accumulate(vertex_weights_.begin(), vertex_weights_.end(), 0.0); }

double WeightFunction::edge_sum() const {
  double s = 0.0;
  for (const auto& [pair, value] : entries_) s += value;
  return s;
}

Eigen::MatrixXd WeightFunction::dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_, n_);
  for (const auto& [pair, value] : entries_) {
    m(pair.first, pair.second) = value;
    m(pair.second, pair.first) = value;
  }
  return m;
}

WeightFunction WeightFunction::scaled(double s) const {
  if (!(s > 0.0)) throw ParameterError("scale factor must be positive");
  WeightFunction out(n_);
  for (const auto& [pair, value] : entries_) out.insert(pair.first, pair.second, value * s);
  return out;
}

std::vector<std::vector<int>> WeightFunction::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
  for (const auto& [pair, value] : entries_) {
    adj[static_cast<std::size_t>(pair.first)].push_back(pair.second);
    adj[static_cast<std::size_t>(pair.second)].push_back(pair.first);
  }
  return adj;
}

bool is_connected(const WeightFunction& w) {
  const auto adj = w.adjacency();
  std::vector<bool> seen(adj.size(), false);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int u : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = true;
        ++reached;
        frontier.push(u);
      }
    }
  }
  return reached == adj.size();
}

DegreeStats degree_stats(const WeightFunction& w) {
  if (w.entries().empty()) throw DegenerateWeightError("all weights are zero");
  DegreeStats s;
  s.vertex_weights = w.vertex_weights();
  s.total = w.total();
  const auto [lo, hi] = std::minmax_element(s.vertex_weights.begin(), s.vertex_weights.end());
  s.min_vertex_weight = *lo;
  s.max_vertex_weight = *hi;
  s.min_positive_weight = std::numeric_limits<double>::infinity();
  double max_positive = 0.0;
  for (const auto& [pair, value] : w.entries()) {
    s.min_positive_weight = std::min(s.min_positive_weight, value);
    max_positive = std::max(max_positive, value);
  }
  s.connected = is_connected(w);
  std::vector<std::size_t> degree(s.vertex_weights.size(), 0);
  for (const auto& [pair, value] : w.entries()) {
    ++degree[static_cast<std::size_t>(pair.first)];
    ++degree[static_cast<std::size_t>(pair.second)];
  }
  s.regular = s.min_positive_weight == max_positive &&
              std::all_of(degree.begin(), degree.end(), [&](std::size_t d) { return d == degree.front(); });
  return s;
}

std::string GraphFamily::describe() const {
  switch (kind) {
    case FamilyKind::complete: return "complete:" + std::to_string(size);
    case FamilyKind::cycle: return "cycle:" + std::to_string(size);
    case FamilyKind::path: return "path:" + std::to_string(size);
    case FamilyKind::star: return "star:" + std::to_string(size);
    case FamilyKind::hypercube: return "hypercube:" + std::to_string(size);
    case FamilyKind::hamming2: return "hamming2:" + std::to_string(size);
    case FamilyKind::regular_tree: return "regular-tree:" + std::to_string(degree) + "," + std::to_string(depth);
    case FamilyKind::custom_file: return "file:" + path;
  }
  return "unknown";
}

WeightFunction build_family(const GraphFamily& family) {
  using Entries = std::vector<std::tuple<int, int, double>>;
  Entries e;
  const int k = family.size;
  switch (family.kind) {
    case FamilyKind::complete: {
      if (k < 2) throw ParameterError("complete graph needs n >= 2");
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j, 1.0);
      return WeightFunction(k, e);
    }
    case FamilyKind::cycle: {
      if (k < 3) throw ParameterError("cycle needs n >= 3");
      for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k, 1.0);
      return WeightFunction(k, e);
    }
    case FamilyKind::path: {
      if (k < 2) throw ParameterError("path needs n >= 2");
      for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1, 1.0);
      return WeightFunction(k, e);
    }
    case FamilyKind::star: {
      if (k < 2) throw ParameterError("star needs n >= 2");
      for (int i = 1; i < k; ++i) e.emplace_back(0, i, 1.0);
      return WeightFunction(k, e);
    }
    case FamilyKind::hypercube: {
      if (k < 1 || k > 20) throw ParameterError("hypercube dimension must be in [1, 20]");
      const int n = 1 << k;
      for (int v = 0; v < n; ++v)
        for (int b = 0; b < k; ++b)
          if (const int u = v ^ (1 << b); v < u) e.emplace_back(v, u, 1.0);
      return WeightFunction(n, e);
    }
    case FamilyKind::hamming2: {
      if (k < 2) throw ParameterError("hamming2 needs m >= 2");
      const int n = k * k;
      for (int v = 0; v < n; ++v) {
        for (int u = v + 1; u < n; ++u) {
          const bool same_row = v / k == u / k;
          const bool same_col = v % k == u % k;
          if (same_row != same_col) e.emplace_back(v, u, 1.0);
        }
      }
      return WeightFunction(n, e);
    }
    case FamilyKind::regular_tree: {
      if (family.degree < 2) throw ParameterError("regular tree degree must be >= 2");
      if (family.depth < 1) throw ParameterError("regular tree depth must be >= 1");
      int next = 1;
      std::vector<int> level{0};
      for (int d = 0; d < family.depth; ++d) {
        std::vector<int> children;
        const int fanout = d == 0 ? family.degree : family.degree - 1;
        for (int parent : level) {
          for (int c = 0; c < fanout; ++c) {
            e.emplace_back(parent, next, 1.0);
            children.push_back(next++);
          }
        }
        level = std::move(children);
        if (next > 1'000'000) throw ParameterError("regular tree too large");
      }
      return WeightFunction(next, e);
    }
    case FamilyKind::custom_file:
      return read_weight_file(family.path);
  }
  throw ParameterError("unknown graph family");
}

WeightFunction complete_graph(int n) {
  GraphFamily f;
  f.size = n;
  return build_family(f);
}

GraphFamily parse_graph_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParameterError("graph spec must look like family:params, got '" + spec + "'");
  const std::string name = spec.substr(0, colon);
  const std::string params = spec.substr(colon + 1);
  GraphFamily f;
  if (name == "file") {
    f.kind = FamilyKind::custom_file;
    f.path = params;
    if (params.empty()) throw ParameterError("file: spec needs a path");
    return f;
  }
  if (name == "regular-tree") {
    const auto comma = params.find(',');
    if (comma == std::string::npos) throw ParameterError("regular-tree spec is regular-tree:<degree>,<depth>");
    f.kind = FamilyKind::regular_tree;
    f.degree = parse_int(params.substr(0, comma), "tree degree");
    f.depth = parse_int(params.substr(comma + 1), "tree depth");
    return f;
  }
  static const std::map<std::string, FamilyKind> kinds{
      {"complete", FamilyKind::complete}, {"cycle", FamilyKind::cycle},         {"path", FamilyKind::path},
      {"star", FamilyKind::star},         {"hypercube", FamilyKind::hypercube}, {"hamming2", FamilyKind::hamming2},
  };
  auto it = kinds.find(name);
  if (it == kinds.end()) throw ParameterError("unknown graph family '" + name + "'");
  f.kind = it->second;
  f.size = parse_int(params, name + " parameter");
  return f;
}

WeightFunction load_graph(const std::string& spec) { return build_family(parse_graph_spec(spec)); }

WeightFunction parse_weight_file(std::istream& in) {
  std::string line;
  int n = -1;
  std::size_t line_no = 0;
  std::vector<std::tuple<int, int, double>> entries;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::istringstream fields(t);
    if (n < 0) {
      std::string tag;
      if (!(fields >> tag >> n) || tag != "n" || !(fields >> std::ws).eof()) {
        throw ParameterError("line " + std::to_string(line_no) + ": expected header 'n <count>'");
      }
      continue;
    }
    int i = 0, j = 0;
    double value = 0.0;
    if (!(fields >> i >> j >> value) || !(fields >> std::ws).eof()) {
      throw ParameterError("line " + std::to_string(line_no) + ": expected '<i> <j> <weight>'");
    }
    entries.emplace_back(i, j, value);
  }
  if (n < 0) throw ParameterError("weight file has no 'n <count>' header");
  return WeightFunction(n, entries);
}

WeightFunction read_weight_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open weight file '" + path + "'");
  return parse_weight_file(in);
}

std::string format_weight_file(const WeightFunction& w) {
  std::ostringstream out;
  out.precision(17);
  out << "n " << w.size() << '\n';
  for (const auto& [pair, value] : w.entries()) out << pair.first << ' ' << pair.second << ' ' << value << '\n';
  return out.str();
}

WeightFunction random_weights(int n, std::mt19937_64& rng, double sparsity, double lo, double hi, bool connected) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_real_distribution<double> value(lo, hi);
  for (;;) {
    std::vector<std::tuple<int, int, double>> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (u(rng) >= sparsity) e.emplace_back(i, j, value(rng));
    WeightFunction w(n, e);
    if (!connected || (!w.entries().empty() && is_connected(w))) return w;
  }
}

}  // namespace interchange

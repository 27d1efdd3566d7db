#include "critgen/graph.hpp"

#include "critgen/rng.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace critgen {

using nlohmann::json;

Graph::Graph(int m, std::vector<std::pair<int, int>> edges) : m_(m) {
  if (m <= 0) throw std::invalid_argument("graph needs a positive vertex count");
  for (auto& [i, j] : edges) {
    if (i == j) throw std::invalid_argument("self-loop edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
    if (i < 1 || j < 1 || i > m || j > m)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(i) + "," + std::to_string(j) + ")");
    if (i > j) std::swap(i, j);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  if (m_ <= 64) {
    masks_.assign(static_cast<std::size_t>(m_), 0);
    for (const auto& [i, j] : edges_) {
      masks_[i - 1] |= std::uint64_t(1) << (j - 1);
      masks_[j - 1] |= std::uint64_t(1) << (i - 1);
    }
  }
}

bool Graph::adjacent(int i, int j) const {
  if (i == j) return false;
  if (!masks_.empty()) return (masks_[i - 1] >> (j - 1)) & 1;
  return std::binary_search(edges_.begin(), edges_.end(),
                            std::make_pair(std::min(i, j), std::max(i, j)));
}

std::uint64_t Graph::neighbor_mask(int v) const {
  if (masks_.empty()) throw std::logic_error("neighbor_mask requires m <= 64");
  return masks_[v - 1];
}

Graph Graph::parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      long count = 0;
      if (!(ls >> kind >> m >> count) || kind != "edge" || m <= 0)
        throw std::invalid_argument("malformed DIMACS header: '" + line + "'");
    } else if (tag == "e") {
      if (m < 0) throw std::invalid_argument("DIMACS edge before header");
      int i = 0, j = 0;
      if (!(ls >> i >> j)) throw std::invalid_argument("malformed DIMACS edge: '" + line + "'");
      edges.emplace_back(i, j);
    } else {
      throw std::invalid_argument("unrecognized DIMACS line: '" + line + "'");
    }
  }
  if (m < 0) throw std::invalid_argument("DIMACS input has no 'p edge' header");
  return Graph(m, std::move(edges));
}

Graph Graph::parse_json(std::string_view text) {
  json j = json::parse(text);
  int m = j.at("m").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge entries must be [i, j] pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(m, std::move(edges));
}

Graph Graph::parse(std::string_view text, std::string_view format) {
  if (format == "dimacs") return parse_dimacs(text);
  if (format == "json") return parse_json(text);
  throw std::invalid_argument("unknown graph format: '" + std::string(format) + "'");
}

std::string Graph::to_dimacs() const {
  std::ostringstream out;
  out << "p edge " << m_ << " " << edges_.size() << "\n";
  for (const auto& [i, j] : edges_) out << "e " << i << " " << j << "\n";
  return out.str();
}

std::string Graph::to_json() const {
  json j;
  j["m"] = m_;
  json edges = json::array();
  for (const auto& [a, b] : edges_) edges.push_back(json::array({a, b}));
  j["edges"] = std::move(edges);
  return j.dump();
}

CliqueInstance::CliqueInstance(Graph g, int k_) : graph(std::move(g)), k(k_) {
  if (k < 1 || k > graph.vertex_count())
    throw std::invalid_argument("clique size k must satisfy 1 <= k <= m");
}

namespace {

// Recursive expansion over candidate masks; visits vertices in increasing
// order, so the first complete clique is the lexicographically smallest.
bool extend_clique(const Graph& g, std::uint64_t candidates, int needed,
                   std::vector<int>& chosen) {
  if (needed == 0) return true;
  while (candidates != 0) {
    if (std::popcount(candidates) < needed) return false;
    const int v = std::countr_zero(candidates) + 1;
    candidates &= candidates - 1;
    chosen.push_back(v);
    if (extend_clique(g, candidates & g.neighbor_mask(v), needed - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> has_k_clique(const CliqueInstance& instance) {
  const Graph& g = instance.graph;
  const int m = g.vertex_count();
  const int k = instance.k;
  if (m > 64) throw std::invalid_argument("clique oracle supports m <= 64");

  // Vertices of degree < k-1 cannot appear in any k-clique; peel repeatedly.
  std::uint64_t alive = m == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << m) - 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 1; v <= m; ++v) {
      const std::uint64_t bit = std::uint64_t(1) << (v - 1);
      if (!(alive & bit)) continue;
      if (std::popcount(g.neighbor_mask(v) & alive) < k - 1) {
        alive &= ~bit;
        changed = true;
      }
    }
  }
  if (std::popcount(alive) < k) return std::nullopt;

  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  if (extend_clique(g, alive, k, chosen)) return chosen;
  return std::nullopt;
}

bool is_k_clique(const Graph& graph, const std::vector<int>& vertices, int k) {
  if (static_cast<int>(vertices.size()) != k) return false;
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::unique(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int v : sorted)
    if (v < 1 || v > graph.vertex_count()) return false;
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = a + 1; b < sorted.size(); ++b)
      if (!graph.adjacent(sorted[a], sorted[b])) return false;
  return true;
}

std::pair<Graph, std::vector<int>> planted_clique(int m, int k, std::uint64_t seed) {
  if (m < 1 || k < 1 || k > m) throw std::invalid_argument("planted_clique needs 1 <= k <= m");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (rng.coin()) edges.emplace_back(i, j);

  // Partial Fisher-Yates for the planted k-subset.
  std::vector<int> pool(static_cast<std::size_t>(m));
  std::iota(pool.begin(), pool.end(), 1);
  for (int i = 0; i < k; ++i) {
    const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(m - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  std::vector<int> planted(pool.begin(), pool.begin() + k);
  std::sort(planted.begin(), planted.end());

  for (std::size_t a = 0; a < planted.size(); ++a)
    for (std::size_t b = a + 1; b < planted.size(); ++b)
      edges.emplace_back(planted[a], planted[b]);

  return {Graph(m, std::move(edges)), std::move(planted)};
}

SignVector sign_decode(const Point& point, int m) {
  if (static_cast<int>(point.size()) < m)
    throw std::invalid_argument("point has fewer coordinates than the x-block");
  SignVector s(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (point.is_exact())
      s[static_cast<std::size_t>(i)] = sgn(point.rat[static_cast<std::size_t>(i)]) >= 0 ? 1 : -1;
    else
      s[static_cast<std::size_t>(i)] = point.fp[static_cast<std::size_t>(i)] >= 0.0 ? 1 : -1;
  }
  return s;
}

std::vector<int> sign_to_support(const SignVector& s) {
  std::vector<int> support;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] > 0) support.push_back(static_cast<int>(i) + 1);
  return support;
}

SignVector indicator_to_sign(const std::vector<int>& support, int m) {
  SignVector s(static_cast<std::size_t>(m), -1);
  for (int v : support) {
    if (v < 1 || v > m) throw std::invalid_argument("support vertex out of range");
    s[static_cast<std::size_t>(v) - 1] = 1;
  }
  return s;
}

}  // namespace critgen

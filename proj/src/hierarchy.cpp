#include "divclust/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace divclust {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedTree, "malformed tree: " + what);
}

}  // namespace

Dendrogram::Dendrogram(std::size_t n, std::vector<DendrogramNode> nodes) : n_(n) {
  if (n_ < 2) malformed("need at least 2 objects");
  const std::size_t count = 2 * n_ - 1;
  if (nodes.size() != count)
    malformed(std::to_string(nodes.size()) + " nodes, expected " + std::to_string(count));

  std::vector<std::optional<DendrogramNode>> slots(count);
  for (auto& node : nodes) {
    if (node.id >= count) malformed("node id " + std::to_string(node.id) + " out of range");
    if (slots[node.id]) malformed("duplicate node id " + std::to_string(node.id));
    slots[node.id] = std::move(node);
  }
  nodes_.reserve(count);
  for (auto& slot : slots) nodes_.push_back(std::move(*slot));

  std::vector<std::size_t> parent_count(count, 0);
  std::vector<char> leaf_seen(n_, 0);
  for (const auto& node : nodes_) {
    if (!std::isfinite(node.level) || node.level < 0.0)
      malformed("node " + std::to_string(node.id) + " has an invalid level");
    if (node.members.members().back() >= n_)
      malformed("node " + std::to_string(node.id) + " has an out-of-range member");
    if (node.is_leaf()) {
      if (node.members.size() != 1) malformed("leaf " + std::to_string(node.id) + " is not a singleton");
      if (node.level != 0.0) malformed("leaf " + std::to_string(node.id) + " has non-zero level");
      if (leaf_seen[node.members.front()]++) malformed("object appears in two leaves");
      continue;
    }
    const auto [a, b] = *node.children;
    if (a >= count || b >= count || a == b || a == node.id || b == node.id)
      malformed("node " + std::to_string(node.id) + " has invalid children");
    ++parent_count[a];
    ++parent_count[b];
    const auto& ca = nodes_[a].members.members();
    const auto& cb = nodes_[b].members.members();
    std::vector<std::size_t> merged;
    std::merge(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(merged));
    if (!std::ranges::equal(merged, node.members.members()))
      malformed("children of node " + std::to_string(node.id) + " do not partition it");
    if (nodes_[a].level > node.level || nodes_[b].level > node.level)
      malformed("node " + std::to_string(node.id) + " is below one of its children");
  }

  std::size_t roots = 0;
  for (std::size_t id = 0; id < count; ++id) {
    if (parent_count[id] > 1) malformed("node " + std::to_string(id) + " has several parents");
    if (parent_count[id] == 0) {
      root_ = id;
      ++roots;
    }
  }
  if (roots != 1) malformed("expected exactly one root");
  if (nodes_[root_].members.size() != n_) malformed("root does not hold every object");
}

std::vector<std::size_t> Dendrogram::leaf_order() const {
  std::vector<std::size_t> order;
  order.reserve(n_);
  std::vector<std::size_t> stack{root_};
  while (!stack.empty()) {
    const auto& node = nodes_[stack.back()];
    stack.pop_back();
    if (node.is_leaf()) {
      order.push_back(node.members.front());
    } else {
      stack.push_back((*node.children)[1]);
      stack.push_back((*node.children)[0]);
    }
  }
  return order;
}

std::string algorithm_token(const Algorithm& a) {
  if (a.kind == Algorithm::Kind::AverageAgglomerative) return "average-agglomerative";
  return splitter_token(a.splitter);
}

Algorithm parse_algorithm(std::string_view token) {
  if (token == "average-agglomerative") return Algorithm::average_agglomerative();
  try {
    return Algorithm::divisive(parse_splitter(token));
  } catch (const Error&) {
    throw Error(ErrorCode::UnknownName, "unknown algorithm '" + std::string(token) + "'");
  }
}

std::vector<Algorithm> default_roster() {
  std::vector<Algorithm> roster;
  for (CriterionId c : kAllCriteria) roster.push_back(Algorithm::divisive(SplitterId::two_seeds(c)));
  roster.push_back(Algorithm::divisive(SplitterId::pddp()));
  roster.push_back(Algorithm::divisive(SplitterId::macnaughton_smith()));
  roster.push_back(Algorithm::average_agglomerative());
  return roster;
}

Dendrogram divisive_hierarchy(const DissimilarityMatrix& m, const SplitterId& s) {
  std::vector<DendrogramNode> nodes;
  nodes.reserve(2 * m.size() - 1);
  ObjectSet all = ObjectSet::all(m.size());
  const double root_level = stats::diameter(m, all.members());
  nodes.push_back({0, std::move(all), root_level, std::nullopt});

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    if (nodes[id].members.size() < 2) continue;

    const ObjectSet cluster = nodes[id].members;
    Bipartition parts = [&] {
      try {
        return split(m, cluster, s);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoPositiveEigenvalue) throw;
        return two_seeds_split(m, cluster, CriterionId::AverageLink);
      }
    }();

    const std::size_t left_id = nodes.size();
    const std::size_t right_id = left_id + 1;
    nodes[id].children = std::array{left_id, right_id};
    for (const ObjectSet* side : {&parts.left(), &parts.right()}) {
      const double level = side->size() < 2 ? 0.0 : stats::diameter(m, side->members());
      nodes.push_back({nodes.size(), *side, level, std::nullopt});
      queue.push_back(nodes.size() - 1);
    }
  }
  return Dendrogram(m.size(), std::move(nodes));
}

Dendrogram agglomerative_average_link(const DissimilarityMatrix& m) {
  const std::size_t n = m.size();
  std::vector<DendrogramNode> nodes;
  nodes.reserve(2 * n - 1);

  // Slot i holds the active cluster whose smallest member is i.
  std::vector<std::vector<std::size_t>> members(n);
  std::vector<std::size_t> node_of(n);
  std::vector<char> active(n, 1);
  std::vector<double> cross(n * n, 0.0);  // sum of d over cross pairs
  for (std::size_t i = 0; i < n; ++i) {
    members[i] = {i};
    node_of[i] = i;
    nodes.push_back({i, ObjectSet({i}), 0.0, std::nullopt});
    for (std::size_t j = 0; j < n; ++j) cross[i * n + j] = m(i, j);
  }

  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t best_a = n;
    std::size_t best_b = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < n; ++a) {
      if (!active[a]) continue;
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!active[b]) continue;
        const double dist = cross[a * n + b] /
                            static_cast<double>(members[a].size() * members[b].size());
        if (best_a == n || dist < best) {
          best = dist;
          best_a = a;
          best_b = b;
        }
      }
    }

    const std::size_t a = best_a;
    const std::size_t b = best_b;
    // Rounding may leave a mean a hair below a child's level.
    const double level = std::max({best, nodes[node_of[a]].level, nodes[node_of[b]].level});
    std::vector<std::size_t> merged;
    std::merge(members[a].begin(), members[a].end(), members[b].begin(), members[b].end(),
               std::back_inserter(merged));
    const std::size_t id = nodes.size();
    nodes.push_back({id, ObjectSet(merged), level, std::array{node_of[a], node_of[b]}});

    members[a] = std::move(merged);
    members[b].clear();
    active[b] = 0;
    node_of[a] = id;
    for (std::size_t c = 0; c < n; ++c) {
      if (!active[c] || c == a) continue;
      const double sum = cross[a * n + c] + cross[b * n + c];
      cross[a * n + c] = sum;
      cross[c * n + a] = sum;
    }
  }
  return Dendrogram(n, std::move(nodes));
}

Dendrogram build_dendrogram(const DissimilarityMatrix& m, const Algorithm& a) {
  if (a.kind == Algorithm::Kind::AverageAgglomerative) return agglomerative_average_link(m);
  return divisive_hierarchy(m, a.splitter);
}

DissimilarityMatrix cophenetic(const Dendrogram& t) {
  const std::size_t n = t.size();
  std::vector<double> packed(n * (n - 1) / 2, 0.0);
  for (const auto& node : t.nodes()) {
    if (node.is_leaf()) continue;
    const auto& a = t.node((*node.children)[0]).members;
    const auto& b = t.node((*node.children)[1]).members;
    for (std::size_t x : a) {
      for (std::size_t y : b) {
        const std::size_t i = std::min(x, y);
        const std::size_t j = std::max(x, y);
        packed[i * n - i * (i + 1) / 2 + (j - i - 1)] = node.level;
      }
    }
  }
  return DissimilarityMatrix(n, std::move(packed));
}

}  // namespace divclust

#include "polyurn/tree.hpp"

#include <algorithm>

#include "polyurn/errors.hpp"

namespace polyurn {

TreeNode::TreeNode(std::int64_t tag_, std::vector<TreeNode> kids) : children(std::move(kids)), tag(tag_) {
  subtree_size = 1;
  for (const auto& c : children) subtree_size += c.subtree_size;
}

void TreeNode::refresh_sizes() {
  subtree_size = 1;
  for (auto& c : children) {
    c.refresh_sizes();
    subtree_size += c.subtree_size;
  }
}

TreeNode TreeNode::path(std::size_t vertices) {
  if (vertices == 0) throw InvalidParams("a tree needs at least one vertex");
  TreeNode node;
  for (std::size_t i = 1; i < vertices; ++i) node = TreeNode(-1, {std::move(node)});
  return node;
}

TreeNode TreeNode::star(std::size_t leaves) { return TreeNode(-1, std::vector<TreeNode>(leaves)); }

std::size_t FlatTree::find_tag(std::int64_t t) const {
  const auto it = std::find(tag.begin(), tag.end(), t);
  if (it == tag.end()) throw InvalidParams("no vertex tagged " + std::to_string(t));
  return static_cast<std::size_t>(it - tag.begin());
}

FlatTree flatten(const TreeNode& root) {
  FlatTree flat;
  flat.parent.reserve(root.subtree_size);
  std::vector<std::pair<const TreeNode*, std::int64_t>> stack{{&root, -1}};
  while (!stack.empty()) {
    const auto [node, parent] = stack.back();
    stack.pop_back();
    const auto id = static_cast<std::int64_t>(flat.parent.size());
    flat.parent.push_back(parent);
    flat.subtree_size.push_back(node->subtree_size);
    flat.tag.push_back(node->tag);
    for (auto it = node->children.rbegin(); it != node->children.rend(); ++it) stack.emplace_back(&*it, id);
  }
  return flat;
}

TreePair build_trees(std::uint32_t p, std::uint32_t l, std::uint32_t n, TreeReading reading) {
  if (p == 0 || l == 0 || n == 0) throw InvalidParams("trees need p, l, n >= 1");
  const std::uint64_t nl = static_cast<std::uint64_t>(n) * l;
  const std::uint64_t cells = static_cast<std::uint64_t>(p) * l * n * (n + 1) / 2;

  const bool matched = reading == TreeReading::kCornerMatched;
  const std::uint64_t last = (matched && p == 1) ? nl : nl + 1;
  const std::uint32_t first_k = matched ? 1 : 2;

  auto extra_leaves = [&](std::uint64_t j) -> std::uint32_t {
    if (j == nl) return p >= 2 ? p - 2 : 0;
    if (j % l == 0) {
      const std::uint64_t k = j / l;
      if (k >= first_k && k + 1 <= n) return p;
    }
    return 0;
  };

  // Leftmost branch built from the leaf up; the branch child comes first.
  TreeNode s(static_cast<std::int64_t>(last));
  for (std::uint64_t j = last - 1; j >= 1; --j) {
    std::vector<TreeNode> kids;
    kids.reserve(1 + extra_leaves(j));
    kids.push_back(std::move(s));
    kids.resize(1 + extra_leaves(j));
    s = TreeNode(static_cast<std::int64_t>(j), std::move(kids));
  }

  TreePair out;
  out.cells = cells;
  auto& rec = out.reconciliation;
  rec.reading = reading;
  rec.stated_root_children =
      static_cast<std::int64_t>(cells + 1) - static_cast<std::int64_t>(n) * static_cast<std::int64_t>(p + l);
  rec.applied_root_children = static_cast<std::int64_t>(cells) - static_cast<std::int64_t>(s.subtree_size);
  rec.shortfall = rec.applied_root_children - rec.stated_root_children;
  if (rec.applied_root_children < 0) {
    throw InconsistentTree("|S| = " + std::to_string(s.subtree_size) + " already exceeds N = " +
                           std::to_string(cells) + " for (p, l, n) = (" + std::to_string(p) + ", " +
                           std::to_string(l) + ", " + std::to_string(n) + ")");
  }
  rec.note = rec.shortfall == 0
                 ? "root child count as stated; |T| = N + 1"
                 : "root child count adjusted by " + std::to_string(rec.shortfall) + " to reach |T| = N + 1";

  std::vector<TreeNode> root_kids;
  root_kids.reserve(1 + static_cast<std::size_t>(rec.applied_root_children));
  root_kids.push_back(s);
  root_kids.resize(1 + static_cast<std::size_t>(rec.applied_root_children));
  out.big = TreeNode(0, std::move(root_kids));
  out.small = std::move(s);
  if (out.big.subtree_size != cells + 1) {
    throw InconsistentTree("|T| = " + std::to_string(out.big.subtree_size) + " but N + 1 = " +
                           std::to_string(cells + 1));
  }
  return out;
}

mpz_class count_linear_extensions(const TreeNode& root) {
  const FlatTree flat = flatten(root);
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), flat.size());
  mpz_class den = 1;
  for (const auto s : flat.subtree_size) den *= static_cast<unsigned long>(s);
  return num / den;
}

std::uint64_t enumerate_linear_extensions(const TreeNode& root,
                                          const std::function<void(const std::vector<std::uint32_t>&)>& visit,
                                          std::size_t bound) {
  const FlatTree flat = flatten(root);
  const std::size_t v = flat.size();
  if (v > bound) throw BoundExceeded(v, bound);
  std::vector<std::vector<std::size_t>> children(v);
  for (std::size_t i = 1; i < v; ++i) children[static_cast<std::size_t>(flat.parent[i])].push_back(i);

  std::vector<std::uint32_t> labels(v, 0);
  std::vector<std::size_t> frontier{0};
  std::uint64_t count = 0;

  std::function<void(std::uint32_t)> step = [&](std::uint32_t next) {
    if (next == v) {
      ++count;
      visit(labels);
      return;
    }
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      const std::size_t u = frontier[f];
      labels[u] = next;
      frontier[f] = frontier.back();
      frontier.pop_back();
      frontier.insert(frontier.end(), children[u].begin(), children[u].end());
      step(next + 1);
      frontier.resize(frontier.size() - children[u].size());
      frontier.push_back(u);
      std::swap(frontier[f], frontier.back());
    }
  };
  step(0);
  return count;
}

std::vector<std::uint32_t> sample_linear_extension(const FlatTree& tree, Philox4x32& rng) {
  const std::size_t v = tree.size();
  std::vector<std::vector<std::size_t>> children(v);
  for (std::size_t i = 1; i < v; ++i) children[static_cast<std::size_t>(tree.parent[i])].push_back(i);

  std::vector<std::uint32_t> labels(v, 0);
  std::vector<std::size_t> frontier{0};
  std::uint64_t remaining = v;
  for (std::uint32_t next = 0; next < v; ++next) {
    // Frontier subtrees partition the unlabeled vertices.
    std::uint64_t u = rng.below(remaining);
    std::size_t f = 0;
    while (u >= tree.subtree_size[frontier[f]]) u -= tree.subtree_size[frontier[f++]];
    const std::size_t chosen = frontier[f];
    labels[chosen] = next;
    frontier[f] = frontier.back();
    frontier.pop_back();
    frontier.insert(frontier.end(), children[chosen].begin(), children[chosen].end());
    --remaining;
  }
  return labels;
}

std::vector<std::uint32_t> sample_linear_extension(const TreeNode& root, Philox4x32& rng) {
  return sample_linear_extension(flatten(root), rng);
}

std::map<std::uint32_t, mpz_class> extension_label_counts(const TreeNode& root, std::int64_t tag,
                                                          std::size_t bound) {
  constexpr std::size_t kHardLimit = 20;
  const FlatTree flat = flatten(root);
  const std::size_t v = flat.size();
  if (v > std::min(bound, kHardLimit)) throw BoundExceeded(v, std::min(bound, kHardLimit));
  const std::size_t target = flat.find_tag(tag);

  // Dynamic programming over order ideals (ancestor-closed vertex sets).
  const std::uint32_t full = (1u << v) - 1;
  std::vector<std::uint32_t> parent_bit(v, 0);
  std::vector<std::uint32_t> child_bits(v, 0);
  for (std::size_t i = 1; i < v; ++i) {
    const auto par = static_cast<std::size_t>(flat.parent[i]);
    parent_bit[i] = 1u << par;
    child_bits[par] |= 1u << i;
  }
  auto is_ideal = [&](std::uint32_t mask) {
    for (std::size_t i = 1; i < v; ++i) {
      if ((mask >> i & 1u) && !(mask & parent_bit[i])) return false;
    }
    return true;
  };

  std::vector<std::uint64_t> from_empty(std::size_t{1} << v, 0);  // extensions of the ideal itself
  std::vector<std::uint64_t> to_full(std::size_t{1} << v, 0);     // ways to finish from the ideal
  std::vector<bool> ideal(std::size_t{1} << v, false);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    ideal[mask] = is_ideal(mask);
    if (mask == full) break;
  }
  from_empty[0] = 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (ideal[mask]) {
      std::uint64_t sum = 0;
      for (std::size_t i = 0; i < v; ++i) {
        if ((mask >> i & 1u) && !(mask & child_bits[i])) sum += from_empty[mask ^ (1u << i)];
      }
      from_empty[mask] = sum;
    }
    if (mask == full) break;
  }
  to_full[full] = 1;
  for (std::uint32_t mask = full; mask-- > 0;) {
    if (!ideal[mask]) continue;
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < v; ++i) {
      if (!(mask >> i & 1u) && (i == 0 || (mask & parent_bit[i]))) sum += to_full[mask | (1u << i)];
    }
    to_full[mask] = sum;
  }

  std::map<std::uint32_t, mpz_class> counts;
  const std::uint32_t bit = 1u << target;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (ideal[mask] && !(mask & bit) && (target == 0 || (mask & parent_bit[target]))) {
      if (from_empty[mask] != 0 && to_full[mask | bit] != 0) {
        counts[static_cast<std::uint32_t>(__builtin_popcount(mask))] +=
            mpz_class(static_cast<unsigned long>(from_empty[mask])) * static_cast<unsigned long>(to_full[mask | bit]);
      }
    }
    if (mask == full) break;
  }
  return counts;
}

std::int64_t small_tree_urn_statistic(std::uint64_t small_tree_size, std::uint32_t label) {
  return static_cast<std::int64_t>(small_tree_size) - static_cast<std::int64_t>(label);
}

}  // namespace polyurn

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "polyurn/random.hpp"

namespace polyurn {

// Rooted planar tree. `tag` names a distinguished vertex (branch vertex v_j
// carries j; unnamed vertices carry -1).
struct TreeNode {
  std::vector<TreeNode> children;
  std::uint64_t subtree_size = 1;
  std::int64_t tag = -1;

  TreeNode() = default;
  explicit TreeNode(std::int64_t tag_, std::vector<TreeNode> kids = {});

  // Recomputes subtree_size bottom-up after manual edits.
  void refresh_sizes();
  static TreeNode path(std::size_t vertices);
  static TreeNode star(std::size_t leaves);
};

// Preorder view of a tree; vertex 0 is the root, parent[0] == -1.
struct FlatTree {
  std::vector<std::int64_t> parent;
  std::vector<std::uint64_t> subtree_size;
  std::vector<std::int64_t> tag;

  std::size_t size() const noexcept { return parent.size(); }
  // Preorder index of the vertex with this tag; throws if absent.
  std::size_t find_tag(std::int64_t tag) const;
};

FlatTree flatten(const TreeNode& root);

// How the tree builder reads the vertex-degree rules.
//  kCornerMatched: child counts include the next branch vertex; v_{kl} has
//    p + 1 children for 1 <= k <= n - 1, v_{nl} has p - 1 children, and when
//    p = 1 the branch stops at v_{nl}. Gives |T| = N + 1 with the stated
//    number N + 1 - n(p + l) of extra root children.
//  kLiteral: extra children only for 2 <= k <= n - 1 and the branch always
//    has n l + 1 vertices; the vertex shortfall is made up at v_0.
enum class TreeReading { kCornerMatched, kLiteral };

struct TreeReconciliation {
  TreeReading reading = TreeReading::kCornerMatched;
  std::int64_t stated_root_children = 0;   // N + 1 - n(p + l)
  std::int64_t applied_root_children = 0;  // what v_0 actually received
  std::int64_t shortfall = 0;              // applied - stated
  std::string note;
};

struct TreePair {
  TreeNode small;  // S, rooted at v_1
  TreeNode big;    // T, rooted at v_0
  std::uint64_t cells = 0;  // N of the matching tableau shape
  TreeReconciliation reconciliation;
};

// Builds S and T for the triangular shape (p, l, n). Throws InconsistentTree
// when |T| != N + 1 cannot be restored at v_0.
TreePair build_trees(std::uint32_t p, std::uint32_t l, std::uint32_t n,
                     TreeReading reading = TreeReading::kCornerMatched);

// Number of ancestor-respecting labelings: |V|! / prod subtree sizes.
mpz_class count_linear_extensions(const TreeNode& root);

inline constexpr std::size_t kDefaultExtensionBound = 16;

// Visits each linear extension once. labels[v] (preorder v) lies in
// {0, ..., |V| - 1}; a parent always gets a smaller label than its children.
std::uint64_t enumerate_linear_extensions(const TreeNode& root,
                                          const std::function<void(const std::vector<std::uint32_t>&)>& visit,
                                          std::size_t bound = kDefaultExtensionBound);

// Uniform linear extension. Vertices are taken in order; among the current
// roots of the unlabeled forest, each is chosen with probability
// proportional to its subtree size.
std::vector<std::uint32_t> sample_linear_extension(const FlatTree& tree, Philox4x32& rng);
std::vector<std::uint32_t> sample_linear_extension(const TreeNode& root, Philox4x32& rng);

// Exact law of the label of the vertex tagged `tag`: label -> count.
std::map<std::uint32_t, mpz_class> extension_label_counts(const TreeNode& root, std::int64_t tag,
                                                          std::size_t bound = kDefaultExtensionBound);

// |S| - E_S(v_{nl}) with 0-based labels on S: distributed as the black count
// of the (p, l) Young–Pólya urn with b0 = p, w0 = l after (n - 1) p steps.
std::int64_t small_tree_urn_statistic(std::uint64_t small_tree_size, std::uint32_t label);

}  // namespace polyurn

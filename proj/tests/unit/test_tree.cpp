#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include <polyurn/errors.hpp>
#include <polyurn/history.hpp>
#include <polyurn/tableau.hpp>
#include <polyurn/tree.hpp>

#include "test_support.hpp"

using namespace polyurn;

namespace {

// All unordered rooted trees with up to max_size vertices, one planar
// representative each.
std::vector<std::vector<TreeNode>> rooted_trees(std::size_t max_size) {
  std::vector<std::vector<TreeNode>> by_size(max_size + 1);
  by_size[1].push_back(TreeNode());
  // Children are chosen as non-increasing (size, index) pairs, so each
  // multiset of subtrees appears once.
  std::function<void(std::size_t, std::pair<std::size_t, std::size_t>, std::vector<TreeNode>&,
                     std::vector<TreeNode>&)>
      fill = [&](std::size_t left, std::pair<std::size_t, std::size_t> cap, std::vector<TreeNode>& kids,
                 std::vector<TreeNode>& out) {
        if (left == 0) {
          out.push_back(TreeNode(-1, kids));
          return;
        }
        for (std::size_t s = std::min(left, cap.first); s >= 1; --s) {
          const std::size_t top = s == cap.first ? cap.second : by_size[s].size() - 1;
          for (std::size_t i = 0; i <= top && i < by_size[s].size(); ++i) {
            kids.push_back(by_size[s][i]);
            fill(left - s, {s, i}, kids, out);
            kids.pop_back();
          }
        }
      };
  for (std::size_t n = 2; n <= max_size; ++n) {
    std::vector<TreeNode> kids;
    fill(n - 1, {n - 1, by_size[n - 1].size() - 1}, kids, by_size[n]);
  }
  return by_size;
}

struct Case {
  std::uint32_t p, l, n;
};

std::vector<Case> small_cases(std::uint64_t max_cells) {
  std::vector<Case> out;
  for (std::uint32_t p = 1; p <= max_cells; ++p) {
    for (std::uint32_t l = 1; l <= max_cells; ++l) {
      for (std::uint32_t n = 1; static_cast<std::uint64_t>(p) * l * n * (n + 1) / 2 <= max_cells; ++n) {
        out.push_back({p, l, n});
      }
    }
  }
  return out;
}

using Pmf = std::map<std::int64_t, mpq_class>;

Pmf normalize(const std::map<std::int64_t, mpz_class>& counts) {
  mpz_class total = 0;
  for (const auto& [k, c] : counts) total += c;
  Pmf out;
  for (const auto& [k, c] : counts) {
    if (c != 0) out[k] = testing::q(c, total);
  }
  return out;
}

Pmf corner_pmf(const Case& c) {
  std::map<std::int64_t, mpz_class> counts;
  for (const auto& [x, n] : corner_entry_counts(make_shape(c.p, c.l, c.n).diagram)) counts[x] = n;
  return normalize(counts);
}

Pmf label_pmf(const TreeNode& root, std::int64_t tag, const std::function<std::int64_t(std::uint32_t)>& map) {
  std::map<std::int64_t, mpz_class> counts;
  for (const auto& [x, n] : extension_label_counts(root, tag, 20)) counts[map(x)] += n;
  return normalize(counts);
}

Pmf urn_pmf(const Case& c) {
  const UrnSpec spec = YoungPolyaFamily{c.p, c.l, c.p, c.l}.to_spec();
  const HistoryRow row = exact_histories(spec, static_cast<std::uint64_t>(c.n - 1) * c.p).row(
      static_cast<std::uint64_t>(c.n - 1) * c.p);
  std::map<std::int64_t, mpz_class> counts;
  for (std::size_t i = 0; i < row.counts.size(); ++i) counts[static_cast<std::int64_t>(row.k_min + i)] = row.counts[i];
  return normalize(counts);
}

}  // namespace

TEST_CASE("generated tree families have the known sizes") {
  const auto trees = rooted_trees(9);
  const std::vector<std::size_t> want{0, 1, 1, 2, 4, 9, 20, 48, 115, 286};
  for (std::size_t n = 1; n <= 9; ++n) CHECK(trees[n].size() == want[n]);
}

TEST_CASE("extension counts on basic trees") {
  for (std::size_t m = 1; m <= 8; ++m) {
    CHECK(count_linear_extensions(TreeNode::path(m)) == 1);
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m);
    CHECK(count_linear_extensions(TreeNode::star(m)) == f);
  }
  const TreeNode t(-1, {TreeNode::path(3), TreeNode()});
  CHECK(t.subtree_size == 5);
  CHECK(count_linear_extensions(t) == 4);
  std::set<std::vector<std::uint32_t>> seen;
  CHECK(enumerate_linear_extensions(t, [&](const std::vector<std::uint32_t>& lab) { seen.insert(lab); }) == 4);
  CHECK(seen.size() == 4);
}

TEST_CASE("enumeration matches the hook formula on all trees up to 10 vertices") {
  const auto trees = rooted_trees(10);
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& t : trees[n]) {
      const FlatTree flat = flatten(t);
      std::uint64_t valid = 0;
      const auto count = enumerate_linear_extensions(t, [&](const std::vector<std::uint32_t>& lab) {
        bool ok = true;
        std::vector<bool> used(lab.size(), false);
        for (std::size_t v = 0; v < lab.size(); ++v) {
          ok = ok && lab[v] < lab.size() && !used[lab[v]];
          if (lab[v] < lab.size()) used[lab[v]] = true;
          if (v > 0) ok = ok && lab[static_cast<std::size_t>(flat.parent[v])] < lab[v];
        }
        valid += ok;
      });
      CHECK(count == valid);
      CHECK(mpz_class(static_cast<unsigned long>(count)) == count_linear_extensions(t));
    }
  }
}

TEST_CASE("enumeration matches the hook formula on trees with 11 and 12 vertices") {
  const auto trees = rooted_trees(12);
  for (std::size_t n = 11; n <= 12; ++n) {
    for (std::size_t i = 0; i < trees[n].size(); i += 7) {
      const auto& t = trees[n][i];
      const auto count = enumerate_linear_extensions(t, [](const std::vector<std::uint32_t>&) {});
      CHECK(mpz_class(static_cast<unsigned long>(count)) == count_linear_extensions(t));
    }
  }
}

TEST_CASE("enumeration bound") {
  CHECK_THROWS_AS(enumerate_linear_extensions(TreeNode::path(17), [](const auto&) {}), BoundExceeded);
  CHECK_THROWS_AS(extension_label_counts(TreeNode::path(21), -1, 30), BoundExceeded);
}

TEST_CASE("sampler is uniform") {
  const auto trees = rooted_trees(7);
  std::uint64_t seed = 0;
  double pooled = 0.0, pooled_dof = 0.0;
  std::vector<double> p_values;
  for (std::size_t n = 3; n <= 7; ++n) {
    for (const auto& t : trees[n]) {
      std::map<std::vector<std::uint32_t>, double> counts;
      enumerate_linear_extensions(t, [&](const std::vector<std::uint32_t>& lab) { counts[lab] = 0; });
      if (counts.size() < 2) continue;
      const double per = 2000;
      const auto reps = static_cast<std::uint64_t>(per * counts.size());
      const FlatTree flat = flatten(t);
      Philox4x32 rng(seed++, 0);
      for (std::uint64_t i = 0; i < reps; ++i) {
        auto it = counts.find(sample_linear_extension(flat, rng));
        REQUIRE(it != counts.end());
        it->second += 1;
      }
      double stat = 0.0;
      for (const auto& [lab, c] : counts) stat += (c - per) * (c - per) / per;
      const auto dof = static_cast<double>(counts.size() - 1);
      pooled += stat;
      pooled_dof += dof;
      p_values.push_back(testing::chi_square_upper(stat, dof));
    }
  }
  // Per tree with a Bonferroni bound, then all trees together.
  for (const double p : p_values) CHECK(p > 1e-3 / static_cast<double>(p_values.size()));
  CHECK(testing::chi_square_upper(pooled, pooled_dof) > 1e-3);
}

TEST_CASE("label law by dynamic programming matches enumeration") {
  const TreeNode t(0, {TreeNode(5, {TreeNode(), TreeNode::path(3)}), TreeNode::star(2), TreeNode()});
  std::map<std::uint32_t, mpz_class> brute;
  const std::size_t target = flatten(t).find_tag(5);
  enumerate_linear_extensions(t, [&](const std::vector<std::uint32_t>& lab) { brute[lab[target]] += 1; });
  CHECK(extension_label_counts(t, 5) == brute);
  CHECK_THROWS_AS(extension_label_counts(t, 99), InvalidParams);
}

TEST_CASE("tree shapes for the smallest cases") {
  const TreePair tp = build_trees(2, 1, 2);
  CHECK(tp.cells == 6);
  CHECK(tp.big.subtree_size == 7);
  CHECK(tp.reconciliation.shortfall == 0);
  CHECK(tp.reconciliation.stated_root_children == tp.reconciliation.applied_root_children);
  // Branch v_1, v_2, v_3.
  CHECK(tp.small.tag == 1);
  CHECK(tp.small.children.front().tag == 2);
  CHECK(tp.small.children.front().children.front().tag == 3);
  CHECK(tp.small.children.front().children.front().children.empty());
  CHECK(tp.big.tag == 0);

  CHECK(build_trees(2, 1, 3).big.subtree_size == 13);
  CHECK_THROWS_AS(build_trees(0, 1, 1), InvalidParams);
}

TEST_CASE("branch length and vertex counts") {
  for (const auto& c : small_cases(40)) {
    const TreePair tp = build_trees(c.p, c.l, c.n);
    const FlatTree flat = flatten(tp.small);
    const std::int64_t last = c.p == 1 ? c.n * c.l : c.n * c.l + 1;
    for (std::int64_t j = 1; j <= last; ++j) CHECK_NOTHROW(flat.find_tag(j));
    CHECK_THROWS_AS(flat.find_tag(last + 1), InvalidParams);
    CHECK(tp.small.subtree_size == static_cast<std::uint64_t>(c.n) * (c.p + c.l) - 1);
    CHECK(tp.big.subtree_size == tp.cells + 1);
    CHECK(tp.reconciliation.shortfall == 0);
  }
}

TEST_CASE("literal reading needs a root adjustment") {
  const TreePair tp = build_trees(2, 1, 3, TreeReading::kLiteral);
  CHECK(tp.big.subtree_size == tp.cells + 1);
  CHECK(tp.reconciliation.shortfall == 2);
  CHECK_THROWS_AS(build_trees(1, 1, 1, TreeReading::kLiteral), InconsistentTree);
}

TEST_CASE("corner entry has the law of the branch label in T") {
  for (const auto& c : small_cases(12)) {
    CAPTURE(c.p);
    CAPTURE(c.l);
    CAPTURE(c.n);
    const TreePair tp = build_trees(c.p, c.l, c.n);
    const Pmf corner = corner_pmf(c);
    const Pmf tree = label_pmf(tp.big, static_cast<std::int64_t>(c.n) * c.l, [](std::uint32_t x) { return x; });
    CHECK(corner == tree);
  }
}

TEST_CASE("literal reading breaks the corner law") {
  int compared = 0, differ = 0;
  for (const auto& c : small_cases(12)) {
    if (c.n < 2) continue;
    const TreePair tp = build_trees(c.p, c.l, c.n, TreeReading::kLiteral);
    const Pmf tree = label_pmf(tp.big, static_cast<std::int64_t>(c.n) * c.l, [](std::uint32_t x) { return x; });
    ++compared;
    differ += corner_pmf(c) != tree;
  }
  CHECK(compared > 0);
  CHECK(differ == compared);
}

TEST_CASE("small tree statistic has the urn law") {
  int n_minus = 0, shifted = 0;
  for (const auto& c : small_cases(12)) {
    CAPTURE(c.p);
    CAPTURE(c.l);
    CAPTURE(c.n);
    const TreePair tp = build_trees(c.p, c.l, c.n);
    const auto s_size = tp.small.subtree_size;
    const auto tag = static_cast<std::int64_t>(c.n) * c.l;
    const Pmf urn = urn_pmf(c);
    // The candidate that matches.
    const Pmf chosen = label_pmf(tp.small, tag, [&](std::uint32_t x) { return small_tree_urn_statistic(s_size, x); });
    CHECK(chosen == urn);
    // Two other candidates.
    const auto N = static_cast<std::int64_t>(tp.cells);
    n_minus += label_pmf(tp.small, tag, [&](std::uint32_t x) { return N - x; }) != urn;
    shifted += label_pmf(tp.small, tag, [&](std::uint32_t x) { return tag + c.p - x; }) != urn;
  }
  CHECK(n_minus > 0);
  CHECK(shifted > 0);
}

TEST_CASE("urn statistic arithmetic") {
  CHECK(small_tree_urn_statistic(5, 2) == 3);
  CHECK(small_tree_urn_statistic(5, 0) == 5);
}

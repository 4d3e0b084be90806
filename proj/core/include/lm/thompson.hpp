#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lm/cantor.hpp"
#include "lm/word.hpp"

namespace lm {

// Immutable rooted binary tree with structural sharing. Leaves are
// addressed 1..leaf_count() left to right; a leaf's path word collects the
// edge labels 0 (left) / 1 (right) from the root.
class BinTree {
  public:
    BinTree();  // single leaf
    static BinTree leaf() { return BinTree(); }
    static BinTree caret(BinTree left, BinTree right);

    bool is_leaf() const noexcept { return node_ == nullptr; }
    const BinTree& left() const;
    const BinTree& right() const;

    std::size_t caret_count() const noexcept;
    std::size_t leaf_count() const noexcept { return caret_count() + 1; }

    std::vector<std::string> leaf_paths() const;
    // Throws ConstructionError unless the paths are a complete antichain in
    // lexicographic order.
    static BinTree from_leaf_paths(const std::vector<std::string>& paths);

    // Balanced-parenthesis form: a leaf prints "()", a caret "(LR)".
    std::string str() const;
    static BinTree parse(std::string_view text);

    friend bool operator==(const BinTree& s, const BinTree& t) { return s.equal(t); }
    friend bool operator!=(const BinTree& s, const BinTree& t) { return !s.equal(t); }

    // Smallest common refinement (superimposition) of two trees.
    friend BinTree tree_union(const BinTree& s, const BinTree& t);

    // Subtree rooted at the end of `path` (must not run past a leaf...
    // walking below a leaf returns a leaf, matching cylinder refinement).
    BinTree subtree_at(std::string_view path) const;

    // Replaces leaf j by subs[j] for every leaf, left to right.
    BinTree graft(const std::vector<BinTree>& subs) const;

  private:
    struct Node;
    explicit BinTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    bool equal(const BinTree& other) const;

    std::shared_ptr<const Node> node_;  // null = leaf
};

// An element of Thompson's group F as a pair of trees with equal leaf
// counts: the i-th domain leaf cylinder is carried onto the i-th range
// leaf cylinder.
struct TreePair {
    BinTree domain;
    BinTree range;

    TreePair() = default;
    // Throws ConstructionError when the leaf counts differ.
    TreePair(BinTree domain, BinTree range);

    static TreePair identity() { return {}; }

    friend bool operator==(const TreePair& p, const TreePair& q) {
        return p.domain == q.domain && p.range == q.range;
    }
    friend bool operator!=(const TreePair& p, const TreePair& q) { return !(p == q); }

    std::string to_json() const;
    static TreePair from_json(const std::string& text);
};

// True when no index has sibling leaves in both trees at once.
bool is_reduced(const TreePair& p);

// The unique minimal-caret representative; idempotent.
TreePair reduce(const TreePair& p);

// Product pq, meaning "apply p first, then q": both pairs are expanded to
// a common middle tree and the outer trees are kept, then reduced.
TreePair multiply(const TreePair& p, const TreePair& q);

inline TreePair inverse(const TreePair& p) { return {p.range, p.domain}; }

TreePair tree_pair_power(const TreePair& p, long e);

// Number of carets N of the element (reduces first when needed).
std::size_t caret_count(const TreePair& p);

PrefixTable to_prefix_table(const TreePair& p);
TreePair from_prefix_table(const PrefixTable& t);

const TreePair& x0_pair();
const TreePair& x1_pair();

// Evaluates a word over {x0, x1} to a reduced tree pair.
TreePair word_to_pair(const GroupWord& w);

}  // namespace lm

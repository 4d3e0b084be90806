#include "lm/thompson.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "lm/errors.hpp"

namespace lm {

struct BinTree::Node {
    BinTree left;
    BinTree right;
    std::size_t carets;
};

BinTree::BinTree() : node_(nullptr) {}

BinTree BinTree::caret(BinTree left, BinTree right) {
    std::size_t carets = 1 + left.caret_count() + right.caret_count();
    return BinTree(std::make_shared<const Node>(Node{std::move(left), std::move(right), carets}));
}

const BinTree& BinTree::left() const {
    if (is_leaf()) throw ConstructionError("leaf has no children");
    return node_->left;
}

const BinTree& BinTree::right() const {
    if (is_leaf()) throw ConstructionError("leaf has no children");
    return node_->right;
}

std::size_t BinTree::caret_count() const noexcept { return node_ ? node_->carets : 0; }

bool BinTree::equal(const BinTree& other) const {
    if (node_ == other.node_) return true;
    if (is_leaf() || other.is_leaf()) return is_leaf() == other.is_leaf();
    if (caret_count() != other.caret_count()) return false;
    return node_->left.equal(other.node_->left) && node_->right.equal(other.node_->right);
}

std::vector<std::string> BinTree::leaf_paths() const {
    std::vector<std::string> out;
    out.reserve(leaf_count());
    // Iterative DFS; big trees can outgrow the call stack.
    std::vector<std::pair<const BinTree*, std::string>> stack{{this, ""}};
    while (!stack.empty()) {
        auto [t, path] = std::move(stack.back());
        stack.pop_back();
        if (t->is_leaf()) {
            out.push_back(std::move(path));
            continue;
        }
        stack.emplace_back(&t->node_->right, path + "1");
        stack.emplace_back(&t->node_->left, path + "0");
    }
    return out;
}

namespace {

BinTree build_from_paths(const std::vector<std::string>& paths, std::size_t begin,
                         std::size_t end, std::size_t depth) {
    if (end - begin == 1 && paths[begin].size() == depth) return BinTree::leaf();
    std::size_t split = begin;
    while (split < end) {
        if (paths[split].size() <= depth)
            throw ConstructionError("leaf paths: '" + paths[split] + "' is a prefix of a later path");
        if (paths[split][depth] == '1') break;
        ++split;
    }
    if (split == begin || split == end)
        throw ConstructionError("leaf paths: incomplete antichain at depth " +
                                std::to_string(depth));
    return BinTree::caret(build_from_paths(paths, begin, split, depth + 1),
                          build_from_paths(paths, split, end, depth + 1));
}

}  // namespace

BinTree BinTree::from_leaf_paths(const std::vector<std::string>& paths) {
    if (paths.empty()) throw ConstructionError("leaf paths: empty list");
    if (!std::is_sorted(paths.begin(), paths.end()))
        throw ConstructionError("leaf paths: not in lexicographic order");
    if (paths.size() == 1 && paths[0].empty()) return leaf();
    return build_from_paths(paths, 0, paths.size(), 0);
}

std::string BinTree::str() const {
    if (is_leaf()) return "()";
    return "(" + node_->left.str() + node_->right.str() + ")";
}

namespace {

BinTree parse_tree(std::string_view text, std::size_t& i) {
    if (i >= text.size() || text[i] != '(') throw ParseError("tree: expected '('", i);
    ++i;
    if (i < text.size() && text[i] == ')') {
        ++i;
        return BinTree::leaf();
    }
    BinTree l = parse_tree(text, i);
    BinTree r = parse_tree(text, i);
    if (i >= text.size() || text[i] != ')') throw ParseError("tree: expected ')'", i);
    ++i;
    return BinTree::caret(std::move(l), std::move(r));
}

}  // namespace

BinTree BinTree::parse(std::string_view text) {
    std::size_t i = 0;
    BinTree t = parse_tree(text, i);
    if (i != text.size()) throw ParseError("tree: trailing characters", i);
    return t;
}

BinTree tree_union(const BinTree& s, const BinTree& t) {
    if (s.is_leaf()) return t;
    if (t.is_leaf()) return s;
    return BinTree::caret(tree_union(s.left(), t.left()), tree_union(s.right(), t.right()));
}

BinTree BinTree::subtree_at(std::string_view path) const {
    const BinTree* cur = this;
    for (char ch : path) {
        if (cur->is_leaf()) return leaf();
        cur = ch == '0' ? &cur->node_->left : &cur->node_->right;
    }
    return *cur;
}

namespace {

BinTree graft_walk(const BinTree& t, const std::vector<BinTree>& subs, std::size_t& next) {
    if (t.is_leaf()) return subs[next++];
    BinTree l = graft_walk(t.left(), subs, next);
    BinTree r = graft_walk(t.right(), subs, next);
    return BinTree::caret(std::move(l), std::move(r));
}

}  // namespace

BinTree BinTree::graft(const std::vector<BinTree>& subs) const {
    if (subs.size() != leaf_count())
        throw ConstructionError("graft: need one subtree per leaf");
    std::size_t next = 0;
    return graft_walk(*this, subs, next);
}

TreePair::TreePair(BinTree domain_tree, BinTree range_tree)
    : domain(std::move(domain_tree)), range(std::move(range_tree)) {
    if (domain.leaf_count() != range.leaf_count())
        throw ConstructionError("tree pair: leaf counts differ (" +
                                std::to_string(domain.leaf_count()) + " vs " +
                                std::to_string(range.leaf_count()) + ")");
}

namespace {

bool siblings(const std::string& u, const std::string& v) {
    return !u.empty() && u.size() == v.size() && u.back() == '0' && v.back() == '1' &&
           u.compare(0, u.size() - 1, v, 0, v.size() - 1) == 0;
}

}  // namespace

bool is_reduced(const TreePair& p) {
    const std::vector<std::string> dom = p.domain.leaf_paths();
    const std::vector<std::string> ran = p.range.leaf_paths();
    for (std::size_t i = 0; i + 1 < dom.size(); ++i)
        if (siblings(dom[i], dom[i + 1]) && siblings(ran[i], ran[i + 1])) return false;
    return true;
}

TreePair reduce(const TreePair& p) {
    std::vector<std::string> dom = p.domain.leaf_paths();
    std::vector<std::string> ran = p.range.leaf_paths();
    std::size_t i = 0;
    while (i + 1 < dom.size()) {
        if (siblings(dom[i], dom[i + 1]) && siblings(ran[i], ran[i + 1])) {
            dom[i].pop_back();
            ran[i].pop_back();
            dom.erase(dom.begin() + i + 1);
            ran.erase(ran.begin() + i + 1);
            if (i > 0) --i;  // the merge may expose a caret one step left
        } else {
            ++i;
        }
    }
    return TreePair(BinTree::from_leaf_paths(dom), BinTree::from_leaf_paths(ran));
}

TreePair multiply(const TreePair& p, const TreePair& q) {
    const BinTree middle = tree_union(p.range, q.domain);

    std::vector<BinTree> subs;
    for (const std::string& path : p.range.leaf_paths())
        subs.push_back(middle.subtree_at(path));
    BinTree new_domain = p.domain.graft(subs);

    subs.clear();
    for (const std::string& path : q.domain.leaf_paths())
        subs.push_back(middle.subtree_at(path));
    BinTree new_range = q.range.graft(subs);

    return reduce(TreePair(std::move(new_domain), std::move(new_range)));
}

TreePair tree_pair_power(const TreePair& p, long e) {
    TreePair base = e < 0 ? inverse(p) : p;
    TreePair acc;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) acc = multiply(acc, base);
    return acc;
}

std::size_t caret_count(const TreePair& p) {
    if (!is_reduced(p)) return reduce(p).domain.caret_count();
    return p.domain.caret_count();
}

PrefixTable to_prefix_table(const TreePair& p) {
    const std::vector<std::string> dom = p.domain.leaf_paths();
    const std::vector<std::string> ran = p.range.leaf_paths();
    PrefixTable t;
    for (std::size_t i = 0; i < dom.size(); ++i) t.rows.emplace_back(dom[i], ran[i]);
    return t;
}

TreePair from_prefix_table(const PrefixTable& t) {
    t.validate();
    std::vector<std::pair<std::string, std::string>> rows = t.rows;
    std::sort(rows.begin(), rows.end());
    std::vector<std::string> dom, ran;
    for (auto& [d, r] : rows) {
        dom.push_back(d);
        ran.push_back(r);
    }
    return TreePair(BinTree::from_leaf_paths(dom), BinTree::from_leaf_paths(ran));
}

std::string TreePair::to_json() const {
    nlohmann::json j;
    j["domain"] = domain.str();
    j["range"] = range.str();
    return j.dump();
}

TreePair TreePair::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("pair JSON: ") + e.what(), e.byte);
    }
    return TreePair(BinTree::parse(j.at("domain").get<std::string>()),
                    BinTree::parse(j.at("range").get<std::string>()));
}

const TreePair& x0_pair() {
    static const TreePair p = from_prefix_table(x0_table());
    return p;
}

const TreePair& x1_pair() {
    static const TreePair p = from_prefix_table(x1_table());
    return p;
}

TreePair word_to_pair(const GroupWord& w) {
    TreePair acc;
    for (const Letter& l : w.letters()) {
        if (l.sym.base != 'x' || l.sym.sub.empty())
            throw ConstructionError("word_to_pair: expected a word over {x0, x1}, got '" +
                                    l.sym.str() + "'");
        const TreePair& gen = l.sym.sub == "0" ? x0_pair() : x1_pair();
        acc = multiply(acc, tree_pair_power(gen, l.exp));
    }
    return acc;
}

}  // namespace lm

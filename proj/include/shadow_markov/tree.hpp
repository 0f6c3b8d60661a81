#pragma once

// The shadow Markov tree. Every region of the planar binary tree carries a
// dual number; a vertex is described by the two regions it separates
// (left, right) and the region created below it (newest):
//
//       left | right
//            *
//          newest
//
// The L child keeps the left neighbour and the R child keeps the right one:
//     L: (left, newest, (left^2 + newest^2) / right)
//     R: (newest, right, (newest^2 + right^2) / left)

#include "shadow_markov/dual_int.hpp"
#include "shadow_markov/initial_triple.hpp"
#include "shadow_markov/markov.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace shadow_markov {

enum class Direction : char { Left = 'L', Right = 'R' };

/// Word over {L, R}; its length is the depth below the trunk.
class TreePath {
public:
    TreePath() = default;
    explicit TreePath(std::string_view word) {
        for (char c : word) push_back(parse_direction(c));
    }

    static Direction parse_direction(char c) {
        if (c == 'L' || c == 'l') return Direction::Left;
        if (c == 'R' || c == 'r') return Direction::Right;
        throw ParseError(std::string("tree path letters must be L or R, got '") + c + "'");
    }

    void push_back(Direction d) { word_ += static_cast<char>(d); }
    TreePath extended(Direction d) const {
        TreePath out = *this;
        out.push_back(d);
        return out;
    }

    std::size_t size() const { return word_.size(); }
    bool empty() const { return word_.empty(); }
    const std::string& str() const { return word_; }

    Direction operator[](std::size_t i) const { return static_cast<Direction>(word_[i]); }

    /// L <-> R
    TreePath mirrored() const {
        TreePath out;
        for (char c : word_) out.word_ += c == 'L' ? 'R' : 'L';
        return out;
    }

    friend bool operator==(const TreePath&, const TreePath&) = default;

private:
    std::string word_;
};

struct TreeNode {
    DualInt left;
    DualInt right;
    DualInt newest;
    TreePath path;

    std::size_t depth() const { return path.size(); }
    DualTriple triple() const { return {left, right, newest}; }

    friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

/// Root vertex: mutate `slot` of the fundamental triple; the other two seed
/// regions (in slot order) become the left and right neighbours.
inline TreeNode trunk(const InitialTriple& seed, Slot slot = Slot::A) {
    const DualTriple base = fundamental_triple(seed);
    const DualTriple mutated = mutate(base, slot);
    const auto [p, q] = detail::others(slot);
    return {base[p], base[q], mutated[slot], TreePath{}};
}

inline TreeNode child(const TreeNode& n, Direction dir) {
    if (dir == Direction::Left) {
        return {n.left, n.newest, exact_div(square(n.left) + square(n.newest), n.right), n.path.extended(dir)};
    }
    return {n.newest, n.right, exact_div(square(n.newest) + square(n.right), n.left), n.path.extended(dir)};
}

inline TreeNode node_at(const InitialTriple& seed, const TreePath& path, Slot trunk_slot = Slot::A) {
    TreeNode n = trunk(seed, trunk_slot);
    for (std::size_t i = 0; i < path.size(); ++i) n = child(n, path[i]);
    return n;
}

/// All 2^(depth+1) - 1 nodes, breadth-first, L before R.
inline std::vector<TreeNode> subtree(const InitialTriple& seed, std::size_t depth, Slot trunk_slot = Slot::A) {
    std::vector<TreeNode> nodes;
    nodes.reserve((std::size_t{2} << depth) - 1);
    nodes.push_back(trunk(seed, trunk_slot));
    std::size_t level_begin = 0;
    for (std::size_t d = 0; d < depth; ++d) {
        const std::size_t level_end = nodes.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            // copy: push_back may reallocate
            const TreeNode parent = nodes[i];
            nodes.push_back(child(parent, Direction::Left));
            nodes.push_back(child(parent, Direction::Right));
        }
        level_begin = level_end;
    }
    return nodes;
}

/// Newest values along start, start+d, start+dd, ... (`length` values).
inline std::vector<DualInt> branch(const InitialTriple& seed, Direction dir, std::size_t length,
                                   const TreePath& start = {}, Slot trunk_slot = Slot::A) {
    std::vector<DualInt> out;
    if (length == 0) return out;
    out.reserve(length);
    TreeNode n = node_at(seed, start, trunk_slot);
    out.push_back(n.newest);
    while (out.size() < length) {
        n = child(n, dir);
        out.push_back(n.newest);
    }
    return out;
}

/// Like branch(), but preceded by the region the first step mutates away
/// (right neighbour for L, left neighbour for R). With seed (0,1,1) this
/// gives the odd Fibonacci branch 1, 2, 5, 13, ... from the trunk in
/// direction L, and the Pell bisection 1, 5, 29, 169, ... from "L" in
/// direction R.
inline std::vector<DualInt> branch_sequence(const InitialTriple& seed, Direction dir, std::size_t length,
                                            const TreePath& start = {}, Slot trunk_slot = Slot::A) {
    std::vector<DualInt> out;
    if (length == 0) return out;
    const TreeNode n = node_at(seed, start, trunk_slot);
    out.push_back(dir == Direction::Left ? n.right : n.left);
    auto rest = branch(seed, dir, length - 1, start, trunk_slot);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

/// Every region label up to `depth`: the three seed regions followed by the
/// newest region of each node in breadth-first order.
inline std::vector<DualInt> region_labels(const InitialTriple& seed, std::size_t depth, Slot trunk_slot = Slot::A) {
    const DualTriple base = fundamental_triple(seed);
    std::vector<DualInt> out(base.slots.begin(), base.slots.end());
    for (auto& n : subtree(seed, depth, trunk_slot)) out.push_back(std::move(n.newest));
    return out;
}

}  // namespace shadow_markov

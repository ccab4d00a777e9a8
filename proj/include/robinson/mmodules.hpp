#ifndef ROBINSON_MMODULES_HPP
#define ROBINSON_MMODULES_HPP

#include <algorithm>
#include <set>
#include <string>

#include "robinson/refinement.hpp"
#include "robinson/space.hpp"

namespace robinson {

/// Definition check: every point outside M is equidistant to all of M.
inline bool is_mmodule(const DissimilaritySpace& space, const std::vector<PointId>& m) {
    if (m.size() < 2) return true;
    std::vector<bool> inside(static_cast<std::size_t>(space.size()), false);
    for (PointId x : m) inside[static_cast<std::size_t>(x)] = true;
    for (PointId z = 0; z < space.size(); ++z) {
        if (inside[static_cast<std::size_t>(z)]) continue;
        const Value ref = space(z, m.front());
        for (PointId x : m)
            if (space(z, x) != ref) return false;
    }
    return true;
}

/// The interval between u and v: all points whose distances to u and v differ.
/// Contains u and v themselves whenever d(u,v) > 0.
inline std::vector<PointId> interval(const DissimilaritySpace& space, PointId u, PointId v) {
    if (u == v) throw Error("interval requires two distinct points");
    std::vector<PointId> out;
    for (PointId x = 0; x < space.size(); ++x)
        if (space(x, u) != space(x, v)) out.push_back(x);
    return out;
}

/// Smallest mmodule containing A, computed by iterated interval closure.
inline std::vector<PointId> mconv(const DissimilaritySpace& space,
                                  const std::vector<PointId>& a) {
    if (a.empty()) throw EmptySubsetError();
    std::vector<bool> inside(static_cast<std::size_t>(space.size()), false);
    std::vector<PointId> queue = a;
    std::vector<PointId> members;
    for (PointId x : queue)
        if (!inside[static_cast<std::size_t>(x)]) {
            inside[static_cast<std::size_t>(x)] = true;
            members.push_back(x);
        }
    // Worklist of fresh members; every new point is paired with all current ones.
    for (std::size_t head = 0; head < members.size(); ++head) {
        const PointId u = members[head];
        for (std::size_t i = 0; i < head; ++i) {
            for (PointId x : interval(space, u, members[i])) {
                if (!inside[static_cast<std::size_t>(x)]) {
                    inside[static_cast<std::size_t>(x)] = true;
                    members.push_back(x);
                }
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

/// Coarsest stable refinement of the initial partition: every class ends up
/// indistinguishable from each point outside it. Diagnostic variant of the
/// classical partition-refinement scheme; the recognizer itself uses
/// recursive_refine instead.
inline std::vector<std::vector<PointId>> stable_partition(
    const DissimilaritySpace& space, const std::vector<std::vector<PointId>>& initial) {
    std::vector<std::vector<PointId>> result;

    struct Task {
        std::vector<PointId> block;
        std::vector<PointId> pending;  // outside points still to process
    };
    std::vector<Task> work;
    for (std::size_t i = 0; i < initial.size(); ++i) {
        std::vector<PointId> outside;
        for (std::size_t j = 0; j < initial.size(); ++j)
            if (j != i) outside.insert(outside.end(), initial[j].begin(), initial[j].end());
        work.push_back({initial[i], std::move(outside)});
    }
    while (!work.empty()) {
        Task task = std::move(work.back());
        work.pop_back();
        if (task.pending.empty() || task.block.size() <= 1) {
            result.push_back(std::move(task.block));
            continue;
        }
        const PointId q = task.pending.front();
        task.pending.erase(task.pending.begin());
        OrderedPartition parts = refine(space, q, task.block);
        if (parts.size() == 1) {
            work.push_back(std::move(task));
            continue;
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            std::vector<PointId> pending = task.pending;
            for (std::size_t j = 0; j < parts.size(); ++j)
                if (j != i) pending.insert(pending.end(), parts[j].begin(), parts[j].end());
            work.push_back({std::move(parts[i]), std::move(pending)});
        }
    }
    for (auto& block : result) std::sort(block.begin(), block.end());
    std::sort(result.begin(), result.end());
    return result;
}

/// The inclusion-maximal mmodules different from X. They form either a
/// partition or a copartition of X. Computed from the copoint partitions of
/// all points (every maximal mmodule avoids some point), O(n^3).
struct MaximalMModules {
    enum class Structure { Partition, Copartition };
    std::vector<std::vector<PointId>> families;  // members sorted, families sorted
    Structure structure;
};

inline MaximalMModules maximal_mmodules(const DissimilaritySpace& space) {
    if (space.size() < 2) throw Error("maximal_mmodules requires at least 2 points");
    std::set<std::vector<PointId>> candidates;
    for (PointId p = 0; p < space.size(); ++p)
        for (const auto& block : copoint_partition(space, p).copoints)
            candidates.insert(block);
    std::vector<std::vector<PointId>> maximal;
    for (const auto& c : candidates) {
        bool dominated = false;
        for (const auto& other : candidates) {
            if (other.size() <= c.size() || other == c) continue;
            if (std::includes(other.begin(), other.end(), c.begin(), c.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal.push_back(c);
    }
    std::sort(maximal.begin(), maximal.end());
    std::size_t total = 0;
    for (const auto& m : maximal) total += m.size();
    // Maximal mmodules cover X; they are pairwise disjoint exactly when the
    // sizes add up to n.
    const auto structure = total == static_cast<std::size_t>(space.size())
                               ? MaximalMModules::Structure::Partition
                               : MaximalMModules::Structure::Copartition;
    return {std::move(maximal), structure};
}

/// Tree representation of the full mmodule family: leaves are points, inner
/// nodes carry a Union label (children = maximal mmodules, a partition) or an
/// Intersection label (children = complements of maximal mmodules, a
/// copartition).
struct MModuleTree {
    enum class Label { Leaf, Union, Intersection };
    Label label = Label::Leaf;
    PointId point = -1;  // for leaves
    std::vector<MModuleTree> children;

    std::vector<PointId> leaves() const {
        std::vector<PointId> out;
        collect_leaves(out);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void collect_leaves(std::vector<PointId>& out) const {
        if (label == Label::Leaf) {
            out.push_back(point);
            return;
        }
        for (const auto& c : children) c.collect_leaves(out);
    }
};

namespace detail {

inline MModuleTree mmodule_tree_rec(const DissimilaritySpace& space,
                                    const std::vector<PointId>& members) {
    if (members.size() == 1) return MModuleTree{MModuleTree::Label::Leaf, members.front(), {}};
    auto restricted = restrict_space(space, members);
    auto maximal = maximal_mmodules(restricted.space);
    MModuleTree node;
    std::vector<std::vector<PointId>> child_sets;
    if (maximal.structure == MaximalMModules::Structure::Partition) {
        node.label = MModuleTree::Label::Union;
        child_sets = std::move(maximal.families);
    } else {
        node.label = MModuleTree::Label::Intersection;
        for (const auto& m : maximal.families) {
            std::vector<bool> inside(members.size(), false);
            for (PointId x : m) inside[static_cast<std::size_t>(x)] = true;
            std::vector<PointId> complement;
            for (PointId x = 0; x < restricted.space.size(); ++x)
                if (!inside[static_cast<std::size_t>(x)]) complement.push_back(x);
            child_sets.push_back(std::move(complement));
        }
    }
    for (auto& local : child_sets) {
        for (PointId& x : local) x = restricted.original[static_cast<std::size_t>(x)];
        std::sort(local.begin(), local.end());
        node.children.push_back(mmodule_tree_rec(space, local));
    }
    std::sort(node.children.begin(), node.children.end(),
              [](const MModuleTree& a, const MModuleTree& b) {
                  return a.leaves().front() < b.leaves().front();
              });
    return node;
}

}  // namespace detail

inline MModuleTree mmodule_tree(const DissimilaritySpace& space) {
    if (space.size() == 0) throw Error("mmodule_tree requires at least 1 point");
    return detail::mmodule_tree_rec(space, space.points());
}

/// Nested parenthesized text with U/I labels and 1-based leaf ids, children
/// ordered by smallest leaf: e.g. "(U 7 (I 11 13 14) ...)".
inline std::string serialize(const MModuleTree& tree) {
    if (tree.label == MModuleTree::Label::Leaf) return std::to_string(tree.point + 1);
    std::string out = tree.label == MModuleTree::Label::Union ? "(U" : "(I";
    for (const auto& c : tree.children) {
        out += ' ';
        out += serialize(c);
    }
    out += ')';
    return out;
}

/// Expands the family represented by the tree: the leaf set of every node,
/// plus, under every Intersection node, the union of each proper subset of
/// its children. The empty set is always included. Guarded to n <= 20.
inline std::set<std::vector<PointId>> tree_family(const MModuleTree& tree, int n) {
    if (n > 20) throw TooLargeError("tree_family limited to 20 points");
    std::set<std::vector<PointId>> family;
    family.insert({});
    auto visit = [&](auto&& self, const MModuleTree& node) -> std::vector<PointId> {
        if (node.label == MModuleTree::Label::Leaf) {
            family.insert({node.point});
            return {node.point};
        }
        std::vector<std::vector<PointId>> child_leaves;
        for (const auto& c : node.children) child_leaves.push_back(self(self, c));
        std::vector<PointId> all;
        for (const auto& l : child_leaves) all.insert(all.end(), l.begin(), l.end());
        std::sort(all.begin(), all.end());
        family.insert(all);
        if (node.label == MModuleTree::Label::Intersection) {
            const std::size_t c = child_leaves.size();
            for (std::uint64_t mask = 1; mask + 1 < (1ULL << c); ++mask) {
                std::vector<PointId> u;
                for (std::size_t i = 0; i < c; ++i)
                    if (mask & (1ULL << i))
                        u.insert(u.end(), child_leaves[i].begin(), child_leaves[i].end());
                std::sort(u.begin(), u.end());
                family.insert(std::move(u));
            }
        }
        return all;
    };
    visit(visit, tree);
    return family;
}

}  // namespace robinson

#endif

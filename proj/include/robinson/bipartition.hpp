#ifndef ROBINSON_BIPARTITION_HPP
#define ROBINSON_BIPARTITION_HPP

#include <algorithm>
#include <functional>
#include <numeric>

#include "robinson/space.hpp"

namespace robinson {

enum class Side { Left, Right };

/// Invoked once per tangled component, when the side of its maximal point is
/// a free choice. The default keeps every such point on the right, which
/// makes the output deterministic; the 2^s enumeration in the tests flips
/// subsets of these choices.
using SideChooser = std::function<Side(PointId)>;

inline Side choose_right(PointId) { return Side::Right; }

struct BipartitionStats {
    long long steps = 0;
    long long arbitrary_choices = 0;
};

/// Reconstructs a compatible order from a p-proximity order: assigns every
/// point a side relative to p via exact distance comparisons against pivots,
/// then returns reverse(L) ++ [p] ++ R. Lists are kept in decreasing
/// proximity order internally so that every list operation is an append.
inline Ordering sort_by_bipartition(const DissimilaritySpace& space, PointId p,
                                    const std::vector<PointId>& proximity_sorted,
                                    const SideChooser& choose = choose_right,
                                    BipartitionStats* stats = nullptr) {
    std::vector<PointId> undecided(proximity_sorted.rbegin(), proximity_sorted.rend());
    std::vector<PointId> left_rev, right_rev, skipped_rev;
    std::vector<bool> on_left(static_cast<std::size_t>(space.size()), false);
    auto count = [&stats](long long k) {
        if (stats) stats->steps += k;
    };

    for (auto qit = proximity_sorted.rbegin(); qit != proximity_sorted.rend(); ++qit) {
        const PointId q = *qit;
        count(1);
        if (!undecided.empty() && undecided.front() == q) {
            // q heads a new tangled component; its side is a free choice.
            undecided.erase(undecided.begin());
            const Side side = choose(q);
            if (stats) ++stats->arbitrary_choices;
            on_left[static_cast<std::size_t>(q)] = side == Side::Left;
            (side == Side::Left ? left_rev : right_rev).push_back(q);
        }
        const Value dpq = space(p, q);
        const bool q_left = on_left[static_cast<std::size_t>(q)];
        skipped_rev.clear();
        for (PointId x : undecided) {
            count(1);
            const Value dxq = space(x, q);
            if (dxq == dpq) {
                skipped_rev.push_back(x);
                continue;
            }
            // Nearer than p to q: same side as q; farther: opposite side.
            // Everything skipped so far goes to the side opposite to x.
            const bool x_left = (dxq < dpq) == q_left;
            on_left[static_cast<std::size_t>(x)] = x_left;
            auto& mine = x_left ? left_rev : right_rev;
            auto& other = x_left ? right_rev : left_rev;
            mine.push_back(x);
            for (PointId y : skipped_rev) {
                on_left[static_cast<std::size_t>(y)] = !x_left;
                other.push_back(y);
            }
            count(static_cast<long long>(skipped_rev.size()));
            skipped_rev.clear();
        }
        undecided = std::move(skipped_rev);
        skipped_rev = {};
    }

    Ordering order;
    order.reserve(proximity_sorted.size() + 1);
    order.insert(order.end(), left_rev.begin(), left_rev.end());
    order.push_back(p);
    order.insert(order.end(), right_rev.rbegin(), right_rev.rend());

#ifdef ROBINSON_ENABLE_INTERNAL_CHECKS
    // Side-assignment consistency: u before v in proximity order with
    // d(u,v) < d(p,v) forces the same side, d(u,v) > d(p,v) opposite sides.
    std::vector<int> pos(static_cast<std::size_t>(space.size()), -1);
    for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    const int ppos = pos[static_cast<std::size_t>(p)];
    for (std::size_t i = 0; i < proximity_sorted.size(); ++i)
        for (std::size_t j = i + 1; j < proximity_sorted.size(); ++j) {
            const PointId u = proximity_sorted[i], v = proximity_sorted[j];
            const bool u_left = pos[static_cast<std::size_t>(u)] < ppos;
            const bool v_left = pos[static_cast<std::size_t>(v)] < ppos;
            if (space(u, v) < space(p, v) && u_left != v_left)
                throw Error("bipartition: same-side constraint violated");
            if (space(u, v) > space(p, v) && u_left == v_left)
                throw Error("bipartition: opposite-side constraint violated");
        }
#endif
    return order;
}

/// Tangled components of the side-assignment structure, ordered by their
/// maxima in the proximity order. Test-kit helper: materializes the graph G
/// (edges u before v with d(u,v) != d(p,v)) and glues components whose
/// proximity spans interleave; the production path never builds it.
struct TangledComponents {
    std::vector<std::vector<PointId>> components;  // members in proximity order
    std::vector<PointId> maxima;
};

inline TangledComponents tangled_components(const DissimilaritySpace& space, PointId p,
                                            const std::vector<PointId>& proximity_sorted) {
    const std::size_t k = proximity_sorted.size();
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };

    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (space(proximity_sorted[i], proximity_sorted[j]) !=
                space(p, proximity_sorted[j]))
                unite(static_cast<int>(i), static_cast<int>(j));

    // Glue G-components whose position spans intersect.
    std::vector<int> span_min(k, static_cast<int>(k)), span_max(k, -1);
    for (std::size_t i = 0; i < k; ++i) {
        const int r = find(static_cast<int>(i));
        span_min[static_cast<std::size_t>(r)] =
            std::min(span_min[static_cast<std::size_t>(r)], static_cast<int>(i));
        span_max[static_cast<std::size_t>(r)] =
            std::max(span_max[static_cast<std::size_t>(r)], static_cast<int>(i));
    }
    std::vector<int> roots;
    for (std::size_t i = 0; i < k; ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) roots.push_back(static_cast<int>(i));
    std::sort(roots.begin(), roots.end(), [&](int a, int b) {
        return span_min[static_cast<std::size_t>(a)] < span_min[static_cast<std::size_t>(b)];
    });
    for (std::size_t t = 1, active = 0; t < roots.size(); ++t) {
        if (span_min[static_cast<std::size_t>(roots[t])] <
            span_max[static_cast<std::size_t>(roots[active])])
            unite(roots[t], roots[active]);
        else
            active = t;
        span_max[static_cast<std::size_t>(roots[active])] =
            std::max(span_max[static_cast<std::size_t>(roots[active])],
                     span_max[static_cast<std::size_t>(roots[t])]);
    }

    TangledComponents out;
    std::vector<int> component_of(k, -1);
    for (std::size_t i = 0; i < k; ++i) {
        const int r = find(static_cast<int>(i));
        if (component_of[static_cast<std::size_t>(r)] < 0) {
            component_of[static_cast<std::size_t>(r)] = static_cast<int>(out.components.size());
            out.components.emplace_back();
        }
        out.components[static_cast<std::size_t>(component_of[static_cast<std::size_t>(r)])]
            .push_back(proximity_sorted[i]);
    }
    // Scanning positions ascending already yields components ordered by their
    // maxima: spans of distinct tangled components cannot interleave.
    for (auto& c : out.components) out.maxima.push_back(c.back());
    return out;
}

}  // namespace robinson

#endif

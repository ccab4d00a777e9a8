#ifndef ROBINSON_REFINEMENT_HPP
#define ROBINSON_REFINEMENT_HPP

#include <algorithm>
#include <map>

#include "robinson/space.hpp"

namespace robinson {

/// Elementary-step counters used by the complexity tests and the bench tool.
struct RefinementStats {
    long long refine_steps = 0;   // per-element work inside refine
    long long outside_steps = 0;  // work in recursive_refine outside refine calls
};

namespace detail {

/// Buckets of S by increasing distance to q, members in scan order. The
/// ordered map provides the O(|S| log m) bound of the refinement step.
inline OrderedPartition refine_buckets(const DissimilaritySpace& space, PointId q,
                                       const std::vector<PointId>& s,
                                       RefinementStats* stats) {
    std::map<Value, std::vector<PointId>> buckets;
    for (PointId x : s) buckets[space(q, x)].push_back(x);
    if (stats) stats->refine_steps += static_cast<long long>(s.size());
    OrderedPartition out;
    out.reserve(buckets.size());
    for (auto& [dist, members] : buckets) out.push_back(std::move(members));
#ifdef ROBINSON_ENABLE_INTERNAL_CHECKS
    for (std::size_t j = 0; j < out.size(); ++j) {
        for (PointId x : out[j])
            if (space(q, x) != space(q, out[j].front()))
                throw Error("refine: non-constant distance within a bucket");
        if (j && space(q, out[j].front()) <= space(q, out[j - 1].front()))
            throw Error("refine: bucket distances not strictly increasing");
    }
#endif
    return out;
}

struct RefineCtx {
    const DissimilaritySpace& space;
    PointId p;
    RefinementStats* stats;
    OrderedPartition result;

    void count(long long steps) {
        if (stats) stats->outside_steps += steps;
    }
};

/// Core of the copoint refinement. Pivots are consumed from the front of
/// `in`, then of `out`; a pivot that does not split S is simply dropped, so
/// the non-splitting case loops instead of recursing. On a split, each part
/// inherits the sibling parts as new pivots (earlier parts as in-pivots,
/// later parts as out-pivots) ahead of the remaining ones.
inline void recursive_refine_impl(RefineCtx& ctx, std::vector<PointId> in,
                                  std::vector<PointId> s, std::vector<PointId> out) {
    std::size_t in_head = 0, out_head = 0;
    for (;;) {
        if (s.empty()) return;
        if (in_head == in.size() && out_head == out.size()) {
            ctx.count(static_cast<long long>(s.size()));
            ctx.result.push_back(std::move(s));
            return;
        }
        const bool from_in = in_head < in.size();
        const PointId q = from_in ? in[in_head++] : out[out_head++];
        OrderedPartition parts = refine_buckets(ctx.space, q, s, ctx.stats);
        ctx.count(1);
        if (parts.size() == 1) {
            s = std::move(parts.front());
            continue;
        }
        if (!from_in) {
            // Out-pivots see the far end first: the parts not farther from q
            // than p is get their order flipped back.
            const Value dpq = ctx.space(ctx.p, q);
            std::size_t alpha = 0;
            while (alpha < parts.size() && ctx.space(q, parts[alpha].front()) <= dpq) ++alpha;
            std::reverse(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(alpha));
            ctx.count(static_cast<long long>(parts.size()));
        }
        const std::size_t m = parts.size();
        std::vector<std::vector<PointId>> child_in(m), child_out(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < i; ++j)
                child_in[i].insert(child_in[i].end(), parts[j].begin(), parts[j].end());
            child_in[i].insert(child_in[i].end(),
                               in.begin() + static_cast<std::ptrdiff_t>(in_head), in.end());
            for (std::size_t j = i + 1; j < m; ++j)
                child_out[i].insert(child_out[i].end(), parts[j].begin(), parts[j].end());
            child_out[i].insert(child_out[i].end(),
                                out.begin() + static_cast<std::ptrdiff_t>(out_head), out.end());
            ctx.count(static_cast<long long>(child_in[i].size() + child_out[i].size()));
        }
        in.clear();
        in.shrink_to_fit();
        out.clear();
        out.shrink_to_fit();
        for (std::size_t i = 0; i < m; ++i)
            recursive_refine_impl(ctx, std::move(child_in[i]), std::move(parts[i]),
                                  std::move(child_out[i]));
        return;
    }
}

}  // namespace detail

/// Ordered partition of S by increasing distance to the pivot q.
inline OrderedPartition refine(const DissimilaritySpace& space, PointId q,
                               const std::vector<PointId>& s,
                               RefinementStats* stats = nullptr) {
    for (PointId x : s)
        if (x == q) throw PivotInSetError(q);
    return detail::refine_buckets(space, q, s, stats);
}

/// Refines S into an ordered partition of mmodules using the elements of
/// `in` and `out` as pivots (in-pivots are closer to p than S, out-pivots
/// farther). With in = [p], out = [] this produces the copoint partition of
/// p sorted along a p-proximity pre-order.
inline OrderedPartition recursive_refine(const DissimilaritySpace& space, PointId p,
                                         const std::vector<PointId>& in,
                                         const std::vector<PointId>& s,
                                         const std::vector<PointId>& out,
                                         RefinementStats* stats = nullptr) {
    for (PointId x : s) {
        for (PointId q : in)
            if (x == q) throw PivotInSetError(q);
        for (PointId q : out)
            if (x == q) throw PivotInSetError(q);
    }
    detail::RefineCtx ctx{space, p, stats, {}};
    detail::recursive_refine_impl(ctx, in, s, out);
    return std::move(ctx.result);
}

/// The copoint partition of X at attaching point p: every block is a maximal
/// mmodule not containing p, and the block order is a p-proximity pre-order
/// whenever the space is Robinson. Block members are normalized ascending.
struct CopointDecomposition {
    PointId p;
    OrderedPartition copoints;
};

inline CopointDecomposition copoint_partition(const DissimilaritySpace& space, PointId p,
                                              RefinementStats* stats = nullptr) {
    if (p < 0 || p >= space.size()) throw Error("attaching point out of bounds");
    std::vector<PointId> rest;
    rest.reserve(static_cast<std::size_t>(space.size()) - 1);
    for (PointId x = 0; x < space.size(); ++x)
        if (x != p) rest.push_back(x);
    OrderedPartition blocks = recursive_refine(space, p, {p}, rest, {}, stats);
    for (auto& block : blocks) std::sort(block.begin(), block.end());
    return {p, std::move(blocks)};
}

}  // namespace robinson

#endif

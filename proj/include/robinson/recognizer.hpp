#ifndef ROBINSON_RECOGNIZER_HPP
#define ROBINSON_RECOGNIZER_HPP

#include <algorithm>
#include <optional>
#include <utility>

#include "robinson/bipartition.hpp"
#include "robinson/conical.hpp"
#include "robinson/refinement.hpp"

namespace robinson {

struct RecognizerStats {
    RefinementStats refinement;
    BipartitionStats bipartition;
    long long merge_steps = 0;

    long long total() const {
        return refinement.refine_steps + refinement.outside_steps + bipartition.steps +
               merge_steps;
    }
};

struct RecognizerOptions {
    SideChooser choose_side = choose_right;
    RecognizerStats* stats = nullptr;
};

/// The copoints of p with each separable copoint replaced by its two halves,
/// in proximity pre-order; the halves of one copoint are adjacent and linked
/// via pair_partner. Representatives realize the extended-quotient distances:
/// cross-copoint pairs read the copoint distance, halved pairs a diametral one.
struct ExtendedQuotientView {
    PointId p;
    std::vector<RepresentedBlock> blocks;

    std::vector<PointId> representatives() const {
        std::vector<PointId> reps;
        reps.reserve(blocks.size());
        for (const auto& b : blocks) reps.push_back(b.rep);
        return reps;
    }
};

namespace detail {

/// Orders the representatives around p and concatenates the blocks in that
/// order. When the two halves of a separated copoint come out mirrored
/// (right half before p), both halves are emitted reversed so the copoint's
/// induced order is the reverse of its compatible order.
inline Ordering assemble_around(const DissimilaritySpace& space, PointId p,
                                const std::vector<RepresentedBlock>& blocks,
                                const RecognizerOptions& opt) {
    std::vector<PointId> reps;
    reps.reserve(blocks.size());
    for (const auto& b : blocks) reps.push_back(b.rep);
    const Ordering rep_order =
        sort_by_bipartition(space, p, reps, opt.choose_side,
                            opt.stats ? &opt.stats->bipartition : nullptr);

    std::vector<int> slot_of(static_cast<std::size_t>(space.size()), -1);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        slot_of[static_cast<std::size_t>(blocks[i].rep)] = static_cast<int>(i);
    std::vector<int> pos_of(static_cast<std::size_t>(space.size()), -1);
    for (std::size_t i = 0; i < rep_order.size(); ++i)
        pos_of[static_cast<std::size_t>(rep_order[i])] = static_cast<int>(i);

    Ordering out;
    for (PointId r : rep_order) {
        if (r == p) {
            out.push_back(p);
            continue;
        }
        const RepresentedBlock& b = blocks[static_cast<std::size_t>(slot_of[static_cast<std::size_t>(r)])];
        bool mirrored = false;
        if (b.pair_partner >= 0) {
            const RepresentedBlock& first_half =
                blocks[static_cast<std::size_t>(std::min(slot_of[static_cast<std::size_t>(r)], b.pair_partner))];
            const RepresentedBlock& second_half =
                blocks[static_cast<std::size_t>(std::max(slot_of[static_cast<std::size_t>(r)], b.pair_partner))];
            mirrored = pos_of[static_cast<std::size_t>(second_half.rep)] <
                       pos_of[static_cast<std::size_t>(first_half.rep)];
        }
        if (mirrored)
            out.insert(out.end(), b.members.rbegin(), b.members.rend());
        else
            out.insert(out.end(), b.members.begin(), b.members.end());
    }
    if (opt.stats) opt.stats->merge_steps += static_cast<long long>(out.size());
    return out;
}

inline Ordering find_order_rec(const DissimilaritySpace& space, std::vector<PointId> members,
                               const RecognizerOptions& opt) {
    if (members.empty()) return {};
    if (members.size() == 1) return members;
    const PointId p = *std::min_element(members.begin(), members.end());
    std::vector<PointId> rest;
    rest.reserve(members.size() - 1);
    for (PointId x : members)
        if (x != p) rest.push_back(x);
    OrderedPartition copoints =
        recursive_refine(space, p, {p}, rest, {},
                         opt.stats ? &opt.stats->refinement : nullptr);

    std::vector<RepresentedBlock> blocks;
    blocks.reserve(copoints.size());
    for (auto& copoint : copoints) {
        Ordering sub = find_order_rec(space, std::move(copoint), opt);
        auto pieces = separate_if_separable(space, p, sub);
        if (pieces.size() == 2) {
            pieces[0].pair_partner = static_cast<int>(blocks.size()) + 1;
            pieces[1].pair_partner = static_cast<int>(blocks.size());
        }
        for (auto& piece : pieces) blocks.push_back(std::move(piece));
    }
    return assemble_around(space, p, blocks, opt);
}

}  // namespace detail

/// Computes a compatible order of the space via divide-and-conquer over
/// copoint partitions, in O(n^2) time. Total on all inputs, but the output
/// is a compatible order only when the space is Robinson; on other inputs it
/// either throws NoAdmissibleHoleError or returns an order that fails the
/// checker. The attaching point of every recursion level is the lowest point
/// id, so the output is deterministic.
inline Ordering find_compatible_order(const DissimilaritySpace& space,
                                      const RecognizerOptions& opt = {}) {
    return detail::find_order_rec(space, space.points(), opt);
}

struct RecognitionResult {
    bool robinson = false;
    Ordering order;           // meaningful when robinson
    std::string witness;      // meaningful when !robinson

    explicit operator bool() const { return robinson; }
};

/// find_compatible_order plus the O(n^2) verification pass; every failure
/// mode is folded into a NotRobinson verdict with a witness.
inline RecognitionResult recognize(const DissimilaritySpace& space,
                                   const RecognizerOptions& opt = {}) {
    RecognitionResult result;
    Ordering order;
    try {
        order = find_compatible_order(space, opt);
    } catch (const NoAdmissibleHoleError& e) {
        result.robinson = false;
        result.witness = e.what();
        return result;
    }
    if (auto violation = find_robinson_violation(space, order)) {
        result.robinson = false;
        result.witness = violation->describe(order);
        return result;
    }
    result.robinson = true;
    result.order = std::move(order);
    return result;
}

/// Quotient of the space by a copoint partition: one point per class, in the
/// order {p}, C_1, ..., C_k; cross-class distances are read off any pair
/// (well-defined because classes are mmodules).
inline DissimilaritySpace quotient_space(const DissimilaritySpace& space,
                                         const CopointDecomposition& decomposition) {
    std::vector<std::vector<PointId>> classes;
    classes.push_back({decomposition.p});
    for (const auto& c : decomposition.copoints) classes.push_back(c);
    const int k = static_cast<int>(classes.size());
    std::vector<std::vector<Value>> rows(static_cast<std::size_t>(k),
                                         std::vector<Value>(static_cast<std::size_t>(k), 0));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const Value v = space(classes[static_cast<std::size_t>(i)].front(),
                                  classes[static_cast<std::size_t>(j)].front());
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    return DissimilaritySpace::validate(rows);
}

/// Builds the extended quotient from already-separated copoint blocks, plus
/// its explicit distance matrix (point 0 is {p}, then the blocks in order).
/// Halved pairs get the diameter of their copoint as mutual distance.
struct ExtendedQuotient {
    ExtendedQuotientView view;
    DissimilaritySpace matrix;
};

inline ExtendedQuotient extended_quotient(const DissimilaritySpace& space, PointId p,
                                          const std::vector<RepresentedBlock>& blocks) {
    const int k = static_cast<int>(blocks.size()) + 1;
    std::vector<std::vector<Value>> rows(static_cast<std::size_t>(k),
                                         std::vector<Value>(static_cast<std::size_t>(k), 0));
    for (int i = 1; i < k; ++i) {
        const auto& bi = blocks[static_cast<std::size_t>(i - 1)];
        rows[0][static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i)][0] =
            space(p, bi.rep);
        for (int j = i + 1; j < k; ++j) {
            const auto& bj = blocks[static_cast<std::size_t>(j - 1)];
            Value v;
            if (bi.pair_partner == j - 1) {
                std::vector<PointId> whole(bi.members);
                whole.insert(whole.end(), bj.members.begin(), bj.members.end());
                v = diameter(space, whole);
            } else {
                v = space(bi.rep, bj.rep);
            }
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    }
    return {ExtendedQuotientView{p, blocks}, DissimilaritySpace::validate(rows)};
}

/// Separates every copoint of the decomposition using a recursively computed
/// compatible order (or a caller-supplied one) and returns the extended
/// quotient view. Convenience wrapper for tests and the CLI.
inline ExtendedQuotient extended_quotient(const DissimilaritySpace& space,
                                          const CopointDecomposition& decomposition,
                                          const std::vector<Ordering>& copoint_orders) {
    std::vector<RepresentedBlock> blocks;
    for (std::size_t i = 0; i < decomposition.copoints.size(); ++i) {
        auto pieces = separate_if_separable(space, decomposition.p, copoint_orders[i]);
        if (pieces.size() == 2) {
            pieces[0].pair_partner = static_cast<int>(blocks.size()) + 1;
            pieces[1].pair_partner = static_cast<int>(blocks.size());
        }
        for (auto& piece : pieces) blocks.push_back(std::move(piece));
    }
    return extended_quotient(space, decomposition.p, blocks);
}

/// Exposed merge step: orders represented blocks around p and concatenates
/// them. Used by the merge-correctness tests with oracle-found copoint orders.
inline Ordering assemble_order(const DissimilaritySpace& space, PointId p,
                               const std::vector<RepresentedBlock>& blocks,
                               const RecognizerOptions& opt = {}) {
    return detail::assemble_around(space, p, blocks, opt);
}

}  // namespace robinson

#endif

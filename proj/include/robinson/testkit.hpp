#ifndef ROBINSON_TESTKIT_HPP
#define ROBINSON_TESTKIT_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "robinson/mmodules.hpp"
#include "robinson/space.hpp"

namespace robinson::testkit {

/// SplitMix64. Chosen for cross-language reproducibility: the whole stream
/// is pinned by the algorithm below, so instances regenerate identically
/// from (kind, n, seed, params) anywhere.
///
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// Bounded draws use plain modulo: next_below(k) = next() % k.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

inline void shuffle_points(std::vector<PointId>& ids, SplitMix64& rng) {
    for (std::size_t i = ids.size(); i > 1; --i)
        std::swap(ids[i - 1], ids[rng.next_below(i)]);
}

/// Applies a seeded random symmetric permutation to rows/columns.
inline DissimilaritySpace shuffled(const DissimilaritySpace& space, std::uint64_t seed) {
    const int n = space.size();
    std::vector<PointId> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    SplitMix64 rng(seed);
    shuffle_points(perm, rng);
    std::vector<std::vector<Value>> rows(static_cast<std::size_t>(n),
                                         std::vector<Value>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                space(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    return DissimilaritySpace::validate(rows);
}

struct GeneratedInstance {
    DissimilaritySpace space;
    std::optional<Ordering> hidden_order;  // an order the instance is Robinson under
};

/// Toeplitz instance d(i,j) = t_|i-j| with t_0 = 0 and t nondecreasing over
/// {0..max_val}; Robinson under the identity, which is returned as the
/// hidden order.
inline GeneratedInstance gen_toeplitz(int n, Value max_val, std::uint64_t seed) {
    if (max_val < 1) throw Error("gen_toeplitz requires max_val >= 1");
    SplitMix64 rng(seed);
    std::vector<Value> t(static_cast<std::size_t>(std::max(n, 1)), 0);
    for (std::size_t k = 1; k < t.size(); ++k)
        t[k] = static_cast<Value>(rng.next_below(static_cast<std::uint64_t>(max_val) + 1));
    std::sort(t.begin() + 1, t.end());
    std::vector<std::vector<Value>> rows(static_cast<std::size_t>(n),
                                         std::vector<Value>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                t[static_cast<std::size_t>(std::abs(i - j))];
    GeneratedInstance out{DissimilaritySpace::validate(rows), Ordering{}};
    out.hidden_order->resize(static_cast<std::size_t>(n));
    std::iota(out.hidden_order->begin(), out.hidden_order->end(), 0);
    return out;
}

/// Ultrametric from a random binary hierarchy: d(x,y) is the size of the
/// smallest cluster containing both, so cluster heights grow toward the root.
inline DissimilaritySpace gen_ultrametric(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<PointId> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    shuffle_points(ids, rng);
    std::vector<std::vector<Value>> rows(static_cast<std::size_t>(n),
                                         std::vector<Value>(static_cast<std::size_t>(n), 0));
    auto build = [&](auto&& self, std::size_t lo, std::size_t hi) -> void {
        if (hi - lo <= 1) return;
        const std::size_t cut = lo + 1 + rng.next_below(hi - lo - 1);
        for (std::size_t i = lo; i < cut; ++i)
            for (std::size_t j = cut; j < hi; ++j) {
                const Value h = static_cast<Value>(hi - lo);
                rows[static_cast<std::size_t>(ids[i])][static_cast<std::size_t>(ids[j])] = h;
                rows[static_cast<std::size_t>(ids[j])][static_cast<std::size_t>(ids[i])] = h;
            }
        self(self, lo, cut);
        self(self, cut, hi);
    };
    build(build, 0, static_cast<std::size_t>(n));
    return DissimilaritySpace::validate(rows);
}

/// Line distance between n distinct random integer coordinates.
inline GeneratedInstance gen_line_distance(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::set<Value> coords;
    while (static_cast<int>(coords.size()) < n)
        coords.insert(static_cast<Value>(rng.next_below(10U * static_cast<unsigned>(n) + 10U)));
    std::vector<Value> x(coords.begin(), coords.end());
    std::vector<std::vector<Value>> rows(static_cast<std::size_t>(n),
                                         std::vector<Value>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                std::abs(x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)]);
    GeneratedInstance out{DissimilaritySpace::validate(rows), Ordering{}};
    out.hidden_order->resize(static_cast<std::size_t>(n));
    std::iota(out.hidden_order->begin(), out.hidden_order->end(), 0);
    return out;
}

/// General Robinson-property matrix under the identity order: adjacent
/// distances are random and every entry extends the max of its neighbors
/// toward the diagonal by a random increment.
inline GeneratedInstance gen_robinson(int n, Value max_step, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::vector<Value>> rows(static_cast<std::size_t>(n),
                                         std::vector<Value>(static_cast<std::size_t>(n), 0));
    for (int gap = 1; gap < n; ++gap)
        for (int i = 0; i + gap < n; ++i) {
            const int j = i + gap;
            Value base = 0;
            if (gap > 1)
                base = std::max(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)],
                                rows[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)]);
            const Value v =
                base + static_cast<Value>(rng.next_below(static_cast<std::uint64_t>(max_step) + 1));
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    GeneratedInstance out{DissimilaritySpace::validate(rows), Ordering{}};
    out.hidden_order->resize(static_cast<std::size_t>(n));
    std::iota(out.hidden_order->begin(), out.hidden_order->end(), 0);
    return out;
}

/// Rewrites `count` random off-diagonal entries (symmetrically) with random
/// values up to the current maximum + 1. The result is a valid dissimilarity
/// space that may or may not be Robinson.
inline DissimilaritySpace perturb(const DissimilaritySpace& space, std::uint64_t seed, int count) {
    const int n = space.size();
    if (n < 2 || count <= 0) return space;
    Value top = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) top = std::max(top, space(i, j));
    std::vector<std::vector<Value>> rows(static_cast<std::size_t>(n),
                                         std::vector<Value>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = space(i, j);
    SplitMix64 rng(seed);
    for (int k = 0; k < count; ++k) {
        const int i = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - 1)));
        if (j >= i) ++j;
        const Value v = static_cast<Value>(rng.next_below(static_cast<std::uint64_t>(top) + 2));
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    }
    return DissimilaritySpace::validate(rows);
}

enum class GeneratorKind { Toeplitz, Ultrametric, LineDistance, ShuffledRobinson, Perturbed };

/// Seeded instance description; equal specs regenerate byte-identical files.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::Toeplitz;
    int n = 0;
    std::uint64_t seed = 0;
    Value max_val = 2;      // Toeplitz coefficients / Robinson step bound
    bool shuffle = false;
    int perturb_count = 0;  // applied on top of the base instance
};

inline DissimilaritySpace generate(const GeneratorSpec& spec) {
    DissimilaritySpace space;
    switch (spec.kind) {
        case GeneratorKind::Toeplitz:
            space = gen_toeplitz(spec.n, spec.max_val, spec.seed).space;
            break;
        case GeneratorKind::Ultrametric:
            space = gen_ultrametric(spec.n, spec.seed);
            break;
        case GeneratorKind::LineDistance:
            space = gen_line_distance(spec.n, spec.seed).space;
            break;
        case GeneratorKind::ShuffledRobinson:
            space = shuffled(gen_robinson(spec.n, spec.max_val, spec.seed).space, spec.seed ^ 0x5DEECE66DULL);
            break;
        case GeneratorKind::Perturbed:
            space = gen_toeplitz(spec.n, spec.max_val, spec.seed).space;
            break;
    }
    if (spec.shuffle && spec.kind != GeneratorKind::ShuffledRobinson)
        space = shuffled(space, spec.seed ^ 0x5DEECE66DULL);
    const int count = spec.kind == GeneratorKind::Perturbed && spec.perturb_count == 0
                          ? 2
                          : spec.perturb_count;
    if (count > 0) space = perturb(space, spec.seed ^ 0xA5A5A5A5ULL, count);
    return space;
}

// --- brute-force oracles ----------------------------------------------------

/// O(n^3) triple check, the oracle-side counterpart of the O(n^2) checker.
inline bool passes_triple_check(const DissimilaritySpace& space, const Ordering& order) {
    const std::size_t n = order.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (space(order[i], order[k]) <
                    std::max(space(order[i], order[j]), space(order[j], order[k])))
                    return false;
    return true;
}

namespace detail {

/// DFS over prefixes in lexicographic candidate order with incremental
/// pruning; the first completed order is the lexicographically smallest
/// compatible one. `limit` stops the search after that many full orders.
inline bool extend_order(const DissimilaritySpace& space, Ordering& prefix,
                         std::vector<bool>& used, int& found, int limit,
                         Ordering* first) {
    const int n = space.size();
    if (static_cast<int>(prefix.size()) == n) {
        if (found == 0 && first) *first = prefix;
        ++found;
        return found >= limit;
    }
    for (PointId c = 0; c < n; ++c) {
        if (used[static_cast<std::size_t>(c)]) continue;
        bool ok = true;
        for (std::size_t i = 0; ok && i + 1 < prefix.size(); ++i) {
            if (space(prefix[i], c) < space(prefix[i + 1], c)) ok = false;
            if (ok && space(prefix[i], c) < space(prefix[i], prefix.back())) ok = false;
        }
        if (!ok) continue;
        prefix.push_back(c);
        used[static_cast<std::size_t>(c)] = true;
        if (extend_order(space, prefix, used, found, limit, first)) return true;
        prefix.pop_back();
        used[static_cast<std::size_t>(c)] = false;
    }
    return false;
}

}  // namespace detail

/// Lexicographically first compatible order, or nullopt when none exists.
/// Guarded to n <= 10.
inline std::optional<Ordering> brute_force_compatible_order(const DissimilaritySpace& space) {
    if (space.size() > 10) throw TooLargeError("brute_force_compatible_order limited to 10 points");
    Ordering prefix, first;
    std::vector<bool> used(static_cast<std::size_t>(space.size()), false);
    int found = 0;
    detail::extend_order(space, prefix, used, found, 1, &first);
    if (found == 0) return std::nullopt;
    return first;
}

/// Number of compatible orders, counting stops at `cap`. Guarded to n <= 10.
inline int count_compatible_orders(const DissimilaritySpace& space, int cap) {
    if (space.size() > 10) throw TooLargeError("count_compatible_orders limited to 10 points");
    Ordering prefix;
    std::vector<bool> used(static_cast<std::size_t>(space.size()), false);
    int found = 0;
    detail::extend_order(space, prefix, used, found, cap, nullptr);
    return found;
}

/// All mmodules of the space as sorted point lists. Full subset enumeration
/// up to n = 12; beyond that, the family is grown from the pairwise mconv
/// closures by uniting intersecting members, which reaches every mmodule
/// (an mmodule M is the union of mconv(u, v) over v in M for any fixed u).
/// Guarded by a family-size cap.
inline std::vector<std::vector<PointId>> enumerate_mmodules(const DissimilaritySpace& space) {
    const int n = space.size();
    if (n > 30) throw TooLargeError("enumerate_mmodules limited to 30 points");
    std::vector<std::uint64_t> family;
    auto mask_is_mmodule = [&](std::uint64_t mask) {
        std::vector<PointId> members;
        for (int i = 0; i < n; ++i)
            if (mask & (1ULL << i)) members.push_back(i);
        return is_mmodule(space, members);
    };
    if (n <= 12) {
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask)
            if (mask_is_mmodule(mask)) family.push_back(mask);
    } else {
        std::set<std::uint64_t> seen;
        seen.insert(0);
        seen.insert((1ULL << n) - 1);
        for (int i = 0; i < n; ++i) seen.insert(1ULL << i);
        std::vector<std::uint64_t> queue;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                std::uint64_t m = 0;
                for (PointId x : mconv(space, {u, v})) m |= 1ULL << x;
                if (seen.insert(m).second) queue.push_back(m);
            }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint64_t a = queue[head];
            std::vector<std::uint64_t> snapshot(seen.begin(), seen.end());
            for (std::uint64_t b : snapshot) {
                if ((a & b) == 0) continue;
                const std::uint64_t u = a | b;
                if (seen.count(u)) continue;
                if (!mask_is_mmodule(u)) continue;  // unions of crossing mmodules only
                seen.insert(u);
                queue.push_back(u);
                if (seen.size() > (1U << 20))
                    throw TooLargeError("enumerate_mmodules: family too large");
            }
        }
        family.assign(seen.begin(), seen.end());
    }
    std::vector<std::vector<PointId>> out;
    out.reserve(family.size());
    for (std::uint64_t mask : family) {
        std::vector<PointId> members;
        for (int i = 0; i < n; ++i)
            if (mask & (1ULL << i)) members.push_back(i);
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace robinson::testkit

#endif

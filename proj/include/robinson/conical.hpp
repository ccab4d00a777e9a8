#ifndef ROBINSON_CONICAL_HPP
#define ROBINSON_CONICAL_HPP

#include <algorithm>

#include "robinson/space.hpp"

namespace robinson {

/// Classification of a copoint C at attaching point p: its diameter against
/// delta = d(p, C). Only separable copoints are ever split.
enum class CopointClass { Separable, Tight, NonSeparable };

inline const char* to_string(CopointClass c) {
    switch (c) {
        case CopointClass::Separable: return "separable";
        case CopointClass::Tight: return "tight";
        case CopointClass::NonSeparable: return "non-separable";
    }
    return "?";
}

inline CopointClass classify_copoint(const DissimilaritySpace& space, PointId p,
                                     const std::vector<PointId>& copoint) {
    if (copoint.empty()) throw EmptySubsetError();
    const Value delta = space(p, copoint.front());
    for (PointId x : copoint)
        if (space(p, x) != delta)
            throw NotEquidistantError("copoint members are not equidistant from point " +
                                      std::to_string(p + 1) + "; not a copoint");
    const Value diam = diameter(space, copoint);
    if (diam > delta) return CopointClass::Separable;
    if (diam == delta) return CopointClass::Tight;
    return CopointClass::NonSeparable;
}

/// A block of points sorted in a compatible order together with one of its
/// extreme points as representative. `pair_partner` links the two halves of
/// a separated copoint (index into the owning sequence, -1 otherwise).
struct RepresentedBlock {
    PointId rep;
    std::vector<PointId> members;
    int pair_partner = -1;
};

/// Splits a copoint (given in a compatible order of its subspace) at an
/// admissible hole for the apex p, or keeps it whole when the wrap hole is
/// admissible. Single left-to-right scan, O(|copoint|).
inline std::vector<RepresentedBlock> separate_if_separable(const DissimilaritySpace& space,
                                                           PointId p,
                                                           const std::vector<PointId>& sorted) {
    if (sorted.empty()) throw EmptySubsetError();
    const PointId lo = sorted.front();
    const PointId hi = sorted.back();
    const Value delta = space(p, lo);
    if (space(lo, hi) <= delta) return {RepresentedBlock{lo, sorted, -1}};
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        const PointId y = sorted[i];
        const PointId z = sorted[i + 1];
        if (space(lo, y) <= delta && space(z, hi) <= delta && space(y, z) >= delta) {
            std::vector<PointId> left(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(i + 1));
            std::vector<PointId> right(sorted.begin() + static_cast<std::ptrdiff_t>(i + 1), sorted.end());
            return {RepresentedBlock{lo, std::move(left), -1},
                    RepresentedBlock{hi, std::move(right), -1}};
        }
    }
    throw NoAdmissibleHoleError(p, sorted);
}

/// All admissible holes of the sorted copoint: internal hole i sits between
/// sorted[i] and sorted[i+1]. Test-kit helper; the recognizer only ever takes
/// the first qualifying hole.
struct AdmissibleHoles {
    std::vector<std::size_t> internal;
    bool wrap = false;
};

inline AdmissibleHoles admissible_holes(const DissimilaritySpace& space, PointId p,
                                        const std::vector<PointId>& sorted) {
    if (sorted.empty()) throw EmptySubsetError();
    const Value delta = space(p, sorted.front());
    AdmissibleHoles holes;
    holes.wrap = space(sorted.front(), sorted.back()) <= delta;
    for (std::size_t h = 0; h + 1 < sorted.size(); ++h) {
        bool ok = true;
        for (std::size_t i = 0; ok && i < sorted.size(); ++i)
            for (std::size_t j = i + 1; ok && j < sorted.size(); ++j) {
                const Value dij = space(sorted[i], sorted[j]);
                if (i <= h && j > h) ok = dij >= delta;  // straddles the hole
                else ok = dij <= delta;                  // same side of the hole
            }
        if (ok) holes.internal.push_back(h);
    }
    return holes;
}

}  // namespace robinson

#endif

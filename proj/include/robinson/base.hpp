#ifndef ROBINSON_BASE_HPP
#define ROBINSON_BASE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace robinson {

/// Exact nonnegative scalar. Decimal input is parsed into a scaled integer
/// (see parse_value), so every comparison in the library is exact; there is
/// no tolerance mode anywhere.
using Value = std::int64_t;

/// Index of a point, 0-based within its space.
using PointId = int;

using Ordering = std::vector<PointId>;
using OrderedPartition = std::vector<std::vector<PointId>>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input matrix violates a dissimilarity-space invariant. Cells in the
/// message are 1-based, matching the point ids printed by the CLI.
struct ValidationError : Error {
    enum class Kind { NotSquare, Asymmetric, NonzeroDiagonal, NegativeEntry };
    Kind kind;
    int row = -1, col = -1;
    ValidationError(Kind k, int r, int c, const std::string& msg)
        : Error(msg), kind(k), row(r), col(c) {}
};

/// Malformed matrix text (bad token, wrong counts, precision overflow).
struct ParseError : Error {
    using Error::Error;
};

struct EmptySubsetError : Error {
    EmptySubsetError() : Error("diameter: empty subset") {}
};

struct PivotInSetError : Error {
    explicit PivotInSetError(PointId q)
        : Error("refine: pivot " + std::to_string(q + 1) + " is a member of S") {}
};

struct NotEquidistantError : Error {
    using Error::Error;
};

/// The admissible-hole scan exhausted a copoint without a qualifying hole.
/// Only reachable on non-Robinson inputs; the recognizer folds it into a
/// NotRobinson verdict.
struct NoAdmissibleHoleError : Error {
    PointId apex;
    std::vector<PointId> copoint;
    NoAdmissibleHoleError(PointId p, std::vector<PointId> block)
        : Error("no admissible hole in copoint attached at point " + std::to_string(p + 1)),
          apex(p), copoint(std::move(block)) {}
};

struct TooLargeError : Error {
    using Error::Error;
};

}  // namespace robinson

#endif

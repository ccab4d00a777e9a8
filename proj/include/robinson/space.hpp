#ifndef ROBINSON_SPACE_HPP
#define ROBINSON_SPACE_HPP

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "robinson/base.hpp"
#include "robinson/value.hpp"

namespace robinson {

/// A finite dissimilarity space: n points and a dense symmetric matrix with
/// zero diagonal and nonnegative entries. Immutable after construction; every
/// operation in the library is a pure function over it.
class DissimilaritySpace {
public:
    DissimilaritySpace() = default;

    /// Checks all invariants and builds the space. Errors name the first
    /// offending cell (1-based in messages).
    static DissimilaritySpace validate(const std::vector<std::vector<Value>>& raw) {
        const int n = static_cast<int>(raw.size());
        for (int i = 0; i < n; ++i)
            if (static_cast<int>(raw[i].size()) != n)
                throw ValidationError(ValidationError::Kind::NotSquare, i, -1,
                                      "row " + std::to_string(i + 1) + " has " +
                                          std::to_string(raw[i].size()) + " entries, expected " +
                                          std::to_string(n));
        DissimilaritySpace s;
        s.n_ = n;
        s.cells_.assign(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) {
            if (raw[i][i] != 0)
                throw ValidationError(ValidationError::Kind::NonzeroDiagonal, i, i,
                                      "nonzero diagonal at (" + std::to_string(i + 1) + "," +
                                          std::to_string(i + 1) + ")");
            for (int j = 0; j < n; ++j) {
                if (raw[i][j] < 0)
                    throw ValidationError(ValidationError::Kind::NegativeEntry, i, j,
                                          "negative entry at (" + std::to_string(i + 1) + "," +
                                              std::to_string(j + 1) + ")");
                if (j > i && raw[i][j] != raw[j][i])
                    throw ValidationError(ValidationError::Kind::Asymmetric, i, j,
                                          "asymmetric entries at (" + std::to_string(i + 1) + "," +
                                              std::to_string(j + 1) + ")");
                s.cells_[static_cast<std::size_t>(i) * n + j] = raw[i][j];
            }
        }
        return s;
    }

    int size() const { return n_; }

    Value operator()(PointId i, PointId j) const {
        return cells_[static_cast<std::size_t>(i) * n_ + j];
    }

    std::vector<PointId> points() const {
        std::vector<PointId> ids(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) ids[static_cast<std::size_t>(i)] = i;
        return ids;
    }

    bool operator==(const DissimilaritySpace& other) const {
        return n_ == other.n_ && cells_ == other.cells_;
    }

private:
    int n_ = 0;
    std::vector<Value> cells_;
};

/// A subset of a parent space's points; members must be distinct and in bounds.
struct SubsetView {
    std::vector<PointId> members;
};

inline void check_subset(const DissimilaritySpace& space, const std::vector<PointId>& members) {
    std::vector<bool> seen(static_cast<std::size_t>(space.size()), false);
    for (PointId m : members) {
        if (m < 0 || m >= space.size())
            throw Error("subset member " + std::to_string(m) + " out of bounds");
        if (seen[static_cast<std::size_t>(m)])
            throw Error("duplicate subset member " + std::to_string(m + 1));
        seen[static_cast<std::size_t>(m)] = true;
    }
}

/// Restriction of a space to a subset; `original[i]` maps local point i back
/// to its parent id.
struct RestrictedSpace {
    DissimilaritySpace space;
    std::vector<PointId> original;
};

inline RestrictedSpace restrict_space(const DissimilaritySpace& space,
                                      const std::vector<PointId>& members) {
    check_subset(space, members);
    const int k = static_cast<int>(members.size());
    std::vector<std::vector<Value>> rows(static_cast<std::size_t>(k),
                                         std::vector<Value>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                space(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]);
    return {DissimilaritySpace::validate(rows), members};
}

inline Value diameter(const DissimilaritySpace& space, const std::vector<PointId>& subset) {
    if (subset.empty()) throw EmptySubsetError();
    check_subset(space, subset);
    Value best = 0;
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            best = std::max(best, space(subset[i], subset[j]));
    return best;
}

inline bool is_permutation_of_space(const DissimilaritySpace& space, const Ordering& order) {
    if (static_cast<int>(order.size()) != space.size()) return false;
    std::vector<bool> seen(order.size(), false);
    for (PointId p : order) {
        if (p < 0 || p >= space.size() || seen[static_cast<std::size_t>(p)]) return false;
        seen[static_cast<std::size_t>(p)] = true;
    }
    return true;
}

/// First place where the permuted matrix fails the Robinson property. The
/// offending entries are d(order[row], order[near]) and d(order[row], order[far]):
/// the entry farther from the diagonal is smaller.
struct RobinsonViolation {
    int row;
    int near;
    int far;

    std::string describe(const Ordering& order) const {
        std::ostringstream out;
        out << "row of point " << order[static_cast<std::size_t>(row)] + 1 << ": d(.,"
            << order[static_cast<std::size_t>(near)] + 1 << ") > d(.,"
            << order[static_cast<std::size_t>(far)] + 1 << ")";
        return out.str();
    }
};

/// O(n^2) compatibility check: along every row of the permuted matrix the
/// entries must be nondecreasing moving away from the diagonal in both
/// directions (equivalent to the triple condition by transitivity; the
/// leftward scan of a row covers the column condition by symmetry).
inline std::optional<RobinsonViolation> find_robinson_violation(const DissimilaritySpace& space,
                                                                const Ordering& order) {
    const int n = static_cast<int>(order.size());
    for (int r = 0; r < n; ++r) {
        for (int j = r + 2; j < n; ++j)
            if (space(order[static_cast<std::size_t>(r)], order[static_cast<std::size_t>(j - 1)]) >
                space(order[static_cast<std::size_t>(r)], order[static_cast<std::size_t>(j)]))
                return RobinsonViolation{r, j - 1, j};
        for (int j = r - 2; j >= 0; --j)
            if (space(order[static_cast<std::size_t>(r)], order[static_cast<std::size_t>(j + 1)]) >
                space(order[static_cast<std::size_t>(r)], order[static_cast<std::size_t>(j)]))
                return RobinsonViolation{r, j + 1, j};
    }
    return std::nullopt;
}

inline bool is_robinson_order(const DissimilaritySpace& space, const Ordering& order) {
    if (!is_permutation_of_space(space, order))
        throw Error("order is not a permutation of the space's points");
    return !find_robinson_violation(space, order).has_value();
}

// --- matrix text format ---------------------------------------------------
// Line 1 holds n; each of the next n lines holds n whitespace-separated
// decimal values. Lines starting with '#' are ignored.

inline DissimilaritySpace parse_matrix(std::istream& in, int precision = kDefaultPrecision) {
    auto next_line = [&in](std::string& line) {
        while (std::getline(in, line)) {
            std::size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            if (line[first] == '#') continue;
            return true;
        }
        return false;
    };
    std::string line;
    if (!next_line(line)) throw ParseError("empty input");
    std::istringstream head(line);
    long long n = -1;
    if (!(head >> n) || n < 0) throw ParseError("expected point count on first line");
    std::string extra;
    if (head >> extra) throw ParseError("unexpected token after point count: '" + extra + "'");

    std::vector<std::vector<Value>> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
        if (!next_line(line))
            throw ParseError("expected " + std::to_string(n) + " matrix rows, got " +
                             std::to_string(i));
        std::istringstream row(line);
        std::vector<Value> values;
        values.reserve(static_cast<std::size_t>(n));
        std::string token;
        while (row >> token) values.push_back(parse_value(token, precision));
        if (static_cast<long long>(values.size()) != n)
            throw ParseError("row " + std::to_string(i + 1) + " has " +
                             std::to_string(values.size()) + " entries, expected " +
                             std::to_string(n));
        rows.push_back(std::move(values));
    }
    return DissimilaritySpace::validate(rows);
}

inline DissimilaritySpace parse_matrix(const std::string& text, int precision = kDefaultPrecision) {
    std::istringstream in(text);
    return parse_matrix(in, precision);
}

inline void write_matrix(std::ostream& out, const DissimilaritySpace& space,
                         int precision = kDefaultPrecision) {
    out << space.size() << "\n";
    for (int i = 0; i < space.size(); ++i) {
        for (int j = 0; j < space.size(); ++j) {
            if (j) out << ' ';
            out << format_value(space(i, j), precision);
        }
        out << "\n";
    }
}

inline std::string write_matrix(const DissimilaritySpace& space, int precision = kDefaultPrecision) {
    std::ostringstream out;
    write_matrix(out, space, precision);
    return out.str();
}

}  // namespace robinson

#endif

// The 19-point running-example space shared by the test suites, together
// with its reference compatible order and derived matrices.
#ifndef ROBINSON_TESTS_RUNNING_EXAMPLE_HPP
#define ROBINSON_TESTS_RUNNING_EXAMPLE_HPP

#include <vector>

#include "robinson/space.hpp"

namespace testdata {

// Upper triangle, row i holding d(i, i+1..19) with 1-based labels.
inline robinson::DissimilaritySpace example19() {
    using robinson::Value;
    static const std::vector<std::vector<Value>> upper = {
        {10, 9, 9, 10, 8, 9, 9, 4, 8, 9, 10, 9, 9, 10, 9, 4, 9, 10},
        {8, 8, 2, 10, 11, 8, 10, 10, 5, 2, 5, 5, 1, 8, 10, 8, 2},
        {1, 8, 9, 9, 2, 9, 9, 6, 8, 6, 6, 8, 2, 9, 2, 8},
        {8, 9, 9, 2, 9, 9, 6, 8, 6, 6, 8, 3, 9, 2, 8},
        {10, 11, 8, 10, 10, 5, 3, 5, 5, 2, 8, 10, 8, 1},
        {9, 9, 9, 7, 9, 10, 9, 9, 10, 9, 8, 9, 10},
        {9, 9, 9, 9, 11, 9, 9, 11, 9, 9, 9, 11},
        {9, 9, 6, 8, 6, 6, 8, 2, 9, 2, 8},
        {8, 9, 10, 9, 9, 10, 9, 6, 9, 10},
        {9, 10, 9, 9, 10, 9, 7, 9, 10},
        {5, 1, 1, 5, 6, 9, 6, 5},
        {5, 5, 2, 8, 10, 8, 4},
        {1, 5, 6, 9, 6, 5},
        {5, 6, 9, 6, 5},
        {8, 10, 8, 2},
        {9, 2, 8},
        {9, 10},
        {8},
    };
    const int n = 19;
    std::vector<std::vector<Value>> rows(n, std::vector<Value>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Value v = upper[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - i - 1)];
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    return robinson::DissimilaritySpace::validate(rows);
}

// Reference compatible order (1-based: 19 5 15 2 12 13 14 11 4 3 18 8 16 9 1 17 10 6 7).
inline robinson::Ordering reference_order19() {
    robinson::Ordering order = {19, 5, 15, 2, 12, 13, 14, 11, 4, 3, 18, 8, 16, 9, 1, 17, 10, 6, 7};
    for (auto& p : order) --p;
    return order;
}

inline std::vector<robinson::PointId> ids(std::initializer_list<int> one_based) {
    std::vector<robinson::PointId> out;
    for (int v : one_based) out.push_back(v - 1);
    return out;
}

// Quotient of the example at point 1 with classes ordered
// {1},{9},{17},{6},{10},{3,4,8,16,18},{7},{11,13,14},{2,5,12,15,19}.
inline robinson::DissimilaritySpace quotient_at_1() {
    using robinson::Value;
    static const std::vector<std::vector<Value>> upper = {
        {4, 4, 8, 8, 9, 9, 9, 10},
        {6, 9, 8, 9, 9, 9, 10},
        {8, 7, 9, 9, 9, 10},
        {7, 9, 9, 9, 10},
        {9, 9, 9, 10},
        {9, 6, 8},
        {9, 11},
        {5},
    };
    const int n = 9;
    std::vector<std::vector<Value>> rows(n, std::vector<Value>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Value v = upper[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - i - 1)];
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    return robinson::DissimilaritySpace::validate(rows);
}

}  // namespace testdata

#endif

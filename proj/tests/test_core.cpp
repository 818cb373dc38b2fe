#include <gtest/gtest.h>

#include "heffter/core.hpp"

using namespace heffter;

TEST(Residue, WrapsNegativeValues) {
    EXPECT_EQ(residue(-1, 19), 18);
    EXPECT_EQ(residue(38, 19), 0);
    EXPECT_EQ(wrap(-3, 9), 6);
}

TEST(SparseSquareArray, RejectsZeroEntriesAndBadSide) {
    EXPECT_THROW(SparseSquareArray(0), ParameterError);
    SparseSquareArray a(3);
    EXPECT_THROW(a.set({0, 0}, 0), ParameterError);
    EXPECT_THROW(a.set({0, 0}, kMaxEntryMagnitude + 1), ParameterError);
}

TEST(SparseSquareArray, IndicesReduceModN) {
    SparseSquareArray a(5);
    a.set({-1, 7}, 4);
    EXPECT_EQ(a.at({4, 2}), 4);
    EXPECT_FALSE(a.try_insert({4, 2}, 9));
    EXPECT_EQ(a.value({4, 2}), 4);
    EXPECT_THROW(a.value({0, 0}), ParameterError);
    EXPECT_EQ(a.value_or_zero({0, 0}), 0);
}

TEST(SparseSquareArray, LineCellsAreOrdered) {
    SparseSquareArray a(4);
    a.set({2, 3}, 1);
    a.set({2, 0}, 2);
    a.set({0, 3}, 3);
    EXPECT_EQ(a.row_cells(2), (std::vector<Cell>{{2, 0}, {2, 3}}));
    EXPECT_EQ(a.col_cells(3), (std::vector<Cell>{{0, 3}, {2, 3}}));
    EXPECT_TRUE(a.row_cells(1).empty());
}

TEST(SparseSquareArray, TransposeAndNegate) {
    SparseSquareArray a(3);
    a.set({0, 1}, 5);
    a.set({2, 0}, -2);
    auto t = a.transposed();
    EXPECT_EQ(t.at({1, 0}), 5);
    EXPECT_EQ(t.at({0, 2}), -2);
    EXPECT_EQ(t.transposed(), a);
    auto m = a.negated();
    EXPECT_EQ(m.at({0, 1}), -5);
    EXPECT_EQ(a.support(), (std::vector<Entry>{2, 5}));
}

TEST(DiagonalCells, MainDiagonal) {
    EXPECT_EQ(diagonal_cells(5, 0), (std::vector<Cell>{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}}));
}

TEST(DiagonalCells, OffsetTwo) {
    EXPECT_EQ(diagonal_cells(5, 2), (std::vector<Cell>{{2, 0}, {3, 1}, {4, 2}, {0, 3}, {1, 4}}));
}

TEST(DiagonalCells, WrapDiagonalHasRowOneBelowColumn) {
    for (Cell c : diagonal_cells(9, 8)) EXPECT_EQ(c.row, wrap(c.col - 1, 9));
    EXPECT_THROW(diagonal_cells(9, 9), ParameterError);
    EXPECT_THROW(diagonal_cells(9, -1), ParameterError);
}

TEST(DiagonalCells, DiagonalOfInvertsPlacement) {
    for (int d = 0; d < 7; ++d)
        for (Cell c : diagonal_cells(7, d)) EXPECT_EQ(diagonal_of(c, 7), d);
}

TEST(GapsOf, SevenDiagonalsOfNine) {
    auto ds = gaps_of(9, {0, 1, 2, 3, 5, 6, 7});
    EXPECT_EQ(ds.gaps, (std::vector<int>{2, 1, 1, 1, 2, 1, 1}));
}

TEST(GapsOf, SingleDiagonalWrapsToZero) {
    EXPECT_EQ(gaps_of(5, {0}).gaps, (std::vector<int>{0}));
}

TEST(GapsOf, SeventeenLayoutGapsAreSmall) {
    std::vector<int> idx;
    for (int d = 0; d <= 10; ++d) idx.push_back(d);
    for (int d : {11, 13, 14, 15}) idx.push_back(d);
    auto ds = gaps_of(17, idx);
    int sum = 0;
    for (int g : ds.gaps) {
        EXPECT_GE(g, 1);
        EXPECT_LE(g, 3);
        sum += g;
    }
    EXPECT_EQ(sum, 17);
}

TEST(GapsOf, RejectsBadInput) {
    EXPECT_THROW(gaps_of(5, {}), ParameterError);
    EXPECT_THROW(gaps_of(5, {2, 1}), ParameterError);
    EXPECT_THROW(gaps_of(5, {1, 1}), ParameterError);
    EXPECT_THROW(gaps_of(5, {5}), ParameterError);
}

TEST(OccupiedDiagonals, DetectsPartialDiagonals) {
    SparseSquareArray a(4);
    for (Cell c : diagonal_cells(4, 1)) a.set(c, 1);
    EXPECT_EQ(occupied_diagonals(a), (std::vector<int>{1}));
    a.set({0, 0}, 1);
    EXPECT_FALSE(occupied_diagonals(a).has_value());
}

TEST(PartialSums, DirectAddition) {
    SparseSquareArray a(3);
    a.set({0, 0}, 1);
    a.set({0, 1}, 2);
    a.set({0, 2}, -3);
    auto order = a.row_cells(0);
    auto prof = partial_sums(a, {LineKind::Row, 0}, order, 19);
    EXPECT_EQ(prof.sums, (std::vector<Entry>{1, 3, 0}));
    EXPECT_TRUE(prof.distinct());
}

TEST(PartialSums, ReportsFirstRepeat) {
    SparseSquareArray a(4);
    a.set({1, 0}, 2);
    a.set({1, 1}, -2);
    a.set({1, 2}, 3);
    a.set({1, 3}, -3);
    auto prof = partial_sums(a, {LineKind::Row, 1}, a.row_cells(1), 21);
    ASSERT_TRUE(prof.first_repeat().has_value());
    EXPECT_EQ(*prof.first_repeat(), (std::pair<std::size_t, std::size_t>{1, 3}));
}

TEST(PartialSums, RejectsOrdersThatAreNotPermutations) {
    SparseSquareArray a(3);
    a.set({0, 0}, 1);
    a.set({0, 1}, -1);
    a.set({1, 1}, 4);
    std::vector<Cell> missing{{0, 0}};
    std::vector<Cell> foreign{{0, 0}, {1, 1}};
    std::vector<Cell> doubled{{0, 0}, {0, 0}};
    EXPECT_THROW(partial_sums(a, {LineKind::Row, 0}, missing, 7), ParameterError);
    EXPECT_THROW(partial_sums(a, {LineKind::Row, 0}, foreign, 7), ParameterError);
    EXPECT_THROW(partial_sums(a, {LineKind::Row, 0}, doubled, 7), ParameterError);
    EXPECT_THROW(partial_sums(a, {LineKind::Row, 0}, a.row_cells(0), 0), ParameterError);
}

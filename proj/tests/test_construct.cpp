#include <gtest/gtest.h>

#include "fixtures/example17.hpp"
#include "heffter/census.hpp"
#include "heffter/construct.hpp"
#include "heffter/verify.hpp"

using namespace heffter;

namespace {

Params example_params() { return {17, 3, 3, 6, {0, 2, 1}, {1, 0}}; }

}  // namespace

TEST(BuildSupportShifted, MatchesPrintedExampleCellForCell) {
    auto built = build_support_shifted(example_params());
    auto printed = fixtures::load_example17();
    EXPECT_EQ(printed.filled(), 204u);
    EXPECT_EQ(built, printed);
}

TEST(BuildSupportShifted, PrintedMisprintBreaksTheAxioms) {
    auto printed = fixtures::load_example17();
    const auto& m = fixtures::kExample17Misprint;
    EXPECT_EQ(build_support_shifted(example_params()).value({m.row, m.col}), m.corrected);
    printed.set({m.row, m.col}, m.printed);
    auto rep = check_support_shifted(printed, 17, 3, 3);
    EXPECT_FALSE(rep.find("P2_support")->passed);
    EXPECT_FALSE(rep.find("P3_zero_sums")->passed);
}

TEST(BuildSupportShifted, FirstColumnOfExample) {
    auto a = build_support_shifted(example_params());
    EXPECT_EQ(a.value({0, 0}), 85);
    EXPECT_EQ(a.value({5, 0}), -120);
    EXPECT_EQ(a.value({7, 0}), 86);
    EXPECT_EQ(a.value({12, 0}), 222);
    EXPECT_EQ(a.value({6, 0}), -255);
}

TEST(BuildSupportShifted, IdentityMapsCornerCell) {
    auto a = build_support_shifted(Params::with_identity_maps(17, 3, 3, 6));
    EXPECT_EQ(a.value({0, 0}), 5 * 17);
}

TEST(BuildSupportShifted, TwelveByTwelveGammaOnePasses) {
    auto a = build_support_shifted(Params::with_identity_maps(12, 3, 1, 5));
    auto rep = check_support_shifted(a, 12, 3, 1);
    EXPECT_TRUE(rep.passed()) << rep.to_string();
    EXPECT_EQ(Params::with_identity_maps(12, 3, 1, 5).shifted_modulus(), 313);
}

TEST(BuildSupportShifted, OccupiesTheExpectedDiagonals) {
    auto a = build_support_shifted(example_params());
    std::vector<int> want;
    for (int d = 0; d <= 10; ++d) want.push_back(d);
    want.push_back(12);
    EXPECT_EQ(occupied_diagonals(a), want);
}

TEST(BuildSupportShifted, RejectsInvalidParameters) {
    EXPECT_THROW(build_support_shifted(Params::with_identity_maps(11, 3, 3, 5)), ParameterError);  // n < 4p
    EXPECT_THROW(build_support_shifted(Params::with_identity_maps(17, 3, 0, 6)), ParameterError);  // gamma
    EXPECT_THROW(build_support_shifted(Params::with_identity_maps(16, 3, 3, 6)), ParameterError);  // gcd
    EXPECT_THROW(build_support_shifted(Params::with_identity_maps(17, 3, 3, 4)), ParameterError);  // alpha < 2p-1
    EXPECT_THROW(build_support_shifted(Params{17, 3, 3, 6, {0, 0, 1}, {1, 0}}), ParameterError);
    EXPECT_THROW(build_support_shifted(Params{17, 3, 3, 6, {0, 2, 1}, {1}}), ParameterError);
}

TEST(FindAlpha, Examples) {
    EXPECT_EQ(find_alpha(9, 1), 4);
    EXPECT_EQ(find_alpha(13, 2), 6);
    EXPECT_EQ(find_alpha(21, 2), std::nullopt);
    EXPECT_EQ(find_alpha(21, 4), 10);
}

TEST(FindAlpha, RejectsOutOfRangeSides) {
    EXPECT_THROW(find_alpha(11, 1), ParameterError);
    EXPECT_THROW(find_alpha(9, 2), ParameterError);
    EXPECT_THROW(find_alpha(9, 0), ParameterError);
}

TEST(FindAlpha, AbsenceReasonNamesTheModThreeCondition) {
    auto why = alpha_absence_reason(21, 2);
    EXPECT_NE(why.find("n = 0 (mod 3)"), std::string::npos);
    EXPECT_NE(why.find("p != 1 (mod 3)"), std::string::npos);
}

TEST(ThreeDiagonal, NineAnchoredAtZero) {
    auto L = build_three_diagonal(9, 0);
    EXPECT_EQ(three_diagonal_problem(L), std::nullopt);
    std::vector<Entry> mid, outer;
    for (int c = 0; c < 9; ++c) {
        EXPECT_EQ(L.positive(c) + L.middle(c) + L.negative(c), 0);
        mid.push_back(std::abs(L.middle(c)));
        outer.push_back(L.positive(c));
        outer.push_back(-L.negative(c));
    }
    std::sort(mid.begin(), mid.end());
    std::sort(outer.begin(), outer.end());
    for (int i = 0; i < 9; ++i) EXPECT_EQ(mid[static_cast<std::size_t>(i)], i + 1);
    for (int i = 0; i < 18; ++i) EXPECT_EQ(outer[static_cast<std::size_t>(i)], 10 + i);
}

TEST(ThreeDiagonal, ThirteenRowSums) {
    auto L = build_three_diagonal(13, 2);
    for (int r = 0; r < 13; ++r)
        EXPECT_EQ(L.positive(r - 2) + L.middle(r - 4) + L.negative(r - 6), 0) << "row " << r;
}

TEST(ThreeDiagonal, ExistsForEverySideUpToOneHundredOne) {
    for (int n = 5; n <= 101; n += 4) {
        auto L = build_three_diagonal(n, 0);
        EXPECT_EQ(three_diagonal_problem(L), std::nullopt) << "n=" << n;
    }
}

TEST(ThreeDiagonal, DeterministicForAFixedSeed) {
    EXPECT_EQ(build_three_diagonal(17, 3).base, build_three_diagonal(17, 3).base);
    EXPECT_EQ(three_diagonal_problem(build_three_diagonal(17, 3, 12345)), std::nullopt);
    EXPECT_EQ(three_diagonal_problem(build_three_diagonal(37, 0, 12345)), std::nullopt);
}

TEST(ThreeDiagonal, RejectsBadParameters) {
    EXPECT_THROW(build_three_diagonal(11, 0), ParameterError);
    EXPECT_THROW(build_three_diagonal(9, 5), ParameterError);
    EXPECT_THROW(build_three_diagonal(9, -1), ParameterError);
}

TEST(ShiftThreeDiagonal, ZeroAndFullWrapAreIdentity) {
    auto L = build_three_diagonal(13, 2);
    EXPECT_EQ(shift_three_diagonal(L, 0).base, L.base);
    EXPECT_EQ(shift_three_diagonal(L, 13).base, L.base);
    auto M = L;
    for (int i = 0; i < 13; ++i) M = shift_three_diagonal(M, 1);
    EXPECT_EQ(M.base, L.base);
    EXPECT_EQ(M.shift, 0);
}

TEST(ShiftThreeDiagonal, MovesEntriesAndKeepsProperties) {
    auto L = build_three_diagonal(13, 2);
    for (int t = 0; t < 13; ++t) {
        auto M = shift_three_diagonal(L, t);
        EXPECT_EQ(three_diagonal_problem(M), std::nullopt);
        for (const auto& [c, v] : M.base.entries()) EXPECT_EQ(L.base.value({c.row + t, c.col + t}), v);
    }
}

TEST(Exclusion, ExactlyOneShiftCarriesTwoNMinusOne) {
    for (int n : {9, 13, 17, 21}) {
        auto L = build_three_diagonal(n, 0);
        int bad = 0;
        for (int t = 0; t < n; ++t) bad += violates_exclusion(shift_three_diagonal(L, t), {2 * Entry{n} - 1});
        EXPECT_EQ(bad, 1) << "n=" << n;
    }
}

TEST(Exclusion, IdentityMapsAddAnIntegralExtraValue) {
    // p = 1: (2p+1)/3 = 1, so the extra value coincides with 2n-1.
    EXPECT_EQ(exclusion_values(Params::with_identity_maps(17, 1, 3, 4)), (std::vector<Entry>{33}));
    EXPECT_EQ(exclusion_values(Params::with_identity_maps(37, 4, 3, 10)), (std::vector<Entry>{73, 71}));
    EXPECT_EQ(exclusion_values(Params::with_identity_maps(37, 2, 3, 6)), (std::vector<Entry>{73}));
    auto m4 = first_valid_maps(4);
    EXPECT_EQ(exclusion_values(Params{37, 4, 3, 10, m4->first, m4->second}), (std::vector<Entry>{73}));
}

TEST(Merge, SupportAndSelectionRule) {
    Params prm{9, 1, 3, 4, {0}, {}};
    auto ap = build_support_shifted(prm);
    auto L = build_three_diagonal(9, prm.beta());
    int t = 0;
    while (violates_exclusion(shift_three_diagonal(L, t), exclusion_values(prm))) ++t;
    auto Lt = shift_three_diagonal(L, t);
    auto b = merge(ap, Lt, prm);
    auto sup = b.support();
    ASSERT_EQ(sup.size(), 63u);
    for (std::size_t i = 0; i < sup.size(); ++i) EXPECT_EQ(sup[i], static_cast<Entry>(i) + 1);
    for (Cell c : diagonal_cells(9, prm.beta())) EXPECT_EQ(b.value(c), Lt.base.value(c));
    for (Cell c : diagonal_cells(9, 0)) EXPECT_EQ(b.value(c), ap.value(c));
    for (int r = 0; r < 9; ++r) {
        Entry rs = 0, cs = 0;
        for (Cell c : b.row_cells(r)) rs += b.value(c);
        for (Cell c : b.col_cells(r)) cs += b.value(c);
        EXPECT_EQ(rs, 0);
        EXPECT_EQ(cs, 0);
    }
}

TEST(Merge, RejectsExcludedShiftAndMismatchedInputs) {
    Params prm{9, 1, 3, 4, {0}, {}};
    auto ap = build_support_shifted(prm);
    auto L = build_three_diagonal(9, prm.beta());
    int t = 0;
    while (!violates_exclusion(shift_three_diagonal(L, t), exclusion_values(prm))) ++t;
    EXPECT_THROW(merge(ap, shift_three_diagonal(L, t), prm), ExclusionViolation);
    EXPECT_THROW(merge(ap, build_three_diagonal(9, 0), prm), ParameterError);
    EXPECT_THROW(merge(build_support_shifted(Params{9, 1, 3, 5, {0}, {}}), L, prm), ParameterError);
}

TEST(FirstValidMaps, CountsAndDefaults) {
    EXPECT_EQ(first_valid_maps(1)->first, (std::vector<int>{0}));
    EXPECT_EQ(first_valid_maps(3)->first, (std::vector<int>{0, 1, 2}));
    // Identity f_I(3) = 3 = (2p-3+1)/2 is forbidden for p = 4.
    auto m4 = first_valid_maps(4);
    ASSERT_TRUE(m4.has_value());
    EXPECT_EQ(merged_maps_problem(4, m4->first, m4->second), std::nullopt);
    EXPECT_NE(merged_maps_problem(4, identity_map(4), identity_map(3)), std::nullopt);
}

TEST(ConstructFull, NineOne) {
    auto fc = construct_full(9, 1);
    EXPECT_TRUE(fc.report.passed()) << fc.report.to_string();
    EXPECT_TRUE(fc.report.find("integer_sums")->passed);
    EXPECT_EQ(fc.params.full_modulus(), 127);
    EXPECT_EQ(fc.array.filled(), 63u);
    auto cyc = compose_cycle(fc.array, fc.scheme);
    EXPECT_EQ(cyc.lengths, (std::vector<std::size_t>{63}));
}

TEST(ConstructFull, ThirteenTwo) {
    auto fc = construct_full(13, 2);
    EXPECT_TRUE(fc.report.passed()) << fc.report.to_string();
    EXPECT_EQ(fc.params.full_modulus(), 287);
    EXPECT_EQ(fc.params.k(), 11);
}

TEST(ConstructFull, NoAlphaIsAParameterError) {
    try {
        construct_full(21, 2);
        FAIL() << "expected ParameterError";
    } catch (const ParameterError& e) {
        EXPECT_NE(std::string(e.what()).find("mod 3"), std::string::npos);
    }
}

TEST(ConstructFull, ExplicitOptions) {
    FullOptions opt;
    opt.f_I = std::vector<int>{0, 2, 1};
    opt.f_J = std::vector<int>{1, 0};
    opt.shift = 5;
    auto fc = construct_full(17, 3, opt);
    EXPECT_EQ(fc.shift, 5);
    EXPECT_EQ(fc.params.f_I, (std::vector<int>{0, 2, 1}));
    EXPECT_TRUE(fc.report.passed());

    FullOptions other_alpha;
    other_alpha.alpha = 9;  // the upper end n-2-2p of the window
    EXPECT_EQ(construct_full(17, 3, other_alpha).params.alpha, 9);
    other_alpha.alpha = 10;
    EXPECT_THROW(construct_full(17, 3, other_alpha), ParameterError);
}

TEST(ConstructFull, ExcludedExplicitShiftThrows) {
    Params prm{13, 1, 3, *find_alpha(13, 1), {0}, {}};
    auto L = build_three_diagonal(13, prm.beta());
    int t = 0;
    while (!violates_exclusion(shift_three_diagonal(L, t), exclusion_values(prm))) ++t;
    FullOptions opt;
    opt.shift = t;
    EXPECT_THROW(construct_full(13, 1, opt), ExclusionViolation);
}

TEST(ConstructFull, RejectsBadSides) {
    EXPECT_THROW(construct_full(11, 1), ParameterError);
    EXPECT_THROW(construct_full(5, 1), ParameterError);
    EXPECT_THROW(construct_full(9, 0), ParameterError);
    FullOptions opt;
    opt.shift = 9;
    EXPECT_THROW(construct_full(9, 1, opt), ParameterError);
}

TEST(FirstValidMaps, MatchesHeadOfFullEnumeration) {
    for (int p = 1; p <= 7; ++p) {
        auto first = first_valid_maps(p);
        ASSERT_TRUE(first.has_value()) << p;
        EXPECT_EQ(*first, enumerate_maps(p).front()) << p;
    }
}

TEST(FirstValidMaps, LargePIsImmediate) {
    for (int p : {13, 16, 40}) {
        auto first = first_valid_maps(p);
        ASSERT_TRUE(first.has_value()) << p;
        EXPECT_FALSE(merged_maps_problem(p, first->first, first->second)) << p;
    }
    EXPECT_TRUE(construct_full(57, 13).report.passed());
}

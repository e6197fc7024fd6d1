#include <gtest/gtest.h>

#include "sswcn/sequences.hpp"

using namespace sswcn;

namespace {

std::vector<std::string> dense_values(const TriangleRow& row) {
  std::vector<std::string> out;
  for (const auto& [key, v] : row.dense()) out.push_back(v.get_str());
  return out;
}

using Strings = std::vector<std::string>;

}  // namespace

TEST(HeightTriangle, ThreeDimensionalRows) {
  EXPECT_EQ(dense_values(height_triangle_row(3, 1)), (Strings{"1"}));
  EXPECT_EQ(dense_values(height_triangle_row(3, 2)), (Strings{"1", "0", "4"}));
  EXPECT_EQ(dense_values(height_triangle_row(3, 3)), (Strings{"1", "0", "20", "0", "21"}));
  EXPECT_EQ(dense_values(height_triangle_row(3, 4)), (Strings{"1", "0", "88", "0", "252", "0", "121"}));
  EXPECT_EQ(dense_values(height_triangle_row(3, 5)),
            (Strings{"1", "0", "376", "0", "2354", "0", "2547", "0", "728"}));
  EXPECT_EQ(height_triangle_row(3, 5).first_key(), 2);
}

TEST(HeightTriangle, FourDimensionalRows) {
  EXPECT_EQ(dense_values(height_triangle_row(4, 2)), (Strings{"1", "0", "1", "8", "4"}));
  EXPECT_EQ(dense_values(height_triangle_row(4, 3)), (Strings{"1", "0", "3", "69", "48", "30", "151", "135", "25"}));
  EXPECT_EQ(dense_values(height_triangle_row(4, 4)), (Strings{"1", "0", "7", "533", "553", "583", "4299", "5051",
                                                              "1930", "4288", "4819", "1764", "196"}));
}

TEST(HeightTriangle, MethodsAgree) {
  for (int k = 2; k <= 5; ++k) {
    for (int n = 0; n <= (k <= 3 ? 5 : 3); ++n) {
      const auto diff = height_triangle_row(k, n, TriangleMethod::Difference);
      const auto enumer = height_triangle_row(k, n, TriangleMethod::Enumeration);
      EXPECT_EQ(diff.entries, enumer.entries) << k << "," << n;
      EXPECT_EQ(diff.sum(), catalan_number(k, n));
    }
  }
}

TEST(HeightTriangle, OddDimensionOddHeightsVanish) {
  for (int k : {3, 5}) {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& [u, v] : height_triangle_row(k, n).entries) EXPECT_EQ(u % 2, 0) << k << "," << n;
    }
  }
}

TEST(HeightTriangle, Json) {
  const auto j = height_triangle_row(3, 2).to_json();
  EXPECT_EQ(j["kind"], "height");
  EXPECT_EQ(j["entries"]["4"], "4");
  EXPECT_FALSE(j["entries"].contains("3"));
  EXPECT_THROW(height_triangle_row(3, -1), Error);
  EXPECT_THROW(height_triangle_row(4, 4, TriangleMethod::Enumeration, 100), Error);
}

TEST(NarayanaTriangle, ThreeDimensionalRows) {
  EXPECT_EQ(dense_values(narayana_row(3, 0)), (Strings{"1"}));
  EXPECT_EQ(dense_values(narayana_row(3, 1)), (Strings{"1"}));
  EXPECT_EQ(dense_values(narayana_row(3, 2)), (Strings{"4", "1"}));
  EXPECT_EQ(dense_values(narayana_row(3, 3)), (Strings{"25", "16", "1"}));
  EXPECT_EQ(dense_values(narayana_row(3, 4)), (Strings{"196", "221", "44", "1"}));
  EXPECT_EQ(dense_values(narayana_row(3, 5)), (Strings{"1764", "2976", "1161", "104", "1"}));
  EXPECT_EQ(dense_values(narayana_row(3, 6)), (Strings{"17424", "40105", "24972", "4786", "228", "1"}));
}

TEST(NarayanaTriangle, FourDimensionalRows) {
  EXPECT_EQ(dense_values(narayana_row(4, 0)), (Strings{"1"}));
  EXPECT_EQ(dense_values(narayana_row(4, 1)), (Strings{"0", "1"}));
  EXPECT_EQ(dense_values(narayana_row(4, 2)), (Strings{"0", "4", "9", "1"}));
  EXPECT_EQ(dense_values(narayana_row(4, 3)), (Strings{"0", "25", "175", "216", "45", "1"}));
  EXPECT_EQ(dense_values(narayana_row(4, 4)), (Strings{"0", "196", "2828", "9285", "9038", "2514", "162", "1"}));
}

TEST(NarayanaTriangle, TwoDimensionalIsClassical) {
  // N(n, a) = C(n, a) C(n, a-1) / n
  for (int n = 1; n <= 7; ++n) {
    const auto row = narayana_row(2, n);
    for (int a = 1; a <= n; ++a) {
      const BigInt expect = detail::binomial(n, a) * detail::binomial(n, a - 1) / n;
      EXPECT_EQ(row.at(a), expect) << n << "," << a;
    }
    EXPECT_EQ(row.at(0), 0);
  }
}

TEST(NarayanaTriangle, RowSumsAndEvenZeroColumn) {
  for (int k = 2; k <= 5; ++k) {
    for (int n = 1; n <= 3; ++n) {
      const auto [height, peaks] = triangle_rows(k, n);
      EXPECT_EQ(peaks.sum(), catalan_number(k, n));
      EXPECT_EQ(height.entries, height_triangle_row(k, n).entries);
      if (k % 2 == 0) EXPECT_EQ(peaks.at(0), 0);
    }
  }
}

TEST(Verifiers, MinU) {
  for (int k : {3, 4, 5}) {
    for (int n = 1; n <= 3; ++n) EXPECT_TRUE(verify_min_u_formulas(k, n).passed()) << k << "," << n;
  }
  EXPECT_THROW(verify_min_u_formulas(6, 1), Error);
}

TEST(Verifiers, RecurrenceThreeFour) {
  const auto rec = verify_recurrence_3_4(10, default_assignments());
  EXPECT_TRUE(rec.passed()) << rec.to_json().dump();
  EXPECT_GT(rec.checks.size(), 50u);
}

TEST(Verifiers, ClosedFormsThreeFour) {
  const std::vector<long> a{1, 1, 5, 21, 89, 377, 1597};
  for (std::size_t n = 0; n < a.size(); ++n) {
    EXPECT_NEAR(static_cast<double>(closed_form_3_4(1, 1, static_cast<int>(n))), a[n], 1e-6);
  }
  // negative discriminant: b0 = -4, b2 = 1 gives disc = -15
  const auto seq = bounded_sswcn_dp_sequence(3, 4, 8, {IntegerSequence({-4, 1, 1}, 1), IntegerSequence::constant(1)});
  for (int n = 0; n <= 8; ++n) EXPECT_NEAR(static_cast<double>(closed_form_3_4(-4, 1, n)), seq[n].get_d(), 1e-6);
}

TEST(Verifiers, FourSixAndFiveEight) {
  const auto ones = verify_closed_4_6_and_5_8(10, {WeightAssignment::all_ones()});
  EXPECT_TRUE(ones.passed());
  const auto rec = verify_closed_4_6_and_5_8(6, default_assignments());
  std::size_t stated_fail = 0, corrected_fail = 0;
  for (const auto& c : rec.checks) {
    if (c.passed) continue;
    (c.label.rfind("stated", 0) == 0 ? stated_fail : corrected_fail) += 1;
  }
  EXPECT_EQ(corrected_fail, 0u);
  EXPECT_GT(stated_fail, 0u);
  EXPECT_THROW(rec.throw_if_failed(), Error);

  const WeightAssignment w{IntegerSequence({3, 1, 1, 2}, 1), IntegerSequence::constant(1)};
  const auto a = bounded_sswcn_dp_sequence(4, 6, 2, w);
  EXPECT_EQ(a[1], 6);
  EXPECT_EQ(a[2], 60);
}

TEST(Verifiers, RightmostAndDprime) {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 1; n <= 4; ++n) EXPECT_TRUE(verify_rightmost_entries(k, n).passed()) << k << "," << n;
  }
  const std::vector<long> a274969{1, 4, 21, 121, 728, 4488, 28101};
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(dprime_3_2n_binomial(n), a274969[n - 1]);
    EXPECT_EQ(quadrant_walks_3n(n), a274969[n - 1]);
    EXPECT_EQ(dprime_3_2n_dp(n), a274969[n - 1]);
  }
  EXPECT_TRUE(verify_dprime_3_2n(7).passed());
}

TEST(Verifiers, NarayanaOnePeak) {
  for (int k : {2, 4}) {
    for (int n = 1; n <= 4; ++n) EXPECT_TRUE(verify_narayana_one_peak(k, n).passed());
  }
  EXPECT_THROW(verify_narayana_one_peak(3, 2), Error);
}

TEST(Verifiers, RegistryAndJson) {
  EXPECT_EQ(verifier_names().size(), 6u);
  for (const auto& name : verifier_names()) {
    const auto records = run_verifier(name);
    EXPECT_FALSE(records.empty()) << name;
    for (const auto& r : records) {
      if (name != "closed-4-6-5-8") EXPECT_TRUE(r.passed()) << r.name;
    }
  }
  EXPECT_THROW(run_verifier("nope"), Error);
  const auto j = verify_dprime_3_2n(2).to_json();
  EXPECT_EQ(j["name"], "dprime-3-2n");
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["checks"].size(), 4u);
}

TEST(Verifiers, RandomAssignmentsAreDeterministic) {
  const auto a = random_assignments(3, 99);
  const auto b = random_assignments(3, 99);
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int j = 0; j < 20; ++j) {
      EXPECT_EQ(a[i].b[j], b[i].b[j]);
      EXPECT_EQ(a[i].c[j], 1);
      EXPECT_LE(abs(a[i].b[j]), 5);
    }
  }
}

TEST(ScanPowerOfTwo, SmallRange) {
  const auto hits = scan_power_of_two(2, 6, 12, 8);
  const std::vector<std::pair<int, Coord>> expected{{2, 2}, {4, 6}, {5, 8}, {5, 9}, {6, 10}, {6, 11}, {6, 12}};
  EXPECT_EQ(hits, expected);
}

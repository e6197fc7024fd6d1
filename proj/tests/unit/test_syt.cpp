#include <gtest/gtest.h>

#include "sswcn/counting.hpp"
#include "sswcn/syt.hpp"

using namespace sswcn;

namespace {

const std::vector<int> kExamplePath{1, 1, 2, 1, 2, 2, 1, 2, 3, 3, 3, 3};

Tableau example_tableau() { return Tableau({{1, 2, 4, 7}, {3, 5, 6, 8}, {9, 10, 11, 12}}); }

}  // namespace

TEST(Tableau, Validation) {
  EXPECT_NO_THROW(Tableau({{1, 2}, {3}}));
  EXPECT_THROW(Tableau({{1, 3}, {2, 4}, {5, 6, 7}}), Error);
  EXPECT_THROW(Tableau({{1, 2}, {2, 3}}), Error);
  EXPECT_THROW(Tableau({{1, 3}, {4, 2}}), Error);
  EXPECT_THROW(Tableau({{2, 3}, {1, 4}}), Error);
  EXPECT_THROW(Tableau({{1, 2}, {3, 5}}), Error);
  const Tableau t({{1, 2}, {}, {}});
  EXPECT_EQ(t.row_count(), 1u);
  EXPECT_EQ(Tableau(std::vector<std::vector<int>>{}).size(), 0u);
}

TEST(Tableau, Accessors) {
  const Tableau t = example_tableau();
  EXPECT_EQ(t.size(), 12u);
  EXPECT_TRUE(t.is_rectangular());
  EXPECT_EQ(t.shape(), (std::vector<std::size_t>{4, 4, 4}));
  EXPECT_EQ(t.row_of(9), 2);
  EXPECT_EQ(t.to_string(), "1 2 4 7\n3 5 6 8\n9 10 11 12\n");
  EXPECT_EQ(Tableau::from_json(t.to_json()), t);
  EXPECT_THROW(t.row_of(13), Error);
}

TEST(Bijection, ExamplePath) {
  const BallotPath p(3, kExamplePath);
  EXPECT_EQ(path_to_tableau(p), example_tableau());
  EXPECT_EQ(tableau_to_path(example_tableau()), p);
  EXPECT_THROW(path_to_tableau(BallotPath(3, {1, 2})), Error);
  EXPECT_THROW(tableau_to_path(Tableau({{1, 2}, {3}})), Error);
  EXPECT_EQ(tableau_to_path(Tableau(std::vector<std::vector<int>>{}), 3), BallotPath(3, {}));
}

TEST(Bijection, RoundTripAllSmallPaths) {
  for (int n = 0; n <= 3; ++n) {
    std::size_t count = 0;
    for (const auto& p : collect(enumerate_paths(3, n))) {
      const Tableau t = path_to_tableau(p);
      EXPECT_EQ(tableau_to_path(t, 3), p);
      EXPECT_EQ(path_to_tableau(tableau_to_path(t, 3)), t);
      ++count;
    }
    EXPECT_EQ(BigInt(std::to_string(count)), catalan_number(3, n));
  }
}

TEST(Subtableau, MatchesIntermediatePoints) {
  const Tableau sub = subtableau(example_tableau(), 4);
  EXPECT_EQ(sub, Tableau({{1, 2, 4}, {3}}));
  EXPECT_EQ(sub.shape_point(3), (Point{3, 1, 0}));
  EXPECT_EQ(subtableau(example_tableau(), 0).size(), 0u);
  EXPECT_THROW(subtableau(example_tableau(), 13), Error);
  for (int n = 1; n <= 2; ++n) {
    for (const auto& p : collect(enumerate_paths(3, n))) {
      const Tableau t = path_to_tableau(p);
      const auto pts = p.points();
      for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(subtableau(t, i).shape_point(3), pts[i]);
    }
  }
}

TEST(Tally, ExampleByDefinition) {
  const Tableau t = example_tableau();
  EXPECT_EQ(descents(t), 4);
  EXPECT_EQ(ascents(t), 7);
  EXPECT_EQ(tally(t), 3);
}

TEST(Tally, SmallShapes) {
  EXPECT_EQ(tally(Tableau({{1}, {2}, {3}, {4}})), -3);
  EXPECT_EQ(tally(Tableau({{1, 2, 3, 4}})), 3);
  EXPECT_EQ(tally(Tableau(std::vector<std::vector<int>>{{1}})), 0);
  EXPECT_EQ(tally(Tableau(std::vector<std::vector<int>>{})), 0);
}

TEST(Tally, AscentsPlusDescents) {
  for (int k = 2; k <= 4; ++k) {
    for (const auto& p : collect(enumerate_paths(k, 3))) {
      const Tableau t = path_to_tableau(p);
      EXPECT_EQ(ascents(t) + descents(t), static_cast<std::int64_t>(t.size()) - 1);
    }
  }
}

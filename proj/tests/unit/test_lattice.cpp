#include <gtest/gtest.h>

#include <set>

#include "sswcn/counting.hpp"
#include "sswcn/height.hpp"
#include "sswcn/lattice.hpp"

using namespace sswcn;

namespace {

std::vector<std::vector<int>> all_steps(PathEnumerator e) {
  std::vector<std::vector<int>> out;
  while (e.next()) out.emplace_back(e.steps().begin(), e.steps().end());
  return out;
}

template <typename F>
void expect_error(ErrorKind kind, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace

TEST(Point, BallotPoints) {
  EXPECT_TRUE(is_ballot_point(Point{2, 1, 0}));
  EXPECT_TRUE(is_ballot_point(Point{0, 0, 0}));
  EXPECT_FALSE(is_ballot_point(Point{1, 2, 0}));
  expect_error(ErrorKind::InvalidDimension, [] { is_ballot_point(Point{3}); });
  expect_error(ErrorKind::InvalidArgument, [] { Point{1, -1}; });
}

TEST(Point, Normalize) {
  EXPECT_EQ((Point{3, 2, 1}.normalized()), (Point{2, 1, 0}));
  EXPECT_EQ((Point{4, 4}.normalized()), (Point{0, 0}));
  EXPECT_EQ((Point{3, 1, 0}.to_string()), "(3,1,0)");
}

TEST(StepClass, Taxonomy) {
  EXPECT_EQ(step_class(3, 2).tag, StepTag::Neutral);
  EXPECT_EQ(step_class(4, 2).tag, StepTag::Up);
  EXPECT_EQ(step_class(4, 3).tag, StepTag::Down);
  EXPECT_EQ(step_class(3, 1).tag, StepTag::Up);
  EXPECT_EQ(step_class(3, 3).tag, StepTag::Down);
  for (int k = 2; k <= 9; k += 2) {
    for (int d = 1; d <= k; ++d) EXPECT_NE(step_class(k, d).tag, StepTag::Neutral);
  }
  expect_error(ErrorKind::InvalidDirection, [] { step_class(3, 4); });
  expect_error(ErrorKind::InvalidDirection, [] { step_class(3, 0); });
}

TEST(BallotPath, RejectsBadPaths) {
  expect_error(ErrorKind::InvalidPath, [] { BallotPath(3, {2, 1, 3}); });
  expect_error(ErrorKind::InvalidPath, [] { BallotPath(3, {1, 4}); });
  const BallotPath p(3, {1, 1, 2, 2, 3, 3});
  EXPECT_TRUE(p.is_balanced());
  EXPECT_FALSE(BallotPath(3, {1, 1, 2}).is_balanced());
  EXPECT_EQ(p.to_string(), "e1,e1,e2,e2,e3,e3");
  EXPECT_EQ(p.endpoint(), (Point{2, 2, 2}));
  EXPECT_EQ(p.points().size(), 7u);
}

TEST(Enumerate, FiveThreeDimensionalPathsInDfsOrder) {
  const std::vector<std::vector<int>> expected{
      {1, 1, 2, 2, 3, 3}, {1, 1, 2, 3, 2, 3}, {1, 2, 1, 2, 3, 3}, {1, 2, 1, 3, 2, 3}, {1, 2, 3, 1, 2, 3}};
  EXPECT_EQ(all_steps(enumerate_paths(3, 2)), expected);
}

TEST(Enumerate, HeightBoundTwo) {
  EXPECT_EQ(all_steps(enumerate_paths(3, 2, 2)), (std::vector<std::vector<int>>{{1, 2, 3, 1, 2, 3}}));
}

TEST(Enumerate, UniqueFourDimensionalPath) {
  EXPECT_EQ(all_steps(enumerate_paths(4, 1)), (std::vector<std::vector<int>>{{1, 2, 3, 4}}));
}

TEST(Enumerate, EmptyPathOnce) {
  const auto paths = all_steps(enumerate_paths(3, 0));
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_TRUE(paths[0].empty());
  EXPECT_TRUE(all_steps(enumerate_paths(3, 1, -1)).empty());
}

TEST(Enumerate, CountsMatchCatalanFormula) {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 0; n <= 4; ++n) {
      const auto count = for_each_path(enumerate_paths(k, n), [](const PathEnumerator&) {});
      EXPECT_EQ(BigInt(std::to_string(count)), catalan_number(k, n)) << k << "," << n;
    }
  }
}

TEST(Enumerate, EveryPathIsBalancedBallot) {
  for (int k = 2; k <= 4; ++k) {
    PathEnumerator e = enumerate_paths(k, 3);
    while (e.next()) {
      const BallotPath p = e.path();
      EXPECT_TRUE(p.is_balanced());
      for (const auto& pt : p.points()) EXPECT_TRUE(is_ballot_point(pt));
      EXPECT_EQ(e.height(), ss_height_path(p));
    }
  }
}

TEST(Enumerate, BoundedIsFilteredSubset) {
  for (int k = 2; k <= 4; ++k) {
    const int n = 3;
    const auto all = collect(enumerate_paths(k, n));
    for (Coord u = 0; u <= max_path_height(k, n); ++u) {
      std::vector<std::vector<int>> filtered;
      for (const auto& p : all) {
        if (ss_height_path(p) <= u) filtered.emplace_back(p.steps().begin(), p.steps().end());
      }
      EXPECT_EQ(all_steps(enumerate_paths(k, n, u)), filtered) << k << " u=" << u;
    }
  }
}

TEST(SubPaths, BlockDecomposition) {
  EXPECT_EQ(all_steps(enumerate_sub_paths(3, Point{0, 0, 0}, Point{2, 1, 0}, 4)),
            (std::vector<std::vector<int>>{{1, 1, 2}, {1, 2, 1}}));
  EXPECT_EQ(all_steps(enumerate_sub_paths(3, Point{2, 1, 0}, Point{2, 2, 2}, 4)),
            (std::vector<std::vector<int>>{{2, 3, 3}, {3, 2, 3}}));
  const auto empty = all_steps(enumerate_sub_paths(2, Point{0, 0}, Point{0, 0}));
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty[0].empty());
}

TEST(SubPaths, InvalidEndpoints) {
  expect_error(ErrorKind::InvalidEndpoint, [] { enumerate_sub_paths(3, Point{0, 1, 0}, Point{2, 2, 2}); });
  expect_error(ErrorKind::InvalidEndpoint, [] { enumerate_sub_paths(3, Point{0, 0, 0}, Point{1, 2, 0}); });
  expect_error(ErrorKind::InvalidEndpoint, [] { enumerate_sub_paths(3, Point{3, 0, 0}, Point{2, 2, 2}); });
}

TEST(Reflect, Examples) {
  EXPECT_EQ(reflect_point(3, 1, Point{1, 0, 0}), (Point{1, 1, 0}));
  EXPECT_EQ(reflect_point(2, 5, Point{3, 1}), (Point{4, 2}));
  expect_error(ErrorKind::OutOfBox, [] { reflect_point(2, 2, Point{3, 1}); });
}

TEST(Reflect, InvolutionAndHeightInvariantOnGrid) {
  for (int k = 2; k <= 5; ++k) {
    std::vector<Coord> x(static_cast<std::size_t>(k), 0);
    const Coord n = 4;
    while (true) {
      const Point p(x);
      const Point q = reflect_point(k, n, p);
      EXPECT_EQ(reflect_point(k, n, q), p);
      if (is_ballot_point(p)) {
        EXPECT_EQ(ss_height_point(q), ss_height_point(p)) << p.to_string();
      }
      std::size_t i = 0;
      while (i < x.size() && x[i] == n) x[i++] = 0;
      if (i == x.size()) break;
      ++x[i];
    }
  }
}

TEST(ReverseComplement, FrozenValues) {
  EXPECT_EQ(reverse_complement(BallotPath(2, {1, 2})), BallotPath(2, {1, 2}));
  EXPECT_EQ(reverse_complement(BallotPath(3, {1, 1, 2, 2, 3, 3})), BallotPath(3, {1, 1, 2, 2, 3, 3}));
  EXPECT_EQ(reverse_complement(BallotPath(3, {1, 1, 2, 3, 2, 3})), BallotPath(3, {1, 2, 1, 2, 3, 3}));
  EXPECT_EQ(reverse_complement(BallotPath(3, {1, 2, 1, 3, 2, 3})), BallotPath(3, {1, 2, 1, 3, 2, 3}));
  EXPECT_EQ(reverse_complement(BallotPath(3, {1, 2, 3, 1, 2, 3})), BallotPath(3, {1, 2, 3, 1, 2, 3}));
}

TEST(ReverseComplement, InvolutionPreservesHeight) {
  for (int k = 2; k <= 4; ++k) {
    for (const auto& p : collect(enumerate_paths(k, 3))) {
      const BallotPath q = reverse_complement(p);
      EXPECT_EQ(reverse_complement(q), p);
      EXPECT_EQ(ss_height_path(q), ss_height_path(p));
    }
  }
  expect_error(ErrorKind::InvalidPath, [] { reverse_complement(BallotPath(3, {1, 2})); });
}

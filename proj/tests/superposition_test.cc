// Copyright 2026 The DILC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dilc/superposition.h"

#include <stdexcept>

#include <gtest/gtest.h>

#include "dilc/lifting.h"
#include "test_util.h"

namespace dilc {
namespace {

using testing::norm2;
using testing::random_toeplitz;
using testing::random_trajectory;
using testing::strided_cols;
using testing::strided_rows;

ToeplitzOperator example_plant() {
  Eigen::MatrixXd p1(2, 2), p2(2, 2);
  p1 << 1, 0, 0, 1;
  p2 << 0.5, 0.1, 0, 0.5;
  return ToeplitzOperator({p1, p2});
}

TEST(SuperpositionTest, ExampleSequences) {
  const auto grid = superposition_blocks(example_plant());
  EXPECT_EQ(grid.sequence(0, 0), Eigen::Vector2d(1, 0.5));
  EXPECT_EQ(grid.sequence(0, 1), Eigen::Vector2d(0, 0.1));
  EXPECT_EQ(grid.sequence(1, 0), Eigen::Vector2d(0, 0));
  EXPECT_EQ(grid.sequence(1, 1), Eigen::Vector2d(1, 0.5));
  EXPECT_TRUE(grid.is_zero(1, 0));
}

TEST(SuperpositionTest, IdentityOperator) {
  const auto grid = superposition_blocks(ToeplitzOperator::identity(3, 4));
  for (Index k = 0; k < 3; ++k) {
    for (Index i = 0; i < 3; ++i) {
      if (k == i) {
        EXPECT_EQ(grid.sub_block(k, i).dense(), Eigen::MatrixXd::Identity(4, 4));
      } else {
        EXPECT_TRUE(grid.is_zero(k, i));
      }
    }
  }
}

TEST(SuperpositionTest, SisoSingleSubBlock) {
  Rng rng(20);
  const auto op = random_toeplitz(rng, 1, 1, 5);
  const auto grid = superposition_blocks(op);
  ASSERT_EQ(grid.rows(), 1);
  EXPECT_EQ(grid.sub_block(0, 0), op);
}

TEST(SuperpositionTest, RecompositionIsExact) {
  Rng rng(21);
  for (Index o = 1; o <= 3; ++o) {
    for (Index n = 1; n <= 6; ++n) {
      const auto op = random_toeplitz(rng, o, o, n);
      EXPECT_EQ(superposition_blocks(op).recompose(), op);
      const auto lifted = lift_input(random_trajectory(rng, o, n));
      EXPECT_EQ(superposition_input_blocks(lifted).recompose(), lifted.op());
    }
  }
}

TEST(SuperpositionTest, RejectsNonSquare) {
  EXPECT_THROW(superposition_blocks(ToeplitzOperator::zero(2, 3, 2)),
               std::invalid_argument);
}

TEST(SuperpositionTest, GroupedDenseIsPermutedOperator) {
  Rng rng(22);
  const Index o = 3, n = 4;
  const auto op = random_toeplitz(rng, o, o, n);
  const Eigen::MatrixXd sample_grouped = testing::toeplitz_oracle(op);
  const Eigen::MatrixXd grouped = superposition_blocks(op).dense();
  for (Index k = 0; k < o; ++k) {
    for (Index i = 0; i < o; ++i) {
      for (Index r = 0; r < n; ++r) {
        for (Index c = 0; c < n; ++c) {
          EXPECT_EQ(grouped(k * n + r, i * n + c), sample_grouped(r * o + k, c * o + i));
        }
      }
    }
  }
}

TEST(SuperpositionTest, StackNormsMatchDenseSlices) {
  Rng rng(23);
  for (Index o = 1; o <= 3; ++o) {
    const Index n = 5;
    const auto op = random_toeplitz(rng, o, o, n);
    const auto grid = superposition_blocks(op);
    const Eigen::MatrixXd dense = testing::toeplitz_oracle(op);
    for (Index k = 0; k < o; ++k) {
      EXPECT_NEAR(norm2(grid.row_stack(k)), norm2(strided_rows(dense, o, k)), 1e-12);
      EXPECT_NEAR(norm2(grid.column_stack(k)), norm2(strided_cols(dense, o, k)), 1e-12);
    }
  }
}

TEST(SuperpositionInputTest, ExampleSequences) {
  const auto grid =
      superposition_input_blocks(lift_input(Trajectory(Eigen::Vector4d(1, 0, 0, 1), 2)));
  ASSERT_EQ(grid.cols(), 4);
  EXPECT_EQ(grid.sequence(0, 0), Eigen::Vector2d(1, 0));
  EXPECT_EQ(grid.sequence(0, 1), Eigen::Vector2d(0, 1));
}

TEST(SuperpositionInputTest, ZeroInput) {
  const auto grid = superposition_input_blocks(lift_input(Trajectory(2, 3)));
  for (Index k = 0; k < 2; ++k) {
    for (Index i = 0; i < 4; ++i) EXPECT_TRUE(grid.is_zero(k, i));
  }
  EXPECT_EQ(grid.row_stack(0).cols(), 0);
}

TEST(SuperpositionInputTest, ColumnNormsMatchDenseSlices) {
  Rng rng(24);
  for (Index o = 1; o <= 3; ++o) {
    for (int rep = 0; rep < 5; ++rep) {
      const Index n = 2 + rep;
      const auto u = random_trajectory(rng, o, n);
      const auto grid = superposition_input_blocks(lift_input(u));
      const Eigen::MatrixXd dense = testing::lifted_input_oracle(u);
      for (Index p = 0; p < o * o; ++p) {
        EXPECT_NEAR(norm2(grid.column_stack(p)),
                    norm2(strided_cols(dense, o * o, p)), 1e-12);
      }
      for (Index k = 0; k < o; ++k) {
        EXPECT_NEAR(norm2(grid.row_stack(k)), norm2(strided_rows(dense, o, k)),
                    1e-12);
      }
    }
  }
}

TEST(ScalarToeplitzTest, LowerTriangularLayout) {
  const Eigen::MatrixXd t = scalar_toeplitz_dense(Eigen::Vector3d(1, 2, 3));
  Eigen::Matrix3d want;
  want << 1, 0, 0, 2, 1, 0, 3, 2, 1;
  EXPECT_EQ(t, want);
}

}  // namespace
}  // namespace dilc

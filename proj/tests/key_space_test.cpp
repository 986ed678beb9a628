#include <gtest/gtest.h>

#include "hbst/key_space.hpp"

namespace hbst {
namespace {

TEST(KeyWidthTest, RejectsOutOfRangeWidths) {
  EXPECT_THROW(KeyWidth(0), std::invalid_argument);
  EXPECT_THROW(KeyWidth(65), std::invalid_argument);
  EXPECT_NO_THROW(KeyWidth(1));
  EXPECT_NO_THROW(KeyWidth(64));
}

TEST(KeyWidthTest, AdmitsExactlyTheKeySpace) {
  EXPECT_TRUE(KeyWidth(4).admits(15));
  EXPECT_FALSE(KeyWidth(4).admits(16));
  EXPECT_TRUE(KeyWidth(64).admits(~Key{0}));
  EXPECT_TRUE(KeyWidth(4).holds(16));
  EXPECT_FALSE(KeyWidth(4).holds(17));
  EXPECT_TRUE(KeyWidth(64).holds(~std::uint64_t{0}));
}

TEST(HiddenRefTest, Midpoints) {
  const KeyWidth b4(4);
  EXPECT_EQ(hidden_ref({0, 0}, b4), 8u);
  EXPECT_EQ(hidden_ref({8, 1}, b4), 12u);
  EXPECT_EQ(hidden_ref({7, 4}, b4), 7u);  // unit interval
  EXPECT_EQ(hidden_ref({0, 0}, KeyWidth(64)), Key{1} << 63);
}

TEST(ChildFrameTest, Subdivision) {
  const KeyWidth b4(4);
  EXPECT_EQ(child_frame({0, 0}, Side::kLeft, b4), (IntervalFrame{0, 1}));
  EXPECT_EQ(child_frame({0, 0}, Side::kRight, b4), (IntervalFrame{8, 1}));
  EXPECT_EQ(child_frame({6, 3}, Side::kRight, b4), (IntervalFrame{7, 4}));
  EXPECT_THROW(child_frame({7, 4}, Side::kLeft, b4), std::domain_error);
}

TEST(FrameTest, ContainmentAtFullWidth) {
  const KeyWidth b64(64);
  EXPECT_TRUE(frame_contains(kRootFrame, b64, ~Key{0}));
  const IntervalFrame right = child_frame(kRootFrame, Side::kRight, b64);
  EXPECT_FALSE(frame_contains(right, b64, (Key{1} << 63) - 1));
  EXPECT_TRUE(frame_contains(right, b64, ~Key{0}));
  EXPECT_EQ(format_frame(kRootFrame, b64), "[0,18446744073709551616)");
}

TEST(FrameTest, Formatting) {
  const KeyWidth b4(4);
  EXPECT_EQ(format_frame(kRootFrame, b4), "[0,16)");
  EXPECT_EQ(format_frame({7, 4}, b4), "[7,8)");
}

TEST(RouteTest, TiesGoRight) {
  const KeyWidth b4(4);
  EXPECT_EQ(route(kRootFrame, b4, 7), Side::kLeft);
  EXPECT_EQ(route(kRootFrame, b4, 8), Side::kRight);
}

}  // namespace
}  // namespace hbst

#include "hbst/key_space.hpp"

#include <algorithm>

namespace hbst {

namespace {

std::string to_decimal(unsigned __int128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace

std::string format_frame(IntervalFrame frame, KeyWidth width) {
  const unsigned __int128 hi =
      static_cast<unsigned __int128>(frame_last(frame, width)) + 1;
  return "[" + std::to_string(frame.lo) + "," + to_decimal(hi) + ")";
}

}  // namespace hbst

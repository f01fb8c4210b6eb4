#include "mds/count.hpp"

#include <algorithm>
#include <cstdint>

namespace mds {

std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::uint64_t to_u64(Count value) {
  if (value > static_cast<Count>(UINT64_MAX)) throw CountOverflow("count " + to_string(value) + " exceeds 64 bits");
  return static_cast<std::uint64_t>(value);
}

}  // namespace mds

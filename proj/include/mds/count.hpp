#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mds {

// Exact counts of vertex subsets. 128 bits covers every count reachable
// with the 64-vertex cap (at most 2^64 subsets).
__extension__ typedef unsigned __int128 Count;

class CountOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw CountOverflow("count addition overflowed 128 bits");
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw CountOverflow("count multiplication overflowed 128 bits");
  return r;
}

std::string to_string(Count value);

// Narrowing for serialization; throws CountOverflow when the value needs more than 64 bits.
std::uint64_t to_u64(Count value);

}  // namespace mds

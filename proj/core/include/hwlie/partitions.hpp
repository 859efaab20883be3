#pragma once

#include <cstdint>
#include <vector>

namespace hwlie {

/// All partitions of n into positive parts, each partition listed with parts
/// non-increasing, partitions ordered largest-first-part first:
/// 3 -> (3), (2,1), (1,1,1).  n = 0 yields the single empty partition.
std::vector<std::vector<long long>> partitions(long long n);

/// Number of partitions of n (enumerates nothing; classic two-argument
/// recurrence, memoized).
long long partition_count(long long n);

} // namespace hwlie

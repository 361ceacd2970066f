#ifndef YM2D_NC_HPP_
#define YM2D_NC_HPP_

#include <cstdint>
#include <functional>
#include <vector>

namespace ym2d {

inline constexpr int kDefaultNcCap = 14;

/// Partition of {1..n} into non-crossing blocks: no a<b<c<d with {a,c} and
/// {b,d} in different blocks.  Blocks are listed by smallest element; each
/// block is increasing.
struct NcPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;
};

/// Visit every non-crossing partition of {1..n} exactly once.  The visited
/// reference is reused between calls.
void for_each_nc(int n, const std::function<void(const NcPartition&)>& visit,
                 int cap = kDefaultNcCap);

/// Materialized enumeration; count equals the n-th Catalan number.
std::vector<NcPartition> enumerate_nc(int n, int cap = kDefaultNcCap);

std::uint64_t catalan(int n);

}  // namespace ym2d

#endif  // YM2D_NC_HPP_

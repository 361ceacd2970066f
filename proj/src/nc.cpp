#include "ym2d/nc.hpp"

#include <string>

#include "ym2d/error.hpp"

namespace ym2d {

namespace {

// Left-to-right scan with a stack of open blocks.  Point i either opens a
// new block or joins an open block at some depth d, which permanently closes
// every block above d.  Each non-crossing partition arises from exactly one
// choice sequence, and blocks come out ordered by their first element.
class NcScan {
  public:
    NcScan(int n, const std::function<void(const NcPartition&)>& visit) : visit_(visit) {
        part_.n = n;
    }

    void scan(int i) {
        if (i > part_.n) {
            visit_(part_);
            return;
        }
        auto& blocks = part_.blocks;
        // open a new block
        blocks.push_back({i});
        open_.push_back(blocks.size() - 1);
        scan(i + 1);
        open_.pop_back();
        blocks.pop_back();
        // join an open block, closing everything stacked above it
        for (std::size_t d = open_.size(); d-- > 0;) {
            std::vector<std::size_t> closed(open_.begin() + static_cast<std::ptrdiff_t>(d) + 1,
                                            open_.end());
            open_.resize(d + 1);
            blocks[open_[d]].push_back(i);
            scan(i + 1);
            blocks[open_[d]].pop_back();
            open_.insert(open_.end(), closed.begin(), closed.end());
        }
    }

  private:
    const std::function<void(const NcPartition&)>& visit_;
    NcPartition part_;
    std::vector<std::size_t> open_;
};

}  // namespace

void for_each_nc(int n, const std::function<void(const NcPartition&)>& visit, int cap) {
    if (n < 1) throw Error(errc::n_too_large, "for_each_nc: n must be >= 1");
    if (n > cap)
        throw Error(errc::n_too_large,
                    "for_each_nc: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    NcScan s(n, visit);
    s.scan(1);
}

std::vector<NcPartition> enumerate_nc(int n, int cap) {
    std::vector<NcPartition> out;
    for_each_nc(n, [&](const NcPartition& p) { out.push_back(p); }, cap);
    return out;
}

std::uint64_t catalan(int n) {
    std::uint64_t c = 1;
    for (int i = 0; i < n; ++i)
        c = c * 2 * (2 * static_cast<std::uint64_t>(i) + 1) / (static_cast<std::uint64_t>(i) + 2);
    return c;
}

}  // namespace ym2d

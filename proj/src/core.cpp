#include "astf/core.hpp"

#include <algorithm>
#include <cstring>

namespace astf {

bool Segmentation::valid() const {
    if (span < 1) return false;
    std::int64_t prev = 0;
    for (std::int64_t d : dividing_points) {
        if (d <= prev || d >= span) return false;
        prev = d;
    }
    return true;
}

const char* to_string(CscpKind k) {
    return k == CscpKind::Rising ? "rising" : "falling";
}

const char* to_string(AnomalyKind k) {
    switch (k) {
        case AnomalyKind::Frequency: return "frequency";
        case AnomalyKind::Bandwidth: return "bandwidth";
        case AnomalyKind::Strength: return "strength";
        case AnomalyKind::Snr: return "snr";
    }
    return "?";
}

std::vector<Cscp> extract_cscps(const StateSequence& seq) {
    std::vector<Cscp> out;
    const auto& bits = seq.bits;
    const std::size_t n = bits.size();
    if (n < 2) return out;
    std::uint8_t cur = bits[0];
    std::size_t i = 1;
    while (i < n) {
        // Skip the run of bytes equal to the current state eight at a time.
        const std::uint64_t pattern = UINT64_C(0x0101010101010101) * cur;
        while (i + 8 <= n) {
            std::uint64_t word;
            std::memcpy(&word, bits.data() + i, 8);
            if (word != pattern) break;
            i += 8;
        }
        while (i < n && bits[i] == cur) ++i;
        if (i == n) break;
        out.push_back({static_cast<std::int64_t>(i),
                       bits[i] ? CscpKind::Rising : CscpKind::Falling});
        cur = bits[i];
        ++i;
    }
    return out;
}

bool cscp_in_slice(const Cscp& c, std::int64_t lo, std::int64_t hi) {
    if (lo < c.location && c.location < hi) return true;
    if (c.location == lo && c.kind == CscpKind::Rising) return true;
    if (c.location == hi && c.kind == CscpKind::Falling) return true;
    return false;
}

std::vector<Cscp> cscps_in_slice(const std::vector<Cscp>& cscps,
                                 std::int64_t lo, std::int64_t hi) {
    std::vector<Cscp> out;
    for (const Cscp& c : cscps) {
        if (c.location > hi) break;
        if (cscp_in_slice(c, lo, hi)) out.push_back(c);
    }
    return out;
}

}  // namespace astf

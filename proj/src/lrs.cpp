#include "qrngkit/lrs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qrngkit::sp90b {

namespace {

// Prefix-doubling suffix array: sort by the first 2^k symbols, doubling k.
std::vector<int> suffix_array(std::span<const uint8_t> s) {
    const int n = static_cast<int>(s.size());
    std::vector<int> sa(n), rank(n), next_rank(n);
    std::iota(sa.begin(), sa.end(), 0);
    for (int i = 0; i < n; ++i) rank[i] = s[i];

    for (int k = 1;; k *= 2) {
        auto cmp = [&](int a, int b) {
            if (rank[a] != rank[b]) return rank[a] < rank[b];
            const int ra = a + k < n ? rank[a + k] : -1;
            const int rb = b + k < n ? rank[b + k] : -1;
            return ra < rb;
        };
        std::sort(sa.begin(), sa.end(), cmp);
        next_rank[sa[0]] = 0;
        for (int i = 1; i < n; ++i)
            next_rank[sa[i]] = next_rank[sa[i - 1]] + (cmp(sa[i - 1], sa[i]) ? 1 : 0);
        rank = next_rank;
        if (rank[sa[n - 1]] == n - 1) break;
    }
    return sa;
}

// Kasai: LCP of each suffix with its predecessor in suffix-array order.
std::vector<int> lcp_array(std::span<const uint8_t> s, const std::vector<int>& sa) {
    const int n = static_cast<int>(s.size());
    std::vector<int> rank(n), lcp(n, 0);
    for (int i = 0; i < n; ++i) rank[sa[i]] = i;
    int h = 0;
    for (int i = 0; i < n; ++i) {
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        const int j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
        lcp[rank[i]] = h;
        if (h > 0) --h;
    }
    return lcp;
}

}  // namespace

size_t lrs_length(std::span<const uint8_t> symbols) {
    if (symbols.size() < 2) throw std::invalid_argument("lrs_length: need at least 2 symbols");
    const std::vector<int> sa = suffix_array(symbols);
    const std::vector<int> lcp = lcp_array(symbols, sa);
    int best = 0;
    for (size_t i = 1; i < lcp.size(); ++i) best = std::max(best, lcp[i]);
    return static_cast<size_t>(best);
}

size_t lrs_length(const BitString& group) {
    const std::vector<uint8_t> symbols = group.unpack();
    return lrs_length(std::span<const uint8_t>(symbols));
}

}  // namespace qrngkit::sp90b

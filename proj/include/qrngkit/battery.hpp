#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "qrngkit/bitstring.hpp"
#include "qrngkit/execution.hpp"

namespace qrngkit::sp90b {

/// NIST SP 800-90B restart sanity threshold on the worst-group MCV p-value.
inline constexpr double kSanityThreshold = 0.000005;
/// Per-group p-value threshold shared by the three IID tests.
inline constexpr double kIidThreshold = 0.001;

/// Bits collected across fresh generator restarts, one restart per row,
/// stored row-major.
struct RestartMatrix {
    size_t rows = 0;
    size_t cols = 0;
    BitString bits;

    int bit(size_t r, size_t c) const { return bits.bit(r * cols + c); }

    bool operator==(const RestartMatrix&) const = default;

    /// Validates bits.size() == rows * cols.
    static RestartMatrix from_bits(BitString bits, size_t rows, size_t cols);
};

enum class GroupAxis : uint8_t { row, column };

struct GroupId {
    GroupAxis axis = GroupAxis::row;
    size_t index = 0;

    bool operator==(const GroupId&) const = default;
};

/// Per-group statistics across the battery's four tests.
struct GroupStats {
    GroupId id;
    size_t length = 0;
    uint64_t mcv = 0;
    double chi2_independence = 0.0;
    double p_independence = 0.0;
    double chi2_gf = 0.0;
    double p_gf = 0.0;
    uint64_t lrs_len = 0;
    double p_lrs = 0.0;

    bool operator==(const GroupStats&) const = default;
};

struct SanityResult {
    uint64_t global_mcv = 0;
    double min_entropy = 0.0;
    double p_value = 0.0;
    bool pass = false;
    GroupId worst_group;
    size_t worst_group_length = 0;

    bool operator==(const SanityResult&) const = default;
};

/// Per-test aggregate over all groups.
struct TestAggregate {
    double median_p = 0.0;
    double min_p = 0.0;
    size_t below_threshold = 0;
    double threshold = kIidThreshold;
    bool all_above_threshold = false;

    bool operator==(const TestAggregate&) const = default;
};

struct BatteryReport {
    size_t rows = 0;
    size_t cols = 0;
    size_t group_count = 0;
    SanityResult sanity;
    TestAggregate independence;
    TestAggregate goodness_of_fit;
    TestAggregate lrs;
    std::vector<GroupStats> groups;  // rows first, then columns

    bool operator==(const BatteryReport&) const = default;
};

/// One uninterrupted generator session producing the requested bit count.
using BitSource = std::function<BitString(uint64_t nbits)>;

/// One fresh-start session per call; restart_index identifies the session.
using RestartFactory = std::function<BitString(size_t restart_index, uint64_t nbits)>;

/// Exactly nbits from a single source call. Throws DataError if the source
/// under- or over-delivers; source exceptions propagate.
BitString collect_sequential(const BitSource& source, uint64_t nbits);

/// Row i holds session i's bits. A failing session aborts with DataError
/// naming the row (partial data is discarded).
RestartMatrix collect_restart(const RestartFactory& factory, size_t restarts,
                              size_t bits_per_restart,
                              Execution exec = Execution::parallel);

/// All rows, then all columns: rows + cols groups.
std::vector<BitString> extract_groups(const RestartMatrix& matrix);
BitString extract_group(const RestartMatrix& matrix, GroupId id);

/// max(count of zeros, count of ones). Requires a non-empty group.
uint64_t mcv_count(const BitString& group);

struct Chi2Result {
    double chi2 = 0.0;
    double p = 0.0;
};

/// Splits the group into 10 equal blocks and chi-square-tests the per-block
/// 0/1 counts against a fair split; df = 9. Requires length divisible by 10.
Chi2Result independence_test(const BitString& group);

/// Counts the 16 patterns over consecutive non-overlapping 4-bit nibbles
/// (first bit of the nibble is the pattern's MSB) and chi-square-tests them
/// against uniform; df = 14. Requires length divisible by 4.
Chi2Result gf_test(const BitString& group);

/// Battery policy for the LRS p-value: a group with no repeated substring
/// (lrs_len = 0) reports p = 1; otherwise lrs_pvalue(lrs_len, group_length).
double lrs_group_pvalue(uint64_t lrs_len, size_t group_length);

/// All four tests on one group.
GroupStats evaluate_group(GroupId id, const BitString& group);

/// Worst-group MCV over all groups, its binary min-entropy and exact
/// binomial p-value, pass iff p >= kSanityThreshold. Ties on MCV resolve to
/// the first group in rows-then-columns order.
SanityResult sanity_test(const RestartMatrix& matrix);

/// Full battery: every group through all four tests, plus aggregates.
/// Requires rows % 20 == 0 and cols % 20 == 0 (10 equal independence blocks
/// and whole GF nibbles for both group axes). The report is identical for
/// serial and parallel execution.
BatteryReport run_battery(const RestartMatrix& matrix, Execution exec = Execution::parallel);

}  // namespace qrngkit::sp90b

#include "qrngkit/battery.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qrngkit/errors.hpp"
#include "qrngkit/lrs.hpp"
#include "qrngkit/stats.hpp"

namespace qrngkit::sp90b {

RestartMatrix RestartMatrix::from_bits(BitString bits, size_t rows, size_t cols) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("RestartMatrix: rows and cols must be >= 1");
    if (bits.size() != rows * cols)
        throw std::invalid_argument("RestartMatrix: got " + std::to_string(bits.size()) +
                                    " bits for a " + std::to_string(rows) + "x" +
                                    std::to_string(cols) + " matrix");
    return RestartMatrix{rows, cols, std::move(bits)};
}

BitString collect_sequential(const BitSource& source, uint64_t nbits) {
    if (nbits == 0) throw std::invalid_argument("collect_sequential: nbits must be >= 1");
    BitString bits = source(nbits);
    if (bits.size() != nbits)
        throw DataError("collect_sequential: source delivered " + std::to_string(bits.size()) +
                        " of " + std::to_string(nbits) + " bits");
    return bits;
}

RestartMatrix collect_restart(const RestartFactory& factory, size_t restarts,
                              size_t bits_per_restart, Execution exec) {
    if (restarts == 0 || bits_per_restart == 0)
        throw std::invalid_argument("collect_restart: restarts and bits_per_restart must be >= 1");

    std::vector<BitString> row_bits(restarts);
    std::vector<std::string> failures(restarts);

    auto run_row = [&](size_t r) {
        try {
            BitString bits = factory(r, bits_per_restart);
            if (bits.size() != bits_per_restart)
                failures[r] = "delivered " + std::to_string(bits.size()) + " of " +
                              std::to_string(bits_per_restart) + " bits";
            else
                row_bits[r] = std::move(bits);
        } catch (const std::exception& e) {
            failures[r] = e.what();
        }
    };

    if (exec == Execution::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int64_t r = 0; r < static_cast<int64_t>(restarts); ++r)
            run_row(static_cast<size_t>(r));
    } else {
        for (size_t r = 0; r < restarts; ++r) run_row(r);
    }

    for (size_t r = 0; r < restarts; ++r)
        if (!failures[r].empty())
            throw DataError("collect_restart: restart " + std::to_string(r) +
                            " failed (partial data discarded): " + failures[r]);

    BitString all;
    for (const BitString& row : row_bits) all.append(row);
    return RestartMatrix::from_bits(std::move(all), restarts, bits_per_restart);
}

BitString extract_group(const RestartMatrix& matrix, GroupId id) {
    if (id.axis == GroupAxis::row) {
        if (id.index >= matrix.rows) throw std::out_of_range("extract_group: row past end");
        return matrix.bits.slice(id.index * matrix.cols, matrix.cols);
    }
    if (id.index >= matrix.cols) throw std::out_of_range("extract_group: column past end");
    BitString out(matrix.rows);
    for (size_t r = 0; r < matrix.rows; ++r)
        if (matrix.bit(r, id.index)) out.set_bit(r, 1);
    return out;
}

std::vector<BitString> extract_groups(const RestartMatrix& matrix) {
    std::vector<BitString> groups;
    groups.reserve(matrix.rows + matrix.cols);
    for (size_t r = 0; r < matrix.rows; ++r)
        groups.push_back(extract_group(matrix, {GroupAxis::row, r}));
    for (size_t c = 0; c < matrix.cols; ++c)
        groups.push_back(extract_group(matrix, {GroupAxis::column, c}));
    return groups;
}

uint64_t mcv_count(const BitString& group) {
    if (group.empty()) throw std::invalid_argument("mcv_count: empty group");
    const uint64_t ones = group.count_ones();
    return std::max<uint64_t>(ones, group.size() - ones);
}

Chi2Result independence_test(const BitString& group) {
    constexpr size_t kBlocks = 10;
    const size_t n = group.size();
    if (n == 0 || n % kBlocks != 0)
        throw std::invalid_argument("independence_test: length must be a positive multiple of 10");
    const size_t block_len = n / kBlocks;
    const double expected = static_cast<double>(block_len) / 2.0;

    double chi2 = 0.0;
    for (size_t b = 0; b < kBlocks; ++b) {
        size_t ones = 0;
        for (size_t i = 0; i < block_len; ++i) ones += static_cast<size_t>(group.bit(b * block_len + i));
        const double d1 = static_cast<double>(ones) - expected;
        const double d0 = static_cast<double>(block_len - ones) - expected;
        chi2 += (d1 * d1 + d0 * d0) / expected;
    }
    return {chi2, chi2_survival(chi2, 9)};
}

Chi2Result gf_test(const BitString& group) {
    const size_t n = group.size();
    if (n == 0 || n % 4 != 0)
        throw std::invalid_argument("gf_test: length must be a positive multiple of 4");
    const size_t nibbles = n / 4;
    const double expected = static_cast<double>(nibbles) / 16.0;

    std::array<size_t, 16> counts{};
    for (size_t j = 0; j < nibbles; ++j) {
        const size_t base = j * 4;
        const int pattern = (group.bit(base) << 3) | (group.bit(base + 1) << 2) |
                            (group.bit(base + 2) << 1) | group.bit(base + 3);
        ++counts[static_cast<size_t>(pattern)];
    }
    double chi2 = 0.0;
    for (size_t obs : counts) {
        const double d = static_cast<double>(obs) - expected;
        chi2 += d * d / expected;
    }
    // df 14 is what SP 800-90B's formulation of this test prescribes.
    return {chi2, chi2_survival(chi2, 14)};
}

double lrs_group_pvalue(uint64_t lrs_len, size_t group_length) {
    if (lrs_len == 0) return 1.0;
    return lrs_pvalue(static_cast<unsigned>(lrs_len), group_length);
}

GroupStats evaluate_group(GroupId id, const BitString& group) {
    GroupStats stats;
    stats.id = id;
    stats.length = group.size();
    stats.mcv = mcv_count(group);
    const Chi2Result ind = independence_test(group);
    stats.chi2_independence = ind.chi2;
    stats.p_independence = ind.p;
    const Chi2Result gf = gf_test(group);
    stats.chi2_gf = gf.chi2;
    stats.p_gf = gf.p;
    stats.lrs_len = lrs_length(group);
    stats.p_lrs = lrs_group_pvalue(stats.lrs_len, group.size());
    return stats;
}

namespace {

// Worst group = largest MCV; ties resolve to the earliest group in
// rows-then-columns order so parallel evaluation stays deterministic.
SanityResult sanity_from_mcvs(const std::vector<uint64_t>& mcvs,
                              const std::vector<size_t>& lengths,
                              const std::vector<GroupId>& ids) {
    size_t worst = 0;
    for (size_t g = 1; g < mcvs.size(); ++g)
        if (mcvs[g] > mcvs[worst]) worst = g;

    SanityResult out;
    out.global_mcv = mcvs[worst];
    out.worst_group = ids[worst];
    out.worst_group_length = lengths[worst];
    out.min_entropy = binary_min_entropy(out.global_mcv, out.worst_group_length);
    out.p_value = binomial_mcv_pvalue(out.global_mcv, out.worst_group_length);
    out.pass = out.p_value >= kSanityThreshold;
    return out;
}

double median_sorted(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

TestAggregate aggregate(const std::vector<double>& pvalues) {
    TestAggregate agg;
    agg.median_p = median_sorted(pvalues);
    agg.min_p = *std::min_element(pvalues.begin(), pvalues.end());
    agg.below_threshold =
        static_cast<size_t>(std::count_if(pvalues.begin(), pvalues.end(),
                                          [](double p) { return p < kIidThreshold; }));
    agg.threshold = kIidThreshold;
    agg.all_above_threshold = agg.below_threshold == 0;
    return agg;
}

std::vector<GroupId> group_ids(const RestartMatrix& matrix) {
    std::vector<GroupId> ids;
    ids.reserve(matrix.rows + matrix.cols);
    for (size_t r = 0; r < matrix.rows; ++r) ids.push_back({GroupAxis::row, r});
    for (size_t c = 0; c < matrix.cols; ++c) ids.push_back({GroupAxis::column, c});
    return ids;
}

}  // namespace

SanityResult sanity_test(const RestartMatrix& matrix) {
    const std::vector<GroupId> ids = group_ids(matrix);
    std::vector<uint64_t> mcvs(ids.size());
    std::vector<size_t> lengths(ids.size());
    for (size_t g = 0; g < ids.size(); ++g) {
        const BitString group = extract_group(matrix, ids[g]);
        mcvs[g] = mcv_count(group);
        lengths[g] = group.size();
    }
    return sanity_from_mcvs(mcvs, lengths, ids);
}

BatteryReport run_battery(const RestartMatrix& matrix, Execution exec) {
    if (matrix.rows % 20 != 0 || matrix.cols % 20 != 0)
        throw std::invalid_argument(
            "run_battery: rows and cols must be multiples of 20 (got " +
            std::to_string(matrix.rows) + "x" + std::to_string(matrix.cols) + ")");

    const std::vector<GroupId> ids = group_ids(matrix);
    const size_t ngroups = ids.size();

    // Aggregation is by group index, so the report is independent of the
    // order groups finish in.
    std::vector<GroupStats> stats(ngroups);
    if (exec == Execution::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int64_t g = 0; g < static_cast<int64_t>(ngroups); ++g) {
            const size_t i = static_cast<size_t>(g);
            stats[i] = evaluate_group(ids[i], extract_group(matrix, ids[i]));
        }
    } else {
        for (size_t g = 0; g < ngroups; ++g)
            stats[g] = evaluate_group(ids[g], extract_group(matrix, ids[g]));
    }

    BatteryReport report;
    report.rows = matrix.rows;
    report.cols = matrix.cols;
    report.group_count = ngroups;
    report.groups = std::move(stats);

    std::vector<uint64_t> mcvs(ngroups);
    std::vector<size_t> lengths(ngroups);
    std::vector<double> p_ind(ngroups), p_gf(ngroups), p_lrs(ngroups);
    for (size_t g = 0; g < ngroups; ++g) {
        mcvs[g] = report.groups[g].mcv;
        lengths[g] = report.groups[g].length;
        p_ind[g] = report.groups[g].p_independence;
        p_gf[g] = report.groups[g].p_gf;
        p_lrs[g] = report.groups[g].p_lrs;
    }
    report.sanity = sanity_from_mcvs(mcvs, lengths, ids);
    report.independence = aggregate(p_ind);
    report.goodness_of_fit = aggregate(p_gf);
    report.lrs = aggregate(p_lrs);
    return report;
}

}  // namespace qrngkit::sp90b

// Benchmark: support-counting kernels on a synthetic corpus. Compares the
// naive row-scan reference, the serial bit-vector kernel, and the
// OpenMP-parallel bit-vector kernel on the same level-2 candidate set, then
// times the full miner at 1 and N threads. All variants must agree exactly;
// the benchmark aborts if they ever disagree.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "rulemine/apriori.hpp"
#include "rulemine/synthetic.hpp"
#include "rulemine/transactions.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t row_scan_count(const rulemine::TransactionSet& tset,
                             const std::vector<rulemine::ItemId>& itemset) {
    std::uint64_t count = 0;
    for (const rulemine::Transaction& row : tset.rows()) {
        bool contains_all = true;
        for (rulemine::ItemId item : itemset) {
            if (!std::binary_search(row.items.begin(), row.items.end(), item)) {
                contains_all = false;
                break;
            }
        }
        if (contains_all) ++count;
    }
    return count;
}

void set_threads(int threads) {
#ifdef _OPENMP
    omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace

int main(int argc, char** argv) {
    rulemine::synth::CorpusSpec spec;
    spec.documents = 6000;
    spec.vocabulary = 8000;
    double min_support = 0.02;
    std::size_t max_size = 3;
    int threads = hardware_threads();
    std::size_t rowscan_cap = 2000;  // row-scan is slow; cap its candidate count

    CLI::App app{"rulemine-bench — compare support-counting kernels"};
    app.add_option("--docs", spec.documents)->capture_default_str();
    app.add_option("--vocab", spec.vocabulary)->capture_default_str();
    app.add_option("--min-support", min_support)->capture_default_str();
    app.add_option("--max-itemset-size", max_size)->capture_default_str();
    app.add_option("--threads", threads)->capture_default_str();
    app.add_option("--seed", spec.seed)->capture_default_str();
    app.add_option("--rowscan-cap", rowscan_cap)->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    std::cout << "corpus: docs=" << spec.documents << " vocab=" << spec.vocabulary
              << " seed=" << spec.seed << "\n";
    auto docs = rulemine::synth::token_lists(spec);
    auto vocab = rulemine::Vocabulary::build(docs);
    auto tset = rulemine::TransactionSet::encode(docs, vocab);
    std::cout << "encoded: n=" << tset.transaction_count() << " v=" << tset.vocab_size()
              << "\n\n";

    rulemine::MiningParams params{min_support, max_size};
    auto level1 = rulemine::frequent_1_itemsets(tset, params);
    auto candidates = rulemine::candidate_prune(rulemine::candidate_join(level1), level1);
    std::cout << "level-2 kernel: " << level1.size() << " frequent items, "
              << candidates.size() << " candidates\n";

    // Serial bit-vector kernel.
    std::vector<std::uint64_t> bitvec_counts(candidates.size());
    auto t0 = Clock::now();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bitvec_counts[i] = tset.support_count(candidates[i]);
    }
    const double bitvec_ms = ms_since(t0);
    std::cout << "  bit-vector serial   " << bitvec_ms << " ms\n";

    // OpenMP bit-vector kernel.
    set_threads(threads);
    std::vector<std::uint64_t> parallel_counts(candidates.size());
    t0 = Clock::now();
    const std::int64_t num_candidates = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < num_candidates; ++i) {
        parallel_counts[static_cast<std::size_t>(i)] =
            tset.support_count(candidates[static_cast<std::size_t>(i)]);
    }
    const double parallel_ms = ms_since(t0);
    std::cout << "  bit-vector omp(" << threads << ")   " << parallel_ms << " ms  (speedup x"
              << (parallel_ms > 0 ? bitvec_ms / parallel_ms : 0.0) << ")\n";

    // Row-scan reference on a capped slice.
    const std::size_t scan_n = std::min(rowscan_cap, candidates.size());
    std::vector<std::uint64_t> scan_counts(scan_n);
    t0 = Clock::now();
    for (std::size_t i = 0; i < scan_n; ++i) {
        scan_counts[i] = row_scan_count(tset, candidates[i]);
    }
    const double scan_ms = ms_since(t0);
    std::cout << "  row-scan reference  " << scan_ms << " ms for " << scan_n
              << " candidates (x" << (scan_ms > 0 ? (scan_ms / scan_n) / (bitvec_ms / candidates.size()) : 0.0)
              << " per candidate vs serial bit-vector)\n";

    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (bitvec_counts[i] != parallel_counts[i] ||
            (i < scan_n && bitvec_counts[i] != scan_counts[i])) {
            std::cerr << "KERNEL MISMATCH at candidate " << i << "\n";
            return 1;
        }
    }
    std::cout << "  all kernels agree\n\n";

    // Full miner, serial vs parallel.
    set_threads(1);
    t0 = Clock::now();
    auto table_serial = rulemine::mine_frequent_itemsets(tset, params);
    const double mine_serial_ms = ms_since(t0);
    std::cout << "full mine (threads=1): " << mine_serial_ms << " ms, "
              << table_serial.total_itemsets() << " frequent itemsets\n";

    set_threads(threads);
    t0 = Clock::now();
    auto table_parallel = rulemine::mine_frequent_itemsets(tset, params);
    const double mine_parallel_ms = ms_since(t0);
    std::cout << "full mine (threads=" << threads << "): " << mine_parallel_ms << " ms  (speedup x"
              << (mine_parallel_ms > 0 ? mine_serial_ms / mine_parallel_ms : 0.0) << ")\n";

    for (const auto& [size, level] : table_serial.by_size) {
        const auto& other = table_parallel.by_size.at(size);
        for (std::size_t i = 0; i < level.size(); ++i) {
            if (level[i].items != other[i].items || level[i].count != other[i].count) {
                std::cerr << "MINER MISMATCH at size " << size << " index " << i << "\n";
                return 1;
            }
        }
    }
    std::cout << "serial and parallel miners agree\n";
    return 0;
}

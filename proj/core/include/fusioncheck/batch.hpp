#pragma once

#include "fusioncheck/criteria.hpp"
#include "fusioncheck/io.hpp"

#include <string>
#include <vector>

namespace fusioncheck {

struct BatchConfig {
    EvalConfig eval;
    long long primary_n = 3;
    SearchBudget search{2, 3, true};
    bool run_search = true;
    unsigned threads = 0;  // 0 = hardware concurrency (or FUSIONCHECK_THREADS)
};

struct BatchEntry {
    std::string file;
    std::string name;
    bool ok = false;
    std::string error;
    int rank = 0;
    bool commutative = false;
    std::vector<double> dims;
    PsdVerdict primary;
    std::optional<Witness> witness;
    double elapsed_ms = 0.0;
};

struct BatchReport {
    std::vector<BatchEntry> entries;  // sorted by file name
    int holds = 0, violated = 0, inconclusive = 0, errors = 0;
    io::Json to_json(bool include_timings = true) const;
};

/// Runs the default criterion suite (primary n + the violation search) over
/// every *.ring file in the directory. File-level parallelism; results merged
/// in sorted-filename order so reports are deterministic.
BatchReport batch_run(const std::string& dir, const BatchConfig& cfg = {});

}  // namespace fusioncheck

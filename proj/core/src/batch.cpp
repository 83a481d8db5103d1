#include "fusioncheck/batch.hpp"

#include "fusioncheck/version.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <thread>

namespace fusioncheck {

namespace fs = std::filesystem;

namespace {

unsigned thread_count(const BatchConfig& cfg) {
    if (const char* env = std::getenv("FUSIONCHECK_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    if (cfg.threads > 0) return cfg.threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

BatchEntry process_file(const std::string& path, const BatchConfig& cfg) {
    BatchEntry e;
    e.file = fs::path(path).filename().string();
    auto t0 = std::chrono::steady_clock::now();
    try {
        FusionRing ring = io::parse_ring(path);
        e.name = ring.name();
        e.rank = ring.rank();
        e.commutative = ring.commutative();
        e.dims = ring.dims().d;
        e.primary = check_primary(ring, cfg.primary_n, cfg.eval);
        if (cfg.run_search) e.witness = search_violation(ring, cfg.search, cfg.eval);
        e.ok = true;
    } catch (const std::exception& ex) {
        e.error = ex.what();
    }
    e.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return e;
}

}  // namespace

io::Json BatchReport::to_json(bool include_timings) const {
    io::Json j;
    j["schema_version"] = 1;
    j["tool_version"] = kVersion;
    io::Json files = io::Json::array();
    for (const auto& e : entries) {
        io::Json fj;
        fj["file"] = e.file;
        if (!e.ok) {
            fj["error"] = e.error;
        } else {
            fj["name"] = e.name;
            fj["rank"] = e.rank;
            fj["commutative"] = e.commutative;
            io::Json dims = io::Json::array();
            for (double d : e.dims) dims.push_back(d);
            fj["dims"] = dims;
            fj["primary"] = io::verdict_to_json(e.primary);
            if (e.witness)
                fj["witness"] = io::witness_to_json(*e.witness);
            else
                fj["witness"] = nullptr;
        }
        if (include_timings) fj["time_ms"] = e.elapsed_ms;
        files.push_back(fj);
    }
    j["files"] = files;
    io::Json summary;
    summary["holds"] = holds;
    summary["violated"] = violated;
    summary["inconclusive"] = inconclusive;
    summary["errors"] = errors;
    j["summary"] = summary;
    return j;
}

BatchReport batch_run(const std::string& dir, const BatchConfig& cfg) {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".ring")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());

    BatchReport report;
    report.entries.resize(files.size());
    const unsigned threads = std::min<unsigned>(thread_count(cfg), std::max<size_t>(files.size(), 1));
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t idx = next.fetch_add(1);
            if (idx >= files.size()) break;
            report.entries[idx] = process_file(files[idx], cfg);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (const auto& e : report.entries) {
        if (!e.ok) {
            ++report.errors;
            continue;
        }
        bool violated = e.primary.violated() || (e.witness && e.witness.has_value());
        bool inconclusive = e.primary.kind == PsdVerdict::Kind::Inconclusive;
        if (violated)
            ++report.violated;
        else if (inconclusive)
            ++report.inconclusive;
        else
            ++report.holds;
    }
    return report;
}

}  // namespace fusioncheck

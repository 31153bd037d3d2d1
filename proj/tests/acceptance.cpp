// Acceptance suite: one PASS/FAIL line per criterion. Each criterion runs on a
// fresh pipeline with the count cache disabled, so the timings include counting.
#include "octic/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <map>

using namespace octic;

namespace {

// wall clock limits in seconds
const std::map<int, double> kLimits{
    {1, 1},   {2, 1},    {3, 40},  {4, 130}, {5, 30},  {6, 5},  {7, 60},
    {8, 10},  {9, 1},    {10, 120}, {11, 30}, {12, 5}, {13, 5}, {14, 1},
};

} // namespace

int main()
{
    PipelineConfig cfg = PipelineConfig::defaults();
    cfg.cache_dir.clear();
    cfg.benchmark = false;

    int failed = 0;
    for (auto [n, limit] : kLimits) {
        auto t0 = std::chrono::steady_clock::now();
        ReportEntry e;
        try {
            Pipeline pl(cfg);
            e = pl.criterion(n);
        } catch (const std::exception& ex) {
            e.id = "criterion-" + std::to_string(n);
            e.status = Status::Fail;
            e.observed = std::string("error: ") + ex.what();
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = e.status == Status::Pass && s <= limit;
        failed += !ok;
        std::printf("%s criterion-%d %s (%.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", n, e.title.c_str(), s,
                    limit);
        std::printf("    expected: %s\n    observed: %s\n", e.expected.c_str(), e.observed.c_str());
        if (e.status == Status::Pass && s > limit)
            std::printf("    over the time limit\n");
        std::fflush(stdout);
    }
    std::printf("SKIPPED benchmark-fp2-p31 (F_{31^2} tier, run `octic verify thm-x --benchmark`)\n");
    std::printf("%d of %zu criteria failed\n", failed, kLimits.size());
    return failed ? 1 : 0;
}

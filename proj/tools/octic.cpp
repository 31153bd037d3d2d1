// octic: command line front end of the verification pipeline.
#include "octic/pipeline.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

using namespace octic;

namespace {

// q = p or p^2
std::pair<uint32_t, int> split_q(uint64_t q)
{
    if (is_prime(q))
        return {static_cast<uint32_t>(q), 1};
    uint64_t r = static_cast<uint64_t>(isqrt(static_cast<int64_t>(q)));
    if (r * r == q && is_prime(r))
        return {static_cast<uint32_t>(r), 2};
    throw std::invalid_argument("q = " + std::to_string(q) + " is neither a prime nor the square of one");
}

void print_cache_warnings(const std::string& dir)
{
    if (dir.empty())
        return;
    CountCache c(dir);
    c.get("", 0, "");
    for (auto& w : c.warnings())
        std::cerr << "warning: " << w << "\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Point counts, trace extraction and verification reports for Maschke's octic"};
    app.require_subcommand(1);

    std::string config_path, cache_dir, format = "human";
    bool no_cache = false, benchmark = false;
    unsigned workers = 0;
    int64_t prime_bound = 0;
    app.add_option("--config", config_path, "JSON configuration file")->check(CLI::ExistingFile);
    app.add_option("--cache-dir", cache_dir, "count cache directory (overrides config and OCTIC_CACHE_DIR)");
    app.add_flag("--no-cache", no_cache, "do not read or write the count cache");
    app.add_option("--workers", workers, "counting threads");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "thm-x | thm-y | thm-s | fsl | mod4 | k3-chain | characters | all")
        ->required()
        ->check(CLI::IsMember(Pipeline::suites()));
    verify->add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
    verify->add_flag("--benchmark", benchmark, "include the F_{31^2} tier");
    verify->add_option("--prime-bound", prime_bound, "largest prime for per-prime trace entries");

    auto* count = app.add_subcommand("count", "count points of a catalog model");
    std::string model = "X", twist = "id";
    uint64_t q = 0;
    count->add_option("--model", model, "S, S1, X, S2, S3, S4, S4_aux, S5")->required();
    count->add_option("--q", q, "field size p or p^2")->required();
    count->add_option("--twist", twist, "id, i1, i2, i3 (X only)");

    auto* extract = app.add_subcommand("extract", "Frobenius traces on the pieces of X at p");
    int64_t p = 0;
    extract->add_option("--p", p, "prime")->required();

    auto* bench = app.add_subcommand("bench", "time the counting engine");
    std::vector<uint64_t> bench_q{169, 361, 961};
    bench->add_option("--q", bench_q, "field sizes");

    auto* show = app.add_subcommand("config", "print the effective configuration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        PipelineConfig cfg = config_path.empty() ? PipelineConfig::defaults() : PipelineConfig::load(config_path);
        if (!cache_dir.empty())
            cfg.cache_dir = cache_dir;
        if (no_cache)
            cfg.cache_dir.clear();
        if (workers)
            cfg.workers = workers;
        if (benchmark)
            cfg.benchmark = true;
        if (prime_bound)
            cfg.prime_bound = prime_bound;

        if (*show) {
            cfg.validate();
            std::cout << cfg.to_json_text() << "\n";
            return 0;
        }
        print_cache_warnings(cfg.cache_dir);
        Pipeline pl(cfg);

        if (*verify) {
            VerificationReport r = pl.run(suite);
            std::cout << emit_report(r, format == "machine" ? ReportFormat::Machine : ReportFormat::Human);
            return r.ok() ? 0 : 1;
        }
        if (*count) {
            auto [pp, deg] = split_q(q);
            Twist t = parse_twist(twist);
            uint64_t n = pl.count(model, pp, deg, t);
            std::cout << model << " " << twist << " q=" << q << " count=" << n;
            if (model == "X")
                std::cout << " h3_trace=" << h3_trace(n, q);
            std::cout << "\n";
            return 0;
        }
        if (*extract) {
            GeometricTraces g = pl.geometric_traces(p);
            std::cout << "p=" << p << " a120=" << g.traces.a120 << " a120E=" << g.traces.a120E
                      << " a24B=" << g.traces.a24B << " a15C=" << g.traces.a15C << " (" << g.method;
            if (g.candidates > 1)
                std::cout << ", " << g.candidates << " candidates before the F_{p^2} filter";
            std::cout << ")\n";
            return 0;
        }
        if (*bench) {
            for (uint64_t bq : bench_q) {
                auto [bp, deg] = split_q(bq);
                Field F(bp, deg);
                CountOptions opt;
                opt.workers = cfg.workers;
                for (Twist t : {Twist::Id, Twist::I1, Twist::I2, Twist::I3}) {
                    auto t0 = std::chrono::steady_clock::now();
                    uint64_t n = t == Twist::Id
                                     ? count_double_cover(maschke_catalog().X, F, opt)
                                     : count_frobenius_twist(make_twisted(maschke_catalog().X, t), F, opt);
                    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                    std::printf("q=%-6llu %-3s count=%-14llu %8.3f s\n", static_cast<unsigned long long>(bq),
                                twist_name(t), static_cast<unsigned long long>(n), s);
                }
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

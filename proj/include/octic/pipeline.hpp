#pragma once

#include "octic/count.hpp"
#include "octic/galois.hpp"
#include "octic/k3.hpp"
#include "octic/lefschetz.hpp"
#include "octic/modforms.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace octic {

extern const char* const kToolkitVersion;

struct PipelineConfig {
    int64_t prime_bound = 73;
    bool benchmark = false; // F_{31^2} extraction tier
    std::string newforms_path;
    std::string modpoly2_path;
    std::string modpoly3_path;
    std::string cache_dir; // empty disables the cache
    unsigned workers = 1;
    bool calibrate = true; // fit the character convention against the counts

    // defaults, with OCTIC_CACHE_DIR as the cache directory when set
    static PipelineConfig defaults();
    // overrides from a JSON object; unknown keys are rejected
    static PipelineConfig from_json_text(const std::string& text, PipelineConfig base = defaults());
    static PipelineConfig load(const std::string& path);
    std::string to_json_text() const;
    void validate() const;
};

uint64_t fnv1a(const std::string& s);

struct CacheRecord {
    std::string model_hash;
    uint64_t q = 0;
    std::string twist;
    uint64_t count = 0;
    std::string version;
    uint64_t checksum = 0;

    uint64_t compute_checksum() const;
    std::string line() const;
    static std::optional<CacheRecord> parse(const std::string& line);
};

// Append-only count log (counts.log in the cache directory).
class CountCache {
public:
    explicit CountCache(std::string dir, std::string version = kToolkitVersion);
    std::optional<uint64_t> get(const std::string& model_hash, uint64_t q, const std::string& twist);
    void put(const std::string& model_hash, uint64_t q, const std::string& twist, uint64_t count);
    const std::vector<std::string>& warnings() const { return warnings_; }
    std::string path() const;

private:
    std::string dir_, version_;
    std::mutex mu_;
    bool loaded_ = false;
    std::map<std::string, uint64_t> mem_;
    std::vector<std::string> warnings_;
    void load();
    static std::string key(const std::string& h, uint64_t q, const std::string& t);
};

enum class Status { Pass, Fail, Skipped };
const char* status_name(Status s);

struct ReportEntry {
    std::string id;
    std::string title;
    Status status = Status::Fail;
    std::string expected;
    std::string observed;
    std::string provenance; // paper table, data file, or derived oracle
    double seconds = 0;
};

struct VerificationReport {
    std::string suite;
    std::vector<ReportEntry> entries;
    std::map<std::string, std::string> conventions;

    bool ok() const;
    const ReportEntry* find(const std::string& id) const;
};

enum class ReportFormat { Human, Machine };
std::string emit_report(const VerificationReport& r, ReportFormat f);

struct GeometricTraces {
    XTraces traces;
    std::string method;
    int candidates = 1;
};

class Pipeline {
public:
    explicit Pipeline(PipelineConfig cfg);

    const PipelineConfig& config() const { return cfg_; }
    const NewformTable& forms() const { return forms_; }

    // counts through the cache; model is one of S, S1, X, S2, S3, S4, S4_aux, S5
    uint64_t count(const std::string& model, uint32_t p, int degree, Twist twist = Twist::Id);
    std::array<uint64_t, 4> x_counts(uint32_t p, int degree);

    // (a120, a120E, a24B, a15C) at p from counts of X and its twists
    GeometricTraces geometric_traces(int64_t p);

    // "all" or one of thm-x, thm-y, thm-s, fsl, mod4, k3-chain, characters
    VerificationReport run(const std::string& suite);
    static std::vector<std::string> suites();

    // one entry per acceptance criterion
    ReportEntry criterion(int n);
    CharConvention calibrated_convention(std::string* detail = nullptr);

private:
    PipelineConfig cfg_;
    NewformTable forms_;
    std::optional<CountCache> cache_;
    std::map<std::string, std::string> hashes_;
    std::map<int64_t, GeometricTraces> traces_;
    std::optional<CharConvention> convention_;
    std::string convention_detail_;

    std::string model_hash(const std::string& model, Twist t);
};

} // namespace octic

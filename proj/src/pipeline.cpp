#include "octic/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

namespace octic {

const char* const kToolkitVersion = "0.3.0";

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr int kReportSchema = 1;

bool readable(const std::string& path)
{
    std::ifstream f(path);
    return static_cast<bool>(f);
}

std::string hex16(uint64_t v)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ")
{
    std::string s;
    for (size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + v[i];
    return s;
}

template <class T>
std::string tuple_str(std::initializer_list<T> v)
{
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto& x : v) {
        os << (first ? "" : ", ") << x;
        first = false;
    }
    os << ")";
    return os.str();
}

std::string xt_str(const XTraces& t) { return tuple_str({t.a120, t.a120E, t.a24B, t.a15C}); }
std::string yt_str(const XTraces& t) { return tuple_str({t.a120, t.a120E, t.a24B}); }

std::vector<int64_t> good_primes(int64_t lo, int64_t hi)
{
    std::vector<int64_t> v;
    for (int64_t p = std::max<int64_t>(lo, 7); p <= hi; ++p)
        if (is_prime(static_cast<uint64_t>(p)))
            v.push_back(p);
    return v;
}

int64_t mod(const mpz_class& a, int64_t p)
{
    mpz_class r = a % p;
    if (r < 0)
        r += p;
    return r.get_si();
}

// rational value of an integral mpq reduced mod p
int64_t mod(const mpq_class& a, int64_t p)
{
    if (a.get_den() != 1)
        throw std::domain_error("expected an integer, got " + a.get_str());
    return mod(a.get_num(), p);
}

int64_t mod(int64_t a, int64_t p) { return ((a % p) + p) % p; }

class Stopwatch {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

std::string fp2_str(const Fp2Extraction& x)
{
    std::string s = std::to_string(x.p) + ": rank " + std::to_string(x.rank) + ", residuals " +
                    tuple_str({x.residuals[0], x.residuals[1], x.residuals[2], x.residuals[3]}) + ", candidates";
    for (auto& c : x.candidates)
        s += " " + tuple_str({c[0], c[1], c[2], c[3]});
    return x.candidates.empty() ? s + " none" : s;
}

const std::vector<int64_t> kCriterion3Primes{13, 17, 29, 37, 41, 53, 61, 73};

} // namespace

// ---------------------------------------------------------------- config

PipelineConfig PipelineConfig::defaults()
{
    PipelineConfig c;
    c.newforms_path = default_newform_path();
    c.modpoly2_path = default_modpoly_path(2);
    c.modpoly3_path = default_modpoly_path(3);
    if (const char* d = std::getenv("OCTIC_CACHE_DIR"))
        c.cache_dir = d;
    return c;
}

PipelineConfig PipelineConfig::from_json_text(const std::string& text, PipelineConfig c)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("config: ") + e.what());
    }
    if (!j.is_object())
        throw std::runtime_error("config: expected a JSON object");
    for (auto& [k, v] : j.items()) {
        try {
            if (k == "prime_bound")
                c.prime_bound = v.get<int64_t>();
            else if (k == "benchmark")
                c.benchmark = v.get<bool>();
            else if (k == "newforms")
                c.newforms_path = v.get<std::string>();
            else if (k == "modpoly2")
                c.modpoly2_path = v.get<std::string>();
            else if (k == "modpoly3")
                c.modpoly3_path = v.get<std::string>();
            else if (k == "cache_dir")
                c.cache_dir = v.get<std::string>();
            else if (k == "workers")
                c.workers = v.get<unsigned>();
            else if (k == "calibrate")
                c.calibrate = v.get<bool>();
            else
                throw std::runtime_error("config: unknown key '" + k + "'");
        } catch (const json::type_error&) {
            throw std::runtime_error("config: wrong type for '" + k + "'");
        }
    }
    return c;
}

PipelineConfig PipelineConfig::load(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot read config " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return from_json_text(ss.str());
}

std::string PipelineConfig::to_json_text() const
{
    json j{{"prime_bound", prime_bound}, {"benchmark", benchmark},   {"newforms", newforms_path},
           {"modpoly2", modpoly2_path},  {"modpoly3", modpoly3_path}, {"cache_dir", cache_dir},
           {"workers", workers},         {"calibrate", calibrate}};
    return j.dump(2);
}

void PipelineConfig::validate() const
{
    if (prime_bound < 13)
        throw std::invalid_argument("config: prime_bound must be at least 13");
    if (workers == 0)
        throw std::invalid_argument("config: workers must be positive");
    for (auto* p : {&newforms_path, &modpoly2_path, &modpoly3_path})
        if (!readable(*p))
            throw std::invalid_argument("config: cannot read " + *p);
}

// ---------------------------------------------------------------- cache

uint64_t fnv1a(const std::string& s)
{
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

uint64_t CacheRecord::compute_checksum() const
{
    return fnv1a(model_hash + '\t' + std::to_string(q) + '\t' + twist + '\t' + std::to_string(count) + '\t' +
                 version);
}

std::string CacheRecord::line() const
{
    return model_hash + '\t' + std::to_string(q) + '\t' + twist + '\t' + std::to_string(count) + '\t' + version +
           '\t' + hex16(checksum);
}

std::optional<CacheRecord> CacheRecord::parse(const std::string& line)
{
    std::vector<std::string> f;
    std::istringstream in(line);
    for (std::string w; std::getline(in, w, '\t');)
        f.push_back(w);
    if (f.size() != 6)
        return std::nullopt;
    CacheRecord r;
    try {
        size_t used = 0;
        r.model_hash = f[0];
        r.q = std::stoull(f[1], &used);
        if (used != f[1].size())
            return std::nullopt;
        r.twist = f[2];
        r.count = std::stoull(f[3], &used);
        if (used != f[3].size())
            return std::nullopt;
        r.version = f[4];
        r.checksum = std::stoull(f[5], &used, 16);
        if (used != f[5].size())
            return std::nullopt;
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (r.checksum != r.compute_checksum())
        return std::nullopt;
    return r;
}

CountCache::CountCache(std::string dir, std::string version) : dir_(std::move(dir)), version_(std::move(version)) {}

std::string CountCache::path() const { return (fs::path(dir_) / "counts.log").string(); }

std::string CountCache::key(const std::string& h, uint64_t q, const std::string& t)
{
    return h + '/' + std::to_string(q) + '/' + t;
}

void CountCache::load()
{
    loaded_ = true;
    std::ifstream f(path());
    if (!f)
        return;
    std::string line;
    int ln = 0;
    while (std::getline(f, line)) {
        ++ln;
        if (line.empty())
            continue;
        auto r = CacheRecord::parse(line);
        if (!r) {
            warnings_.push_back(path() + ":" + std::to_string(ln) + ": corrupted record skipped");
            continue;
        }
        if (r->version != version_)
            continue;
        auto k = key(r->model_hash, r->q, r->twist);
        auto it = mem_.find(k);
        if (it != mem_.end() && it->second != r->count) {
            warnings_.push_back(path() + ":" + std::to_string(ln) + ": conflicting record skipped");
            continue;
        }
        mem_[k] = r->count;
    }
}

std::optional<uint64_t> CountCache::get(const std::string& h, uint64_t q, const std::string& t)
{
    std::lock_guard<std::mutex> lock(mu_);
    if (!loaded_)
        load();
    auto it = mem_.find(key(h, q, t));
    if (it == mem_.end())
        return std::nullopt;
    return it->second;
}

void CountCache::put(const std::string& h, uint64_t q, const std::string& t, uint64_t count)
{
    std::lock_guard<std::mutex> lock(mu_);
    if (!loaded_)
        load();
    mem_[key(h, q, t)] = count;
    fs::create_directories(dir_);
    CacheRecord r{h, q, t, count, version_, 0};
    r.checksum = r.compute_checksum();
    std::ofstream f(path(), std::ios::app);
    if (!f)
        throw std::runtime_error("cannot append to " + path());
    f << r.line() << '\n';
}

// ---------------------------------------------------------------- reports

const char* status_name(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::Skipped:
        return "skipped";
    }
    return "?";
}

bool VerificationReport::ok() const
{
    return std::none_of(entries.begin(), entries.end(), [](auto& e) { return e.status == Status::Fail; });
}

const ReportEntry* VerificationReport::find(const std::string& id) const
{
    for (auto& e : entries)
        if (e.id == id)
            return &e;
    return nullptr;
}

std::string emit_report(const VerificationReport& r, ReportFormat f)
{
    int counts[3] = {0, 0, 0};
    for (auto& e : r.entries)
        ++counts[static_cast<int>(e.status)];
    if (f == ReportFormat::Machine) {
        json j;
        j["schema_version"] = kReportSchema;
        j["toolkit_version"] = kToolkitVersion;
        j["suite"] = r.suite;
        j["conventions"] = r.conventions;
        json entries = json::array();
        for (auto& e : r.entries)
            entries.push_back({{"id", e.id},
                               {"title", e.title},
                               {"status", status_name(e.status)},
                               {"expected", e.expected},
                               {"observed", e.observed},
                               {"provenance", e.provenance}});
        j["entries"] = entries;
        j["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"skipped", counts[2]}};
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "suite " << r.suite << "\n";
    for (auto& [k, v] : r.conventions)
        os << "  convention " << k << ": " << v << "\n";
    size_t w = 0;
    for (auto& e : r.entries)
        w = std::max(w, e.id.size());
    for (auto& e : r.entries) {
        std::string st = status_name(e.status);
        std::transform(st.begin(), st.end(), st.begin(), ::toupper);
        os << std::left << std::setw(8) << ("[" + st + "]") << std::setw(static_cast<int>(w) + 2) << e.id << e.title
           << "  (" << std::fixed << std::setprecision(2) << e.seconds << " s)\n";
        os << "          expected: " << e.expected << "  [" << e.provenance << "]\n";
        os << "          observed: " << e.observed << "\n";
    }
    os << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " skipped\n";
    return os.str();
}

// ---------------------------------------------------------------- pipeline

Pipeline::Pipeline(PipelineConfig cfg) : cfg_(std::move(cfg))
{
    cfg_.validate();
    forms_ = load_newforms(cfg_.newforms_path);
    for (auto l : {"f120", "f120E", "f24B", "f15C", "f15", "f1200"})
        if (!forms_.count(l))
            throw std::runtime_error("newform file lacks " + std::string(l));
    if (!cfg_.cache_dir.empty())
        cache_.emplace(cfg_.cache_dir);
}

std::vector<std::string> Pipeline::suites()
{
    return {"thm-x", "thm-y", "thm-s", "fsl", "mod4", "k3-chain", "characters", "all"};
}

std::string Pipeline::model_hash(const std::string& model, Twist t)
{
    std::string key = model + "/" + twist_name(t);
    auto it = hashes_.find(key);
    if (it != hashes_.end())
        return it->second;
    const Catalog& c = maschke_catalog();
    std::ostringstream os;
    auto weighted = [&](const WeightedHypersurface& w) {
        os << "weighted";
        for (int x : w.weights)
            os << ' ' << x;
        os << ':' << w.poly.str();
    };
    auto weier = [&](const WeierstrassModel& m) {
        os << "weierstrass:" << m.a2.str() << ';' << m.a4.str() << ';' << m.a6.str();
    };
    if (model == "S")
        weighted(c.S);
    else if (model == "S1")
        weighted(c.S1);
    else if (model == "X") {
        os << "double cover " << c.X.cover_sign << ':';
        weighted(c.X.branch);
        if (t != Twist::Id) {
            TwistedModel m = make_twisted(c.X, t);
            os << "|twist n=" << m.aut.n << " a=";
            for (int a : m.aut.a)
                os << a << ',';
            os << ':' << m.diagonal_poly.str();
        }
    } else if (model == "S2")
        weier(c.S2);
    else if (model == "S3")
        weier(c.S3);
    else if (model == "S4")
        weier(c.S4);
    else if (model == "S4_aux")
        weier(c.S4_aux);
    else if (model == "S5")
        weier(c.S5);
    else
        throw std::invalid_argument("unknown model '" + model + "' (expected S, S1, X, S2, S3, S4, S4_aux, S5)");
    if (model != "X" && t != Twist::Id)
        throw std::invalid_argument("twists are defined for X only");
    return hashes_[key] = hex16(fnv1a(os.str()));
}

uint64_t Pipeline::count(const std::string& model, uint32_t p, int degree, Twist t)
{
    std::string h = model_hash(model, t);
    Field F(p, degree);
    if (cache_)
        if (auto v = cache_->get(h, F.q(), twist_name(t)))
            return *v;
    const Catalog& c = maschke_catalog();
    CountOptions opt;
    opt.workers = cfg_.workers;
    uint64_t n = 0;
    if (model == "S")
        n = count_weighted_hypersurface(c.S, F, opt);
    else if (model == "S1")
        n = count_weighted_hypersurface(c.S1, F, opt);
    else if (model == "X")
        n = t == Twist::Id ? count_double_cover(c.X, F, opt) : count_frobenius_twist(make_twisted(c.X, t), F, opt);
    else {
        if (degree != 1)
            throw std::invalid_argument("elliptic surfaces are counted over prime fields only");
        const WeierstrassModel* m = model == "S2"   ? &c.S2
                                    : model == "S3" ? &c.S3
                                    : model == "S4" ? &c.S4
                                    : model == "S5" ? &c.S5
                                                    : &c.S4_aux;
        n = count_elliptic_surface(*m, F);
    }
    if (cache_)
        cache_->put(h, F.q(), twist_name(t), n);
    return n;
}

std::array<uint64_t, 4> Pipeline::x_counts(uint32_t p, int degree)
{
    std::array<uint64_t, 4> r{};
    int i = 0;
    for (Twist t : {Twist::Id, Twist::I1, Twist::I2, Twist::I3})
        r[i++] = count("X", p, degree, t);
    return r;
}

GeometricTraces Pipeline::geometric_traces(int64_t p)
{
    auto it = traces_.find(p);
    if (it != traces_.end())
        return it->second;
    if (p < 7 || !is_prime(static_cast<uint64_t>(p)))
        throw std::invalid_argument("geometric_traces: bad prime " + std::to_string(p));
    const uint32_t up = static_cast<uint32_t>(p);
    GeometricTraces g;
    if (p % 4 == 1) {
        g.traces = extract_x_traces(p, x_counts(up, 1));
        g.method = "F_p counts of X and three twists";
    } else {
        std::array<uint64_t, 3> c{count("X", up, 1, Twist::Id), count("X", up, 1, Twist::I2),
                                  count("X", up, 1, Twist::I3)};
        auto cand = x_trace_candidates_mod3(p, c);
        g.candidates = static_cast<int>(cand.size());
        g.method = "Galois traces from F_p counts";
        if (cand.size() > 1) {
            int64_t tr = h3_trace(count("X", up, 2, Twist::Id), static_cast<uint64_t>(p * p));
            std::erase_if(cand, [&](const XTraces& x) { return x_trace_fp2(x) != tr; });
            g.method += " + F_{p^2} count";
        }
        if (cand.size() != 1)
            throw std::runtime_error("geometric_traces: " + std::to_string(cand.size()) + " candidates at p = " +
                                     std::to_string(p));
        g.traces = cand.front();
    }
    return traces_[p] = g;
}

CharConvention Pipeline::calibrated_convention(std::string* detail)
{
    if (!convention_) {
        // (a) #S = 1 + tr T_S mod p, (b) #S1 = 1 + chi_15 b_p^2 mod p,
        // (c) b_p is real iff chi_3(p) = 1, (d) p splits in K iff chi_3 = chi_-5 = 1
        const NewformRecord& f1200 = forms_.at("f1200");
        const DecompositionSpec ts = spec_thm_s();
        std::vector<std::string> lines;
        std::vector<CharConvention> fits;
        for (CharConvention c : {CharConvention::Kronecker, CharConvention::Reciprocal}) {
            int bad = 0, checks = 0;
            for (int64_t p : good_primes(7, 23)) {
                const uint32_t up = static_cast<uint32_t>(p);
                int64_t s = mod(count("S", up, 1), p), s1 = mod(count("S1", up, 1), p);
                checks += 2;
                bad += s != mod(1 + assemble_trace(ts, forms_, p, c), p);
                mpq_class b2 = f1200.at(p).square().rational();
                bad += s1 != mod(1 + chi(15, p, c) * b2, p);
            }
            for (int64_t p : good_primes(7, 100)) {
                if (!f1200.has(p))
                    continue;
                const QuadIrr& b = f1200.at(p);
                bool real = b.is_rational() || b.m > 0;
                if (!(b.x == 0 && b.y == 0)) {
                    ++checks;
                    bad += real != (chi(3, p, c) == 1);
                }
                Field F(static_cast<uint32_t>(p), 1);
                bool split = !degree_one_embeddings(F).empty();
                ++checks;
                bad += split != (chi(3, p, c) == 1 && chi(-5, p, c) == 1);
            }
            lines.push_back(std::string(convention_name(c)) + ": " + std::to_string(checks - bad) + "/" +
                            std::to_string(checks) + " checks");
            if (bad == 0)
                fits.push_back(c);
        }
        convention_detail_ = join(lines, "; ");
        if (fits.size() != 1) {
            convention_detail_ += fits.empty() ? "; no convention fits" : "; both conventions fit";
            if (fits.empty())
                throw std::runtime_error("character calibration failed: " + convention_detail_);
        }
        convention_ = fits.front();
    }
    if (detail)
        *detail = convention_detail_;
    return *convention_;
}

namespace {

ReportEntry entry(int n, std::string title, std::string provenance)
{
    ReportEntry e;
    e.id = "criterion-" + std::to_string(n);
    e.title = std::move(title);
    e.provenance = std::move(provenance);
    return e;
}

void finish(ReportEntry& e, bool ok) { e.status = ok ? Status::Pass : Status::Fail; }

} // namespace

ReportEntry Pipeline::criterion(int n)
{
    Stopwatch sw;
    ReportEntry e;
    try {
        switch (n) {
        case 1: {
            e = entry(1, "Y trace system", "paper table");
            struct In {
                int64_t np, np2, p;
                YTraces want;
            };
            const std::vector<In> in{{400, 130390, 7, {7, 0, 0, 0}},
                                     {1284, 1799134, 11, {11, 4, -4, 4}},
                                     {2170, 4882030, 13, {13, 54, 6, -2}}};
            bool ok = true;
            std::vector<std::string> exp, obs;
            for (auto& i : in) {
                YSolution s = solve_y_system(i.np, i.np2, i.p);
                exp.push_back("p=" + std::to_string(i.p) + " " + tuple_str({i.want.w1, i.want.u5, i.want.u9}));
                std::string o = "p=" + std::to_string(i.p) + " " + status_name(s.status);
                for (auto& c : s.candidates)
                    o += " " + tuple_str({c.w1, c.u5, c.u9});
                obs.push_back(o);
                ok = ok && s.status == SolveStatus::Unique && s.candidates.front() == i.want;
            }
            e.expected = join(exp, "; ") + " unique";
            e.observed = join(obs, "; ");
            finish(e, ok);
            break;
        }
        case 2: {
            e = entry(2, "involution traces", "paper table");
            std::vector<YTraces> known{{11, 4, -4, 4}, {13, 54, 6, -2}};
            auto i1 = solve_involution_traces({{11, 180}, {13, -102}}, known);
            auto i2 = solve_involution_traces({{11, -4}, {13, -210}}, known);
            e.expected = "i1 (1, -1, 3); i2 (-1, -3, -3)";
            e.observed = "i1 " + tuple_str({i1[0], i1[1], i1[2]}) + "; i2 " + tuple_str({i2[0], i2[1], i2[2]});
            finish(e, i1 == std::array<int64_t, 3>{1, -1, 3} && i2 == std::array<int64_t, 3>{-1, -3, -3});
            break;
        }
        case 3: {
            e = entry(3, "X extraction at p = 1 mod 4", "data file; paper table at p = 13");
            bool ok = true;
            std::vector<std::string> exp, obs;
            for (int64_t p : kCriterion3Primes) {
                XTraces want{p, forms_.at("f120").a(p), forms_.at("f120E").a(p), forms_.at("f24B").a(p),
                             forms_.at("f15C").a(p)};
                XTraces got = geometric_traces(p).traces;
                exp.push_back(std::to_string(p) + ":" + xt_str(want));
                obs.push_back(std::to_string(p) + ":" + xt_str(got));
                ok = ok && got == want;
                if (p == 13)
                    ok = ok && got.a120 == 54 && got.a120E == 6 && got.a24B == -2;
            }
            e.expected = join(exp, " ");
            e.observed = join(obs, " ");
            finish(e, ok);
            break;
        }
        case 4: {
            e = entry(4, "F_{p^2} relation", "data file");
            std::vector<int64_t> primes{11, 19};
            bool ok = true;
            std::vector<std::string> exp, obs;
            auto run_p = [&](int64_t p) {
                XTraces f{p, forms_.at("f120").a(p), forms_.at("f120E").a(p), forms_.at("f24B").a(p),
                          forms_.at("f15C").a(p)};
                Fp2Extraction x = extract_x_traces_fp2(p, x_counts(static_cast<uint32_t>(p), 2), f);
                exp.push_back(std::to_string(p) + ":" +
                              tuple_str({x.expected[0], x.expected[1], x.expected[2], x.expected[3]}));
                obs.push_back(fp2_str(x));
                return x.ok();
            };
            for (int64_t p : primes)
                ok = run_p(p) && ok;
            if (cfg_.benchmark)
                ok = run_p(31) && ok;
            else
                obs.push_back("31: benchmark tier not run");
            e.expected = join(exp, " ");
            e.observed = join(obs, " ");
            finish(e, ok);
            break;
        }
        case 5: {
            e = entry(5, "mod-p congruence net", "data file; derived from the S assembly");
            bool ok = true;
            std::vector<std::string> bad;
            for (int64_t p : good_primes(7, 73)) {
                int64_t nx = mod(count("X", static_cast<uint32_t>(p), 1), p);
                int64_t want = mod(1 - forms_.at("f120").a(p), p);
                if (nx != want) {
                    ok = false;
                    bad.push_back("X at " + std::to_string(p));
                }
            }
            const std::map<int64_t, int64_t> pinned{{7, 1}, {11, 0}, {13, 9}};
            const CharConvention conv = cfg_.calibrate ? calibrated_convention() : CharConvention::Kronecker;
            std::vector<std::string> obs;
            for (auto [p, r] : pinned) {
                int64_t ns = mod(count("S", static_cast<uint32_t>(p), 1), p);
                std::string o = std::to_string(p) + ": count " + std::to_string(ns) + ", assembly";
                for (CharConvention c : {CharConvention::Kronecker, CharConvention::Reciprocal}) {
                    int64_t d = mod(1 + assemble_trace(spec_thm_s(), forms_, p, c), p);
                    o += std::string(" ") + convention_name(c) + " " + std::to_string(d);
                    if (c == conv)
                        ok = ok && d == r;
                }
                ok = ok && ns == r;
                obs.push_back(o);
            }
            e.expected = std::string("#X = 1 - a120(p) mod p for p <= 73; #S mod p: 7:1 11:0 13:9, matching the "
                                     "assembly under ") + convention_name(conv);
            e.observed = (bad.empty() ? "X congruences hold" : "X fails: " + join(bad)) + "; S " + join(obs, "; ");
            finish(e, ok);
            break;
        }
        case 6: {
            e = entry(6, "GL2(Z/4) and quartic audits", "derived oracle");
            GL2Z4Audit a = gl2z4_trace_audit();
            int checked = 0, worst = 0;
            std::vector<std::string> bad;
            for (int64_t a0 : {2, 3, 5, 6, 10, 15, 30})
                for (int64_t s : {1, -1})
                    for (int64_t p = 7; p < 200; p += 4)
                        if (is_prime(static_cast<uint64_t>(p))) {
                            int o = quartic_frobenius_order(s * a0, p);
                            ++checked;
                            worst = std::max(worst, o);
                            if (o > 2)
                                bad.push_back(std::to_string(s * a0) + "@" + std::to_string(p));
                        }
            e.expected = "96 elements, no det 3 mismatch; Frobenius order <= 2";
            e.observed = std::to_string(a.total) + " elements, " + std::to_string(a.det3) + " with det 3 (" +
                         std::to_string(a.identity_lifts) + " identity lifts, " + std::to_string(a.order2) +
                         " order 2, " + std::to_string(a.order4) + " order 4, " + std::to_string(a.odd_trace) +
                         " odd trace), " + std::to_string(a.mismatches) + " mismatches; " +
                         std::to_string(checked) + " quartic cases, max order " + std::to_string(worst) +
                         (bad.empty() ? "" : ", failing " + join(bad));
            finish(e, a.pass() && bad.empty());
            break;
        }
        case 7: {
            e = entry(7, "FSL harness", "paper prime list; data file");
            auto cov = class_coverage(kNonCubicPrimes);
            bool bij = cov.size() == 16 &&
                       std::all_of(cov.begin(), cov.end(), [](auto& kv) { return kv.second.size() == 1; });
            std::vector<unsigned> classes;
            for (int64_t p : kNonCubicPrimes14)
                classes.push_back(frobenius_class(p).bits());
            bool hom = noncubic_check(classes, NonCubicVariant::Homogeneous).pass;
            bool inh = noncubic_check(classes, NonCubicVariant::Inhomogeneous).pass;
            // the even trace rule needs 7, 11, 13, 19 whatever the bound
            std::vector<int64_t> primes;
            for (int64_t p : kNonCubicPrimes14)
                if (p <= std::max<int64_t>(cfg_.prime_bound, 19))
                    primes.push_back(p);
            TraceSeq g[3], t[3];
            const char* labels[3] = {"f120", "f120E", "f24B"};
            for (int64_t p : primes) {
                XTraces x = geometric_traces(p).traces;
                g[0][p] = x.a120;
                g[1][p] = x.a120E;
                g[2][p] = x.a24B;
            }
            bool fsl = true, even = true;
            std::vector<std::string> mism;
            for (int i = 0; i < 3; ++i) {
                t[i] = forms_.at(labels[i]).integer_sequence();
                even = even && even_trace_rule(g[i]).pass && even_trace_rule(t[i]).pass;
                FslResult r = fsl_compare(g[i], t[i], primes);
                fsl = fsl && r.pass;
                for (auto& m : r.mismatches)
                    mism.push_back(std::string(labels[i]) + "@" + std::to_string(m[0]));
            }
            std::vector<std::string> ps;
            for (auto p : primes)
                ps.push_back(std::to_string(p));
            e.expected = "16 classes bijective; 14-prime set non-cubic; geometric Y traces = tables at " +
                         join(ps, ",");
            e.observed = std::string(bij ? "bijective" : "not bijective") +
                         "; non-cubic homogeneous " + (hom ? "pass" : "fail") + ", inhomogeneous " +
                         (inh ? "pass" : "fail") + "; even traces " + (even ? "yes" : "no") + "; " +
                         (fsl ? "traces agree" : "mismatches " + join(mism));
            finish(e, bij && (hom || inh) && even && fsl);
            break;
        }
        case 8: {
            e = entry(8, "Galois trace uniqueness", "paper; derived oracle");
            auto v0 = [&](int64_t p) {
                int64_t d = forms_.at("f15C").a(p);
                return std::array<int64_t, 4>{d, d, forms_.at("f24B").a(p), forms_.at("f120E").a(p)};
            };
            UniquenessResult r71 = galois_trace_uniqueness(71, v0(71));
            UniquenessResult r43 = galois_trace_uniqueness(43, v0(43));
            int detfail = lemma_tr_determinant_audit();
            e.expected = "p=71: 9 translations, none survive; p=43 unique; det M = 216(u1-u2) on the grid";
            e.observed = "p=71: bound " + std::to_string(r71.translation_bound) + ", " +
                         std::to_string(r71.translations.size()) + " translations, " +
                         std::to_string(r71.survivors.size()) + " survivors; p=43: " +
                         std::to_string(r43.translations.size()) + " translations, " +
                         (r43.unique() ? "unique" : "not unique") + "; determinant failures " +
                         std::to_string(detfail);
            finish(e, r71.translations.size() == 9 && r71.unique() && r43.unique() && detfail == 0);
            break;
        }
        case 9: {
            e = entry(9, "sign contradiction", "paper");
            SignCheck s = sign_contradiction_check({12, 3}, {7, 8}, 9);
            e.expected = "max 5, target 9 unreachable";
            e.observed = "max " + std::to_string(s.max_trace) + (s.achievable ? ", reachable" : ", unreachable");
            finish(e, s.max_trace == 5 && !s.achievable);
            break;
        }
        case 10: {
            e = entry(10, "K3 chain", "paper fibre configurations; derived congruences");
            const Catalog& c = maschke_catalog();
            const std::vector<std::pair<const WeierstrassModel*, std::map<std::string, int>>> want{
                {&c.S2, {{"I2", 8}, {"I1", 8}}},
                {&c.S3, {{"I0*", 1}, {"I2", 2}, {"I1*", 2}}},
                {&c.S4, {{"I1", 2}, {"I2*", 2}, {"I0*", 1}}},
                {&c.S4_aux, {{"I2*", 2}, {"I2", 4}}},
                {&c.S5, {{"III*", 2}, {"I2", 2}, {"I1", 2}}}};
            bool ok = true;
            std::vector<std::string> obs;
            for (auto& [m, h] : want) {
                KodairaConfig k = kodaira_classify(*m);
                bool good = k.histogram() == h && k.euler_sum() == 24 && k.minimal;
                ok = ok && good;
                obs.push_back(m->name + " " + k.str() + (good ? "" : " (mismatch)"));
            }
            bool iso = same_model(two_isogeny(c.S3), scale(c.S4, 2));
            ok = ok && iso;
            obs.push_back(std::string("2-isogeny of S3 ") + (iso ? "=" : "!=") + " S4 scaled by 2");
            bool aux = true;
            for (auto& row : parameter_change_check(c.S4, c.S4_aux, {7, 11, 13}))
                aux = aux && row.congruent();
            ok = ok && aux;
            obs.push_back(std::string("S4_aux congruent at 7, 11, 13: ") + (aux ? "yes" : "no"));
            std::vector<std::string> bad;
            for (int64_t p : good_primes(7, 31)) {
                CongruenceRow r;
                r.p = p;
                r.counts["S1"] = count("S1", static_cast<uint32_t>(p), 1);
                for (auto m : {"S2", "S3", "S4", "S4_aux", "S5"})
                    r.counts[m] = count(m, static_cast<uint32_t>(p), 1);
                if (!r.congruent())
                    bad.push_back(std::to_string(p));
            }
            ok = ok && bad.empty();
            obs.push_back(bad.empty() ? "S1..S5 congruent for p <= 31" : "net fails at " + join(bad));
            e.expected = "S2 8 I2 + 8 I1; S3 I0* + 2 I2 + 2 I1*; S4 2 I1 + 2 I2* + I0*; S4_aux 2 I2* + 4 I2; "
                         "S5 2 III* + 2 I2 + 2 I1; Euler 24 each; isogeny, auxiliary model and net congruent";
            e.observed = join(obs, "; ");
            finish(e, ok);
            break;
        }
        case 11: {
            e = entry(11, "isogeny algebra", "paper j-invariant; derived evaluation");
            ModularPolynomial phi2 = ModularPolynomial::load(cfg_.modpoly2_path);
            ModularPolynomial phi3 = ModularPolynomial::load(cfg_.modpoly3_path);
            bool data = phi2.ell == 2 && phi3.ell == 3 && phi2.symmetric() && phi3.symmetric() &&
                        phi2.kronecker_congruence() && phi3.kronecker_congruence();
            bool cm = true;
            for (long j : {1728L, 8000L, -3375L})
                cm = cm && phi2.eval(mpz_class(j), mpz_class(j)) == 0;
            for (long j : {0L, 54000L, 8000L})
                cm = cm && phi3.eval(mpz_class(j), mpz_class(j)) == 0;
            IsogenyVerdict v = isogeny_chain_verdict(phi2, phi3);
            e.expected = "Phi2(j, s_-5 j) = Phi3(j, s_-15 j) = Res = 0; data checks pass";
            e.observed = "Phi2 " + v.phi2.str() + ", Phi3 " + v.phi3.str() + ", Res " + v.res6.str() +
                         "; symmetry/Kronecker " + (data ? "pass" : "fail") + ", CM spot checks " +
                         (cm ? "pass" : "fail");
            finish(e, data && cm && v.pass());
            break;
        }
        case 12: {
            e = entry(12, "Q-curve reduction", "paper b_p table");
            const Catalog& c = maschke_catalog();
            bool ok = true;
            std::vector<std::string> exp, obs;
            for (int64_t p : {23, 47}) {
                Field F(static_cast<uint32_t>(p), 1);
                int64_t b = std::abs(forms_.at("f1200").a(p));
                auto embs = degree_one_embeddings(F);
                std::set<int64_t> traces;
                for (auto& em : embs) {
                    uint64_t n = count_elliptic_curve(reduce_at_prime(c.E, F, em), F);
                    traces.insert(p + 1 - static_cast<int64_t>(n));
                }
                std::string o = std::to_string(p) + ": " + std::to_string(embs.size()) + " embeddings, a =";
                for (auto a : traces)
                    o += " " + std::to_string(a);
                exp.push_back(std::to_string(p) + ": |a| = " + std::to_string(b));
                obs.push_back(o);
                ok = ok && embs.size() == 4 && traces.size() == 1 && std::abs(*traces.begin()) == b;
            }
            e.expected = join(exp, "; ") + ", same for all embeddings";
            e.observed = join(obs, "; ");
            finish(e, ok);
            break;
        }
        case 13: {
            e = entry(13, "character solvers", "paper sign table; derived from counts");
            std::string detail;
            CharConvention conv = calibrated_convention(&detail);
            CharSolve det = solve_quadratic_character({{11, -1}, {53, -1}, {107, 1}, {139, -1}}, conv);
            bool det_ok = det.status == CharSolve::Unique && det.consistent.front().d() == -5 &&
                          det.consistent.front().eval(127, conv) == 1 &&
                          det.consistent.front().eval(179, conv) == -1;
            // phi(p) = (#S1 - 1) / (chi_-15(p) b_p^2) mod p
            const NewformRecord& f1200 = forms_.at("f1200");
            std::vector<std::pair<int64_t, int>> signs;
            std::string phis;
            for (int64_t p : {11, 13, 17, 19}) {
                int64_t num = mod(count("S1", static_cast<uint32_t>(p), 1) - 1, static_cast<int64_t>(p));
                int64_t den = mod(chi(-15, p, conv) * f1200.at(p).square().rational(), p);
                if (den == 0)
                    throw std::runtime_error("phi: b_p^2 = 0 mod " + std::to_string(p));
                int64_t v = mod(static_cast<int64_t>(num * static_cast<int64_t>(powmod(den, p - 2, p))), p);
                int s = v == 1 ? 1 : v == p - 1 ? -1 : 0;
                if (s == 0)
                    throw std::runtime_error("phi: ratio is not a sign at p = " + std::to_string(p));
                signs.push_back({p, s});
                phis += (phis.empty() ? "" : " ") + std::to_string(p) + (s > 0 ? ":+" : ":-");
            }
            CharSolve phi = solve_quadratic_character(signs, conv);
            bool phi_ok = phi.status == CharSolve::Unique && phi.consistent.front().d() == -1;
            // consistency with criterion 12: 23 and 47 split in K under the convention
            bool split_ok = true;
            for (int64_t p : {23, 47})
                split_ok = split_ok && chi(3, p, conv) == 1 && chi(-5, p, conv) == 1;
            e.expected = "determinant chi_-5 (consistent at 127, 179); phi chi_-1; one calibrated convention";
            e.observed = "convention " + std::string(convention_name(conv)) + " [" + detail + "]; determinant " +
                         (det.consistent.size() == 1 ? det.consistent.front().name()
                                                     : std::to_string(det.consistent.size()) + " candidates") +
                         "; phi signs " + phis + " -> " +
                         (phi.consistent.size() == 1 ? phi.consistent.front().name()
                                                     : std::to_string(phi.consistent.size()) + " candidates") +
                         "; 23, 47 split: " + (split_ok ? "yes" : "no");
            finish(e, det_ok && phi_ok && split_ok);
            break;
        }
        case 14: {
            e = entry(14, "dimension audits", "paper Betti numbers");
            int x = dimension_audit(spec_thm_x()), y = dimension_audit(spec_thm_y()), s = dimension_audit(spec_thm_s());
            e.expected = "300 / 30 / 100";
            e.observed = std::to_string(x) + " / " + std::to_string(y) + " / " + std::to_string(s);
            finish(e, x == 300 && y == 30 && s == 100);
            break;
        }
        default:
            throw std::out_of_range("no acceptance criterion " + std::to_string(n));
        }
        if (n == 4 && !cfg_.benchmark && e.status == Status::Pass)
            e.observed += " (benchmark tier skipped)";
    } catch (const std::exception& ex) {
        if (n < 1 || n > 14)
            throw;
        if (e.id.empty())
            e = entry(n, "criterion " + std::to_string(n), "");
        e.status = Status::Fail;
        e.observed = std::string("error: ") + ex.what();
    }
    e.seconds = sw.seconds();
    return e;
}

VerificationReport Pipeline::run(const std::string& suite)
{
    static const std::map<std::string, std::vector<int>> kSuites{
        {"thm-y", {1, 2, 7}},    {"thm-x", {3, 4, 8, 9}},       {"thm-s", {5, 14}},
        {"fsl", {7}},            {"mod4", {6}},                 {"k3-chain", {10, 11, 12}},
        {"characters", {13}},    {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14}}};
    auto it = kSuites.find(suite);
    if (it == kSuites.end())
        throw std::invalid_argument("unknown suite '" + suite + "' (expected " + join(suites()) + ")");
    VerificationReport r;
    r.suite = suite;
    for (int n : it->second)
        r.entries.push_back(criterion(n));

    if (suite == "thm-y" || suite == "all") {
        // per-prime reproduction of the Y traces
        for (int64_t p : good_primes(7, cfg_.prime_bound)) {
            Stopwatch sw;
            ReportEntry e;
            e.id = "y-traces-p" + std::to_string(p);
            e.title = "geometric Y traces at " + std::to_string(p);
            e.provenance = p <= 13 ? "paper table" : "data file";
            try {
                XTraces want{p, forms_.at("f120").a(p), forms_.at("f120E").a(p), forms_.at("f24B").a(p), 0};
                GeometricTraces g = geometric_traces(p);
                e.expected = yt_str(want);
                e.observed = yt_str(g.traces) + " via " + g.method;
                finish(e, g.traces.a120 == want.a120 && g.traces.a120E == want.a120E && g.traces.a24B == want.a24B);
            } catch (const std::exception& ex) {
                e.status = Status::Fail;
                e.observed = std::string("error: ") + ex.what();
            }
            e.seconds = sw.seconds();
            r.entries.push_back(e);
        }
    }
    if (suite == "thm-x" || suite == "all") {
        ReportEntry e;
        e.id = "benchmark-fp2-p31";
        e.title = "F_{31^2} extraction";
        e.provenance = "data file";
        e.expected = "relation holds for all four pieces";
        if (!cfg_.benchmark) {
            e.status = Status::Skipped;
            e.observed = "benchmark tier disabled";
        } else {
            Stopwatch sw;
            try {
                int64_t p = 31;
                XTraces f{p, forms_.at("f120").a(p), forms_.at("f120E").a(p), forms_.at("f24B").a(p),
                          forms_.at("f15C").a(p)};
                Fp2Extraction x = extract_x_traces_fp2(p, x_counts(31, 2), f);
                e.observed = fp2_str(x);
                finish(e, x.ok());
            } catch (const std::exception& ex) {
                e.status = Status::Fail;
                e.observed = std::string("error: ") + ex.what();
            }
            e.seconds = sw.seconds();
        }
        r.entries.push_back(e);
    }

    r.conventions["twist descent"] = "coordinate descent g^(-m/n); i3 at q = 3 mod 4 as a semilinear twist";
    r.conventions["non-cubic"] = [&] {
        std::vector<unsigned> classes;
        for (int64_t p : kNonCubicPrimes14)
            classes.push_back(frobenius_class(p).bits());
        bool hom = noncubic_check(classes, NonCubicVariant::Homogeneous).pass;
        bool inh = noncubic_check(classes, NonCubicVariant::Inhomogeneous).pass;
        return std::string("homogeneous ") + (hom ? "pass" : "fail") + ", inhomogeneous " + (inh ? "pass" : "fail");
    }();
    if (cfg_.calibrate && (suite == "characters" || suite == "thm-s" || suite == "all")) {
        try {
            std::string detail;
            CharConvention c = calibrated_convention(&detail);
            r.conventions["character"] = std::string(convention_name(c)) + " [" + detail + "]";
        } catch (const std::exception& ex) {
            r.conventions["character"] = std::string("calibration failed: ") + ex.what();
        }
    } else {
        r.conventions["character"] = convention_name(CharConvention::Kronecker);
    }
    return r;
}

} // namespace octic

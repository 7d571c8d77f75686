#include "cftor/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>

#include "cftor/cf.hpp"
#include "cftor/symbolic.hpp"
#include "cftor/torsion.hpp"

namespace cftor {

using nlohmann::json;

namespace {

std::string now_utc() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json record_body(const CurveRecord& r) {
    json j;
    j["kind"] = r.kind;
    j["g"] = r.g;
    j["N"] = r.N;
    j["m"] = r.m;
    j["deltas"] = r.deltas;
    j["kappa"] = r.kappa;
    j["f"] = r.f;
    j["assignment"] = r.assignment;
    j["residual"] = r.residual;
    j["witness"] = r.witness;
    j["free_vars"] = r.free_vars;
    j["verified"] = r.verified;
    return j;
}

} // namespace

std::string CurveRecord::content_key() const { return record_body(*this).dump(); }

std::string CurveRecord::to_json_line() const {
    json j = record_body(*this);
    j["created"] = created;
    return j.dump();
}

CurveRecord CurveRecord::from_json_line(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw StorageError(std::string("unparseable catalog line: ") + e.what());
    }
    CurveRecord r;
    try {
        r.kind = j.at("kind").get<std::string>();
        r.g = j.at("g").get<int>();
        r.N = j.at("N").get<int>();
        r.m = j.at("m").get<int>();
        r.deltas = j.at("deltas").get<std::vector<int>>();
        r.kappa = j.at("kappa").get<std::string>();
        r.f = j.at("f").get<std::string>();
        r.assignment = j.at("assignment").get<std::map<std::string, std::string>>();
        r.residual = j.at("residual").get<std::vector<std::string>>();
        r.witness = j.at("witness").get<std::string>();
        r.free_vars = j.at("free_vars").get<std::vector<std::string>>();
        r.verified = j.at("verified").get<bool>();
        r.created = j.value("created", "");
    } catch (const json::exception& e) {
        throw StorageError(std::string("catalog line missing field: ") + e.what());
    }
    return r;
}

struct Catalog::Impl {
    std::mutex mu;
    std::set<std::string> keys;
};

Catalog::Catalog(std::string path) : path_(std::move(path)), impl_(std::make_shared<Impl>()) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        impl_->keys.insert(CurveRecord::from_json_line(line).content_key());
    }
}

bool Catalog::append(const CurveRecord& rec) {
    if (rec.kind == "curve" && !rec.verified)
        throw UnverifiedRecordError("refusing to persist an unverified curve: " + rec.f);
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (!impl_->keys.insert(rec.content_key()).second) return false;
    std::ofstream out(path_, std::ios::app);
    if (!out) throw StorageError("cannot open catalog for append: " + path_);
    CurveRecord stamped = rec;
    if (stamped.created.empty()) stamped.created = now_utc();
    out << stamped.to_json_line() << '\n';
    if (!out) throw StorageError("catalog write failed: " + path_);
    return true;
}

std::vector<CurveRecord> Catalog::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StorageError("cannot open catalog: " + path);
    std::vector<CurveRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(CurveRecord::from_json_line(line));
    }
    return out;
}

std::string Catalog::digest(const std::vector<CurveRecord>& records) {
    std::vector<std::string> keys;
    keys.reserve(records.size());
    for (const auto& r : records) keys.push_back(r.content_key());
    std::sort(keys.begin(), keys.end());
    std::uint64_t h = 14695981039346656037ull; // FNV-1a
    for (const auto& k : keys) {
        for (unsigned char c : k) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0x0a;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void record_curve(const CurveRecord& rec, const std::string& catalog_path) {
    Catalog(catalog_path).append(rec);
}

std::string SearchConfig::to_json() const {
    json j;
    j["g"] = g;
    j["N"] = N;
    if (m_filter) j["m"] = *m_filter;
    if (partition_filter) j["partition"] = *partition_filter;
    std::vector<std::string> pool_s;
    for (const auto& v : pool) pool_s.push_back(to_string(v));
    j["pool"] = pool_s;
    j["samples_per_family"] = samples_per_family;
    j["max_assignments"] = max_assignments;
    j["threads"] = threads;
    return j.dump(2);
}

SearchConfig SearchConfig::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad search config: ") + e.what());
    }
    SearchConfig cfg;
    cfg.g = j.at("g").get<int>();
    cfg.N = j.at("N").get<int>();
    if (j.contains("m")) cfg.m_filter = j.at("m").get<int>();
    if (j.contains("partition")) cfg.partition_filter = j.at("partition").get<std::vector<int>>();
    if (j.contains("pool")) {
        cfg.pool.clear();
        for (const auto& s : j.at("pool")) cfg.pool.push_back(parse_rational(s.get<std::string>()));
    }
    if (j.contains("samples_per_family"))
        cfg.samples_per_family = j.at("samples_per_family").get<int>();
    if (j.contains("max_assignments")) cfg.max_assignments = j.at("max_assignments").get<int>();
    if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
    if (cfg.g < 2) throw ConstraintViolatedError("search requires genus >= 2");
    if (cfg.N < cfg.g + 1) throw ConstraintViolatedError("search requires order >= genus + 1");
    return cfg;
}

namespace {

CurveRecord base_record(const PartitionSpec& spec) {
    CurveRecord r;
    r.g = spec.g;
    r.N = spec.N;
    r.m = spec.m;
    r.deltas = spec.deltas;
    return r;
}

// The m = 1 case needs no elimination: f = a0^2 + c with a0 = x^{g+1}, c = 1.
std::vector<CurveRecord> search_m1(const PartitionSpec& spec) {
    Poly f = Poly::monomial(Rational(1), 2 * (spec.g + 1)) + Poly::one();
    CFExpansion e = cf_expand(f, 8);
    CurveRecord r = base_record(spec);
    r.kind = "curve";
    r.f = to_expr_string(f);
    r.kappa = to_string(e.kappa);
    r.verified = e.is_periodic() && e.m == 1 && torsion_order(e, spec.g) == spec.N;
    return {r};
}

// Residual of the form c*M + d = 0 with M a monomial: solve for a variable
// carrying an odd exponent (exact n-th root), given values for the others.
struct ResidualSolver {
    bool usable = false;
    VarId solve_var = -1;
    int exponent = 0;
    Rational coeff, constant; // c, d
    Monomial monomial;

    static ResidualSolver analyze(const std::vector<MultiPoly>& residual,
                                  const std::vector<VarId>& free_vars) {
        ResidualSolver rs;
        if (residual.size() != 1) return rs;
        const MultiPoly& eq = residual.front();
        if (eq.term_count() != 2) return rs;
        auto it = eq.terms().begin();
        auto [m1, c1] = *it;
        auto [m2, c2] = *std::next(it);
        // exactly one constant term
        if (m1.is_unit() == m2.is_unit()) return rs;
        const Monomial& mono = m1.is_unit() ? m2 : m1;
        rs.coeff = m1.is_unit() ? c2 : c1;
        rs.constant = m1.is_unit() ? c1 : c2;
        rs.monomial = mono;
        int best_exp = 0;
        for (const auto& [v, e] : mono.factors()) {
            if (std::find(free_vars.begin(), free_vars.end(), v) == free_vars.end()) return rs;
            if (e % 2 == 1 && e > best_exp) {
                rs.solve_var = v;
                best_exp = e;
            }
        }
        if (rs.solve_var < 0) return rs;
        rs.exponent = best_exp;
        rs.usable = true;
        return rs;
    }

    /// Value of solve_var for the given values of the other variables, if an
    /// exact rational root exists.
    std::optional<Rational> solve(const std::map<VarId, Rational>& others) const {
        Rational rest(1);
        for (const auto& [v, e] : monomial.factors()) {
            if (v == solve_var) continue;
            Rational val = others.at(v);
            if (val == 0) return std::nullopt;
            rest *= rational_pow(val, e);
        }
        if (rest == 0 || coeff == 0) return std::nullopt;
        Rational target = -constant / (coeff * rest);
        if (target == 0) return std::nullopt; // flagged variables stay nonzero
        return rational_nth_root(target, static_cast<unsigned>(exponent));
    }
};

std::vector<CurveRecord> search_partition(const PartitionSpec& spec, const SearchConfig& cfg) {
    std::vector<CurveRecord> out;
    SymbolicSystem sys = build_system(spec);
    EliminationTrace trace = eliminate(sys);

    CurveRecord head = base_record(spec);
    head.verified = verify_trace(trace);
    for (const auto& r : trace.residual) head.residual.push_back(r.to_string());
    switch (trace.verdict) {
        case SolveVerdict::Impossible:
            head.kind = "impossible";
            head.witness = trace.witness.to_string();
            out.push_back(head);
            return out;
        case SolveVerdict::Stuck:
            head.kind = "stuck";
            out.push_back(head);
            return out;
        case SolveVerdict::Family:
            head.kind = "family";
            head.kappa = (sys.kappa >= 0) ? "free" : "1";
            for (VarId v : trace.free_vars) head.free_vars.push_back(sys.display_name(v));
            out.push_back(head);
            break;
    }

    // sample the family
    std::vector<VarId> free_vars = trace.free_vars;
    ResidualSolver rs = ResidualSolver::analyze(trace.residual, free_vars);
    if (!trace.residual.empty() && !rs.usable) return out; // cannot sample deterministically

    std::vector<VarId> assigned = free_vars;
    if (rs.usable)
        assigned.erase(std::find(assigned.begin(), assigned.end(), rs.solve_var));

    const size_t k = assigned.size();
    std::vector<size_t> idx(k, 0);
    int tried = 0, found = 0;
    std::set<std::string> seen_curves;
    bool done = false;
    while (!done && found < cfg.samples_per_family && tried < cfg.max_assignments) {
        ++tried;
        std::map<VarId, Rational> values;
        for (size_t i = 0; i < k; ++i) values[assigned[i]] = cfg.pool[idx[i]];
        bool viable = true;
        if (rs.usable) {
            auto solved = rs.solve(values);
            if (solved && *solved != 0)
                values[rs.solve_var] = *solved;
            else
                viable = false;
        }
        if (viable) {
            std::map<std::string, Rational> by_name;
            for (const auto& [v, val] : values) by_name[VarTable::name(v)] = val;
            try {
                Poly f = instantiate_curve(trace, by_name);
                std::string fs = to_expr_string(f);
                if (seen_curves.insert(fs).second) {
                    CurveRecord r = base_record(spec);
                    r.kind = "curve";
                    r.f = fs;
                    r.kappa = (sys.kappa >= 0) ? to_string(values.at(sys.kappa)) : "1";
                    for (const auto& [n, val] : by_name) r.assignment[n] = to_string(val);
                    r.verified = true; // instantiate_curve round-trip-verifies
                    out.push_back(r);
                    ++found;
                }
            } catch (const Error&) {
                // inadmissible sample (zero flag, residual violation, ...)
            }
        }
        // advance the odometer over the pool
        size_t pos = 0;
        while (pos < k) {
            if (++idx[pos] < cfg.pool.size()) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == k) done = true;
        if (k == 0) done = true;
    }
    return out;
}

} // namespace

std::vector<CurveRecord> run_search(const SearchConfig& cfg, const std::string& catalog_path) {
    std::vector<PartitionSpec> specs = enumerate_partitions(cfg.g, cfg.N);
    std::erase_if(specs, [&](const PartitionSpec& s) {
        if (cfg.m_filter && s.m != *cfg.m_filter) return true;
        if (cfg.partition_filter && s.deltas != *cfg.partition_filter) return true;
        return false;
    });

    std::vector<std::vector<CurveRecord>> results(specs.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= specs.size()) return;
            results[i] = specs[i].m == 1 ? search_m1(specs[i]) : search_partition(specs[i], cfg);
        }
    };
    unsigned width = static_cast<unsigned>(std::max(1, cfg.threads));
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < width; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();

    std::vector<CurveRecord> all;
    for (auto& part : results)
        for (auto& r : part) all.push_back(std::move(r));

    if (!catalog_path.empty()) {
        // single writer: records flow to the catalog only from this thread
        Catalog cat(catalog_path);
        for (const auto& r : all) cat.append(r);
    }
    return all;
}

} // namespace cftor

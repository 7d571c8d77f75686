#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cftor/partitions.hpp"
#include "cftor/rational.hpp"

namespace cftor {

/// One line of the curve catalog. Concrete curves carry the radicand f and
/// the sampled assignment; symbolic outcomes carry residuals / witness /
/// free variables instead. `created` is a timestamp and is excluded from the
/// record's identity.
struct CurveRecord {
    std::string kind; ///< "curve" | "family" | "impossible" | "stuck"
    int g = 0, N = 0, m = 0;
    std::vector<int> deltas; ///< free interior degrees delta_1..delta_{m-1}
    std::string kappa;       ///< exact rational for concrete records, else "free"/""
    std::string f;           ///< expression string (concrete curves only)
    std::map<std::string, std::string> assignment; ///< sampled values (concrete)
    std::vector<std::string> residual;             ///< family/stuck constraints
    std::string witness;                           ///< impossible monomial
    std::vector<std::string> free_vars;            ///< family free variables
    bool verified = false;
    std::string created; ///< ISO-8601 UTC

    /// Canonical serialization without the timestamp; equal keys = same record.
    std::string content_key() const;
    std::string to_json_line() const;
    static CurveRecord from_json_line(const std::string& line);
    bool operator==(const CurveRecord& o) const { return content_key() == o.content_key(); }
};

/// Append-only, line-delimited catalog with idempotent, mutex-serialized
/// appends (safe for concurrent writers sharing one Catalog instance).
class Catalog {
public:
    explicit Catalog(std::string path);

    /// Appends if no record with the same content is present; returns whether
    /// a line was written. Throws UnverifiedRecordError for unverified
    /// concrete curves and StorageError on I/O failure.
    bool append(const CurveRecord& rec);

    static std::vector<CurveRecord> load(const std::string& path);
    /// Order-independent hex digest of a record set.
    static std::string digest(const std::vector<CurveRecord>& records);

private:
    std::string path_;
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

/// One-shot convenience: open, append, close.
void record_curve(const CurveRecord& rec, const std::string& catalog_path);

struct SearchConfig {
    int g = 2;
    int N = 11;
    std::optional<int> m_filter;
    std::optional<std::vector<int>> partition_filter; ///< delta_1..delta_{m-1}
    std::vector<Rational> pool = {Rational(1),          Rational(-1), Rational(2),
                                  Rational(-2),         Rational(1) / 2, Rational(-1) / 2,
                                  Rational(3),          Rational(1) / 3};
    int samples_per_family = 3;
    int max_assignments = 20000; ///< budget of sampled assignments per partition
    int threads = 4;

    std::string to_json() const;
    static SearchConfig from_json(const std::string& text);
};

/// Full pipeline: enumerate admissible partitions, run the symbolic solver on
/// each, sample+instantiate+verify families, and return every record (also
/// appending them to catalog_path when nonempty). Deterministic record set
/// for a fixed config regardless of thread count.
std::vector<CurveRecord> run_search(const SearchConfig& cfg, const std::string& catalog_path = "");

} // namespace cftor

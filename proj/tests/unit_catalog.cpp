#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <unistd.h>
#include <string>
#include <thread>
#include <vector>

#include "cftor/catalog.hpp"
#include "cftor/families.hpp"

using namespace cftor;

namespace {

std::string temp_path(const std::string& stem) {
    return (std::filesystem::temp_directory_path() / (stem + std::to_string(::getpid()) + ".jsonl"))
        .string();
}

struct FileGuard {
    std::string path;
    ~FileGuard() { std::remove(path.c_str()); }
};

CurveRecord sample_curve(int i) {
    CurveRecord rec;
    rec.kind = "curve";
    rec.g = 2;
    rec.N = 11;
    rec.m = 7;
    rec.deltas = {2, 1, 1, 1, 1, 2};
    rec.kappa = std::to_string(i);
    rec.f = to_expr_string(g_curve(Rational(i)));
    rec.assignment = {{"kappa", std::to_string(i)}};
    rec.verified = true;
    return rec;
}

} // namespace

TEST_CASE("record serialization round-trips") {
    CurveRecord rec = sample_curve(3);
    rec.created = "2026-01-01T00:00:00Z";
    CurveRecord back = CurveRecord::from_json_line(rec.to_json_line());
    CHECK(back == rec);
    CHECK(back.kind == "curve");
    CHECK(back.deltas == rec.deltas);
    CHECK(back.assignment == rec.assignment);
    CHECK(back.created == rec.created);
}

TEST_CASE("content key ignores the timestamp") {
    CurveRecord a = sample_curve(5);
    CurveRecord b = sample_curve(5);
    a.created = "2026-01-01T00:00:00Z";
    b.created = "2026-02-02T12:34:56Z";
    CHECK(a.content_key() == b.content_key());
    CHECK(a == b);
    b.kappa = "6";
    CHECK(!(a == b));
}

TEST_CASE("append is idempotent and loads back") {
    FileGuard guard{temp_path("cat_idem")};
    Catalog cat(guard.path);
    CHECK(cat.append(sample_curve(1)));
    CHECK(!cat.append(sample_curve(1))); // duplicate content
    CHECK(cat.append(sample_curve(2)));
    auto records = Catalog::load(guard.path);
    REQUIRE(records.size() == 2);
    CHECK(records[0] == sample_curve(1));
    CHECK(records[1] == sample_curve(2));
    // a fresh handle on the same file still deduplicates
    Catalog again(guard.path);
    CHECK(!again.append(sample_curve(2)));
    CHECK(Catalog::load(guard.path).size() == 2);
}

TEST_CASE("unverified concrete curves are refused") {
    FileGuard guard{temp_path("cat_unver")};
    Catalog cat(guard.path);
    CHECK(cat.append(sample_curve(1)));
    CurveRecord rec = sample_curve(2);
    rec.verified = false;
    CHECK_THROWS_AS(cat.append(rec), UnverifiedRecordError);
    CHECK(Catalog::load(guard.path).size() == 1); // nothing was written
    CHECK_THROWS_AS(Catalog::load(guard.path + ".missing"), StorageError);
}

TEST_CASE("symbolic records do not need the verified flag") {
    FileGuard guard{temp_path("cat_symb")};
    Catalog cat(guard.path);
    CurveRecord rec;
    rec.kind = "impossible";
    rec.g = 2;
    rec.N = 11;
    rec.m = 6;
    rec.deltas = {2, 1, 2, 1, 2};
    rec.witness = "-c_1_2^4*c_2_1^3*c_3_2";
    CHECK(cat.append(rec));
}

TEST_CASE("concurrent appends through a shared catalog stay consistent") {
    FileGuard guard{temp_path("cat_conc")};
    Catalog cat(guard.path);
    constexpr int kRecords = 100;
    constexpr int kWorkers = 4;
    std::vector<std::thread> workers;
    for (int w = 0; w < kWorkers; ++w)
        workers.emplace_back([&cat] {
            // every worker offers the full record set; dedupe must hold
            for (int i = 0; i < kRecords; ++i) cat.append(sample_curve(i + 10));
        });
    for (auto& th : workers) th.join();
    auto records = Catalog::load(guard.path);
    CHECK(records.size() == kRecords);
}

TEST_CASE("digest is order-independent and content-sensitive") {
    std::vector<CurveRecord> a{sample_curve(1), sample_curve(2), sample_curve(3)};
    std::vector<CurveRecord> b{a[2], a[0], a[1]};
    CHECK(Catalog::digest(a) == Catalog::digest(b));
    b.push_back(sample_curve(4));
    CHECK(Catalog::digest(a) != Catalog::digest(b));
    CHECK(Catalog::digest(a).size() == 16);
}

TEST_CASE("search config serializes and validates") {
    SearchConfig cfg;
    cfg.g = 2;
    cfg.N = 11;
    cfg.m_filter = 6;
    cfg.partition_filter = std::vector<int>{2, 1, 2, 1, 2};
    cfg.pool.push_back(Rational(1) / 8);
    cfg.threads = 2;
    SearchConfig back = SearchConfig::from_json(cfg.to_json());
    CHECK(back.g == cfg.g);
    CHECK(back.N == cfg.N);
    CHECK(back.m_filter == cfg.m_filter);
    CHECK(back.partition_filter == cfg.partition_filter);
    CHECK(back.pool == cfg.pool);
    CHECK(back.threads == cfg.threads);

    SearchConfig bad;
    bad.N = 2; // below g+1
    CHECK_THROWS_AS(run_search(bad), Error);
}

TEST_CASE("filtered search records only the requested partition") {
    SearchConfig cfg;
    cfg.partition_filter = std::vector<int>{2, 1, 2, 1, 2};
    auto records = run_search(cfg);
    REQUIRE(records.size() == 1);
    CHECK(records[0].kind == "impossible");
    CHECK(records[0].witness == "-c_1_2^4*c_2_1^3*c_3_2");
}

TEST_CASE("search results are deterministic across thread counts") {
    SearchConfig one;
    one.m_filter = 7;
    one.threads = 1;
    SearchConfig four = one;
    four.threads = 4;
    CHECK(Catalog::digest(run_search(one)) == Catalog::digest(run_search(four)));
}

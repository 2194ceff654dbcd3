#include "oracles.hpp"
#include "qpsd/harness.hpp"

#include <doctest.h>
#include <zlib.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qpsd;
namespace fs = std::filesystem;

namespace {
IntTensor diag_identity() {
    IntTensor T(3);
    T[s1111] = T[s2222] = T[s3333] = 1;
    return T;
}
IntTensor minus35() {
    IntTensor T(3, std::vector<int>(15, 1));
    T[s1123] = T[s1223] = T[s1233] = 0;
    return T;
}
std::vector<json> read_records(const fs::path& p) {
    std::vector<json> out;
    gzFile gz = gzopen(p.string().c_str(), "rb");
    REQUIRE(gz);
    std::string text;
    char buf[1 << 14];
    for (int n; (n = gzread(gz, buf, sizeof buf)) > 0;) text.append(buf, n);
    gzclose(gz);
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(json::parse(line));
    return out;
}
struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) { fs::remove_all(path); }
    ~TempDir() { fs::remove_all(path); }
};
}  // namespace

TEST_CASE("sphere minimiser") {
    CHECK(grid_directions(3).size() == 642);
    CHECK(grid_directions(2).size() == 642);

    OracleResult d = sphere_min(diag_identity());
    CHECK(d.status == OracleStatus::NonNegativeProbable);
    CHECK(d.approx_min == doctest::Approx(1.0 / 3).epsilon(1e-6));

    OracleResult o = sphere_min(IntTensor(3, std::vector<int>(15, 1)));
    CHECK(o.status == OracleStatus::NonNegativeProbable);
    CHECK(std::abs(o.approx_min) < 1e-9);

    OracleResult n = sphere_min(minus35());
    CHECK(n.status == OracleStatus::NegativeCertified);
    REQUIRE(n.exact_witness);
    CHECK(check_negative_witness(minus35(), *n.exact_witness));

    OracleOptions opt;
    opt.seed = 99;
    OracleResult a = sphere_min(minus35(), opt), b = sphere_min(minus35(), opt);
    CHECK(a.approx_min == b.approx_min);
    CHECK(a.exact_witness->x == b.exact_witness->x);
}

TEST_CASE("witness refinement") {
    auto w = refine_witness(minus35(), {0.30, 0.30, -0.90});
    REQUIRE(w);
    CHECK(w->x[0] == w->x[1]);
    CHECK(w->x[2] == -3 * w->x[0]);
    CHECK(w->value < 0);

    IntTensor ones(3, std::vector<int>(15, 1));
    CHECK_FALSE(refine_witness(ones, {0.7071, -0.7071, 0}));

    IntTensor pair = diag_identity();
    pair[s1122] = -1;
    auto p = refine_witness(pair, {0.7071, 0.7071, 0});
    REQUIRE(p);
    CHECK(p->x == std::vector<long>{1, 1, 0});
    CHECK(p->value == -4);
}

TEST_CASE("cross check") {
    CheckRecord id = cross_check(diag_identity());
    CHECK(id.agreement == Agreement::Agree);
    CHECK(id.verdict.is_pd == Tri::True);
    CheckRecord on = cross_check(IntTensor(3, std::vector<int>(15, 1)));
    CHECK(on.agreement == Agreement::Agree);
    CheckRecord ng = cross_check(minus35());
    CHECK(ng.agreement == Agreement::Agree);
    CHECK_FALSE(ng.verdict.is_psd);

    CheckOptions fast;
    fast.sos_fast_path = true;
    CheckRecord f = cross_check(diag_identity(), fast);
    CHECK_FALSE(f.oracle.has_value());
    CHECK(record_json(f, 0)["oracle"] == "skipped");
}

TEST_CASE("family indexing") {
    FamilySpec unit;
    CHECK(unit.free_slots().size() == 12);
    CHECK(unit.total() == 531441);
    CHECK(unit.tensor_at(0).entries() == std::vector<int>{1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 1, -1, -1, -1, 1});
    CHECK(unit.tensor_at(unit.total() - 1) == IntTensor(3, std::vector<int>(15, 1)));
    FamilySpec zero{3, {0, 0, 0}};
    CHECK(zero.tensor_at(0)[s1111] == 0);
    CHECK(zero.diag_str() == "000");
    FamilySpec two{2, {1, 1, 0}};
    CHECK(two.total() == 27);

    std::uint64_t covered = 0, last = 0;
    for (int k = 0; k < 7; ++k) {
        FamilySpec s = unit;
        s.shard = k;
        s.shards = 7;
        auto [lo, hi] = s.range();
        CHECK(lo == last);
        covered += hi - lo;
        last = hi;
    }
    CHECK(covered == unit.total());
    FamilySpec bad = unit;
    bad.shard = 3;
    bad.shards = 3;
    CHECK_THROWS(bad.range());
}

TEST_CASE("dim-2 family: all 27, PSD count 10") {
    FamilySpec s{2, {1, 1, 0}};
    Summary sum = enumerate_family(s, {});
    CHECK(sum.records == 27);
    CHECK(sum.psd_count() == 10);
    CHECK(sum.pd_count() == 8);
    CHECK(sum.mismatch == 0);
    CHECK(sum.csv().rfind("case,subcase,psd,pd,count,mismatches\n", 0) == 0);
}

TEST_CASE("shards reproduce the single run, in order, with persistence and resume") {
    TempDir dir("qpsd-harness-test");
    FamilySpec base{2, {1, 1, 0}};

    std::vector<std::string> single;
    EnumerateOptions plain;
    plain.on_record = [&](const CheckRecord& r, std::uint64_t i) { single.push_back(record_json(r, i).dump()); };
    enumerate_family(base, plain);

    // Interrupt shard 0 after two checkpoints, then resume it.
    EnumerateOptions opt;
    opt.out_dir = dir.path.string();
    opt.batch = 4;
    opt.workers = 3;
    FamilySpec s0 = base;
    s0.shards = 2;
    int seen = 0;
    opt.on_record = [&](const CheckRecord&, std::uint64_t) {
        if (++seen == 10) throw std::runtime_error("interrupted");
    };
    CHECK_THROWS_AS(enumerate_family(s0, opt), std::runtime_error);
    CHECK(read_records(dir.path / "records-shard-0.jsonl.gz").size() == 8);
    opt.on_record = nullptr;
    Summary a = enumerate_family(s0, opt);
    FamilySpec s1 = s0;
    s1.shard = 1;
    Summary b = enumerate_family(s1, opt);

    auto r0 = read_records(dir.path / "records-shard-0.jsonl.gz");
    auto r1 = read_records(dir.path / "records-shard-1.jsonl.gz");
    std::vector<std::string> joined;
    for (const auto& r : r0) joined.push_back(r.dump());
    for (const auto& r : r1) joined.push_back(r.dump());
    REQUIRE(joined.size() == single.size());
    for (std::size_t i = 0; i < single.size(); ++i) {
        json x = json::parse(joined[i]), y = json::parse(single[i]);
        x.erase("elapsed_us");
        y.erase("elapsed_us");
        CHECK(x == y);
    }

    a.merge(b);
    CHECK(a.records == 27);
    CHECK(a.psd_count() == 10);
    Summary disk = load_directory_summary(dir.path.string());
    CHECK(disk.csv() == a.csv());
    std::ifstream csv(dir.path / "summary.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "case,subcase,psd,pd,count,mismatches");

    // A state file from a different spec is refused.
    FamilySpec other{2, {1, 1, 0}, 0, 3};
    CHECK_THROWS_AS(enumerate_family(other, opt), std::runtime_error);
}

TEST_CASE("enumeration is deterministic") {
    FamilySpec s{3, {0, 1, 1}, 0, 2000};
    std::vector<std::string> a, b;
    EnumerateOptions o1, o2;
    auto stable = [](const CheckRecord& r, std::uint64_t i) {
        json j = record_json(r, i);
        j.erase("elapsed_us");
        return j.dump();
    };
    o1.on_record = [&](const CheckRecord& r, std::uint64_t i) { a.push_back(stable(r, i)); };
    o2.on_record = [&](const CheckRecord& r, std::uint64_t i) { b.push_back(stable(r, i)); };
    o2.workers = 2;
    enumerate_family(s, o1);
    enumerate_family(s, o2);
    CHECK(a == b);
    CHECK(a.size() == 265);
}

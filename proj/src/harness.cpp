// Persistence for enumerate_family.
//
// Each checkpoint closes a complete gzip member, so the records file is valid
// after every checkpoint. The state file stores the next index and the byte
// length of the records file at that point; a resumed run truncates any
// partial member past that length and continues from the stored index.
#include "qpsd/harness.hpp"

#include <zlib.h>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fs = std::filesystem;

namespace qpsd {

std::string Summary::csv() const {
    std::ostringstream os;
    os << "case,subcase,psd,pd,count,mismatches\n";
    for (const auto& [k, v] : rows)
        os << std::get<0>(k) << ',' << std::get<1>(k) << ',' << (std::get<2>(k) ? "true" : "false") << ','
           << std::get<3>(k) << ',' << v.count << ',' << v.mismatches << '\n';
    return os.str();
}

json Summary::to_json() const {
    json r = json::array();
    for (const auto& [k, v] : rows)
        r.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k), v.count, v.mismatches});
    return {{"rows", r},
            {"records", records},
            {"agree", agree},
            {"mismatch", mismatch},
            {"uncertified", uncertified},
            {"not_covered", not_covered},
            {"mismatch_samples", mismatch_samples}};
}

Summary Summary::from_json(const json& j) {
    Summary s;
    for (const auto& r : j.at("rows"))
        s.rows[{r[0].get<std::string>(), r[1].get<std::string>(), r[2].get<bool>(), r[3].get<std::string>()}] =
            Row{r[4].get<std::uint64_t>(), r[5].get<std::uint64_t>()};
    s.records = j.at("records");
    s.agree = j.at("agree");
    s.mismatch = j.at("mismatch");
    s.uncertified = j.at("uncertified");
    s.not_covered = j.at("not_covered");
    s.mismatch_samples = j.at("mismatch_samples").get<std::vector<std::string>>();
    return s;
}

namespace {

json spec_json(const FamilySpec& s) {
    return {{"dim", s.dim}, {"diag", s.diag}, {"shard", s.shard}, {"shards", s.shards}};
}

void write_atomic(const fs::path& p, const std::string& text) {
    fs::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << text;
        out.flush();
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, p, ec);
    if (ec) throw std::runtime_error("cannot rename " + tmp.string() + ": " + ec.message());
}

void append_member(const fs::path& p, const std::string& lines) {
    gzFile gz = gzopen(p.string().c_str(), "ab");
    if (!gz) throw std::runtime_error("cannot open " + p.string());
    bool ok = lines.empty() || gzwrite(gz, lines.data(), unsigned(lines.size())) == int(lines.size());
    ok = gzclose(gz) == Z_OK && ok;
    if (!ok) throw std::runtime_error("gzip write failed on " + p.string());
}

// Computes records [lo, hi) with a worker pool; the result vector keeps enumeration order.
std::vector<CheckRecord> compute_batch(const FamilySpec& spec, const CheckOptions& opt, std::uint64_t lo,
                                       std::uint64_t hi, int workers) {
    std::vector<CheckRecord> out(hi - lo);
    std::atomic<std::uint64_t> next{lo};
    auto work = [&] {
        for (std::uint64_t i; (i = next.fetch_add(1)) < hi;) out[i - lo] = cross_check(spec.tensor_at(i), opt);
    };
    if (workers <= 1) {
        work();
        return out;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace

Summary load_directory_summary(const std::string& out_dir) {
    Summary total;
    if (!fs::exists(out_dir)) return total;
    std::vector<fs::path> states;
    for (const auto& e : fs::directory_iterator(out_dir)) {
        const std::string name = e.path().filename().string();
        if (name.rfind("state-shard-", 0) == 0 && e.path().extension() == ".json") states.push_back(e.path());
    }
    std::sort(states.begin(), states.end());
    for (const auto& p : states) {
        std::ifstream in(p);
        total.merge(Summary::from_json(json::parse(in).at("summary")));
    }
    return total;
}

Summary enumerate_family(const FamilySpec& spec, const EnumerateOptions& opt) {
    const auto [begin, end] = spec.range();
    const bool persist = !opt.out_dir.empty();
    const std::uint64_t batch = std::max<std::uint64_t>(1, opt.batch);
    fs::path dir(opt.out_dir), records, state;
    Summary summary;
    std::uint64_t next = begin;

    if (persist) {
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
        const std::string k = std::to_string(spec.shard);
        records = dir / ("records-shard-" + k + ".jsonl.gz");
        state = dir / ("state-shard-" + k + ".json");
        bool resumed = false;
        if (opt.resume && fs::exists(state)) {
            std::ifstream in(state);
            json s = json::parse(in);
            if (s.at("spec") != spec_json(spec))
                throw std::runtime_error("state file " + state.string() + " belongs to a different spec");
            next = s.at("next");
            summary = Summary::from_json(s.at("summary"));
            const std::uintmax_t bytes = s.at("bytes");
            if (!fs::exists(records) || fs::file_size(records) < bytes)
                throw std::runtime_error("records file shorter than its checkpoint: " + records.string());
            fs::resize_file(records, bytes);
            resumed = true;
        }
        if (!resumed) {
            std::ofstream(records, std::ios::binary | std::ios::trunc);
            if (!fs::exists(records)) throw std::runtime_error("cannot create " + records.string());
        }
    }

    auto checkpoint = [&](bool done) {
        json s = {{"spec", spec_json(spec)},
                  {"next", next},
                  {"bytes", std::uintmax_t(fs::file_size(records))},
                  {"done", done},
                  {"summary", summary.to_json()}};
        write_atomic(state, s.dump());
    };

    while (next < end) {
        const std::uint64_t hi = std::min(end, next + batch);
        auto recs = compute_batch(spec, opt.check, next, hi, opt.workers);
        std::string lines;
        for (std::uint64_t i = next; i < hi; ++i) {
            const CheckRecord& r = recs[i - next];
            summary.add(r, i);
            if (opt.on_record) opt.on_record(r, i);
            if (persist) lines += record_json(r, i).dump() + "\n";
        }
        next = hi;
        if (persist) {
            append_member(records, lines);
            checkpoint(false);
        }
    }
    if (persist) {
        checkpoint(true);
        write_atomic(dir / "summary.csv", load_directory_summary(opt.out_dir).csv());
    }
    return summary;
}

}  // namespace qpsd

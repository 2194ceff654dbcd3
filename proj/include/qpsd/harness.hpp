// Cross-checking the classifier against the sphere oracle, and exhaustive
// enumeration of ternary families with sharded, resumable, gzip JSONL output.
//
// cross_check and the family indexing are header-only. enumerate_family lives
// in src/harness.cpp because it owns file state and links zlib.
#pragma once

#include "qpsd/classifier.hpp"
#include "qpsd/criteria2d.hpp"
#include "qpsd/io.hpp"
#include "qpsd/oracle.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace qpsd {

enum class Agreement { Agree, Mismatch, Uncertified };

inline const char* to_string(Agreement a) {
    switch (a) {
        case Agreement::Agree: return "Agree";
        case Agreement::Mismatch: return "Mismatch";
        default: return "Uncertified";
    }
}

struct CheckOptions {
    OracleOptions oracle;
    CaseOptions cases;
    bool sos_fast_path = false;  // skip the oracle when a verified SOS is attached
};

// Mismatch iff (is_psd and NegativeCertified) or (not is_psd and no valid witness),
// or an attached certificate fails exact re-verification.
struct CheckRecord {
    IntTensor tensor;
    Verdict verdict;
    std::optional<OracleStatus> oracle;  // empty when the fast path skipped it
    Agreement agreement = Agreement::Agree;
    double elapsed = 0;  // seconds
    std::string detail;

    std::string case_id() const { return verdict.case_id(); }
    bool is_psd() const { return verdict.is_psd; }
    Tri is_pd() const { return verdict.is_pd; }
};

inline Verdict classify_any(const IntTensor& T, const CaseOptions& opt = {}) {
    if (T.dim() == 3) return classify(T, opt);
    if (T[d1111] != 1 || T[d2222] != 1) throw std::invalid_argument("dim-2 classification expects a unit diagonal");
    return classify_2d_ternary(T[d1112], T[d1122], T[d1222]);
}

inline CheckRecord cross_check(const IntTensor& T, const CheckOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckRecord rec{T, classify_any(T, opt.cases), std::nullopt, Agreement::Agree, 0, {}};
    const Verdict& v = rec.verdict;

    bool sos_ok = false;
    if (auto* s = std::get_if<SOSCertificate>(&v.certificate)) {
        sos_ok = verify_sos(*s, T);
        if (!sos_ok) rec.detail = "attached SOS fails verification";
    }
    if (v.zero_witness && !check_zero_witness(T, *v.zero_witness)) rec.detail = "zero witness is not a zero";

    if (!v.is_psd) {
        auto* w = std::get_if<NegativeWitness>(&v.certificate);
        if (!w || !check_negative_witness(T, *w)) rec.detail = "NOT-PSD verdict without an exact negative witness";
    }
    if (!(opt.sos_fast_path && sos_ok)) {
        OracleResult o = sphere_min(T, opt.oracle);
        rec.oracle = o.status;
        if (v.is_psd && o.status == OracleStatus::NegativeCertified)
            rec.detail = "oracle refutes PSD at x = " + json(o.exact_witness->x).dump() + ", value " +
                         rat_str(o.exact_witness->value);
    }

    if (!rec.detail.empty()) rec.agreement = Agreement::Mismatch;
    else if (!v.certified) rec.agreement = Agreement::Uncertified;
    rec.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

inline json record_json(const CheckRecord& r, std::uint64_t index) {
    json j;
    j["index"] = index;
    j["tensor"] = r.tensor.entries();
    j["case"] = r.verdict.family;
    j["subcase"] = r.verdict.subcase;
    j["is_psd"] = r.verdict.is_psd;
    j["is_pd"] = to_string(r.verdict.is_pd);
    j["oracle"] = r.oracle ? to_string(*r.oracle) : "skipped";
    j["agreement"] = to_string(r.agreement);
    j["certificate"] = certificate_kind(r.verdict.certificate);
    j["elapsed_us"] = std::int64_t(r.elapsed * 1e6);
    if (r.agreement != Agreement::Agree) {
        j["detail"] = r.detail;
        j["verdict"] = verdict_json(r.verdict);
    }
    return j;
}

// Free slots are the off-diagonal ones; index digits run most significant first
// over free slots in canonical order, digit d meaning entry d - 1.
struct FamilySpec {
    int dim = 3;
    std::array<int, 3> diag{1, 1, 1};
    int shard = 0;
    int shards = 1;

    std::vector<int> free_slots() const {
        std::vector<int> f;
        for (int s = 0; s < slot_count(dim); ++s) {
            Exponent e = slot_exponent(dim, s);
            if (std::max({e[0], e[1], e[2]}) != 4) f.push_back(s);
        }
        return f;
    }
    std::uint64_t total() const {
        std::uint64_t n = 1;
        for (std::size_t k = 0; k < free_slots().size(); ++k) n *= 3;
        return n;
    }
    // Contiguous ranges; together they partition [0, total).
    std::pair<std::uint64_t, std::uint64_t> range() const {
        if (shards < 1 || shard < 0 || shard >= shards) throw std::invalid_argument("bad shard spec");
        const std::uint64_t n = total();
        return {n * shard / shards, n * (shard + 1) / shards};
    }
    IntTensor tensor_at(std::uint64_t index) const {
        IntTensor T(dim);
        for (int a = 0; a < dim; ++a) {
            Exponent e{0, 0, 0};
            e[a] = 4;
            T[slot_of(dim, e)] = diag[a];
        }
        auto f = free_slots();
        for (int k = int(f.size()) - 1; k >= 0; --k) {
            T[f[k]] = int(index % 3) - 1;
            index /= 3;
        }
        return T;
    }
    std::string diag_str() const {
        std::string s;
        for (int a = 0; a < dim; ++a) s += diag[a] < 0 ? "n" : std::to_string(diag[a]);
        return s;
    }
};

// Tallies keyed by (case, subcase, psd, pd).
struct Summary {
    struct Row {
        std::uint64_t count = 0, mismatches = 0;
    };
    std::map<std::tuple<std::string, std::string, bool, std::string>, Row> rows;
    std::uint64_t records = 0, agree = 0, mismatch = 0, uncertified = 0, not_covered = 0;
    std::vector<std::string> mismatch_samples;  // first few, as JSON lines

    void add(const CheckRecord& r, std::uint64_t index) {
        auto& row = rows[{r.verdict.family, r.verdict.subcase, r.verdict.is_psd, to_string(r.verdict.is_pd)}];
        ++row.count;
        ++records;
        if (r.verdict.family == "NotCovered") ++not_covered;
        switch (r.agreement) {
            case Agreement::Agree: ++agree; break;
            case Agreement::Uncertified: ++uncertified; break;
            case Agreement::Mismatch:
                ++mismatch;
                ++row.mismatches;
                if (mismatch_samples.size() < 20) mismatch_samples.push_back(record_json(r, index).dump());
                break;
        }
    }
    void merge(const Summary& o) {
        for (const auto& [k, v] : o.rows) {
            rows[k].count += v.count;
            rows[k].mismatches += v.mismatches;
        }
        records += o.records;
        agree += o.agree;
        mismatch += o.mismatch;
        uncertified += o.uncertified;
        not_covered += o.not_covered;
        for (const auto& s : o.mismatch_samples)
            if (mismatch_samples.size() < 20) mismatch_samples.push_back(s);
    }
    std::uint64_t psd_count() const {
        std::uint64_t n = 0;
        for (const auto& [k, v] : rows)
            if (std::get<2>(k)) n += v.count;
        return n;
    }
    std::uint64_t pd_count() const {
        std::uint64_t n = 0;
        for (const auto& [k, v] : rows)
            if (std::get<3>(k) == "true") n += v.count;
        return n;
    }
    std::string csv() const;
    json to_json() const;
    static Summary from_json(const json& j);
};

struct EnumerateOptions {
    CheckOptions check;
    std::string out_dir;  // empty: nothing is persisted
    int workers = 1;
    std::uint64_t batch = 4096;  // records per checkpoint
    bool resume = true;
    std::function<void(const CheckRecord&, std::uint64_t)> on_record;  // called in enumeration order
};

// Runs one shard. With out_dir set, writes records-shard-K.jsonl.gz and
// state-shard-K.json, then rewrites summary.csv from every shard state present.
// Throws std::runtime_error on I/O failure.
Summary enumerate_family(const FamilySpec& spec, const EnumerateOptions& opt);

// Aggregates the summaries of all shard states in a directory.
Summary load_directory_summary(const std::string& out_dir);

}  // namespace qpsd

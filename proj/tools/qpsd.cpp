// qpsd: command-line front end.
//
// Exit codes: 0 PSD, 1 not PSD, 2 input error, 3 NotCovered, 4 I/O error,
// 5 certificate verification failure (certify only).
#include "qpsd/harness.hpp"
#include "qpsd/io.hpp"
#include "qpsd/realroots.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace qpsd;

namespace {

enum Exit { kPsd = 0, kNotPsd = 1, kInput = 2, kNotCovered = 3, kIo = 4, kVerify = 5 };

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unreadable files map to exit 4, malformed contents to exit 2.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& t : v) s += t + " ";
    return s;
}

IntTensor load_tensor(const std::vector<std::string>& inline_entries, const std::string& file) {
    if (!file.empty() && !inline_entries.empty()) throw InputError("give either inline entries or --file, not both");
    std::string text = file.empty() ? join(inline_entries) : read_file(file);
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw InputError("no tensor given");
    IntTensor T = parse_tensor(text);
    if (!T.is_ternary()) throw InputError("entries must lie in {-1,0,1}");
    return T;
}

std::string vec_str(const std::vector<long>& x) {
    std::string s = "(";
    for (std::size_t k = 0; k < x.size(); ++k) s += (k ? ", " : "") + std::to_string(x[k]);
    return s + ")";
}

void print_verdict(const Verdict& v, bool as_json) {
    if (as_json) {
        std::cout << verdict_json(v).dump(2) << "\n";
        return;
    }
    std::cout << "case:        " << v.case_id() << "\n";
    std::cout << "psd:         " << (v.is_psd ? "true" : "false") << "\n";
    std::cout << "pd:          " << to_string(v.is_pd) << "\n";
    std::cout << "normalizer:  " << v.normalizer.str() << "\n";
    std::cout << "certificate: " << certificate_kind(v.certificate) << "\n";
    if (auto* w = std::get_if<NegativeWitness>(&v.certificate))
        std::cout << "  x = " << vec_str(w->x) << ", value " << rat_str(w->value) << "\n";
    if (auto* s = std::get_if<SOSCertificate>(&v.certificate)) {
        for (const auto& [c, q] : s->squares) std::cout << "  + " << rat_str(c) << " * (" << q.str() << ")^2\n";
        for (const auto& [c, e] : s->remainder)
            std::cout << "  + " << rat_str(c) << " * " << Poly::monomial(e).str() << "\n";
    }
    if (auto* c = std::get_if<CaseCitation>(&v.certificate)) std::cout << "  " << c->case_id << ": " << c->note << "\n";
    if (v.zero_witness) {
        std::cout << "zero:        (";
        for (std::size_t k = 0; k < v.zero_witness->x.size(); ++k)
            std::cout << (k ? ", " : "") << rat_str(v.zero_witness->x[k]);
        std::cout << ")\n";
    }
    if (!v.note.empty()) std::cout << "note:        " << v.note << "\n";
}

int verdict_exit(const Verdict& v) {
    if (!v.certified) return kNotCovered;
    return v.is_psd ? kPsd : kNotPsd;
}

// Re-verifies every exactly checkable part of a verdict.
std::string recheck(const Verdict& v, const IntTensor& T) {
    if (auto* s = std::get_if<SOSCertificate>(&v.certificate))
        if (!verify_sos(*s, T)) return "SOS identity does not hold";
    if (auto* w = std::get_if<NegativeWitness>(&v.certificate))
        if (!check_negative_witness(T, *w)) return "negative witness does not evaluate as stated";
    if (auto* z = std::get_if<ZeroWitness>(&v.certificate))
        if (!check_zero_witness(T, *z)) return "zero witness is not a zero";
    if (v.zero_witness && !check_zero_witness(T, *v.zero_witness)) return "zero witness is not a zero";
    if (!v.is_psd && !v.has_negative_witness()) return "NOT-PSD verdict without a negative witness";
    return {};
}

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* s = std::getenv(name);
    if (!s || !*s) return fallback;
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw InputError(std::string("bad value for ") + name + ": " + s);
    }
}

const char* kFormats = R"(Canonical slot order (dim 3, 15 entries):
  1111 1112 1113 1122 1123 1133 1222 1223 1233 1333 2222 2223 2233 2333 3333
Canonical slot order (dim 2, 5 entries):
  1111 1112 1122 1222 2222
Text tensor: the entries above as integers separated by spaces or commas.
JSON tensor: {"1112": -1, "1122": 1, ...}; keys are index strings, missing slots are 0.
Verdict JSON:
  {"is_psd": bool, "is_pd": "true"|"false"|"unknown", "case": str, "subcase": str,
   "normalizer": "[+1,-3,+2]", "certificate": {...}, "zero_witness": {...}?}
  normalizer g maps the input T to the frame N = g.T in which the case was read;
  "[+1,-3,+2]" sends x1 to +y1, x2 to -y3, x3 to +y2.
Certificate JSON ("kind" selects the shape; rationals are "p/q"):
  sos:              {"squares": [{"coef", "poly": [{"coef", "exp": [a,b,c]}], "text"}],
                     "remainder": [{"coef", "exp"}]}
  negative_witness: {"x": [ints], "value": "p/q"}
  zero_witness:     {"x": ["p/q", ...]}
  case_citation:    {"case": str, "note": str}
Record JSONL (enumerate): {"index", "tensor", "case", "subcase", "is_psd", "is_pd",
  "oracle", "agreement", "certificate", "elapsed_us", "detail"?, "verdict"?}
Summary CSV columns: case,subcase,psd,pd,count,mismatches
Polynomials (roots): integer coefficients, constant term first.
)";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decision procedure and certificates for ternary-entry quartic tensors"};
    app.require_subcommand(1);

    std::vector<std::string> entries;
    std::string file;
    bool as_json = false;

    auto* c_classify = app.add_subcommand("classify", "classify a tensor (exit 0 PSD, 1 not PSD, 3 NotCovered)");
    c_classify->add_option("entries", entries, "15 (or 5) integers in canonical order");
    c_classify->add_option("-f,--file", file, "tensor file (text or JSON)");
    c_classify->add_flag("--json", as_json, "print the verdict as JSON");

    std::string cert_file;
    auto* c_certify = app.add_subcommand("certify", "classify, then re-verify the certificate exactly");
    c_certify->add_option("entries", entries, "15 (or 5) integers in canonical order");
    c_certify->add_option("-f,--file", file, "tensor file (text or JSON)");
    c_certify->add_option("--cert", cert_file, "verify this certificate or verdict JSON instead");
    c_certify->add_flag("--json", as_json, "print the verdict as JSON");

    int bound = 32;
    auto* c_witness = app.add_subcommand("witness", "search integer vectors for a negative (or zero) value");
    c_witness->add_option("entries", entries, "15 (or 5) integers in canonical order");
    c_witness->add_option("-f,--file", file, "tensor file (text or JSON)");
    c_witness->add_option("--bound", bound, "max-abs bound of the scan")->check(CLI::Range(1, 256));

    std::vector<std::string> coeffs;
    auto* c_roots = app.add_subcommand("roots", "count distinct real roots of an integer polynomial");
    c_roots->add_option("coeffs", coeffs, "coefficients, constant term first");
    c_roots->add_option("-f,--file", file, "file with the coefficient list");

    OracleOptions oo;
    oo.seed = env_u64("QPSD_SEED", 1);
    auto* c_oracle = app.add_subcommand("oracle", "numerical sphere minimisation with exact refinement");
    c_oracle->add_option("entries", entries, "15 (or 5) integers in canonical order");
    c_oracle->add_option("-f,--file", file, "tensor file (text or JSON)");
    c_oracle->add_option("--restarts", oo.restarts)->check(CLI::PositiveNumber);
    c_oracle->add_option("--iters", oo.iters)->check(CLI::PositiveNumber);
    c_oracle->add_option("--seed", oo.seed);

    std::string diag = "111", shard, out_dir;
    int workers = 1;
    bool fast = false, fresh = false;
    auto* c_enum = app.add_subcommand("enumerate", "exhaustive cross-check of a ternary family");
    c_enum->add_option("--diag", diag, "diagonal pattern: 3 digits (or 2 for dim 2) in {0,1}, 'n' for -1");
    c_enum->add_option("--shard", shard, "K/N, or K with N from QPSD_SHARDS");
    c_enum->add_option("--out", out_dir, "output directory (records, state, summary.csv)");
    c_enum->add_option("--seed", oo.seed, "oracle seed (default QPSD_SEED or 1)");
    c_enum->add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 256));
    c_enum->add_flag("--fast", fast, "skip the oracle when a verified SOS is attached");
    c_enum->add_flag("--fresh", fresh, "ignore existing state and start over");

    auto* c_formats = app.add_subcommand("formats", "print the slot order and I/O schemas");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kInput;
    }

    try {
        if (*c_formats) {
            std::cout << kFormats;
            return 0;
        }
        if (*c_classify) {
            IntTensor T = load_tensor(entries, file);
            Verdict v = classify_any(T);
            print_verdict(v, as_json);
            return verdict_exit(v);
        }
        if (*c_certify) {
            IntTensor T = load_tensor(entries, file);
            Verdict v;
            if (!cert_file.empty()) {
                json j = json::parse(read_file(cert_file));
                if (j.contains("is_psd")) {
                    v = verdict_from_json(j);
                } else {
                    v.certificate = certificate_from_json(j);
                    v.is_psd = !std::holds_alternative<NegativeWitness>(v.certificate);
                    v.is_pd = Tri::Unknown;
                    if (std::holds_alternative<CaseCitation>(v.certificate))
                        throw InputError("a case citation is not exactly checkable on its own");
                }
            } else {
                v = classify_any(T);
            }
            print_verdict(v, as_json);
            std::string why = recheck(v, T);
            if (!why.empty()) {
                std::cerr << "verification failed: " << why << "\n";
                return kVerify;
            }
            std::cerr << "certificate verified (" << certificate_kind(v.certificate) << ")\n";
            return verdict_exit(v);
        }
        if (*c_witness) {
            IntTensor T = load_tensor(entries, file);
            if (auto w = find_negative_witness(T, bound)) {
                std::cout << "negative x = " << vec_str(w->x) << ", value " << rat_str(w->value) << "\n";
                return kNotPsd;
            }
            if (auto z = search_zero_witness(T, bound)) {
                std::cout << "no negative value within bound " << bound << "; zero at (";
                for (std::size_t k = 0; k < z->x.size(); ++k) std::cout << (k ? ", " : "") << rat_str(z->x[k]);
                std::cout << ")\n";
            } else {
                std::cout << "no negative or zero value within bound " << bound << "\n";
            }
            return kPsd;
        }
        if (*c_roots) {
            std::string text = file.empty() ? join(coeffs) : read_file(file);
            std::replace(text.begin(), text.end(), ',', ' ');
            std::istringstream in(text);
            std::vector<mpz_class> a;
            for (std::string tok; in >> tok;) {
                mpz_class z;
                if (z.set_str(tok, 10) != 0) throw InputError("not an integer: " + tok);
                a.push_back(z);
            }
            IntPoly p(a);
            if (p.is_zero()) throw InputError("zero polynomial");
            RootCount rc = count_distinct_real_roots_detail(p);
            std::cout << rc.count << "\n";
            std::cout << "fallback: " << (rc.fallback ? "yes (vanishing inner determinant, Sturm count)" : "no")
                      << "\n";
            return 0;
        }
        if (*c_oracle) {
            IntTensor T = load_tensor(entries, file);
            OracleResult r = sphere_min(T, oo);
            std::cout << "approx_min: " << r.approx_min << "\n";
            std::cout << "argmin:     (" << r.argmin[0] << ", " << r.argmin[1];
            if (T.dim() == 3) std::cout << ", " << r.argmin[2];
            std::cout << ")\nstatus:     " << to_string(r.status) << "\n";
            if (r.exact_witness)
                std::cout << "witness:    " << vec_str(r.exact_witness->x) << ", value "
                          << rat_str(r.exact_witness->value) << "\n";
            return r.status == OracleStatus::NegativeCertified ? kNotPsd : kPsd;
        }
        if (*c_enum) {
            FamilySpec spec;
            spec.dim = int(diag.size());
            if (spec.dim != 2 && spec.dim != 3) throw InputError("--diag needs 2 or 3 digits");
            for (int a = 0; a < spec.dim; ++a) {
                char ch = diag[a];
                if (ch != '0' && ch != '1' && ch != 'n') throw InputError("--diag digits must be 0, 1 or n");
                spec.diag[a] = ch == 'n' ? -1 : ch - '0';
            }
            spec.shards = int(env_u64("QPSD_SHARDS", 1));
            if (!shard.empty()) {
                auto slash = shard.find('/');
                try {
                    spec.shard = std::stoi(shard.substr(0, slash));
                    if (slash != std::string::npos) spec.shards = std::stoi(shard.substr(slash + 1));
                } catch (const std::exception&) {
                    throw InputError("bad --shard: " + shard);
                }
            }
            if (spec.shards < 1 || spec.shard < 0 || spec.shard >= spec.shards) throw InputError("bad shard index");
            EnumerateOptions eo;
            eo.check.oracle = oo;
            eo.check.sos_fast_path = fast;
            eo.out_dir = out_dir;
            eo.workers = workers;
            eo.resume = !fresh;
            Summary s;
            try {
                s = enumerate_family(spec, eo);
            } catch (const std::runtime_error& e) {
                std::cerr << "I/O error: " << e.what() << "\n";
                return kIo;
            }
            std::cout << s.csv();
            std::cout << "records " << s.records << ", psd " << s.psd_count() << ", pd " << s.pd_count() << ", agree "
                      << s.agree << ", mismatch " << s.mismatch << ", uncertified " << s.uncertified
                      << ", not covered " << s.not_covered << "\n";
            for (const auto& m : s.mismatch_samples) std::cout << "MISMATCH " << m << "\n";
            return s.mismatch ? kNotPsd : 0;
        }
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIo;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    }
    return 0;
}

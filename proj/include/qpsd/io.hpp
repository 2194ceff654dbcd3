// Tensor parsing and the JSON schemas for verdicts, certificates and records.
//
// Text tensors are 15 (dim 3) or 5 (dim 2) integers in canonical slot order,
// separated by whitespace or commas. JSON tensors map index strings such as
// "1112" to integers; missing slots are 0. Rationals are always "p/q".
#pragma once

#include "qpsd/certificates.hpp"
#include "qpsd/form.hpp"
#include "qpsd/verdict.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpsd {

using json = nlohmann::ordered_json;

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline std::string rat_str(mpq_class q) {
    q.canonicalize();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline mpq_class parse_rat(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline IntTensor parse_tensor_text(const std::string& text) {
    std::string t = text;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream in(t);
    std::vector<int> v;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        long x;
        try {
            x = std::stol(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("not an integer: " + tok);
        }
        if (used != tok.size()) throw ParseError("not an integer: " + tok);
        v.push_back(int(x));
    }
    if (v.size() == 15) return IntTensor(3, v);
    if (v.size() == 5) return IntTensor(2, v);
    throw ParseError("expected 15 or 5 entries, got " + std::to_string(v.size()));
}

// Keys may be unsorted ("2111" names slot 1112); repeated slots must agree.
inline IntTensor parse_tensor_json(const json& j, int dim = 3) {
    if (!j.is_object()) throw ParseError("tensor JSON must be an object");
    IntTensor T(dim);
    std::vector<bool> seen(T.size(), false);
    for (const auto& [key, val] : j.items()) {
        if (key.size() != 4) throw ParseError("bad index key: " + key);
        std::array<int, 4> idx{};
        for (int p = 0; p < 4; ++p) {
            int a = key[p] - '0';
            if (a < 1 || a > dim) throw ParseError("bad index key: " + key);
            idx[p] = a;
        }
        if (!val.is_number_integer()) throw ParseError("entry " + key + " is not an integer");
        MultiIndex m = MultiIndex::of(idx[0], idx[1], idx[2], idx[3]);
        int s = slot_of(dim, m);
        if (seen[s] && T[s] != val.get<int>())
            throw ParseError("conflicting values for " + m.str());
        T[s] = val.get<int>();
        seen[s] = true;
    }
    return T;
}

inline IntTensor parse_tensor(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw ParseError(std::string("bad JSON: ") + e.what());
        }
        return parse_tensor_json(j);
    }
    return parse_tensor_text(text);
}

inline std::string tensor_text(const IntTensor& T) {
    std::string s;
    for (int k = 0; k < T.size(); ++k) s += (k ? " " : "") + std::to_string(T[k]);
    return s;
}

inline json tensor_json(const IntTensor& T) {
    json j = json::object();
    for (int k = 0; k < T.size(); ++k) j[slot_name(T.dim(), k)] = T[k];
    return j;
}

inline json poly_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"coef", rat_str(c)}, {"exp", {e[0], e[1], e[2]}}});
    return terms;
}

inline Poly poly_from_json(const json& j) {
    Poly p;
    for (const auto& t : j) {
        auto e = t.at("exp").get<std::vector<int>>();
        if (e.size() != 3) throw ParseError("exponent must have 3 entries");
        p.add({e[0], e[1], e[2]}, parse_rat(t.at("coef").get<std::string>()));
    }
    return p;
}

inline json certificate_json(const Certificate& c) {
    json j;
    j["kind"] = certificate_kind(c);
    if (auto* s = std::get_if<SOSCertificate>(&c)) {
        json sq = json::array(), rem = json::array();
        for (const auto& [k, q] : s->squares) sq.push_back({{"coef", rat_str(k)}, {"poly", poly_json(q)}, {"text", q.str()}});
        for (const auto& [k, e] : s->remainder) rem.push_back({{"coef", rat_str(k)}, {"exp", {e[0], e[1], e[2]}}});
        j["squares"] = sq;
        j["remainder"] = rem;
    } else if (auto* w = std::get_if<NegativeWitness>(&c)) {
        j["x"] = w->x;
        j["value"] = rat_str(w->value);
    } else if (auto* z = std::get_if<ZeroWitness>(&c)) {
        json x = json::array();
        for (const auto& v : z->x) x.push_back(rat_str(v));
        j["x"] = x;
    } else if (auto* cc = std::get_if<CaseCitation>(&c)) {
        j["case"] = cc->case_id;
        j["note"] = cc->note;
    }
    return j;
}

inline Certificate certificate_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "sos") {
        SOSCertificate s;
        for (const auto& q : j.at("squares")) s.sq(parse_rat(q.at("coef")), poly_from_json(q.at("poly")));
        for (const auto& r : j.at("remainder")) {
            auto e = r.at("exp").get<std::vector<int>>();
            s.rem(parse_rat(r.at("coef")), {e.at(0), e.at(1), e.at(2)});
        }
        return s;
    }
    if (kind == "negative_witness")
        return NegativeWitness{j.at("x").get<std::vector<long>>(), parse_rat(j.at("value").get<std::string>())};
    if (kind == "zero_witness") {
        ZeroWitness z;
        for (const auto& v : j.at("x")) z.x.push_back(parse_rat(v.get<std::string>()));
        return z;
    }
    if (kind == "case_citation") return CaseCitation{j.at("case"), j.value("note", "")};
    if (kind == "none") return std::monostate{};
    throw ParseError("unknown certificate kind: " + kind);
}

inline json verdict_json(const Verdict& v) {
    json j;
    j["is_psd"] = v.is_psd;
    j["is_pd"] = to_string(v.is_pd);
    j["case"] = v.family;
    j["subcase"] = v.subcase;
    j["normalizer"] = v.normalizer.str();
    j["certificate"] = certificate_json(v.certificate);
    if (v.zero_witness) j["zero_witness"] = certificate_json(*v.zero_witness);
    if (!v.certified) j["certified"] = false;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

inline SignedPerm parse_signed_perm(const std::string& s) {
    // "[+1,-3,+2]"
    SignedPerm g = SignedPerm::identity(3);
    std::vector<std::pair<int, int>> parts;
    for (std::size_t p = 0; p < s.size(); ++p)
        if (s[p] == '+' || s[p] == '-') {
            if (p + 1 >= s.size() || !std::isdigit(static_cast<unsigned char>(s[p + 1])))
                throw ParseError("bad signed permutation: " + s);
            parts.emplace_back(s[p] == '-' ? -1 : 1, s[p + 1] - '1');
        }
    if (parts.size() != 2 && parts.size() != 3) throw ParseError("bad signed permutation: " + s);
    g.n = int(parts.size());
    for (int a = 0; a < g.n; ++a) {
        g.signs[a] = parts[a].first;
        g.perm[a] = parts[a].second;
    }
    return g;
}

inline Tri parse_tri(const std::string& s) {
    if (s == "true") return Tri::True;
    if (s == "false") return Tri::False;
    if (s == "unknown") return Tri::Unknown;
    throw ParseError("bad is_pd value: " + s);
}

inline Verdict verdict_from_json(const json& j) {
    Verdict v;
    v.is_psd = j.at("is_psd").get<bool>();
    v.is_pd = parse_tri(j.at("is_pd").get<std::string>());
    v.family = j.at("case").get<std::string>();
    v.subcase = j.value("subcase", "");
    v.normalizer = parse_signed_perm(j.at("normalizer").get<std::string>());
    v.certificate = certificate_from_json(j.at("certificate"));
    if (j.contains("zero_witness")) v.zero_witness = std::get<ZeroWitness>(certificate_from_json(j.at("zero_witness")));
    v.certified = j.value("certified", true);
    v.note = j.value("note", "");
    return v;
}

}  // namespace qpsd

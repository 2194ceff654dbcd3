// Decision procedure for ternary-entry dim-3 quartic tensors.
//
// classify() routes on the diagonal, applies the pair filter (unit diagonal)
// or the zero-diagonal prefilter, picks the family from the pair-product
// pattern, and then searches the 48 signed permutations for a frame in which
// the family's hypothesis and one of its subcases hold. The reported frame is
// the lexicographically smallest qualifying normalized tensor, so verdicts are
// invariant under the group action.
#pragma once

#include "qpsd/cases.hpp"
#include "qpsd/certificates.hpp"
#include "qpsd/form.hpp"
#include "qpsd/oracle.hpp"
#include "qpsd/sos_library.hpp"
#include "qpsd/verdict.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpsd {

namespace detail {
constexpr std::array<int, 3> kDiag{s1111, s2222, s3333};

inline void require_ternary3(const IntTensor& T) {
    if (T.dim() != 3) throw std::invalid_argument("expected a dim-3 tensor");
    if (!T.is_ternary()) throw std::invalid_argument("entries must lie in {-1,0,1}");
}

// Slot of t_{a a a b} for axes a != b (0-based).
inline int slot3(int a, int b) {
    Exponent e{0, 0, 0};
    e[a] = 3;
    e[b] = 1;
    return slot_of(3, e);
}
inline int slot22(int a, int b) {
    Exponent e{0, 0, 0};
    e[a] = 2;
    e[b] = 2;
    return slot_of(3, e);
}

inline NegativeWitness embed(const NegativeWitness& w2, int a, int b) {
    NegativeWitness w;
    w.x.assign(3, 0);
    w.x[a] = w2.x[0];
    w.x[b] = w2.x[1];
    w.value = w2.value;
    return w;
}

inline std::optional<NegativeWitness> pair_witness(const IntTensor& T, int a, int b) {
    if (a > b) std::swap(a, b);  // principal_pair orders its axes
    auto P = principal_pair(T, a + 1, b + 1);
    if (auto w = find_negative_witness(P, 32)) return embed(*w, a, b);
    return std::nullopt;
}
}  // namespace detail

// Necessary pair condition on a unit-diagonal tensor: every principal pair
// must have t_aabb = 1 or vanish off the diagonal.
inline std::optional<NegativeWitness> necessary_pair_filter(const IntTensor& T) {
    detail::require_ternary3(T);
    for (int s : detail::kDiag)
        if (T[s] != 1) throw std::invalid_argument("pair filter expects a unit diagonal");
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            int u = T[detail::slot3(a, b)], m = T[detail::slot22(a, b)], w = T[detail::slot3(b, a)];
            if (m == 1 || (u == 0 && m == 0 && w == 0)) continue;
            if (auto wit = detail::pair_witness(T, a, b)) return wit;
        }
    return std::nullopt;
}

// Zero-diagonal axis a forces t_aaab = 0 and t_aabb >= 0; returns a witness on violation.
inline std::optional<NegativeWitness> zero_diagonal_prefilter(const IntTensor& T) {
    for (int a = 0; a < 3; ++a) {
        if (T[detail::kDiag[a]] != 0) continue;
        for (int b = 0; b < 3; ++b) {
            if (b == a) continue;
            if (T[detail::slot3(a, b)] == 0 && T[detail::slot22(a, b)] >= 0) continue;
            if (auto w = detail::pair_witness(T, a, b)) return w;
            if (auto w = find_negative_witness(T, 32)) return w;
        }
    }
    return std::nullopt;
}

// Family selected by the diagonal and, for a unit diagonal, the pair products.
inline std::string family_id(const IntTensor& T) {
    detail::require_ternary3(T);
    int zeros = 0;
    for (int s : detail::kDiag) {
        if (T[s] == -1) return "DiagNegative";
        zeros += T[s] == 0;
    }
    if (zeros == 3) return "COR1";
    if (zeros == 2) return "COR5";
    if (zeros == 1) return "COR4";
    std::array<int, 3> p{T[s1112] * T[s1222], T[s2223] * T[s2333], T[s1113] * T[s1333]};
    std::array<int, 3> both_zero{T[s1112] == 0 && T[s1222] == 0, T[s2223] == 0 && T[s2333] == 0,
                                 T[s1113] == 0 && T[s1333] == 0};
    std::sort(p.begin(), p.end());
    using P = std::array<int, 3>;
    if (p == P{1, 1, 1}) return "T3.3";
    if (p == P{-1, 1, 1} || p == P{0, 1, 1} || p == P{-1, -1, -1}) return "R1";
    if (p == P{-1, -1, 1}) return "T3.5";
    if (p == P{0, 0, 1}) return "T3.13";
    if (p == P{-1, 0, 0}) return "T3.14";
    if (p == P{-1, 0, 1}) return "T3.15";
    if (p == P{-1, -1, 0}) return "T3.12";
    switch (both_zero[0] + both_zero[1] + both_zero[2]) {
        case 3: return "T3.1";
        case 0: return "T3.8";
        case 1: return "T3.9";
        default: return "T3.10";
    }
}

struct Dispatch {
    std::string family;               // "NotCovered" when no frame satisfies the hypothesis
    std::optional<SignedPerm> frame;  // smallest normalized tensor satisfying the hypothesis
};

inline Dispatch dispatch(const IntTensor& T) {
    detail::require_ternary3(T);
    for (int s : detail::kDiag)
        if (T[s] != 1) throw std::invalid_argument("dispatch expects a unit diagonal");
    const std::string id = family_id(T);
    const Family& F = family(id);
    std::optional<IntTensor> best;
    Dispatch d{id, std::nullopt};
    for (const auto& g : signed_perms(3)) {
        IntTensor N = apply(g, T);
        if (!F.hypothesis(Roles(N))) continue;
        if (!best || N < *best) {
            best = N;
            d.frame = g;
        }
    }
    if (!d.frame) d.family = "NotCovered";
    return d;
}

// Structural zero for a PSD tensor, else a bounded grid search.
inline std::optional<ZeroWitness> find_zero_witness(const std::string& family_id, const std::string& subcase,
                                                    const IntTensor& T, const SignedPerm& frame) {
    for (int a = 0; a < 3; ++a)
        if (T[detail::kDiag[a]] == 0) {
            ZeroWitness z{{0, 0, 0}};
            z.x[a] = 1;
            if (check_zero_witness(T, z)) return z;
        }
    // A pair with t_aaab = t_abbb = s and t_aabb = 1 restricts to (x_a + s x_b)^4.
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            int s = T[detail::slot3(a, b)];
            if (s == 0 || s != T[detail::slot3(b, a)]) continue;
            ZeroWitness z{{0, 0, 0}};
            z.x[a] = 1;
            z.x[b] = -s;
            if (check_zero_witness(T, z)) return z;
        }
    if (family_id == "T3.12" && subcase == "a0") {
        // Frame -t_iiik = t_jjjk = 1 has the zero (2,1,1); other frames differ by sign flips.
        IntTensor N = apply(frame, T);
        Roles r(N);
        ZeroWitness z{{2 * -r.iiik, r.jjjk, 1}};
        if (check_zero_witness(N, z)) return pull_back(z, frame);
    }
    return search_zero_witness(T, 8);
}

namespace detail {
inline Verdict not_psd(Verdict v, const IntTensor& T, std::optional<NegativeWitness> w) {
    v.is_psd = false;
    v.is_pd = Tri::False;
    if (!w) w = find_negative_witness(T, 32);
    if (w) v.certificate = *w;
    else v.note = "no integer witness within bound 32";
    return v;
}
}  // namespace detail

inline Verdict classify(const IntTensor& T, const CaseOptions& opt = {}) {
    detail::require_ternary3(T);
    Verdict v;
    for (int a = 0; a < 3; ++a)
        if (T[detail::kDiag[a]] == -1) {
            v.family = "DiagNegative";
            NegativeWitness w{{0, 0, 0}, 0};
            w.x[a] = 1;
            w.value = evaluate(T, w.x);
            return detail::not_psd(v, T, w);
        }

    v.family = family_id(T);
    const Family& F = family(v.family);

    // Frame search: smallest N among hypothesis-and-subcase frames, else among hypothesis frames.
    std::optional<IntTensor> best_match, best_hyp;
    SignedPerm g_match = SignedPerm::identity(3), g_hyp = g_match;
    for (const auto& g : signed_perms(3)) {
        IntTensor N = apply(g, T);
        Roles r(N);
        if (!F.hypothesis(r)) continue;
        if (!best_hyp || N < *best_hyp) {
            best_hyp = N;
            g_hyp = g;
        }
        if (best_match && !(N < *best_match)) continue;
        for (const auto& sc : F.subcases)
            if (sc.holds(r, opt)) {
                best_match = N;
                g_match = g;
                break;
            }
    }

    if (!best_hyp) {
        v.family = "NotCovered";
        v.certified = false;
        v.note = "no frame satisfies the family hypothesis; oracle answer";
        OracleResult o = sphere_min(T);
        if (o.exact_witness) return detail::not_psd(v, T, o.exact_witness);
        v.is_psd = true;
        v.is_pd = Tri::Unknown;
        return v;
    }

    const bool unit_diag = T[s1111] == 1 && T[s2222] == 1 && T[s3333] == 1;
    std::optional<NegativeWitness> pre = unit_diag ? necessary_pair_filter(T) : zero_diagonal_prefilter(T);
    const bool failed_pre = pre.has_value();
    if (failed_pre || F.kind == FamilyKind::NotPsd || !best_match) {
        v.normalizer = g_hyp;
        if (failed_pre) v.subcase = unit_diag ? "pair" : "zero-diag";
        return detail::not_psd(v, T, pre);
    }

    v.normalizer = g_match;
    Roles r(*best_match);
    const Subcase* sc = nullptr;
    for (const auto& s : F.subcases)
        if (s.holds(r, opt)) {
            sc = &s;
            break;
        }
    v.subcase = sc->label;
    v.is_psd = true;
    PdRule pd = F.kind == FamilyKind::PdIff ? PdRule::True : sc->pd;
    v.is_pd = pd == PdRule::True ? Tri::True : pd == PdRule::False ? Tri::False : Tri::Unknown;

    if (auto sos = build_sos(v.family, v.subcase, *best_match)) {
        SOSCertificate c = pull_back(*sos, g_match);
        if (verify_sos(c, T)) v.certificate = c;
        else v.note = "decomposition failed verification";
    }
    if (std::holds_alternative<std::monostate>(v.certificate))
        v.certificate = CaseCitation{v.case_id(), "positivity argued without an explicit decomposition"};

    if (v.is_pd != Tri::True) {
        v.zero_witness = find_zero_witness(v.family, v.subcase, T, g_match);
        if (v.zero_witness) v.is_pd = Tri::False;
    }
    return v;
}

}  // namespace qpsd

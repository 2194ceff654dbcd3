// Positive (semi-)definiteness of 2-dim symmetric quartic tensors with unit diagonal.
#pragma once

#include "qpsd/certificates.hpp"
#include "qpsd/form.hpp"
#include "qpsd/verdict.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace qpsd {

// Off-diagonal entries of a dim-2 tensor with t1111 = t2222 = 1.
struct Criteria2dInput {
    mpq_class t1112, t1122, t1222;

    void validate() const {
        if (abs(t1112) > 1 || abs(t1122) > 1 || abs(t1222) > 1)
            throw std::invalid_argument("entries must satisfy |t| <= 1");
    }
    SymTensor4 tensor() const { return SymTensor4(2, {mpq_class(1), t1112, t1122, t1222, mpq_class(1)}); }
    static Criteria2dInput of(const SymTensor4& T) { return {T[d1112], T[d1122], T[d1222]}; }
};

namespace detail {
struct Terms2d {
    mpq_class lhs3, rhs3;  // 27 (...)^2 and (...)^3 of the cubic condition
    bool second;           // (t1112 - t1222)^2 <= 6 t1122 + 2
};
inline Terms2d terms2d(const Criteria2dInput& c) {
    const mpq_class &a = c.t1112, &b = c.t1122, &d = c.t1222;
    mpq_class inner = b + 2 * a * b * d - b * b * b - d * d - a * a;
    mpq_class base = 1 - 4 * a * d + 3 * b * b;
    return {27 * inner * inner, base * base * base, (a - d) * (a - d) <= 6 * b + 2};
}
}  // namespace detail

inline bool psd_2d_general(const Criteria2dInput& c) {
    c.validate();
    auto t = detail::terms2d(c);
    return c.t1122 >= mpq_class(-1, 3) && c.t1122 <= 1 && t.second && t.lhs3 <= t.rhs3;
}

// Disjunction of the equality branch and the strict-inequality branch.
inline bool pd_2d_general(const Criteria2dInput& c) {
    c.validate();
    auto t = detail::terms2d(c);
    bool equality_branch = c.t1122 >= mpq_class(1, 3) && c.t1122 < 1 && 2 * c.t1112 * c.t1112 + 1 == 3 * c.t1122 &&
                           c.t1112 == c.t1222;
    bool strict_branch = c.t1122 > mpq_class(-1, 3) && c.t1122 <= 1 && t.second && t.lhs3 < t.rhs3;
    return equality_branch || strict_branch;
}

inline Verdict classify_2d_ternary(int t1112, int t1122, int t1222) {
    for (int v : {t1112, t1122, t1222})
        if (v < -1 || v > 1) throw std::invalid_argument("entries must lie in {-1,0,1}");
    IntTensor T(2, {1, t1112, t1122, t1222, 1});
    Verdict v;
    v.family = "L2.3";
    v.normalizer = SignedPerm::identity(2);
    const bool all_zero = t1112 == 0 && t1122 == 0 && t1222 == 0;
    v.is_psd = all_zero || t1122 == 1;
    const bool pd = all_zero || (t1122 == 1 && (t1112 * t1222 == 0 || t1112 * t1222 == -1));
    v.is_pd = pd ? Tri::True : Tri::False;
    if (!v.is_psd) {
        if (auto w = find_negative_witness(T, 8)) v.certificate = *w;
    } else if (pd) {
        v.certificate = CaseCitation{"L2.3", "unit-diagonal binary quartic with ternary entries"};
    } else {
        if (auto z = search_zero_witness(T, 8)) {
            v.zero_witness = z;
            v.certificate = *z;
        }
    }
    return v;
}

}  // namespace qpsd

// Sum-of-squares decompositions for the constructive subcases, written in the
// normalized frame: x1, x2, x3 play the roles i, j, k.
//
// Each display lists only its squares. The remainder is expand(N) minus the
// squares and must consist of positive even monomials, which covers both the
// "=" displays and the ">=" displays that drop 6 t_aabb x_a^2 x_b^2 terms.
// A display is kept in its printed form; where the printed form does not
// verify, a corrected form is listed next to it and used instead.
#pragma once

#include "qpsd/cases.hpp"
#include "qpsd/certificates.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qpsd {

using Squares = std::vector<std::pair<mpq_class, Poly>>;

// Printed and corrected square lists; an empty list means "no display".
struct Display {
    Squares literal;
    std::optional<Squares> corrected;
    std::string erratum;  // what the correction changes
};

namespace sos {

inline Poly x(int a) { return Poly::var(a); }
inline Poly fourth(const Poly& q) { return q * q; }  // (q^2)^2 entered as the square of q^2

using Builder = std::function<Display(const Roles&)>;

inline std::map<std::string, Builder> build_table() {
    const Poly xi = x(0), xj = x(1), xk = x(2);
    const Poly ii = xi * xi, jj = xj * xj, kk = xk * xk, ij = xi * xj, ik = xi * xk, jk = xj * xk;
    using R = const Roles&;
    std::map<std::string, Builder> t;
    auto plain = [](Squares s) { return Display{std::move(s), std::nullopt, {}}; };

    // All t_iiij-type entries zero.
    t["T3.1.a"] = [=](R) { return plain({{6, ij + ik + jk}}); };
    t["T3.1.b"] = [=](R) { return plain({}); };
    t["T3.1.c"] = [=](R) { return plain({{6, ij + ik - jk}}); };
    t["T3.1.d"] = [=](R r) { return plain({{6, ij + r.iijk * ik}}); };
    for (const char* s : {"a", "b", "c", "d"}) t[std::string("COR1.") + s] = t[std::string("T3.1.") + s];

    t["T3.3"] = [=](R r) { return plain({{1, fourth(xi + r.iiij * xj + r.iiik * xk)}}); };

    t["T3.5.p1"] = [=](R r) {
        Poly q = ii - jj + kk + 2 * r.iiik * ik + 2 * r.jkkk * jk + 2 * r.iiij * ij;
        return plain({{1, q}, {4, ij + r.ijjk * jk}});
    };
    t["T3.5.p0"] = [=](R r) {
        Poly q = ii - jj + kk + 2 * r.iiik * ik + 2 * r.jkkk * jk + 2 * r.iiij * ij;
        return plain({{1, q}, {2, ij - r.iiik * jk}});
    };

    t["T3.8.a"] = [=](R r) {
        return plain({{1, ii + 2 * r.iiik * ik}, {1, jj + 2 * r.ijjj * ij}, {1, kk + 2 * r.jkkk * jk}});
    };
    t["T3.8.b1"] = [=](R r) {
        return plain({{1, jj + 2 * r.ijjj * ij}, {1, kk + 2 * r.jkkk * jk + 2 * r.ikkk * ik}, {2, jk + r.ijkk * ik}});
    };

    t["T3.9.a1"] = [=](R r) { return plain({{1, ii + 2 * r.iiij * ij}, {1, kk + 2 * r.jkkk * jk}}); };
    t["T3.9.a2"] = [=](R r) {
        // The printed selector reads t_iiik t_jkkk t_ijjk, which vanishes here; t_iiij is meant.
        if (r.iiij * r.jkkk * r.ijjk == 1)
            return plain({{1, ii + 2 * r.iiij * ij + kk + 2 * r.jkkk * jk},
                          {1, r.iiij * jk + r.jkkk * ij - 2 * ik},
                          {1, jk + r.ijjk * ij}});
        return plain({{1, kk + 2 * r.jkkk * jk - ii - 2 * r.iiij * ij},
                      {1, r.jkkk * ij + r.iiij * jk + 2 * ik},
                      {1, r.jkkk * jk - r.iiij * ij},
                      {1, jj + 2 * r.ijjk * ik}});
    };
    t["T3.9.b1"] = [=](R r) {
        // Printed with t_iiik, which vanishes in this case.
        return Display{{{1, ii + 2 * r.iiik * ij}, {1, jj + 2 * r.jjjk * jk}},
                       Squares{{1, ii + 2 * r.iiij * ij}, {1, jj + 2 * r.jjjk * jk}},
                       "first square uses t_iiij in place of t_iiik"};
    };
    t["T3.9.b2"] = [=](R r) {
        const int s = r.iiij * r.jjjk;
        if (r.iiij * r.ijkk == 1)
            return plain({{1, ii + 2 * r.iiij * ij + kk}, {1, jj + 2 * r.jjjk * jk + 2 * s * ik}, {2, jk - s * ij}});
        // Printed last square is not a square of a binomial; 4 x_i^2 x_k^2 is left to the remainder.
        return Display{{{1, ii + 2 * r.iiij * ij - kk}, {1, jj + 2 * r.jjjk * jk - s * ik}, {1, jk + s * ij}},
                       Squares{{1, ii + 2 * r.iiij * ij - kk}, {1, jj + 2 * r.jjjk * jk - 2 * s * ik},
                               {2, ij + s * jk}},
                       "second square takes 2 t_iiij t_jjjk x_i x_k; third is 2(x_i x_j + s x_j x_k)^2"};
    };
    t["T3.9.c1"] = [=](R r) {
        return plain({{1, ii - kk},
                      {1, jj + 2 * r.ijjj * ij + 2 * r.jjjk * jk + 2 * r.ijjk * ik},
                      {2, ij + r.iijk * ik},
                      {2, ik + r.ijkk * jk}});
    };
    t["T3.9.c2"] = [=](R r) { return plain({{1, jj + 2 * r.ijjj * ij + 2 * r.jjjk * jk}, {2, ij + r.ijjk * jk}}); };

    t["T3.10.a"] = [=](R r) { return plain({{1, ii + 2 * r.iiij * ij}}); };
    t["T3.10.c"] = [=](R r) { return plain({{1, ii + 2 * r.iiij * ij}, {6, ik + r.ijkk * jk}}); };
    t["T3.10.d"] = [=](R r) {
        const int s = r.iiij * r.ijjk;
        return Display{{{1, ii + 2 * r.iiij * ij + 2 * s * jk}, {1, jj + 2 * r.ijjk * ik}, {2, ij - s * jk}},
                       Squares{{1, ii + 2 * r.iiij * ij + 2 * s * jk}, {1, jj + 2 * r.ijjk * ik}, {2, ij - s * ik}},
                       "last square pairs x_i x_j with x_i x_k, not x_j x_k"};
    };

    t["T3.12.a1"] = [=](R r) {
        return plain({{1, ii + jj - kk + 2 * r.iiik * ik + 2 * r.jjjk * jk},
                      {1, 2 * ij - r.iiik * jk - r.jjjk * ik},
                      {1, ik + r.ijkk * jk}});
    };

    t["T3.13.a1"] = [=](R r) { return plain({{1, fourth(xj + r.jjjk * xk)}}); };
    t["T3.13.a2"] = [=](R r) {
        if (r.all_pairs_one())
            // Printed as 6(x_i x_j + t_iijk x_i x_k) without the square; the empty
            // polynomial stands for a term that is not a square.
            return Display{{{1, fourth(xj + r.jjjk * xk)}, {6, Poly()}},
                           Squares{{1, fourth(xj + r.jjjk * xk)}, {6, ij + r.iijk * ik}},
                           "last term is squared"};
        if (r.iijj == 1)
            return plain({{1, -1 * ii + jj + kk + 2 * r.jjjk * jk}, {2, ik + 2 * r.iijk * ij}});
        return plain({{1, -1 * ii + jj + kk + 2 * r.jjjk * jk}, {2, ij + 2 * r.iijk * ik}});
    };
    t["T3.13.b"] = [=](R r) { return plain({{1, ii + 2 * r.iiij * ij}, {1, fourth(xj + r.jjjk * xk)}}); };
    t["T3.13.c"] = [=](R r) {
        Poly q = ii + 2 * r.iiij * ij + 2 * r.iiik * ik;
        return Display{{{1, q}, {1, fourth(xj + r.jjjk * xk)}, {2, ij + 2 * r.iijk * ik}},
                       Squares{{1, q}, {1, fourth(xj + r.jjjk * xk)}, {2, ij + r.iijk * ik}},
                       "last square has t_iijk in place of 2 t_iijk"};
    };
    t["T3.13.d"] = [=](R r) {
        return plain({{1, jj + kk + 2 * r.ijjj * ij + 2 * r.ikkk * ik + 2 * r.jjjk * jk}, {2, ij + r.iijk * ik}});
    };

    auto tail = [=](R r) { return r.jjjk * jj + r.jkkk * kk + 2 * jk; };
    t["T3.14.a1"] = [=](R r) { return plain({{1, tail(r)}}); };
    t["T3.14.a2"] = [=](R r) {
        return Display{{{1, r.jjjk * xj + r.jkkk * xk + 2 * jk}, {6, ij + r.iijk * ik}},
                       Squares{{1, tail(r)}, {6, ij + r.iijk * ik}},
                       "second square uses x_j^2, x_k^2 in place of x_j, x_k"};
    };
    t["T3.14.b1"] = [=](R r) { return plain({{1, ii + 2 * r.iiij * ij}, {1, tail(r)}}); };
    t["T3.14.c1"] = [=](R r) {
        return plain({{1, tail(r) + 2 * r.ijjj * r.jjjk * ij}, {1, 2 * ik + r.ijjj * jk}, {2, ij + r.ijjk * jk}});
    };
    t["T3.14.d"] = [=](R r) {
        return Display{{{1, ii + 2 * r.iiij * ij + 3 * r.iiik * ik}, {1, tail(r)}, {2, ij + r.iijk * ik}},
                       Squares{{1, ii + 2 * r.iiij * ij + 2 * r.iiik * ik}, {1, tail(r)}, {2, ij + r.iijk * ik}},
                       "first square has 2 t_iiik in place of 3 t_iiik"};
    };
    t["T3.14.e1"] = [=](R r) {
        Squares lit{{1, ii - jk},
                    {1, jj - kk + 2 * jk + 2 * r.ijjj * ij - 2 * r.ikkk * ik},
                    {1, ik + r.ikkk * jk - ij},
                    {1, jk + r.ikkk * ij},
                    {1, ik - r.ikkk * jk}};
        Squares fix = lit;
        fix[3].second = jk - r.ikkk * ij;
        return Display{lit, fix, "fourth square is (x_j x_k - t_ikkk x_i x_j)^2"};
    };
    t["T3.14.e2"] = [=](R r) {
        return plain({{1, ii + jk},
                      {1, jj - kk + 2 * jk + 2 * r.ijjj * ij - 2 * r.ikkk * ik},
                      {1, ik + r.ijjj * jk + ij},
                      {1, jk + r.ijjj * ik},
                      {1, ij - r.ijjj * jk}});
    };
    t["T3.14.f1"] = [=](R r) {
        Squares lit{{1, ii + 2 * r.iiij * ij},
                    {1, tail(r) + 2 * r.jkkk * r.ikkk * ik},
                    {2, ik + r.ijkk * jk},
                    {2, ij - r.ijkk * jk}};
        Squares fix = lit;
        fix[3].second = ij + r.ikkk * jk;
        return Display{lit, fix, "last square is 2(x_i x_j + t_ikkk x_j x_k)^2"};
    };
    t["T3.14.f2"] = [=](R r) {
        const int s = r.iiij * r.ijjk;
        // The printed squares overshoot x_j^2 x_k^2 (9 against 6); replaced by a Gram factorization.
        Squares lit{{1, ii + 2 * r.iiij * ij + 2 * s * jk},
                    {1, tail(r) + 2 * r.jkkk * r.ikkk * ik},
                    {1, ik + r.ijkk * jk - s * ij},
                    {1, ik + r.ijkk * jk},
                    {1, ij + r.ijjk * jk}};
        Squares fix{{1, ii + 2 * r.iiij * ij - r.jjjk * jk},
                    {1, jj - kk + 2 * r.ijjk * ik + 2 * r.jjjk * jk},
                    {mpq_class(1, 2), 2 * r.ijkk * ij + r.ijjk * ik + 2 * r.jjjk * jk},
                    {mpq_class(1, 6), 3 * r.ijjk * ik + 2 * r.jjjk * jk}};
        return Display{lit, fix, "printed squares overshoot x_j^2 x_k^2; replaced"};
    };
    return t;
}

inline const std::map<std::string, Builder>& table() {
    static const auto t = build_table();
    return t;
}

// Squares plus the forced remainder, if the remainder is a positive even combination.
inline std::optional<SOSCertificate> assemble(const IntTensor& N, const Squares& squares) {
    SOSCertificate c;
    Poly rest = expand(N);
    for (const auto& [coef, q] : squares) {
        if (q.is_zero()) return std::nullopt;
        c.sq(coef, q);
        rest -= coef * (q * q);
    }
    for (const auto& [e, coef] : rest.terms()) {
        if (coef < 0 || (e[0] | e[1] | e[2]) & 1) return std::nullopt;
        c.rem(coef, e);
    }
    return c;
}

}  // namespace sos

inline std::string sos_key(const std::string& family, const std::string& subcase) {
    return subcase.empty() ? family : family + "." + subcase;
}

inline bool has_display(const std::string& family, const std::string& subcase) {
    return sos::table().count(sos_key(family, subcase)) > 0;
}

struct SosOutcome {
    std::optional<SOSCertificate> cert;  // in the normalized frame
    bool literal_ok = false;             // the printed display verified as is
    std::string erratum;                 // non-empty when the corrected display was needed
};

inline SosOutcome build_sos_detail(const std::string& family, const std::string& subcase, const IntTensor& N) {
    SosOutcome out;
    auto it = sos::table().find(sos_key(family, subcase));
    if (it == sos::table().end()) return out;
    Display d = it->second(Roles(N));
    if ((out.cert = sos::assemble(N, d.literal))) {
        out.literal_ok = true;
        return out;
    }
    if (d.corrected && (out.cert = sos::assemble(N, *d.corrected))) out.erratum = d.erratum;
    return out;
}

// The listed decomposition for N in its normalized frame, or none.
inline std::optional<SOSCertificate> build_sos(const std::string& family, const std::string& subcase,
                                               const IntTensor& N) {
    return build_sos_detail(family, subcase, N).cert;
}

}  // namespace qpsd

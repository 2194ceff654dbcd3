// Case table for ternary-entry dim-3 tensors: family hypotheses and subcase
// conditions written in role indices i, j, k. A role view of a tensor is the
// tensor after a signed permutation, read with i = 1, j = 2, k = 3.
#pragma once

#include "qpsd/form.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace qpsd {

struct Roles {
    int iiii, iiij, iiik, iijj, iijk, iikk, ijjj, ijjk, ijkk, ikkk, jjjj, jjjk, jjkk, jkkk, kkkk;

    explicit Roles(const IntTensor& N)
        : iiii(N[0]), iiij(N[1]), iiik(N[2]), iijj(N[3]), iijk(N[4]), iikk(N[5]), ijjj(N[6]), ijjk(N[7]),
          ijkk(N[8]), ikkk(N[9]), jjjj(N[10]), jjjk(N[11]), jjkk(N[12]), jkkk(N[13]), kkkk(N[14]) {}

    IntTensor tensor() const {
        return IntTensor(3, {iiii, iiij, iiik, iijj, iijk, iikk, ijjj, ijjk, ijkk, ikkk, jjjj, jjjk, jjkk, jkkk, kkkk});
    }
    int pij() const { return iiij * ijjj; }
    int pjk() const { return jjjk * jkkk; }
    int pik() const { return iiik * ikkk; }
    bool all_pairs_one() const { return iijj == 1 && jjkk == 1 && iikk == 1; }
    bool mixed_zero() const { return iijk == 0 && ijjk == 0 && ijkk == 0; }
};

inline bool unit(int v) { return v == 1 || v == -1; }
inline bool bit(int v) { return v == 0 || v == 1; }

// How the two alternatives of the T3.9.a3 clause bind.
enum class ClauseGrouping {
    Separate,  // (t_iijk t_jkkk = -1 and t_ijkk = 0) or (t_ijkk t_iiij = -1 and t_iijk = 0)
    Shared     // t_iijk t_jkkk = -1 and (t_ijkk = 0 or t_ijkk t_iiij = -1)
};

struct CaseOptions {
    ClauseGrouping t39_a3 = ClauseGrouping::Separate;
    bool t313_a2_relaxed = true;  // honour the weakened diagonal requirement when t_iijk t_jjjk = -1
    // Zero-diagonal a4: any one mixed entry t_aabc = +-1 with t_aabb = t_aacc = 1, not only t_iijk.
    bool zero_diag_any_mixed = true;
    // One zero diagonal: admit a lone t_jjji = +-1 (cases i1, i2), absent from the printed list.
    bool zero_diag_lone_edge = true;
};

// Exactly one mixed entry is nonzero, sitting on axis a, with t_aabb = t_aacc = 1 and t_bbcc in {0,1}.
inline bool lone_mixed(const Roles& r, bool any_axis) {
    if (unit(r.iijk) && r.ijjk == 0 && r.ijkk == 0 && r.iijj == 1 && r.iikk == 1 && bit(r.jjkk)) return true;
    if (!any_axis) return false;
    return (unit(r.ijjk) && r.iijk == 0 && r.ijkk == 0 && r.iijj == 1 && r.jjkk == 1 && bit(r.iikk)) ||
           (unit(r.ijkk) && r.iijk == 0 && r.ijjk == 0 && r.iikk == 1 && r.jjkk == 1 && bit(r.iijj));
}

enum class FamilyKind {
    PdIff,   // conditions hold <=> PD; failure means not PSD
    PsdIff,  // conditions hold <=> PSD; PD settled per subcase
    NotPsd   // every tensor of the family is indefinite
};

enum class PdRule { True, False, Unknown };

struct Subcase {
    std::string label;
    std::function<bool(const Roles&, const CaseOptions&)> holds;
    PdRule pd;
};

struct Family {
    std::string id;
    FamilyKind kind;
    std::function<bool(const Roles&)> hypothesis;
    std::vector<Subcase> subcases;
};

namespace detail {

// Role views of the same tensor under all six relabelings of the axes.
inline bool for_all_role_orders(const IntTensor& N, const std::function<bool(const Roles&)>& f) {
    for (const auto& g : signed_perms(3)) {
        if (g.signs != std::array<int, 3>{1, 1, 1}) continue;
        if (!f(Roles(apply(g, N)))) return false;
    }
    return true;
}

inline std::vector<Family> build_families() {
    using R = const Roles&;
    using O = const CaseOptions&;
    std::vector<Family> fs;

    // All t_iiij-type entries vanish; the unit-diagonal family and its zero-diagonal twin share conditions.
    auto t31_subcases = [](bool zero_diag) {
        PdRule pd = zero_diag ? PdRule::False : PdRule::True;
        auto pre = [zero_diag](R r) {
            if (!zero_diag) return true;
            return r.iiij == 0 && r.iiik == 0 && r.ijjj == 0 && r.jjjk == 0 && r.ikkk == 0 && r.jkkk == 0;
        };
        return std::vector<Subcase>{
            {"a", [pre](R r, O) { return pre(r) && r.iijk == 1 && r.ijjk == 1 && r.ijkk == 1 && r.all_pairs_one(); }, pd},
            {"b", [pre](R r, O) { return pre(r) && r.mixed_zero() && bit(r.iijj) && bit(r.iikk) && bit(r.jjkk); }, pd},
            {"c", [pre](R r, O) { return pre(r) && r.iijk == 1 && r.ijjk == -1 && r.ijkk == -1 && r.all_pairs_one(); }, pd},
            {"d", [pre](R r, O) {
                 return pre(r) && unit(r.iijk) && r.ijjk == 0 && r.ijkk == 0 && r.iijj == 1 && r.iikk == 1 && bit(r.jjkk);
             }, pd},
        };
    };

    fs.push_back({"T3.1", FamilyKind::PdIff,
                  [](R r) { return r.iiij == 0 && r.iiik == 0 && r.ijjj == 0 && r.jjjk == 0 && r.ikkk == 0 && r.jkkk == 0; },
                  t31_subcases(false)});

    // Conditions quantify over every ordering of the axes; checked inside the subcase.
    fs.push_back({"T3.3", FamilyKind::PsdIff, [](R r) { return r.pij() == 1 && r.pjk() == 1 && r.pik() == 1; },
                  {{"", [](R r, O) {
                        return for_all_role_orders(r.tensor(), [](R q) {
                            return q.iiij * q.jjjk * q.ikkk == 1 && q.iijk * q.iiij * q.iiik == 1 && q.iijj == 1;
                        });
                    }, PdRule::False}}});

    fs.push_back({"T3.5", FamilyKind::PsdIff, [](R r) { return r.pij() == -1 && r.pjk() == -1 && r.pik() == 1; },
                  {{"p1", [](R r, O) {
                        return r.iijk * r.jkkk == 1 && r.ijkk * r.iiij == 1 && r.iiik * r.jkkk * r.iiij == 1 &&
                               r.all_pairs_one() && r.ijjk * r.iiik == 1;
                    }, PdRule::False},
                   {"p0", [](R r, O) {
                        return r.iijk * r.jkkk == 1 && r.ijkk * r.iiij == 1 && r.iiik * r.jkkk * r.iiij == 1 &&
                               r.all_pairs_one() && r.ijjk * r.iiik == 0;
                    }, PdRule::False}}});

    fs.push_back({"T3.8", FamilyKind::PdIff,
                  [](R r) {
                      return r.pij() == 0 && r.pjk() == 0 && r.pik() == 0 && r.iiij + r.ijjj != 0 &&
                             r.jjjk + r.jkkk != 0 && r.iiik + r.ikkk != 0;
                  },
                  {{"a", [](R r, O) {
                        return r.all_pairs_one() && r.mixed_zero() && r.iiij == 0 && r.jjjk == 0 && r.ikkk == 0 &&
                               unit(r.ijjj) && unit(r.jkkk) && unit(r.iiik);
                    }, PdRule::True},
                   {"b1", [](R r, O) {
                        return r.all_pairs_one() && r.iiij == 0 && r.jjjk == 0 && r.iiik == 0 && r.iijk == 0 &&
                               r.ijjk == 0 && r.ijkk * r.ijjj != 0 && r.ijkk * r.ijjj == r.ijjj * r.jkkk * r.ikkk;
                    }, PdRule::True},
                   {"b2", [](R r, O) {
                        return r.all_pairs_one() && r.iiij == 0 && r.jjjk == 0 && r.iiik == 0 &&
                               r.ijjj * r.jkkk * r.ikkk == 1 && -r.iijk * r.jkkk == 1 && -r.ijjk * r.ikkk == 1 &&
                               r.ijkk == 0;
                    }, PdRule::True}}});

    fs.push_back({"T3.9", FamilyKind::PdIff,
                  [](R r) {
                      return r.iiik == 0 && r.ikkk == 0 && r.pij() == 0 && r.iiij + r.ijjj != 0 && r.pjk() == 0 &&
                             r.jjjk + r.jkkk != 0;
                  },
                  {{"a1", [](R r, O) {
                        return unit(r.iiij) && unit(r.jkkk) && r.mixed_zero() && bit(r.iikk) && r.iijj == 1 && r.jjkk == 1;
                    }, PdRule::True},
                   {"a2", [](R r, O) {
                        return unit(r.iiij) && unit(r.jkkk) && unit(r.ijjk) && r.iijk == 0 && r.ijkk == 0 && r.all_pairs_one();
                    }, PdRule::True},
                   {"a3", [](R r, O o) {
                        if (!(unit(r.iiij) && unit(r.jkkk) && r.all_pairs_one() && -r.iiij * r.jkkk * r.ijjk == 1)) return false;
                        if (o.t39_a3 == ClauseGrouping::Separate)
                            return (r.iijk * r.jkkk == -1 && r.ijkk == 0) || (r.ijkk * r.iiij == -1 && r.iijk == 0);
                        return r.iijk * r.jkkk == -1 && (r.ijkk == 0 || r.ijkk * r.iiij == -1);
                    }, PdRule::True},
                   {"b1", [](R r, O) {
                        return unit(r.iiij) && unit(r.jjjk) && r.mixed_zero() && bit(r.iikk) && r.iijj == 1 && r.jjkk == 1;
                    }, PdRule::True},
                   {"b2", [](R r, O) {
                        return unit(r.iiij) && unit(r.jjjk) && unit(r.ijkk) && r.iijk == 0 && r.ijjk == 0 && r.all_pairs_one();
                    }, PdRule::True},
                   {"b3", [](R r, O) {
                        return unit(r.iiij) && unit(r.jjjk) && r.all_pairs_one() && -r.iiij * r.jjjk * r.ijjk == 1 &&
                               -r.ijkk * r.iiij == 1 && r.iijk == 0;
                    }, PdRule::True},
                   {"c1", [](R r, O) {
                        return unit(r.ijjj) && unit(r.jjjk) && r.ijjj * r.jjjk * r.ijjk == 1 && r.ijjj * r.ijkk == 1 &&
                               r.jjjk * r.iijk == 1 && r.all_pairs_one();
                    }, PdRule::True},
                   {"c2", [](R r, O) {
                        return unit(r.ijjj) && unit(r.jjjk) && r.ijjj * r.jjjk * r.ijjk == 1 && r.iijk == 0 &&
                               r.ijkk == 0 && bit(r.iikk) && r.iijj == 1 && r.jjkk == 1;
                    }, PdRule::True}}});

    fs.push_back({"T3.10", FamilyKind::PdIff,
                  [](R r) { return unit(r.iiij) && r.ijjj == 0 && r.jjjk == 0 && r.jkkk == 0 && r.iiik == 0 && r.ikkk == 0; },
                  {{"a", [](R r, O) { return r.mixed_zero() && r.iijj == 1 && bit(r.iikk) && bit(r.jjkk); }, PdRule::True},
                   {"b", [](R r, O) { return r.ijkk == 0 && r.iijk * r.ijjk * r.iiij == 1 && r.all_pairs_one(); }, PdRule::True},
                   {"c", [](R r, O) { return unit(r.ijkk) && r.iijk == 0 && r.ijjk == 0 && r.all_pairs_one(); }, PdRule::True},
                   {"d", [](R r, O) { return r.iijk == 0 && r.ijkk == 0 && unit(r.ijjk) && r.all_pairs_one(); }, PdRule::True}}});

    fs.push_back({"T3.12", FamilyKind::PsdIff, [](R r) { return r.pij() == 0 && r.pjk() == -1 && r.pik() == -1; },
                  {{"a1", [](R r, O) {
                        return r.iiij == 0 && r.ijjj == 0 && r.iijk == 0 && r.ijjk == 0 && r.jjjk * r.iiik * r.ijkk == 1 &&
                               r.iijj == 1 && r.jjkk == 1 && r.iikk == 1;
                    }, PdRule::True},
                   {"a0", [](R r, O) {
                        return r.iiij == 0 && r.ijjj == 0 && r.iijk == 0 && r.ijjk == 0 && r.jjjk * r.iiik * r.ijkk == 1 &&
                               r.iijj == 0 && r.jjkk == 1 && r.iikk == 1;
                    }, PdRule::False},
                   {"b", [](R r, O) {
                        return r.ijjj == 0 && r.iiij * r.jkkk * r.ikkk == 1 && r.iijk * r.iiij * r.iiik == 1 &&
                               ((r.ijjk == 0 && r.ijkk == 0) || (r.iijk * r.ijjk * r.ijkk == 1 && r.iiij * r.ijkk == 1)) &&
                               r.all_pairs_one();
                    }, PdRule::True}}});

    fs.push_back({"T3.13", FamilyKind::PsdIff, [](R r) { return r.pij() == 0 && r.pik() == 0 && r.pjk() == 1; },
                  {{"a1", [](R r, O) {
                        return r.iiij == 0 && r.ijjj == 0 && r.iiik == 0 && r.ikkk == 0 && r.mixed_zero() && r.jjkk == 1 &&
                               bit(r.iijj) && bit(r.iikk);
                    }, PdRule::False},
                   {"a2", [](R r, O o) {
                        if (!(r.iiij == 0 && r.ijjj == 0 && r.iiik == 0 && r.ikkk == 0)) return false;
                        if (unit(r.iijk) && r.ijjk == 0 && r.ijkk == 0 && r.all_pairs_one()) return true;
                        return o.t313_a2_relaxed && r.iijk * r.jjjk == -1 && r.ijjk == 0 && r.ijkk == 0 && r.jjkk == 1 &&
                               bit(r.iijj) && bit(r.iikk) && r.iijj + r.iikk >= 1;
                    }, PdRule::False},
                   {"b", [](R r, O) {
                        return r.mixed_zero() && r.ijjj == 0 && r.ikkk == 0 && r.iiik == 0 && unit(r.iiij) && r.iijj == 1 &&
                               r.jjkk == 1 && bit(r.iikk);
                    }, PdRule::False},
                   {"c", [](R r, O) {
                        return r.ijjj == 0 && r.ikkk == 0 && r.ijjk == 0 && r.ijkk == 0 && r.iijk * r.iiij * r.iiik == 1 &&
                               r.all_pairs_one();
                    }, PdRule::False},
                   {"d", [](R r, O) {
                        return r.iiij == 0 && r.iiik == 0 && r.ijjj * r.ijkk == 1 && r.ikkk * r.ijjk == 1 &&
                               r.ijjj * r.ikkk * r.iijk == 1 && r.ikkk * r.jjjk * r.ijkk == 1 &&
                               r.ijjj * r.jjjk * r.ijjk == 1 && r.all_pairs_one();
                    }, PdRule::False}}});

    fs.push_back({"T3.14", FamilyKind::PdIff, [](R r) { return r.pij() == 0 && r.pik() == 0 && r.pjk() == -1; },
                  {{"a1", [](R r, O) {
                        return r.iiij == 0 && r.ijjj == 0 && r.iiik == 0 && r.ikkk == 0 && r.mixed_zero() && r.jjkk == 1 &&
                               bit(r.iijj) && bit(r.iikk);
                    }, PdRule::True},
                   {"a2", [](R r, O) {
                        return r.iiij == 0 && r.ijjj == 0 && r.iiik == 0 && r.ikkk == 0 && unit(r.iijk) && r.ijjk == 0 &&
                               r.ijkk == 0 && r.all_pairs_one();
                    }, PdRule::True},
                   {"b1", [](R r, O) {
                        return unit(r.iiij) && r.ijjj == 0 && r.ikkk == 0 && r.iiik == 0 && r.mixed_zero() && r.iijj == 1 &&
                               r.jjkk == 1 && bit(r.iikk);
                    }, PdRule::True},
                   {"b2", [](R r, O) {
                        return unit(r.iiij) && r.ijjj == 0 && r.ikkk == 0 && r.iiik == 0 && r.ijkk == 0 &&
                               r.iijk * r.jkkk == 1 && r.ijjk * r.iiij * r.jkkk == 1 && r.all_pairs_one();
                    }, PdRule::True},
                   {"c1", [](R r, O) {
                        return unit(r.ijjj) && r.iiij == 0 && r.ikkk == 0 && r.iiik == 0 && r.all_pairs_one() &&
                               r.iijk == 0 && r.ijkk == 0 && r.ijjj * r.jjjk * r.ijjk == 1;
                    }, PdRule::True},
                   {"c2", [](R r, O) {
                        return unit(r.ijjj) && r.iiij == 0 && r.ikkk == 0 && r.iiik == 0 && r.all_pairs_one() &&
                               r.ijjk == 0 && r.ijkk == 0 && r.iijk * r.jkkk == 1;
                    }, PdRule::True},
                   {"d", [](R r, O) {
                        return r.ijjj == 0 && r.ikkk == 0 && r.ijjk == 0 && r.ijkk == 0 && r.iijk * r.iiij * r.iiik == 1 &&
                               r.all_pairs_one();
                    }, PdRule::True},
                   {"e1", [](R r, O) {
                        return r.iiij == 0 && r.iiik == 0 && r.jjjk == 1 && r.all_pairs_one() && r.ijjj * r.ikkk == 1 &&
                               -r.iijk == 1 && -r.ijkk * r.ijjj == 1 && r.ijjk == 0;
                    }, PdRule::True},
                   {"e2", [](R r, O) {
                        return r.iiij == 0 && r.iiik == 0 && r.jjjk == 1 && r.all_pairs_one() && r.ijjj * r.ikkk == -1 &&
                               -r.iijk == -1 && -r.ijjk * r.ijjj == -1 && r.ijkk == 0;
                    }, PdRule::True},
                   {"f1", [](R r, O) {
                        return r.ijjj == 0 && r.iiik == 0 && r.iijk == 0 && r.ikkk * r.jkkk * r.ijkk == 1 &&
                               r.all_pairs_one() && r.ijjk == 0;
                    }, PdRule::True},
                   {"f2", [](R r, O) {
                        return r.ijjj == 0 && r.iiik == 0 && r.iijk == 0 && r.ikkk * r.jkkk * r.ijkk == 1 &&
                               r.all_pairs_one() && r.iiij * r.ikkk * r.jjjk == 1 && -r.ijjk * r.ikkk == 1 &&
                               -r.ijkk * r.iiij == 1;
                    }, PdRule::True}}});

    fs.push_back({"T3.15", FamilyKind::PsdIff, [](R r) { return r.pij() == 0 && r.pjk() == -1 && r.pik() == 1; },
                  {{"", [](R r, O) {
                        return r.all_pairs_one() && r.iijk * r.iiij * r.iiik == 1 && r.ijkk * r.ikkk * r.jkkk == 1 &&
                               r.iiij * r.iiik * r.jkkk == 1 && r.ijjk == 0 && r.ijjj == 0;
                    }, PdRule::False}}});

    fs.push_back({"R1", FamilyKind::NotPsd, [](R) { return true; }, {}});

    fs.push_back({"COR1", FamilyKind::PsdIff, [](R r) { return r.iiii == 0 && r.jjjj == 0 && r.kkkk == 0; },
                  t31_subcases(true)});

    // i is the zero-diagonal axis.
    auto c4 = [](std::function<bool(R)> f) {
        return [f](R r, O) { return r.iiij == 0 && r.iiik == 0 && f(r); };
    };
    auto c4a = [](R r) { return r.ijjj == 0 && r.jjjk == 0 && r.ikkk == 0 && r.jkkk == 0; };
    const PdRule nf = PdRule::False;
    fs.push_back({"COR4", FamilyKind::PsdIff, [](R r) { return r.iiii == 0 && r.jjjj == 1 && r.kkkk == 1; },
                  {{"a1", c4([c4a](R r) { return c4a(r) && r.iijk == 1 && r.ijjk == 1 && r.ijkk == 1 && r.all_pairs_one(); }), nf},
                   {"a2", c4([c4a](R r) { return c4a(r) && r.mixed_zero() && bit(r.iijj) && bit(r.jjkk) && bit(r.iikk); }), nf},
                   {"a3", c4([c4a](R r) {
                        int s = r.iijk + r.ijjk + r.ijkk;
                        return c4a(r) && unit(r.iijk) && unit(r.ijjk) && unit(r.ijkk) && s == -1 && r.all_pairs_one();
                    }), nf},
                   {"a4", [c4a](R r, O o) {
                        return r.iiij == 0 && r.iiik == 0 && c4a(r) && lone_mixed(r, o.zero_diag_any_mixed);
                    }, nf},
                   {"b", c4([](R r) {
                        return r.jjjk == 0 && r.all_pairs_one() && r.iijk == 0 && r.ijjk == 0 &&
                               r.ijjj * r.jkkk * r.ikkk != 0 && r.ijjj * r.jkkk * r.ikkk == r.ijkk * r.ijjj;
                    }), nf},
                   {"c1", c4([](R r) {
                        return unit(r.jkkk) && r.ijjj == 0 && r.jjjk == 0 && r.ikkk == 0 && r.mixed_zero() && r.jjkk == 1 &&
                               bit(r.iikk) && bit(r.iijj);
                    }), nf},
                   {"c2", c4([](R r) {
                        return unit(r.jkkk) && r.ijjj == 0 && r.jjjk == 0 && r.ikkk == 0 && unit(r.iijk) && r.ijkk == 0 &&
                               r.ijjk == 0 && r.all_pairs_one();
                    }), nf},
                   {"c3", c4([](R r) {
                        return unit(r.jkkk) && r.ijjj == 0 && r.jjjk == 0 && r.ikkk == 0 && r.iijk == 0 && r.ijkk == 0 &&
                               unit(r.ijjk) && r.all_pairs_one();
                    }), nf},
                   {"d", c4([](R r) {
                        return r.ijjj == 0 && r.jjjk == 0 && unit(r.ikkk) && unit(r.jkkk) && r.ikkk * r.jkkk * r.ijkk == 1 &&
                               r.iikk == 1 && r.jjkk == 1 && r.iijk == 0 && r.ijjk == 0 && bit(r.iijj);
                    }), nf},
                   {"e1", c4([](R r) {
                        return unit(r.ijjj) && unit(r.ikkk) && r.jjjk == 0 && r.jkkk == 0 && r.mixed_zero() && bit(r.jjkk) &&
                               r.iijj == 1 && r.iikk == 1;
                    }), nf},
                   {"e2", c4([](R r) {
                        return unit(r.ijjj) && unit(r.ikkk) && r.jjjk == 0 && r.jkkk == 0 && r.ijkk == 0 && r.ijjk == 0 &&
                               r.iijk * r.ijjj * r.ikkk == 1 && r.all_pairs_one();
                    }), nf},
                   {"f", c4([](R r) {
                        return unit(r.ijjj) && unit(r.jkkk) && r.ikkk == 0 && r.jjjk == 0 && r.mixed_zero() && bit(r.iikk) &&
                               r.iijj == 1 && r.jjkk == 1;
                    }), nf},
                   {"g1", c4([](R r) {
                        return unit(r.jjjk) && r.jjjk == r.jkkk && r.ijjj == 0 && r.ikkk == 0 && r.mixed_zero() &&
                               r.jjkk == 1 && bit(r.iijj) && bit(r.iikk);
                    }), nf},
                   {"g2", c4([](R r) {
                        return unit(r.jjjk) && r.jjjk == r.jkkk && unit(r.iijk) && r.ijjj == 0 && r.ikkk == 0 &&
                               r.ijjk == 0 && r.ijkk == 0 && r.all_pairs_one();
                    }), nf},
                   {"g3", c4([](R r) {
                        return unit(r.jjjk) && r.jjjk == r.jkkk && r.ijjj * r.ijkk == 1 && r.ikkk * r.ijjk == 1 &&
                               r.ijjj * r.ikkk * r.iijk == 1 && r.ikkk * r.jjjk * r.ijkk == 1 &&
                               r.ijjj * r.jjjk * r.ijjk == 1 && r.all_pairs_one();
                    }), nf},
                   {"h1", c4([](R r) {
                        return unit(r.jjjk) && r.jjjk == -r.jkkk && r.ijjj == 0 && r.ikkk == 0 && r.mixed_zero() &&
                               r.jjkk == 1 && bit(r.iijj) && bit(r.iikk);
                    }), nf},
                   {"h2", c4([](R r) {
                        return unit(r.jjjk) && r.jjjk == -r.jkkk && unit(r.iijk) && r.ijjj == 0 && r.ikkk == 0 &&
                               r.ijjk == 0 && r.ijkk == 0 && r.all_pairs_one();
                    }), nf},
                   {"h3", c4([](R r) {
                        return unit(r.jjjk) && r.jjjk == -r.jkkk && unit(r.ijjj) && r.ikkk == 0 && r.iijk == 0 &&
                               r.ijkk == 0 && r.ijjj * r.jjjk * r.ijjk == 1 && r.all_pairs_one();
                    }), nf},
                   // Lone t_jjji: the zero-diagonal counterparts of T3.10 (a) and (c).
                   {"i1", [](R r, O o) {
                        return o.zero_diag_lone_edge && r.iiij == 0 && r.iiik == 0 && unit(r.ijjj) && r.jjjk == 0 &&
                               r.ikkk == 0 && r.jkkk == 0 && r.mixed_zero() && r.iijj == 1 && bit(r.iikk) && bit(r.jjkk);
                    }, nf},
                   {"i2", [](R r, O o) {
                        return o.zero_diag_lone_edge && r.iiij == 0 && r.iiik == 0 && unit(r.ijjj) && r.jjjk == 0 &&
                               r.ikkk == 0 && r.jkkk == 0 && unit(r.ijkk) && r.iijk == 0 && r.ijjk == 0 && r.all_pairs_one();
                    }, nf}}});

    // i and j are the zero-diagonal axes.
    auto c5 = [](std::function<bool(R)> f) {
        return [f](R r, O) { return r.iiij == 0 && r.iiik == 0 && r.ijjj == 0 && r.jjjk == 0 && f(r); };
    };
    auto c5a = [](R r) { return r.ikkk == 0 && r.jkkk == 0; };
    fs.push_back({"COR5", FamilyKind::PsdIff, [](R r) { return r.iiii == 0 && r.jjjj == 0 && r.kkkk == 1; },
                  {{"a1", c5([c5a](R r) { return c5a(r) && r.iijk == 1 && r.ijjk == 1 && r.ijkk == 1 && r.all_pairs_one(); }), nf},
                   {"a2", c5([c5a](R r) { return c5a(r) && r.mixed_zero() && bit(r.iijj) && bit(r.jjkk) && bit(r.iikk); }), nf},
                   {"a3", c5([c5a](R r) {
                        int s = r.iijk + r.ijjk + r.ijkk;
                        return c5a(r) && unit(r.iijk) && unit(r.ijjk) && unit(r.ijkk) && s == -1 && r.all_pairs_one();
                    }), nf},
                   {"a4", [c5a](R r, O o) {
                        return r.iiij == 0 && r.iiik == 0 && r.ijjj == 0 && r.jjjk == 0 && c5a(r) &&
                               lone_mixed(r, o.zero_diag_any_mixed);
                    }, nf},
                   {"b1", c5([](R r) {
                        return unit(r.jkkk) && r.ikkk == 0 && r.mixed_zero() && r.jjkk == 1 && bit(r.iikk) && bit(r.iijj);
                    }), nf},
                   {"b2", c5([](R r) {
                        return unit(r.jkkk) && r.ikkk == 0 && unit(r.iijk) && r.ijkk == 0 && r.ijjk == 0 && r.all_pairs_one();
                    }), nf},
                   {"c", c5([](R r) {
                        return unit(r.ikkk) && unit(r.jkkk) && r.ikkk * r.jkkk * r.ijkk == 1 && r.iikk == 1 &&
                               r.jjkk == 1 && r.iijk == 0 && r.ijjk == 0 && bit(r.iijj);
                    }), nf}}});
    return fs;
}

}  // namespace detail

inline const std::vector<Family>& families() {
    static const std::vector<Family> fs = detail::build_families();
    return fs;
}

inline const Family& family(const std::string& id) {
    for (const auto& f : families())
        if (f.id == id) return f;
    throw std::out_of_range("unknown case family " + id);
}

}  // namespace qpsd

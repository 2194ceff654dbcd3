// Symmetric 4th-order tensors of dimension 2 or 3 in canonical slot storage,
// their quartic forms, and the signed-permutation group action.
#pragma once

#include "qpsd/poly.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpsd {

// Canonical slot positions for dimension 3.
enum Slot : int {
    s1111, s1112, s1113, s1122, s1123, s1133, s1222, s1223,
    s1233, s1333, s2222, s2223, s2233, s2333, s3333
};

// Canonical slot positions for dimension 2.
enum Slot2 : int { d1111, d1112, d1122, d1222, d2222 };

struct MultiIndex {
    std::array<int, 4> idx{};  // 1-based, non-decreasing

    static MultiIndex of(int a, int b, int c, int d) {
        MultiIndex m{{a, b, c, d}};
        std::sort(m.idx.begin(), m.idx.end());
        return m;
    }
    Exponent counts() const {
        Exponent e{0, 0, 0};
        for (int v : idx) ++e[v - 1];
        return e;
    }
    std::string str() const {
        std::string s;
        for (int v : idx) s += char('0' + v);
        return s;
    }
    bool valid(int dim) const {
        return std::is_sorted(idx.begin(), idx.end()) && idx[0] >= 1 && idx[3] <= dim;
    }
};

inline constexpr int slot_count(int dim) { return dim == 3 ? 15 : 5; }

// Exponent vector of slot s; slots enumerate sorted multi-indices lexicographically.
inline Exponent slot_exponent(int dim, int s) {
    static const std::array<Exponent, 15> e3{{{4, 0, 0}, {3, 1, 0}, {3, 0, 1}, {2, 2, 0}, {2, 1, 1},
                                              {2, 0, 2}, {1, 3, 0}, {1, 2, 1}, {1, 1, 2}, {1, 0, 3},
                                              {0, 4, 0}, {0, 3, 1}, {0, 2, 2}, {0, 1, 3}, {0, 0, 4}}};
    static const std::array<Exponent, 5> e2{{{4, 0, 0}, {3, 1, 0}, {2, 2, 0}, {1, 3, 0}, {0, 4, 0}}};
    return dim == 3 ? e3.at(s) : e2.at(s);
}

inline int slot_of(int dim, const Exponent& e) {
    if (dim == 2) return 4 - e[0];
    // First slot with first-axis count e[0]; within a block slots run by decreasing e[1].
    static constexpr std::array<int, 5> start{10, 6, 3, 1, 0};
    return start[e[0]] + (4 - e[0] - e[1]);
}

inline int slot_of(int dim, const MultiIndex& m) { return slot_of(dim, m.counts()); }

inline MultiIndex slot_index(int dim, int s) {
    Exponent e = slot_exponent(dim, s);
    MultiIndex m;
    int k = 0;
    for (int a = 0; a < 3; ++a)
        for (int r = 0; r < e[a]; ++r) m.idx[k++] = a + 1;
    return m;
}

inline std::string slot_name(int dim, int s) { return slot_index(dim, s).str(); }

inline int multiplicity(const Exponent& e) {
    static constexpr int fact[5] = {1, 1, 2, 6, 24};
    return 24 / (fact[e[0]] * fact[e[1]] * fact[e[2]]);
}
inline int multiplicity(const MultiIndex& m) { return multiplicity(m.counts()); }

template <class S>
class SymTensor {
public:
    SymTensor() : SymTensor(3) {}
    explicit SymTensor(int dim) : dim_(dim), t_(slot_count(check_dim(dim)), S(0)) {}
    SymTensor(int dim, std::vector<S> entries) : dim_(check_dim(dim)), t_(std::move(entries)) {
        if (int(t_.size()) != slot_count(dim_)) throw std::invalid_argument("wrong number of tensor entries");
    }
    SymTensor(int dim, std::initializer_list<S> entries) : SymTensor(dim, std::vector<S>(entries)) {}

    int dim() const { return dim_; }
    int size() const { return int(t_.size()); }
    const S& operator[](int s) const { return t_[s]; }
    S& operator[](int s) { return t_[s]; }
    const S& at(const Exponent& e) const { return t_[slot_of(dim_, e)]; }
    const S& at(int a, int b, int c, int d) const { return t_[slot_of(dim_, MultiIndex::of(a, b, c, d))]; }
    const std::vector<S>& entries() const { return t_; }

    bool is_ternary() const {
        return std::all_of(t_.begin(), t_.end(), [](const S& v) { return v == -1 || v == 0 || v == 1; });
    }

    template <class T>
    SymTensor<T> cast() const {
        std::vector<T> v;
        v.reserve(t_.size());
        for (const auto& x : t_) v.push_back(T(x));
        return SymTensor<T>(dim_, std::move(v));
    }

    friend bool operator==(const SymTensor& a, const SymTensor& b) { return a.dim_ == b.dim_ && a.t_ == b.t_; }
    friend bool operator<(const SymTensor& a, const SymTensor& b) { return a.t_ < b.t_; }

private:
    static int check_dim(int d) {
        if (d != 2 && d != 3) throw std::invalid_argument("tensor dimension must be 2 or 3");
        return d;
    }
    int dim_;
    std::vector<S> t_;
};

using SymTensor4 = SymTensor<mpq_class>;
using IntTensor = SymTensor<int>;

// Sum of multiplicity * entry * monomial, accumulated in R.
template <class R, class S, class V>
R evaluate_as(const SymTensor<S>& T, const V& x) {
    if (std::size(x) != std::size_t(T.dim())) throw std::invalid_argument("dimension mismatch");
    R pw[3][5];
    for (int a = 0; a < T.dim(); ++a) {
        pw[a][0] = R(1);
        for (int p = 1; p <= 4; ++p) pw[a][p] = pw[a][p - 1] * R(x[a]);
    }
    R s(0);
    for (int k = 0; k < T.size(); ++k) {
        if (T[k] == 0) continue;
        Exponent e = slot_exponent(T.dim(), k);
        R m = R(multiplicity(e)) * R(T[k]) * pw[0][e[0]] * pw[1][e[1]];
        if (T.dim() == 3) m *= pw[2][e[2]];
        s += m;
    }
    return s;
}

template <class S, class V>
mpq_class evaluate(const SymTensor<S>& T, const V& x) {
    return evaluate_as<mpq_class>(T, x);
}

// Exact value at an integer point of a small-integer tensor; |x| <= 2^10 keeps it in range.
inline std::int64_t evaluate_int(const IntTensor& T, const std::array<std::int64_t, 3>& x) {
    std::int64_t pw[3][5];
    for (int a = 0; a < 3; ++a) {
        pw[a][0] = 1;
        for (int p = 1; p <= 4; ++p) pw[a][p] = pw[a][p - 1] * x[a];
    }
    std::int64_t s = 0;
    for (int k = 0; k < T.size(); ++k) {
        if (T[k] == 0) continue;
        Exponent e = slot_exponent(T.dim(), k);
        std::int64_t m = std::int64_t(multiplicity(e)) * T[k] * pw[0][e[0]] * pw[1][e[1]];
        if (T.dim() == 3) m *= pw[2][e[2]];
        s += m;
    }
    return s;
}

// Gradient of the quartic form; <grad, x> = 4 f(x).
template <class S, class V>
std::vector<mpq_class> gradient(const SymTensor<S>& T, const V& x) {
    const int n = T.dim();
    if (std::size(x) != std::size_t(n)) throw std::invalid_argument("dimension mismatch");
    std::vector<mpq_class> g(n, 0);
    for (int k = 0; k < T.size(); ++k) {
        if (T[k] == 0) continue;
        Exponent e = slot_exponent(n, k);
        for (int a = 0; a < n; ++a) {
            if (e[a] == 0) continue;
            mpq_class m = mpq_class(multiplicity(e) * e[a]) * mpq_class(T[k]);
            for (int b = 0; b < n; ++b)
                for (int p = 0; p < e[b] - (a == b); ++p) m *= mpq_class(x[b]);
            g[a] += m;
        }
    }
    return g;
}

template <class S>
Poly expand(const SymTensor<S>& T) {
    Poly p;
    for (int k = 0; k < T.size(); ++k) {
        Exponent e = slot_exponent(T.dim(), k);
        p.add(e, mpq_class(multiplicity(e)) * mpq_class(T[k]));
    }
    return p;
}

// Inverse of expand on quartic forms; coefficients are divided by multiplicities.
inline SymTensor4 tensor_from_poly(int dim, const Poly& p) {
    SymTensor4 T(dim);
    for (const auto& [e, c] : p.terms()) {
        if (e[0] + e[1] + e[2] != 4 || (dim == 2 && e[2] != 0))
            throw std::invalid_argument("not a quartic form in the given dimension");
        T[slot_of(dim, e)] = c / multiplicity(e);
    }
    return T;
}

// x -> y with y[perm[a]] = signs[a] * x[a].
struct SignedPerm {
    int n = 3;
    std::array<int, 3> perm{0, 1, 2};
    std::array<int, 3> signs{1, 1, 1};

    static SignedPerm identity(int n) { return SignedPerm{n, {0, 1, 2}, {1, 1, 1}}; }

    template <class V>
    V act(const V& x) const {
        V y = x;
        for (int a = 0; a < n; ++a) y[perm[a]] = signs[a] * x[a];
        return y;
    }
    SignedPerm inverse() const {
        SignedPerm g{n, {0, 1, 2}, {1, 1, 1}};
        for (int a = 0; a < n; ++a) {
            g.perm[perm[a]] = a;
            g.signs[perm[a]] = signs[a];
        }
        return g;
    }
    // (a * b).act(x) == a.act(b.act(x))
    friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
        SignedPerm g{a.n, {0, 1, 2}, {1, 1, 1}};
        for (int i = 0; i < a.n; ++i) {
            g.perm[i] = a.perm[b.perm[i]];
            g.signs[i] = a.signs[b.perm[i]] * b.signs[i];
        }
        return g;
    }
    friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
        for (int i = 0; i < a.n; ++i)
            if (a.perm[i] != b.perm[i] || a.signs[i] != b.signs[i]) return false;
        return a.n == b.n;
    }
    std::string str() const {
        std::string s = "[";
        for (int a = 0; a < n; ++a) {
            if (a) s += ",";
            s += (signs[a] < 0 ? "-" : "+");
            s += char('1' + perm[a]);
        }
        return s + "]";
    }
};

// All 2^n n! elements: permutations in lexicographic order, sign patterns + before -.
inline const std::vector<SignedPerm>& signed_perms(int n) {
    static const auto build = [](int n) {
        std::vector<SignedPerm> out;
        std::array<int, 3> p{0, 1, 2};
        do {
            for (int m = 0; m < (1 << n); ++m) {
                SignedPerm g{n, p, {1, 1, 1}};
                for (int a = 0; a < n; ++a) g.signs[a] = (m >> (n - 1 - a)) & 1 ? -1 : 1;
                out.push_back(g);
            }
        } while (std::next_permutation(p.begin(), p.begin() + n));
        return out;
    };
    static const std::vector<SignedPerm> g2 = build(2), g3 = build(3);
    return n == 3 ? g3 : g2;
}

// evaluate(apply(g, T), g.act(x)) == evaluate(T, x)
template <class S>
SymTensor<S> apply(const SignedPerm& g, const SymTensor<S>& T) {
    if (g.n != T.dim()) throw std::invalid_argument("group element and tensor dimensions differ");
    SymTensor<S> R(T.dim());
    for (int k = 0; k < T.size(); ++k) {
        Exponent e = slot_exponent(T.dim(), k), f{0, 0, 0};
        int sign = 1;
        for (int a = 0; a < g.n; ++a) {
            f[g.perm[a]] = e[a];
            if (g.signs[a] < 0 && (e[a] & 1)) sign = -sign;
        }
        R[slot_of(T.dim(), f)] = sign < 0 ? S(-T[k]) : T[k];
    }
    return R;
}

template <class S>
SymTensor<S> principal_pair(const SymTensor<S>& T, int i, int j) {
    if (T.dim() != 3 || i == j) throw std::invalid_argument("principal_pair needs a dim-3 tensor and distinct axes");
    if (i > j) std::swap(i, j);
    return SymTensor<S>(2, {T.at(i, i, i, i), T.at(i, i, i, j), T.at(i, i, j, j), T.at(i, j, j, j), T.at(j, j, j, j)});
}

}  // namespace qpsd

// Exactly checkable proof objects: sums of squares, negative witnesses,
// zero witnesses and case citations, plus bounded integer witness search.
#pragma once

#include "qpsd/form.hpp"
#include "qpsd/poly.hpp"

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qpsd {

// f = sum c_s * q_s^2 + sum r_t * x^(e_t); all c_s, r_t > 0 and every e_t even.
struct SOSCertificate {
    std::vector<std::pair<mpq_class, Poly>> squares;
    std::vector<std::pair<mpq_class, Exponent>> remainder;

    SOSCertificate& sq(const mpq_class& c, const Poly& q) {
        squares.emplace_back(c, q);
        return *this;
    }
    SOSCertificate& rem(const mpq_class& c, const Exponent& e) {
        if (c != 0) remainder.emplace_back(c, e);
        return *this;
    }
    // q^4 stored as (q^2)^2.
    SOSCertificate& fourth(const mpq_class& c, const Poly& q) { return sq(c, q * q); }

    Poly expand() const {
        Poly p;
        for (const auto& [c, q] : squares) p += c * (q * q);
        for (const auto& [c, e] : remainder) p.add(e, c);
        return p;
    }
};

struct NegativeWitness {
    std::vector<long> x;
    mpq_class value;
};

struct ZeroWitness {
    std::vector<mpq_class> x;
};

struct CaseCitation {
    std::string case_id;
    std::string note;
};

using Certificate = std::variant<std::monostate, SOSCertificate, NegativeWitness, ZeroWitness, CaseCitation>;

inline const char* certificate_kind(const Certificate& c) {
    switch (c.index()) {
        case 1: return "sos";
        case 2: return "negative_witness";
        case 3: return "zero_witness";
        case 4: return "case_citation";
        default: return "none";
    }
}

template <class S>
bool verify_sos(const SOSCertificate& cert, const SymTensor<S>& T) {
    for (const auto& [c, q] : cert.squares)
        if (c <= 0) return false;
    for (const auto& [c, e] : cert.remainder)
        if (c <= 0 || (e[0] | e[1] | e[2]) & 1) return false;
    return cert.expand() == expand(T);
}

template <class S>
mpq_class verify_negative_witness(const SymTensor<S>& T, const std::vector<long>& x) {
    bool nonzero = false;
    for (long v : x) nonzero |= v != 0;
    if (!nonzero) throw std::invalid_argument("witness must be a nonzero vector");
    return evaluate(T, x);
}

template <class S>
bool check_negative_witness(const SymTensor<S>& T, const NegativeWitness& w) {
    bool nonzero = false;
    for (long v : w.x) nonzero |= v != 0;
    return nonzero && int(w.x.size()) == T.dim() && evaluate(T, w.x) == w.value && w.value < 0;
}

template <class S>
bool check_zero_witness(const SymTensor<S>& T, const ZeroWitness& z) {
    bool nonzero = false;
    for (const auto& v : z.x) nonzero |= v != 0;
    return nonzero && int(z.x.size()) == T.dim() && evaluate(T, z.x) == 0;
}

// Scan order: max-abs shells of increasing radius; inside a shell, lexicographic
// with coordinates ordered 0, 1, -1, 2, -2, ...; only vectors whose first nonzero
// coordinate is positive (the form is even).
inline const std::vector<std::array<std::int8_t, 3>>& scan_points(int dim) {
    static const auto build = [](int dim) {
        constexpr int kMax = 32;
        std::vector<int> vals{0};
        for (int v = 1; v <= kMax; ++v) {
            vals.push_back(v);
            vals.push_back(-v);
        }
        std::vector<std::array<std::int8_t, 3>> pts;
        for (int r = 1; r <= kMax; ++r) {
            const int nv = 2 * r + 1;
            auto keep = [&](int a, int b, int c) {
                int m = std::max({std::abs(a), std::abs(b), std::abs(c)});
                int first = a != 0 ? a : (b != 0 ? b : c);
                if (m == r && first > 0) pts.push_back({std::int8_t(a), std::int8_t(b), std::int8_t(c)});
            };
            for (int i = 0; i < nv; ++i)
                for (int j = 0; j < nv; ++j) {
                    if (dim == 2) {
                        keep(vals[i], vals[j], 0);
                        continue;
                    }
                    for (int k = 0; k < nv; ++k) keep(vals[i], vals[j], vals[k]);
                }
        }
        return pts;
    };
    static const auto p2 = build(2), p3 = build(3);
    return dim == 3 ? p3 : p2;
}

namespace detail {
template <class Pred>
std::optional<std::array<std::int64_t, 3>> scan(const IntTensor& T, int bound, Pred pred) {
    for (const auto& p : scan_points(T.dim())) {
        if (std::max({std::abs(int(p[0])), std::abs(int(p[1])), std::abs(int(p[2]))}) > bound) break;
        std::array<std::int64_t, 3> x{p[0], p[1], p[2]};
        if (pred(evaluate_int(T, x))) return x;
    }
    return std::nullopt;
}
}  // namespace detail

inline std::optional<NegativeWitness> find_negative_witness(const IntTensor& T, int bound) {
    if (bound < 1) throw std::invalid_argument("bound must be positive");
    bound = std::min(bound, 32);
    auto x = detail::scan(T, bound, [](std::int64_t v) { return v < 0; });
    if (!x) return std::nullopt;
    NegativeWitness w;
    w.x.assign(x->begin(), x->begin() + T.dim());
    w.value = evaluate(T, w.x);
    return w;
}

// Bounded integer search for a nonzero exact zero of the form.
inline std::optional<ZeroWitness> search_zero_witness(const IntTensor& T, int bound) {
    auto x = detail::scan(T, std::min(bound, 32), [](std::int64_t v) { return v == 0; });
    if (!x) return std::nullopt;
    ZeroWitness z;
    for (int a = 0; a < T.dim(); ++a) z.x.emplace_back((*x)[a]);
    return z;
}

// f(g.x) for a polynomial f in the variables y = g.x.
inline Poly pull_back(const Poly& f, const SignedPerm& g) {
    Poly out;
    for (const auto& [e, c] : f.terms()) {
        Exponent d{0, 0, 0};
        int sign = 1;
        for (int a = 0; a < g.n; ++a) {
            d[a] = e[g.perm[a]];
            if (g.signs[a] < 0 && (d[a] & 1)) sign = -sign;
        }
        out.add(d, sign * c);
    }
    return out;
}

// Certificate for N = apply(g, T) rewritten as a certificate for T.
inline SOSCertificate pull_back(const SOSCertificate& cert, const SignedPerm& g) {
    SOSCertificate out;
    for (const auto& [c, q] : cert.squares) out.sq(c, pull_back(q, g));
    for (const auto& [c, e] : cert.remainder) out.rem(c, pull_back(Poly::monomial(e), g).terms().begin()->first);
    return out;
}

// A point x0 of N = apply(g, T) corresponds to g^-1 . x0 for T.
inline ZeroWitness pull_back(const ZeroWitness& z, const SignedPerm& g) {
    return ZeroWitness{g.inverse().act(z.x)};
}

}  // namespace qpsd

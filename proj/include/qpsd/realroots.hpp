// Distinct real root counting for integer polynomials: the inner-determinant
// sign-variation rule with a Sturm-sequence fallback and oracle.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qpsd {

// Coefficients a_0..a_m, constant term first; no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : a_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long c : coeffs) a_.emplace_back(c);
        trim();
    }
    // Highest power first, as polynomials are usually written.
    static IntPoly from_descending(std::vector<mpz_class> c) { return IntPoly(std::vector<mpz_class>(c.rbegin(), c.rend())); }

    int degree() const { return int(a_.size()) - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return a_.empty(); }
    const mpz_class& operator[](int i) const { return a_[i]; }
    const mpz_class& lead() const { return a_.back(); }
    const std::vector<mpz_class>& coeffs() const { return a_; }

    IntPoly derivative() const {
        std::vector<mpz_class> d;
        for (int i = 1; i <= degree(); ++i) d.push_back(a_[i] * i);
        return IntPoly(std::move(d));
    }
    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& c : r.a_) c = -c;
        return r;
    }
    friend IntPoly operator*(const mpz_class& s, const IntPoly& p) {
        std::vector<mpz_class> c;
        for (const auto& v : p.a_) c.push_back(s * v);
        return IntPoly(std::move(c));
    }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.a_ == b.a_; }

    int sign_at(const mpq_class& x) const {
        mpq_class v = 0;
        for (int i = degree(); i >= 0; --i) v = v * x + a_[i];
        return sgn(v);
    }
    int sign_at_pos_inf() const { return sgn(lead()); }
    int sign_at_neg_inf() const { return (degree() & 1) ? -sgn(lead()) : sgn(lead()); }

    mpz_class content() const {
        mpz_class g = 0;
        for (const auto& c : a_) g = gcd(g, c);
        return g;
    }
    // Divided by its positive content.
    IntPoly primitive() const {
        mpz_class g = content();
        if (g == 0 || g == 1) return *this;
        IntPoly r = *this;
        for (auto& c : r.a_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        return r;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < a_.size(); ++i) s += (i ? " " : "") + a_[i].get_str();
        return s;
    }

private:
    void trim() {
        while (!a_.empty() && a_.back() == 0) a_.pop_back();
    }
    std::vector<mpz_class> a_;
};

using ZMatrix = std::vector<std::vector<mpz_class>>;

// Fraction-free elimination with row pivoting.
inline mpz_class det_bareiss(ZMatrix M) {
    const int n = int(M.size());
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M[k][k] == 0) {
            int r = k + 1;
            while (r < n && M[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(M[k], M[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                M[i][j] = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(M[i][j].get_mpz_t(), M[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = M[k][k];
    }
    return sign > 0 ? M[n - 1][n - 1] : mpz_class(-M[n - 1][n - 1]);
}

// The (2m-1)x(2m-1) matrix: m-1 shifted rows of p, then m shifted rows of p'
// with the largest shift first.
inline ZMatrix discrimination_matrix(const IntPoly& p) {
    const int m = p.degree();
    if (m < 1) throw std::invalid_argument("discrimination matrix needs degree >= 1");
    const int n = 2 * m - 1;
    ZMatrix M(n, std::vector<mpz_class>(n, 0));
    for (int r = 0; r < m - 1; ++r)
        for (int c = 0; c <= m; ++c) M[r][r + c] = p[m - c];
    for (int r = 0; r < m; ++r) {
        int shift = m - 1 - r;
        for (int c = 0; c < m; ++c) M[m - 1 + r][shift + c] = p[m - c] * (m - c);
    }
    return M;
}

// Central minors of orders 1, 3, ..., 2m-1.
inline std::vector<mpz_class> inner_determinants(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    if (p.lead() < 0) throw std::invalid_argument("leading coefficient must be positive");
    const int m = p.degree();
    if (m < 1) return {};
    const ZMatrix M = discrimination_matrix(p);
    const int n = 2 * m - 1, c = m - 1;
    // Centre-out ordering turns central minors into leading principal minors.
    std::vector<int> ord{c};
    for (int d = 1; d <= c; ++d) {
        ord.push_back(c - d);
        ord.push_back(c + d);
    }
    ZMatrix A(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[i][j] = M[ord[i]][ord[j]];

    std::vector<mpz_class> out;
    mpz_class prev = 1;
    int k = 0;
    for (; k < n; ++k) {
        // A[k][k] is now the leading minor of order k+1.
        if (k % 2 == 0) out.push_back(A[k][k]);
        if (k == n - 1 || A[k][k] == 0) break;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                A[i][j] = A[i][j] * A[k][k] - A[i][k] * A[k][j];
                mpz_divexact(A[i][j].get_mpz_t(), A[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = A[k][k];
    }
    // A vanishing leading minor stops the pivot-free pass; finish with pivoted determinants.
    for (int ord_sz = 2 * int(out.size()) + 1; ord_sz <= n; ord_sz += 2) {
        int lo = c - (ord_sz - 1) / 2;
        ZMatrix B(ord_sz, std::vector<mpz_class>(ord_sz));
        for (int i = 0; i < ord_sz; ++i)
            for (int j = 0; j < ord_sz; ++j) B[i][j] = M[lo + i][lo + j];
        out.push_back(det_bareiss(std::move(B)));
    }
    return out;
}

inline int sign_variations(const std::vector<int>& s) {
    int v = 0, last = 0;
    for (int x : s) {
        if (x == 0) continue;
        if (last != 0 && x != last) ++v;
        last = x;
    }
    return v;
}

namespace detail {

// Positive multiple of the remainder of a by b, made primitive.
inline IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> r = a.coeffs();
    const int db = b.degree();
    const mpz_class& lb = b.lead();
    int steps = 0;
    while (int(r.size()) - 1 >= db && !r.empty()) {
        const int dr = int(r.size()) - 1;
        mpz_class lr = r.back();
        for (auto& c : r) c *= lb;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= lr * b[i];
        ++steps;
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    IntPoly out(std::move(r));
    if (lb < 0 && (steps & 1)) out = -out;
    return out.primitive();
}

inline IntPoly gcd_poly(IntPoly a, IntPoly b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    a = a.primitive();
    b = b.primitive();
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.lead() < 0 ? -a : a;
}

// Exact quotient a / b over the rationals, scaled to a primitive integer polynomial.
inline IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
    const int da = a.degree(), db = b.degree();
    std::vector<mpq_class> r(a.coeffs().begin(), a.coeffs().end()), q(da - db + 1);
    for (int i = da - db; i >= 0; --i) {
        q[i] = r[i + db] / mpq_class(b.lead());
        for (int j = 0; j <= db; ++j) r[i + j] -= q[i] * b[j];
    }
    mpz_class den = 1;
    for (auto& c : q) den = lcm(den, c.get_den());
    std::vector<mpz_class> z;
    for (auto& c : q) z.push_back(mpz_class(c * den));
    return IntPoly(std::move(z)).primitive();
}

}  // namespace detail

inline IntPoly square_free_part(const IntPoly& p) {
    if (p.degree() < 1) return p;
    IntPoly g = detail::gcd_poly(p, p.derivative());
    if (g.degree() == 0) return p.primitive();
    return detail::exact_quotient(p, g);
}

inline std::vector<IntPoly> sturm_sequence(const IntPoly& p) {
    std::vector<IntPoly> s{p, p.derivative().primitive()};
    while (!s.back().is_zero() && s.back().degree() > 0) {
        IntPoly r = detail::pseudo_rem(s[s.size() - 2], s.back());
        if (r.is_zero()) break;
        s.push_back(-r);
    }
    return s;
}

// Distinct real roots in the open interval (lo, hi), or on the whole line.
inline int sturm_count(const IntPoly& p, std::optional<std::pair<mpq_class, mpq_class>> interval = std::nullopt) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    if (p.degree() < 1) return 0;
    const IntPoly q = square_free_part(p);
    const auto seq = sturm_sequence(q);
    std::vector<int> lo, hi;
    for (const auto& f : seq) {
        if (interval) {
            lo.push_back(f.sign_at(interval->first));
            hi.push_back(f.sign_at(interval->second));
        } else {
            lo.push_back(f.sign_at_neg_inf());
            hi.push_back(f.sign_at_pos_inf());
        }
    }
    // Sturm's theorem counts (lo, hi]; drop a root sitting at hi.
    int n = sign_variations(lo) - sign_variations(hi);
    if (interval && q.sign_at(interval->second) == 0) --n;
    return n;
}

struct RootCount {
    int count = 0;
    bool fallback = false;  // a vanishing inner determinant sent the count to Sturm
    std::vector<mpz_class> determinants;
};

inline RootCount count_distinct_real_roots_detail(IntPoly p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    if (p.lead() < 0) p = -p;
    RootCount rc;
    if (p.degree() < 1) return rc;
    rc.determinants = inner_determinants(p);
    for (const auto& d : rc.determinants)
        if (d == 0) {
            rc.fallback = true;
            rc.count = sturm_count(p);
            return rc;
        }
    std::vector<int> alt{1}, plain{1};
    for (std::size_t k = 0; k < rc.determinants.size(); ++k) {
        int s = sgn(rc.determinants[k]);
        alt.push_back(k % 2 == 0 ? -s : s);
        plain.push_back(s);
    }
    rc.count = sign_variations(alt) - sign_variations(plain);
    return rc;
}

inline int count_distinct_real_roots(const IntPoly& p) { return count_distinct_real_roots_detail(p).count; }

}  // namespace qpsd

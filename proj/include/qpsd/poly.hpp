// Sparse polynomials in x1, x2, x3 with exact rational coefficients.
#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace qpsd {

using Exponent = std::array<int, 3>;

// Zero coefficients are never stored.
class Poly {
public:
    using Terms = std::map<Exponent, mpq_class>;

    Poly() = default;
    static Poly monomial(const Exponent& e, const mpq_class& c = 1) {
        Poly p;
        p.add(e, c);
        return p;
    }
    static Poly var(int axis, const mpq_class& c = 1) {
        Exponent e{0, 0, 0};
        e[axis] = 1;
        return monomial(e, c);
    }

    void add(const Exponent& e, const mpq_class& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    mpq_class coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? mpq_class(0) : it->second;
    }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add(e, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const mpq_class& s, const Poly& p) {
        Poly r;
        if (s == 0) return r;
        for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    template <class V>
    mpq_class operator()(const V& x) const {
        mpq_class s = 0;
        for (const auto& [e, c] : terms_) {
            mpq_class m = c;
            for (int a = 0; a < 3; ++a)
                for (int p = 0; p < e[a]; ++p) m *= mpq_class(x[a]);
            s += m;
        }
        return s;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            mpq_class a = abs(c);
            os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
            bool unit = a == 1 && (e[0] + e[1] + e[2]) > 0;
            if (!unit) os << a.get_str();
            bool sep = !unit;
            for (int v = 0; v < 3; ++v) {
                if (e[v] == 0) continue;
                os << (sep ? "*" : "") << 'x' << (v + 1);
                if (e[v] > 1) os << '^' << e[v];
                sep = true;
            }
            first = false;
        }
        return os.str();
    }

private:
    Terms terms_;
};

}  // namespace qpsd

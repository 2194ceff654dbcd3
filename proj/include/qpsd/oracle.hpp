// Numerical minimisation of the quartic form on the unit sphere (or circle),
// with rounding of approximate minimisers to exact integer witnesses.
#pragma once

#include "qpsd/certificates.hpp"
#include "qpsd/form.hpp"

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace qpsd {

enum class OracleStatus { NegativeCertified, NonNegativeProbable };

inline const char* to_string(OracleStatus s) {
    return s == OracleStatus::NegativeCertified ? "NegativeCertified" : "NonNegativeProbable";
}

struct OracleResult {
    double approx_min = 0;
    std::array<double, 3> argmin{0, 0, 0};
    std::optional<NegativeWitness> exact_witness;
    OracleStatus status = OracleStatus::NonNegativeProbable;
};

struct OracleOptions {
    int restarts = 20;
    int iters = 60;
    unsigned long long seed = 1;
    double negative_tol = 1e-9;
};

using Vec3 = std::array<double, 3>;

// Vertices of the icosahedron subdivided `level` times; level 3 gives 642.
inline std::vector<Vec3> icosphere(int level) {
    const double p = (1 + std::sqrt(5.0)) / 2;
    std::vector<Vec3> v{{-1, p, 0}, {1, p, 0}, {-1, -p, 0}, {1, -p, 0}, {0, -1, p}, {0, 1, p},
                        {0, -1, -p}, {0, 1, -p}, {p, 0, -1}, {p, 0, 1}, {-p, 0, -1}, {-p, 0, 1}};
    std::vector<std::array<int, 3>> f{{0, 11, 5}, {0, 5, 1}, {0, 1, 7}, {0, 7, 10}, {0, 10, 11},
                                      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                                      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},  {3, 6, 8},  {3, 8, 9},
                                      {4, 9, 5},  {2, 4, 11}, {6, 2, 10}, {8, 6, 7},  {9, 8, 1}};
    auto unit = [](Vec3 a) {
        double n = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
        return Vec3{a[0] / n, a[1] / n, a[2] / n};
    };
    for (auto& x : v) x = unit(x);
    for (int l = 0; l < level; ++l) {
        std::map<std::pair<int, int>, int> mid;
        auto midpoint = [&](int a, int b) {
            auto key = std::minmax(a, b);
            auto it = mid.find(key);
            if (it != mid.end()) return it->second;
            v.push_back(unit({v[a][0] + v[b][0], v[a][1] + v[b][1], v[a][2] + v[b][2]}));
            return mid[key] = int(v.size()) - 1;
        };
        std::vector<std::array<int, 3>> nf;
        for (auto [a, b, c] : f) {
            int ab = midpoint(a, b), bc = midpoint(b, c), ca = midpoint(c, a);
            nf.push_back({a, ab, ca});
            nf.push_back({b, bc, ab});
            nf.push_back({c, ca, bc});
            nf.push_back({ab, bc, ca});
        }
        f = std::move(nf);
    }
    return v;
}

// Fixed start directions: 642 icosphere vertices in 3-d, 642 equally spaced angles in 2-d.
inline const std::vector<Vec3>& grid_directions(int dim) {
    static const std::vector<Vec3> g3 = icosphere(3);
    static const std::vector<Vec3> g2 = [] {
        std::vector<Vec3> g;
        const double pi = std::acos(-1.0);
        for (int k = 0; k < 642; ++k) g.push_back({std::cos(pi * k / 642), std::sin(pi * k / 642), 0});
        return g;
    }();
    return dim == 3 ? g3 : g2;
}

// Double-precision copy of the form: value and gradient.
class FloatForm {
public:
    explicit FloatForm(const IntTensor& T) : dim_(T.dim()) {
        for (int k = 0; k < T.size(); ++k) {
            if (T[k] == 0) continue;
            terms_.push_back({slot_exponent(dim_, k), double(multiplicity(slot_exponent(dim_, k)) * T[k])});
        }
    }
    int dim() const { return dim_; }
    double value(const Vec3& x) const {
        double pw[3][5];
        powers(x, pw);
        double s = 0;
        for (const auto& t : terms_) s += t.c * pw[0][t.e[0]] * pw[1][t.e[1]] * pw[2][t.e[2]];
        return s;
    }
    Vec3 grad(const Vec3& x) const {
        double pw[3][5];
        powers(x, pw);
        Vec3 g{0, 0, 0};
        for (const auto& t : terms_)
            for (int a = 0; a < dim_; ++a) {
                if (t.e[a] == 0) continue;
                double m = t.c * t.e[a];
                for (int b = 0; b < 3; ++b) m *= pw[b][t.e[b] - (a == b)];
                g[a] += m;
            }
        return g;
    }

private:
    struct Term {
        Exponent e;
        double c;
    };
    static void powers(const Vec3& x, double pw[3][5]) {
        for (int a = 0; a < 3; ++a) {
            pw[a][0] = 1;
            for (int p = 1; p <= 4; ++p) pw[a][p] = pw[a][p - 1] * x[a];
        }
    }
    int dim_;
    std::vector<Term> terms_;
};

inline Vec3 normalized(Vec3 x) {
    double n = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    return {x[0] / n, x[1] / n, x[2] / n};
}

// Projected gradient descent with Armijo backtracking; returns the final point and value.
inline std::pair<Vec3, double> descend(const FloatForm& f, Vec3 x, int iters) {
    double fx = f.value(x);
    double step = 0.25;
    for (int it = 0; it < iters; ++it) {
        Vec3 g = f.grad(x);
        double gx = g[0] * x[0] + g[1] * x[1] + g[2] * x[2];
        Vec3 r{g[0] - gx * x[0], g[1] - gx * x[1], g[2] - gx * x[2]};
        double rr = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
        if (rr < 1e-24) break;
        bool moved = false;
        for (int bt = 0; bt < 30; ++bt) {
            Vec3 y = normalized({x[0] - step * r[0], x[1] - step * r[1], x[2] - step * r[2]});
            double fy = f.value(y);
            if (fy <= fx - 1e-4 * step * rr) {
                x = y;
                fx = fy;
                moved = true;
                step *= 2;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;
    }
    return {x, fx};
}

// Rounds through denominators 1..64, then falls back to the bounded integer scan.
inline std::optional<NegativeWitness> refine_witness(const IntTensor& T, const Vec3& approx, bool scan_fallback = true) {
    double m = 0;
    for (int a = 0; a < T.dim(); ++a) m = std::max(m, std::abs(approx[a]));
    if (m > 0) {
        for (int q = 1; q <= 64; ++q) {
            std::array<std::int64_t, 3> x{0, 0, 0};
            bool nonzero = false;
            for (int a = 0; a < T.dim(); ++a) {
                x[a] = std::llround(q * approx[a] / m);
                nonzero |= x[a] != 0;
            }
            if (!nonzero || evaluate_int(T, x) >= 0) continue;
            NegativeWitness w;
            w.x.assign(x.begin(), x.begin() + T.dim());
            w.value = evaluate(T, w.x);
            return w;
        }
    }
    if (!scan_fallback) return std::nullopt;
    return find_negative_witness(T, 32);
}

inline OracleResult sphere_min(const IntTensor& T, const OracleOptions& opt = {}) {
    const FloatForm f(T);
    const int n = T.dim();
    std::vector<Vec3> starts = grid_directions(n);
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> gauss;
    for (int r = 0; r < opt.restarts; ++r) {
        Vec3 x{gauss(rng), gauss(rng), n == 3 ? gauss(rng) : 0.0};
        starts.push_back(normalized(x));
    }
    OracleResult res;
    res.approx_min = INFINITY;
    auto consider = [&](const Vec3& x, double v) {
        if (v < res.approx_min) {
            res.approx_min = v;
            res.argmin = x;
        }
    };
    auto certify = [&](bool scan) {
        if (res.approx_min >= -opt.negative_tol) return false;
        res.exact_witness = refine_witness(T, res.argmin, scan);
        if (res.exact_witness) res.status = OracleStatus::NegativeCertified;
        return res.exact_witness.has_value();
    };
    // The raw grid already exposes most indefinite forms.
    for (const auto& x : starts) consider(x, f.value(x));
    if (certify(false)) return res;
    for (const auto& x : starts) {
        auto [y, v] = descend(f, x, opt.iters);
        bool better = v < res.approx_min;
        consider(y, v);
        if (better && certify(false)) return res;
    }
    certify(true);
    return res;
}

}  // namespace qpsd

#include "oracles.hpp"
#include "qpsd/form.hpp"

#include <doctest.h>

#include <random>

using namespace qpsd;

namespace {
IntTensor ones() { return IntTensor(3, std::vector<int>(15, 1)); }
IntTensor diag_identity() {
    IntTensor T(3);
    T[s1111] = T[s2222] = T[s3333] = 1;
    return T;
}
// Unit diagonal, all t_iiij-type and t_iijj entries 1, mixed entries 0.
IntTensor minus35() {
    IntTensor T = ones();
    T[s1123] = T[s1223] = T[s1233] = 0;
    return T;
}
std::vector<mpq_class> rand_point(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::vector<mpq_class> x;
    for (int a = 0; a < n; ++a) x.emplace_back(num(rng), den(rng));
    for (auto& v : x) v.canonicalize();
    return x;
}
}  // namespace

TEST_CASE("multiplicity weights") {
    CHECK(multiplicity(MultiIndex::of(1, 1, 1, 1)) == 1);
    CHECK(multiplicity(MultiIndex::of(1, 1, 1, 2)) == 4);
    CHECK(multiplicity(MultiIndex::of(1, 1, 2, 2)) == 6);
    CHECK(multiplicity(MultiIndex::of(1, 1, 2, 3)) == 12);
}

TEST_CASE("slot order is canonical and invertible") {
    const char* names[15] = {"1111", "1112", "1113", "1122", "1123", "1133", "1222", "1223",
                             "1233", "1333", "2222", "2223", "2233", "2333", "3333"};
    for (int s = 0; s < 15; ++s) {
        CHECK(slot_name(3, s) == names[s]);
        CHECK(slot_of(3, slot_exponent(3, s)) == s);
    }
    const char* names2[5] = {"1111", "1112", "1122", "1222", "2222"};
    for (int s = 0; s < 5; ++s) CHECK(slot_name(2, s) == names2[s]);
    CHECK(slot_of(3, MultiIndex::of(3, 2, 1, 1)) == s1123);
}

TEST_CASE("evaluate examples") {
    CHECK(evaluate(ones(), std::vector<int>{1, 1, 1}) == 81);
    CHECK(evaluate(minus35(), std::vector<int>{1, 1, -3}) == -35);
    IntTensor T(3);
    T[s1111] = 1;
    CHECK(evaluate(T, std::vector<int>{1, 0, 0}) == 1);
    CHECK_THROWS_AS(evaluate(T, std::vector<int>{1, 0}), std::invalid_argument);
}

TEST_CASE("evaluate matches the ordered-tuple sum, the expansion and the integer path") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        int n = it % 4 == 0 ? 2 : 3;
        IntTensor T = oracle::random_ternary(rng, n);
        auto x = rand_point(rng, n);
        mpq_class v = evaluate(T, x);
        CHECK(v == oracle::brute_eval(T, x));
        CHECK(v == expand(T)(x));
        std::vector<mpq_class> x2;
        for (auto& c : x) x2.push_back(2 * c);
        CHECK(evaluate(T, x2) == 16 * v);
        if (n == 3) {
            std::array<std::int64_t, 3> xi{long(it % 7) - 3, long(it % 5) - 2, long(it % 11) - 5};
            CHECK(mpq_class(evaluate_int(T, xi)) == evaluate(T, xi));
        }
    }
}

TEST_CASE("gradient") {
    auto g = gradient(diag_identity(), std::vector<int>{1, 0, 0});
    CHECK(g == std::vector<mpq_class>{4, 0, 0});
    CHECK(gradient(ones(), std::vector<int>{1, -1, 0}) == std::vector<mpq_class>{0, 0, 0});
    std::mt19937_64 rng(11);
    for (int it = 0; it < 100; ++it) {
        IntTensor T = oracle::random_ternary(rng);
        auto x = rand_point(rng, 3);
        auto gr = gradient(T, x);
        CHECK(gr[0] * x[0] + gr[1] * x[1] + gr[2] * x[2] == 4 * evaluate(T, x));
    }
}

TEST_CASE("expand") {
    Poly d = expand(diag_identity());
    CHECK(d == Poly::monomial({4, 0, 0}) + Poly::monomial({0, 4, 0}) + Poly::monomial({0, 0, 4}));
    Poly s = Poly::var(0) + Poly::var(1) + Poly::var(2);
    CHECK(expand(ones()) == (s * s) * (s * s));
    // Diagonal plus six unit mixed and pair entries: sum of fourth powers plus 6 (x1x2 + x1x3 + x2x3)^2.
    IntTensor A = diag_identity();
    A[s1123] = A[s1223] = A[s1233] = A[s1122] = A[s1133] = A[s2233] = 1;
    Poly q = Poly::var(0) * Poly::var(1) + Poly::var(0) * Poly::var(2) + Poly::var(1) * Poly::var(2);
    CHECK(expand(A) == d + mpq_class(6) * (q * q));
    CHECK(tensor_from_poly(3, expand(A)) == A.cast<mpq_class>());
}

TEST_CASE("group action") {
    const auto& G = signed_perms(3);
    REQUIRE(G.size() == 48);
    CHECK(signed_perms(2).size() == 8);
    std::mt19937_64 rng(3);
    IntTensor T = oracle::random_ternary(rng);
    CHECK(apply(SignedPerm::identity(3), T) == T);

    SignedPerm flip3 = SignedPerm::identity(3);
    flip3.signs[2] = -1;
    IntTensor U = apply(flip3, T);
    CHECK(U[s1123] == -T[s1123]);
    CHECK(U[s1133] == T[s1133]);

    SignedPerm swap12{3, {1, 0, 2}, {1, 1, 1}};
    CHECK(apply(swap12, T)[s1112] == T[s1222]);

    for (int it = 0; it < 20; ++it) {
        IntTensor R = oracle::random_ternary(rng);
        auto x = rand_point(rng, 3);
        for (const auto& g : G) {
            IntTensor gR = apply(g, R);
            CHECK(gR.is_ternary());
            CHECK(evaluate(gR, g.act(x)) == evaluate(R, x));
        }
        const auto& a = G[it % 48];
        const auto& b = G[(7 * it + 5) % 48];
        CHECK(apply(a * b, R) == apply(a, apply(b, R)));
        CHECK(apply(a.inverse(), apply(a, R)) == R);
    }
    CHECK(SignedPerm{3, {0, 2, 1}, {1, -1, 1}}.str() == "[+1,-3,+2]");
}

TEST_CASE("principal pair") {
    std::mt19937_64 rng(5);
    IntTensor T = oracle::random_ternary(rng);
    auto P = principal_pair(T, 1, 2);
    CHECK(P.entries() == std::vector<int>{T[s1111], T[s1112], T[s1122], T[s1222], T[s2222]});
    CHECK(principal_pair(ones(), 2, 3) == IntTensor(2, std::vector<int>(5, 1)));
    for (int it = 0; it < 50; ++it) {
        IntTensor R = oracle::random_ternary(rng);
        auto x = rand_point(rng, 2);
        CHECK(evaluate(principal_pair(R, 1, 3), x) == evaluate(R, std::vector<mpq_class>{x[0], 0, x[1]}));
    }
    CHECK_THROWS(principal_pair(T, 2, 2));
}

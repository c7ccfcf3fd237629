#include "stt/coeff_table.hpp"
#include "stt/dirichlet.hpp"
#include "stt/elliptic.hpp"
#include "stt/errors.hpp"
#include "stt/quad_field.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace stt;

namespace {

// affine points of a long Weierstrass curve by raw double loop (oracle)
long long brute_affine(const EllipticCurve& e, long long p) {
    long long count = 0;
    for (long long x = 0; x < p; ++x)
        for (long long y = 0; y < p; ++y) {
            long long lhs = ((y * y + e.a1 * x * y + e.a3 * y) % p + p) % p;
            long long rhs = ((((x + e.a2) * x + e.a4) * x + e.a6) % p + p) % p;
            if (lhs == rhs) ++count;
        }
    return count;
}

// q prod (1-q^n)^2 (1-q^11n)^2 up to degree bound: the weight-2 level-11 cusp
// form, an independent oracle for the a_p of y^2 + y = x^3 - x^2 - 10x - 20
std::vector<long long> eta_product_coeffs(int bound) {
    std::vector<long long> f(bound + 1, 0);
    f[1] = 1;
    auto mul_factor = [&](int step) {
        // multiply by (1 - q^step)^2 = 1 - 2 q^step + q^{2 step}
        std::vector<long long> g(bound + 1, 0);
        for (int i = 0; i <= bound; ++i) {
            if (f[i] == 0) continue;
            g[i] += f[i];
            if (i + step <= bound) g[i + step] -= 2 * f[i];
            if (i + 2 * step <= bound) g[i + 2 * step] += f[i];
        }
        f = std::move(g);
    };
    for (int n = 1; n <= bound; ++n) {
        mul_factor(n);
        if (11 * n <= bound) mul_factor(11 * n);
    }
    return f;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("point counts match the brute-force oracle") {
    EllipticCurve e{0, 0, 0, 1, 1, {}}; // y^2 = x^3 + x + 1
    for (long long p : {5LL, 7LL, 13LL, 97LL})
        CHECK(ap_point_count(e, p) == p - brute_affine(e, p));
    EllipticCurve f{1, -1, 1, 0, 3, {}};
    for (long long p : {5LL, 7LL, 11LL, 13LL})
        if (f.good_reduction(p)) CHECK(ap_point_count(f, p) == p - brute_affine(f, p));
}

TEST_CASE("level 11 curve matches its eta-product q-expansion") {
    EllipticCurve e{0, -1, 1, -10, -20, {}};
    CHECK(e.discriminant() == BigInt(-161051)); // -11^5
    auto coeffs = eta_product_coeffs(20);
    for (long long p : {2LL, 3LL, 5LL, 7LL, 13LL, 17LL, 19LL})
        CHECK(ap_point_count(e, p) == coeffs[p]);
    CHECK_THROWS_AS(ap_point_count(e, 11), BadReduction);
}

TEST_CASE("weil bound holds across a prime range") {
    EllipticCurve e{0, 0, 1, -1, 0, {}};
    for (long long p : primes_up_to(500)) {
        if (!e.good_reduction(p)) continue;
        long long ap = ap_point_count(e, p);
        CHECK(static_cast<double>(ap) * ap <= 4.0 * p);
    }
}

TEST_CASE("quadratic twist covariance") {
    EllipticCurve e{0, 0, 0, -2, 3, {}};
    for (long long d : {-1LL, 3LL, 5LL}) {
        EllipticCurve t = e.quadratic_twist(d);
        for (long long p : primes_up_to(200)) {
            if (p == 2 || d % p == 0 || !e.good_reduction(p) || !t.good_reduction(p))
                continue;
            CHECK(ap_point_count(t, p) == legendre_symbol(d, p) * ap_point_count(e, p));
        }
    }
    EllipticCurve bad{1, 0, 1, 0, 1, {}};
    CHECK_THROWS_AS(bad.quadratic_twist(5), Error);
}

TEST_CASE("legendre symbol against an explicit square table") {
    for (long long p : {3LL, 5LL, 7LL, 11LL, 13LL}) {
        std::vector<char> sq(p, 0);
        for (long long t = 0; t < p; ++t) sq[t * t % p] = 1;
        for (long long d = 1; d < p; ++d) CHECK(legendre_symbol(d, p) == (sq[d] ? 1 : -1));
        CHECK(legendre_symbol(p, p) == 0);
    }
}

TEST_CASE("quadratic field arithmetic is exact") {
    QuadFieldElem a{5, Rat(1, 2), Rat(3)};
    QuadFieldElem b{5, Rat(-2), Rat(1, 3)};
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
    CHECK(a.norm() == a.x * a.x - 5 * a.y * a.y);
    CHECK((a * a.galois_conj()).is_rational());
    CHECK(a.field_trace() == Rat(1));
    CHECK_THROWS_AS((void)(a * QuadFieldElem{3, Rat(1), Rat(1)}), Error);
}

TEST_CASE("embedding signs agree with floating point") {
    for (long long x = -4; x <= 4; ++x)
        for (long long y = -3; y <= 3; ++y) {
            QuadFieldElem v{2, Rat(x), Rat(y)};
            for (int s : {1, -1}) {
                double numeric = static_cast<double>(x) + s * y * std::sqrt(2.0);
                int expect = numeric > 1e-12 ? 1 : (numeric < -1e-12 ? -1 : 0);
                CHECK(v.embedding_sign(s) == expect);
            }
        }
}

TEST_CASE("total positivity") {
    CHECK(QuadFieldElem{2, Rat(3), Rat(1)}.totally_positive());
    CHECK_FALSE(QuadFieldElem{2, Rat(1), Rat(1)}.totally_positive());
    CHECK_FALSE(QuadFieldElem{2, Rat(-3), Rat(1)}.totally_positive());
    CHECK(QuadFieldElem{0, Rat(7, 3), Rat(0)}.totally_positive());
}

TEST_CASE("exact bound test matches the numeric absolute value") {
    QuadFieldElem v{-1, Rat(3), Rat(2)}; // |3 + 2i|^2 = 13
    CHECK(v.abs_square_leq(1, Rat(13)));
    CHECK_FALSE(v.abs_square_leq(1, Rat(12)));
    QuadFieldElem w{5, Rat(1), Rat(1)}; // (1 + sqrt 5)^2 = 6 + 2 sqrt 5 ~ 10.47
    CHECK(w.abs_square_leq(1, Rat(11)));
    CHECK_FALSE(w.abs_square_leq(1, Rat(10)));
    CHECK(w.abs_square_leq(-1, Rat(2))); // (1 - sqrt 5)^2 ~ 1.53
}

TEST_CASE("roots of unity inside quadratic fields") {
    CHECK(root_of_unity_in_quad(Cyclotomic::one(), 5).has_value());
    auto i = root_of_unity_in_quad(Cyclotomic::root_of_unity(4, 1), -1);
    REQUIRE(i.has_value());
    CHECK(*i * *i == QuadFieldElem{-1, Rat(-1), Rat(0)});
    auto z6 = root_of_unity_in_quad(Cyclotomic::root_of_unity(6, 1), -3);
    REQUIRE(z6.has_value());
    CHECK(z6->norm() == Rat(1));
    CHECK_FALSE(root_of_unity_in_quad(Cyclotomic::root_of_unity(4, 1), 5).has_value());
}

TEST_CASE("coefficient table round trip and validation") {
    CoefficientTable table;
    table.D = -1;
    table.level = 32;
    for (long long p : primes_up_to(60)) {
        if (p == 2) continue;
        PrimeRecord r;
        r.p = p;
        if (p % 4 == 1) {
            r.a = QuadFieldElem{-1, Rat(1), Rat(0)};
            r.eps = Cyclotomic::one();
        } else {
            r.a = QuadFieldElem{-1, Rat(0), Rat(1)};
            r.eps = -Cyclotomic::one();
        }
        table.records.push_back(std::move(r));
    }
    auto path = temp_path("stt_test_roundtrip.csv");
    write_coefficients(table, path);
    auto loaded = load_coefficients(path);
    CHECK(loaded.D == table.D);
    CHECK(loaded.level == table.level);
    REQUIRE(loaded.records.size() == table.records.size());
    for (size_t i = 0; i < table.records.size(); ++i) {
        CHECK(loaded.records[i].p == table.records[i].p);
        CHECK(loaded.records[i].a == table.records[i].a);
        CHECK(loaded.records[i].eps == table.records[i].eps);
    }
    std::filesystem::remove(path);
}

TEST_CASE("loader rejects bad files") {
    auto path = temp_path("stt_test_bad.csv");
    SUBCASE("weil bound violation names the prime") {
        std::ofstream(path) << "#D=0\np,ax,ay,eps_num,eps_ord\n5,100,0,0,1\n";
        CHECK_THROWS_WITH_AS(load_coefficients(path), doctest::Contains("p = 5"),
                             InvariantViolation);
    }
    SUBCASE("bad header") {
        std::ofstream(path) << "#D=0\npp,ax\n";
        CHECK_THROWS_AS(load_coefficients(path), ParseError);
    }
    SUBCASE("missing #D metadata") {
        std::ofstream(path) << "p,ax,ay,eps_num,eps_ord\n";
        CHECK_THROWS_AS(load_coefficients(path), ParseError);
    }
    SUBCASE("unsorted records") {
        std::ofstream(path) << "#D=0\np,ax,ay,eps_num,eps_ord\n7,1,0,0,1\n5,1,0,0,1\n";
        CHECK_THROWS_AS(load_coefficients(path), InvariantViolation);
    }
    SUBCASE("level divisible by a listed prime") {
        std::ofstream(path) << "#D=0\n#N=10\np,ax,ay,eps_num,eps_ord\n5,1,0,0,1\n";
        CHECK_THROWS_AS(load_coefficients(path), InvariantViolation);
    }
    std::filesystem::remove(path);
}

TEST_CASE("normalization") {
    PrimeRecord r;
    r.p = 25; // not prime, but normalize only divides by sqrt(p)
    r.a = QuadFieldElem::from_rational(Rat(10));
    CHECK(normalize(r, 1) == doctest::Approx(2.0));
    CHECK(normalize(r, 2) == doctest::Approx(2.0));
    r.a = QuadFieldElem{5, Rat(0), Rat(1)};
    CHECK(normalize(r, 1) == doctest::Approx(std::sqrt(5.0) / 5.0));
    CHECK(normalize(r, 2) == doctest::Approx(-std::sqrt(5.0) / 5.0));
}

TEST_CASE("ribet identity on a synthetic table") {
    CoefficientTable table;
    table.D = -1;
    for (long long p : {5LL, 13LL, 3LL, 7LL}) {
        PrimeRecord r;
        r.p = p;
        if (p % 4 == 1) {
            r.a = QuadFieldElem{-1, Rat(2), Rat(0)};
            r.eps = Cyclotomic::one();
        } else {
            // a = yi, eps = -1: a^2 = -y^2 = eps * (a conj a)
            r.a = QuadFieldElem{-1, Rat(0), Rat(1)};
            r.eps = -Cyclotomic::one();
        }
        table.records.push_back(std::move(r));
    }
    auto report = ribet_identity_check(table);
    CHECK(report.checked == 4);
    CHECK(report.ok());

    // corrupt one entry: identity must fail and name the prime
    table.records[1].a = QuadFieldElem{-1, Rat(1), Rat(1)};
    auto bad = ribet_identity_check(table);
    REQUIRE_FALSE(bad.ok());
    CHECK(bad.failures.front().p == 13);
}

TEST_CASE("ribet identity in the real quadratic case") {
    // complex conjugation is trivial on a real field, so a*conj(a) = a^2 and
    // the identity forces eps = 1 on any nonzero row
    CoefficientTable table;
    table.D = 5;
    PrimeRecord r;
    r.p = 11;
    r.a = QuadFieldElem{5, Rat(1), Rat(1)};
    r.eps = Cyclotomic::one();
    table.records.push_back(r);
    CHECK(ribet_identity_check(table).ok());
    CHECK((r.a * r.a.complex_conj()).totally_positive());

    table.records[0].eps = -Cyclotomic::one();
    CHECK_FALSE(ribet_identity_check(table).ok());
}

TEST_CASE("tensor trace check") {
    auto rational_table = [](std::vector<std::pair<long long, long long>> rows) {
        CoefficientTable t;
        for (auto [p, v] : rows) {
            PrimeRecord r;
            r.p = p;
            r.a = QuadFieldElem::from_rational(Rat(v));
            t.records.push_back(r);
        }
        return t;
    };
    SUBCASE("b = 1 over Q is the identity") {
        auto a = rational_table({{3, -1}, {5, 2}, {7, 0}});
        auto b = rational_table({{3, 1}, {5, 1}, {7, 1}});
        CHECK(tensor_trace_check(a, b, a).ok());
        auto wrong = rational_table({{3, -1}, {5, 2}, {7, 1}});
        auto rep = tensor_trace_check(a, b, wrong);
        REQUIRE_FALSE(rep.ok());
        CHECK(rep.failures.front().p == 7);
    }
    SUBCASE("real quadratic trace is the sum of conjugates") {
        CoefficientTable a;
        a.D = 5;
        PrimeRecord r;
        r.p = 3;
        r.a = QuadFieldElem{5, Rat(2), Rat(7)};
        a.records.push_back(r);
        auto b = rational_table({{3, 1}});
        b.D = 5;
        auto c = rational_table({{3, 4}}); // 2x = 4
        c.D = 5;
        CHECK(tensor_trace_check(a, b, c).ok());
    }
}

TEST_CASE("dirichlet characters") {
    SUBCASE("trivial") {
        auto chi = DirichletCharacter::trivial(7);
        CHECK(chi.is_trivial());
        for (long long p : {2LL, 3LL, 5LL, 11LL}) CHECK(chi(p).is_one());
        CHECK_THROWS_AS(chi(7), BadPrime);
    }
    SUBCASE("the quadratic character mod 4") {
        auto chi = DirichletCharacter(4, {{3, -Cyclotomic::one()}});
        CHECK(chi.order() == 2u);
        CHECK(chi(5).is_one());
        CHECK(chi(7) == -Cyclotomic::one());
    }
    SUBCASE("order-4 character mod 5 is multiplicative") {
        auto chi = DirichletCharacter(5, {{2, Cyclotomic::root_of_unity(4, 1)}});
        CHECK(chi.order() == 4u);
        for (long long a = 1; a <= 4; ++a)
            for (long long b = 1; b <= 4; ++b) CHECK(chi(a) * chi(b) == chi(a * b));
    }
    SUBCASE("inconsistent images are rejected") {
        CHECK_THROWS_AS(DirichletCharacter(5, {{2, Cyclotomic::root_of_unity(3, 1)}}),
                        NotAHomomorphism);
        CHECK_THROWS_AS(DirichletCharacter(8, {{4, Cyclotomic::one()}}), NotAHomomorphism);
    }
    SUBCASE("generators must generate") {
        // 1 alone does not generate (Z/5)^x
        CHECK_THROWS_AS(DirichletCharacter(5, {{1, Cyclotomic::one()}}), NotAHomomorphism);
    }
}

TEST_CASE("frobenius class labels") {
    std::map<long long, int> classes{{1, 0}, {3, 1}};
    CHECK(frobenius_class_label(5, 4, classes) == 0);
    CHECK(frobenius_class_label(7, 4, classes) == 1);
    CHECK_THROWS_AS(frobenius_class_label(2, 4, classes), BadPrime);
}

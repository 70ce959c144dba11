#include <random>

#include "birsphere/algebraic.hpp"
#include "birsphere/factor.hpp"
#include "birsphere/parse.hpp"
#include "birsphere/positive.hpp"
#include "birsphere/realroots.hpp"
#include "doctest.h"

using namespace bs;

static PolyC P(const char* s) { return parse_poly(s); }
static PolyT PT(const char* s) { return to_real(parse_poly(s)); }

TEST_CASE("tower arithmetic and sign") {
    TowerReal s2 = TowerReal::sqrt_of(2), s3 = TowerReal::sqrt_of(3);
    CHECK(s2 * s2 == TowerReal(2));
    CHECK((s2 * s3) * (s2 * s3) == TowerReal(6));
    TowerReal x = s2 + s3;
    CHECK(x * x.inverse() == TowerReal(1));
    CHECK((s3 - s2).sign() == 1);
    CHECK((TowerReal(Q(3, 2)) - s2).sign() == 1);
    CHECK((TowerReal(Q(141, 100)) - s2).sign() == -1);
    auto r = tower_sqrt(TowerReal(3) + TowerReal(2) * s2);
    REQUIRE(r);
    CHECK(*r == TowerReal(1) + s2);
    CHECK(!tower_sqrt(s2));
    CHECK(TowerReal::sqrt_of(Q(8, 9)).str() == "2/3*sqrt(2)");
}

TEST_CASE("polynomial product over a common denominator") {
    std::mt19937 rng(17);
    TowerReal s2 = TowerReal::sqrt_of(2), s6 = TowerReal::sqrt_of(6);
    auto coeff = [&](int k) {
        std::uniform_int_distribution<int> d(-9, 9);
        TowerReal re = TowerReal(Q(d(rng), 1 + k)) + TowerReal(Q(d(rng), 3)) * s2;
        TowerReal im = TowerReal(Q(d(rng), 7)) * s6;
        return CoeffScalar(re, im);
    };
    for (int n = 3; n < 8; ++n) {
        std::vector<CoeffScalar> a, b;
        for (int k = 0; k < n; ++k) a.push_back(coeff(k));
        for (int k = 0; k < n + 2; ++k) b.push_back(coeff(k));
        std::vector<CoeffScalar> naive(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) naive[i + j] += a[i] * b[j];
        CHECK(PolyC(a) * PolyC(b) == PolyC(naive));
        std::vector<TowerReal> ar, br, nr(a.size() + b.size() - 1);
        for (const auto& x : a) ar.push_back(x.re);
        for (const auto& x : b) br.push_back(x.re);
        for (std::size_t i = 0; i < ar.size(); ++i)
            for (std::size_t j = 0; j < br.size(); ++j) nr[i + j] += ar[i] * br[j];
        CHECK(PolyT(ar) * PolyT(br) == PolyT(nr));
    }
}

TEST_CASE("conj and eta substitutions") {
    CHECK(P("z+i").conj() == P("z-i"));
    CHECK(P("z^2-2").conj() == P("z^2-2"));
    CHECK(P("(1+i)z^2").conj() == P("(1-i)z^2"));
    CHECK(P("z^2+z").eta() == P("z^2-z"));
    CHECK(P("1-z^2").eta() == P("1-z^2"));
    CHECK(P("i z").eta() == P("-i z"));
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int k = 0; k < 20; ++k) {
        std::vector<CoeffScalar> c;
        for (int j = 0; j < 5; ++j) c.emplace_back(TowerReal(d(rng)), TowerReal(d(rng)));
        PolyC p(c);
        CHECK(p.eta().conj() == p.conj().eta());
        CHECK(p.conj().conj() == p);
    }
}

TEST_CASE("parser") {
    CHECK(P("(1-1/2*i)*z^2 + sqrt(3)*z - 2").str() == "(1 - 1/2*i)*z^2 + sqrt(3)*z - 2");
    CHECK(P("2i").str() == "2*i");
    CHECK(P("3z^2-2z").str() == "3*z^2 - 2*z");
    CHECK_THROWS_AS(parse_poly("z+"), ParseError);
    CHECK_THROWS_AS(parse_poly("1/z"), ParseError);
    auto m = parse_matrix_entries("[[z/2, 1],[0, 1/3]]");
    CHECK(m[0] == P("z/2"));
    CHECK(m[1] == P("1"));
    CHECK(m[3] == P("1/3"));
    m = parse_matrix_entries("diag(1/z, 1/(z+1))");
    CHECK(m[0] == P("z+1"));
    CHECK(m[3] == P("z"));
}

TEST_CASE("is_real_positive and sturm_count") {
    CHECK(is_real_positive(P("z^2+3")));
    CHECK(!is_real_positive(P("z^2")));
    CHECK(!is_real_positive(P("2z^2-1")));
    CHECK_THROWS_AS(is_real_positive(P("z^2+i")), DomainError);
    CHECK(sturm_count(PT("2z^2-1"), Q(-1), Q(1)) == 2);
    CHECK(sturm_count(PT("z^2+3"), std::nullopt, std::nullopt) == 0);
    CHECK(sturm_count(PT("z-1/2"), Q(0), Q(1)) == 1);
    CHECK(sturm_count(PT("z^2-1"), Q(-1), Q(1)) == 0);
    CHECK(sturm_count(PT("(z^2-1)^3 z"), Q(-1), Q(1)) == 1);
}

// Oracle: polynomials built from known distinct rational roots times
// positive-definite quadratics, so the root count on any interval is known.
TEST_CASE("sturm_count against constructed roots") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 6), pick(0, 3);
    for (int trial = 0; trial < 100; ++trial) {
        PolyT p(TowerReal(1));
        std::vector<Q> roots;
        int deg = 0;
        while (deg < 8) {
            if (pick(rng) == 0 && deg <= 6) {
                Q b(num(rng), den(rng)), c(std::abs(num(rng)) + 1, den(rng));
                b.canonicalize();
                c.canonicalize();
                p *= to_t(PolyQ(std::vector<Q>{b * b + c, 2 * b, Q(1)}));
                deg += 2;
            } else {
                Q r(num(rng), den(rng));
                r.canonicalize();
                p *= to_t(PolyQ(std::vector<Q>{-r, Q(1)}));
                if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
                deg += 1;
            }
            if (pick(rng) == 3) break;
        }
        Q lo(num(rng), 3), hi(num(rng), 3);
        lo.canonicalize();
        hi.canonicalize();
        if (lo > hi) std::swap(lo, hi);
        int expect = 0;
        for (const auto& r : roots)
            if (r > lo && r < hi) ++expect;
        CHECK(sturm_count(p, lo, hi) == expect);
        CHECK(sturm_count(p, std::nullopt, std::nullopt) == int(roots.size()));
        CHECK(int(isolate_roots(p, std::nullopt, std::nullopt).size()) == int(roots.size()));
    }
}

TEST_CASE("square_free_part") {
    CHECK(square_free_part(P("(z^2+1)^2(z^2+4)")) == P("(z^2+1)(z^2+4)"));
    CHECK(square_free_part(P("z^3")) == P("z"));
    CHECK(square_free_part(P("-2z^2+2")) == P("-(z^2-1)"));
    CHECK(odd_part(PT("(z^2+1)^2(z^2+4)")) == PT("z^2+4"));
}

TEST_CASE("norm_factor") {
    CHECK(norm_factor(P("z^2+1")) == P("z+i"));
    CHECK(norm_factor(P("(z^2+1)^2")) == P("z^2+1"));
    CHECK(norm_factor(P("z^4+5z^2+4")) == P("z^2+3i z-2"));
    for (const char* s : {"z^2-2z+2", "4z^2+1", "z^4+1", "(z^2+z+1)(z^2+3)", "z^4+z^2+1", "2(z^2+2)^3"}) {
        PolyC f = P(s);
        PolyC p = norm_factor(f);
        CHECK(p * p.conj() == f);
    }
    CHECK_THROWS_AS(norm_factor(P("z^2-1")), DomainError);
}

TEST_CASE("quadratic_decomp and v_decomp") {
    const PolyT h1 = PT("z^2-1");
    auto q = quadratic_decomp(P("z^2+4"));
    CHECK(q.c == TowerReal(1));
    CHECK(q.a == PolyT(TowerReal::sqrt_of(5)));
    q = quadratic_decomp(P("z^2+1"));
    CHECK(q.a == PolyT(TowerReal::sqrt_of(2)));
    q = quadratic_decomp(P("z^2-2z+2"));
    CHECK(q.c == (TowerReal::sqrt_of(5) - TowerReal(1)) * TowerReal(Q(1, 2)));
    CHECK(q.a * q.a + h1.scaled(q.c) == PT("z^2-2z+2"));
    for (const char* s : {"z^2+4", "(z^2+4)(z^2+1)", "(z^2+1)(z^2+2)(z^2+5)", "3(z^2+2)", "z^2-2z+2"}) {
        auto v = v_decomp(P(s));
        CHECK(v.a * v.a + v.P * h1 == PT(s));
        CHECK(is_real_positive(v.P));
    }
    auto c = v_decomp(P("9"));
    CHECK(c.a * c.a + c.P * h1 == PT("9"));
    CHECK(c.P.is_zero());
}

TEST_CASE("rational factorization and algebraic numbers") {
    auto f = factor_rational(to_rational(P("(z^2-2)(z-3)^2(z^3-z-1)")));
    CHECK(f.size() == 3);
    auto iv = isolate_roots(PT("z^2-2"), Q(0), std::nullopt);
    REQUIRE(iv.size() == 1);
    auto a = RealAlgebraic::root_of(PT("(z^2-2)(z+5)"), iv[0]);
    CHECK(a.minpoly() == to_rational(P("z^2-2")));
    CHECK(a.sign() == 1);
    auto b = RealAlgebraic::root_of(PT("z^4-4"), isolate_roots(PT("z^4-4"), Q(1), Q(2))[0]);
    CHECK(a == b);
    CHECK(RealAlgebraic::rational(1) < a);
    CHECK(a < RealAlgebraic::rational(Q(3, 2)));
    auto s = RealAlgebraic::root_of(PT("z - sqrt(2)"), {Q(1), Q(2)});
    CHECK(s == a);
}

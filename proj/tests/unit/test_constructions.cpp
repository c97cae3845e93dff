#include "nolat/constructions.hpp"
#include "nolat/error.hpp"
#include "nolat/invariants.hpp"
#include "nolat/ortho.hpp"
#include "nolat/svp.hpp"

#include <doctest.h>

using namespace nolat;

namespace {

Errc code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("Gram entries of the families") {
    CHECK(integer_lattice(3).gram() == RatMatrix::identity(3));
    CHECK(hexagonal().gram() == RatMatrix{{1, Rational(1, 2)}, {Rational(1, 2), 1}});
    const auto l = lnm(5, 2);
    CHECK(l.g(0, 1) == Rational(1, 2));
    CHECK(l.g(2, 3) == Rational(1, 2));
    CHECK(l.g(1, 2) == Rational(0));
    CHECK(l.g(4, 4) == Rational(1));
    CHECK(staircase(3).gram() == RatMatrix{{1, Rational(1, 2), Rational(1, 4)},
                                           {Rational(1, 2), 1, Rational(-1, 4)},
                                           {Rational(1, 4), Rational(-1, 4), 1}});
    CHECK(k3_prime().gram() == RatMatrix{{1, Rational(-1, 2), Rational(-1, 2)},
                                         {Rational(-1, 2), 1, Rational(1, 4)},
                                         {Rational(-1, 2), Rational(1, 4), 1}});
    CHECK(an_root(3).gram() == RatMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    CHECK(an_dual_frame(3).g(0, 2) == Rational(-1, 3));
    const auto cb = coxeter_barnes(7, 4);
    CHECK(cb.g(0, 0) == Rational(2));
    CHECK(cb.g(0, 1) == Rational(1));
    CHECK(cb.g(0, 6) == Rational(2));
    CHECK(cb.g(6, 6) == Rational(7, 2));
    CHECK(cb.gram_det() == Rational(1, 2));
}

TEST_CASE("staircase Gram follows the projection rule") {
    for (std::size_t n = 2; n <= 7; ++n) {
        const auto s = staircase(n);
        for (std::size_t k = 1; k < n; ++k) {
            // y = (1/2)(b_1 - b_2 - ... - b_k) in 1-based terms
            std::vector<long long> y(n, 0);
            y[0] = 1;
            for (std::size_t j = 1; j < k; ++j) y[j] = -1;
            std::vector<long long> ek(n, 0);
            ek[k] = 1;
            for (std::size_t i = 0; i < k; ++i) {
                std::vector<long long> ei(n, 0);
                ei[i] = 1;
                CHECK(s.inner(ek, ei) == s.inner(y, ei) / Rational(2));
            }
        }
    }
}

TEST_CASE("minimal vector counts of the families") {
    for (std::size_t n = 2; n <= 7; ++n) {
        for (std::size_t m = 0; 2 * m <= n; ++m) CHECK(minimal_vectors(lnm(n, m)).kissing_number() == 2 * (n + m));
        CHECK(minimal_vectors(staircase(n)).kissing_number() == 4 * n - 2);
        CHECK(minimal_vectors(an_dual_frame(n)).kissing_number() == 2 * n + 2);
    }
    for (std::size_t n = 3; n <= 8; ++n)
        for (std::size_t m = 1; m <= (n % 2 ? (n - 1) / 2 : (n - 2) / 2); ++m) {
            CAPTURE(n);
            CAPTURE(m);
            const auto h = hybrid(n, m);
            CHECK(h.rank() == n);
            CHECK(minimal_vectors(h).kissing_number() == hybrid_kissing_number(n, m));
        }
    CHECK(minimal_vectors(k3_prime()).kissing_number() == 10);
    CHECK(minimal_vectors(coxeter_barnes(7, 4)).kissing_number() == 56);
    CHECK(minimal_norm_sq(coxeter_barnes(7, 4)) == Rational(3, 2));
}

TEST_CASE("families are well-rounded and nearly orthogonal where claimed") {
    for (std::size_t n = 2; n <= 6; ++n) {
        CHECK(is_well_rounded(staircase(n)));
        CHECK(is_theta_orthogonal(staircase(n)).weakly);
        CHECK(is_theta_orthogonal(lnm(n, n / 2)).strictly);
    }
}

TEST_CASE("parameter validation") {
    CHECK(code_of([] { integer_lattice(0); }) == Errc::InvalidArgument);
    CHECK(code_of([] { lnm(3, 2); }) == Errc::InvalidArgument);
    CHECK(code_of([] { staircase(1); }) == Errc::InvalidArgument);
    CHECK(code_of([] { hybrid(2, 1); }) == Errc::InvalidArgument);
    CHECK(code_of([] { hybrid(6, 3); }) == Errc::InvalidArgument);
    CHECK(code_of([] { an_root(1); }) == Errc::InvalidArgument);
    CHECK(code_of([] { coxeter_barnes(7, 3); }) == Errc::InvalidArgument);
    CHECK(code_of([] { coxeter_barnes(7, 8); }) == Errc::InvalidArgument);
    CHECK(code_of([] { coxeter_barnes(5, 2); }) == Errc::InvalidArgument);
}

TEST_CASE("planar integral lattices") {
    CHECK(is_squarefree(1));
    CHECK(is_squarefree(30));
    CHECK_FALSE(is_squarefree(12));
    CHECK_FALSE(is_squarefree(0));

    const auto r = planar_wr(Rational(1, 10), 2);
    CHECK(r.m == 3);
    CHECK(r.n == 2);
    CHECK(r.p * r.p + r.r * r.r * 2 == r.q * r.q);
    CHECK(Rational(r.p, r.q) < Rational(1, 10));
    CHECK(r.lattice.gram() == RatMatrix{{Rational(r.q), Rational(r.p)}, {Rational(r.p), Rational(r.q)}});
    CHECK(coherence(r.lattice).value == Rational(r.p, r.q));

    const auto c = planar_wr(Rational(2, 17), 7);
    CHECK(c.recipe_used);
    CHECK(c.m == 8);
    CHECK(c.n == 3);
    CHECK(c.p == 1);
    CHECK(c.q == 127);
    CHECK(c.r == 48);
    CHECK(c.bound_holds);

    for (const auto& [eps, d] : std::vector<std::pair<Rational, long long>>{
             {Rational(1, 2), 1}, {Rational(1, 4), 3}, {Rational(1, 20), 5}, {Rational(1, 100), 11}}) {
        const auto x = planar_wr(eps, d);
        CHECK(x.p * x.p + x.r * x.r * static_cast<long>(d) == x.q * x.q);
        CHECK(Rational(x.p, x.q) < eps);
        CHECK(is_well_rounded(x.lattice));
        CHECK(planar_q_bound_holds(x.q, eps, d) == x.bound_holds);
    }
    CHECK(code_of([] { planar_wr(Rational(3, 5), 2); }) == Errc::InvalidArgument);
    CHECK(code_of([] { planar_wr(Rational(1, 10), 4); }) == Errc::InvalidArgument);
    CHECK(code_of([] { planar_wr(Rational(1, 10), 2, 1); }) == Errc::SearchExhausted);
}

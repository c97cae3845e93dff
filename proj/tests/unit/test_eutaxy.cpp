#include "nolat/constructions.hpp"
#include "nolat/error.hpp"
#include "nolat/eutaxy.hpp"

#include <doctest.h>

using namespace nolat;

namespace {

// sum_i c_i u_i u_i^T times G must be the identity.
bool oracle_identity(const Lattice& l, const MinimalVectorSet& mv, const RatVector& c) {
    const std::size_t n = l.rank();
    RatMatrix s(n, n);
    for (std::size_t k = 0; k < mv.pairs.size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                s(i, j) += c[k] * Rational(mv.pairs[k][i] * mv.pairs[k][j]);
    return s * l.gram() == RatMatrix::identity(n);
}

void check_class(const Lattice& l, EutaxyClass expected) {
    CAPTURE(l.name());
    const auto mv = minimal_vectors(l);
    const auto r = eutaxy_classify(l, mv);
    CHECK(eutaxy_class_name(r.eutaxy_class) == eutaxy_class_name(expected));
    if (expected == EutaxyClass::NotWeaklyEutactic) {
        CHECK_FALSE(r.coefficients);
        return;
    }
    REQUIRE(r.coefficients);
    CHECK(oracle_identity(l, mv, *r.coefficients));
    CHECK(eutaxy_identity_holds(l, mv, *r.coefficients));
    if (expected == EutaxyClass::Eutactic || expected == EutaxyClass::StronglyEutactic)
        for (const auto& c : *r.coefficients) CHECK(c.sign() > 0);
    if (expected == EutaxyClass::StronglyEutactic)
        for (const auto& c : *r.coefficients) CHECK(c == r.coefficients->front());
}

}  // namespace

TEST_CASE("eutaxy classes of standard lattices") {
    check_class(integer_lattice(3), EutaxyClass::StronglyEutactic);
    check_class(hexagonal(), EutaxyClass::StronglyEutactic);
    check_class(lnm(6, 3), EutaxyClass::StronglyEutactic);
    check_class(an_root(4), EutaxyClass::StronglyEutactic);
    check_class(direct_sum(integer_lattice(1), hexagonal()), EutaxyClass::Eutactic);
    check_class(lnm(5, 1), EutaxyClass::Eutactic);
    check_class(staircase(3), EutaxyClass::Eutactic);
    check_class(k3_prime(), EutaxyClass::Eutactic);
    check_class(Lattice::from_gram("tilt", RatMatrix{{1, Rational(1, 3)}, {Rational(1, 3), 1}}),
                EutaxyClass::NotWeaklyEutactic);
}

TEST_CASE("eutaxy coefficients") {
    const auto h = eutaxy_classify(hexagonal());
    CHECK(*h.coefficients == RatVector{Rational(2, 3), Rational(2, 3), Rational(2, 3)});
    const auto s = eutaxy_classify(staircase(3));
    CHECK(*s.coefficients ==
          RatVector{Rational(2, 3), Rational(2, 3), Rational(2, 3), Rational(1, 3), Rational(2, 3)});
    CHECK_FALSE(eutaxy_identity_holds(hexagonal(), minimal_vectors(hexagonal()), RatVector{1, 1, 1}));
}

TEST_CASE("eutaxy scales with the Gram") {
    for (const auto& l : {hexagonal(), staircase(3), lnm(4, 1)}) {
        const auto base = eutaxy_classify(l);
        for (const int lambda : {4, 9}) {
            const auto scaled = eutaxy_classify(Lattice::from_gram("s", l.gram().scaled(Rational(lambda))));
            CHECK(scaled.eutaxy_class == base.eutaxy_class);
            if (base.coefficients && base.solution_space_dim == 0) {
                RatVector expected;
                for (const auto& c : *base.coefficients) expected.push_back(c / Rational(lambda));
                CHECK(*scaled.coefficients == expected);
            }
        }
    }
}

TEST_CASE("perfection") {
    CHECK(is_perfect(integer_lattice(1)));
    CHECK_FALSE(is_perfect(integer_lattice(2)));
    CHECK(is_perfect(hexagonal()));
    CHECK(is_perfect(an_root(3)));
    CHECK(is_perfect(an_root(5)));
    CHECK_FALSE(is_perfect(staircase(4)));
    CHECK_FALSE(is_perfect(k3_prime()));
    CHECK(is_perfect(coxeter_barnes(7, 4)));
    CHECK(eutaxy_classify(coxeter_barnes(7, 4)).eutaxy_class == EutaxyClass::StronglyEutactic);
}

TEST_CASE("eutaxy and perfection need well-rounded input") {
    const auto rect = Lattice::from_gram("rect", RatMatrix{{1, 0}, {0, 2}});
    for (auto f : {+[](const Lattice& l) { eutaxy_classify(l); }, +[](const Lattice& l) { is_perfect(l); }}) {
        try {
            f(rect);
            FAIL("expected NotWellRounded");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::NotWellRounded);
        }
    }
}

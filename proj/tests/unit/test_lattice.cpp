#include "nolat/constructions.hpp"
#include "nolat/error.hpp"
#include "nolat/lattice.hpp"

#include <doctest.h>

#include <cmath>

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

TEST_CASE("from_gram validates its input") {
    CHECK(code_of([] { Lattice::from_gram("x", RatMatrix(2, 3)); }) == Errc::DimensionMismatch);
    CHECK(code_of([] { Lattice::from_gram("x", RatMatrix{{1, 0}, {1, 1}}); }) == Errc::NotSymmetric);
    CHECK(code_of([] { Lattice::from_gram("x", RatMatrix{{1, 2}, {2, 1}}); }) == Errc::NotPositiveDefinite);
    CHECK(code_of([] { Lattice::from_gram("x", RatMatrix{}); }) == Errc::InvalidArgument);
    const auto l = Lattice::from_gram("h", RatMatrix{{1, Rational(1, 2)}, {Rational(1, 2), 1}}, "test");
    CHECK(l.rank() == 2);
    CHECK(l.name() == "h");
    CHECK(l.provenance() == "test");
    CHECK(l.gram_det() == Rational(3, 4));
    CHECK(l.norm_sq({1, -1}) == Rational(1));
    CHECK(l.norm_sq({1, 1}) == Rational(3));
    CHECK(l.inner({1, 0}, {0, 1}) == Rational(1, 2));
}

TEST_CASE("float basis ingestion rationalizes the Gram") {
    FloatBasis b;
    b.ambient_dim = 2;
    b.columns = {{1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}};
    const auto l = lattice_from_float_basis("hex", b, 1000);
    CHECK(l.gram() == hexagonal().gram());
    const auto fg = float_gram(b);
    CHECK(fg[0][1] == doctest::Approx(0.5));

    FloatBasis bad;
    bad.ambient_dim = 1;
    bad.columns = {{M_PI}};
    CHECK(code_of([&] { lattice_from_float_basis("pi", bad, 10); }) == Errc::RationalizationFailed);

    FloatBasis dependent;
    dependent.ambient_dim = 2;
    dependent.columns = {{1.0, 0.0}, {2.0, 0.0}};
    CHECK(code_of([&] { lattice_from_float_basis("dep", dependent, 10); }) == Errc::NotPositiveDefinite);
}

TEST_CASE("direct sums, sublattices, reordering and basis changes") {
    const auto s = direct_sum(integer_lattice(1), hexagonal());
    CHECK(s.rank() == 3);
    CHECK(s.g(1, 2) == Rational(1, 2));
    CHECK(s.g(0, 1) == Rational(0));
    CHECK(s.gram_det() == Rational(3, 4));

    const auto sub = principal_sublattice(staircase(3), {2, 0});
    CHECK(sub.g(0, 1) == Rational(1, 4));
    CHECK(code_of([] { principal_sublattice(staircase(3), {0, 0}); }) == Errc::InvalidArgument);
    CHECK(code_of([] { principal_sublattice(staircase(3), {3}); }) == Errc::InvalidArgument);

    const auto r = reorder_basis(staircase(3), {2, 1, 0});
    CHECK(r.g(0, 1) == Rational(-1, 4));
    CHECK(r.g(1, 2) == Rational(1, 2));
    CHECK(r.gram_det() == staircase(3).gram_det());
    CHECK(code_of([] { reorder_basis(staircase(3), {0, 1, 1}); }) == Errc::InvalidArgument);

    const auto c = change_basis(hexagonal(), {{1, -1}, {0, 1}});
    CHECK(c.g(0, 0) == Rational(1));
    CHECK(c.g(0, 1) == Rational(-1, 2));
    CHECK(c.gram_det() == Rational(3, 4));
    CHECK(code_of([] { change_basis(hexagonal(), {{1, 1}, {2, 2}}); }) == Errc::NotPositiveDefinite);

    CHECK(normalize_min_norm(an_root(3)).g(0, 0) == Rational(1));
    CHECK(is_permutation_of_range({2, 0, 1}, 3));
    CHECK_FALSE(is_permutation_of_range({0, 0, 1}, 3));
    CHECK_FALSE(is_permutation_of_range({0, 1}, 3));
}

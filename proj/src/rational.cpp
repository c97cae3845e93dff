#include "nolat/rational.hpp"

#include "nolat/error.hpp"

#include <cmath>
#include <string>

namespace nolat {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::NegativeInput: return "NegativeInput";
        case Errc::NotSymmetric: return "NotSymmetric";
        case Errc::NotPositiveDefinite: return "NotPositiveDefinite";
        case Errc::RationalizationFailed: return "RationalizationFailed";
        case Errc::DimensionGuardExceeded: return "DimensionGuardExceeded";
        case Errc::PairCountGuard: return "PairCountGuard";
        case Errc::CombinatorialGuard: return "CombinatorialGuard";
        case Errc::FewerThanTwoPairs: return "FewerThanTwoPairs";
        case Errc::NotWellRounded: return "NotWellRounded";
        case Errc::SearchExhausted: return "SearchExhausted";
        case Errc::VerificationFailed: return "VerificationFailed";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw_zero_denominator();
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

void Rational::throw_zero_denominator() {
    throw Error(Errc::InvalidArgument, "zero denominator");
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw_zero_denominator();
    value_ /= o.value_;
    return *this;
}

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);

    bool negative = false;
    constexpr std::string_view unicode_minus = "\xE2\x88\x92";
    if (s.starts_with(unicode_minus)) {
        negative = true;
        s.remove_prefix(unicode_minus.size());
    } else if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    std::string_view num_part = s;
    std::string_view den_part = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num_part = s.substr(0, slash);
        den_part = s.substr(slash + 1);
    }
    if (!is_digits(num_part) || !is_digits(den_part))
        throw Error(Errc::ParseError, "not a rational: '" + std::string(text) + "'");

    Integer num(std::string(num_part), 10);
    Integer den(std::string(den_part), 10);
    if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    if (negative) num = -num;
    return Rational(num, den);
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational pow(const Rational& base, unsigned exponent) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(num, den);
}

Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
    return r;
}

Integer ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
    return r;
}

// floor(sqrt(x)) == floor(sqrt(floor(x))) for x >= 0.
Integer int_sqrt_floor(const Rational& q) {
    if (q.sign() < 0) throw Error(Errc::NegativeInput, "int_sqrt_floor of " + q.str());
    Integer r;
    mpz_sqrt(r.get_mpz_t(), floor(q).get_mpz_t());
    return r;
}

bool rational_sqrt(const Rational& q, Rational& root) {
    if (q.sign() < 0) return false;
    const Integer num = q.num();
    const Integer den = q.den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    Integer a, b;
    mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
    root = Rational(a, b);
    return true;
}

Rational best_approximation(double x, long max_den) {
    if (!std::isfinite(x)) throw Error(Errc::RationalizationFailed, "non-finite value");
    if (max_den < 1) throw Error(Errc::InvalidArgument, "max denominator must be >= 1");

    const bool negative = x < 0;
    double rest = std::fabs(x);
    // Convergents h/k of the continued fraction of |x|.
    long h_prev = 1, h = static_cast<long>(std::floor(rest));
    long k_prev = 0, k = 1;
    double frac = rest - std::floor(rest);
    while (frac > 1e-15) {
        rest = 1.0 / frac;
        const double a_d = std::floor(rest);
        if (a_d > 1e12) break;
        const long a = static_cast<long>(a_d);
        const long k_next = a * k + k_prev;
        if (k_next > max_den) {
            // Best semiconvergent that still fits the bound.
            const long t = (max_den - k_prev) / k;
            const long hs = t * h + h_prev;
            const long ks = t * k + k_prev;
            const double err_conv = std::fabs(static_cast<double>(h) / k - std::fabs(x));
            const double err_semi = std::fabs(static_cast<double>(hs) / ks - std::fabs(x));
            if (t > 0 && err_semi < err_conv) {
                h = hs;
                k = ks;
            }
            break;
        }
        const long h_next = a * h + h_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        frac = rest - a_d;
    }
    Rational r(h, k);
    return negative ? -r : r;
}

}  // namespace nolat

#include "nolat/constructions.hpp"

#include "nolat/error.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <string>

namespace nolat {

namespace {

std::string param_str(const char* family, std::size_t n) { return std::string(family) + "(n=" + std::to_string(n) + ")"; }

RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

RatMatrix hex_gram() { return RatMatrix{{1, Rational(1, 2)}, {Rational(1, 2), 1}}; }

RatMatrix staircase_gram(std::size_t n) {
    RatMatrix g(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        g(k, k) = 1;
        for (std::size_t i = 0; i < k; ++i) {
            Rational s = g(0, i);
            for (std::size_t j = 1; j < k; ++j) s -= g(j, i);
            g(i, k) = s * Rational(1, 2);
            g(k, i) = g(i, k);
        }
    }
    return g;
}

}  // namespace

Lattice integer_lattice(std::size_t n) {
    if (n < 1) throw Error(Errc::InvalidArgument, "Z^n needs n >= 1");
    return Lattice::from_gram("Z" + std::to_string(n), RatMatrix::identity(n), param_str("z", n));
}

Lattice hexagonal() { return Lattice::from_gram("hex", hex_gram(), "hex()"); }

Lattice lnm(std::size_t n, std::size_t m) {
    if (n < 1 || 2 * m > n)
        throw Error(Errc::InvalidArgument, "lnm needs n >= 1 and 0 <= m <= n/2");
    RatMatrix g = RatMatrix::identity(n);
    for (std::size_t b = 0; b < m; ++b) {
        g(2 * b, 2 * b + 1) = Rational(1, 2);
        g(2 * b + 1, 2 * b) = Rational(1, 2);
    }
    const std::string tag = std::to_string(n) + "," + std::to_string(m);
    return Lattice::from_gram("L_{" + tag + "}", g, "lnm(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")");
}

Lattice staircase(std::size_t n) {
    if (n < 2) throw Error(Errc::InvalidArgument, "staircase needs n >= 2");
    return Lattice::from_gram("staircase" + std::to_string(n), staircase_gram(n), param_str("staircase", n));
}

static std::size_t hybrid_max_m(std::size_t n) { return n % 2 == 0 ? (n - 2) / 2 : (n - 1) / 2; }

Lattice hybrid(std::size_t n, std::size_t m) {
    if (n < 3 || m < 1 || m > hybrid_max_m(n))
        throw Error(Errc::InvalidArgument, "hybrid(" + std::to_string(n) + "," + std::to_string(m) +
                                               ") outside 1 <= m <= " + std::to_string(n < 3 ? 0 : hybrid_max_m(n)));
    const std::size_t t = (n - 1) / 2 - m;
    const std::size_t d = n - 2 * t;
    RatMatrix g = staircase_gram(d);
    for (std::size_t i = 0; i < t; ++i) g = block_diag(g, hex_gram());
    const std::string tag = std::to_string(n) + "," + std::to_string(m);
    return Lattice::from_gram("hybrid_{" + tag + "}", g,
                              "hybrid(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                                  ") = staircase(" + std::to_string(d) + ") + A2^" + std::to_string(t));
}

std::size_t hybrid_kissing_number(std::size_t n, std::size_t m) {
    return n % 2 == 0 ? 3 * n + 2 * m : 3 * n - 1 + 2 * m;
}

Lattice k3_prime() {
    const Rational h(1, 2);
    RatMatrix g{{1, -h, -h}, {-h, 1, Rational(1, 4)}, {-h, Rational(1, 4), 1}};
    return Lattice::from_gram("K3prime", g, "k3prime()");
}

Lattice an_root(std::size_t n) {
    if (n < 2) throw Error(Errc::InvalidArgument, "A_n needs n >= 2");
    RatMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        g(i, i) = 2;
        if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = -1;
    }
    return Lattice::from_gram("A" + std::to_string(n), g, param_str("an", n));
}

Lattice an_dual_frame(std::size_t n) {
    if (n < 2) throw Error(Errc::InvalidArgument, "A_n^* needs n >= 2");
    RatMatrix g(n, n);
    const Rational off(-1, static_cast<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = (i == j) ? Rational(1) : off;
    return Lattice::from_gram("A" + std::to_string(n) + "star", g, param_str("anstar", n));
}

Lattice coxeter_barnes(std::size_t n, std::size_t r) {
    if (n < 7 || r <= 1 || r >= n + 1 || (n + 1) % r != 0)
        throw Error(Errc::InvalidArgument, "coxeter-barnes needs n >= 7 and r a divisor of n+1 with 1 < r < n+1");
    const long nn = static_cast<long>(n), rr = static_cast<long>(r);
    RatMatrix g(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) g(i, j) = (i == j) ? 2 : 1;
    // (e_1 - e_i, v) = (n + 1)/r and (v, v) = (n^2 + n)/r^2
    for (std::size_t i = 0; i + 1 < n; ++i) g(i, n - 1) = g(n - 1, i) = Rational(nn + 1, rr);
    g(n - 1, n - 1) = Rational(nn * nn + nn, rr * rr);
    return Lattice::from_gram("A" + std::to_string(n) + "^" + std::to_string(r), g,
                              "coxeter-barnes(n=" + std::to_string(n) + ",r=" + std::to_string(r) + ")");
}

bool is_squarefree(long long d) {
    if (d < 1) return false;
    for (long long f = 2; f * f <= d; ++f)
        if (d % (f * f) == 0) return false;
    return true;
}

bool planar_q_bound_holds(const Integer& q, const Rational& epsilon, long long d) {
    const Rational inv = Rational(1) / epsilon;
    const Rational k = Rational(2 * d) / (Rational(1) - epsilon);
    // q <= k (inv + 2 sqrt(inv - 1))  <=>  q/k - inv <= 2 sqrt(inv - 1)
    const Rational lhs = Rational(q) / k - inv;
    if (lhs.sign() <= 0) return true;
    return lhs * lhs <= Rational(4) * (inv - Rational(1));
}

namespace {

struct PlanarCandidate {
    Integer p, q, r;
};

// D n^2 < m^2, gcd(m, n) = 1 and p/q < eps.
std::optional<PlanarCandidate> try_pair(long long m, long long n, long long d, const Rational& epsilon) {
    if (m <= 0 || n <= 0 || std::gcd(m, n) != 1) return std::nullopt;
    const Integer big_m(static_cast<long>(m)), big_n(static_cast<long>(n));
    const Integer mm = big_m * big_m;
    const Integer dn = Integer(static_cast<long>(d)) * big_n * big_n;
    if (mm <= dn) return std::nullopt;
    PlanarCandidate c{mm - dn, mm + dn, 2 * big_m * big_n};
    if (!(Rational(c.p, c.q) < epsilon)) return std::nullopt;
    return c;
}

}  // namespace

PlanarWRResult planar_wr(const Rational& epsilon, long long d, long long search_ceiling) {
    if (epsilon.sign() <= 0 || epsilon > Rational(1, 2))
        throw Error(Errc::InvalidArgument, "planar needs 0 < epsilon <= 1/2");
    if (!is_squarefree(d)) throw Error(Errc::InvalidArgument, "planar needs a squarefree D >= 1");

    const Rational inv = Rational(1) / epsilon;
    long long m = int_sqrt_floor(Rational(d) * (inv + Rational(1))).get_si();
    long long n = int_sqrt_floor(inv - Rational(1)).get_si() + 1;
    bool recipe = true;
    auto found = try_pair(m, n, d, epsilon);

    if (!found) {
        recipe = false;
        // p/q < eps  <=>  m^2 (1 - eps) < D n^2 (1 + eps)
        const Rational ratio = (Rational(1) + epsilon) / (Rational(1) - epsilon);
        for (long long nn = 1; nn <= search_ceiling && !found; ++nn) {
            const Rational dn2 = Rational(d) * Rational(nn) * Rational(nn);
            const Rational upper = dn2 * ratio;
            for (long long mm = int_sqrt_floor(dn2).get_si() + 1; Rational(mm) * Rational(mm) < upper; ++mm) {
                if ((found = try_pair(mm, nn, d, epsilon))) {
                    m = mm;
                    n = nn;
                    break;
                }
            }
        }
        if (!found)
            throw Error(Errc::SearchExhausted,
                        "no (m, n) with n <= " + std::to_string(search_ceiling) + " for epsilon " + epsilon.str());
    }

    RatMatrix g{{Rational(found->q), Rational(found->p)}, {Rational(found->p), Rational(found->q)}};
    const double e = epsilon.to_double();
    const double bound = 2.0 * static_cast<double>(d) / (1.0 - e) * (1.0 / e + 2.0 * std::sqrt(1.0 / e - 1.0));
    return PlanarWRResult{
        epsilon,
        d,
        m,
        n,
        found->p,
        found->q,
        found->r,
        Lattice::from_gram("planar_" + found->p.get_str() + "_" + found->q.get_str(), g,
                           "planar(epsilon=" + epsilon.str() + ",D=" + std::to_string(d) + ")"),
        bound,
        planar_q_bound_holds(found->q, epsilon, d),
        recipe,
    };
}

Lattice construct_family(const std::string& family, std::optional<std::size_t> n, std::optional<std::size_t> m,
                         std::optional<std::size_t> r) {
    auto need = [&](const std::optional<std::size_t>& v, const char* flag) {
        if (!v) throw Error(Errc::InvalidArgument, "family '" + family + "' needs " + flag);
        return *v;
    };
    if (family == "z") return integer_lattice(need(n, "n"));
    if (family == "hex") return hexagonal();
    if (family == "lnm") return lnm(need(n, "n"), need(m, "m"));
    if (family == "staircase") return staircase(need(n, "n"));
    if (family == "hybrid") return hybrid(need(n, "n"), need(m, "m"));
    if (family == "k3prime") return k3_prime();
    if (family == "an") return an_root(need(n, "n"));
    if (family == "anstar") return an_dual_frame(need(n, "n"));
    if (family == "coxeter-barnes") return coxeter_barnes(need(n, "n"), need(r, "r"));
    throw Error(Errc::InvalidArgument, "unknown family '" + family + "'");
}

std::vector<std::string> family_names() {
    return {"z", "hex", "lnm", "staircase", "hybrid", "k3prime", "an", "anstar", "coxeter-barnes"};
}

}  // namespace nolat

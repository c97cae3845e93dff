#pragma once

#include "nolat/lattice.hpp"

#include <optional>
#include <string>

namespace nolat {

/// Z^n, identity Gram. n >= 1.
Lattice integer_lattice(std::size_t n);

/// A_2 with unit minimal vectors: [[1, 1/2], [1/2, 1]].
Lattice hexagonal();

/// m hexagonal blocks followed by Z^{n-2m}. Requires 0 <= 2m <= n.
Lattice lnm(std::size_t n, std::size_t m);

/// Unit basis where each b_k projects onto the previous span as
/// (1/2)(b_1 - b_2 - ... - b_{k-1}), a unit vector. In Gram terms, for i < k:
///     g_ik = (1/2) (g_1i - sum_{j=2}^{k-1} g_ji).
/// Requires n >= 2.
Lattice staircase(std::size_t n);

/// staircase(d) + A_2^t with t = floor((n-1)/2) - m, d = n - 2t.
/// Requires n >= 3 and 1 <= m <= floor((n-1)/2) (n odd) or (n-2)/2 (n even).
Lattice hybrid(std::size_t n, std::size_t m);

/// Predicted |S(hybrid(n, m))|: 3n + 2m for even n, 3n - 1 + 2m for odd n.
std::size_t hybrid_kissing_number(std::size_t n, std::size_t m);

/// Unit basis (1,0,0), (-1/2, sqrt3/2, 0), (-1/2, 0, sqrt3/2).
Lattice k3_prime();

/// A_n root lattice with basis e_i - e_{i+1}: tridiagonal 2 / -1. n >= 2.
Lattice an_root(std::size_t n);

/// Frame lattice for A_n^*: unit diagonal, every off-diagonal -1/n. n >= 2.
Lattice an_dual_frame(std::size_t n);

/// Coxeter-Barnes A_n^r in the hyperplane sum x_i = 0 of R^{n+1}, basis
/// e_1 - e_2, ..., e_1 - e_n, (1/r)(n e_1 - e_2 - ... - e_{n+1}).
/// Requires n >= 7, r | n+1 and 1 < r < n+1.
Lattice coxeter_barnes(std::size_t n, std::size_t r);

/// Integral planar lattice with Gram [[q, p], [p, q]], p^2 + r^2 D = q^2.
struct PlanarWRResult {
    Rational epsilon;
    long long d = 0;
    long long m = 0, n = 0;
    Integer p, q, r;
    Lattice lattice;
    /// 2D/(1-eps) * (1/eps + 2 sqrt(1/eps - 1)), for display only.
    double q_bound = 0.0;
    /// q <= q_bound, decided exactly.
    bool bound_holds = false;
    /// true when m = floor(sqrt(D(1/eps+1))), n = floor(sqrt(1/eps-1)) + 1 passed validation.
    bool recipe_used = false;
};

/// Requires 0 < eps <= 1/2 and squarefree D >= 1. Tries the closed-form
/// (m, n) first, then scans n' = 1, 2, ... for m' with
/// D n'^2 < m'^2 and p/q < eps, gcd(m', n') = 1. Throws SearchExhausted
/// past n' = search_ceiling.
PlanarWRResult planar_wr(const Rational& epsilon, long long d, long long search_ceiling = 1000000);

/// Exact test of q <= 2D/(1-eps) * (1/eps + 2 sqrt(1/eps - 1)).
bool planar_q_bound_holds(const Integer& q, const Rational& epsilon, long long d);

bool is_squarefree(long long d);

/// Family by name: z, hex, lnm, staircase, hybrid, k3prime, an, anstar,
/// coxeter-barnes. Throws InvalidArgument for an unknown name or a missing parameter.
Lattice construct_family(const std::string& family, std::optional<std::size_t> n = {},
                         std::optional<std::size_t> m = {}, std::optional<std::size_t> r = {});

std::vector<std::string> family_names();

}  // namespace nolat

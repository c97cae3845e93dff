#include "nolat/verify.hpp"

#include "nolat/constructions.hpp"
#include "nolat/error.hpp"
#include "nolat/eutaxy.hpp"
#include "nolat/invariants.hpp"
#include "nolat/ortho.hpp"
#include "nolat/perturbation.hpp"
#include "nolat/svp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>

namespace nolat {

namespace {

struct Outcome {
    bool pass = true;
    std::string details;
};

// Collects failures; a check passes iff nothing was recorded.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        ++count_;
        if (!ok && failures_.size() < 8) failures_.push_back(what);
        if (!ok) ++failed_;
    }
    Outcome finish() const {
        Outcome o;
        o.pass = failed_ == 0;
        std::ostringstream s;
        if (o.pass) {
            s << count_ << " assertions hold";
        } else {
            s << failed_ << " of " << count_ << " assertions failed: ";
            for (std::size_t i = 0; i < failures_.size(); ++i) s << (i ? "; " : "") << failures_[i];
        }
        o.details = s.str();
        return o;
    }

private:
    std::size_t count_ = 0, failed_ = 0;
    std::vector<std::string> failures_;
};

std::vector<Lattice> w_families(std::size_t max_n) {
    std::vector<Lattice> out;
    for (std::size_t n = 2; n <= max_n; ++n) {
        for (std::size_t m = 0; 2 * m <= n; ++m) out.push_back(lnm(n, m));
        out.push_back(staircase(n));
        if (n >= 3)
            for (std::size_t m = 1; m <= (n % 2 == 0 ? (n - 2) / 2 : (n - 1) / 2); ++m) out.push_back(hybrid(n, m));
    }
    if (max_n >= 3) out.push_back(k3_prime());
    return out;
}

std::string count_mismatch(const Lattice& l, std::size_t got, std::size_t want) {
    return l.name() + ": |S| = " + std::to_string(got) + ", expected " + std::to_string(want);
}

Outcome lnm_counts(std::size_t max_n) {
    Tally t;
    for (std::size_t n = 2; n <= max_n; ++n)
        for (std::size_t m = 0; 2 * m <= n; ++m) {
            const auto l = lnm(n, m);
            const auto k = minimal_vectors(l).kissing_number();
            t.expect(k == 2 * (n + m), count_mismatch(l, k, 2 * (n + m)));
        }
    return t.finish();
}

Outcome staircase_counts(std::size_t max_n) {
    Tally t;
    for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 7); ++n) {
        const auto l = staircase(n);
        const auto k = minimal_vectors(l).kissing_number();
        t.expect(k == 4 * n - 2, count_mismatch(l, k, 4 * n - 2));
    }
    return t.finish();
}

Outcome hybrid_counts(std::size_t max_n) {
    Tally t;
    for (std::size_t n = 3; n <= max_n; ++n)
        for (std::size_t m = 1; m <= (n % 2 == 0 ? (n - 2) / 2 : (n - 1) / 2); ++m) {
            const auto l = hybrid(n, m);
            const auto k = minimal_vectors(l).kissing_number();
            t.expect(k == hybrid_kissing_number(n, m), count_mismatch(l, k, hybrid_kissing_number(n, m)));
        }
    return t.finish();
}

Outcome even_count_coverage(std::size_t max_n) {
    Tally t;
    for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 7); ++n) {
        std::set<std::size_t> seen;
        for (const auto& l : w_families(n))
            if (l.rank() == n && l.name() != "K3prime")
                seen.insert(minimal_vectors(l).kissing_number());
        std::set<std::size_t> want;
        for (std::size_t k = 2 * n; k <= 4 * n - 2; k += 2) want.insert(k);
        t.expect(seen == want, "n = " + std::to_string(n) + ": achieved counts differ from the even range [2n, 4n-2]");
    }
    return t.finish();
}

Outcome staircase_printed_basis() {
    Tally t;
    const double s3 = std::sqrt(3.0);
    FloatBasis b{4, {{1, 0, 0, 0}, {0.5, s3 / 2, 0, 0}, {0.25, -s3 / 4, s3 / 2, 0}, {0.125, -s3 / 8, -s3 / 4, s3 / 2}}};
    const auto from_basis = lattice_from_float_basis("L4", b, 64);
    t.expect(from_basis.gram() == staircase(4).gram(), "staircase(4) Gram differs from the printed basis");
    FloatBasis b5{5,
                  {{1, 0, 0, 0, 0},
                   {0.5, s3 / 2, 0, 0, 0},
                   {0.25, -s3 / 4, s3 / 2, 0, 0},
                   {0.125, -s3 / 8, -s3 / 4, s3 / 2, 0},
                   {0, 0, 0, 0, 1}}};
    const auto l5 = lattice_from_float_basis("L5", b5, 64);
    t.expect(minimal_vectors(l5).kissing_number() == 16, "printed 5-dimensional example does not have 16 minimal vectors");
    t.expect(l5.gram() == direct_sum(staircase(4), integer_lattice(1)).gram(), "5-dimensional example is not staircase(4) + Z");
    for (std::size_t k = 1; k <= 7; ++k) {
        const auto l = staircase(7);
        IntVector u(7, 0);
        u[0] = 1;
        for (std::size_t j = 1; j < k; ++j) u[j] = -1;
        t.expect(l.norm_sq(u) == Rational(1), "b1 - b2 - ... - b" + std::to_string(k) + " is not a unit vector");
    }
    return t.finish();
}

Outcome k3_prime_facts() {
    Tally t;
    const auto l = k3_prime();
    const auto mv = minimal_vectors(l);
    t.expect(mv.kissing_number() == 10, "K3' has " + std::to_string(mv.kissing_number()) + " minimal vectors");
    t.expect(abs(l.g(0, 1)) == Rational(1, 2) && abs(l.g(0, 2)) == Rational(1, 2) && abs(l.g(1, 2)) == Rational(1, 4),
             "K3' basis cosines");
    const auto v = is_theta_orthogonal(l);
    t.expect(v.weakly && !v.strictly, "K3' should be weakly but not strictly nearly orthogonal");
    const auto e = eutaxy_classify(l, mv);
    t.expect(e.eutaxy_class == EutaxyClass::Eutactic, "K3' eutaxy class is " + std::string(eutaxy_class_name(e.eutaxy_class)));
    t.expect(!is_perfect(l, mv), "K3' should not be perfect");
    return t.finish();
}

Outcome anstar_counts(std::size_t max_n) {
    Tally t;
    for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 7); ++n) {
        const auto l = an_dual_frame(n);
        const auto k = minimal_vectors(l).kissing_number();
        t.expect(k == 2 * n + 2, count_mismatch(l, k, 2 * n + 2));
    }
    return t.finish();
}

Outcome families_well_rounded(std::size_t max_n) {
    Tally t;
    for (const auto& l : w_families(max_n)) t.expect(is_well_rounded(l), l.name() + " is not WR");
    for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 7); ++n) {
        t.expect(is_well_rounded(an_root(n)), "A" + std::to_string(n) + " is not WR");
        t.expect(is_well_rounded(an_dual_frame(n)), "A" + std::to_string(n) + "* is not WR");
    }
    return t.finish();
}

const std::vector<std::pair<Rational, long long>>& planar_cases() {
    static const std::vector<std::pair<Rational, long long>> cases{
        {Rational(1, 10), 2}, {Rational(1, 20), 3}, {Rational(1, 100), 2}, {Rational(1, 2), 1}, {Rational(2, 17), 7}};
    return cases;
}

Outcome planar_family() {
    Tally t;
    for (const auto& [eps, d] : planar_cases()) {
        const auto r = planar_wr(eps, d);
        const std::string tag = "(eps=" + eps.str() + ", D=" + std::to_string(d) + ")";
        const Integer dd(static_cast<long>(d));
        t.expect(r.p * r.p + r.r * r.r * dd == r.q * r.q, tag + " p^2 + r^2 D != q^2");
        const auto mv = minimal_vectors(r.lattice);
        t.expect(mv.norm_sq == Rational(r.q), tag + " minimal norm is not q");
        t.expect(is_well_rounded(mv, 2), tag + " not WR");
        const auto c = coherence(r.lattice, mv).value;
        t.expect(c == Rational(r.p, r.q) && c < eps, tag + " coherence " + c.str() + " is not p/q < eps");
        if (r.recipe_used) t.expect(r.bound_holds, tag + " q bound fails on the closed-form path");
    }
    return t.finish();
}

Outcome upper_bounds(std::size_t max_n) {
    Tally t;
    for (const auto& l : w_families(std::min<std::size_t>(max_n, 7))) {
        const std::size_t n = l.rank();
        const auto k = minimal_vectors(l).kissing_number();
        t.expect(k <= 4 * n - 2, l.name() + " exceeds 4n-2");
        if (is_theta_orthogonal(l).strictly) t.expect(k <= 3 * n, l.name() + " is certified yet exceeds 3n");
    }
    return t.finish();
}

Outcome min_basis(std::size_t max_n) {
    Tally t;
    for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 6); ++n)
        for (std::size_t m = 0; 2 * m <= n; ++m) {
            const auto l = lnm(n, m);
            const auto pairs = minimal_vectors(l).pairs;
            const std::size_t k = pairs.size();
            std::vector<std::size_t> pick(n);
            for (std::size_t i = 0; i < n; ++i) pick[i] = i;
            while (true) {
                std::vector<IntVector> rows;
                for (auto i : pick) rows.push_back(pairs[i]);
                const Integer det = int_det(rows);
                if (det != 0) t.expect(det == 1 || det == -1, l.name() + ": independent minimal vectors with det " + det.get_str());
                std::size_t i = n;
                while (i > 0 && pick[i - 1] == k - n + (i - 1)) --i;
                if (i == 0) break;
                ++pick[i - 1];
                for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
    return t.finish();
}

Outcome no_perfect(std::size_t max_n) {
    Tally t;
    for (const auto& l : w_families(max_n)) {
        if (l.rank() < 3) continue;
        const auto mv = minimal_vectors(l);
        const bool p = is_perfect(l, mv);
        t.expect(!p, l.name() + " is perfect");
        const std::size_t n = l.rank();
        if (p) t.expect(mv.pairs.size() >= n * (n + 1) / 2, l.name() + " perfect with too few pairs");
    }
    return t.finish();
}

Outcome density_law() {
    Tally t;
    const std::vector<Rational> grid{0, Rational(1, 8), Rational(1, 4), Rational(1, 3), Rational(1, 2)};
    const Rational one(1);
    for (const auto& c : grid)
        for (const auto& c2 : grid) {
            const auto base = Lattice::from_gram("planar", RatMatrix{{1, c}, {c, 1}});
            const auto o = perturb_2d(base, c2);
            const Rational law = (one - c * c) / (one - c2 * c2);
            const std::string tag = c.str() + " -> " + c2.str();
            t.expect(o.density_ratio_sq == law, "2d " + tag + ": ratio " + o.density_ratio_sq.str());
            if (c2 > c) t.expect(o.density_ratio_sq > one, "2d " + tag + " did not increase density");
            if (c2 < c) t.expect(o.density_ratio_sq < one, "2d " + tag + " did not decrease density");

            RatMatrix g = lnm(4, 2).gram();
            g(0, 1) = g(1, 0) = c;
            const auto blocky = Lattice::from_gram("blocks", g);
            const auto ob = perturb_block(blocky, 0, c2);
            t.expect(ob.density_ratio_sq == law, "block " + tag + ": ratio " + ob.density_ratio_sq.str());
            t.expect(ob.still_nearly_orthogonal, "block " + tag + " lost near-orthogonality");
        }
    return t.finish();
}

Outcome mu_below_half(std::size_t max_n) {
    Tally t;
    for (const auto& l : w_families(std::min<std::size_t>(max_n, 5))) {
        if (l.rank() < 3 || !is_theta_orthogonal(l).strictly) continue;
        // mu is a minimum over all basis pairs, so it does not depend on the ordering
        t.expect(mu_nu(l).mu.cos_sq < Rational(1, 4), l.name() + " has mu = 1/2");
    }
    return t.finish();
}

Outcome zero_coherence_only_integer(std::size_t max_n) {
    Tally t;
    std::vector<Lattice> tested;
    for (const auto& l : w_families(max_n)) tested.push_back(l);
    for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 7); ++n) {
        tested.push_back(an_root(n));
        tested.push_back(an_dual_frame(n));
    }
    for (const auto& l : tested) {
        const bool is_zn = l.gram() == RatMatrix::identity(l.rank());
        const bool zero = coherence(l).value.is_zero();
        t.expect(zero == is_zn, l.name() + (zero ? " has coherence 0" : " is Z^n but coherence != 0"));
    }
    return t.finish();
}

Outcome prefix_well_rounded(std::size_t max_n) {
    Tally t;
    for (const auto& l : w_families(std::min<std::size_t>(max_n, 7))) {
        const auto v = is_theta_orthogonal(l);
        if (!v.witness) {
            t.expect(false, l.name() + " has no weakly nearly orthogonal ordering");
            continue;
        }
        const auto ordered = reorder_basis(l, *v.witness);
        for (std::size_t k = 1; k <= ordered.rank(); ++k) {
            std::vector<std::size_t> idx(k);
            for (std::size_t i = 0; i < k; ++i) idx[i] = i;
            t.expect(is_well_rounded(principal_sublattice(ordered, idx)),
                     l.name() + " prefix " + std::to_string(k) + " is not WR");
        }
    }
    return t.finish();
}

Outcome certified_basis_minimal(std::size_t max_n) {
    Tally t;
    for (const auto& family : w_families(std::min<std::size_t>(max_n, 7))) {
        if (!is_theta_orthogonal(family).strictly) continue;
        const auto l = normalize_min_norm(family);
        for (std::size_t i = 0; i < l.rank(); ++i)
            t.expect(l.g(i, i) == Rational(1), l.name() + " basis vector " + std::to_string(i + 1) + " is not minimal");
    }
    return t.finish();
}

Outcome staircase3_violation() {
    Tally t;
    const auto l = staircase(3);
    t.expect(cos_sq_angle_to_span(l, 0, {1, 2}) == Rational(2, 5), "cos^2 of b1 against span{b2, b3} is not 2/5");
    const auto p = angle_profile(l, {1, 2, 0});
    t.expect(p.cos_sq == std::vector<Rational>{Rational(1, 16), Rational(2, 5)}, "profile of ordering (2,3,1)");
    const auto v = is_theta_orthogonal(l);
    t.expect(v.weakly && !v.strictly, "staircase(3) verdict");
    t.expect(v.violation && v.violation->cos_sq == Rational(2, 5), "reported violation does not have cos^2 2/5");
    t.expect(!is_weakly_theta_orthogonal(l, {1, 2, 0}), "ordering (2,3,1) passes");
    return t.finish();
}

// Sum x x^T over minimal pairs is (|S|/2n) |L|^2 I on a strongly eutactic
// lattice, so an orthogonal sum stays strongly eutactic only when both
// summands have the same |S|/n; Z^k + A_2 is eutactic but not strongly.
Outcome eutaxy_direct_sums() {
    Tally t;
    std::vector<Lattice> atoms{integer_lattice(1), integer_lattice(2), integer_lattice(3), hexagonal()};
    for (const auto& a : atoms)
        for (const auto& b : atoms) {
            const auto s = direct_sum(a, b);
            const auto mv = minimal_vectors(s);
            const auto e = eutaxy_classify(s, mv);
            const bool same_ratio = (a.name() == "hex") == (b.name() == "hex");
            const auto want = same_ratio ? EutaxyClass::StronglyEutactic : EutaxyClass::Eutactic;
            t.expect(e.eutaxy_class == want, a.name() + " + " + b.name() + " is " + std::string(eutaxy_class_name(e.eutaxy_class)));
            t.expect(e.coefficients && eutaxy_identity_holds(s, mv, *e.coefficients),
                     a.name() + " + " + b.name() + " coefficients fail the identity");
        }
    return t.finish();
}

Outcome coherence_values(std::size_t max_n) {
    Tally t;
    for (std::size_t n = 2; n <= max_n; ++n)
        t.expect(coherence(integer_lattice(n)).value.is_zero(), "C(Z" + std::to_string(n) + ") != 0");
    for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 7); ++n) {
        const auto c = coherence(an_dual_frame(n)).value;
        t.expect(c == Rational(1, static_cast<long>(n)), "C(A" + std::to_string(n) + "*) = " + c.str());
    }
    for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 6); ++n)
        t.expect(coherence(an_root(n)).value == Rational(1, 2), "C(A" + std::to_string(n) + ") != 1/2");
    for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 7); ++n)
        for (std::size_t m = 0; 2 * m <= n; ++m) {
            const auto l = lnm(n, m);
            const auto mv = minimal_vectors(l);
            const bool half = coherence(l, mv).value == Rational(1, 2);
            t.expect(half == (m >= 1), l.name() + " coherence/m mismatch");
            t.expect(half == (mv.kissing_number() > 2 * n), l.name() + " coherence/|S| mismatch");
        }
    return t.finish();
}

Outcome cn_checks() {
    Tally t;
    t.expect(cn_test(Rational(1, 2), 2) && !cn_test(Rational(1, 2) + Rational(1, 1000000), 2), "c_2 is not exactly 1/2");
    t.expect(std::abs(cn_value(2) - 0.5) < 1e-15, "cn_value(2)");
    const double c1000 = cn_value(1000);
    t.expect(c1000 > 0.000997 && c1000 < 0.000999, "cn_value(1000) outside (0.000997, 0.000999)");
    for (int n = 3; n <= 10; ++n) t.expect(!cn_test(Rational(1, n), n), "cn_test(1/n, n) holds for n = " + std::to_string(n));
    // n c_n dips from 1 at n = 2 to its minimum at n = 5, then climbs back toward 1
    double prev = 0.0;
    for (int n : {5, 6, 10, 100, 1000, 10000, 100000, 1000000}) {
        const double v = cn_value(n) * n;
        t.expect(v < 1.0 && v > prev, "n c_n not increasing below 1 at n = " + std::to_string(n));
        prev = v;
    }
    return t.finish();
}

Outcome cn_random_certify() {
    Tally t;
    std::mt19937_64 rng(20240917);
    int made = 0;
    while (made < 200) {
        const int n = 3 + made % 3;
        // largest k with k/1000 <= c_n
        long k = 0;
        while (cn_test(Rational(k + 1, 1000), n)) ++k;
        std::uniform_int_distribution<long> pick(-k, k);
        RatMatrix g = RatMatrix::identity(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) g(i, j) = g(j, i) = Rational(pick(rng), 1000);
        std::optional<Lattice> l;
        try {
            l = Lattice::from_gram("random", g);
        } catch (const Error&) {
            continue;
        }
        ++made;
        t.expect(is_theta_orthogonal(*l).strictly, "a sub-c_n Gram of rank " + std::to_string(n) + " failed to certify");
    }
    return t.finish();
}

Outcome eutaxy_examples() {
    Tally t;
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto e = eutaxy_classify(integer_lattice(n));
        t.expect(e.eutaxy_class == EutaxyClass::StronglyEutactic && e.coefficients &&
                     std::all_of(e.coefficients->begin(), e.coefficients->end(), [](const Rational& c) { return c == Rational(1); }),
                 "Z" + std::to_string(n) + " coefficients are not all 1");
    }
    const auto h = eutaxy_classify(hexagonal());
    t.expect(h.eutaxy_class == EutaxyClass::StronglyEutactic && h.coefficients &&
                 std::all_of(h.coefficients->begin(), h.coefficients->end(), [](const Rational& c) { return c == Rational(2, 3); }),
             "hexagonal coefficients are not all 2/3");
    t.expect(is_perfect(hexagonal()), "hexagonal is not perfect");
    return t.finish();
}

Outcome coxeter_barnes_facts() {
    Tally t;
    const auto l = coxeter_barnes(7, 4);
    const auto mv = minimal_vectors(l);
    t.expect(is_perfect(l, mv), "A7^4 is not perfect");
    const auto e = eutaxy_classify(l, mv);
    t.expect(e.eutaxy_class == EutaxyClass::StronglyEutactic, "A7^4 is " + std::string(eutaxy_class_name(e.eutaxy_class)));
    const auto c = coherence(l, mv).value;
    t.expect(c < Rational(1, 2), "C(A7^4) = " + c.str());
    bool rejected = false;
    try {
        coxeter_barnes(7, 3);
    } catch (const Error&) {
        rejected = true;
    }
    t.expect(rejected, "coxeter_barnes(7, 3) was accepted");
    return t.finish();
}

Outcome non_membership_examples() {
    Tally t;
    MembershipOptions opts;
    const auto a3 = membership_report(an_root(3), opts);
    t.expect(a3.kissing_number == 12 && a3.in_w == false, "A3 should have 12 minimal vectors and lie outside W_3");
    const auto a3s = membership_report(an_dual_frame(3), opts);
    t.expect(a3s.in_w == false, "A3* frame should have no weakly nearly orthogonal minimal basis");
    const auto hex = membership_report(hexagonal(), opts);
    t.expect(hex.in_w_star == true, "hexagonal should be nearly orthogonal");
    return t.finish();
}

struct CheckDef {
    std::string suite;
    std::string id;
    std::string anchor;
    std::function<Outcome(std::size_t)> run;
};

std::vector<CheckDef> registry() {
    auto fixed = [](Outcome (*f)()) { return [f](std::size_t) { return f(); }; };
    return {
        {"constructions", "constructions.anstar_counts", "A_n^* frame lattice has 2n+2 minimal vectors", anstar_counts},
        {"constructions", "constructions.even_count_coverage", "every even count in [2n, 4n-2] is realized by the families", even_count_coverage},
        {"constructions", "constructions.families_well_rounded", "every construction family is well-rounded", families_well_rounded},
        {"constructions", "constructions.hybrid_counts", "hybrid family has 3n+2m (n even) or 3n-1+2m (n odd) minimal vectors", hybrid_counts},
        {"constructions", "constructions.k3_prime", "K3' has 10 minimal vectors, is eutactic but neither strongly eutactic nor perfect, weakly but not strictly nearly orthogonal", fixed(k3_prime_facts)},
        {"constructions", "constructions.lnm_counts", "|S(L_{n,m})| = 2(n+m)", lnm_counts},
        {"constructions", "constructions.planar_family", "integral WR planar lattice with p^2 + r^2 D = q^2 and coherence p/q < eps", fixed(planar_family)},
        {"constructions", "constructions.staircase_counts", "staircase lattice has 4n-2 minimal vectors", staircase_counts},
        {"constructions", "constructions.staircase_printed_basis", "staircase Gram matches the explicit 4- and 5-dimensional bases; b1 - b2 - ... - bk is a unit vector", fixed(staircase_printed_basis)},
        {"theorems", "theorems.certified_basis_minimal", "a nearly orthogonal basis of a WR lattice consists of minimal vectors", certified_basis_minimal},
        {"theorems", "theorems.density_law", "changing a basis angle scales density^2 by (1 - mu^2)/(1 - mu'^2), monotonically", fixed(density_law)},
        {"theorems", "theorems.eutaxy_direct_sums", "orthogonal sums of strongly eutactic lattices with equal minimum are eutactic, strongly so when |S|/n agrees", fixed(eutaxy_direct_sums)},
        {"theorems", "theorems.kissing_upper_bounds", "|S(L)| <= 4n-2 on W_n and <= 3n on W*_n", upper_bounds},
        {"theorems", "theorems.min_basis", "any n independent minimal vectors of a W*_n lattice form a basis", min_basis},
        {"theorems", "theorems.mu_below_half", "mu(B) < 1/2 for every nearly orthogonal basis when n >= 3", mu_below_half},
        {"theorems", "theorems.no_perfect", "W_n contains no perfect lattices for n >= 3", no_perfect},
        {"theorems", "theorems.non_membership", "A3 and the A3* frame lie outside W_3; the hexagonal lattice lies in W*_2", fixed(non_membership_examples)},
        {"theorems", "theorems.prefix_well_rounded", "prefix sublattices of a weakly nearly orthogonal basis are WR", prefix_well_rounded},
        {"theorems", "theorems.staircase3_violation", "staircase(3) ordering (2,3,1) has cos^2 = 2/5 > 1/4", fixed(staircase3_violation)},
        {"theorems", "theorems.zero_coherence", "C(L) = 0 only for Z^n", zero_coherence_only_integer},
        {"coherence", "coherence.cn_random", "unit Gram with all |g_ij| <= c_n is nearly orthogonal", fixed(cn_random_certify)},
        {"coherence", "coherence.cn_values", "c_2 = 1/2, c_1000 ~ 0.00099801587, c_n < 1/n, n c_n increases to 1 from n = 5", fixed(cn_checks)},
        {"coherence", "coherence.coxeter_barnes", "A7^4 is perfect and strongly eutactic with coherence < 1/2", fixed(coxeter_barnes_facts)},
        {"coherence", "coherence.eutaxy_examples", "Z^n and A_2 are strongly eutactic with coefficients 1 and 2/3; A_2 is perfect", fixed(eutaxy_examples)},
        {"coherence", "coherence.values", "C(Z^n) = 0, C(A_n^*) = 1/n, C(A_n) = 1/2, and on W*_n C = 1/2 iff |S| > 2n", coherence_values},
    };
}

std::string_view status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "unknown";
}

}  // namespace

std::vector<std::string> suite_names() { return {"all", "constructions", "theorems", "coherence"}; }

SuiteReport run_suite(const SuiteOptions& options) {
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), options.suite) == names.end())
        throw Error(Errc::InvalidArgument, "unknown suite '" + options.suite + "'");
    if (options.max_n < 2) throw Error(Errc::InvalidArgument, "max-n must be at least 2");

    std::vector<CheckDef> defs;
    for (auto& d : registry())
        if (options.suite == "all" || d.suite == options.suite) defs.push_back(std::move(d));

    auto run_one = [&](const CheckDef& d) {
        SuiteCheck c{d.id, d.anchor, CheckStatus::Fail, {}};
        try {
            const auto o = d.run(options.max_n);
            c.status = o.pass ? CheckStatus::Pass : CheckStatus::Fail;
            c.details = o.details;
        } catch (const std::exception& e) {
            c.details = std::string("exception: ") + e.what();
        }
        return c;
    };

    SuiteReport report;
    report.suite = options.suite;
    report.max_n = options.max_n;
    const unsigned jobs = std::max(1u, options.jobs);
    for (std::size_t start = 0; start < defs.size(); start += jobs) {
        std::vector<std::future<SuiteCheck>> batch;
        for (std::size_t i = start; i < std::min(defs.size(), start + jobs); ++i)
            batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, run_one, std::cref(defs[i])));
        for (auto& f : batch) report.checks.push_back(f.get());
    }
    std::sort(report.checks.begin(), report.checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (const auto& c : report.checks) {
        if (c.status == CheckStatus::Pass) ++report.passed;
        else if (c.status == CheckStatus::Fail) ++report.failed;
        else ++report.skipped;
    }
    return report;
}

nlohmann::json suite_to_json(const SuiteReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"id", c.id}, {"anchor", c.anchor}, {"status", std::string(status_name(c.status))}, {"details", c.details}});
    return {{"suite", report.suite},
            {"max_n", report.max_n},
            {"checks", checks},
            {"summary", {{"passed", report.passed}, {"failed", report.failed}, {"skipped", report.skipped}}}};
}

}  // namespace nolat

#include "nolat/json_io.hpp"

#include "nolat/error.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace nolat {

Json to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const Error& e) {
            throw Error(Errc::ParseError, e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw Error(Errc::ParseError, "expected a rational string or integer, got " + j.dump());
}

namespace {

Json ordering_json(const std::vector<std::size_t>& ordering) {
    Json out = Json::array();
    for (auto i : ordering) out.push_back(i + 1);
    return out;
}

Json pairs_json(const std::vector<IntVector>& pairs) {
    Json out = Json::array();
    for (const auto& p : pairs) out.push_back(p);
    return out;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json lattice_to_json(const Lattice& lattice, const std::optional<FloatBasis>& basis) {
    Json gram = Json::array();
    for (std::size_t i = 0; i < lattice.rank(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < lattice.rank(); ++j) row.push_back(lattice.g(i, j).str());
        gram.push_back(row);
    }
    Json out{{"name", lattice.name()}, {"rank", lattice.rank()}, {"gram", gram}, {"provenance", lattice.provenance()}};
    if (basis) out["basis"] = basis->columns;
    return out;
}

Lattice lattice_from_json(const Json& j) {
    if (!j.is_object()) throw Error(Errc::ParseError, "lattice JSON must be an object");
    if (!j.contains("gram") || !j["gram"].is_array()) throw Error(Errc::ParseError, "lattice JSON needs a 'gram' array");
    const auto& rows = j["gram"];
    const std::size_t n = rows.size();
    if (n == 0) throw Error(Errc::ParseError, "empty gram");
    if (j.contains("rank") && (!j["rank"].is_number_integer() || j["rank"].get<long long>() != static_cast<long long>(n)))
        throw Error(Errc::ParseError, "'rank' does not match the gram size");
    RatMatrix g(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n) throw Error(Errc::ParseError, "gram must be square");
        for (std::size_t c = 0; c < n; ++c) g(r, c) = rational_from_json(rows[r][c]);
    }
    const std::string name = j.value("name", std::string("lattice"));
    const std::string provenance = j.value("provenance", std::string());
    Lattice lattice = Lattice::from_gram(name, g, provenance);

    if (j.contains("basis") && !j["basis"].is_null()) {
        FloatBasis basis;
        try {
            basis.columns = j["basis"].get<std::vector<std::vector<double>>>();
        } catch (const Json::exception& e) {
            throw Error(Errc::ParseError, std::string("bad basis: ") + e.what());
        }
        if (basis.columns.size() != n) throw Error(Errc::ParseError, "basis must have one vector per rank");
        basis.ambient_dim = basis.columns.front().size();
        for (const auto& col : basis.columns)
            if (col.size() != basis.ambient_dim) throw Error(Errc::ParseError, "basis vectors differ in length");
        const auto fg = float_gram(basis);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (std::abs(fg[r][c] - g(r, c).to_double()) > 1e-9)
                    throw Error(Errc::ParseError, "basis does not reproduce gram entry (" + std::to_string(r + 1) +
                                                      "," + std::to_string(c + 1) + ")");
    }
    return lattice;
}

Json to_json(const MinimalVectorSet& mv) { return Json{{"norm_sq", mv.norm_sq.str()}, {"pairs", pairs_json(mv.pairs)}}; }

Json to_json(const OrthoVerdict& verdict) {
    Json out{{"weakly", verdict.weakly}, {"strictly", verdict.strictly}, {"witness", nullptr}, {"violation", nullptr}};
    if (verdict.witness) out["witness"] = ordering_json(*verdict.witness);
    if (verdict.violation)
        out["violation"] = Json{{"ordering", ordering_json(verdict.violation->ordering)},
                                {"level", verdict.violation->level},
                                {"cos_sq", verdict.violation->cos_sq.str()}};
    return out;
}

Json to_json(const MembershipReport& report) {
    Json out{{"stored", to_json(report.stored)},
             {"searched", report.searched},
             {"search_complete", report.search_complete},
             {"subsets_examined", report.subsets_examined},
             {"bases_examined", report.bases_examined},
             {"best", nullptr},
             {"best_basis", nullptr},
             {"in_w", optional_json(report.in_w)},
             {"in_w_star", optional_json(report.in_w_star)},
             {"kissing_bound_applied", report.kissing_bound_applied}};
    if (report.best) out["best"] = to_json(*report.best);
    if (report.best_basis) out["best_basis"] = pairs_json(*report.best_basis);
    return out;
}

Json to_json(const EutaxyResult& result) {
    Json coeffs = nullptr;
    if (result.coefficients) {
        coeffs = Json::array();
        for (const auto& c : *result.coefficients) coeffs.push_back(c.str());
    }
    return Json{{"class", std::string(eutaxy_class_name(result.eutaxy_class))},
                {"coefficients", coeffs},
                {"solution_space_dim", result.solution_space_dim}};
}

Json to_json(const ClassificationReport& r) {
    Json out{{"name", r.name},
             {"provenance", r.provenance},
             {"rank", r.rank},
             {"gram_det", r.gram_det.str()},
             {"well_rounded", optional_json(r.well_rounded)},
             {"perfect", optional_json(r.perfect)},
             {"errors", r.errors}};
    out["norm_sq"] = r.minimal ? Json(r.minimal->norm_sq.str()) : Json(nullptr);
    out["kissing_number"] = r.minimal ? Json(r.minimal->kissing_number()) : Json(nullptr);
    out["minimal_pairs"] = r.minimal ? pairs_json(r.minimal->pairs) : Json(nullptr);
    out["membership"] = r.membership ? to_json(*r.membership) : Json(nullptr);
    out["in_w"] = r.membership ? optional_json(r.membership->in_w) : Json(nullptr);
    out["in_w_star"] = r.membership ? optional_json(r.membership->in_w_star) : Json(nullptr);
    out["coherence"] = r.coherence ? Json(r.coherence->value.str()) : Json(nullptr);
    out["coherence_pair"] =
        r.coherence ? Json::array({r.coherence->attaining_pair.first, r.coherence->attaining_pair.second})
                    : Json(nullptr);
    out["avg_coherence"] = r.average_coherence ? Json(r.average_coherence->str()) : Json(nullptr);
    out["mu"] = r.mu_nu ? Json(r.mu_nu->mu.str()) : Json(nullptr);
    out["nu"] = r.mu_nu ? Json(r.mu_nu->nu.str()) : Json(nullptr);
    out["delta"] = r.density ? Json(r.density->delta) : Json(nullptr);
    out["delta_sq_exact"] = r.density ? Json(r.density->delta_sq_over_omega_sq.str()) : Json(nullptr);
    out["eutaxy"] = r.eutaxy ? to_json(*r.eutaxy) : Json(nullptr);
    return out;
}

Json to_json(const PlanarWRResult& r) {
    return Json{{"epsilon", r.epsilon.str()},
                {"D", r.d},
                {"m", r.m},
                {"n", r.n},
                {"p", r.p.get_str()},
                {"q", r.q.get_str()},
                {"r", r.r.get_str()},
                {"q_bound", r.q_bound},
                {"bound_holds", r.bound_holds},
                {"paper_recipe_used", r.recipe_used},
                {"lattice", lattice_to_json(r.lattice)}};
}

Json to_json(const PerturbationOutcome& o) {
    return Json{{"mode", std::string(perturb_mode_name(o.mode))},
                {"before", lattice_to_json(o.before)},
                {"after", lattice_to_json(o.after)},
                {"pair", Json::array({o.pair.first + 1, o.pair.second + 1})},
                {"cos_before", o.cos_before.str()},
                {"cos_after", o.cos_after.str()},
                {"density_ratio_sq", o.density_ratio_sq.str()},
                {"predicted_ratio_sq", o.predicted_ratio_sq.str()},
                {"kissing_before", o.kissing_before},
                {"kissing_after", o.kissing_after},
                {"still_nearly_orthogonal", o.still_nearly_orthogonal},
                {"gram_distance", o.gram_distance}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
    out << text;
}

}  // namespace nolat

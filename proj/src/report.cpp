#include "nolat/report.hpp"

#include "nolat/error.hpp"

namespace nolat {

namespace {

template <class F>
void attempt(ClassificationReport& report, const std::string& key, F&& f) {
    try {
        f();
    } catch (const Error& e) {
        report.errors[key] = e.what();
    }
}

}  // namespace

ClassificationReport classification_report(const Lattice& lattice, const ReportOptions& options) {
    ClassificationReport report;
    report.name = lattice.name();
    report.provenance = lattice.provenance();
    report.rank = lattice.rank();
    report.gram_det = lattice.gram_det();

    attempt(report, "minimal_vectors", [&] { report.minimal = minimal_vectors(lattice, options.membership.enumeration); });
    if (lattice.rank() >= 2) attempt(report, "mu_nu", [&] { report.mu_nu = mu_nu(lattice); });
    if (!report.minimal) {
        const std::string why = "minimal vectors unavailable";
        for (const char* key : {"well_rounded", "membership", "coherence", "average_coherence", "density", "eutaxy",
                                "perfect"})
            report.errors[key] = why;
        return report;
    }
    const auto& mv = *report.minimal;
    const std::size_t n = lattice.rank();
    report.well_rounded = is_well_rounded(mv, n);
    report.density = packing_density(lattice, mv.norm_sq);
    attempt(report, "coherence", [&] { report.coherence = coherence(lattice, mv); });
    attempt(report, "average_coherence", [&] { report.average_coherence = average_coherence(lattice, mv); });
    attempt(report, "membership", [&] { report.membership = membership_report(lattice, mv, options.membership); });
    attempt(report, "eutaxy", [&] { report.eutaxy = eutaxy_classify(lattice, mv); });
    attempt(report, "perfect", [&] { report.perfect = is_perfect(lattice, mv); });
    return report;
}

}  // namespace nolat

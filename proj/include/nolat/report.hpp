#pragma once

#include "nolat/eutaxy.hpp"
#include "nolat/invariants.hpp"
#include "nolat/ortho.hpp"

#include <map>
#include <optional>
#include <string>

namespace nolat {

/// Every invariant of one lattice. A field left empty has its reason in
/// `errors` under the same key (a guard tripped, not well-rounded, ...).
struct ClassificationReport {
    std::string name;
    std::string provenance;
    std::size_t rank = 0;
    Rational gram_det;
    std::optional<MinimalVectorSet> minimal;
    std::optional<bool> well_rounded;
    std::optional<MembershipReport> membership;
    std::optional<CoherenceValue> coherence;
    std::optional<Rational> average_coherence;
    std::optional<MuNu> mu_nu;
    std::optional<DensityValue> density;
    std::optional<EutaxyResult> eutaxy;
    std::optional<bool> perfect;
    std::map<std::string, std::string> errors;
};

struct ReportOptions {
    MembershipOptions membership{};
};

ClassificationReport classification_report(const Lattice& lattice, const ReportOptions& options = {});

}  // namespace nolat

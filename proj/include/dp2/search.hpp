#pragma once

#include "dp2/cover.hpp"

namespace dp2 {

/// The curves of degree d with multiplicity >= d-1 at Q, as the nullspace
/// of the Taylor-condition matrix at the centered point. The number of
/// conditions is (d-1)d/2; their independence is verified by rank, not
/// assumed.
struct LinearSystem {
    FieldPtr field = nullptr;
    int d = 0;
    std::vector<TernaryForm> basis;  // deterministic echelon basis
    int dimension = 0;
    int conditions = 0;
    int verified_rank = 0;
};
LinearSystem linear_system(FieldPtr F, int d, const PlanePoint& Q);

struct SearchStats {
    int64_t candidates = 0;
    int64_t rejected_multiplicity = 0;
    int64_t rejected_integral = 0;
    int64_t rejected_ordinary = 0;
    int64_t rejected_contact = 0;
    int64_t rejected_classification = 0;
    int64_t rejected_validation = 0;
};

/// A candidate that survived every hypothesis of the classification,
/// re-verified from scratch through the public construction path.
struct SearchHit {
    TernaryForm h;
    MarkedCurve curve;
    Parametrization theta;
    ContactProfile profile;
    CaseClassification classification;
    std::optional<RationalMapToX> map;           // when lifts were requested
    std::optional<bool> split_square_class;      // split lifts only
};

struct SearchOptions {
    int64_t max_candidates = 1'000'000;
    bool lift = false;
};

struct SearchResult {
    LinearSystem system;
    std::vector<SearchHit> hits;  // canonically sorted
    SearchStats stats;
};

/// Enumerates the projective classes of the linear system (first nonzero
/// coordinate 1), filters cheapest-first (multiplicity, integrality,
/// ordinariness when Q is on the branch locus, even contact, classification)
/// and emits verified hits. Throws SearchSpaceTooLarge past the cap.
SearchResult search(const DelPezzo2& X, const PlanePoint& Q, int d,
                    const SearchOptions& opts = {});

}  // namespace dp2

#pragma once

#include <optional>

#include "dp2/curve.hpp"

namespace dp2 {

/// One Galois orbit class of geometric roots of the pulled-back branch form:
/// all roots of `factor` share the extension degree, the multiplicity, and
/// whether they lie above the marked point.
struct RootOrbitClass {
    BinaryForm factor;  // monic, product of orbit_count irreducibles of degree ext_degree
    int ext_degree = 1;
    int multiplicity = 0;
    bool above_q = false;
    int orbit_count = 0;
    int geometric_points() const { return factor.degree(); }
};

/// Contact data of the marked curve against the branch quartic: the
/// pullback H = branch ∘ theta (degree 4d), its squarefree decomposition,
/// and the parity bookkeeping of the even-contact hypothesis.
struct ContactProfile {
    BinaryForm H;
    FieldElement unit;
    std::vector<std::pair<BinaryForm, int>> decomposition;
    std::vector<RootOrbitClass> branch_points;
    bool q_on_branch = false;
    bool even_everywhere = false;
    int odd_geometric_count = 0;       // r: odd-multiplicity geometric roots
    int above_q_total_multiplicity = 0;
    int d = 0;
};

/// Throws CurveInsideBranch when the curve lies inside the branch locus.
ContactProfile pullback_branch(const DelPezzo2& X, const Parametrization& theta);

struct CaseClassification {
    enum class Kind { SplitCase, ConicCase, NotApplicable };
    Kind kind = Kind::NotApplicable;
    std::string reason;  // set for NotApplicable
    int d = 0;
};

/// Requires an even-everywhere profile (HypothesisViolated otherwise).
/// SplitCase when Q is off the branch locus; ConicCase when Q lies on it,
/// is ordinary, d is 3 or 4 and exactly two geometric branch points are odd.
CaseClassification classify(const DelPezzo2& X, const MarkedCurve& C,
                            const ContactProfile& profile,
                            const std::optional<SurfacePoint>& P = std::nullopt);

/// Genus of the double cover of P^1 ramified at the odd-multiplicity roots:
/// r/2 - 1. Throws SplitCover when r = 0 (use lift_split instead).
int genus_double_cover(const ContactProfile& profile);

/// A nonconstant map P^1 -> X: three plane components of a common degree D
/// and a w-component of degree 2D, satisfying the surface equation
/// identically. ext_degree records the field of definition over X's field.
struct RationalMapToX {
    FieldPtr field = nullptr;
    std::array<BinaryForm, 4> rho;
    int ext_degree = 1;
    const char* path = "direct";  // "split", "conic" or "direct"
};

struct MapVerification {
    bool equation_holds = false;
    bool nonconstant = false;
    BinaryForm residual;
    int component_degree = 0;
    int reduced_degree = 0;
    bool image_on_curve = false;          // when an image curve is supplied
    std::optional<int> image_degree_ratio;
    bool pass() const { return equation_holds && nonconstant; }
};

/// Checks the weighted equation identically, nonconstancy (reduced plane
/// components span dimension >= 2) and, when an image curve is supplied,
/// membership and the degree ratio of the induced cover.
MapVerification verify_map(const DelPezzo2& X, const RationalMapToX& rho,
                           const std::optional<TernaryForm>& image_curve = std::nullopt);
/// Throws EquationFails / ConstantMap on a failing report.
void require_valid(const MapVerification& report);

/// Split case (no ramification, H = c s^2): rho_xyz = theta and
/// rho_w = (sqrt(c) s - f o theta)/2, over F_q when c is a square and over
/// F_{q^2} otherwise. With a rational point above a marked point off the
/// branch locus, c must be a square; violations throw HypothesisViolated.
struct SplitLift {
    RationalMapToX map;
    bool square_class_is_square = false;
};
SplitLift lift_split(const DelPezzo2& X, const Parametrization& theta,
                     const ContactProfile& profile,
                     const std::optional<SurfacePoint>& P = std::nullopt);

/// Conic case (r = 2): writes H = c s^2 r2, solves w'^2 = c r2 over F_q by
/// exhaustive conic point search, parametrizes by lines through that point
/// and composes. Components have degrees (2d, 2d, 2d; 4d).
RationalMapToX lift_conic(const DelPezzo2& X, const Parametrization& theta,
                          const ContactProfile& profile);

}  // namespace dp2

#pragma once

#include <array>

#include "dp2/surface.hpp"

namespace dp2 {

/// Plane curve of degree d >= 2 with a marked point Q of multiplicity
/// exactly d-1. Construction validates: Q on the curve, the multiplicity,
/// geometric integrality (gcd of the two centered parts), and smoothness
/// away from Q. Centered coordinates put Q at (0:0:1), so the equation
/// reads z * a_{d-1}(x, y) + a_d(x, y).
class MarkedCurve {
public:
    MarkedCurve(const TernaryForm& h, const PlanePoint& Q);

    const TernaryForm& h() const { return h_; }
    const PlanePoint& Q() const { return q_; }
    int d() const { return d_; }
    FieldPtr field() const { return h_.field(); }
    /// Matrix sending Q to (0:0:1); the centered equation is
    /// h(centering^{-1} * vars).
    const MatFq& centering() const { return centering_; }
    /// Tangent-cone part a_{d-1} in the centered coordinates.
    const BinaryForm& tangent_part() const { return a_top_; }
    /// Degree-d part a_d in the centered coordinates.
    const BinaryForm& lowest_part() const { return a_d_; }

    /// Tangent cone squarefree over the closure (distinct branches).
    bool is_ordinary() const;

    std::string str() const;

private:
    TernaryForm h_;
    PlanePoint q_;
    int d_;
    MatFq centering_;
    BinaryForm a_top_, a_d_;
};

/// Multiplicity of h at Q (0 when Q is not on the curve).
int multiplicity_at(const TernaryForm& h, const PlanePoint& Q);
/// Lowest centered part of h at Q as a binary form; throws PointNotOnCurve
/// when Q is not on the curve.
BinaryForm tangent_cone(const TernaryForm& h, const PlanePoint& Q);
/// Geometric integrality criterion for marked curves: the two centered
/// parts are coprime.
bool check_integral(const BinaryForm& a_top, const BinaryForm& a_d);

/// The inverse of projection away from Q: a degree-d triple
/// theta = (u a_{d-1} : v a_{d-1} : -a_d) in centered coordinates,
/// mapped back through the centering matrix. compose(h, theta) = 0.
class Parametrization {
public:
    explicit Parametrization(const MarkedCurve& curve);

    const MarkedCurve& curve() const { return curve_; }
    const std::array<BinaryForm, 3>& theta() const { return theta_; }
    int degree() const { return curve_.d(); }

    /// Image of a parameter value as a plane point.
    PlanePoint image(const FieldElement& u, const FieldElement& v) const;

private:
    MarkedCurve curve_;
    std::array<BinaryForm, 3> theta_;
};

/// Roots of the tangent cone: the d-1 geometric branches of C at Q, with
/// fields of definition. Branch indices follow the root order.
struct BranchPoint {
    ProjectiveRoot root;
    int branch_index;
};
std::vector<BranchPoint> preimages_of_Q(const Parametrization& theta);

/// Canonical matrix (permutation + shear) sending Q to (0:0:1).
MatFq centering_matrix(const PlanePoint& Q);

}  // namespace dp2

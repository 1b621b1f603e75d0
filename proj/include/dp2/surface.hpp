#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dp2/ternary_form.hpp"

namespace dp2 {

/// Projective plane point over some F_{q^e}, normalized so the first
/// nonzero coordinate is 1.
class PlanePoint {
public:
    PlanePoint(FieldElement x, FieldElement y, FieldElement z);

    const FieldElement& x() const { return x_; }
    const FieldElement& y() const { return y_; }
    const FieldElement& z() const { return z_; }
    FieldPtr field() const { return x_.field(); }

    bool operator==(const PlanePoint& o) const;
    bool operator!=(const PlanePoint& o) const { return !(*this == o); }

    std::string str() const;

private:
    FieldElement x_, y_, z_;
};

class DelPezzo2;

/// Point of X in P(1,1,1,2): (x, y, z, w) with (x, y, z) != 0, normalized
/// so the first nonzero plane coordinate is 1 (w rescales by the square).
class SurfacePoint {
public:
    /// Validates the surface equation; throws PointNotOnSurface.
    SurfacePoint(const DelPezzo2& X, FieldElement x, FieldElement y, FieldElement z,
                 FieldElement w);

    const FieldElement& x() const { return x_; }
    const FieldElement& y() const { return y_; }
    const FieldElement& z() const { return z_; }
    const FieldElement& w() const { return w_; }
    FieldPtr field() const { return x_.field(); }

    bool operator==(const SurfacePoint& o) const;
    bool operator!=(const SurfacePoint& o) const { return !(*this == o); }

    std::string str() const;

private:
    FieldElement x_, y_, z_, w_;
};

struct SmoothnessCertificate {
    bool smooth = false;
    int attempts = 0;           // coordinate changes tried (first is identity)
    int candidate_count = 0;    // projective (x:y) candidates examined
    int extension_bound = 9;    // Bezout bound for two cubic partials
    bool euler_skips_b = true;  // deg b = 4 is a unit mod p, so vanishing
                                // partials force b = 0 via Euler's relation
    BinaryForm partials_resultant;  // resultant used on the last attempt
    std::string detail;             // singular point or failure reason
};

/// Degree-2 del Pezzo surface w^2 + f w = g in P(1,1,1,2), with the branch
/// quartic b = f^2 + 4g cached. Characteristic 2 is rejected at the field.
class DelPezzo2 {
public:
    /// Normal form of c * w^2 + f' w = g': divides out the unit c, and
    /// optionally completes the square (f = 0, g = (f^2 + 4g)/4).
    static DelPezzo2 normal_form(const FieldElement& c, const TernaryForm& f,
                                 const TernaryForm& g, bool complete_square = false);
    DelPezzo2(const TernaryForm& f, const TernaryForm& g);

    FieldPtr field() const { return f_.field(); }
    const TernaryForm& f() const { return f_; }
    const TernaryForm& g() const { return g_; }
    /// f^2 + 4g, the branch quartic.
    const TernaryForm& branch() const { return branch_; }

    /// Geometric smoothness of the branch quartic (equivalently of X in
    /// odd characteristic). Deterministic given the seed, which only feeds
    /// the fallback coordinate changes.
    SmoothnessCertificate is_smooth(uint64_t seed = 0) const;

    SurfacePoint point(FieldElement x, FieldElement y, FieldElement z,
                       FieldElement w) const;

    std::string str() const;

private:
    TernaryForm f_, g_, branch_;
};

/// Forgets w.
PlanePoint project(const SurfacePoint& pt);
/// Deck transformation of the double cover: w -> -w - f.
SurfacePoint involution(const DelPezzo2& X, const SurfacePoint& pt);

/// Fiber of the anticanonical projection above Q, over Q's own field:
/// two points when b(Q) is a nonzero square, one when b(Q) = 0, none
/// otherwise (then needs_quadratic_extension is set).
struct Fiber {
    std::vector<SurfacePoint> points;
    bool ramified = false;
    bool needs_quadratic_extension = false;
};
Fiber fiber(const DelPezzo2& X, const PlanePoint& Q);

/// #X(F_{q^e}) by plane enumeration; optionally lists the points
/// (sorted canonically). Guard: q^{3e} <= 10^8.
struct PointCount {
    int64_t count = 0;
    std::vector<SurfacePoint> points;  // filled only when listed
};
PointCount rational_points(const DelPezzo2& X, int ext_degree, bool list_points = false);

}  // namespace dp2

#include "dp2/curve.hpp"

#include <sstream>

namespace dp2 {

MatFq centering_matrix(const PlanePoint& Q) {
    FieldPtr F = Q.field();
    // first nonzero coordinate (already normalized to 1)
    int j = !Q.x().is_zero() ? 0 : (!Q.y().is_zero() ? 1 : 2);
    MatFq P = MatFq::identity(F, 3);
    if (j != 2) {
        std::swap(P.at(j, j), P.at(j, 2));
        std::swap(P.at(2, 2), P.at(2, j));
    }
    // P*Q = (a, b, 1); shear kills a and b
    std::array<FieldElement, 3> q{Q.x(), Q.y(), Q.z()};
    FieldElement a = P.at(0, 0) * q[0] + P.at(0, 1) * q[1] + P.at(0, 2) * q[2];
    FieldElement b = P.at(1, 0) * q[0] + P.at(1, 1) * q[1] + P.at(1, 2) * q[2];
    MatFq S = MatFq::identity(F, 3);
    S.at(0, 2) = -a;
    S.at(1, 2) = -b;
    return S * P;
}

namespace {

// centered parts a_j of h: h(M^{-1} vars) = sum z^{d-j} a_j(x, y)
std::vector<BinaryForm> centered_parts(const TernaryForm& h, const MatFq& M) {
    TernaryForm hc = h.substitute_linear(M.inverse());
    std::vector<BinaryForm> by_z = hc.collect(2);  // index = z-exponent
    // a_j = coefficient of z^{d-j}
    int d = h.degree();
    std::vector<BinaryForm> parts;
    parts.reserve(static_cast<size_t>(d + 1));
    for (int j = 0; j <= d; ++j) parts.push_back(by_z[static_cast<size_t>(d - j)]);
    return parts;
}

}  // namespace

int multiplicity_at(const TernaryForm& h, const PlanePoint& Q) {
    if (h.is_zero()) throw ZeroForm("multiplicity of the zero form");
    if (!h.field()->same_arithmetic(Q.field()))
        throw FieldMismatch("curve and point over different fields");
    MatFq M = centering_matrix(Q);
    std::vector<BinaryForm> parts = centered_parts(h, M);
    for (int j = 0; j <= h.degree(); ++j)
        if (!parts[static_cast<size_t>(j)].is_zero()) return j;
    return h.degree() + 1;  // unreachable for h != 0
}

BinaryForm tangent_cone(const TernaryForm& h, const PlanePoint& Q) {
    int m = multiplicity_at(h, Q);
    if (m == 0) throw PointNotOnCurve("the point is not on the curve");
    MatFq M = centering_matrix(Q);
    return centered_parts(h, M)[static_cast<size_t>(m)];
}

bool check_integral(const BinaryForm& a_top, const BinaryForm& a_d) {
    if (a_top.is_zero() || a_d.is_zero()) return false;
    return gcd(a_top, a_d).degree() == 0;
}

MarkedCurve::MarkedCurve(const TernaryForm& h, const PlanePoint& Q)
    : h_(h), q_(Q), d_(h.degree()), centering_(centering_matrix(Q)) {
    if (d_ < 2 || d_ > 6)
        throw InvalidMarkedCurve("degree must lie in [2, 6]");
    std::vector<BinaryForm> parts = centered_parts(h_, centering_);
    for (int j = 0; j < d_ - 1; ++j)
        if (!parts[static_cast<size_t>(j)].is_zero())
            throw InvalidMarkedCurve(j == 0 ? "the marked point is not on the curve"
                                            : "multiplicity at the marked point is "
                                              "less than d-1");
    a_top_ = parts[static_cast<size_t>(d_ - 1)];
    a_d_ = parts[static_cast<size_t>(d_)];
    if (a_top_.is_zero())
        throw InvalidMarkedCurve("multiplicity at the marked point exceeds d-1");
    if (!check_integral(a_top_, a_d_))
        throw InvalidMarkedCurve("curve is not geometrically integral");

    // smooth away from Q: singular points pull back along theta to roots of
    // the tangent part only
    std::array<BinaryForm, 3> theta{
        BinaryForm::u(field()) * a_top_,
        BinaryForm::v(field()) * a_top_,
        -a_d_,
    };
    MatFq Minv = centering_.inverse();
    std::array<BinaryForm, 3> theta_plane;
    for (int i = 0; i < 3; ++i) {
        BinaryForm acc = BinaryForm::zero(field());
        for (int j = 0; j < 3; ++j) {
            BinaryForm t = theta[static_cast<size_t>(j)].scale(Minv.at(i, j));
            acc = acc.is_zero() ? t : (t.is_zero() ? acc : acc + t);
        }
        theta_plane[static_cast<size_t>(i)] = acc;
    }
    BinaryForm sing = BinaryForm::zero(field());
    for (int v = 0; v < 3; ++v) {
        TernaryForm hp = h_.partial(v);
        if (hp.is_zero()) continue;
        BinaryForm pulled = compose(hp, theta_plane[0], theta_plane[1], theta_plane[2]);
        if (pulled.is_zero()) continue;  // partial vanishes on the curve: impossible
        sing = sing.is_zero() ? pulled : gcd(sing, pulled);
        if (!sing.is_zero() && sing.degree() == 0) break;
    }
    if (!sing.is_zero() && sing.degree() > 0) {
        // every root of sing must be a root of the tangent part
        BinaryForm rad = BinaryForm::constant(field()->one());
        for (const auto& [s, m] : squarefree_decomposition(sing).factors) rad = rad * s;
        BinaryForm g = gcd(rad, a_top_);
        if (!(g.monic().second == rad.monic().second))
            throw InvalidMarkedCurve("curve is singular away from the marked point");
    }
}

bool MarkedCurve::is_ordinary() const {
    for (const auto& [s, m] : squarefree_decomposition(a_top_).factors)
        if (m > 1) return false;
    return true;
}

std::string MarkedCurve::str() const {
    std::ostringstream out;
    out << "degree-" << d_ << " curve " << h_.str() << " marked at " << q_.str();
    return out.str();
}

Parametrization::Parametrization(const MarkedCurve& curve) : curve_(curve) {
    FieldPtr F = curve.field();
    std::array<BinaryForm, 3> theta_c{
        BinaryForm::u(F) * curve.tangent_part(),
        BinaryForm::v(F) * curve.tangent_part(),
        -curve.lowest_part(),
    };
    MatFq Minv = curve.centering().inverse();
    for (int i = 0; i < 3; ++i) {
        BinaryForm acc = BinaryForm::zero(F);
        for (int j = 0; j < 3; ++j) {
            BinaryForm t = theta_c[static_cast<size_t>(j)].scale(Minv.at(i, j));
            if (t.is_zero()) continue;
            acc = acc.is_zero() ? t : acc + t;
        }
        theta_[static_cast<size_t>(i)] = acc;
    }
}

PlanePoint Parametrization::image(const FieldElement& u, const FieldElement& v) const {
    FieldPtr E = u.field();
    std::array<FieldElement, 3> vals;
    for (int i = 0; i < 3; ++i) {
        const BinaryForm& t = theta_[static_cast<size_t>(i)];
        vals[static_cast<size_t>(i)] =
            t.is_zero() ? E->zero() : t.embed_into(E).eval(u, v);
    }
    return PlanePoint(vals[0], vals[1], vals[2]);
}

std::vector<BranchPoint> preimages_of_Q(const Parametrization& theta) {
    const BinaryForm& a = theta.curve().tangent_part();
    std::vector<BranchPoint> out;
    int idx = 0;
    for (const auto& r : binary_roots(a, std::max(a.degree(), 1)))
        out.push_back(BranchPoint{r, idx++});
    return out;
}

}  // namespace dp2

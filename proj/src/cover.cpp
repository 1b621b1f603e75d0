#include "dp2/cover.hpp"

#include <algorithm>

namespace dp2 {

namespace {

BinaryForm safe_add(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return a + b;
}

}  // namespace

ContactProfile pullback_branch(const DelPezzo2& X, const Parametrization& theta) {
    if (!X.field()->same_arithmetic(theta.curve().field()))
        throw FieldMismatch("surface and curve over different fields");
    const auto& t = theta.theta();
    BinaryForm H = compose(X.branch(), t[0], t[1], t[2]);
    if (H.is_zero())
        throw CurveInsideBranch("the curve is contained in the branch locus");

    ContactProfile out;
    out.H = H;
    out.d = theta.degree();
    BinarySquarefreeDecomposition sfd = squarefree_decomposition(H);
    out.unit = sfd.unit;
    out.decomposition = sfd.factors;

    const PlanePoint& Q = theta.curve().Q();
    out.q_on_branch = X.branch().evaluate(Q.x(), Q.y(), Q.z()).is_zero();

    const BinaryForm& A = theta.curve().tangent_part();
    bool off_even = true;
    for (const auto& [S, m] : sfd.factors) {
        BinaryForm above = gcd(S, A);
        BinaryForm off = S;
        if (above.degree() > 0) off = try_divide(S, above).value().monic().second;
        auto push_parts = [&](const BinaryForm& part, bool above_q) {
            if (part.is_zero() || part.degree() == 0) return;
            for (const auto& [prod, e] : distinct_degree_split(part)) {
                RootOrbitClass cls;
                cls.factor = prod;
                cls.ext_degree = e;
                cls.multiplicity = m;
                cls.above_q = above_q;
                cls.orbit_count = prod.degree() / e;
                out.branch_points.push_back(cls);
                if (above_q)
                    out.above_q_total_multiplicity += m * prod.degree();
                else if (m % 2 != 0)
                    off_even = false;
                if (m % 2 != 0) out.odd_geometric_count += prod.degree();
            }
        };
        if (above.degree() > 0) push_parts(above, true);
        push_parts(off, false);
    }
    out.even_everywhere = off_even && out.above_q_total_multiplicity % 2 == 0;
    return out;
}

CaseClassification classify(const DelPezzo2& X, const MarkedCurve& C,
                            const ContactProfile& profile,
                            const std::optional<SurfacePoint>& P) {
    if (!profile.even_everywhere)
        throw HypothesisViolated("contact with the branch locus is not even everywhere");
    if (P && !(project(*P) == C.Q()))
        throw HypothesisViolated("supplied surface point does not lie above the marked point");

    CaseClassification out;
    out.d = C.d();
    if (!profile.q_on_branch) {
        out.kind = CaseClassification::Kind::SplitCase;
        return out;
    }
    if (C.d() != 3 && C.d() != 4) {
        out.kind = CaseClassification::Kind::NotApplicable;
        out.reason = "marked point on the branch locus needs d in {3, 4}";
        return out;
    }
    if (!C.is_ordinary()) {
        out.kind = CaseClassification::Kind::NotApplicable;
        out.reason = "marked point is not an ordinary singular point";
        return out;
    }
    if (profile.odd_geometric_count != 2) {
        out.kind = CaseClassification::Kind::NotApplicable;
        out.reason = "parity profile does not show exactly two odd branch points";
        return out;
    }
    out.kind = CaseClassification::Kind::ConicCase;
    return out;
}

int genus_double_cover(const ContactProfile& profile) {
    int r = profile.odd_geometric_count;
    if (r == 0) throw SplitCover("the double cover splits; no ramification");
    return r / 2 - 1;
}

// ------------------------------------------------------------ verify_map

MapVerification verify_map(const DelPezzo2& X, const RationalMapToX& rho,
                           const std::optional<TernaryForm>& image_curve) {
    MapVerification out;
    FieldPtr E = rho.field;
    const BinaryForm &rx = rho.rho[0], &ry = rho.rho[1], &rz = rho.rho[2],
                     &rw = rho.rho[3];
    if (rx.is_zero() && ry.is_zero() && rz.is_zero())
        throw ZeroVector("map with zero plane components");
    int D = -1;
    for (const BinaryForm* c : {&rx, &ry, &rz}) {
        if (c->is_zero()) continue;
        if (D < 0)
            D = c->degree();
        else if (c->degree() != D)
            throw DegreeMismatch("plane components of unequal degree");
    }
    out.component_degree = D;
    if (!rw.is_zero() && rw.degree() != 2 * D)
        throw DegreeMismatch("w-component degree must be twice the plane degree");

    BinaryForm F_m = compose(X.f(), rx, ry, rz);
    BinaryForm G_m = compose(X.g(), rx, ry, rz);
    BinaryForm res = safe_add(safe_add(rw * rw, F_m * rw), -G_m);
    out.residual = res;
    out.equation_holds = res.is_zero();

    // nonconstancy: reduced components span dimension >= 2
    BinaryForm g = BinaryForm::zero(E);
    for (const BinaryForm* c : {&rx, &ry, &rz}) {
        if (c->is_zero()) continue;
        g = g.is_zero() ? c->monic().second : gcd(g, *c);
    }
    std::array<BinaryForm, 3> red;
    int rd = 0;
    for (int i = 0; i < 3; ++i) {
        const BinaryForm& c = rho.rho[static_cast<size_t>(i)];
        red[static_cast<size_t>(i)] =
            c.is_zero() ? c : try_divide(c, g).value();
        if (!red[static_cast<size_t>(i)].is_zero())
            rd = red[static_cast<size_t>(i)].degree();
    }
    out.reduced_degree = rd;
    MatFq coeffs(E, 3, rd + 1);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j <= rd; ++j)
            coeffs.at(i, j) = red[static_cast<size_t>(i)].coeff(j);
    out.nonconstant = coeffs.rank() >= 2;

    if (image_curve) {
        BinaryForm on_curve = compose(*image_curve, rx, ry, rz);
        out.image_on_curve = on_curve.is_zero();
        if (out.image_on_curve && image_curve->degree() > 0 &&
            rd % image_curve->degree() == 0)
            out.image_degree_ratio = rd / image_curve->degree();
    }
    return out;
}

void require_valid(const MapVerification& report) {
    if (!report.equation_holds)
        throw EquationFails("surface equation residual: " + report.residual.str());
    if (!report.nonconstant) throw ConstantMap("the map is constant");
}

// ------------------------------------------------------------ lift: split

SplitLift lift_split(const DelPezzo2& X, const Parametrization& theta,
                     const ContactProfile& profile,
                     const std::optional<SurfacePoint>& P) {
    for (const auto& [S, m] : profile.decomposition)
        if (m % 2 != 0) throw NotSplit("pullback has a root of odd multiplicity");
    FieldPtr F = X.field();

    BinaryForm s = BinaryForm::constant(F->one());
    for (const auto& [S, m] : profile.decomposition) s = s * S.pow(m / 2);
    FieldElement c = profile.unit;
    bool c_square = is_square(c);

    if (P) {
        if (!(project(*P) == theta.curve().Q()))
            throw HypothesisViolated("surface point does not lie above the marked point");
        if (!profile.q_on_branch && !c_square)
            throw HypothesisViolated(
                "rational point above a marked point off the branch locus forces a "
                "square class");
    }

    FieldPtr E = c_square ? F : F->extend(2);
    const auto& t = theta.theta();
    RationalMapToX map;
    map.field = E;
    map.ext_degree = c_square ? 1 : 2;
    map.path = "split";

    BinaryForm sc_s = (c_square ? s : s.embed_into(E)).scale(sqrt(embed(c, E)));
    BinaryForm f_theta = compose(X.f(), t[0], t[1], t[2]);
    if (!c_square && !f_theta.is_zero()) f_theta = f_theta.embed_into(E);
    FieldElement half = inverse(E->from_int(2));
    for (int i = 0; i < 3; ++i)
        map.rho[static_cast<size_t>(i)] =
            c_square ? t[static_cast<size_t>(i)]
                     : t[static_cast<size_t>(i)].embed_into(E);
    map.rho[3] = safe_add(sc_s, -f_theta).scale(half);

    require_valid(verify_map(X, map, theta.curve().h()));
    return SplitLift{map, c_square};
}

// ------------------------------------------------------------ lift: conic

namespace {

struct ConicPoint {
    FieldElement u, v, w;
};

// quadratic form w^2 - c*r2(u, v) on (u, v, w)
FieldElement conic_eval(const FieldElement& c, const BinaryForm& r2,
                        const FieldElement& u, const FieldElement& v,
                        const FieldElement& w) {
    return w * w - c * r2.eval(u, v);
}

}  // namespace

RationalMapToX lift_conic(const DelPezzo2& X, const Parametrization& theta,
                          const ContactProfile& profile) {
    FieldPtr F = X.field();
    BinaryForm r2 = BinaryForm::constant(F->one());
    BinaryForm s = BinaryForm::constant(F->one());
    for (const auto& [S, m] : profile.decomposition) {
        if (m % 2 != 0) r2 = r2 * S;
        s = s * S.pow(m / 2);
    }
    if (r2.degree() != 2)
        throw NotConicCase("odd part of the pullback does not have degree 2");
    for (const auto& [fac, m] : squarefree_decomposition(r2).factors)
        if (m > 1) throw NotConicCase("odd part has a repeated root");
    const FieldElement c = profile.unit;

    // rational point on w^2 = c * r2(u, v): scan (a : 1), then (1 : 0)
    std::optional<ConicPoint> found;
    for (int64_t i = 0; i <= F->q() && !found; ++i) {
        FieldElement u = i < F->q() ? F->element_at(i) : F->one();
        FieldElement v = i < F->q() ? F->one() : F->zero();
        FieldElement val = c * r2.eval(u, v);
        if (is_square(val)) found = ConicPoint{u, v, sqrt(val)};
    }
    if (!found) throw ConicPointNotFound("smooth conic without a rational point");
    const ConicPoint p0 = *found;

    // complete p0 to a basis with two standard vectors
    std::array<FieldElement, 3> P0{p0.u, p0.v, p0.w};
    std::array<std::array<FieldElement, 3>, 3> std_basis{
        std::array<FieldElement, 3>{F->one(), F->zero(), F->zero()},
        std::array<FieldElement, 3>{F->zero(), F->one(), F->zero()},
        std::array<FieldElement, 3>{F->zero(), F->zero(), F->one()}};
    std::array<FieldElement, 3> E1{}, E2{};
    bool basis_found = false;
    for (int i = 0; i < 3 && !basis_found; ++i)
        for (int j = i + 1; j < 3 && !basis_found; ++j) {
            MatFq m(F, 3, 3);
            for (int col = 0; col < 3; ++col) {
                m.at(0, col) = std_basis[static_cast<size_t>(i)][static_cast<size_t>(col)];
                m.at(1, col) = std_basis[static_cast<size_t>(j)][static_cast<size_t>(col)];
                m.at(2, col) = P0[static_cast<size_t>(col)];
            }
            if (m.rank() == 3) {
                E1 = std_basis[static_cast<size_t>(i)];
                E2 = std_basis[static_cast<size_t>(j)];
                basis_found = true;
            }
        }
    if (!basis_found) throw ConicPointNotFound("degenerate conic point");  // unreachable

    // second intersection of the line through p0 with direction M = m0 E1 + m1 E2:
    // out = C(M) p0 - 2 B(p0, M) M, quadratic in (m0, m1)
    auto Cq = [&](const std::array<FieldElement, 3>& vec) {
        return conic_eval(c, r2, vec[0], vec[1], vec[2]);
    };
    auto Bq = [&](const std::array<FieldElement, 3>& a,
                  const std::array<FieldElement, 3>& b) {
        std::array<FieldElement, 3> sum{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
        FieldElement cs = Cq(sum) - Cq(a) - Cq(b);
        return cs * inverse(F->from_int(2));
    };

    FieldElement cE1 = Cq(E1), cE2 = Cq(E2), bE12 = Bq(E1, E2);
    FieldElement b01 = Bq(P0, E1), b02 = Bq(P0, E2);
    // q_M(m0, m1) = cE1 m0^2 + 2 bE12 m0 m1 + cE2 m1^2
    // lin(m0, m1) = b01 m0 + b02 m1
    std::array<BinaryForm, 3> param;  // (u(m), v(m), w'(m)), degree 2
    FieldElement two = F->from_int(2);
    for (int coord = 0; coord < 3; ++coord) {
        // coefficients of m0^i m1^{2-i}, index i
        std::array<FieldElement, 3> cf{F->zero(), F->zero(), F->zero()};
        const FieldElement& p0c = P0[static_cast<size_t>(coord)];
        const FieldElement& e1c = E1[static_cast<size_t>(coord)];
        const FieldElement& e2c = E2[static_cast<size_t>(coord)];
        cf[2] = cE1 * p0c - two * b01 * e1c;                       // m0^2
        cf[1] = two * bE12 * p0c - two * (b01 * e2c + b02 * e1c);  // m0 m1
        cf[0] = cE2 * p0c - two * b02 * e2c;                       // m1^2
        param[static_cast<size_t>(coord)] =
            BinaryForm(F, 2, {cf[0], cf[1], cf[2]});
    }
    const BinaryForm &U = param[0], &V = param[1], &W = param[2];

    const auto& t = theta.theta();
    RationalMapToX map;
    map.field = F;
    map.ext_degree = 1;
    map.path = "conic";
    for (int i = 0; i < 3; ++i)
        map.rho[static_cast<size_t>(i)] =
            t[static_cast<size_t>(i)].is_zero()
                ? BinaryForm::zero(F)
                : compose_binary(t[static_cast<size_t>(i)], U, V);

    BinaryForm S_m = compose_binary(s, U, V);
    BinaryForm f_theta = compose(X.f(), t[0], t[1], t[2]);
    BinaryForm F_m = f_theta.is_zero() ? BinaryForm::zero(F)
                                       : compose_binary(f_theta, U, V);
    FieldElement half = inverse(two);
    map.rho[3] = safe_add(W * S_m, -F_m).scale(half);

    require_valid(verify_map(X, map, theta.curve().h()));
    return map;
}

}  // namespace dp2

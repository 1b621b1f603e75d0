#include "dp2/surface.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "dp2/rng.hpp"
#include "dp2/unipoly.hpp"

namespace dp2 {

namespace {

// normalize a projective tuple in place; returns the scaling factor applied
FieldElement normalize_plane(FieldElement& x, FieldElement& y, FieldElement& z) {
    FieldElement* first = nullptr;
    if (!x.is_zero())
        first = &x;
    else if (!y.is_zero())
        first = &y;
    else if (!z.is_zero())
        first = &z;
    else
        throw ZeroVector("projective point with all coordinates zero");
    FieldElement s = inverse(*first);
    x = x * s;
    y = y * s;
    z = z * s;
    return s;
}

}  // namespace

PlanePoint::PlanePoint(FieldElement x, FieldElement y, FieldElement z)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
    normalize_plane(x_, y_, z_);
}

bool PlanePoint::operator==(const PlanePoint& o) const {
    return x_ == o.x_ && y_ == o.y_ && z_ == o.z_;
}

std::string PlanePoint::str() const {
    return "(" + x_.str() + " : " + y_.str() + " : " + z_.str() + ")";
}

SurfacePoint::SurfacePoint(const DelPezzo2& X, FieldElement x, FieldElement y,
                           FieldElement z, FieldElement w)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), w_(std::move(w)) {
    FieldElement s = normalize_plane(x_, y_, z_);
    w_ = w_ * s * s;
    FieldPtr E = x_.field();
    TernaryForm f = X.f().field()->same_arithmetic(E) ? X.f() : X.f().embed_into(E);
    TernaryForm g = X.g().field()->same_arithmetic(E) ? X.g() : X.g().embed_into(E);
    FieldElement lhs = w_ * w_ + f.evaluate(x_, y_, z_) * w_ - g.evaluate(x_, y_, z_);
    if (!lhs.is_zero())
        throw PointNotOnSurface("(" + x_.str() + ":" + y_.str() + ":" + z_.str() + ":" +
                                w_.str() + ") does not satisfy the surface equation");
}

bool SurfacePoint::operator==(const SurfacePoint& o) const {
    return x_ == o.x_ && y_ == o.y_ && z_ == o.z_ && w_ == o.w_;
}

std::string SurfacePoint::str() const {
    return "(" + x_.str() + " : " + y_.str() + " : " + z_.str() + " : " + w_.str() + ")";
}

DelPezzo2::DelPezzo2(const TernaryForm& f, const TernaryForm& g) : f_(f), g_(g) {
    if (f.degree() != 2 || g.degree() != 4)
        throw DegreeMismatch("surface needs deg f = 2 and deg g = 4");
    if (!f.field()->same_arithmetic(g.field()))
        throw FieldMismatch("f and g over different fields");
    branch_ = f * f + g.scale(f.field()->from_int(4));
}

DelPezzo2 DelPezzo2::normal_form(const FieldElement& c, const TernaryForm& f,
                                 const TernaryForm& g, bool complete_square) {
    if (c.is_zero()) throw ZeroUnit("unit in front of w^2 is zero");
    FieldElement cinv = inverse(c);
    DelPezzo2 X(f.scale(cinv), g.scale(cinv));
    if (complete_square && !X.f_.is_zero()) {
        // w^2 + fw - g = (w + f/2)^2 - (f^2 + 4g)/4
        TernaryForm g2 = X.branch_.scale(inverse(c.field()->from_int(4)));
        X = DelPezzo2(TernaryForm::zero(f.field(), 2), g2);
    }
    return X;
}

SurfacePoint DelPezzo2::point(FieldElement x, FieldElement y, FieldElement z,
                              FieldElement w) const {
    return SurfacePoint(*this, std::move(x), std::move(y), std::move(z), std::move(w));
}

std::string DelPezzo2::str() const {
    std::ostringstream out;
    out << "w^2 + (" << f_.str() << ")w = " << g_.str() << " over " << field()->str();
    return out.str();
}

// ------------------------------------------------------------- smoothness

namespace {

// polynomials in z with binary-form coefficients, for the degenerate
// common-factor fallback (pseudo-remainder sequence)
struct ZPoly {
    std::vector<BinaryForm> c;

    int deg() const {
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            if (!c[static_cast<size_t>(i)].is_zero()) return i;
        return -1;
    }
};

ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b, FieldPtr F) {
    ZPoly r = a;
    int db = b.deg();
    const BinaryForm& lb = b.c[static_cast<size_t>(db)];
    while (r.deg() >= db && r.deg() >= 0) {
        int dr = r.deg();
        BinaryForm lr = r.c[static_cast<size_t>(dr)];
        ZPoly nr;
        nr.c.assign(static_cast<size_t>(dr), BinaryForm::zero(F));
        for (int i = 0; i < dr; ++i) {
            BinaryForm t = r.c[static_cast<size_t>(i)] * lb;
            int j = i - (dr - db);
            if (j >= 0 && j < db) t = t - lr * b.c[static_cast<size_t>(j)];
            nr.c[static_cast<size_t>(i)] = t;
        }
        r = std::move(nr);
    }
    return r;
}

// degree in z of the gcd of two z-positive polynomials over F_q(x, y)
int pseudo_gcd_zdeg(ZPoly a, ZPoly b, FieldPtr F) {
    if (a.deg() < b.deg()) std::swap(a, b);
    while (b.deg() >= 1) {
        ZPoly r = pseudo_rem(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    return b.deg() == 0 ? 0 : a.deg();
}

UniPoly specialize_z(const std::vector<BinaryForm>& zcoeffs, const FieldElement& x0,
                     const FieldElement& y0, FieldPtr E) {
    std::vector<FieldElement> c;
    c.reserve(zcoeffs.size());
    for (const auto& b : zcoeffs)
        c.push_back(b.is_zero() ? E->zero() : b.embed_into(E).eval(x0, y0));
    return UniPoly(E, std::move(c));
}

}  // namespace

SmoothnessCertificate DelPezzo2::is_smooth(uint64_t seed) const {
    SmoothnessCertificate cert;
    cert.partials_resultant = BinaryForm::zero(field());
    if (branch_.is_zero()) {
        cert.smooth = false;
        cert.detail = "branch form is identically zero";
        return cert;
    }

    Rng rng(seed ^ 0x8d2f5c1a9e3b7ull);
    for (int attempt = 0; attempt <= 8; ++attempt) {
        cert.attempts = attempt + 1;
        MatFq M = attempt == 0 ? MatFq::identity(field(), 3) : random_gl3(field(), rng);
        TernaryForm bc = attempt == 0 ? branch_ : branch_.substitute_linear(M);

        std::array<TernaryForm, 3> parts{bc.partial(0), bc.partial(1), bc.partial(2)};
        std::vector<int> nz;
        for (int v = 0; v < 3; ++v)
            if (!parts[static_cast<size_t>(v)].is_zero()) nz.push_back(v);
        if (nz.empty()) throw Error("all partials of a nonzero quartic vanish");
        if (nz.size() <= 2) {
            // remaining partials are positive-degree plane curves, which
            // always meet over the closure
            cert.smooth = false;
            cert.detail = "at least one partial vanishes identically";
            return cert;
        }

        auto zc = [&](int v) { return parts[static_cast<size_t>(v)].collect(2); };
        std::vector<BinaryForm> cx = zc(0), cy = zc(1), cz0 = zc(2);
        auto zdeg = [](const std::vector<BinaryForm>& c) {
            for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
                if (!c[static_cast<size_t>(i)].is_zero()) return i;
            return -1;
        };
        if (zdeg(cx) < 1 || zdeg(cy) < 1) continue;  // retry with new coordinates

        BinaryForm R;
        try {
            R = resultant(parts[0], parts[1], 2);
        } catch (const EliminationDegenerate&) {
            continue;
        }
        cert.partials_resultant = R;

        if (R.is_zero()) {
            ZPoly a{cx}, b{cy};
            if (pseudo_gcd_zdeg(a, b, field()) >= 1) {
                // the partials share a z-positive factor; its curve meets
                // the third partial's curve over the closure
                cert.smooth = false;
                cert.detail = "first two partials share a common factor";
                return cert;
            }
            continue;  // inconsistent elimination; retry
        }

        // candidates (x0 : y0) from the resultant, plus (0 : 0 : 1)
        bool singular = false;
        std::string where;

        {
            FieldElement px = parts[0].evaluate(field()->zero(), field()->zero(), field()->one());
            FieldElement py = parts[1].evaluate(field()->zero(), field()->zero(), field()->one());
            FieldElement pz = parts[2].evaluate(field()->zero(), field()->zero(), field()->one());
            if (px.is_zero() && py.is_zero() && pz.is_zero()) {
                singular = true;
                where = "(0:0:1) in the transformed coordinates";
            }
        }

        std::vector<ProjectiveRoot> candidates;
        if (!singular) candidates = binary_roots(R, cert.extension_bound);
        cert.candidate_count = static_cast<int>(candidates.size());

        for (const auto& cand : candidates) {
            if (singular) break;
            FieldPtr E = cand.u.field();
            UniPoly u = specialize_z(cx, cand.u, cand.v, E);
            UniPoly v = specialize_z(cy, cand.u, cand.v, E);
            UniPoly t = specialize_z(cz0, cand.u, cand.v, E);
            if (u.is_zero() && v.is_zero()) {
                if (t.is_zero() || t.degree() >= 1) {
                    singular = true;
                    where = "line above candidate " + cand.u.str();
                }
                continue;
            }
            UniPoly w = u.is_zero() ? v : (v.is_zero() ? u : gcd(u, v));
            if (w.degree() < 1) continue;
            if (t.is_zero()) {
                singular = true;
                where = "candidate (" + cand.u.str() + ":" + cand.v.str() + ")";
                continue;
            }
            UniPoly common = gcd(w, t);
            if (common.degree() >= 1) {
                singular = true;
                where = "candidate (" + cand.u.str() + ":" + cand.v.str() +
                        "), z annihilates " + common.str();
            }
        }

        cert.smooth = !singular;
        cert.detail = singular ? "singular point near " + where : "";
        return cert;
    }
    throw EliminationFailedAfterRetries("no usable elimination after 9 attempts");
}

// ----------------------------------------------------------- projections

PlanePoint project(const SurfacePoint& pt) {
    return PlanePoint(pt.x(), pt.y(), pt.z());
}

SurfacePoint involution(const DelPezzo2& X, const SurfacePoint& pt) {
    FieldPtr E = pt.field();
    TernaryForm f = X.f().field()->same_arithmetic(E) ? X.f() : X.f().embed_into(E);
    FieldElement w = -pt.w() - f.evaluate(pt.x(), pt.y(), pt.z());
    return SurfacePoint(X, pt.x(), pt.y(), pt.z(), w);
}

Fiber fiber(const DelPezzo2& X, const PlanePoint& Q) {
    FieldPtr E = Q.field();
    TernaryForm f = X.f().field()->same_arithmetic(E) ? X.f() : X.f().embed_into(E);
    TernaryForm g = X.g().field()->same_arithmetic(E) ? X.g() : X.g().embed_into(E);
    FieldElement f0 = f.evaluate(Q.x(), Q.y(), Q.z());
    FieldElement g0 = g.evaluate(Q.x(), Q.y(), Q.z());
    FieldElement disc = f0 * f0 + E->from_int(4) * g0;
    FieldElement half = inverse(E->from_int(2));

    Fiber out;
    if (disc.is_zero()) {
        out.ramified = true;
        out.points.push_back(SurfacePoint(X, Q.x(), Q.y(), Q.z(), (-f0) * half));
    } else if (is_square(disc)) {
        FieldElement s = sqrt(disc);
        out.points.push_back(SurfacePoint(X, Q.x(), Q.y(), Q.z(), (-f0 + s) * half));
        out.points.push_back(SurfacePoint(X, Q.x(), Q.y(), Q.z(), (-f0 - s) * half));
    } else {
        out.needs_quadratic_extension = true;
    }
    return out;
}

PointCount rational_points(const DelPezzo2& X, int ext_degree, bool list_points) {
    if (ext_degree < 1) throw EnumerationTooLarge("extension degree must be >= 1");
    FieldPtr F = X.field();
    // guard q^{3e} <= 10^8
    double bits = 3.0 * ext_degree * std::log2(static_cast<double>(F->q()));
    if (bits > std::log2(1e8)) throw EnumerationTooLarge("q^{3e} exceeds 10^8");

    FieldPtr E = ext_degree == 1 ? F : F->extend(ext_degree);
    TernaryForm b = ext_degree == 1 ? X.branch() : X.branch().embed_into(E);

    PointCount out;
    auto visit = [&](const FieldElement& x, const FieldElement& y, const FieldElement& z) {
        FieldElement disc = b.evaluate(x, y, z);
        if (disc.is_zero())
            out.count += 1;
        else if (is_square(disc))
            out.count += 2;
        if (list_points) {
            Fiber fib = fiber(X, PlanePoint(x, y, z));
            for (auto& pt : fib.points) out.points.push_back(pt);
        }
    };

    FieldElement zero = E->zero(), one = E->one();
    for (int64_t a = 0; a < E->q(); ++a)
        for (int64_t c = 0; c < E->q(); ++c)
            visit(one, E->element_at(a), E->element_at(c));
    for (int64_t c = 0; c < E->q(); ++c) visit(zero, one, E->element_at(c));
    visit(zero, zero, one);

    if (list_points) {
        std::sort(out.points.begin(), out.points.end(),
                  [](const SurfacePoint& a, const SurfacePoint& b2) {
                      auto key = [](const SurfacePoint& p) {
                          return std::array<int64_t, 4>{p.x().lex_index(), p.y().lex_index(),
                                                        p.z().lex_index(), p.w().lex_index()};
                      };
                      return key(a) < key(b2);
                  });
    }
    return out;
}

}  // namespace dp2

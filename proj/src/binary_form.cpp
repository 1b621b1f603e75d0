#include "dp2/binary_form.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dp2 {

namespace {

void check_field(const BinaryForm& a, const BinaryForm& b) {
    if (!a.field()->same_arithmetic(b.field()))
        throw FieldMismatch("forms over different fields");
}

}  // namespace

BinaryForm BinaryForm::zero(FieldPtr F) {
    BinaryForm r;
    r.field_ = F;
    return r;
}

BinaryForm::BinaryForm(FieldPtr F, int degree, std::vector<FieldElement> coeffs)
    : field_(F) {
    if (degree < 0) throw DegreeMismatch("negative degree");
    if (static_cast<int>(coeffs.size()) != degree + 1)
        throw DegreeMismatch("coefficient count does not match degree");
    bool all_zero = std::all_of(coeffs.begin(), coeffs.end(),
                                [](const FieldElement& c) { return c.is_zero(); });
    if (all_zero) return;  // zero form
    zero_ = false;
    degree_ = degree;
    c_ = std::move(coeffs);
}

BinaryForm BinaryForm::from_int_coeffs(FieldPtr F, int degree,
                                       const std::vector<int64_t>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (int64_t v : coeffs) c.push_back(F->from_int(v));
    return BinaryForm(F, degree, std::move(c));
}

BinaryForm BinaryForm::constant(const FieldElement& c) {
    return BinaryForm(c.field(), 0, {c});
}

BinaryForm BinaryForm::u(FieldPtr F) {
    return BinaryForm(F, 1, {F->zero(), F->one()});
}

BinaryForm BinaryForm::v(FieldPtr F) {
    return BinaryForm(F, 1, {F->one(), F->zero()});
}

BinaryForm BinaryForm::homogenize(const UniPoly& p, int degree) {
    if (p.is_zero()) return zero(p.field());
    if (degree < p.degree()) throw DegreeMismatch("homogenization degree too small");
    std::vector<FieldElement> c(static_cast<size_t>(degree + 1), p.field()->zero());
    for (int i = 0; i <= p.degree(); ++i) c[static_cast<size_t>(i)] = p.coeff(i);
    return BinaryForm(p.field(), degree, std::move(c));
}

int BinaryForm::degree() const {
    if (zero_) throw ZeroForm("zero form has no degree");
    return degree_;
}

FieldElement BinaryForm::coeff(int i) const {
    if (zero_ || i < 0 || i > degree_) return field_->zero();
    return c_[static_cast<size_t>(i)];
}

UniPoly BinaryForm::dehomogenize() const {
    if (zero_) return UniPoly::zero(field_);
    return UniPoly(field_, c_);
}

int BinaryForm::v_multiplicity() const {
    if (zero_) throw ZeroForm("zero form");
    return degree_ - dehomogenize().degree();
}

bool BinaryForm::operator==(const BinaryForm& o) const {
    check_field(*this, o);
    if (zero_ || o.zero_) return zero_ == o.zero_;
    if (degree_ != o.degree_) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

BinaryForm BinaryForm::operator-() const {
    if (zero_) return *this;
    std::vector<FieldElement> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(-x);
    return BinaryForm(field_, degree_, std::move(r));
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
    check_field(*this, o);
    if (zero_) return o;
    if (o.zero_) return *this;
    if (degree_ != o.degree_)
        throw DegreeMismatch("adding forms of different degrees");
    std::vector<FieldElement> r(c_);
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + o.c_[i];
    return BinaryForm(field_, degree_, std::move(r));
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const { return *this + (-o); }

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    check_field(*this, o);
    if (zero_ || o.zero_) return zero(field_);
    int n = degree_ + o.degree_;
    std::vector<FieldElement> r(static_cast<size_t>(n + 1), field_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return BinaryForm(field_, n, std::move(r));
}

BinaryForm BinaryForm::scale(const FieldElement& s) const {
    if (zero_ || s.is_zero()) return zero(field_);
    std::vector<FieldElement> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(x * s);
    return BinaryForm(field_, degree_, std::move(r));
}

BinaryForm BinaryForm::pow(int e) const {
    if (e < 0) throw DegreeMismatch("negative power");
    BinaryForm r = constant(field_->one());
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

FieldElement BinaryForm::eval(const FieldElement& u, const FieldElement& v) const {
    if (zero_) return field_->zero();
    FieldElement acc = field_->zero();
    FieldElement vpow = field_->one();
    std::vector<FieldElement> us(static_cast<size_t>(degree_ + 1), field_->one());
    for (int i = 1; i <= degree_; ++i)
        us[static_cast<size_t>(i)] = us[static_cast<size_t>(i - 1)] * u;
    for (int i = degree_; i >= 0; --i) {
        acc = acc + c_[static_cast<size_t>(i)] * us[static_cast<size_t>(i)] * vpow;
        vpow = vpow * v;
    }
    return acc;
}

BinaryForm BinaryForm::derivative_u() const {
    if (zero_ || degree_ == 0) return zero(field_);
    std::vector<FieldElement> r(static_cast<size_t>(degree_), field_->zero());
    for (int i = 1; i <= degree_; ++i)
        r[static_cast<size_t>(i - 1)] = c_[static_cast<size_t>(i)] * field_->from_int(i);
    return BinaryForm(field_, degree_ - 1, std::move(r));
}

BinaryForm BinaryForm::derivative_v() const {
    if (zero_ || degree_ == 0) return zero(field_);
    std::vector<FieldElement> r(static_cast<size_t>(degree_), field_->zero());
    for (int i = 0; i < degree_; ++i)
        r[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)] * field_->from_int(degree_ - i);
    return BinaryForm(field_, degree_ - 1, std::move(r));
}

std::pair<FieldElement, BinaryForm> BinaryForm::monic() const {
    if (zero_) return {field_->one(), *this};
    int lead = degree_;
    while (c_[static_cast<size_t>(lead)].is_zero()) --lead;
    FieldElement unit = c_[static_cast<size_t>(lead)];
    return {unit, scale(inverse(unit))};
}

BinaryForm BinaryForm::embed_into(FieldPtr target) const {
    if (zero_) return zero(target);
    std::vector<FieldElement> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(embed(x, target));
    return BinaryForm(target, degree_, std::move(r));
}

std::string BinaryForm::str() const {
    if (zero_) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree_; i >= 0; --i) {
        const FieldElement& x = c_[static_cast<size_t>(i)];
        if (x.is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << x.str() << ")";
        if (i > 0) {
            out << "u";
            if (i > 1) out << "^" << i;
        }
        if (i < degree_) {
            out << "v";
            if (degree_ - i > 1) out << "^" << (degree_ - i);
        }
    }
    return out.str();
}

BinaryForm gcd(const BinaryForm& a, const BinaryForm& b) {
    check_field(a, b);
    if (a.is_zero() && b.is_zero()) throw ZeroForm("gcd(0, 0) is undefined");
    if (a.is_zero()) return b.monic().second;
    if (b.is_zero()) return a.monic().second;
    int vm = std::min(a.v_multiplicity(), b.v_multiplicity());
    UniPoly g = gcd(a.dehomogenize(), b.dehomogenize());
    return BinaryForm::homogenize(g, g.degree() + vm);
}

std::optional<BinaryForm> try_divide(const BinaryForm& a, const BinaryForm& b) {
    check_field(a, b);
    if (b.is_zero()) throw DivisionByZero("division by the zero form");
    if (a.is_zero()) return BinaryForm::zero(a.field());
    if (a.v_multiplicity() < b.v_multiplicity()) return std::nullopt;
    auto q = try_divide(a.dehomogenize(), b.dehomogenize());
    if (!q) return std::nullopt;
    return BinaryForm::homogenize(
        *q, q->degree() + a.v_multiplicity() - b.v_multiplicity());
}

BinaryForm compose_binary(const BinaryForm& h, const BinaryForm& U, const BinaryForm& V) {
    if (h.is_zero()) return BinaryForm::zero(U.field());
    if (U.is_zero() && V.is_zero()) throw ZeroVector("composition with the zero pair");
    if (!U.is_zero() && !V.is_zero() && U.degree() != V.degree())
        throw DegreeMismatch("composition components of unequal degree");
    FieldPtr F = U.field();
    int n = h.degree();
    // powers of U and V
    std::vector<BinaryForm> up(static_cast<size_t>(n + 1), BinaryForm::constant(F->one()));
    std::vector<BinaryForm> vp(static_cast<size_t>(n + 1), BinaryForm::constant(F->one()));
    for (int i = 1; i <= n; ++i) {
        up[static_cast<size_t>(i)] = up[static_cast<size_t>(i - 1)] * U;
        vp[static_cast<size_t>(i)] = vp[static_cast<size_t>(i - 1)] * V;
    }
    BinaryForm acc = BinaryForm::zero(F);
    bool acc_set = false;
    for (int i = 0; i <= n; ++i) {
        FieldElement c = embed(h.coeff(i), F);
        if (c.is_zero()) continue;
        BinaryForm term =
            (up[static_cast<size_t>(i)] * vp[static_cast<size_t>(n - i)]).scale(c);
        if (term.is_zero()) continue;
        if (!acc_set) {
            acc = term;
            acc_set = true;
        } else {
            acc = acc + term;
        }
    }
    return acc;
}

BinaryForm BinarySquarefreeDecomposition::reconstruct() const {
    BinaryForm r = BinaryForm::constant(unit);
    for (const auto& [s, m] : factors) r = r * s.pow(m);
    return r;
}

BinarySquarefreeDecomposition squarefree_decomposition(const BinaryForm& h) {
    if (h.is_zero()) throw ZeroForm("squarefree decomposition of the zero form");
    FieldPtr F = h.field();
    UniPoly u = h.dehomogenize();
    int vm = h.v_multiplicity();
    SquarefreeDecomposition sfd = squarefree_decomposition(u);
    BinarySquarefreeDecomposition out;
    out.unit = sfd.unit;
    std::vector<std::pair<BinaryForm, int>> raw;
    for (const auto& [s, m] : sfd.factors)
        raw.emplace_back(BinaryForm::homogenize(s, s.degree()), m);
    if (vm > 0) raw.emplace_back(BinaryForm::v(F), vm);
    std::sort(raw.begin(), raw.end(),
              [](const auto& x, const auto& y) { return x.second < y.second; });
    for (auto& [s, m] : raw) {
        if (!out.factors.empty() && out.factors.back().second == m)
            out.factors.back().first = out.factors.back().first * s;
        else
            out.factors.emplace_back(std::move(s), m);
    }
    return out;
}

BinarySqrt binary_sqrt(const BinaryForm& h) {
    if (h.is_zero()) throw ZeroForm("square root of the zero form");
    BinarySquarefreeDecomposition d = squarefree_decomposition(h);
    FieldPtr F = h.field();
    BinaryForm s = BinaryForm::constant(F->one());
    for (const auto& [fac, m] : d.factors) {
        if (m % 2 != 0)
            throw NotASquareUpToUnit("odd multiplicity in squarefree decomposition");
        s = s * fac.pow(m / 2);
    }
    BinarySqrt out{s, d.unit, is_square(d.unit)};
    if (out.unit_is_square && !d.unit.is_one()) {
        out.root = s.scale(sqrt(d.unit));
        out.unit = F->one();
    }
    return out;
}

std::vector<std::pair<BinaryForm, int>> distinct_degree_split(const BinaryForm& h) {
    if (h.is_zero()) throw ZeroForm("splitting the zero form");
    FieldPtr F = h.field();
    int vm = h.v_multiplicity();
    std::vector<std::pair<BinaryForm, int>> out;
    for (const auto& [prod, e] : distinct_degree_split(h.dehomogenize()))
        out.emplace_back(BinaryForm::homogenize(prod, prod.degree()), e);
    if (vm > 0) {
        // merge the (1:0) factor into the linear part
        bool merged = false;
        for (auto& [prod, e] : out)
            if (e == 1) {
                prod = prod * BinaryForm::v(F);
                merged = true;
                break;
            }
        if (!merged) out.emplace_back(BinaryForm::v(F), 1);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

std::vector<ProjectiveRoot> binary_roots(const BinaryForm& h, int max_extension) {
    if (h.is_zero()) throw ZeroForm("roots of the zero form");
    if (max_extension < 1) throw DegreeMismatch("max_extension must be >= 1");
    FieldPtr F = h.field();
    std::vector<ProjectiveRoot> out;

    int vm = h.v_multiplicity();
    if (vm > 0)
        out.push_back(ProjectiveRoot{F->one(), F->zero(), 1, vm});

    SquarefreeDecomposition sfd = squarefree_decomposition(h.dehomogenize());
    std::map<int, FieldPtr> ext_cache;  // one extension per degree per call
    auto extension = [&](int e) -> FieldPtr {
        if (e == 1) return F;
        auto it = ext_cache.find(e);
        if (it != ext_cache.end()) return it->second;
        FieldPtr E = F->extend(e);
        ext_cache.emplace(e, E);
        return E;
    };

    for (const auto& [s, mult] : sfd.factors) {
        for (const auto& [prod, e] : distinct_degree_split(s)) {
            if (e > max_extension) continue;
            FieldPtr E = extension(e);
            UniPoly lifted = prod.embed_into(E);
            for (const FieldElement& r : roots_in_field(lifted))
                out.push_back(ProjectiveRoot{r, E->one(), e, mult});
        }
    }
    return out;
}

}  // namespace dp2

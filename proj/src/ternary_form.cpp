#include "dp2/ternary_form.hpp"

#include <algorithm>
#include <sstream>

namespace dp2 {

namespace {

void check_field(const TernaryForm& a, const TernaryForm& b) {
    if (!a.field()->same_arithmetic(b.field()))
        throw FieldMismatch("forms over different fields");
}

}  // namespace

TernaryForm TernaryForm::zero(FieldPtr F, int degree) { return TernaryForm(F, degree); }

TernaryForm TernaryForm::monomial(const FieldElement& c, Exponents e) {
    TernaryForm r(c.field(), e[0] + e[1] + e[2]);
    r.set_coeff(e, c);
    return r;
}

TernaryForm TernaryForm::from_terms(
    FieldPtr F, int degree, const std::vector<std::pair<int64_t, Exponents>>& terms) {
    TernaryForm r(F, degree);
    for (const auto& [c, e] : terms)
        r.set_coeff(e, r.coeff(e) + F->from_int(c));
    return r;
}

FieldElement TernaryForm::coeff(Exponents e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_->zero() : it->second;
}

void TernaryForm::set_coeff(Exponents e, const FieldElement& c) {
    if (e[0] + e[1] + e[2] != degree_)
        throw DegreeMismatch("exponent triple does not sum to the degree");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

bool TernaryForm::operator==(const TernaryForm& o) const {
    check_field(*this, o);
    if (is_zero() && o.is_zero()) return true;
    if (degree_ != o.degree_ || terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [e, c] : terms_) {
        if (it->first != e || !(it->second == c)) return false;
        ++it;
    }
    return true;
}

TernaryForm TernaryForm::operator-() const {
    TernaryForm r(field_, degree_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

TernaryForm TernaryForm::operator+(const TernaryForm& o) const {
    check_field(*this, o);
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (degree_ != o.degree_) throw DegreeMismatch("adding forms of different degrees");
    TernaryForm r = *this;
    for (const auto& [e, c] : o.terms_) r.set_coeff(e, r.coeff(e) + c);
    return r;
}

TernaryForm TernaryForm::operator-(const TernaryForm& o) const { return *this + (-o); }

TernaryForm TernaryForm::operator*(const TernaryForm& o) const {
    check_field(*this, o);
    TernaryForm r(field_, degree_ + o.degree_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
            r.set_coeff(e, r.coeff(e) + c1 * c2);
        }
    return r;
}

TernaryForm TernaryForm::scale(const FieldElement& s) const {
    TernaryForm r(field_, degree_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
    return r;
}

TernaryForm TernaryForm::pow(int e) const {
    TernaryForm r = monomial(field_->one(), {0, 0, 0});
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

FieldElement TernaryForm::evaluate(const FieldElement& x, const FieldElement& y,
                                   const FieldElement& z) const {
    if (x.is_zero() && y.is_zero() && z.is_zero())
        throw ZeroVector("evaluation at the zero vector");
    std::array<std::vector<FieldElement>, 3> pows;
    std::array<FieldElement, 3> vals{x, y, z};
    for (int v = 0; v < 3; ++v) {
        pows[static_cast<size_t>(v)].assign(static_cast<size_t>(degree_ + 1),
                                            field_->one());
        for (int i = 1; i <= degree_; ++i)
            pows[static_cast<size_t>(v)][static_cast<size_t>(i)] =
                pows[static_cast<size_t>(v)][static_cast<size_t>(i - 1)] *
                vals[static_cast<size_t>(v)];
    }
    FieldElement acc = field_->zero();
    for (const auto& [e, c] : terms_)
        acc = acc + c * pows[0][static_cast<size_t>(e[0])] *
                        pows[1][static_cast<size_t>(e[1])] *
                        pows[2][static_cast<size_t>(e[2])];
    return acc;
}

TernaryForm TernaryForm::partial(int var) const {
    TernaryForm r(field_, std::max(degree_ - 1, 0));
    for (const auto& [e, c] : terms_) {
        int exp = e[static_cast<size_t>(var)];
        if (exp == 0) continue;
        FieldElement nc = c * field_->from_int(exp);
        if (nc.is_zero()) continue;
        Exponents ne = e;
        ne[static_cast<size_t>(var)] -= 1;
        r.set_coeff(ne, r.coeff(ne) + nc);
    }
    return r;
}

TernaryForm TernaryForm::substitute_linear(const MatFq& M) const {
    // images of the variables as linear forms
    std::array<TernaryForm, 3> img;
    for (int v = 0; v < 3; ++v) {
        TernaryForm l(field_, 1);
        for (int j = 0; j < 3; ++j) {
            Exponents e{0, 0, 0};
            e[static_cast<size_t>(j)] = 1;
            l.set_coeff(e, l.coeff(e) + M.at(v, j));
        }
        img[static_cast<size_t>(v)] = l;
    }
    TernaryForm acc(field_, degree_);
    for (const auto& [e, c] : terms_) {
        TernaryForm term = img[0].pow(e[0]) * img[1].pow(e[1]) * img[2].pow(e[2]);
        acc = acc + term.scale(c);
    }
    return acc;
}

std::vector<BinaryForm> TernaryForm::collect(int var) const {
    int rem0 = var == 0 ? 1 : 0;  // u = first remaining variable in x,y,z order
    std::vector<std::vector<FieldElement>> slices;
    slices.resize(static_cast<size_t>(degree_ + 1));
    for (int i = 0; i <= degree_; ++i)
        slices[static_cast<size_t>(i)].assign(static_cast<size_t>(degree_ - i + 1),
                                              field_->zero());
    for (const auto& [e, c] : terms_) {
        int vi = e[static_cast<size_t>(var)];
        int ui = e[static_cast<size_t>(rem0)];
        slices[static_cast<size_t>(vi)][static_cast<size_t>(ui)] = c;
    }
    std::vector<BinaryForm> out;
    out.reserve(slices.size());
    for (int i = 0; i <= degree_; ++i)
        out.push_back(BinaryForm(field_, degree_ - i, std::move(slices[static_cast<size_t>(i)])));
    return out;
}

TernaryForm TernaryForm::embed_into(FieldPtr target) const {
    TernaryForm r(target, degree_);
    for (const auto& [e, c] : terms_) r.terms_[e] = embed(c, target);
    return r;
}

std::string TernaryForm::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    const char* names[3] = {"x", "y", "z"};
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        out << "(" << it->second.str() << ")";
        for (int v = 0; v < 3; ++v) {
            int e = it->first[static_cast<size_t>(v)];
            if (e == 0) continue;
            out << names[v];
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

BinaryForm compose(const TernaryForm& h, const BinaryForm& tx, const BinaryForm& ty,
                   const BinaryForm& tz) {
    FieldPtr F = tx.field() ? tx.field() : (ty.field() ? ty.field() : tz.field());
    if (tx.is_zero() && ty.is_zero() && tz.is_zero())
        throw ZeroVector("composition with the zero triple");
    int e = -1;
    for (const BinaryForm* t : {&tx, &ty, &tz}) {
        if (t->is_zero()) continue;
        if (e < 0)
            e = t->degree();
        else if (t->degree() != e)
            throw DegreeMismatch("composition components of unequal degree");
    }
    if (h.is_zero()) return BinaryForm::zero(F);

    int n = h.degree();
    std::array<std::vector<BinaryForm>, 3> pows;
    std::array<const BinaryForm*, 3> comps{&tx, &ty, &tz};
    for (int v = 0; v < 3; ++v) {
        pows[static_cast<size_t>(v)].assign(static_cast<size_t>(n + 1),
                                            BinaryForm::constant(F->one()));
        for (int i = 1; i <= n; ++i)
            pows[static_cast<size_t>(v)][static_cast<size_t>(i)] =
                pows[static_cast<size_t>(v)][static_cast<size_t>(i - 1)] *
                *comps[static_cast<size_t>(v)];
    }
    BinaryForm acc = BinaryForm::zero(F);
    bool acc_set = false;
    for (const auto& [exps, c] : h.terms()) {
        BinaryForm term = pows[0][static_cast<size_t>(exps[0])] *
                          pows[1][static_cast<size_t>(exps[1])] *
                          pows[2][static_cast<size_t>(exps[2])];
        term = term.scale(embed(c, F));
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

namespace {

// Bareiss fraction-free determinant over F_q[u, v]; entries homogeneous.
BinaryForm bareiss_det(std::vector<std::vector<BinaryForm>>& m, FieldPtr F) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return BinaryForm::constant(F->one());
    BinaryForm prev = BinaryForm::constant(F->one());
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (!m[static_cast<size_t>(r)][static_cast<size_t>(k)].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return BinaryForm::zero(F);
        if (pivot != k) {
            std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(k)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BinaryForm num =
                    m[static_cast<size_t>(k)][static_cast<size_t>(k)] *
                        m[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                    m[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                        m[static_cast<size_t>(k)][static_cast<size_t>(j)];
                auto q = try_divide(num, prev);
                if (!q) throw Error("Bareiss division failed");  // unreachable
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = *q;
            }
            m[static_cast<size_t>(i)][static_cast<size_t>(k)] = BinaryForm::zero(F);
        }
        prev = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    BinaryForm det = m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    return sign < 0 ? -det : det;
}

}  // namespace

BinaryForm resultant(const TernaryForm& a, const TernaryForm& b, int var) {
    check_field(a, b);
    if (a.is_zero() || b.is_zero()) throw ZeroForm("resultant with the zero form");
    FieldPtr F = a.field();
    std::vector<BinaryForm> ca = a.collect(var);
    std::vector<BinaryForm> cb = b.collect(var);
    auto vdeg = [](const std::vector<BinaryForm>& c) {
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            if (!c[static_cast<size_t>(i)].is_zero()) return i;
        return -1;
    };
    int da = vdeg(ca), db = vdeg(cb);
    if (da <= 0 || db <= 0)
        throw EliminationDegenerate("form has degree 0 in the eliminated variable");

    // Sylvester matrix: db rows of a-coefficients, da rows of b-coefficients;
    // entries are binary forms in the remaining variables, the determinant is
    // homogeneous by the grading.
    const int n = da + db;
    std::vector<std::vector<BinaryForm>> m(
        static_cast<size_t>(n),
        std::vector<BinaryForm>(static_cast<size_t>(n), BinaryForm::zero(F)));
    for (int r = 0; r < db; ++r)
        for (int i = 0; i <= da; ++i)
            m[static_cast<size_t>(r)][static_cast<size_t>(r + i)] =
                ca[static_cast<size_t>(da - i)];
    for (int r = 0; r < da; ++r)
        for (int i = 0; i <= db; ++i)
            m[static_cast<size_t>(db + r)][static_cast<size_t>(r + i)] =
                cb[static_cast<size_t>(db - i)];
    return bareiss_det(m, F);
}

WeightedForm WeightedForm::surface_equation(const TernaryForm& f, const TernaryForm& g) {
    FieldPtr F = g.field();
    WeightedForm r(F, 4);
    r.set_coeff({0, 0, 0, 2}, F->one());
    for (const auto& [e, c] : f.terms()) r.set_coeff({e[0], e[1], e[2], 1}, c);
    for (const auto& [e, c] : g.terms()) r.set_coeff({e[0], e[1], e[2], 0}, -c);
    return r;
}

void WeightedForm::set_coeff(Exponents e, const FieldElement& c) {
    if (e[0] + e[1] + e[2] + 2 * e[3] != degree_)
        throw DegreeMismatch("exponents do not match the weighted degree");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

FieldElement WeightedForm::evaluate(const FieldElement& x, const FieldElement& y,
                                    const FieldElement& z, const FieldElement& w) const {
    if (x.is_zero() && y.is_zero() && z.is_zero())
        throw ZeroVector("evaluation with (x, y, z) = 0");
    FieldElement acc = field_->zero();
    for (const auto& [e, c] : terms_) {
        FieldElement t = c;
        for (int i = 0; i < e[0]; ++i) t = t * x;
        for (int i = 0; i < e[1]; ++i) t = t * y;
        for (int i = 0; i < e[2]; ++i) t = t * z;
        for (int i = 0; i < e[3]; ++i) t = t * w;
        acc = acc + t;
    }
    return acc;
}

}  // namespace dp2

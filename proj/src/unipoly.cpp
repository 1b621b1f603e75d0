#include "dp2/unipoly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace dp2 {

namespace {

void trim(std::vector<FieldElement>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

void check_field(const UniPoly& a, const UniPoly& b) {
    if (!a.field()->same_arithmetic(b.field()))
        throw FieldMismatch("polynomials over different fields");
}

}  // namespace

UniPoly::UniPoly(FieldPtr F, std::vector<FieldElement> coeffs)
    : field_(F), c_(std::move(coeffs)) {
    trim(c_);
}

UniPoly UniPoly::constant(const FieldElement& c) {
    return UniPoly(c.field(), {c});
}

UniPoly UniPoly::x(FieldPtr F) {
    return UniPoly(F, {F->zero(), F->one()});
}

UniPoly UniPoly::from_int_coeffs(FieldPtr F, const std::vector<int64_t>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (int64_t v : coeffs) c.push_back(F->from_int(v));
    return UniPoly(F, std::move(c));
}

FieldElement UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return field_->zero();
    return c_[static_cast<size_t>(i)];
}

const FieldElement& UniPoly::lead() const {
    if (c_.empty()) throw ZeroForm("zero polynomial has no leading coefficient");
    return c_.back();
}

bool UniPoly::operator==(const UniPoly& o) const {
    check_field(*this, o);
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

UniPoly UniPoly::operator-() const {
    std::vector<FieldElement> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(-x);
    return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    check_field(*this, o);
    std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), field_->zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    check_field(*this, o);
    if (is_zero() || o.is_zero()) return zero(field_);
    std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, field_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::scale(const FieldElement& s) const {
    if (s.is_zero()) return zero(field_);
    std::vector<FieldElement> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(x * s);
    return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::shift(int n) const {
    if (is_zero() || n == 0) return *this;
    std::vector<FieldElement> r(static_cast<size_t>(n), field_->zero());
    r.insert(r.end(), c_.begin(), c_.end());
    return UniPoly(field_, std::move(r));
}

FieldElement UniPoly::eval(const FieldElement& x) const {
    FieldElement acc = field_->zero();
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[static_cast<size_t>(i)];
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return zero(field_);
    std::vector<FieldElement> r;
    r.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r.push_back(c_[i] * field_->from_int(static_cast<int64_t>(i)));
    return UniPoly(field_, std::move(r));
}

std::pair<FieldElement, UniPoly> UniPoly::monic() const {
    if (is_zero()) return {field_->one(), *this};
    FieldElement u = lead();
    return {u, scale(inverse(u))};
}

UniPoly UniPoly::embed_into(FieldPtr target) const {
    std::vector<FieldElement> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(embed(x, target));
    return UniPoly(target, std::move(r));
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const FieldElement& x = c_[static_cast<size_t>(i)];
        if (x.is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << x.str() << ")";
        if (i >= 1) {
            out << "X";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    check_field(a, b);
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    FieldPtr F = a.field();
    if (a.degree() < b.degree()) return {UniPoly::zero(F), a};
    FieldElement linv = inverse(b.lead());
    std::vector<FieldElement> rem(a.coeffs());
    std::vector<FieldElement> quo(static_cast<size_t>(a.degree() - b.degree() + 1),
                                  F->zero());
    int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        FieldElement f = rem[static_cast<size_t>(i)] * linv;
        if (f.is_zero()) continue;
        quo[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] =
                rem[static_cast<size_t>(i - db + j)] - f * b.coeff(j);
    }
    return {UniPoly(F, std::move(quo)), UniPoly(F, std::move(rem))};
}

std::optional<UniPoly> try_divide(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    check_field(a, b);
    if (a.is_zero() && b.is_zero()) throw ZeroForm("gcd(0, 0) is undefined");
    UniPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        UniPoly r2 = divmod(r0, r1).second;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.monic().second;
}

UniPoly pow_mod(const UniPoly& base, int64_t e, const UniPoly& m) {
    UniPoly r = UniPoly::constant(base.field()->one());
    UniPoly b = divmod(base, m).second;
    while (e) {
        if (e & 1) r = divmod(r * b, m).second;
        b = divmod(b * b, m).second;
        e >>= 1;
    }
    return r;
}

UniPoly pth_root_poly(const UniPoly& a) {
    FieldPtr F = a.field();
    const int64_t p = F->p();
    if (a.is_zero()) return a;
    std::vector<FieldElement> r;
    r.reserve(static_cast<size_t>(a.degree() / p + 1));
    for (int i = 0; i <= a.degree(); ++i) {
        if (i % p == 0) {
            r.push_back(pth_root(a.coeff(i)));
        } else if (!a.coeff(i).is_zero()) {
            throw ZeroForm("polynomial is not a p-th power");
        }
    }
    return UniPoly(F, std::move(r));
}

namespace {

// Musser loop plus p-th-power peeling; factors merged per multiplicity.
void sfd_rec(const UniPoly& f, int mult_scale,
             std::vector<std::pair<UniPoly, int>>& out) {
    if (f.is_constant()) return;
    UniPoly fp = f.derivative();
    if (fp.is_zero()) {
        sfd_rec(pth_root_poly(f), mult_scale * static_cast<int>(f.field()->p()), out);
        return;
    }
    UniPoly c = gcd(f, fp);
    UniPoly w = *try_divide(f, c);
    int i = 1;
    while (!w.is_constant()) {
        UniPoly y = gcd(w, c);
        UniPoly z = *try_divide(w, y);
        if (!z.is_constant()) out.emplace_back(z, i * mult_scale);
        w = std::move(y);
        c = *try_divide(c, w);
        ++i;
    }
    if (!c.is_constant())
        sfd_rec(pth_root_poly(c), mult_scale * static_cast<int>(f.field()->p()), out);
}

}  // namespace

SquarefreeDecomposition squarefree_decomposition(const UniPoly& a) {
    if (a.is_zero()) throw ZeroForm("squarefree decomposition of zero");
    auto [unit, f] = a.monic();
    SquarefreeDecomposition out;
    out.unit = unit;
    std::vector<std::pair<UniPoly, int>> raw;
    sfd_rec(f, 1, raw);
    // merge equal multiplicities (factors are pairwise coprime), sort by mult
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

std::vector<std::pair<UniPoly, int>> distinct_degree_split(const UniPoly& a) {
    FieldPtr F = a.field();
    const int64_t q = F->q();
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly rest = a.monic().second;
    UniPoly h = UniPoly::x(F);
    int e = 0;
    while (rest.degree() > 0) {
        ++e;
        if (rest.degree() < 2 * e) {
            out.emplace_back(rest, rest.degree());  // remainder is irreducible
            break;
        }
        h = pow_mod(h, q, rest);  // X^{q^e} mod rest
        UniPoly g = gcd(rest, h - UniPoly::x(F));
        if (g.degree() > 0) {
            out.emplace_back(g, e);
            rest = *try_divide(rest, g);
            h = divmod(h, rest).second;
        }
    }
    return out;
}

namespace {

void roots_rec(const UniPoly& f, std::vector<FieldElement>& out) {
    FieldPtr F = f.field();
    if (f.degree() <= 0) return;
    if (f.degree() == 1) {
        out.push_back(-f.coeff(0) / f.coeff(1));
        return;
    }
    if (F->q() <= 4096) {
        for (int64_t i = 0; i < F->q(); ++i) {
            FieldElement x = F->element_at(i);
            if (f.eval(x).is_zero()) out.push_back(x);
        }
        return;
    }
    // split by quadratic characters of shifted roots
    UniPoly g = f;
    if (g.eval(F->zero()).is_zero()) {
        out.push_back(F->zero());
        g = *try_divide(g, UniPoly::x(F));
        if (g.degree() == 0) return;
        if (g.degree() == 1) {
            roots_rec(g, out);
            return;
        }
    }
    const int64_t half = (F->q() - 1) / 2;
    for (int64_t t = 0; t < 512; ++t) {
        FieldElement a = F->element_at(t);
        UniPoly shifted = UniPoly(F, {a, F->one()});  // X + a
        UniPoly chi = pow_mod(shifted, half, g) - UniPoly::constant(F->one());
        if (chi.is_zero()) continue;
        UniPoly h = gcd(g, chi);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            roots_rec(h, out);
            roots_rec(*try_divide(g, h), out);
            return;
        }
    }
    throw Error("root splitting did not converge");  // practically unreachable
}

}  // namespace

std::vector<FieldElement> roots_in_field(const UniPoly& a) {
    if (a.is_zero()) throw ZeroForm("roots of the zero polynomial");
    std::vector<FieldElement> out;
    roots_rec(a.monic().second, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dp2

#include "dp2/field.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <sstream>

#include "dp2/unipoly.hpp"

namespace dp2 {

namespace {

int64_t reduce_mod(int64_t x, int64_t p) {
    int64_t r = x % p;
    return r < 0 ? r + p : r;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- dense polynomials over F_p as int64 vectors (low-to-high) ---

using PVec = std::vector<int64_t>;

int pdeg(const PVec& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

PVec ptrim(PVec a) {
    a.resize(static_cast<size_t>(pdeg(a) + 1));
    return a;
}

PVec pmul(const PVec& a, const PVec& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    PVec c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return ptrim(std::move(c));
}

int64_t inv_mod(int64_t a, int64_t p) {
    // Fermat; p prime, a != 0 mod p
    int64_t r = 1, b = reduce_mod(a, p), e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// remainder of a mod b, b nonzero
PVec pmod(PVec a, const PVec& b, int64_t p) {
    int db = pdeg(b);
    int64_t linv = inv_mod(b[static_cast<size_t>(db)], p);
    int da = pdeg(a);
    while (da >= db) {
        int64_t f = a[static_cast<size_t>(da)] * linv % p;
        if (f != 0)
            for (int i = 0; i <= db; ++i) {
                size_t idx = static_cast<size_t>(da - db + i);
                a[idx] = reduce_mod(a[idx] - f * b[static_cast<size_t>(i)], p);
            }
        da = pdeg(a);
    }
    return ptrim(std::move(a));
}

PVec pgcd(PVec a, PVec b, int64_t p) {
    a = ptrim(std::move(a));
    b = ptrim(std::move(b));
    while (!b.empty()) {
        PVec r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// base^e mod m over F_p
PVec ppowmod(PVec base, int64_t e, const PVec& m, int64_t p) {
    PVec r{1};
    base = pmod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = pmod(pmul(r, base, p), m, p);
        base = pmod(pmul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

// monic degree-k modulus irreducible over F_p: no factor of degree < k,
// detected by gcd with X^{p^i} - X for i = 1..k-1
bool modulus_irreducible(const PVec& m, int64_t p) {
    int k = pdeg(m);
    if (k == 1) return true;
    PVec w{0, 1};  // X
    for (int i = 1; i < k; ++i) {
        w = ppowmod(std::move(w), p, m, p);
        PVec diff = w;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = reduce_mod(diff[1] - 1, p);
        if (pdeg(pgcd(diff, m, p)) != 0) return false;
    }
    return true;
}

struct InternEntry {
    std::unique_ptr<FieldDescriptor> desc;
};

}  // namespace

struct FieldRegistry {
    std::mutex mu;
    std::vector<InternEntry> pool;

    static FieldRegistry& instance() {
        static FieldRegistry* reg = new FieldRegistry();  // immortal
        return *reg;
    }

    static bool equivalent(const FieldDescriptor& a, const FieldDescriptor& b) {
        return a.p() == b.p() && a.k() == b.k() && a.modulus() == b.modulus() &&
               a.base() == b.base() &&
               std::equal(a.base_generator_image().coeffs().begin(),
                          a.base_generator_image().coeffs().end(),
                          b.base_generator_image().coeffs().begin(),
                          b.base_generator_image().coeffs().end());
    }

    FieldPtr intern(std::unique_ptr<FieldDescriptor> d);

    static FieldPtr build(int64_t p, int k, std::vector<int64_t> modulus,
                          FieldPtr base, Coeffs base_image);
};

FieldPtr FieldRegistry::intern(std::unique_ptr<FieldDescriptor> d) {
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& e : pool)
        if (e.desc->p() == d->p() && e.desc->k() == d->k() &&
            e.desc->modulus() == d->modulus() && e.desc->base() == d->base() &&
            e.desc->base_image_ == d->base_image_)
            return e.desc.get();
    pool.push_back(InternEntry{std::move(d)});
    return pool.back().desc.get();
}

FieldPtr FieldRegistry::build(int64_t p, int k, std::vector<int64_t> modulus,
                              FieldPtr base, Coeffs base_image) {
    if (p == 2) throw CharTwo("characteristic 2 is not supported");
    if (!is_prime(p)) throw InvalidField("p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw InvalidField("extension degree must be >= 1");

    // q = p^k with overflow guard
    int64_t q = 1;
    for (int i = 0; i < k; ++i) {
        if (q > (int64_t{1} << 62) / p) throw InvalidField("field too large");
        q *= p;
    }

    if (static_cast<int>(modulus.size()) != k + 1)
        throw InvalidField("modulus must have degree k");
    for (auto& c : modulus) c = reduce_mod(c, p);
    if (modulus[static_cast<size_t>(k)] != 1)
        throw InvalidField("modulus must be monic");
    if (!modulus_irreducible(modulus, p))
        throw InvalidField("modulus is reducible");

    auto d = std::unique_ptr<FieldDescriptor>(new FieldDescriptor());
    d->p_ = p;
    d->k_ = k;
    d->q_ = q;
    d->modulus_ = std::move(modulus);
    d->base_ = base;
    d->base_image_ = std::move(base_image);
    FieldPtr interned = FieldRegistry::instance().intern(std::move(d));
    return interned;
}

// ---------------------------------------------------------------- elements

FieldElement::FieldElement(FieldPtr field, Coeffs coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](int64_t c) { return c == 0; });
}

bool FieldElement::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](int64_t c) { return c == 0; });
}

int64_t FieldElement::lex_index() const {
    int64_t n = 0;
    for (int64_t c : coeffs_) n = n * field_->p() + c;
    return n;
}

static void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() == b.field()) return;
    if (a.field() && b.field() && a.field()->same_arithmetic(b.field())) return;
    throw FieldMismatch("operands live in different fields");
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_same_field(*this, o);
    return coeffs_ == o.coeffs_;
}

bool FieldElement::operator<(const FieldElement& o) const {
    check_same_field(*this, o);
    return std::lexicographical_compare(coeffs_.begin(), coeffs_.end(),
                                        o.coeffs_.begin(), o.coeffs_.end());
}

FieldElement FieldElement::operator-() const {
    Coeffs r = coeffs_;
    int64_t p = field_->p();
    for (auto& c : r) c = c == 0 ? 0 : p - c;
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(*this, o);
    Coeffs r = coeffs_;
    int64_t p = field_->p();
    for (size_t i = 0; i < r.size(); ++i) {
        r[i] += o.coeffs_[i];
        if (r[i] >= p) r[i] -= p;
    }
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(*this, o);
    Coeffs r = coeffs_;
    int64_t p = field_->p();
    for (size_t i = 0; i < r.size(); ++i) {
        r[i] -= o.coeffs_[i];
        if (r[i] < 0) r[i] += p;
    }
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(*this, o);
    const int k = field_->k();
    const int64_t p = field_->p();
    if (k == 1)
        return FieldElement(field_, Coeffs{coeffs_[0] * o.coeffs_[0] % p});

    boost::container::small_vector<int64_t, 8> prod(static_cast<size_t>(2 * k - 1), 0);
    for (int i = 0; i < k; ++i) {
        if (coeffs_[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < k; ++j)
            prod[static_cast<size_t>(i + j)] =
                (prod[static_cast<size_t>(i + j)] +
                 coeffs_[static_cast<size_t>(i)] * o.coeffs_[static_cast<size_t>(j)]) % p;
    }
    // reduce by the monic modulus
    const auto& m = field_->modulus();
    for (int i = 2 * k - 2; i >= k; --i) {
        int64_t f = prod[static_cast<size_t>(i)];
        if (f == 0) continue;
        prod[static_cast<size_t>(i)] = 0;
        for (int j = 0; j < k; ++j)
            prod[static_cast<size_t>(i - k + j)] = reduce_mod(
                prod[static_cast<size_t>(i - k + j)] - f * m[static_cast<size_t>(j)], p);
    }
    Coeffs r(prod.begin(), prod.begin() + k);
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * inverse(o);
}

std::string FieldElement::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = field_->k() - 1; i >= 0; --i) {
        int64_t c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!first) out << "+";
        first = false;
        if (i == 0 || c != 1) out << c;
        if (i >= 1) {
            if (c != 1) out << "*";
            out << "g";
            if (i > 1) out << "^" << i;
        }
    }
    if (first) out << "0";
    return out.str();
}

// ------------------------------------------------------------- descriptor

FieldPtr FieldDescriptor::prime(int64_t p) {
    return FieldRegistry::build(p, 1, {0, 1}, nullptr, {});
}

FieldPtr FieldDescriptor::make(int64_t p, int k, const std::vector<int64_t>& modulus) {
    return FieldRegistry::build(p, k, modulus, nullptr, {});
}

FieldPtr FieldDescriptor::f9() {
    return make(3, 2, {-1, -1, 1});  // T^2 - T - 1
}

FieldPtr FieldDescriptor::make_extension_of(FieldPtr base, int k,
                                            const std::vector<int64_t>& modulus,
                                            const Coeffs& base_image) {
    if (base == nullptr) throw InvalidField("extension needs a base field");
    if (k % base->k() != 0)
        throw InvalidField("extension degree is not a multiple of the base degree");
    FieldPtr target = FieldRegistry::build(base->p(), k, modulus, base, base_image);
    // the recorded image must be a root of the base modulus
    FieldElement img = target->element(base_image);
    FieldElement acc = target->zero();
    for (int i = base->k(); i >= 0; --i)
        acc = acc * img + target->from_int(base->modulus()[static_cast<size_t>(i)]);
    if (!acc.is_zero())
        throw InvalidField("recorded generator image is not a root of the base modulus");
    return target;
}

bool FieldDescriptor::same_arithmetic(FieldPtr other) const {
    if (other == this) return true;
    return other && p_ == other->p_ && k_ == other->k_ && modulus_ == other->modulus_;
}

const FieldElement& FieldDescriptor::base_generator_image() const {
    if (base_image_elem_.field() == nullptr)
        base_image_elem_ = FieldElement(this, base_image_);
    return base_image_elem_;
}

FieldElement FieldDescriptor::zero() const {
    return FieldElement(this, Coeffs(static_cast<size_t>(k_), 0));
}

FieldElement FieldDescriptor::one() const { return from_int(1); }

FieldElement FieldDescriptor::from_int(int64_t n) const {
    Coeffs c(static_cast<size_t>(k_), 0);
    c[0] = reduce_mod(n, p_);
    return FieldElement(this, std::move(c));
}

FieldElement FieldDescriptor::element(Coeffs coeffs) const {
    if (static_cast<int>(coeffs.size()) != k_)
        throw InvalidField("coefficient vector has wrong length");
    for (auto& c : coeffs) c = reduce_mod(c, p_);
    return FieldElement(this, std::move(coeffs));
}

FieldElement FieldDescriptor::generator() const {
    if (k_ == 1) return from_int(modulus_[0] == 0 ? 0 : p_ - modulus_[0]);
    Coeffs c(static_cast<size_t>(k_), 0);
    c[1] = 1;
    return FieldElement(this, std::move(c));
}

FieldElement FieldDescriptor::element_at(int64_t n) const {
    if (n < 0 || n >= q_) throw InvalidField("enumeration index out of range");
    Coeffs c(static_cast<size_t>(k_), 0);
    for (int i = k_ - 1; i >= 0; --i) {
        c[static_cast<size_t>(i)] = n % p_;
        n /= p_;
    }
    return FieldElement(this, std::move(c));
}

std::vector<FieldElement> FieldDescriptor::enumerate() const {
    if (q_ > 100'000'000) throw EnumerationTooLarge("field has too many elements to list");
    std::vector<FieldElement> out;
    out.reserve(static_cast<size_t>(q_));
    for (int64_t n = 0; n < q_; ++n) out.push_back(element_at(n));
    return out;
}

std::string FieldDescriptor::str() const {
    std::ostringstream out;
    out << "F_" << q_;
    if (k_ > 1) {
        out << "[";
        for (int i = k_; i >= 0; --i) {
            int64_t c = modulus_[static_cast<size_t>(i)];
            if (c == 0) continue;
            if (i != k_) out << "+";
            if (i == 0 || c != 1) out << c;
            if (i >= 1) {
                out << "T";
                if (i > 1) out << "^" << i;
            }
        }
        out << "]";
    }
    return out.str();
}

FieldPtr FieldDescriptor::extend(int m) const {
    if (m < 1) throw InvalidField("extension multiplier must be >= 1");
    if (m == 1) return this;
    const int n = k_ * m;

    // first monic irreducible of degree n over F_p in counting order
    PVec mod;
    for (int64_t idx = 0;; ++idx) {
        PVec cand(static_cast<size_t>(n + 1), 0);
        cand[static_cast<size_t>(n)] = 1;
        int64_t rest = idx;
        for (int i = 0; i < n && rest; ++i) {
            cand[static_cast<size_t>(i)] = rest % p_;
            rest /= p_;
        }
        if (rest) throw InvalidField("no irreducible modulus found");  // unreachable
        if (n >= 2 && cand[0] == 0) continue;
        if (modulus_irreducible(cand, p_)) {
            mod = std::move(cand);
            break;
        }
    }

    std::vector<int64_t> mod_vec(mod.begin(), mod.end());
    FieldPtr bare = FieldRegistry::build(p_, n, mod_vec, nullptr, {});

    // image of this field's generator: lex-least root of our modulus there
    UniPoly src_modulus = UniPoly::from_int_coeffs(bare, modulus_);
    std::vector<FieldElement> roots = roots_in_field(src_modulus);
    if (roots.empty()) throw InvalidField("modulus has no root in extension");  // unreachable
    FieldElement image = *std::min_element(roots.begin(), roots.end());

    return FieldRegistry::build(p_, n, mod_vec, this, image.coeffs());
}

// ------------------------------------------------------------- functions

FieldElement inverse(const FieldElement& a) {
    if (a.is_zero()) throw DivisionByZero("division by zero field element");
    FieldPtr F = a.field();
    const int64_t p = F->p();
    if (F->k() == 1)
        return FieldElement(F, Coeffs{inv_mod(a.coeff(0), p)});

    // extended Euclid in F_p[T]: u*a + v*modulus = gcd (a nonzero constant)
    PVec r0(F->modulus().begin(), F->modulus().end());
    PVec r1(a.coeffs().begin(), a.coeffs().end());
    r1 = ptrim(std::move(r1));
    PVec s0{}, s1{1};
    while (pdeg(r1) > 0) {
        // divide r0 by r1
        int d1 = pdeg(r1);
        int64_t linv = inv_mod(r1[static_cast<size_t>(d1)], p);
        PVec quo(static_cast<size_t>(std::max(pdeg(r0) - d1 + 1, 0)), 0);
        PVec rem = r0;
        int dr = pdeg(rem);
        while (dr >= d1) {
            int64_t f = rem[static_cast<size_t>(dr)] * linv % p;
            quo[static_cast<size_t>(dr - d1)] = f;
            for (int i = 0; i <= d1; ++i) {
                size_t idx = static_cast<size_t>(dr - d1 + i);
                rem[idx] = reduce_mod(rem[idx] - f * r1[static_cast<size_t>(i)], p);
            }
            dr = pdeg(rem);
        }
        rem = ptrim(std::move(rem));
        PVec qs = pmul(quo, s1, p);
        PVec s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()), 0);
        for (size_t i = 0; i < qs.size(); ++i) s2[i] = reduce_mod(s2[i] - qs[i], p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = ptrim(std::move(s2));
    }
    if (r1.empty()) throw DivisionByZero("element not invertible");  // unreachable in a field
    int64_t cinv = inv_mod(r1[0], p);
    Coeffs out(static_cast<size_t>(F->k()), 0);
    for (size_t i = 0; i < s1.size() && i < out.size(); ++i)
        out[i] = s1[i] * cinv % p;
    return FieldElement(F, std::move(out));
}

FieldElement pow(const FieldElement& a, int64_t e) {
    FieldPtr F = a.field();
    if (e < 0) return pow(inverse(a), -e);
    FieldElement r = F->one();
    FieldElement b = a;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FieldElement frobenius(const FieldElement& a, int64_t i) {
    if (i < 0) throw InvalidField("frobenius iterate must be >= 0");
    FieldPtr F = a.field();
    i %= F->k();
    if (i == 0) return a;
    int64_t e = 1;
    for (int64_t j = 0; j < i; ++j) e *= F->p();
    return pow(a, e);
}

FieldElement pth_root(const FieldElement& a) {
    return frobenius(a, a.field()->k() - 1);
}

bool is_square(const FieldElement& a) {
    if (a.is_zero()) return true;
    return pow(a, (a.field()->q() - 1) / 2).is_one();
}

namespace {

FieldElement canonical_sign(const FieldElement& s) {
    FieldElement t = -s;
    return t < s ? t : s;
}

FieldElement sqrt_tonelli_shanks(const FieldElement& a) {
    FieldPtr F = a.field();
    const int64_t q = F->q();
    int64_t t = q - 1;
    int s = 0;
    while (t % 2 == 0) {
        t /= 2;
        ++s;
    }
    // first nonresidue in enumeration order
    FieldElement n = F->zero();
    for (int64_t idx = 1; idx < q; ++idx) {
        n = F->element_at(idx);
        if (!is_square(n)) break;
    }
    FieldElement z = pow(n, t);
    FieldElement x = pow(a, (t + 1) / 2);
    FieldElement b = pow(a, t);
    int m = s;
    while (!b.is_one()) {
        FieldElement c = b;
        int i = 0;
        while (!c.is_one()) {
            c = c * c;
            ++i;
        }
        FieldElement g = z;
        for (int j = 0; j < m - i - 1; ++j) g = g * g;
        x = x * g;
        z = g * g;
        b = b * z;
        m = i;
    }
    return x;
}

}  // namespace

FieldElement sqrt(const FieldElement& a) {
    if (a.is_zero()) return a;
    if (!is_square(a)) throw NotASquare("element is not a square");
    FieldPtr F = a.field();
    if (F->q() <= 10'000) {
        for (int64_t idx = 0; idx < F->q(); ++idx) {
            FieldElement s = F->element_at(idx);
            if (s * s == a) return canonical_sign(s);
        }
        throw NotASquare("exhaustive search failed");  // unreachable
    }
    return canonical_sign(sqrt_tonelli_shanks(a));
}

FieldElement embed(const FieldElement& a, FieldPtr target) {
    FieldPtr S = a.field();
    if (S->same_arithmetic(target)) return FieldElement(target, a.coeffs());
    if (S->k() == 1 && S->p() == target->p()) return target->from_int(a.coeff(0));
    if (target->base() == nullptr)
        throw NoEmbeddingRecorded("no embedding recorded from " + S->str() + " to " +
                                  target->str());
    FieldElement in_base = embed(a, target->base());
    // Horner in the recorded generator image
    const FieldElement& g = target->base_generator_image();
    FieldElement acc = target->zero();
    for (int i = target->base()->k() - 1; i >= 0; --i)
        acc = acc * g + target->from_int(in_base.coeff(i));
    return acc;
}

}  // namespace dp2

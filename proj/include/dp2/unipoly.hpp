#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dp2/field.hpp"

namespace dp2 {

/// Dense univariate polynomial over F_q. Coefficient i belongs to X^i;
/// the zero polynomial has an empty coefficient vector and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    static UniPoly zero(FieldPtr F) { return UniPoly(F, {}); }
    static UniPoly constant(const FieldElement& c);
    static UniPoly x(FieldPtr F);
    UniPoly(FieldPtr F, std::vector<FieldElement> coeffs);
    /// Build from small integer coefficients (reduced mod p).
    static UniPoly from_int_coeffs(FieldPtr F, const std::vector<int64_t>& coeffs);

    FieldPtr field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    FieldElement coeff(int i) const;
    const FieldElement& lead() const;
    const std::vector<FieldElement>& coeffs() const { return c_; }

    bool operator==(const UniPoly& o) const;
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scale(const FieldElement& c) const;
    UniPoly shift(int n) const;  // * X^n

    FieldElement eval(const FieldElement& x) const;
    UniPoly derivative() const;
    /// (unit, monic poly); zero stays zero with unit 1.
    std::pair<FieldElement, UniPoly> monic() const;
    UniPoly embed_into(FieldPtr target) const;

    std::string str() const;

private:
    FieldPtr field_ = nullptr;
    std::vector<FieldElement> c_;  // trailing zeros trimmed
};

/// quotient, remainder with deg r < deg b. Throws DivisionByZero for b = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Exact quotient or nullopt when b does not divide a.
std::optional<UniPoly> try_divide(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) throws ZeroForm.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// base^e mod m.
UniPoly pow_mod(const UniPoly& base, int64_t e, const UniPoly& m);
/// Coefficient-wise p-th root of a polynomial in X^p. Throws ZeroForm
/// when some exponent is not divisible by p.
UniPoly pth_root_poly(const UniPoly& a);

/// Squarefree decomposition over the algebraic closure:
/// a = unit * prod S_i^{m_i}, the S_i monic, separable, pairwise coprime,
/// multiplicities strictly increasing. Characteristic-p aware (peels p-th
/// powers via inverse Frobenius on coefficients).
struct SquarefreeDecomposition {
    FieldElement unit;
    std::vector<std::pair<UniPoly, int>> factors;  // (monic separable, multiplicity)
};
SquarefreeDecomposition squarefree_decomposition(const UniPoly& a);

/// Splits a monic squarefree polynomial into products of its irreducible
/// factors grouped by degree: list of (product, degree of each factor in it).
std::vector<std::pair<UniPoly, int>> distinct_degree_split(const UniPoly& a);

/// All roots of `a` in its own coefficient field, without multiplicity.
/// Precondition: a squarefree and split over that field (as after
/// distinct_degree_split + lifting to F_{q^e}). Deterministic output order.
std::vector<FieldElement> roots_in_field(const UniPoly& a);

}  // namespace dp2

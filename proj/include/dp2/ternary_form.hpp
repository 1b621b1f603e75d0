#pragma once

#include <array>
#include <map>
#include <vector>

#include "dp2/binary_form.hpp"
#include "dp2/matrix.hpp"

namespace dp2 {

/// Homogeneous form in (x, y, z) over F_q, sparse: only nonzero coefficients
/// are stored, keyed by exponent triple. A zero form keeps its nominal degree.
class TernaryForm {
public:
    using Exponents = std::array<int, 3>;

    TernaryForm() = default;
    static TernaryForm zero(FieldPtr F, int degree);
    explicit TernaryForm(FieldPtr F, int degree) : field_(F), degree_(degree) {}
    /// Monomial c * x^e0 y^e1 z^e2.
    static TernaryForm monomial(const FieldElement& c, Exponents e);
    /// Convenience builder from (coeff, ex, ey, ez) tuples.
    static TernaryForm from_terms(FieldPtr F, int degree,
                                  const std::vector<std::pair<int64_t, Exponents>>& terms);

    FieldPtr field() const { return field_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, FieldElement>& terms() const { return terms_; }
    FieldElement coeff(Exponents e) const;

    void set_coeff(Exponents e, const FieldElement& c);

    bool operator==(const TernaryForm& o) const;
    bool operator!=(const TernaryForm& o) const { return !(*this == o); }

    TernaryForm operator-() const;
    TernaryForm operator+(const TernaryForm& o) const;
    TernaryForm operator-(const TernaryForm& o) const;
    TernaryForm operator*(const TernaryForm& o) const;
    TernaryForm scale(const FieldElement& s) const;
    TernaryForm pow(int e) const;

    /// Value at an affine representative; throws ZeroVector on (0,0,0).
    FieldElement evaluate(const FieldElement& x, const FieldElement& y,
                          const FieldElement& z) const;
    TernaryForm partial(int var) const;  // 0 = x, 1 = y, 2 = z
    /// h(M * (x,y,z)^T) for a 3x3 matrix M.
    TernaryForm substitute_linear(const MatFq& M) const;
    /// Coefficients as polynomials in `var`: entry i is the coefficient of
    /// var^i, a binary form in the remaining two variables (in x,y,z order).
    std::vector<BinaryForm> collect(int var) const;
    TernaryForm embed_into(FieldPtr target) const;

    std::string str() const;

private:
    FieldPtr field_ = nullptr;
    int degree_ = 0;
    std::map<Exponents, FieldElement> terms_;
};

/// h(theta_x, theta_y, theta_z) for binary forms of a common degree e:
/// a binary form of degree deg(h) * e. Coefficients of h are embedded into
/// the field of the triple when necessary.
BinaryForm compose(const TernaryForm& h, const BinaryForm& tx, const BinaryForm& ty,
                   const BinaryForm& tz);

/// Sylvester resultant of a and b with respect to `var` (0 = x, 1 = y, 2 = z),
/// a binary form in the remaining variables. Throws EliminationDegenerate
/// when either form has degree 0 in `var`.
BinaryForm resultant(const TernaryForm& a, const TernaryForm& b, int var);

/// Form in (x, y, z, w) with weight(w) = 2, sparse like TernaryForm.
class WeightedForm {
public:
    using Exponents = std::array<int, 4>;

    WeightedForm() = default;
    explicit WeightedForm(FieldPtr F, int weighted_degree)
        : field_(F), degree_(weighted_degree) {}

    /// w^2 + f*w - g, the defining polynomial of a degree-2 del Pezzo
    /// surface with deg f = 2, deg g = 4: weighted degree 4.
    static WeightedForm surface_equation(const TernaryForm& f, const TernaryForm& g);

    FieldPtr field() const { return field_; }
    int weighted_degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, FieldElement>& terms() const { return terms_; }

    void set_coeff(Exponents e, const FieldElement& c);

    FieldElement evaluate(const FieldElement& x, const FieldElement& y,
                          const FieldElement& z, const FieldElement& w) const;

private:
    FieldPtr field_ = nullptr;
    int degree_ = 0;
    std::map<Exponents, FieldElement> terms_;
};

}  // namespace dp2

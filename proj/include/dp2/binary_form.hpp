#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dp2/unipoly.hpp"

namespace dp2 {

/// Homogeneous form in (u, v) over F_q, dense: coefficient i multiplies
/// u^i v^{n-i}. The zero form carries an explicit flag, not a fake degree.
class BinaryForm {
public:
    BinaryForm() = default;
    static BinaryForm zero(FieldPtr F);
    /// coeffs[i] is the coefficient of u^i v^{degree-i}; all-zero input
    /// collapses to the zero form.
    BinaryForm(FieldPtr F, int degree, std::vector<FieldElement> coeffs);
    static BinaryForm from_int_coeffs(FieldPtr F, int degree,
                                      const std::vector<int64_t>& coeffs);
    static BinaryForm constant(const FieldElement& c);
    static BinaryForm u(FieldPtr F);
    static BinaryForm v(FieldPtr F);
    /// Homogenization of a univariate p(t) -> p(u/v) * v^degree, degree >= deg p.
    static BinaryForm homogenize(const UniPoly& p, int degree);

    FieldPtr field() const { return field_; }
    bool is_zero() const { return zero_; }
    /// Degree of a nonzero form; throws ZeroForm on the zero form.
    int degree() const;
    bool is_constant() const { return zero_ || degree_ == 0; }
    FieldElement coeff(int i) const;
    const std::vector<FieldElement>& coeffs() const { return c_; }

    /// Dehomogenization H(t, 1).
    UniPoly dehomogenize() const;
    /// Multiplicity of the root (1:0), = degree - deg H(t,1).
    int v_multiplicity() const;

    bool operator==(const BinaryForm& o) const;
    bool operator!=(const BinaryForm& o) const { return !(*this == o); }

    BinaryForm operator-() const;
    BinaryForm operator+(const BinaryForm& o) const;
    BinaryForm operator-(const BinaryForm& o) const;
    BinaryForm operator*(const BinaryForm& o) const;
    BinaryForm scale(const FieldElement& s) const;
    BinaryForm pow(int e) const;

    FieldElement eval(const FieldElement& u, const FieldElement& v) const;
    BinaryForm derivative_u() const;
    BinaryForm derivative_v() const;
    /// (unit, monic): leading coefficient in lex monomial order (highest
    /// power of u) scaled to 1.
    std::pair<FieldElement, BinaryForm> monic() const;
    BinaryForm embed_into(FieldPtr target) const;

    std::string str() const;

private:
    FieldPtr field_ = nullptr;
    bool zero_ = true;
    int degree_ = 0;
    std::vector<FieldElement> c_;
};

/// Monic gcd of two binary forms (not both zero); gcd(a, 0) = a normalized.
BinaryForm gcd(const BinaryForm& a, const BinaryForm& b);
/// Exact quotient, or nullopt if b does not divide a.
std::optional<BinaryForm> try_divide(const BinaryForm& a, const BinaryForm& b);
/// H(U, V) for binary forms U, V of equal degree e: degree deg(H) * e.
BinaryForm compose_binary(const BinaryForm& h, const BinaryForm& U, const BinaryForm& V);

/// H = unit * prod S_j^{m_j} with the S_j monic, pairwise coprime and
/// squarefree over the algebraic closure. Multiplicities strictly increase.
struct BinarySquarefreeDecomposition {
    FieldElement unit;
    std::vector<std::pair<BinaryForm, int>> factors;
    BinaryForm reconstruct() const;
};
BinarySquarefreeDecomposition squarefree_decomposition(const BinaryForm& h);

/// If H = c * s^2 for a constant c, returns (s, c) with s monic-normalized;
/// when c is a square of the base field it is absorbed into s (c becomes 1).
/// Throws NotASquareUpToUnit when some multiplicity is odd.
struct BinarySqrt {
    BinaryForm root;
    FieldElement unit;
    bool unit_is_square;
};
BinarySqrt binary_sqrt(const BinaryForm& h);

/// Splits a squarefree binary form into monic products of its irreducible
/// factors grouped by degree; the (1:0) factor counts as linear.
std::vector<std::pair<BinaryForm, int>> distinct_degree_split(const BinaryForm& h);

/// A projective root of a binary form over an extension F_{q^e}.
struct ProjectiveRoot {
    FieldElement u, v;   // normalized: v = 1, or (u, v) = (1, 0)
    int ext_degree;      // e: least e with the root defined over F_{q^e}
    int multiplicity;
};

/// All projective roots of H over F_{q^e} for e <= max_extension, each with
/// multiplicity and minimal field of definition. Conjugates are all listed.
/// Extensions are built once per call via FieldDescriptor::extend.
std::vector<ProjectiveRoot> binary_roots(const BinaryForm& h, int max_extension);

}  // namespace dp2

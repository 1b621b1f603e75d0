#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "dp2/errors.hpp"

namespace dp2 {

class FieldDescriptor;

/// Fields are interned and immortal; raw pointers stay valid for the
/// lifetime of the process and double as cheap identity.
using FieldPtr = const FieldDescriptor*;

/// Residue vector c0 + c1*g + ... + c_{k-1}*g^{k-1}, entries in [0, p).
using Coeffs = boost::container::small_vector<int64_t, 4>;

/// Element of F_{p^k}. Immutable value; carries its field.
class FieldElement {
public:
    FieldElement() : field_(nullptr) {}
    FieldElement(FieldPtr field, Coeffs coeffs);

    FieldPtr field() const { return field_; }
    const Coeffs& coeffs() const { return coeffs_; }
    int64_t coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }

    bool is_zero() const;
    bool is_one() const;

    /// Index in the lexicographic enumeration of the field (c0 major).
    int64_t lex_index() const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    /// Lexicographic order on coefficient vectors; requires same field.
    bool operator<(const FieldElement& o) const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    std::string str() const;

private:
    FieldPtr field_;
    Coeffs coeffs_;
};

/// F_{p^k} for an odd prime p, presented by a monic irreducible modulus of
/// degree k over F_p. Descriptors are created through the static factories,
/// interned globally, and never freed.
class FieldDescriptor {
public:
    /// The prime field F_p (modulus T).
    static FieldPtr prime(int64_t p);

    /// F_{p^k} with a caller-supplied monic irreducible modulus,
    /// coefficients low-to-high (length k+1, entries reduced mod p on entry).
    static FieldPtr make(int64_t p, int k, const std::vector<int64_t>& modulus);

    /// F_9 in the presentation g^2 = g + 1 (modulus T^2 - T - 1).
    static FieldPtr f9();

    /// F_{p^{k*m}} together with a recorded embedding of this field.
    /// extend(1) returns this field.
    FieldPtr extend(int m) const;

    /// Restores an extension with an explicitly recorded tower: the target
    /// field with base `base` and the given image of base's generator
    /// (validated as a root of base's modulus).
    static FieldPtr make_extension_of(FieldPtr base, int k,
                                      const std::vector<int64_t>& modulus,
                                      const Coeffs& base_image);

    int64_t p() const { return p_; }
    int k() const { return k_; }
    int64_t q() const { return q_; }
    const std::vector<int64_t>& modulus() const { return modulus_; }

    /// Tower parent recorded by extend(), or nullptr.
    FieldPtr base() const { return base_; }
    /// Image of base()'s generator in this field.
    const FieldElement& base_generator_image() const;

    /// Same (p, k, modulus): elements interoperate arithmetically.
    bool same_arithmetic(FieldPtr other) const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(int64_t n) const;
    FieldElement element(Coeffs coeffs) const;
    /// Residue class of the modulus variable (the g of F_9).
    FieldElement generator() const;

    /// n-th element in lexicographic coefficient order, 0 <= n < q.
    FieldElement element_at(int64_t n) const;
    /// All q elements in lexicographic coefficient order.
    std::vector<FieldElement> enumerate() const;

    std::string str() const;

    // interning key bits, used internally
    struct InternKey;

private:
    FieldDescriptor() = default;
    friend struct FieldRegistry;

    int64_t p_ = 0;
    int k_ = 0;
    int64_t q_ = 0;
    std::vector<int64_t> modulus_;  // monic, length k+1
    FieldPtr base_ = nullptr;
    Coeffs base_image_;             // coeffs in this field
    mutable FieldElement base_image_elem_;  // cached wrapper
};

FieldElement inverse(const FieldElement& a);
FieldElement pow(const FieldElement& a, int64_t e);
/// a^(p^i); i is reduced mod k.
FieldElement frobenius(const FieldElement& a, int64_t i);
/// Inverse of the p-power Frobenius: the unique p-th root.
FieldElement pth_root(const FieldElement& a);
/// Euler criterion; true for 0.
bool is_square(const FieldElement& a);
/// Deterministic square root: the lexicographically least of {s, -s}.
/// Throws NotASquare.
FieldElement sqrt(const FieldElement& a);

/// Ring-homomorphic embedding into `target`. Identity when the fields agree
/// arithmetically; prime subfields embed everywhere; otherwise follows the
/// tower chain recorded by extend(). Throws NoEmbeddingRecorded.
FieldElement embed(const FieldElement& a, FieldPtr target);

}  // namespace dp2

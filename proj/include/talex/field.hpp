#ifndef TALEX_FIELD_HPP
#define TALEX_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "talex/rational.hpp"

namespace talex {

/// Identifies the coefficient field: the rationals, or a cyclotomic
/// extension Q(zeta_m). Cyclotomic orders are stored canonically:
/// m == 2 (mod 4) is replaced by m/2, and m == 1 collapses to Rationals,
/// so equal descriptors mean equal fields.
class FieldDescriptor {
   public:
    enum class Kind { Rationals, Cyclotomic };

    static FieldDescriptor rationals() { return FieldDescriptor(Kind::Rationals, 1); }
    static FieldDescriptor cyclotomic(unsigned order);

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::Rationals; }
    bool is_cyclotomic() const { return kind_ == Kind::Cyclotomic; }

    /// Canonical cyclotomic order; 1 for the rationals.
    unsigned order() const { return order_; }

    /// Dimension of the field over Q: phi(order), 1 for the rationals.
    unsigned degree() const;

    bool operator==(const FieldDescriptor& other) const {
        return kind_ == other.kind_ && order_ == other.order_;
    }
    bool operator!=(const FieldDescriptor& other) const { return !(*this == other); }

    std::string to_string() const;

    /// Accepts "Q", "rationals", "cyclo(m)" or "cyclotomic(m)".
    static FieldDescriptor parse(const std::string& text);

   private:
    FieldDescriptor(Kind kind, unsigned order) : kind_(kind), order_(order) {}

    Kind kind_;
    unsigned order_;
};

unsigned euler_phi(unsigned n);

/// The m-th cyclotomic polynomial as a dense coefficient vector,
/// c[i] = coefficient of t^i. Monic of degree phi(m), integer entries.
std::vector<Rational> cyclotomic_polynomial(unsigned m);

/// An element of Q or Q(zeta_m), stored on the power basis
/// 1, zeta, ..., zeta^(phi(m)-1). Every operation reduces modulo the
/// cyclotomic polynomial before returning, so equal values have equal
/// coefficient vectors. Values are immutable.
class FieldElement {
   public:
    static FieldElement zero(const FieldDescriptor& desc);
    static FieldElement one(const FieldDescriptor& desc);
    static FieldElement from_rational(const FieldDescriptor& desc, const Rational& value);
    static FieldElement from_int(const FieldDescriptor& desc, long value);

    /// zeta_m^power (power may be negative); zeta_1 = 1 on the rationals.
    static FieldElement root_of_unity(const FieldDescriptor& desc, long power);

    /// Builds from an explicit power-basis coefficient vector of length
    /// degree(); throws DescriptorMismatch on wrong length.
    static FieldElement from_coefficients(const FieldDescriptor& desc, std::vector<Rational> coeffs);

    const FieldDescriptor& descriptor() const { return desc_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& other) const;
    FieldElement operator-(const FieldElement& other) const;
    FieldElement operator*(const FieldElement& other) const;
    FieldElement operator-() const;

    /// Multiplicative inverse via the extended Euclidean algorithm
    /// against the cyclotomic polynomial. Throws DivisionByZero on 0.
    FieldElement inverse() const;

    /// Complex conjugation: identity on Q, zeta -> zeta^(m-1) on
    /// Q(zeta_m), reduced back to the power basis.
    FieldElement conjugate() const;

    bool operator==(const FieldElement& other) const;
    bool operator!=(const FieldElement& other) const { return !(*this == other); }

    /// "p/q" for rationals, "cyclo(m)[c0,c1,...]" otherwise.
    std::string to_string() const;

    /// Inverse of to_string; also lifts a bare rational into a
    /// cyclotomic field when desc is cyclotomic.
    static FieldElement parse(const FieldDescriptor& desc, const std::string& text);

   private:
    FieldElement(FieldDescriptor desc, std::vector<Rational> coeffs)
        : desc_(desc), coeffs_(std::move(coeffs)) {}

    void require_same(const FieldElement& other) const;

    FieldDescriptor desc_;
    std::vector<Rational> coeffs_;
};

}  // namespace talex

#endif

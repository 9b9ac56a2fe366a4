#ifndef TALEX_LAURENT_HPP
#define TALEX_LAURENT_HPP

#include <map>
#include <optional>
#include <string>

#include "talex/field.hpp"

namespace talex {

class CanonicalPolynomial;

/// A Laurent polynomial over F: a finite map exponent -> nonzero
/// coefficient. The zero polynomial is the empty map. Exponents may be
/// negative; t itself is a unit of the ring, and the units are exactly
/// the single-term polynomials c*t^k.
class LaurentPolynomial {
   public:
    explicit LaurentPolynomial(const FieldDescriptor& desc) : desc_(desc) {}

    static LaurentPolynomial zero(const FieldDescriptor& desc) { return LaurentPolynomial(desc); }
    static LaurentPolynomial one(const FieldDescriptor& desc);
    static LaurentPolynomial constant(const FieldElement& value);
    static LaurentPolynomial monomial(const FieldElement& coeff, long exponent);
    /// t^k, default t.
    static LaurentPolynomial variable(const FieldDescriptor& desc, long exponent = 1);

    const FieldDescriptor& descriptor() const { return desc_; }
    const std::map<long, FieldElement>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// Single term c*t^k, i.e. invertible in F[t,1/t].
    bool is_unit() const { return terms_.size() == 1; }

    /// Requires a nonzero polynomial.
    long min_exponent() const;
    long max_exponent() const;
    /// max - min; 0 for units. Requires nonzero.
    long degree_span() const;

    FieldElement coefficient(long exponent) const;
    FieldElement leading_coefficient() const;

    LaurentPolynomial operator+(const LaurentPolynomial& other) const;
    LaurentPolynomial operator-(const LaurentPolynomial& other) const;
    LaurentPolynomial operator*(const LaurentPolynomial& other) const;
    LaurentPolynomial operator-() const;

    LaurentPolynomial scaled(const FieldElement& factor) const;
    LaurentPolynomial shifted(long exponent_offset) const;

    bool operator==(const LaurentPolynomial& other) const;
    bool operator!=(const LaurentPolynomial& other) const { return !(*this == other); }

    /// Substitutes t := point (point != 0, since t is a unit).
    FieldElement evaluate(const FieldElement& point) const;

    /// Increasing-exponent term list, e.g. "-1 + 1*t^3"; "0" for zero.
    std::string to_string() const;

   private:
    void add_term(long exponent, const FieldElement& coeff);

    FieldDescriptor desc_;
    std::map<long, FieldElement> terms_;

    friend class CanonicalPolynomial;
};

/// The canonical associate of a Laurent polynomial: monic with minimum
/// exponent 0 (hence a genuine polynomial with nonzero constant term),
/// or exactly 0. Two Laurent polynomials differ by a unit c*t^k exactly
/// when their canonical forms are equal, so "equality up to units" is
/// literal equality here.
class CanonicalPolynomial {
   public:
    /// Wraps a value that is already canonical; throws otherwise.
    explicit CanonicalPolynomial(LaurentPolynomial value);

    static CanonicalPolynomial zero(const FieldDescriptor& desc);
    static CanonicalPolynomial one(const FieldDescriptor& desc);

    const LaurentPolynomial& value() const { return value_; }
    const FieldDescriptor& descriptor() const { return value_.descriptor(); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_one() const { return value_.is_one(); }

    /// Products and powers of canonical polynomials stay canonical.
    CanonicalPolynomial operator*(const CanonicalPolynomial& other) const;
    CanonicalPolynomial pow(unsigned exponent) const;

    bool operator==(const CanonicalPolynomial& other) const { return value_ == other.value_; }
    bool operator!=(const CanonicalPolynomial& other) const { return !(*this == other); }

    std::string to_string() const { return value_.to_string(); }

   private:
    LaurentPolynomial value_;
};

/// Canonical associate: divide by leading coefficient and by t^min.
CanonicalPolynomial normalize(const LaurentPolynomial& p);

/// Euclidean division: num = q*den + r with r = 0 or
/// degree_span(r) < degree_span(den). den must be nonzero.
struct LaurentDivision {
    LaurentPolynomial quotient;
    LaurentPolynomial remainder;
};
LaurentDivision euclidean_divide(const LaurentPolynomial& num, const LaurentPolynomial& den);

/// q/p when p exactly divides q.
std::optional<LaurentPolynomial> try_divide(const LaurentPolynomial& q, const LaurentPolynomial& p);

/// Canonical generator of the ideal (p, q); gcd(0,0) = 0.
CanonicalPolynomial gcd(const LaurentPolynomial& p, const LaurentPolynomial& q);

/// Whether p divides q (q = p*r). p must be nonzero; divides(p, 0) is true.
bool divides(const LaurentPolynomial& p, const LaurentPolynomial& q);

/// Whether every irreducible factor of p divides q, decided without
/// factoring: strip gcd(p, q) from p until coprime and test whether a
/// unit is left. Both inputs must be nonzero.
bool roots_contained(const LaurentPolynomial& p, const LaurentPolynomial& q);

}  // namespace talex

#endif

#include "talex/laurent.hpp"

#include <sstream>

#include "talex/errors.hpp"

namespace talex {

LaurentPolynomial LaurentPolynomial::one(const FieldDescriptor& desc) {
    return constant(FieldElement::one(desc));
}

LaurentPolynomial LaurentPolynomial::constant(const FieldElement& value) {
    return monomial(value, 0);
}

LaurentPolynomial LaurentPolynomial::monomial(const FieldElement& coeff, long exponent) {
    LaurentPolynomial p(coeff.descriptor());
    if (!coeff.is_zero()) p.terms_.emplace(exponent, coeff);
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(const FieldDescriptor& desc, long exponent) {
    return monomial(FieldElement::one(desc), exponent);
}

bool LaurentPolynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
}

long LaurentPolynomial::min_exponent() const {
    if (is_zero()) throw ZeroInput("zero polynomial has no exponents");
    return terms_.begin()->first;
}

long LaurentPolynomial::max_exponent() const {
    if (is_zero()) throw ZeroInput("zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

long LaurentPolynomial::degree_span() const {
    return max_exponent() - min_exponent();
}

FieldElement LaurentPolynomial::coefficient(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? FieldElement::zero(desc_) : it->second;
}

FieldElement LaurentPolynomial::leading_coefficient() const {
    if (is_zero()) throw ZeroInput("zero polynomial has no leading coefficient");
    return terms_.rbegin()->second;
}

void LaurentPolynomial::add_term(long exponent, const FieldElement& coeff) {
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(exponent, coeff);
        return;
    }
    FieldElement sum = it->second + coeff;
    if (sum.is_zero()) {
        terms_.erase(it);
    } else {
        it->second = std::move(sum);
    }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& other) const {
    if (desc_ != other.desc_) throw DescriptorMismatch("adding polynomials over different fields");
    LaurentPolynomial out(*this);
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& other) const {
    if (desc_ != other.desc_) throw DescriptorMismatch("subtracting polynomials over different fields");
    LaurentPolynomial out(*this);
    for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial out(desc_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& other) const {
    if (desc_ != other.desc_) throw DescriptorMismatch("multiplying polynomials over different fields");
    LaurentPolynomial out(desc_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : other.terms_) {
            out.add_term(e1 + e2, c1 * c2);
        }
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::scaled(const FieldElement& factor) const {
    if (factor.descriptor() != desc_) throw DescriptorMismatch("scaling by an element of a different field");
    LaurentPolynomial out(desc_);
    if (factor.is_zero()) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * factor);
    return out;
}

LaurentPolynomial LaurentPolynomial::shifted(long exponent_offset) const {
    LaurentPolynomial out(desc_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + exponent_offset, c);
    return out;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& other) const {
    return desc_ == other.desc_ && terms_ == other.terms_;
}

FieldElement LaurentPolynomial::evaluate(const FieldElement& point) const {
    if (point.descriptor() != desc_) throw DescriptorMismatch("evaluating at a point of a different field");
    if (point.is_zero()) throw EvaluateAtZero("t is a unit; cannot evaluate at 0");
    FieldElement result = FieldElement::zero(desc_);
    if (is_zero()) return result;

    // Horner on the polynomial part after shifting min exponent to 0,
    // then multiply back the t^min factor.
    const long min = min_exponent();
    const long max = max_exponent();
    for (long e = max; e >= min; --e) {
        result = result * point + coefficient(e);
    }
    if (min > 0) {
        for (long k = 0; k < min; ++k) result = result * point;
    } else if (min < 0) {
        const FieldElement inv = point.inverse();
        for (long k = 0; k < -min; ++k) result = result * inv;
    }
    return result;
}

std::string LaurentPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.to_string();
        if (first) {
            first = false;
        } else if (!cs.empty() && cs[0] == '-') {
            out << " - ";
            cs = cs.substr(1);
        } else {
            out << " + ";
        }
        if (e == 0) {
            out << cs;
        } else {
            out << cs << "*t^" << e;
        }
    }
    return out.str();
}

CanonicalPolynomial::CanonicalPolynomial(LaurentPolynomial value) : value_(std::move(value)) {
    if (value_.is_zero()) return;
    if (value_.min_exponent() != 0 || !value_.leading_coefficient().is_one()) {
        throw Error("polynomial is not in canonical form: " + value_.to_string());
    }
}

CanonicalPolynomial CanonicalPolynomial::zero(const FieldDescriptor& desc) {
    return CanonicalPolynomial(LaurentPolynomial::zero(desc));
}

CanonicalPolynomial CanonicalPolynomial::one(const FieldDescriptor& desc) {
    return CanonicalPolynomial(LaurentPolynomial::one(desc));
}

CanonicalPolynomial CanonicalPolynomial::operator*(const CanonicalPolynomial& other) const {
    return CanonicalPolynomial(value_ * other.value_);
}

CanonicalPolynomial CanonicalPolynomial::pow(unsigned exponent) const {
    CanonicalPolynomial result = one(descriptor());
    for (unsigned i = 0; i < exponent; ++i) result = result * *this;
    return result;
}

CanonicalPolynomial normalize(const LaurentPolynomial& p) {
    if (p.is_zero()) return CanonicalPolynomial::zero(p.descriptor());
    const long shift = -p.min_exponent();
    const FieldElement scale = p.leading_coefficient().inverse();
    return CanonicalPolynomial(p.shifted(shift).scaled(scale));
}

LaurentDivision euclidean_divide(const LaurentPolynomial& num, const LaurentPolynomial& den) {
    if (den.is_zero()) throw DivisionByZero("division by the zero polynomial");
    const FieldDescriptor& desc = num.descriptor();
    if (num.is_zero()) return {LaurentPolynomial::zero(desc), LaurentPolynomial::zero(desc)};

    // Shift both to honest polynomials, divide, shift back. The
    // remainder's span ends up strictly below the divisor's span, which
    // is what makes F[t,1/t] Euclidean for the span function.
    const long num_min = num.min_exponent();
    const long den_min = den.min_exponent();
    LaurentPolynomial r = num.shifted(-num_min);
    const LaurentPolynomial d = den.shifted(-den_min);
    const long ddeg = d.max_exponent();
    const FieldElement dlead_inv = d.leading_coefficient().inverse();

    LaurentPolynomial q(desc);
    while (!r.is_zero() && r.max_exponent() >= ddeg) {
        const long shift = r.max_exponent() - ddeg;
        const FieldElement c = r.leading_coefficient() * dlead_inv;
        const LaurentPolynomial step = LaurentPolynomial::monomial(c, shift);
        q = q + step;
        r = r - step * d;
    }
    return {q.shifted(num_min - den_min), r.shifted(num_min)};
}

std::optional<LaurentPolynomial> try_divide(const LaurentPolynomial& q, const LaurentPolynomial& p) {
    if (p.is_zero()) throw DivisionByZero("division by the zero polynomial");
    LaurentDivision division = euclidean_divide(q, p);
    if (!division.remainder.is_zero()) return std::nullopt;
    return division.quotient;
}

CanonicalPolynomial gcd(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    if (p.descriptor() != q.descriptor()) throw DescriptorMismatch("gcd over different fields");
    if (p.is_zero()) return normalize(q);
    if (q.is_zero()) return normalize(p);

    // Euclid with each remainder renormalized to canonical associate
    // form; keeping remainders monic bounds coefficient growth.
    LaurentPolynomial a = normalize(p).value();
    LaurentPolynomial b = normalize(q).value();
    while (!b.is_zero()) {
        LaurentPolynomial r = euclidean_divide(a, b).remainder;
        a = std::move(b);
        b = r.is_zero() ? r : normalize(r).value();
    }
    return normalize(a);
}

bool divides(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    if (p.is_zero()) throw DivisorZero("divisibility by the zero polynomial is not defined");
    if (q.is_zero()) return true;
    return try_divide(q, p).has_value();
}

bool roots_contained(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    if (p.is_zero() || q.is_zero()) throw ZeroInput("roots_contained requires nonzero polynomials");
    LaurentPolynomial residue = normalize(p).value();
    while (!residue.is_unit()) {
        const CanonicalPolynomial g = gcd(residue, q);
        if (g.is_one()) break;
        residue = normalize(*try_divide(residue, g.value())).value();
    }
    return residue.is_unit();
}

}  // namespace talex

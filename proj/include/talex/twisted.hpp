#ifndef TALEX_TWISTED_HPP
#define TALEX_TWISTED_HPP

#include <optional>
#include <vector>

#include "talex/field_matrix.hpp"
#include "talex/matrix.hpp"
#include "talex/presentation.hpp"
#include "talex/smith.hpp"

namespace talex {

/// A presentation together with a validated pair (epsilon, rho):
/// per-generator integers epsilon(x_i) and invertible matrices rho(x_i)
/// over the coefficient field. Construction checks that every relator
/// maps to 0 under epsilon and to the identity under rho, and that
/// epsilon is nontrivial; surjectivity of epsilon (gcd of values 1) is
/// recorded but not required.
class TwistedSetup {
   public:
    TwistedSetup(Presentation presentation, FieldDescriptor descriptor, size_t rank,
                 std::vector<long> epsilon, std::vector<FieldMatrix> rho);

    const Presentation& presentation() const { return presentation_; }
    const FieldDescriptor& descriptor() const { return desc_; }
    size_t rank() const { return rank_; }
    const std::vector<long>& epsilon() const { return epsilon_; }
    const std::vector<FieldMatrix>& rho() const { return rho_; }
    bool epsilon_surjective() const { return epsilon_surjective_; }

    long epsilon_of_word(const Word& w) const;
    FieldMatrix rho_of_word(const Word& w) const;

   private:
    Presentation presentation_;
    FieldDescriptor desc_;
    size_t rank_;
    std::vector<long> epsilon_;
    std::vector<FieldMatrix> rho_;
    std::vector<FieldMatrix> rho_inverse_;
    bool epsilon_surjective_;
};

/// The twisted chain complex of the presentation 2-complex,
///   C2 = R^(r*l) --d2--> C1 = R^(g*l) --d1--> C0 = R^l,
/// in the column-vector convention: d1's generator block i is
/// (Phi(x_i) - Id)^T and d2's (generator i, relator j) block is
/// Phi(d r_j / d x_i)^T, so d1 * d2 = 0 by the fundamental Fox identity.
struct TwistedComplex {
    RingMatrix d2;
    RingMatrix d1;
};

/// Phi(x) = t^epsilon(x) * rho(x) extended linearly to the group ring;
/// returns an l-by-l matrix over F[t,1/t].
RingMatrix specialize(const TwistedSetup& setup, const FreeRingElement& element);
RingMatrix specialize(const TwistedSetup& setup, const Word& word);

TwistedComplex build_complex(const TwistedSetup& setup);

/// Twisted Alexander module in homological degree 0, 1 or 2 of the
/// presentation 2-complex: coker(d1), ker(d1)/im(d2), ker(d2).
AlexanderModule alexander_module(const TwistedSetup& setup, int degree);

/// The order of the torsion part of the degree-i module; 1 when the
/// module is torsion-free.
CanonicalPolynomial alexander_polynomial(const TwistedSetup& setup, int degree);

/// Delta_1 and Delta_0 together with their exact quotient when
/// Delta_0 divides Delta_1 (Wada's invariant).
struct WadaQuotient {
    CanonicalPolynomial delta1;
    CanonicalPolynomial delta0;
    bool divisible;
    std::optional<CanonicalPolynomial> quotient;
};
WadaQuotient wada_quotient(const TwistedSetup& setup);

/// Cohomological polynomial in degree 1, 2 or 3; by the universal
/// coefficient theorem over a PID this is the homological polynomial
/// one degree down.
CanonicalPolynomial cohomological_polynomial(const TwistedSetup& setup, int degree);

}  // namespace talex

#endif

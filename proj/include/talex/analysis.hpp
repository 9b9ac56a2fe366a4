#ifndef TALEX_ANALYSIS_HPP
#define TALEX_ANALYSIS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "talex/twisted.hpp"

namespace talex {

/// One irreducible-component weight of the curve at infinity: the
/// component degree d_l and the multiplicity n_l its meridians carry.
struct ComponentWeight {
    long degree;
    long multiplicity;
};

/// Divisibility bound for Delta_1 of a Hopf-link setup: the gcd of the
/// block determinants det(Phi(x_i) - Id) times det(Phi(x_0) - Id)^(d-2).
struct DivisibilityReport {
    CanonicalPolynomial delta1;
    CanonicalPolynomial bound;
    CanonicalPolynomial gcd_factor;        // gcd of the block determinants
    CanonicalPolynomial power_base;        // det(Phi(x_0) - Id)
    unsigned power_exponent;               // d - 2
    bool holds;
    std::optional<CanonicalPolynomial> witness_quotient;  // bound / delta1 when holds
};

/// Root containment of Delta_1 in det(rho(x_0) t^D - Id), decided by
/// exact divisibility stripping rather than eigenvalue extraction.
struct SplittingReport {
    CanonicalPolynomial delta1;
    CanonicalPolynomial container;
    bool contained;
    CanonicalPolynomial residue;  // what survives the stripping; 1 iff contained
};

/// Per-degree torsion summary; acyclic means every degree is torsion,
/// i.e. the complex vanishes over the fraction field F(t).
struct TorsionCertificate {
    struct Entry {
        int degree;
        bool torsion;
        size_t free_rank;
        CanonicalPolynomial order;
    };
    std::vector<Entry> degrees;
    bool acyclic;
};

/// Whether the setup's presentation is exactly hopf_link(d) for some d.
bool is_hopf_presentation(const Presentation& p);

/// The divisibility bound polynomial for a Hopf setup. The weights are
/// checked for consistency with epsilon: epsilon(x_0) must equal
/// sum d_l * n_l and every epsilon(x_i), i >= 1, must appear among the
/// multiplicities. Throws WeightMismatch otherwise.
CanonicalPolynomial corollary_bound(const TwistedSetup& setup, const std::vector<ComponentWeight>& weights);

DivisibilityReport check_divisibility(const TwistedSetup& setup, const std::vector<ComponentWeight>& weights);

SplittingReport check_splitting(const TwistedSetup& setup, long container_exponent);

TorsionCertificate torsion_certificate(const TwistedSetup& setup);

}  // namespace talex

#endif

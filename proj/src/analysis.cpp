#include "talex/analysis.hpp"

#include <algorithm>

#include "talex/errors.hpp"

namespace talex {

bool is_hopf_presentation(const Presentation& p) {
    const size_t d = p.generator_count();
    if (d < 2) return false;
    return p == hopf_link(d);
}

namespace {

void require_hopf(const TwistedSetup& setup) {
    if (!is_hopf_presentation(setup.presentation())) {
        throw InvalidSetup("this report is defined for Hopf-link presentations only");
    }
}

void check_weights(const TwistedSetup& setup, const std::vector<ComponentWeight>& weights) {
    if (weights.empty()) throw WeightMismatch("no component weights supplied");
    long total = 0;
    for (const ComponentWeight& w : weights) {
        if (w.degree < 1 || w.multiplicity < 1) {
            throw WeightMismatch("component degrees and multiplicities must be positive");
        }
        total += w.degree * w.multiplicity;
    }
    if (setup.epsilon()[0] != total) {
        throw WeightMismatch("epsilon(x0) = " + std::to_string(setup.epsilon()[0]) +
                             " does not match the weighted degree " + std::to_string(total));
    }
    for (size_t i = 1; i < setup.epsilon().size(); ++i) {
        const long e = setup.epsilon()[i];
        const bool known = std::any_of(weights.begin(), weights.end(),
                                       [e](const ComponentWeight& w) { return w.multiplicity == e; });
        if (!known) {
            throw WeightMismatch("epsilon(x" + std::to_string(i) + ") = " + std::to_string(e) +
                                 " is not among the component multiplicities");
        }
    }
}

// det(Phi(x_i) - Id) for generator i.
LaurentPolynomial block_determinant(const TwistedSetup& setup, size_t generator) {
    const RingMatrix block =
        specialize(setup, Word::generator(generator)) - RingMatrix::identity(setup.descriptor(), setup.rank());
    return block.determinant();
}

}  // namespace

CanonicalPolynomial corollary_bound(const TwistedSetup& setup, const std::vector<ComponentWeight>& weights) {
    require_hopf(setup);
    check_weights(setup, weights);

    const size_t d = setup.presentation().generator_count();
    CanonicalPolynomial gcd_part = normalize(block_determinant(setup, 0));
    for (size_t i = 1; i < d; ++i) {
        gcd_part = gcd(gcd_part.value(), block_determinant(setup, i));
    }
    const CanonicalPolynomial det_part = normalize(block_determinant(setup, 0));
    return gcd_part * det_part.pow(static_cast<unsigned>(d - 2));
}

DivisibilityReport check_divisibility(const TwistedSetup& setup, const std::vector<ComponentWeight>& weights) {
    require_hopf(setup);
    check_weights(setup, weights);

    const size_t d = setup.presentation().generator_count();
    CanonicalPolynomial gcd_part = normalize(block_determinant(setup, 0));
    for (size_t i = 1; i < d; ++i) {
        gcd_part = gcd(gcd_part.value(), block_determinant(setup, i));
    }
    const CanonicalPolynomial power_base = normalize(block_determinant(setup, 0));
    const unsigned exponent = static_cast<unsigned>(d - 2);
    const CanonicalPolynomial bound = gcd_part * power_base.pow(exponent);

    CanonicalPolynomial delta1 = alexander_polynomial(setup, 1);
    std::optional<CanonicalPolynomial> witness;
    bool holds = false;
    if (!delta1.is_zero()) {
        std::optional<LaurentPolynomial> q = try_divide(bound.value(), delta1.value());
        if (q.has_value()) {
            holds = true;
            witness = normalize(*q);
        }
    }
    return DivisibilityReport{std::move(delta1), bound, std::move(gcd_part), power_base,
                              exponent, holds, std::move(witness)};
}

SplittingReport check_splitting(const TwistedSetup& setup, long container_exponent) {
    if (container_exponent < 1) throw InvalidSetup("container exponent must be positive");
    if (setup.presentation().generator_count() == 0) throw InvalidSetup("presentation has no generators");

    // det(rho(x0) t^D - Id), kept exact; the splitting-field statement
    // is tested as divisibility of irreducible factors, never through
    // numerical eigenvalues.
    const size_t l = setup.rank();
    const FieldDescriptor& desc = setup.descriptor();
    RingMatrix container_matrix(desc, l, l);
    const FieldMatrix& rho0 = setup.rho()[0];
    for (size_t i = 0; i < l; ++i) {
        for (size_t j = 0; j < l; ++j) {
            LaurentPolynomial entry = LaurentPolynomial::monomial(rho0.at(i, j), container_exponent);
            if (i == j) entry = entry - LaurentPolynomial::one(desc);
            container_matrix.set(i, j, entry);
        }
    }
    const CanonicalPolynomial container = normalize(container_matrix.determinant());

    CanonicalPolynomial delta1 = alexander_polynomial(setup, 1);
    if (delta1.is_one()) {
        return SplittingReport{std::move(delta1), container, true, CanonicalPolynomial::one(desc)};
    }

    LaurentPolynomial residue = delta1.value();
    while (!residue.is_unit()) {
        const CanonicalPolynomial g = gcd(residue, container.value());
        if (g.is_one()) break;
        residue = normalize(*try_divide(residue, g.value())).value();
    }
    const bool contained = residue.is_unit();
    return SplittingReport{std::move(delta1), container, contained, normalize(residue)};
}

TorsionCertificate torsion_certificate(const TwistedSetup& setup) {
    TorsionCertificate cert;
    cert.acyclic = true;
    for (int degree = 0; degree <= 2; ++degree) {
        AlexanderModule module = alexander_module(setup, degree);
        const bool torsion = module.is_torsion();
        cert.degrees.push_back({degree, torsion, module.free_rank, std::move(module.order)});
        if (!torsion) cert.acyclic = false;
    }
    return cert;
}

}  // namespace talex

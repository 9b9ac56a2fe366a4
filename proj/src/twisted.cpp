#include "talex/twisted.hpp"

#include <numeric>

#include "talex/errors.hpp"

namespace talex {

TwistedSetup::TwistedSetup(Presentation presentation, FieldDescriptor descriptor, size_t rank,
                           std::vector<long> epsilon, std::vector<FieldMatrix> rho)
    : presentation_(std::move(presentation)),
      desc_(descriptor),
      rank_(rank),
      epsilon_(std::move(epsilon)),
      rho_(std::move(rho)),
      epsilon_surjective_(false) {
    const size_t g = presentation_.generator_count();
    if (rank_ == 0) throw InvalidSetup("representation rank must be positive");
    if (epsilon_.size() != g) {
        throw InvalidSetup("epsilon must assign a value to each of the " + std::to_string(g) + " generators");
    }
    if (rho_.size() != g) {
        throw InvalidSetup("rho must assign a matrix to each of the " + std::to_string(g) + " generators");
    }
    for (size_t i = 0; i < g; ++i) {
        if (rho_[i].rows() != rank_ || rho_[i].cols() != rank_) {
            throw InvalidSetup("rho(" + presentation_.generator_names[i] + ") is not " +
                               std::to_string(rank_) + "x" + std::to_string(rank_));
        }
        if (rho_[i].descriptor() != desc_) {
            throw InvalidSetup("rho(" + presentation_.generator_names[i] + ") lives over the wrong field");
        }
        if (rho_[i].determinant().is_zero()) {
            throw InvalidSetup("rho(" + presentation_.generator_names[i] + ") is singular");
        }
        rho_inverse_.push_back(rho_[i].inverse());
    }

    for (size_t r = 0; r < presentation_.relator_count(); ++r) {
        const Word& relator = presentation_.relators[r];
        if (!relator.is_identity() && relator.max_generator() >= g) {
            throw InvalidSetup("relator " + std::to_string(r) + " uses an out-of-range generator");
        }
        if (epsilon_of_word(relator) != 0) {
            throw InvalidSetup("relator " + std::to_string(r) + " has nonzero epsilon value");
        }
        if (!rho_of_word(relator).is_identity()) {
            throw InvalidSetup("relator " + std::to_string(r) + " not represented trivially");
        }
    }

    long gcd_value = 0;
    bool nontrivial = false;
    for (long e : epsilon_) {
        if (e != 0) nontrivial = true;
        gcd_value = std::gcd(gcd_value, e);
    }
    if (!nontrivial) throw InvalidSetup("epsilon is trivial (all generators map to 0)");
    epsilon_surjective_ = gcd_value == 1;
}

long TwistedSetup::epsilon_of_word(const Word& w) const {
    long total = 0;
    for (const Letter& l : w.letters()) {
        if (l.generator >= epsilon_.size()) throw IndexOutOfRange("word uses an unknown generator");
        total += l.sign * epsilon_[l.generator];
    }
    return total;
}

FieldMatrix TwistedSetup::rho_of_word(const Word& w) const {
    FieldMatrix result = FieldMatrix::identity(desc_, rank_);
    for (const Letter& l : w.letters()) {
        if (l.generator >= rho_.size()) throw IndexOutOfRange("word uses an unknown generator");
        result = result * (l.sign > 0 ? rho_[l.generator] : rho_inverse_[l.generator]);
    }
    return result;
}

RingMatrix specialize(const TwistedSetup& setup, const Word& word) {
    const FieldMatrix rho = setup.rho_of_word(word);
    const long shift = setup.epsilon_of_word(word);
    RingMatrix out(setup.descriptor(), setup.rank(), setup.rank());
    for (size_t i = 0; i < setup.rank(); ++i) {
        for (size_t j = 0; j < setup.rank(); ++j) {
            out.set(i, j, LaurentPolynomial::monomial(rho.at(i, j), shift));
        }
    }
    return out;
}

RingMatrix specialize(const TwistedSetup& setup, const FreeRingElement& element) {
    RingMatrix out(setup.descriptor(), setup.rank(), setup.rank());
    for (const auto& [word, coefficient] : element.terms()) {
        const RingMatrix term = specialize(setup, word);
        const FieldElement scale = FieldElement::from_int(setup.descriptor(), coefficient);
        for (size_t i = 0; i < setup.rank(); ++i) {
            for (size_t j = 0; j < setup.rank(); ++j) {
                out.set(i, j, out.at(i, j) + term.at(i, j).scaled(scale));
            }
        }
    }
    return out;
}

TwistedComplex build_complex(const TwistedSetup& setup) {
    const size_t g = setup.presentation().generator_count();
    const size_t r = setup.presentation().relator_count();
    const size_t l = setup.rank();
    const FieldDescriptor& desc = setup.descriptor();
    const RingMatrix id = RingMatrix::identity(desc, l);

    RingMatrix d1(desc, l, g * l);
    for (size_t i = 0; i < g; ++i) {
        const RingMatrix block = specialize(setup, Word::generator(i)) - id;
        d1.set_block(0, i * l, block.transposed());
    }

    RingMatrix d2(desc, g * l, r * l);
    for (size_t j = 0; j < r; ++j) {
        const Word& relator = setup.presentation().relators[j];
        for (size_t i = 0; i < g; ++i) {
            const FreeRingElement derivative = fox_derivative(relator, i, g);
            if (derivative.is_zero()) continue;
            d2.set_block(i * l, j * l, specialize(setup, derivative).transposed());
        }
    }
    return TwistedComplex{std::move(d2), std::move(d1)};
}

AlexanderModule alexander_module(const TwistedSetup& setup, int degree) {
    if (degree < 0 || degree > 2) throw IndexOutOfRange("homological degree must be 0, 1 or 2");
    const TwistedComplex complex = build_complex(setup);
    const FieldDescriptor& desc = setup.descriptor();
    switch (degree) {
        case 0:
            return cokernel_module(complex.d1);
        case 1:
            return homology_module(complex.d2, complex.d1);
        default: {
            const RingMatrix empty(desc, complex.d2.cols(), 0);
            return homology_module(empty, complex.d2);
        }
    }
}

CanonicalPolynomial alexander_polynomial(const TwistedSetup& setup, int degree) {
    return alexander_module(setup, degree).order;
}

WadaQuotient wada_quotient(const TwistedSetup& setup) {
    CanonicalPolynomial delta1 = alexander_polynomial(setup, 1);
    CanonicalPolynomial delta0 = alexander_polynomial(setup, 0);
    // Orders are products of nonzero divisors, so delta0 is never zero.
    std::optional<LaurentPolynomial> raw = try_divide(delta1.value(), delta0.value());
    if (!raw.has_value()) {
        return WadaQuotient{std::move(delta1), std::move(delta0), false, std::nullopt};
    }
    CanonicalPolynomial quotient = normalize(*raw);
    return WadaQuotient{std::move(delta1), std::move(delta0), true, std::move(quotient)};
}

CanonicalPolynomial cohomological_polynomial(const TwistedSetup& setup, int degree) {
    if (degree < 1 || degree > 3) throw IndexOutOfRange("cohomological degree must be 1, 2 or 3");
    return alexander_polynomial(setup, degree - 1);
}

}  // namespace talex

#include "talex/smith.hpp"

#include "talex/errors.hpp"

namespace talex {

namespace {

// Unit that turns a nonzero p into its canonical associate:
// 1/(lead coefficient) * t^(-min exponent).
LaurentPolynomial canonicalizing_unit(const LaurentPolynomial& p) {
    return LaurentPolynomial::monomial(p.leading_coefficient().inverse(), -p.min_exponent());
}

LaurentPolynomial unit_inverse(const LaurentPolynomial& u) {
    if (!u.is_unit()) throw Error("internal: inverse of a non-unit");
    return LaurentPolynomial::monomial(u.leading_coefficient().inverse(), -u.max_exponent());
}

// Carries D together with U, V and their inverses through elementary
// operations, keeping U*A*V = D at every step.
struct Reduction {
    RingMatrix d, u, u_inv, v, v_inv;

    explicit Reduction(const RingMatrix& a)
        : d(a),
          u(RingMatrix::identity(a.descriptor(), a.rows())),
          u_inv(RingMatrix::identity(a.descriptor(), a.rows())),
          v(RingMatrix::identity(a.descriptor(), a.cols())),
          v_inv(RingMatrix::identity(a.descriptor(), a.cols())) {}

    void row_swap(size_t i, size_t j) {
        if (i == j) return;
        d.swap_rows(i, j);
        u.swap_rows(i, j);
        u_inv.swap_cols(i, j);
    }
    void col_swap(size_t i, size_t j) {
        if (i == j) return;
        d.swap_cols(i, j);
        v.swap_cols(i, j);
        v_inv.swap_rows(i, j);
    }
    // row_i += c * row_j
    void row_add(size_t i, size_t j, const LaurentPolynomial& c) {
        d.add_row_multiple(i, j, c);
        u.add_row_multiple(i, j, c);
        u_inv.add_col_multiple(j, i, -c);
    }
    // col_i += c * col_j
    void col_add(size_t i, size_t j, const LaurentPolynomial& c) {
        d.add_col_multiple(i, j, c);
        v.add_col_multiple(i, j, c);
        v_inv.add_row_multiple(j, i, -c);
    }
    void row_scale(size_t i, const LaurentPolynomial& unit) {
        d.scale_row(i, unit);
        u.scale_row(i, unit);
        u_inv.scale_col(i, unit_inverse(unit));
    }
};

}  // namespace

SmithSystem smith_system(const RingMatrix& a) {
    const size_t rows = a.rows();
    const size_t cols = a.cols();
    const size_t nmin = rows < cols ? rows : cols;
    Reduction red(a);

    size_t k = 0;
    for (; k < nmin; ++k) {
        // Pivot rule: minimal degree span among nonzero entries of the
        // remaining block, ties broken by row-major position.
        bool found = false;
        size_t pi = k, pj = k;
        long best = 0;
        for (size_t i = k; i < rows; ++i) {
            for (size_t j = k; j < cols; ++j) {
                if (red.d.at(i, j).is_zero()) continue;
                const long span = red.d.at(i, j).degree_span();
                if (!found || span < best) {
                    found = true;
                    best = span;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (!found) break;
        red.row_swap(k, pi);
        red.col_swap(k, pj);

        // Reduce until the pivot alone survives in its row and column
        // and divides the whole remaining block. Each retry strictly
        // shrinks the pivot's degree span, so the loop terminates.
        bool stable = false;
        while (!stable) {
            stable = true;
            for (size_t i = k + 1; i < rows; ++i) {
                if (red.d.at(i, k).is_zero()) continue;
                const LaurentDivision div = euclidean_divide(red.d.at(i, k), red.d.at(k, k));
                red.row_add(i, k, -div.quotient);
                if (!red.d.at(i, k).is_zero()) {
                    red.row_swap(k, i);
                    stable = false;
                    break;
                }
            }
            if (!stable) continue;
            for (size_t j = k + 1; j < cols; ++j) {
                if (red.d.at(k, j).is_zero()) continue;
                const LaurentDivision div = euclidean_divide(red.d.at(k, j), red.d.at(k, k));
                red.col_add(j, k, -div.quotient);
                if (!red.d.at(k, j).is_zero()) {
                    red.col_swap(k, j);
                    stable = false;
                    break;
                }
            }
            if (!stable) continue;
            for (size_t i = k + 1; i < rows && stable; ++i) {
                for (size_t j = k + 1; j < cols && stable; ++j) {
                    if (red.d.at(i, j).is_zero()) continue;
                    if (!try_divide(red.d.at(i, j), red.d.at(k, k)).has_value()) {
                        red.row_add(k, i, LaurentPolynomial::one(a.descriptor()));
                        stable = false;
                    }
                }
            }
        }
    }

    for (size_t i = 0; i < nmin; ++i) {
        if (!red.d.at(i, i).is_zero()) red.row_scale(i, canonicalizing_unit(red.d.at(i, i)));
    }

    std::vector<CanonicalPolynomial> divisors;
    divisors.reserve(nmin);
    for (size_t i = 0; i < nmin; ++i) divisors.emplace_back(red.d.at(i, i));

    return SmithSystem{
        SmithDecomposition{std::move(red.u), std::move(red.d), std::move(red.v), std::move(divisors)},
        std::move(red.u_inv), std::move(red.v_inv)};
}

SmithDecomposition smith_normal_form(const RingMatrix& a) {
    return smith_system(a).snf;
}

namespace {

AlexanderModule module_from_divisors(size_t generators, const std::vector<CanonicalPolynomial>& divisors,
                                     const FieldDescriptor& desc) {
    size_t nonzero = 0;
    std::vector<CanonicalPolynomial> torsion;
    for (const auto& d : divisors) {
        if (d.is_zero()) continue;
        ++nonzero;
        if (!d.is_one()) torsion.push_back(d);
    }
    CanonicalPolynomial order = CanonicalPolynomial::one(desc);
    for (const auto& t : torsion) order = order * t;
    return AlexanderModule{generators - nonzero, std::move(torsion), std::move(order)};
}

}  // namespace

AlexanderModule cokernel_module(const RingMatrix& a) {
    const SmithDecomposition snf = smith_normal_form(a);
    return module_from_divisors(a.rows(), snf.divisors, a.descriptor());
}

AlexanderModule homology_module(const RingMatrix& boundary_in, const RingMatrix& boundary_out) {
    if (boundary_out.cols() != boundary_in.rows()) {
        throw DimensionMismatch("boundary maps are not composable");
    }
    if (!(boundary_out * boundary_in).is_zero()) {
        throw ChainConditionViolated("composite of boundary maps is not zero");
    }

    const SmithSystem system = smith_system(boundary_out);
    const size_t n = boundary_out.cols();
    size_t rank = 0;
    for (const auto& d : system.snf.divisors) {
        if (!d.is_zero()) ++rank;
    }

    // ker(boundary_out) is free on the last n - rank columns of V;
    // express the incoming boundary in that basis and take cokernel.
    const RingMatrix coords = system.v_inverse * boundary_in;
    for (size_t i = 0; i < rank; ++i) {
        for (size_t j = 0; j < coords.cols(); ++j) {
            if (!coords.at(i, j).is_zero()) {
                throw Error("internal: image escapes the kernel despite the chain condition");
            }
        }
    }
    RingMatrix presentation(boundary_out.descriptor(), n - rank, coords.cols());
    for (size_t i = rank; i < n; ++i) {
        for (size_t j = 0; j < coords.cols(); ++j) presentation.set(i - rank, j, coords.at(i, j));
    }
    return cokernel_module(presentation);
}

size_t rank_over_fractions(const RingMatrix& a) {
    const SmithDecomposition snf = smith_normal_form(a);
    size_t rank = 0;
    for (const auto& d : snf.divisors) {
        if (!d.is_zero()) ++rank;
    }
    return rank;
}

}  // namespace talex

#ifndef TALEX_SMITH_HPP
#define TALEX_SMITH_HPP

#include <vector>

#include "talex/matrix.hpp"

namespace talex {

/// U * A * V = D with U, V invertible over F[t,1/t] and D
/// rectangular-diagonal. divisors[i] = D(i,i) in canonical form, each
/// dividing the next, zeros last.
struct SmithDecomposition {
    RingMatrix u;
    RingMatrix d;
    RingMatrix v;
    std::vector<CanonicalPolynomial> divisors;
};

/// SmithDecomposition plus the tracked inverses of U and V; the kernel
/// construction in homology_module needs V^(-1) with ring entries.
struct SmithSystem {
    SmithDecomposition snf;
    RingMatrix u_inverse;
    RingMatrix v_inverse;
};

SmithSystem smith_system(const RingMatrix& a);
SmithDecomposition smith_normal_form(const RingMatrix& a);

/// A finitely generated F[t,1/t]-module in invariant-factor form:
/// free part of rank free_rank plus cyclic torsion summands. The order
/// is the product of the torsion divisors (1 when there are none) and
/// is exactly the twisted Alexander polynomial when the module is one
/// of the twisted homology modules.
struct AlexanderModule {
    size_t free_rank;
    std::vector<CanonicalPolynomial> torsion;
    CanonicalPolynomial order;

    bool is_torsion() const { return free_rank == 0; }
};

/// Module presented by A: generators = rows, relations = columns.
AlexanderModule cokernel_module(const RingMatrix& a);

/// ker(boundary_out) / im(boundary_in) for consecutive boundary maps
/// (boundary_out * boundary_in must vanish). The kernel is realized
/// with ring entries from the zero-divisor columns of the V matrix of
/// the Smith form of boundary_out, so no fraction-field denominators
/// ever appear.
AlexanderModule homology_module(const RingMatrix& boundary_in, const RingMatrix& boundary_out);

/// Rank of A over the fraction field F(t) = number of nonzero Smith
/// divisors.
size_t rank_over_fractions(const RingMatrix& a);

}  // namespace talex

#endif

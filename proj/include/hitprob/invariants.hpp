#ifndef HITPROB_INVARIANTS_HPP
#define HITPROB_INVARIANTS_HPP

#include "hitprob/solver.hpp"

namespace hitprob {

enum class Group { Sigma, GL };

/// g_1..g_{k-1} are the adjacent transpositions; g_k sends x_1 to x_1+x_2
/// and fixes the rest. GL_k is generated by all k, Sigma_k by the first k-1.
RingMap group_generator(int k, int i);
std::vector<RingMap> group_generators(int k, Group group);

/// Square bit matrix (stored by columns) of the action of g on the
/// admissible coordinates of q. For weight-restricted q the lower-weight
/// terms of images die in the quotient.
std::vector<gf2::BitVec> induced_matrix(const RingMap& g, const QuotientBasis& q);

/// Fixed vectors: intersection of the kernels of (M_i - I) over the
/// generator set, as an echelon basis over q coordinates.
gf2::EchelonBasis invariants(const QuotientBasis& q, Group group);

/// Fixed vectors inside an invariant subspace, expressed in the coordinates
/// of `subspace.rows()` (the subspace must be stable under the action).
gf2::EchelonBasis invariants_on_subspace(const QuotientBasis& q,
                                         const gf2::EchelonBasis& subspace,
                                         Group group);

/// True iff g_i(f) == f in q for every generator of the group.
bool is_invariant_class(const Polynomial& f, const QuotientBasis& q, Group group);

/// p(z): sum of the admissible monomials in the Sigma_k-orbit of z.
/// z must itself be admissible in q.
Polynomial orbit_sum(const Monomial& z, const QuotientBasis& q);

}  // namespace hitprob

#endif

#pragma once

// Closed-form BCH-like maps between coordinate systems:
//  - disentangle: exp(lp T+ + lc Tc + lm T-) -> normal-ordered coordinates
//  - compose_pair / compose_many: product of normal-ordered elements
//  - alpha_continued_fraction: the T+ coordinate of a product, as a nested
//    fraction evaluated innermost-first

#include "bchlie/algebra.hpp"

#include <span>

namespace bchlie {

struct DisentangleResult
{
	GroupElement element;
	/// Principal root of nu^2 = (delta lc / 2)^2 - delta eps lp lm.
	cplx nu;
};

/// Throws NonFiniteInput, SingularDecomposition.
DisentangleResult disentangle(AlgebraKind algebra, ExponentParams const &lam);

/// The product g2 * g1 (g2 acts after g1). Phases add.
///
/// With d = 1 - eps delta Lp1 Lm2:
///   alpha = Lp2 + Lp1 Lc2^delta / d
///   log_c = log_c1 + log_c2 - (2/delta) Log d
///   gamma = Lm1 + Lm2 Lc1^delta / d
/// where Lc^delta is exp(delta log_c), so no branch choice enters except Log d.
///
/// Throws AlgebraMismatch, SingularDecomposition.
GroupElement compose_pair(GroupElement const &g2, GroupElement const &g1);

/// Product g_N ... g_2 g_1 of a sequence stored earliest-first; a left fold
/// of compose_pair. A SingularDecomposition carries the zero-based index of
/// the element whose composition failed.
///
/// Throws EmptySequence, AlgebraMismatch, SingularDecomposition.
GroupElement compose_many(std::span<GroupElement const> elements);

/// T+ coordinate of compose_many(elements), evaluated as
///   alpha_j = Lp_j - Lc_j^delta / (eps delta Lm_j - 1 / alpha_{j-1})
/// starting from alpha_1 = Lp_1.
///
/// Throws EmptySequence, AlgebraMismatch, SingularDecomposition.
cplx alpha_continued_fraction(std::span<GroupElement const> elements);

namespace detail {

/// disentangle with a caller-chosen square root of nu^2. Outputs are even in
/// nu; exposed for testing that property.
DisentangleResult disentangle_with_root(AlgebraKind algebra,
                                        ExponentParams const &lam, cplx nu);

cplx nu_squared(AlgebraKind algebra, ExponentParams const &lam);

} // namespace detail

} // namespace bchlie

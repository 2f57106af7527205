#include "bchlie/composer.hpp"
#include "bchlie/detail/even_functions.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace bchlie {

namespace {

void require_same_algebra(GroupElement const &a, GroupElement const &b)
{
	if (a.algebra != b.algebra)
		throw AlgebraMismatch(fmt::format("cannot compose {} with {}",
		                                  to_string(a.algebra),
		                                  to_string(b.algebra)));
}

bool is_singular(cplx denominator, double scale)
{
	return std::abs(denominator) <= tol_singular * std::max(1.0, scale);
}

} // namespace

namespace detail {

cplx nu_squared(AlgebraKind algebra, ExponentParams const &lam)
{
	auto const delta = algebra.delta();
	auto const half = 0.5 * delta * lam.lambda_c;
	return half * half -
	       delta * algebra.epsilon() * lam.lambda_plus * lam.lambda_minus;
}

DisentangleResult disentangle_with_root(AlgebraKind algebra,
                                        ExponentParams const &lam, cplx nu)
{
	if (!is_finite(lam))
		throw NonFiniteInput("disentangle: non-finite exponent parameter");

	auto const delta = algebra.delta();
	auto const [ch, shc] = cosh_sinhc(nu);

	// 2 nu cosh(nu) - delta lc sinh(nu), divided through by nu so that the
	// nilpotent case nu = 0 stays regular
	auto const cartan_term = delta * lam.lambda_c * shc;
	auto const denom = 2.0 * ch - cartan_term;
	if (is_singular(denom, std::max(std::abs(2.0 * ch), std::abs(cartan_term))))
		throw SingularDecomposition(
		    fmt::format("disentangle: no Gauss decomposition "
		                "(|denominator| = {:.3e})",
		                std::abs(denom)),
		    std::abs(denom));

	GroupElement g{algebra, 2.0 * lam.lambda_plus * shc / denom,
	               -(2.0 / delta) * principal_log(0.5 * denom),
	               2.0 * lam.lambda_minus * shc / denom, 0.0};
	return {g, nu};
}

} // namespace detail

DisentangleResult disentangle(AlgebraKind algebra, ExponentParams const &lam)
{
	if (!is_finite(lam))
		throw NonFiniteInput("disentangle: non-finite exponent parameter");
	return detail::disentangle_with_root(
	    algebra, lam, std::sqrt(detail::nu_squared(algebra, lam)));
}

GroupElement compose_pair(GroupElement const &g2, GroupElement const &g1)
{
	require_same_algebra(g2, g1);
	auto const alg = g1.algebra;
	auto const eps = alg.epsilon();
	auto const delta = alg.delta();

	auto const coupling = eps * delta * g1.big_plus * g2.big_minus;
	auto const d = 1.0 - coupling;
	if (is_singular(d, std::abs(coupling)))
		throw SingularDecomposition(
		    fmt::format("compose_pair: 1 - eps delta Lp1 Lm2 vanishes "
		                "(|d| = {:.3e})",
		                std::abs(d)),
		    std::abs(d));

	GroupElement r;
	r.algebra = alg;
	r.big_plus = g2.big_plus + g1.big_plus * std::exp(delta * g2.log_c) / d;
	r.log_c = g1.log_c + g2.log_c - (2.0 / delta) * principal_log(d);
	r.big_minus = g1.big_minus + g2.big_minus * std::exp(delta * g1.log_c) / d;
	r.phase = g1.phase + g2.phase;
	return r;
}

GroupElement compose_many(std::span<GroupElement const> elements)
{
	if (elements.empty())
		throw EmptySequence("compose_many: empty sequence");

	auto acc = elements.front();
	for (std::size_t i = 1; i < elements.size(); ++i)
	{
		try
		{
			acc = compose_pair(elements[i], acc);
		}
		catch (SingularDecomposition const &e)
		{
			throw e.at_step(i);
		}
	}
	return acc;
}

cplx alpha_continued_fraction(std::span<GroupElement const> elements)
{
	if (elements.empty())
		throw EmptySequence("alpha_continued_fraction: empty sequence");

	auto const alg = elements.front().algebra;
	auto const eps_delta = alg.epsilon() * alg.delta();

	cplx alpha = elements.front().big_plus;
	for (std::size_t j = 1; j < elements.size(); ++j)
	{
		auto const &g = elements[j];
		require_same_algebra(g, elements.front());
		auto const numerator = std::exp(alg.delta() * g.log_c);
		if (alpha == 0.0)
		{
			// the tail 1/alpha is infinite and the fraction term drops out
			alpha = g.big_plus;
			continue;
		}
		auto const tail = 1.0 / alpha;
		auto const lower = eps_delta * g.big_minus;
		auto const denom = lower - tail;
		if (is_singular(denom, std::max(std::abs(lower), std::abs(tail))))
			throw SingularDecomposition(
			    fmt::format("alpha_continued_fraction: partial denominator "
			                "vanishes (|denominator| = {:.3e})",
			                std::abs(denom)),
			    std::abs(denom), j);
		alpha = g.big_plus - numerator / denom;
	}
	return alpha;
}

} // namespace bchlie

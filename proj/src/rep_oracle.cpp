#include "bchlie/rep_oracle.hpp"
#include "bchlie/detail/even_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bchlie {

namespace {

GeneratorSet make_su2()
{
	return {{0.0, 1.0, 0.0, 0.0},
	        Mat2::diag(0.5, -0.5),
	        {0.0, 0.0, 1.0, 0.0}};
}

GeneratorSet make_su11()
{
	return {{0.0, 1.0, 0.0, 0.0},
	        Mat2::diag(0.5, -0.5),
	        {0.0, 0.0, -1.0, 0.0}};
}

// so(2,1) from su(1,1) by rescaling: m+- -> a m+-, mc -> b mc. Matching
// [mc, m+-] = +-delta m+- forces b = delta = i, and [m-, m+] = 2 eps mc gives
// 2 a^2 / b = 2 eps, i.e. a^2 = eps * delta = -1/2, a = i / sqrt(2).
GeneratorSet make_so21()
{
	auto const base = make_su11();
	cplx const a = I / std::numbers::sqrt2;
	cplx const b = I;
	return {a * base.m_plus, b * base.m_c, a * base.m_minus};
}

GeneratorSet checked(GeneratorSet gens, AlgebraKind algebra)
{
	if (commutator_defect(gens, algebra) > 1e-15)
		throw std::logic_error("generator set violates the commutation "
		                       "relations for " +
		                       std::string(to_string(algebra)));
	return gens;
}

} // namespace

double max_abs_diff(Mat2 const &a, Mat2 const &b) { return max_abs(a - b); }

double max_abs(Mat2 const &a)
{
	return std::max({std::abs(a.m00), std::abs(a.m01), std::abs(a.m10),
	                 std::abs(a.m11)});
}

double commutator_defect(GeneratorSet const &g, AlgebraKind algebra)
{
	auto const eps = algebra.epsilon();
	auto const delta = algebra.delta();
	return std::max(
	    {max_abs_diff(commutator(g.m_minus, g.m_plus), 2.0 * eps * g.m_c),
	     max_abs_diff(commutator(g.m_c, g.m_plus), delta * g.m_plus),
	     max_abs_diff(commutator(g.m_c, g.m_minus), -delta * g.m_minus),
	     std::abs(g.m_plus.trace()), std::abs(g.m_c.trace()),
	     std::abs(g.m_minus.trace())});
}

GeneratorSet const &generators_for(AlgebraKind algebra)
{
	static GeneratorSet const su11_set = checked(make_su11(), su11);
	static GeneratorSet const su2_set = checked(make_su2(), su2);
	static GeneratorSet const so21_set = checked(make_so21(), so21);

	switch (algebra.kind())
	{
	case AlgebraKind::Kind::SU11:
		return su11_set;
	case AlgebraKind::Kind::SU2:
		return su2_set;
	case AlgebraKind::Kind::SO21:
		break;
	}
	return so21_set;
}

Mat2 mat_exp(Mat2 const &m)
{
	if (!m.finite())
		throw NonFiniteInput("mat_exp: non-finite matrix entry");

	auto const half_trace = 0.5 * m.trace();
	auto const traceless = m - half_trace * Mat2::identity();
	auto const s = std::sqrt(-traceless.det());
	auto const [ch, shc] = detail::cosh_sinhc(s);
	auto r = ch * Mat2::identity() + shc * traceless;
	if (half_trace != 0.0)
		r *= std::exp(half_trace);
	return r;
}

Mat2 element_matrix(GroupElement const &g)
{
	auto const &gens = generators_for(g.algebra);
	auto r = mat_exp(g.big_plus * gens.m_plus) * mat_exp(g.log_c * gens.m_c) *
	         mat_exp(g.big_minus * gens.m_minus);
	if (g.phase != 0.0)
		r *= std::exp(g.phase);
	return r;
}

Mat2 algebra_matrix(AlgebraKind algebra, ExponentParams const &lam)
{
	auto const &gens = generators_for(algebra);
	return lam.lambda_plus * gens.m_plus + lam.lambda_c * gens.m_c +
	       lam.lambda_minus * gens.m_minus;
}

Mat2 exponent_matrix(AlgebraKind algebra, ExponentParams const &lam)
{
	return mat_exp(algebra_matrix(algebra, lam));
}

} // namespace bchlie

#include "bchlie/algebra.hpp"

#include <cmath>
#include <numbers>

namespace bchlie {

std::string_view to_string(AlgebraKind algebra) noexcept
{
	switch (algebra.kind())
	{
	case AlgebraKind::Kind::SU11:
		return "su11";
	case AlgebraKind::Kind::SU2:
		return "su2";
	case AlgebraKind::Kind::SO21:
		break;
	}
	return "so21";
}

AlgebraKind algebra_from_string(std::string_view name)
{
	if (name == "su11")
		return su11;
	if (name == "su2")
		return su2;
	if (name == "so21")
		return so21;
	throw InvalidArgument("unknown algebra '" + std::string(name) +
	                      "' (expected su11, su2 or so21)");
}

GroupElement identity_element(AlgebraKind algebra)
{
	return GroupElement{algebra, {}, {}, {}, {}};
}

bool is_finite(ExponentParams const &lam)
{
	return is_finite(lam.lambda_plus) && is_finite(lam.lambda_c) &&
	       is_finite(lam.lambda_minus);
}

bool is_finite(GroupElement const &g)
{
	return is_finite(g.big_plus) && is_finite(g.log_c) &&
	       is_finite(g.big_minus) && is_finite(g.phase);
}

cplx principal_log(cplx w)
{
	auto l = std::log(w);
	// std::log maps the lower lip of the cut (imag == -0) to -pi
	if (w.imag() == 0.0 && l.imag() == -std::numbers::pi)
		l.imag(std::numbers::pi);
	return l;
}

cplx principal_pow(cplx w, cplx p) { return std::exp(p * principal_log(w)); }

} // namespace bchlie

#include "bchlie/squeeze.hpp"
#include "bchlie/composer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bchlie {

namespace {

constexpr double pi = std::numbers::pi;

// log(cosh r) without overflow for large r
double log_cosh(double r)
{
	r = std::abs(r);
	return r + std::log1p(std::exp(-2.0 * r)) - std::numbers::ln2;
}

double element_distance(GroupElement const &a, GroupElement const &b)
{
	return std::max({std::abs(a.big_plus - b.big_plus),
	                 std::abs(a.big_c() - b.big_c()),
	                 std::abs(a.big_minus - b.big_minus),
	                 std::abs(std::exp(a.phase) - std::exp(b.phase))});
}

} // namespace

double normalize_angle(double angle)
{
	auto a = std::remainder(angle, 2.0 * pi);
	if (a <= -pi)
		a += 2.0 * pi;
	return a;
}

SqueezeParams::SqueezeParams(double r, double phi)
{
	if (!std::isfinite(r) || !std::isfinite(phi))
		throw InvalidArgument("squeeze parameters must be finite");
	if (r < 0.0)
		throw InvalidArgument("squeeze magnitude r must be >= 0");
	r_ = r;
	phi_ = normalize_angle(phi);
}

RotationParams::RotationParams(double angle)
{
	if (!std::isfinite(angle))
		throw InvalidArgument("rotation angle must be finite");
	angle_ = normalize_angle(angle);
}

GroupElement squeeze_element(SqueezeParams const &p)
{
	auto const t = std::tanh(p.r());
	auto const e = std::polar(1.0, p.phi());
	return {su11, -e * t, -2.0 * log_cosh(p.r()), std::conj(e) * t, 0.0};
}

GroupElement rotation_element(RotationParams const &p)
{
	auto const phi = p.angle();
	return {su11, 0.0, 2.0 * I * phi, 0.0, -0.5 * I * phi};
}

GroupElement compose_squeezes(SqueezeParams const &z2, SqueezeParams const &z1)
{
	return compose_pair(squeeze_element(z2), squeeze_element(z1));
}

SqueezeProductCoefficients squeeze_product_closed_form(SqueezeParams const &z2,
                                                       SqueezeParams const &z1)
{
	auto const t1 = std::tanh(z1.r());
	auto const t2 = std::tanh(z2.r());
	auto const e1 = std::polar(1.0, z1.phi());
	auto const e2 = std::polar(1.0, z2.phi());
	auto const sech2_1 = 1.0 / (std::cosh(z1.r()) * std::cosh(z1.r()));
	auto const sech2_2 = 1.0 / (std::cosh(z2.r()) * std::cosh(z2.r()));

	auto const d = 1.0 + std::polar(1.0, z1.phi() - z2.phi()) * t1 * t2;
	return {-(e2 * t2 + e1 * t1) / d, sech2_1 * sech2_2 / (d * d),
	        (std::conj(e2) * t2 + std::conj(e1) * t1) / d};
}

GroupElement recompose(SqueezeRotationFactorization const &f)
{
	auto g = compose_pair(squeeze_element(f.squeeze),
	                      rotation_element(f.rotation));
	g.phase += f.residual_phase;
	return g;
}

SqueezeRotationFactorization factor_squeeze_rotation(GroupElement const &g)
{
	if (g.algebra != su11)
		throw NotFactorizable("squeeze/rotation factorization needs su(1,1)");
	if (!is_finite(g))
		throw NotFactorizable("element has non-finite coordinates");

	auto const tanh_r = std::abs(g.big_plus);
	if (std::abs(tanh_r - std::abs(g.big_minus)) > 1e-10)
		throw NotFactorizable("|Lambda_plus| != |Lambda_minus|");
	if (tanh_r >= 1.0)
		throw NotFactorizable("|Lambda_plus| >= 1 has no real squeeze");

	auto const big_c = g.big_c();
	// near tanh r = 1, sech^2 r = |Lc| carries r more accurately than tanh r
	double r = 0.0;
	if (tanh_r < 0.5)
		r = std::atanh(tanh_r);
	else
		r = std::log((1.0 + tanh_r) / std::sqrt(std::abs(big_c)));

	auto const phi = tanh_r > 0.0 ? std::arg(-g.big_plus) : 0.0;

	// Lc fixes only e^{2 i angle}; of the two candidate angles take the one
	// whose rotation prefactor best accounts for the element's own phase
	auto const half = 0.5 * std::arg(big_c);
	auto const residual_for = [&](double angle) {
		return g.phase + 0.5 * I * angle;
	};
	auto angle = half;
	auto const other = normalize_angle(half + pi);
	if (std::abs(residual_for(other)) < std::abs(residual_for(half)))
		angle = other;

	SqueezeRotationFactorization f;
	f.squeeze = SqueezeParams(r, phi);
	f.rotation = RotationParams(angle);
	f.residual_phase = residual_for(f.rotation.angle());
	f.recomposition_residual = element_distance(recompose(f), g);

	auto const ag = g.big_plus * g.big_minus;
	f.beta_relation_residual =
	    std::abs(ag) > 0.0
	        ? std::abs(big_c - ag * (1.0 - 1.0 / std::abs(ag)))
	        : std::numeric_limits<double>::quiet_NaN();

	if (!(f.recomposition_residual <= 1e-8))
		throw NotFactorizable("element is not a squeeze-rotation product "
		                      "(recomposition residual too large)");
	return f;
}

} // namespace bchlie

#pragma once

// Single-mode squeezing and rotation operators as su(1,1) group elements,
// with T+ = a+^2/2, T- = a^2/2, Tc = (a+ a + a a+)/4.

#include "bchlie/algebra.hpp"

namespace bchlie {

/// Wraps an angle into (-pi, pi]; -pi maps to +pi.
double normalize_angle(double angle);

/// z = r exp(i phi) of S(z) = exp(-z/2 a+^2 + z*/2 a^2).
class SqueezeParams
{
public:
	SqueezeParams() = default;
	/// Throws InvalidArgument for r < 0 or non-finite input.
	SqueezeParams(double r, double phi);

	double r() const { return r_; }
	double phi() const { return phi_; }
	cplx z() const { return std::polar(r_, phi_); }

private:
	double r_ = 0.0;
	double phi_ = 0.0;
};

/// Angle of R(angle) = exp(i angle a+ a).
class RotationParams
{
public:
	RotationParams() = default;
	/// Throws InvalidArgument for non-finite input.
	explicit RotationParams(double angle);

	double angle() const { return angle_; }

private:
	double angle_ = 0.0;
};

/// g = exp(residual_phase) * S(squeeze) * R(rotation).
struct SqueezeRotationFactorization
{
	SqueezeParams squeeze;
	RotationParams rotation;
	/// Scalar exponent left over once the rotation's own exp(-i angle/2)
	/// prefactor is accounted for.
	cplx residual_phase{};
	/// Max deviation between the recomposed element and the input, over
	/// (Lp, Lc, Lm, exp(phase)).
	double recomposition_residual = 0.0;
	/// |beta - alpha gamma (1 - 1/|alpha gamma|)| on the input coordinates;
	/// NaN when alpha gamma = 0.
	double beta_relation_residual = 0.0;
};

/// (-e^{i phi} tanh r, sech^2 r, e^{-i phi} tanh r), phase 0.
GroupElement squeeze_element(SqueezeParams const &p);

/// (0, e^{2 i angle}, 0) with phase -i angle / 2.
GroupElement rotation_element(RotationParams const &p);

/// S(z2) S(z1). Throws SingularDecomposition if
/// 1 + e^{i(phi1 - phi2)} tanh r1 tanh r2 vanishes.
GroupElement compose_squeezes(SqueezeParams const &z2, SqueezeParams const &z1);

/// Closed-form (alpha, beta, gamma) of S(z2) S(z1), evaluated directly from
/// the squeeze parameters rather than through compose_pair.
struct SqueezeProductCoefficients
{
	cplx alpha, beta, gamma;
};
SqueezeProductCoefficients squeeze_product_closed_form(SqueezeParams const &z2,
                                                       SqueezeParams const &z1);

/// Writes an su(1,1) element as exp(residual_phase) S(z) R(angle).
///
/// tanh r = |Lp|, phi = arg(-Lp), and e^{2 i angle} = Lc / sech^2 r with the
/// angle taken in (-pi/2, pi/2], the branch of the closed-form rotation of a
/// two-squeeze product. Throws NotFactorizable when the element is not of
/// that form: wrong algebra, |Lp| != |Lm|, |Lp| >= 1, or a recomposition
/// residual above 1e-8.
SqueezeRotationFactorization factor_squeeze_rotation(GroupElement const &g);

/// The element exp(f.residual_phase) S(f.squeeze) R(f.rotation).
GroupElement recompose(SqueezeRotationFactorization const &f);

} // namespace bchlie

#pragma once

// Core types shared by every module: the three algebras, exponent coordinates,
// normal-ordered group elements and the error hierarchy.

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bchlie {

using cplx = std::complex<double>;

inline constexpr cplx I{0.0, 1.0};

/// Relative tolerance of every singular-denominator guard.
inline constexpr double tol_singular = 1e-12;

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
	virtual std::string_view kind() const noexcept = 0;
};

/// A denominator of the Gauss chart vanished: the product has no
/// normal-ordered decomposition.
class SingularDecomposition : public Error
{
public:
	SingularDecomposition(std::string what, double denominator,
	                      std::optional<std::size_t> step = std::nullopt)
	    : Error(std::move(what)), denominator_(denominator), step_(step)
	{
	}

	std::string_view kind() const noexcept override
	{
		return "SingularDecomposition";
	}
	/// |denominator| at the point of failure.
	double denominator() const noexcept { return denominator_; }
	/// Zero-based position in a sequence, when the failure happened inside one.
	std::optional<std::size_t> step() const noexcept { return step_; }

	SingularDecomposition at_step(std::size_t step) const
	{
		return SingularDecomposition(what(), denominator_, step);
	}

private:
	double denominator_;
	std::optional<std::size_t> step_;
};

#define BCHLIE_SIMPLE_ERROR(Name)                                              \
	class Name : public Error                                              \
	{                                                                      \
	public:                                                                \
		using Error::Error;                                            \
		std::string_view kind() const noexcept override                \
		{                                                              \
			return #Name;                                          \
		}                                                              \
	}

BCHLIE_SIMPLE_ERROR(NonFiniteInput);
BCHLIE_SIMPLE_ERROR(AlgebraMismatch);
BCHLIE_SIMPLE_ERROR(EmptySequence);
BCHLIE_SIMPLE_ERROR(NotFactorizable);
BCHLIE_SIMPLE_ERROR(InvalidFrequency);
BCHLIE_SIMPLE_ERROR(InvalidArgument);

#undef BCHLIE_SIMPLE_ERROR

// ---------------------------------------------------------------------------
// Algebras

/// One of su(1,1), su(2), so(2,1), expressed through the commutators
///   [T-, T+] = 2 eps Tc,   [Tc, T+-] = +-delta T+-.
/// Only the three admissible (eps, delta) pairs can be constructed.
class AlgebraKind
{
public:
	enum class Kind
	{
		SU11,
		SU2,
		SO21
	};

	constexpr Kind kind() const noexcept { return kind_; }

	constexpr cplx epsilon() const noexcept
	{
		switch (kind_)
		{
		case Kind::SU11:
			return {1.0, 0.0};
		case Kind::SU2:
			return {-1.0, 0.0};
		case Kind::SO21:
			break;
		}
		return {0.0, 0.5};
	}

	constexpr cplx delta() const noexcept
	{
		switch (kind_)
		{
		case Kind::SU11:
		case Kind::SU2:
			return {1.0, 0.0};
		case Kind::SO21:
			break;
		}
		return {0.0, 1.0};
	}

	constexpr bool operator==(AlgebraKind const &) const = default;

	friend constexpr AlgebraKind make_algebra(Kind kind) noexcept;

private:
	constexpr explicit AlgebraKind(Kind kind) noexcept : kind_(kind) {}
	Kind kind_;
};

constexpr AlgebraKind make_algebra(AlgebraKind::Kind kind) noexcept
{
	return AlgebraKind(kind);
}

inline constexpr AlgebraKind su11 = make_algebra(AlgebraKind::Kind::SU11);
inline constexpr AlgebraKind su2 = make_algebra(AlgebraKind::Kind::SU2);
inline constexpr AlgebraKind so21 = make_algebra(AlgebraKind::Kind::SO21);

/// "su11", "su2" or "so21".
std::string_view to_string(AlgebraKind algebra) noexcept;
/// Inverse of to_string; throws InvalidArgument for anything else.
AlgebraKind algebra_from_string(std::string_view name);

// ---------------------------------------------------------------------------
// Coordinates

/// Single-exponential coordinates: exp(lp T+ + lc Tc + lm T-).
struct ExponentParams
{
	cplx lambda_plus{};
	cplx lambda_c{};
	cplx lambda_minus{};
};

/// Normal-ordered coordinates
///   exp(phase) * exp(big_plus T+) exp(log_c Tc) exp(big_minus T-).
/// The Cartan coordinate is stored as its logarithm; Lambda_c = exp(log_c).
struct GroupElement
{
	AlgebraKind algebra = su11;
	cplx big_plus{};
	cplx log_c{};
	cplx big_minus{};
	cplx phase{};

	cplx big_c() const { return std::exp(log_c); }
};

GroupElement identity_element(AlgebraKind algebra);

inline bool is_finite(cplx z)
{
	return std::isfinite(z.real()) && std::isfinite(z.imag());
}

bool is_finite(ExponentParams const &lam);
bool is_finite(GroupElement const &g);

/// Principal logarithm, imaginary part in (-pi, pi].
cplx principal_log(cplx w);

/// w^p evaluated as exp(p * principal_log(w)).
cplx principal_pow(cplx w, cplx p);

} // namespace bchlie

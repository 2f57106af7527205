#pragma once

// Faithful 2x2 matrix representations of the three algebras. Everything the
// parameter-level formulas claim is checked against products of these
// matrices, which have exact closed-form exponentials.

#include "bchlie/algebra.hpp"

#include <array>

namespace bchlie {

struct Mat2
{
	cplx m00{}, m01{}, m10{}, m11{};

	static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
	static Mat2 diag(cplx a, cplx b) { return {a, 0.0, 0.0, b}; }

	cplx det() const { return m00 * m11 - m01 * m10; }
	cplx trace() const { return m00 + m11; }
	Mat2 adjoint() const
	{
		return {std::conj(m00), std::conj(m10), std::conj(m01),
		        std::conj(m11)};
	}
	bool finite() const
	{
		return is_finite(m00) && is_finite(m01) && is_finite(m10) &&
		       is_finite(m11);
	}

	Mat2 &operator+=(Mat2 const &o)
	{
		m00 += o.m00;
		m01 += o.m01;
		m10 += o.m10;
		m11 += o.m11;
		return *this;
	}
	Mat2 &operator-=(Mat2 const &o)
	{
		m00 -= o.m00;
		m01 -= o.m01;
		m10 -= o.m10;
		m11 -= o.m11;
		return *this;
	}
	Mat2 &operator*=(cplx s)
	{
		m00 *= s;
		m01 *= s;
		m10 *= s;
		m11 *= s;
		return *this;
	}
};

inline Mat2 operator+(Mat2 a, Mat2 const &b) { return a += b; }
inline Mat2 operator-(Mat2 a, Mat2 const &b) { return a -= b; }
inline Mat2 operator-(Mat2 a) { return a *= -1.0; }
inline Mat2 operator*(cplx s, Mat2 a) { return a *= s; }
inline Mat2 operator*(Mat2 a, cplx s) { return a *= s; }

inline Mat2 operator*(Mat2 const &a, Mat2 const &b)
{
	return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
	        a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

inline Mat2 commutator(Mat2 const &a, Mat2 const &b) { return a * b - b * a; }

/// Largest entrywise modulus of a - b.
double max_abs_diff(Mat2 const &a, Mat2 const &b);

/// Largest entrywise modulus.
double max_abs(Mat2 const &a);

/// Matrix carriers of T+, Tc, T- for one algebra.
struct GeneratorSet
{
	Mat2 m_plus;
	Mat2 m_c;
	Mat2 m_minus;
};

/// Largest entrywise violation of the defining commutators and tracelessness.
double commutator_defect(GeneratorSet const &gens, AlgebraKind algebra);

/// Throws std::logic_error if the set fails the commutator relations.
GeneratorSet const &generators_for(AlgebraKind algebra);

/// exp(m); closed form via the traceless part, s^2 = -det.
Mat2 mat_exp(Mat2 const &m);

/// exp(phase) exp(Lp M+) exp(log_c Mc) exp(Lm M-).
Mat2 element_matrix(GroupElement const &g);

/// exp(lp M+ + lc Mc + lm M-).
Mat2 exponent_matrix(AlgebraKind algebra, ExponentParams const &lam);

/// lp M+ + lc Mc + lm M-, e.g. a Hamiltonian's matrix.
Mat2 algebra_matrix(AlgebraKind algebra, ExponentParams const &lam);

} // namespace bchlie

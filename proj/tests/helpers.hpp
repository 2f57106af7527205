#pragma once

// Random generators and independent oracles shared by the test suites.

#include "bchlie/algebra.hpp"
#include "bchlie/composer.hpp"
#include "bchlie/rep_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace bchlie::testing {

inline constexpr std::array<AlgebraKind, 3> all_algebras{su11, su2, so21};

class Rng
{
public:
	explicit Rng(std::uint64_t seed) : gen_(seed) {}

	double uniform(double lo, double hi)
	{
		return std::uniform_real_distribution<double>(lo, hi)(gen_);
	}

	/// Uniform in the closed disc of the given radius.
	cplx in_disc(double radius)
	{
		auto const r = radius * std::sqrt(uniform(0.0, 1.0));
		return std::polar(r, uniform(-M_PI, M_PI));
	}

	ExponentParams exponent(double radius)
	{
		return {in_disc(radius), in_disc(radius), in_disc(radius)};
	}

	/// Random normal-ordered element with |Lp|, |log_c|, |Lm| <= radius.
	GroupElement element(AlgebraKind algebra, double radius)
	{
		return {algebra, in_disc(radius), in_disc(radius), in_disc(radius), 0.0};
	}

	std::mt19937_64 &engine() { return gen_; }

private:
	std::mt19937_64 gen_;
};

/// exp(m) from a Taylor series with scaling and squaring; shares nothing
/// with the closed form under test.
inline Mat2 taylor_exp(Mat2 const &m, int terms = 30)
{
	int squarings = 0;
	auto scaled = m;
	while (max_abs(scaled) > 0.5)
	{
		scaled *= 0.5;
		++squarings;
	}
	auto sum = Mat2::identity();
	auto term = Mat2::identity();
	for (int k = 1; k < terms; ++k)
	{
		term = term * scaled;
		term *= 1.0 / k;
		sum += term;
	}
	for (int i = 0; i < squarings; ++i)
		sum = sum * sum;
	return sum;
}

/// Max difference over (Lp, exp(log_c), Lm, exp(phase)).
inline double element_diff(GroupElement const &a, GroupElement const &b)
{
	return std::max({std::abs(a.big_plus - b.big_plus),
	                 std::abs(a.big_c() - b.big_c()),
	                 std::abs(a.big_minus - b.big_minus),
	                 std::abs(std::exp(a.phase) - std::exp(b.phase))});
}

inline bool bitwise_equal(GroupElement const &a, GroupElement const &b)
{
	return a.algebra == b.algebra && a.big_plus == b.big_plus &&
	       a.log_c == b.log_c && a.big_minus == b.big_minus &&
	       a.phase == b.phase;
}

} // namespace bchlie::testing

#pragma once

#include "bchlie/algebra.hpp"

namespace bchlie::detail {

/// Below this |s| the even functions are summed as Taylor series.
inline constexpr double series_threshold = 1e-4;

struct CoshSinhc
{
	cplx cosh;  // cosh(s)
	cplx sinhc; // sinh(s) / s, equal to 1 at s = 0
};

/// cosh(s) and sinh(s)/s; both even in s, so either root of s^2 works.
inline CoshSinhc cosh_sinhc(cplx s)
{
	if (std::abs(s) < series_threshold)
	{
		// six terms each; truncation error is far below double rounding
		auto const s2 = s * s;
		cplx ch = 1.0, shc = 1.0;
		cplx term_ch = 1.0, term_shc = 1.0;
		for (int k = 1; k < 6; ++k)
		{
			term_ch *= s2 / double((2 * k - 1) * (2 * k));
			term_shc *= s2 / double((2 * k) * (2 * k + 1));
			ch += term_ch;
			shc += term_shc;
		}
		return {ch, shc};
	}
	return {std::cosh(s), std::sinh(s) / s};
}

} // namespace bchlie::detail

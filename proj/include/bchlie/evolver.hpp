#pragma once

// Time-evolution operator of H(t) = eta+(t) T+ + eta_c(t) Tc + eta-(t) T-
// (hbar = 1) built as an ordered product of per-step exponentials
// exp(-i tau H_j), each disentangled and folded with compose_pair.

#include "bchlie/algebra.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace bchlie {

/// Hamiltonian coefficients at one instant.
struct EtaTriple
{
	cplx plus{};
	cplx c{};
	cplx minus{};
};

/// The coefficient function must be a pure function of t.
struct HamiltonianSchedule
{
	AlgebraKind algebra = su11;
	std::function<EtaTriple(double)> eta;
	double t_final = 0.0;
};

struct Checkpoint
{
	double t;
	GroupElement element;
};

struct EvolutionResult
{
	GroupElement element;
	std::size_t steps = 0;
	double tau = 0.0;
	std::vector<Checkpoint> trajectory;
};

enum class Sampling
{
	/// eta_j = eta(j tau), the first-order scheme.
	RightEndpoint,
	/// eta_j = eta((j - 1/2) tau); second order for smooth schedules.
	Midpoint,
};

struct EvolveOptions
{
	Sampling sampling = Sampling::RightEndpoint;
	/// Record the trajectory (t = 0, every `checkpoint_every` steps, and the
	/// final step).
	bool record_trajectory = false;
	/// 0 selects max(1, N / 100).
	std::size_t checkpoint_every = 0;
};

/// disentangle(algebra, -i tau eta). Throws InvalidArgument for tau <= 0,
/// NonFiniteInput, SingularDecomposition.
GroupElement step_element(AlgebraKind algebra, EtaTriple const &eta, double tau);

/// The N step elements of evolve(), earliest first.
std::vector<GroupElement> step_elements(HamiltonianSchedule const &schedule,
                                        std::size_t steps,
                                        Sampling sampling = Sampling::RightEndpoint);

/// U(t_final, 0) from `steps` equal intervals. Singular steps are reported
/// with their zero-based index.
EvolutionResult evolve(HamiltonianSchedule const &schedule, std::size_t steps,
                       EvolveOptions const &options = {});

/// H = p^2/2 + omega(t)^2 q^2/2 in the su(1,1) generators of the oscillator
/// with reference frequency omega0:
///   eta+ = eta- = (omega^2 - omega0^2) / (2 omega0),
///   eta_c = (omega^2 + omega0^2) / omega0.
/// Throws InvalidFrequency if omega0 <= 0 or, at evaluation time, if
/// omega(t) is non-positive or non-finite.
HamiltonianSchedule oscillator_schedule(double omega0,
                                        std::function<double(double)> omega_of_t,
                                        double t_final);

} // namespace bchlie

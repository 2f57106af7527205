#include "bchlie/evolver.hpp"
#include "bchlie/composer.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace bchlie {

namespace {

void validate(HamiltonianSchedule const &schedule, std::size_t steps)
{
	if (steps < 1)
		throw InvalidArgument("evolve: need at least one step");
	if (!(schedule.t_final > 0.0) || !std::isfinite(schedule.t_final))
		throw InvalidArgument("evolve: t_final must be positive and finite");
	if (!schedule.eta)
		throw InvalidArgument("evolve: schedule has no coefficient function");
}

double sample_time(std::size_t j, double tau, Sampling sampling)
{
	// j is one-based
	if (sampling == Sampling::Midpoint)
		return (double(j) - 0.5) * tau;
	return double(j) * tau;
}

} // namespace

GroupElement step_element(AlgebraKind algebra, EtaTriple const &eta, double tau)
{
	if (!(tau > 0.0))
		throw InvalidArgument("step_element: tau must be positive");
	cplx const factor = -I * tau;
	return disentangle(algebra, {factor * eta.plus, factor * eta.c,
	                             factor * eta.minus})
	    .element;
}

std::vector<GroupElement> step_elements(HamiltonianSchedule const &schedule,
                                        std::size_t steps, Sampling sampling)
{
	validate(schedule, steps);
	auto const tau = schedule.t_final / double(steps);
	std::vector<GroupElement> out;
	out.reserve(steps);
	for (std::size_t j = 1; j <= steps; ++j)
		out.push_back(step_element(schedule.algebra,
		                           schedule.eta(sample_time(j, tau, sampling)),
		                           tau));
	return out;
}

EvolutionResult evolve(HamiltonianSchedule const &schedule, std::size_t steps,
                       EvolveOptions const &options)
{
	validate(schedule, steps);

	EvolutionResult result;
	result.steps = steps;
	result.tau = schedule.t_final / double(steps);
	auto const tau = result.tau;

	auto const every = options.checkpoint_every > 0
	                       ? options.checkpoint_every
	                       : std::max<std::size_t>(1, steps / 100);
	if (options.record_trajectory)
		result.trajectory.push_back({0.0, identity_element(schedule.algebra)});

	// same fold as compose_many, without materialising every step
	GroupElement acc;
	for (std::size_t j = 1; j <= steps; ++j)
	{
		auto const t = sample_time(j, tau, options.sampling);
		try
		{
			auto const g = step_element(schedule.algebra, schedule.eta(t), tau);
			acc = j == 1 ? g : compose_pair(g, acc);
		}
		catch (SingularDecomposition const &e)
		{
			throw e.at_step(j - 1);
		}

		if (options.record_trajectory && (j % every == 0 || j == steps))
			result.trajectory.push_back({double(j) * tau, acc});
	}
	result.element = acc;
	return result;
}

HamiltonianSchedule oscillator_schedule(double omega0,
                                        std::function<double(double)> omega_of_t,
                                        double t_final)
{
	if (!(omega0 > 0.0) || !std::isfinite(omega0))
		throw InvalidFrequency("oscillator_schedule: omega0 must be positive");
	if (!omega_of_t)
		throw InvalidFrequency("oscillator_schedule: no frequency profile");

	auto eta = [omega0, omega = std::move(omega_of_t)](double t) {
		auto const w = omega(t);
		if (!(w > 0.0) || !std::isfinite(w))
			throw InvalidFrequency(
			    fmt::format("oscillator frequency {} at t = {} is not positive",
			                w, t));
		auto const w2 = w * w;
		auto const w02 = omega0 * omega0;
		cplx const squeeze = (w2 - w02) / (2.0 * omega0);
		return EtaTriple{squeeze, (w2 + w02) / omega0, squeeze};
	};
	return {su11, std::move(eta), t_final};
}

} // namespace bchlie

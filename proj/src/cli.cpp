#include "bchlie/cli.hpp"
#include "bchlie/composer.hpp"
#include "bchlie/evolver.hpp"
#include "bchlie/io.hpp"
#include "bchlie/squeeze.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>

namespace bchlie::cli {

namespace {

using io::json;

struct Streams
{
	std::ostream &out;
	std::ostream &err;
};

int report_singular(Streams s, SingularDecomposition const &e,
                    std::optional<double> time = std::nullopt)
{
	json j;
	j["error"] = std::string(e.kind());
	j["message"] = e.what();
	j["denominator"] = e.denominator();
	if (e.step())
		j["step"] = *e.step();
	if (time)
		j["time"] = *time;
	s.out << io::dump(j);
	return numerical_error;
}

int report_numerical(Streams s, Error const &e)
{
	json j;
	j["error"] = std::string(e.kind());
	j["message"] = e.what();
	s.out << io::dump(j);
	return numerical_error;
}

int report_input(Streams s, std::string const &what)
{
	s.err << "error: " << what << '\n';
	return input_error;
}

// ---------------------------------------------------------------------------

struct DisentangleArgs
{
	std::string algebra;
	std::vector<std::string> lambda;
};

int cmd_disentangle(DisentangleArgs const &a, Streams s)
{
	auto const algebra = algebra_from_string(a.algebra);
	ExponentParams const lam{io::parse_complex(a.lambda.at(0)),
	                         io::parse_complex(a.lambda.at(1)),
	                         io::parse_complex(a.lambda.at(2))};
	try
	{
		auto const res = disentangle(algebra, lam);
		json j;
		j["algebra"] = std::string(to_string(algebra));
		j["Lambda_plus"] = io::to_json(res.element.big_plus);
		j["Lambda_c"] = io::to_json(res.element.big_c());
		j["Lambda_minus"] = io::to_json(res.element.big_minus);
		j["log_c"] = io::to_json(res.element.log_c);
		j["nu"] = io::to_json(res.nu);
		s.out << io::dump(j);
		return ok;
	}
	catch (SingularDecomposition const &e)
	{
		return report_singular(s, e);
	}
}

struct ComposeArgs
{
	std::string algebra;
	std::string path;
	bool continued_fraction = false;
};

int cmd_compose(ComposeArgs const &a, Streams s)
{
	auto const algebra = algebra_from_string(a.algebra);
	auto const elements = io::load_elements(a.path, algebra);
	if (elements.empty())
		return report_input(s, "element list is empty");

	try
	{
		auto const g = compose_many(elements);
		json j;
		j["algebra"] = std::string(to_string(algebra));
		j["count"] = elements.size();
		auto const fields = io::element_to_json(g);
		for (auto const &[key, value] : fields.items())
			j[key] = value;
		if (a.continued_fraction)
		{
			auto const cf = alpha_continued_fraction(elements);
			j["alpha_continued_fraction"] = io::to_json(cf);
			j["alpha_difference"] = std::abs(cf - g.big_plus);
		}
		s.out << io::dump(j);
		return ok;
	}
	catch (SingularDecomposition const &e)
	{
		return report_singular(s, e);
	}
}

struct SqueezeArgs
{
	std::string z1 = "0,0";
	std::string z2 = "0,0";
};

SqueezeParams parse_squeeze(std::string const &text)
{
	auto const rp = io::parse_complex(text);
	try
	{
		return SqueezeParams(rp.real(), rp.imag());
	}
	catch (InvalidArgument const &e)
	{
		throw io::SchemaError(e.what());
	}
}

int cmd_squeeze_compose(SqueezeArgs const &a, Streams s)
{
	auto const z1 = parse_squeeze(a.z1);
	auto const z2 = parse_squeeze(a.z2);
	try
	{
		auto const g = compose_squeezes(z2, z1);
		auto const f = factor_squeeze_rotation(g);

		json j;
		j["alpha"] = io::to_json(g.big_plus);
		j["beta"] = io::to_json(g.big_c());
		j["gamma"] = io::to_json(g.big_minus);
		json fj;
		fj["r"] = f.squeeze.r();
		fj["phi"] = f.squeeze.phi();
		fj["rotation_angle"] = f.rotation.angle();
		fj["residual_phase"] = io::to_json(f.residual_phase);
		j["factorization"] = fj;
		j["residual"] = f.recomposition_residual;
		j["beta_relation_residual"] = f.beta_relation_residual;
		s.out << io::dump(j);
		return ok;
	}
	catch (SingularDecomposition const &e)
	{
		return report_singular(s, e);
	}
	catch (NotFactorizable const &e)
	{
		return report_numerical(s, e);
	}
}

struct EvolveArgs
{
	std::string schedule;
	std::size_t steps = 0;
	std::size_t checkpoints = 0;
	std::string csv;
	bool midpoint = false;
};

int cmd_evolve(EvolveArgs const &a, Streams s)
{
	auto const schedule = io::load_schedule(a.schedule);
	EvolveOptions opt;
	opt.sampling = a.midpoint ? Sampling::Midpoint : Sampling::RightEndpoint;
	opt.record_trajectory = !a.csv.empty();
	opt.checkpoint_every = a.checkpoints;

	auto const tau = schedule.t_final / double(a.steps);
	try
	{
		auto const res = evolve(schedule, a.steps, opt);
		if (!a.csv.empty())
		{
			std::ofstream csv(a.csv);
			if (!csv)
				return report_input(s, "cannot write '" + a.csv + "'");
			io::write_trajectory_csv(csv, res.trajectory);
		}

		json j;
		j["algebra"] = std::string(to_string(schedule.algebra));
		j["steps"] = res.steps;
		j["tau"] = res.tau;
		j["t_final"] = schedule.t_final;
		j["sampling"] = a.midpoint ? "midpoint" : "right";
		auto const fields = io::element_to_json(res.element);
		for (auto const &[key, value] : fields.items())
			j[key] = value;
		if (!a.csv.empty())
			j["trajectory_rows"] = res.trajectory.size();
		s.out << io::dump(j);
		return ok;
	}
	catch (SingularDecomposition const &e)
	{
		std::optional<double> t;
		if (e.step())
			t = (double(*e.step() + 1) - (a.midpoint ? 0.5 : 0.0)) * tau;
		return report_singular(s, e, t);
	}
}

} // namespace

int run(int argc, char const *const *argv, std::ostream &out, std::ostream &err)
{
	Streams const s{out, err};

	CLI::App app{"BCH-like composition calculus for su(1,1), su(2) and so(2,1)",
	             "bchlie"};
	app.require_subcommand(1);

	auto const algebra_check =
	    CLI::IsMember({std::string("su11"), std::string("su2"),
	                   std::string("so21")});

	DisentangleArgs dis;
	auto *dis_cmd = app.add_subcommand(
	    "disentangle", "Normal-ordered coordinates of exp(lp T+ + lc Tc + lm T-)");
	dis_cmd->add_option("--algebra", dis.algebra)->required()->check(algebra_check);
	dis_cmd->add_option("--lambda", dis.lambda, "lp lc lm, each as re,im")
	    ->required()
	    ->expected(3);

	ComposeArgs comp;
	auto *comp_cmd = app.add_subcommand(
	    "compose", "Compose a JSON list of elements (earliest first)");
	comp_cmd->add_option("--algebra", comp.algebra)->required()->check(algebra_check);
	comp_cmd->add_option("elements", comp.path, "JSON element list")->required();
	comp_cmd->add_flag("--continued-fraction", comp.continued_fraction,
	                   "Also evaluate alpha as a continued fraction");

	SqueezeArgs sq;
	auto *sq_cmd = app.add_subcommand(
	    "squeeze-compose", "S(z2) S(z1) and its squeeze-rotation factorization");
	sq_cmd->add_option("--z1", sq.z1, "r,phi of the first squeeze");
	sq_cmd->add_option("--z2", sq.z2, "r,phi of the second squeeze");

	EvolveArgs ev;
	auto *ev_cmd = app.add_subcommand(
	    "evolve", "Time-evolution operator of a schedule file");
	ev_cmd->add_option("--schedule", ev.schedule)->required();
	ev_cmd->add_option("--steps", ev.steps)
	    ->required()
	    ->check(CLI::PositiveNumber);
	ev_cmd->add_option("--checkpoints", ev.checkpoints,
	                   "Checkpoint interval in steps (default N/100)")
	    ->check(CLI::PositiveNumber);
	ev_cmd->add_option("--csv", ev.csv, "Write the trajectory as CSV");
	ev_cmd->add_flag("--midpoint", ev.midpoint,
	                 "Sample eta at interval midpoints (second order)");

	try
	{
		app.parse(argc, argv);
	}
	catch (CLI::CallForHelp const &e)
	{
		app.exit(e, out, err);
		return ok;
	}
	catch (CLI::ParseError const &e)
	{
		app.exit(e, out, err);
		return input_error;
	}

	try
	{
		if (*dis_cmd)
			return cmd_disentangle(dis, s);
		if (*comp_cmd)
			return cmd_compose(comp, s);
		if (*sq_cmd)
			return cmd_squeeze_compose(sq, s);
		return cmd_evolve(ev, s);
	}
	catch (io::SchemaError const &e)
	{
		return report_input(s, e.what());
	}
	catch (InvalidArgument const &e)
	{
		return report_input(s, e.what());
	}
	catch (InvalidFrequency const &e)
	{
		return report_input(s, e.what());
	}
	catch (NonFiniteInput const &e)
	{
		return report_input(s, e.what());
	}
	catch (Error const &e)
	{
		return report_numerical(s, e);
	}
	catch (nlohmann::json::exception const &e)
	{
		return report_input(s, e.what());
	}
}

int run(std::vector<std::string> const &args, std::ostream &out,
        std::ostream &err)
{
	std::vector<char const *> argv{"bchlie"};
	for (auto const &a : args)
		argv.push_back(a.c_str());
	return run(int(argv.size()), argv.data(), out, err);
}

} // namespace bchlie::cli

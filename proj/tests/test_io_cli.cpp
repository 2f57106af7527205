#include "bchlie/cli.hpp"
#include "bchlie/composer.hpp"
#include "bchlie/io.hpp"
#include "bchlie/squeeze.hpp"
#include "helpers.hpp"

#include <cmath>
#include <doctest.h>
#include <fmt/format.h>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <unistd.h>

using namespace bchlie;
using bchlie::io::json;
using bchlie::testing::Rng;

namespace {

namespace fs = std::filesystem;

struct RunResult
{
	int code;
	std::string out;
	std::string err;
};

RunResult run_cli(std::vector<std::string> const &args)
{
	std::ostringstream out, err;
	auto const code = cli::run(args, out, err);
	return {code, out.str(), err.str()};
}

class TempDir
{
public:
	TempDir()
	    : path_(fs::temp_directory_path() /
	            ("bchlie_test_" + std::to_string(::getpid())))
	{
		fs::create_directories(path_);
	}
	~TempDir() { fs::remove_all(path_); }

	std::string write(std::string const &name, std::string const &content) const
	{
		auto const p = path_ / name;
		std::ofstream(p) << content;
		return p.string();
	}
	std::string file(std::string const &name) const { return (path_ / name).string(); }

private:
	fs::path path_;
};

cplx cx(json const &j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

std::string fmt_complex(cplx z)
{
	std::ostringstream os;
	os.precision(17);
	os << z.real() << ',' << z.imag();
	return os.str();
}

} // namespace

TEST_CASE("parse_complex")
{
	CHECK(io::parse_complex("1.5,-2") == cplx(1.5, -2.0));
	CHECK(io::parse_complex("-0.25") == cplx(-0.25, 0.0));
	CHECK(io::parse_complex("1e-3,4E2") == cplx(1e-3, 400.0));
	CHECK_THROWS_AS(io::parse_complex("1.5,"), io::SchemaError);
	CHECK_THROWS_AS(io::parse_complex("abc"), io::SchemaError);
	CHECK_THROWS_AS(io::parse_complex("1,2,3"), io::SchemaError);
	CHECK_THROWS_AS(io::parse_complex("nan,0"), io::SchemaError);
}

TEST_CASE("dump uses a fixed layout with 17 significant digits")
{
	json j;
	j["x"] = 0.1;
	j["z"] = io::to_json({1.0, -2.5});
	j["n"] = 3;
	j["s"] = "a\"b";
	CHECK(io::dump(j) == "{\n  \"x\": 0.10000000000000001,\n  \"z\": [1, -2.5],\n"
	                     "  \"n\": 3,\n  \"s\": \"a\\\"b\"\n}\n");
	// parses back to the same doubles
	auto const back = json::parse(io::dump(j));
	CHECK(back["x"].get<double>() == 0.1);
}

TEST_CASE("schedule files")
{
	SUBCASE("oscillator preset")
	{
		auto const doc = json::parse(R"({"format": 1, "algebra": "su11",
			"t_final": 2.0,
			"preset": {"name": "oscillator", "omega0": 1.0,
			           "omega_profile": {"type": "constant", "omega": 2.0}}})");
		auto const s = io::parse_schedule(doc);
		CHECK(s.algebra == su11);
		CHECK(s.t_final == 2.0);
		auto const eta = s.eta(0.3);
		CHECK(eta.plus == cplx(1.5, 0.0));
		CHECK(eta.c == cplx(5.0, 0.0));
	}

	SUBCASE("jump, sinusoid and table profiles")
	{
		auto const make = [](std::string const &profile) {
			return io::parse_schedule(json::parse(
			    R"({"format": 1, "algebra": "su11", "t_final": 4.0,
			        "preset": {"name": "oscillator", "omega0": 1.0,
			                   "omega_profile": )" +
			    profile + "}}"));
		};
		auto const jump = make(R"({"type": "jump", "omega1": 3.0, "t_jump": 1.0})");
		CHECK(jump.eta(0.5).c == cplx(2.0, 0.0));
		CHECK(jump.eta(1.5).c == cplx(10.0, 0.0));

		auto const sine =
		    make(R"({"type": "sinusoid", "amplitude": 0.3, "frequency": 1.0})");
		auto const w = 1.0 + 0.3 * std::sin(2.0);
		CHECK(sine.eta(2.0).c.real() == doctest::Approx(w * w + 1.0));

		auto const table = make(R"({"type": "table", "t": [0, 2], "omega": [1, 3]})");
		// omega(1) = 2
		CHECK(table.eta(1.0).c.real() == doctest::Approx(5.0));
		CHECK(table.eta(3.5).c.real() == doctest::Approx(10.0));
	}

	SUBCASE("sampled eta interpolates linearly")
	{
		auto const s = io::parse_schedule(json::parse(R"({"format": 1,
			"algebra": "su2", "t_final": 3.0, "samples": [
			{"t": 0, "eta_plus": [0, 0], "eta_c": [1, 0], "eta_minus": [0, 0]},
			{"t": 2, "eta_plus": [2, 2], "eta_c": [3, 0], "eta_minus": [2, -2]}]})"));
		CHECK(s.algebra == su2);
		auto const e = s.eta(0.5);
		CHECK(e.plus == cplx(0.5, 0.5));
		CHECK(e.c == cplx(1.5, 0.0));
		CHECK(e.minus == cplx(0.5, -0.5));
		CHECK(s.eta(2.7).c == cplx(3.0, 0.0));
	}

	SUBCASE("schema violations")
	{
		auto const bad = [](std::string const &text) {
			CHECK_THROWS_AS(io::parse_schedule(json::parse(text)), io::SchemaError);
		};
		auto const sample = R"({"t": 0, "eta_plus": [0, 0], "eta_c": [1, 0],
		                         "eta_minus": [0, 0]})";
		bad(R"({"algebra": "su11", "t_final": 1, "samples": []})");
		bad(R"({"format": 2, "algebra": "su11", "t_final": 1, "samples": []})");
		bad(R"({"format": 1, "algebra": "so3", "t_final": 1, "samples": []})");
		bad(R"({"format": 1, "algebra": "su11", "t_final": 1})");
		bad(R"({"format": 1, "algebra": "su11", "t_final": -1, "samples": [)" +
		    std::string(sample) + "]}");
		bad(R"({"format": 1, "algebra": "su11", "t_final": 1, "samples": [)" +
		    std::string(sample) + "," + sample + "]}");
		bad(R"({"format": 1, "algebra": "su11", "t_final": 1,
		        "samples": [{"t": 2, "eta_plus": [0, 0], "eta_c": [1, 0],
		                     "eta_minus": [0, 0]}]})");
		bad(R"({"format": 1, "algebra": "su11", "t_final": 1,
		        "samples": [{"t": 0, "eta_plus": [0], "eta_c": [1, 0],
		                     "eta_minus": [0, 0]}]})");
		bad(R"({"format": 1, "algebra": "su2", "t_final": 1,
		        "preset": {"name": "oscillator", "omega0": 1,
		                   "omega_profile": {"type": "constant", "omega": 1}}})");
		bad(R"({"format": 1, "algebra": "su11", "t_final": 1,
		        "preset": {"name": "oscillator", "omega0": 0,
		                   "omega_profile": {"type": "constant", "omega": 1}}})");
		bad(R"({"format": 1, "algebra": "su11", "t_final": 1,
		        "preset": {"name": "oscillator", "omega0": 1,
		                   "omega_profile": {"type": "spline"}}})");
		bad(R"({"format": 1, "algebra": "su11", "t_final": 1, "samples": [)" +
		    std::string(sample) + R"(], "preset": {"name": "oscillator"}})");
	}
}

TEST_CASE("element lists")
{
	auto const gs = io::parse_elements(json::parse(R"([
		{"Lambda_plus": [0.1, 0], "Lambda_c": [-1, 0], "Lambda_minus": [0, 0.2]},
		{"Lambda_plus": [0, 0], "log_c": [0.5, 0.25], "Lambda_minus": [0, 0],
		 "phase": [0, -0.1]}])"),
	                                   so21);
	REQUIRE(gs.size() == 2);
	CHECK(gs[0].algebra == so21);
	CHECK(gs[0].log_c == cplx(0.0, std::numbers::pi));
	CHECK(gs[1].log_c == cplx(0.5, 0.25));
	CHECK(gs[1].phase == cplx(0.0, -0.1));

	auto const wrapped = io::parse_elements(
	    json::parse(R"({"elements": [{"Lambda_plus": [0, 0], "Lambda_c": [1, 0],
	                                  "Lambda_minus": [0, 0]}]})"),
	    su2);
	CHECK(wrapped.size() == 1);

	CHECK_THROWS_AS(io::parse_elements(json::parse(R"([{"Lambda_plus": [0, 0],
		"Lambda_c": [0, 0], "Lambda_minus": [0, 0]}])"),
	                                   su11),
	                io::SchemaError);
	CHECK_THROWS_AS(io::parse_elements(json::parse(R"([{"Lambda_plus": [0, 0],
		"Lambda_c": [1, 0], "log_c": [0, 0], "Lambda_minus": [0, 0]}])"),
	                                   su11),
	                io::SchemaError);
	CHECK_THROWS_AS(io::parse_elements(json::parse("42"), su11), io::SchemaError);
}

TEST_CASE("trajectory CSV round trip is exact")
{
	Rng rng(12);
	std::vector<Checkpoint> traj;
	for (int i = 0; i < 50; ++i)
		traj.push_back({rng.uniform(0.0, 10.0), rng.element(su11, 2.0)});

	std::stringstream ss;
	io::write_trajectory_csv(ss, traj);
	CHECK(ss.str().rfind("t,alpha_re,alpha_im,beta_re,beta_im,gamma_re,gamma_im\n",
	                     0) == 0);
	auto const rows = io::read_trajectory_csv(ss);
	REQUIRE(rows.size() == traj.size());
	for (std::size_t i = 0; i < rows.size(); ++i)
	{
		CHECK(rows[i].t == traj[i].t);
		CHECK(rows[i].alpha == traj[i].element.big_plus);
		CHECK(rows[i].beta == traj[i].element.big_c());
		CHECK(rows[i].gamma == traj[i].element.big_minus);
	}

	std::stringstream wrong("t,alpha\n1,2\n");
	CHECK_THROWS_AS(io::read_trajectory_csv(wrong), io::SchemaError);
	std::stringstream short_row(std::string(io::trajectory_csv_header) + "\n1,2,3\n");
	CHECK_THROWS_AS(io::read_trajectory_csv(short_row), io::SchemaError);
}

TEST_CASE("cli disentangle")
{
	auto const r = run_cli({"disentangle", "--algebra", "su11", "--lambda", "0,0",
	                        "0,0", "0,0"});
	REQUIRE(r.code == 0);
	auto const j = json::parse(r.out);
	CHECK(cx(j["Lambda_plus"]) == 0.0);
	CHECK(cx(j["Lambda_c"]) == 1.0);
	CHECK(cx(j["Lambda_minus"]) == 0.0);
	std::vector<std::string> keys;
	for (auto const &[k, v] : j.items())
		keys.push_back(k);
	CHECK(keys == std::vector<std::string>{"algebra", "Lambda_plus", "Lambda_c",
	                                       "Lambda_minus", "log_c", "nu"});

	auto const cartan = json::parse(
	    run_cli({"disentangle", "--algebra", "su2", "--lambda", "0,0", "0.5,0", "0,0"})
	        .out);
	CHECK(std::abs(cx(cartan["Lambda_c"]) - std::exp(0.5)) <= 1e-15);

	SUBCASE("matches the library bit for bit")
	{
		Rng rng(13);
		for (auto alg : bchlie::testing::all_algebras)
		{
			auto const lam = rng.exponent(0.6);
			auto const r2 = run_cli({"disentangle", "--algebra",
			                         std::string(to_string(alg)), "--lambda",
			                         fmt_complex(lam.lambda_plus),
			                         fmt_complex(lam.lambda_c),
			                         fmt_complex(lam.lambda_minus)});
			REQUIRE(r2.code == 0);
			auto const out = json::parse(r2.out);
			auto const lib = disentangle(alg, lam);
			CHECK(cx(out["Lambda_plus"]) == lib.element.big_plus);
			CHECK(cx(out["log_c"]) == lib.element.log_c);
			CHECK(cx(out["Lambda_minus"]) == lib.element.big_minus);
			CHECK(cx(out["nu"]) == lib.nu);
		}
	}

	SUBCASE("errors")
	{
		CHECK(run_cli({"disentangle", "--algebra", "su11", "--lambda", "x,0", "0,0",
		               "0,0"})
		          .code == 2);
		CHECK(run_cli({"disentangle", "--algebra", "su3", "--lambda", "0,0", "0,0",
		               "0,0"})
		          .code == 2);
		CHECK(run_cli({"disentangle", "--algebra", "su11", "--lambda", "0,0"}).code ==
		      2);
		CHECK(run_cli({}).code == 2);
		auto const h = fmt_complex({std::numbers::pi / 2.0, 0.0});
		auto const sing =
		    run_cli({"disentangle", "--algebra", "su11", "--lambda", h, "0,0", h});
		CHECK(sing.code == 3);
		CHECK(json::parse(sing.out)["error"] == "SingularDecomposition");
	}

	SUBCASE("help exits cleanly")
	{
		CHECK(run_cli({"--help"}).code == 0);
	}
}

TEST_CASE("cli compose")
{
	TempDir dir;
	auto const single = dir.write("single.json", R"([{"Lambda_plus": [0.1, 0.2],
		"Lambda_c": [0.9, 0.1], "Lambda_minus": [-0.3, 0]}])");
	auto const r = run_cli({"compose", "--algebra", "su11", single});
	REQUIRE(r.code == 0);
	auto const j = json::parse(r.out);
	CHECK(cx(j["alpha"]) == cplx(0.1, 0.2));
	CHECK(std::abs(cx(j["beta"]) - cplx(0.9, 0.1)) <= 1e-15);
	CHECK(cx(j["gamma"]) == cplx(-0.3, 0.0));

	auto const ids = dir.write("ids.json", R"([
		{"Lambda_plus": [0, 0], "Lambda_c": [1, 0], "Lambda_minus": [0, 0]},
		{"Lambda_plus": [0, 0], "Lambda_c": [1, 0], "Lambda_minus": [0, 0]}])");
	auto const id = json::parse(run_cli({"compose", "--algebra", "so21", ids}).out);
	CHECK(cx(id["alpha"]) == 0.0);
	CHECK(cx(id["beta"]) == 1.0);

	SUBCASE("continued fraction cross-check")
	{
		Rng rng(14);
		json list = json::array();
		for (int i = 0; i < 5; ++i)
		{
			auto const g = rng.element(su2, 0.4);
			json e;
			e["Lambda_plus"] = io::to_json(g.big_plus);
			e["log_c"] = io::to_json(g.log_c);
			e["Lambda_minus"] = io::to_json(g.big_minus);
			list.push_back(e);
		}
		auto const path = dir.write("five.json", io::dump(list));
		auto const out = run_cli({"compose", "--algebra", "su2", path,
		                          "--continued-fraction"});
		REQUIRE(out.code == 0);
		auto const res = json::parse(out.out);
		CHECK(res["alpha_difference"].get<double>() <= 1e-10);
		CHECK(std::abs(cx(res["alpha_continued_fraction"]) - cx(res["alpha"])) <=
		      1e-10);
		// deterministic output
		CHECK(run_cli({"compose", "--algebra", "su2", path, "--continued-fraction"})
		          .out == out.out);
	}

	SUBCASE("errors")
	{
		auto const singular = dir.write("sing.json", R"([
			{"Lambda_plus": [2, 0], "Lambda_c": [1, 0], "Lambda_minus": [0, 0]},
			{"Lambda_plus": [0, 0], "Lambda_c": [1, 0], "Lambda_minus": [0.5, 0]}])");
		auto const s = run_cli({"compose", "--algebra", "su11", singular});
		CHECK(s.code == 3);
		auto const body = json::parse(s.out);
		CHECK(body["error"] == "SingularDecomposition");
		CHECK(body["step"] == 1);

		CHECK(run_cli({"compose", "--algebra", "su11", dir.file("missing.json")})
		          .code == 2);
		CHECK(run_cli({"compose", "--algebra", "su11", dir.write("empty.json", "[]")})
		          .code == 2);
		CHECK(run_cli({"compose", "--algebra", "su11",
		               dir.write("broken.json", "[{")})
		          .code == 2);
	}
}

TEST_CASE("cli squeeze-compose")
{
	auto const eq = run_cli({"squeeze-compose", "--z1", "0.4,0.7", "--z2", "1.1,0.7"});
	REQUIRE(eq.code == 0);
	auto const j = json::parse(eq.out);
	CHECK(j["factorization"]["r"].get<double>() == doctest::Approx(1.5).epsilon(1e-14));
	CHECK(std::abs(j["factorization"]["rotation_angle"].get<double>()) <= 1e-14);

	auto const z1zero =
	    json::parse(run_cli({"squeeze-compose", "--z1", "0,0", "--z2", "0.8,-0.4"}).out);
	CHECK(z1zero["factorization"]["r"].get<double>() == doctest::Approx(0.8));
	CHECK(z1zero["factorization"]["phi"].get<double>() == doctest::Approx(-0.4));
	CHECK(z1zero["factorization"]["rotation_angle"].get<double>() == 0.0);

	auto const generic =
	    json::parse(run_cli({"squeeze-compose", "--z1", "0.7,0.3", "--z2", "0.5,-1.1"})
	                    .out);
	CHECK(generic["residual"].get<double>() <= 1e-10);
	auto const expected =
	    squeeze_product_closed_form(SqueezeParams(0.5, -1.1), SqueezeParams(0.7, 0.3));
	CHECK(std::abs(cx(generic["alpha"]) - expected.alpha) <= 1e-12);

	CHECK(run_cli({"squeeze-compose", "--z1", "-1,0"}).code == 2);
	CHECK(run_cli({"squeeze-compose", "--z1", "1,zero"}).code == 2);
}

TEST_CASE("cli evolve")
{
	TempDir dir;
	auto const constant = dir.write("const.json", R"({"format": 1,
		"algebra": "so21", "t_final": 1.5, "samples": [
		{"t": 0, "eta_plus": [0.3, 0.1], "eta_c": [0.8, 0], "eta_minus": [-0.2, 0.4]}]})");
	auto const one = run_cli({"evolve", "--schedule", constant, "--steps", "1"});
	auto const hundred = run_cli({"evolve", "--schedule", constant, "--steps", "100"});
	REQUIRE(one.code == 0);
	REQUIRE(hundred.code == 0);
	auto const a = json::parse(one.out), b = json::parse(hundred.out);
	for (auto const *key : {"alpha", "beta", "gamma"})
		CHECK(std::abs(cx(a[key]) - cx(b[key])) <= 1e-11);
	CHECK(b["steps"] == 100);

	auto const cartan = dir.write("cartan.json", R"({"format": 1, "algebra": "su2",
		"t_final": 2.0, "samples": [
		{"t": 0, "eta_plus": [0, 0], "eta_c": [1.25, 0], "eta_minus": [0, 0]}]})");
	auto const c = json::parse(run_cli({"evolve", "--schedule", cartan, "--steps", "37"}).out);
	CHECK(std::abs(cx(c["beta"]) - std::exp(-I * 2.5)) <= 1e-12);

	SUBCASE("jump preset matches the constant-H exponential")
	{
		auto const jump = dir.write("jump.json", R"({"format": 1, "algebra": "su11",
			"t_final": 0.9, "preset": {"name": "oscillator", "omega0": 1.0,
			"omega_profile": {"type": "jump", "omega1": 1.6}}})");
		auto const out = json::parse(run_cli({"evolve", "--schedule", jump, "--steps", "50"}).out);
		GroupElement const g{su11, cx(out["alpha"]), cx(out["log_beta"]),
		                     cx(out["gamma"]), 0.0};
		double const w = 1.6;
		EtaTriple const eta{(w * w - 1.0) / 2.0, w * w + 1.0, (w * w - 1.0) / 2.0};
		auto const u = bchlie::testing::taylor_exp(
		    -I * 0.9 * algebra_matrix(su11, {eta.plus, eta.c, eta.minus}));
		CHECK(max_abs_diff(element_matrix(g), u) <= 1e-10);
	}

	SUBCASE("csv trajectory")
	{
		auto const sine = dir.write("sine.json", R"({"format": 1, "algebra": "su11",
			"t_final": 5.0, "preset": {"name": "oscillator", "omega0": 1.0,
			"omega_profile": {"type": "sinusoid", "amplitude": 0.3, "frequency": 1.0}}})");
		auto const csv = dir.file("traj.csv");
		auto const out = run_cli({"evolve", "--schedule", sine, "--steps", "200",
		                          "--checkpoints", "50", "--csv", csv});
		REQUIRE(out.code == 0);
		auto const j = json::parse(out.out);
		CHECK(j["trajectory_rows"] == 5);
		std::ifstream in(csv);
		auto const rows = io::read_trajectory_csv(in);
		REQUIRE(rows.size() == 5);
		CHECK(rows.front().t == 0.0);
		CHECK(rows.back().t == doctest::Approx(5.0));
		CHECK(rows.back().alpha == cx(j["alpha"]));
		CHECK(rows.back().beta == cx(j["beta"]));

		auto const mid = json::parse(
		    run_cli({"evolve", "--schedule", sine, "--steps", "200", "--midpoint"}).out);
		CHECK(mid["sampling"] == "midpoint");
		CHECK(std::abs(cx(mid["alpha"]) - cx(j["alpha"])) > 0.0);
	}

	SUBCASE("errors")
	{
		CHECK(run_cli({"evolve", "--schedule", constant, "--steps", "0"}).code == 2);
		CHECK(run_cli({"evolve", "--schedule", dir.file("nope.json"), "--steps", "3"})
		          .code == 2);
		CHECK(run_cli({"evolve", "--schedule", dir.write("bad.json", R"({"format": 1})"),
		               "--steps", "3"})
		          .code == 2);

		auto const h = std::numbers::pi / 2.0;
		// lambda = -i tau eta = (pi/2, 0, pi/2) at tau = 1
		auto const singular = dir.write("singular.json",
		    R"({"format": 1, "algebra": "su11", "t_final": 2.0, "samples": [
		    {"t": 0, "eta_plus": [0, )" + fmt::format("{:.17g}", h) +
		        R"(], "eta_c": [0, 0], "eta_minus": [0, )" + fmt::format("{:.17g}", h) +
		        "]}]}");
		auto const s = run_cli({"evolve", "--schedule", singular, "--steps", "2"});
		CHECK(s.code == 3);
		auto const body = json::parse(s.out);
		CHECK(body["step"] == 0);
		CHECK(body["time"].get<double>() == doctest::Approx(1.0));
	}
}

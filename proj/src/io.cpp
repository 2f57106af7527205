#include "bchlie/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bchlie::io {

namespace {

std::string format_double(double x)
{
	if (!std::isfinite(x))
		return "null";
	return fmt::format("{:.17g}", x);
}

void dump_into(std::string &out, json const &j, int depth)
{
	auto const indent = [&](int d) { out.append(std::size_t(2 * d), ' '); };

	switch (j.type())
	{
	case json::value_t::object:
	{
		if (j.empty())
		{
			out += "{}";
			return;
		}
		out += "{\n";
		bool first = true;
		for (auto const &[key, value] : j.items())
		{
			if (!first)
				out += ",\n";
			first = false;
			indent(depth + 1);
			out += json(key).dump();
			out += ": ";
			dump_into(out, value, depth + 1);
		}
		out += '\n';
		indent(depth);
		out += '}';
		return;
	}
	case json::value_t::array:
	{
		// arrays of scalars (complex pairs, mostly) stay on one line
		bool const flat = std::none_of(j.begin(), j.end(), [](json const &v) {
			return v.is_structured();
		});
		out += '[';
		bool first = true;
		for (auto const &v : j)
		{
			if (!first)
				out += flat ? ", " : ",";
			first = false;
			if (!flat)
			{
				out += '\n';
				indent(depth + 1);
			}
			dump_into(out, v, depth + 1);
		}
		if (!flat && !j.empty())
		{
			out += '\n';
			indent(depth);
		}
		out += ']';
		return;
	}
	case json::value_t::number_float:
		out += format_double(j.get<double>());
		return;
	default:
		out += j.dump();
		return;
	}
}

double number_field(json const &obj, char const *key, std::string const &where)
{
	if (!obj.contains(key) || !obj.at(key).is_number())
		throw SchemaError(where + ": missing numeric field '" + key + "'");
	auto const x = obj.at(key).get<double>();
	if (!std::isfinite(x))
		throw SchemaError(where + ": field '" + key + "' is not finite");
	return x;
}

// piecewise-linear through (ts, ys), clamped outside the sampled range
template <class T>
T interpolate(std::vector<double> const &ts, std::vector<T> const &ys, double t)
{
	if (t <= ts.front())
		return ys.front();
	if (t >= ts.back())
		return ys.back();
	auto const hi = std::size_t(std::upper_bound(ts.begin(), ts.end(), t) -
	                            ts.begin());
	auto const lo = hi - 1;
	auto const w = (t - ts[lo]) / (ts[hi] - ts[lo]);
	return ys[lo] + (ys[hi] - ys[lo]) * w;
}

void require_increasing(std::vector<double> const &ts, std::string const &where)
{
	if (ts.empty())
		throw SchemaError(where + ": no samples");
	for (std::size_t i = 1; i < ts.size(); ++i)
		if (!(ts[i] > ts[i - 1]))
			throw SchemaError(where + ": t values must be strictly increasing");
}

std::function<double(double)> parse_profile(json const &profile, double omega0)
{
	std::string const where = "omega_profile";
	if (!profile.is_object() || !profile.contains("type") ||
	    !profile.at("type").is_string())
		throw SchemaError(where + ": expected an object with a 'type'");
	auto const type = profile.at("type").get<std::string>();

	if (type == "constant")
	{
		auto const w = number_field(profile, "omega", where);
		return [w](double) { return w; };
	}
	if (type == "jump")
	{
		auto const w1 = number_field(profile, "omega1", where);
		auto const t_jump = profile.contains("t_jump")
		                        ? number_field(profile, "t_jump", where)
		                        : 0.0;
		return [=](double t) { return t < t_jump ? omega0 : w1; };
	}
	if (type == "sinusoid")
	{
		auto const amp = number_field(profile, "amplitude", where);
		auto const freq = number_field(profile, "frequency", where);
		return [=](double t) {
			return omega0 * (1.0 + amp * std::sin(freq * t));
		};
	}
	if (type == "table")
	{
		if (!profile.contains("t") || !profile.contains("omega") ||
		    !profile.at("t").is_array() || !profile.at("omega").is_array())
			throw SchemaError(where + ": table needs arrays 't' and 'omega'");
		std::vector<double> ts, ws;
		for (auto const &v : profile.at("t"))
			ts.push_back(v.get<double>());
		for (auto const &v : profile.at("omega"))
			ws.push_back(v.get<double>());
		if (ts.size() != ws.size())
			throw SchemaError(where + ": 't' and 'omega' differ in length");
		require_increasing(ts, where);
		return [ts = std::move(ts), ws = std::move(ws)](double t) {
			return interpolate(ts, ws, t);
		};
	}
	throw SchemaError(where + ": unknown type '" + type + "'");
}

} // namespace

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(json const &j, std::string const &what)
{
	if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
	    !j[1].is_number())
		throw SchemaError(what + ": expected [re, im]");
	cplx const z{j[0].get<double>(), j[1].get<double>()};
	if (!is_finite(z))
		throw SchemaError(what + ": non-finite value");
	return z;
}

cplx parse_complex(std::string const &text)
{
	auto const parse_part = [&](std::string_view s) {
		double x = 0.0;
		auto const *first = s.data();
		auto const *last = s.data() + s.size();
		auto const [ptr, ec] = std::from_chars(first, last, x);
		if (ec != std::errc() || ptr != last || s.empty() || !std::isfinite(x))
			throw SchemaError("cannot parse number '" + std::string(s) +
			                  "' in '" + text + "'");
		return x;
	};
	std::string_view const sv = text;
	auto const comma = sv.find(',');
	if (comma == std::string_view::npos)
		return {parse_part(sv), 0.0};
	return {parse_part(sv.substr(0, comma)), parse_part(sv.substr(comma + 1))};
}

std::string dump(json const &j)
{
	std::string out;
	dump_into(out, j, 0);
	out += '\n';
	return out;
}

json read_json_file(std::string const &path)
{
	std::ifstream in(path);
	if (!in)
		throw SchemaError("cannot open '" + path + "'");
	try
	{
		return json::parse(in);
	}
	catch (json::parse_error const &e)
	{
		throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
	}
}

HamiltonianSchedule parse_schedule(json const &doc)
{
	std::string const where = "schedule";
	if (!doc.is_object())
		throw SchemaError(where + ": top level must be an object");
	if (!doc.contains("format") || !doc.at("format").is_number_integer() ||
	    doc.at("format").get<int>() != schedule_format_version)
		throw SchemaError(where + ": expected \"format\": 1");
	if (!doc.contains("algebra") || !doc.at("algebra").is_string())
		throw SchemaError(where + ": missing 'algebra'");

	AlgebraKind algebra = su11;
	try
	{
		algebra = algebra_from_string(doc.at("algebra").get<std::string>());
	}
	catch (InvalidArgument const &e)
	{
		throw SchemaError(where + ": " + e.what());
	}

	auto const t_final = number_field(doc, "t_final", where);
	if (!(t_final > 0.0))
		throw SchemaError(where + ": t_final must be positive");

	bool const has_preset = doc.contains("preset");
	bool const has_samples = doc.contains("samples");
	if (has_preset == has_samples)
		throw SchemaError(where +
		                  ": exactly one of 'preset' or 'samples' is required");

	if (has_preset)
	{
		auto const &preset = doc.at("preset");
		if (!preset.is_object() || preset.value("name", "") != "oscillator")
			throw SchemaError(where + ": only the 'oscillator' preset exists");
		if (algebra != su11)
			throw SchemaError(where + ": the oscillator preset is su11");
		auto const omega0 = number_field(preset, "omega0", "preset");
		if (!(omega0 > 0.0))
			throw SchemaError("preset: omega0 must be positive");
		if (!preset.contains("omega_profile"))
			throw SchemaError("preset: missing 'omega_profile'");
		try
		{
			return oscillator_schedule(
			    omega0, parse_profile(preset.at("omega_profile"), omega0),
			    t_final);
		}
		catch (InvalidFrequency const &e)
		{
			throw SchemaError(std::string("preset: ") + e.what());
		}
	}

	auto const &samples = doc.at("samples");
	if (!samples.is_array())
		throw SchemaError(where + ": 'samples' must be an array");
	std::vector<double> ts;
	std::vector<cplx> plus, c, minus;
	for (std::size_t i = 0; i < samples.size(); ++i)
	{
		auto const &s = samples[i];
		auto const at = fmt::format("samples[{}]", i);
		if (!s.is_object())
			throw SchemaError(at + ": expected an object");
		ts.push_back(number_field(s, "t", at));
		for (auto [key, dest] : {std::pair{"eta_plus", &plus},
		                         std::pair{"eta_c", &c},
		                         std::pair{"eta_minus", &minus}})
		{
			if (!s.contains(key))
				throw SchemaError(at + ": missing '" + key + "'");
			dest->push_back(complex_from_json(s.at(key), at + "." + key));
		}
	}
	require_increasing(ts, where);
	if (t_final < ts.back())
		throw SchemaError(where + ": t_final precedes the last sample");

	auto eta = [=](double t) {
		return EtaTriple{interpolate(ts, plus, t), interpolate(ts, c, t),
		                 interpolate(ts, minus, t)};
	};
	return {algebra, std::move(eta), t_final};
}

HamiltonianSchedule load_schedule(std::string const &path)
{
	return parse_schedule(read_json_file(path));
}

std::vector<GroupElement> parse_elements(json const &doc, AlgebraKind algebra)
{
	json const *list = &doc;
	if (doc.is_object())
	{
		if (!doc.contains("elements"))
			throw SchemaError("elements: missing 'elements' array");
		list = &doc.at("elements");
	}
	if (!list->is_array())
		throw SchemaError("elements: expected an array");

	std::vector<GroupElement> out;
	for (std::size_t i = 0; i < list->size(); ++i)
	{
		auto const &e = (*list)[i];
		auto const at = fmt::format("elements[{}]", i);
		if (!e.is_object())
			throw SchemaError(at + ": expected an object");
		auto const field = [&](char const *key) {
			if (!e.contains(key))
				throw SchemaError(at + ": missing '" + key + "'");
			return complex_from_json(e.at(key), at + "." + key);
		};

		GroupElement g = identity_element(algebra);
		g.big_plus = field("Lambda_plus");
		g.big_minus = field("Lambda_minus");
		if (e.contains("log_c") == e.contains("Lambda_c"))
			throw SchemaError(at +
			                  ": give exactly one of 'Lambda_c' or 'log_c'");
		if (e.contains("log_c"))
			g.log_c = field("log_c");
		else
		{
			auto const big_c = field("Lambda_c");
			if (big_c == 0.0)
				throw SchemaError(at + ": Lambda_c must be nonzero");
			g.log_c = principal_log(big_c);
		}
		if (e.contains("phase"))
			g.phase = field("phase");
		out.push_back(g);
	}
	return out;
}

std::vector<GroupElement> load_elements(std::string const &path,
                                        AlgebraKind algebra)
{
	return parse_elements(read_json_file(path), algebra);
}

json element_to_json(GroupElement const &g)
{
	json j;
	j["alpha"] = to_json(g.big_plus);
	j["beta"] = to_json(g.big_c());
	j["gamma"] = to_json(g.big_minus);
	j["log_beta"] = to_json(g.log_c);
	j["phase"] = to_json(g.phase);
	return j;
}

void write_trajectory_csv(std::ostream &os,
                          std::vector<Checkpoint> const &trajectory)
{
	os << trajectory_csv_header << '\n';
	for (auto const &[t, g] : trajectory)
	{
		auto const beta = g.big_c();
		os << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},"
		                  "{:.17g}\n",
		                  t, g.big_plus.real(), g.big_plus.imag(), beta.real(),
		                  beta.imag(), g.big_minus.real(), g.big_minus.imag());
	}
}

std::vector<TrajectoryRow> read_trajectory_csv(std::istream &is)
{
	std::string line;
	if (!std::getline(is, line) || line != trajectory_csv_header)
		throw SchemaError("trajectory CSV: unexpected header");

	std::vector<TrajectoryRow> rows;
	while (std::getline(is, line))
	{
		if (line.empty())
			continue;
		double v[7];
		std::string_view rest = line;
		for (int k = 0; k < 7; ++k)
		{
			auto const comma = rest.find(',');
			auto const cell = rest.substr(0, comma);
			auto const [ptr, ec] =
			    std::from_chars(cell.data(), cell.data() + cell.size(), v[k]);
			if (ec != std::errc() || ptr != cell.data() + cell.size())
				throw SchemaError("trajectory CSV: malformed row '" + line +
				                  "'");
			if ((comma == std::string_view::npos) != (k == 6))
				throw SchemaError("trajectory CSV: expected 7 columns in '" +
				                  line + "'");
			if (comma != std::string_view::npos)
				rest = rest.substr(comma + 1);
		}
		rows.push_back({v[0], {v[1], v[2]}, {v[3], v[4]}, {v[5], v[6]}});
	}
	return rows;
}

} // namespace bchlie::io

#include <doctest.h>

#include <cstdlib>

#include "latcheck/commands.hpp"
#include "latcheck/json_io.hpp"

using namespace latcheck;

namespace {

CheckConfig check_json(std::string text, std::vector<Property> props = {})
{
	CheckConfig c;
	c.source = "op.json";
	c.text = std::move(text);
	c.properties = std::move(props);
	c.format = Format::json;
	c.budget = 200;
	return c;
}

Json verdict_of(const Json &out, std::string_view property)
{
	for (const auto &v : out.at("verdicts"))
		if (v.at("property") == property)
			return v;
	FAIL("no verdict for " << property);
	return {};
}

struct EnvGuard {
	explicit EnvGuard(const char *value) { setenv("LATCHECK_DEFAULT_BUDGET", value, 1); }
	~EnvGuard() { unsetenv("LATCHECK_DEFAULT_BUDGET"); }
};

} // namespace

TEST_CASE("check: identity matrix")
{
	auto r = cmd_check(check_json(R"({"kind":"matrix","entries":[[1,0],[0,1]]})", {Property::dp, Property::beta}));
	CHECK(r.exit_code == exit_decisive);
	auto out = Json::parse(r.output);
	CHECK(out.at("command") == "check");
	CHECK(verdict_of(out, "dp").at("status") == "holds");
	CHECK(verdict_of(out, "beta").at("status") == "holds");
	CHECK(verdict_of(out, "beta").at("witness").is_null());
	CHECK(!verdict_of(out, "beta").at("lemma").is_null());
}

TEST_CASE("check: failing matrix reports a witness in p/q form")
{
	auto r = cmd_check(check_json(R"({"kind":"matrix","entries":[["1","1/2"],[0,1]]})", {Property::beta}));
	CHECK(r.exit_code == exit_decisive);
	auto v = verdict_of(Json::parse(r.output), "beta");
	CHECK(v.at("status") == "fails");
	auto a = v.at("witness").at("elements").at("a");
	REQUIRE(a.is_array());
	for (const auto &x : a)
		CHECK(x.get<std::string>().find('/') != std::string::npos);
	CHECK(v.at("search_report").at("exhausted_patterns").is_boolean());
}

TEST_CASE("check: gallery and PL-rank specs")
{
	auto r = cmd_check(check_json(R"({"kind":"gallery","name":"ex4.4","n":2})"));
	CHECK(r.exit_code == exit_decisive);
	auto out = Json::parse(r.output);
	CHECK(verdict_of(out, "beta_plus").at("status") == "holds");
	CHECK(verdict_of(out, "beta").at("status") == "fails");
	CHECK(verdict_of(out, "dp").at("status") == "fails");

	auto pl = cmd_check(check_json(R"({"kind":"pl_rank","columns":[
		{"domain":{"lo":"0","hi":"1","lo_closed":true,"hi_closed":true},"breakpoints":["0","1"],"values":["1","1"]},
		{"domain":{"lo":"0","hi":"1","lo_closed":true,"hi_closed":true},"breakpoints":["0","1"],"values":["0","1"]}]})",
	                               {Property::beta}));
	CHECK(pl.exit_code == exit_decisive);
	CHECK(verdict_of(Json::parse(pl.output), "beta").at("status") == "holds");
}

TEST_CASE("check: germ-sum operator is searched within the budget")
{
	auto c = check_json(R"({"kind":"germ_sum","resolution":"3/4"})", {Property::beta, Property::beta0});
	c.budget = 100;
	auto r = cmd_check(c);
	auto out = Json::parse(r.output);
	CHECK(out.at("budget") == 100);
	CHECK(verdict_of(out, "beta").at("status") == "fails");
	auto b0 = verdict_of(out, "beta0").at("status");
	CHECK((b0 == "fails" || b0 == "unknown"));
	CHECK(r.exit_code == (b0 == "unknown" ? exit_unknown : exit_decisive));
}

TEST_CASE("check: malformed input")
{
	auto syntax = cmd_check(check_json("{\"kind\": \"matrix\",\n  \"entries\": [[1, 2],\n]}"));
	CHECK(syntax.exit_code == exit_input_error);
	CHECK(syntax.output.find("op.json:3:") != std::string::npos);

	auto ragged = cmd_check(check_json(R"({"kind":"matrix","entries":[[1,2],[3]]})"));
	CHECK(ragged.exit_code == exit_input_error);
	CHECK(ragged.output.find("$.entries[1]") != std::string::npos);

	auto bad_q = cmd_check(check_json(R"({"kind":"matrix","entries":[["1/0"]]})"));
	CHECK(bad_q.exit_code == exit_input_error);

	auto kind = cmd_check(check_json(R"({"kind":"tensor"})"));
	CHECK(kind.exit_code == exit_input_error);
	CHECK(kind.output.find("$.kind") != std::string::npos);

	auto pl = cmd_check(check_json(R"({"kind":"pl_rank","columns":[
		{"domain":{"lo":"0","hi":"1","lo_closed":true,"hi_closed":true},"breakpoints":["0","1/2"],"values":["1","1"]}]})"));
	CHECK(pl.exit_code == exit_input_error);
	CHECK(pl.output.find("$.columns[0]") != std::string::npos);
}

TEST_CASE("budget from the environment")
{
	{
		EnvGuard env("37");
		CHECK(default_budget() == 37);
		auto c = check_json(R"({"kind":"germ_sum","resolution":"3/4"})", {Property::beta});
		c.budget.reset();
		CHECK(Json::parse(cmd_check(c).output).at("budget") == 37);
	}
	{
		EnvGuard env("lots");
		CHECK_THROWS_AS(default_budget(), std::invalid_argument);
		auto c = check_json(R"({"kind":"matrix","entries":[[1]]})");
		c.budget.reset();
		CHECK(cmd_check(c).exit_code == exit_input_error);
	}
	CHECK(default_budget() == 10000);
}

TEST_CASE("output is byte-identical across runs")
{
	auto c = check_json(R"({"kind":"germ_sum","resolution":"3/4"})");
	c.seed = 5;
	CHECK(cmd_check(c).output == cmd_check(c).output);
	GalleryConfig g{"ex2.6", {}, 5, 300, Format::json};
	CHECK(cmd_gallery(g).output == cmd_gallery(g).output);
	g.format = Format::text;
	CHECK(cmd_gallery(g).output == cmd_gallery(g).output);
}

TEST_CASE("gallery reports claims and flags divergence")
{
	GalleryConfig g{"ex2.6", {}, 0, 500, Format::json};
	auto r = cmd_gallery(g);
	CHECK(r.exit_code == exit_decisive);
	auto out = Json::parse(r.output);
	bool diverged = false;
	for (const auto &c : out.at("claims"))
		if (c.at("property") == "dp") {
			CHECK(c.at("claimed") == "holds");
			CHECK(c.at("observed") == "fails");
			diverged = c.at("outcome") == "diverges";
		}
	CHECK(diverged);
	for (const auto &c : out.at("certificates"))
		CHECK(c.at("verified") == true);

	g.format = Format::text;
	CHECK(cmd_gallery(g).output.find("FLAG") != std::string::npos);

	GalleryConfig fold{"ex4.4", {8, {3, 4}}, 0, 100, Format::json};
	auto f = Json::parse(cmd_gallery(fold).output);
	for (const auto &c : f.at("claims"))
		CHECK(c.at("outcome") == "agrees");
	REQUIRE(!f.at("certificates").empty());
	CHECK(f.at("certificates")[0].at("verified") == true);

	CHECK(cmd_gallery({"ex9.9", {}, 0, 1, Format::text}).exit_code == exit_input_error);
}

TEST_CASE("fuzz and oracle audit")
{
	FuzzConfig f;
	f.theorem = "thm3.4";
	f.trials = 1000;
	f.seed = 7;
	f.format = Format::json;
	auto r = cmd_fuzz(f);
	CHECK(r.exit_code == exit_decisive);
	auto out = Json::parse(r.output);
	REQUIRE(out.at("reports").size() == 1);
	CHECK(out.at("reports")[0].at("violations") == 0);
	CHECK(out.at("reports")[0].at("instances") == 1000);

	f.theorem = "nope";
	CHECK(cmd_fuzz(f).exit_code == exit_input_error);
	f.theorem = "thm4.2";
	f.corpus = "nowhere";
	CHECK(cmd_fuzz(f).exit_code == exit_input_error);

	auto audit = cmd_oracle_audit({"quinary2x2", Format::json});
	CHECK(audit.exit_code == exit_decisive);
	CHECK(Json::parse(audit.output).at("disagreements") == 0);
	CHECK(cmd_oracle_audit({"nowhere", Format::text}).exit_code == exit_input_error);
}

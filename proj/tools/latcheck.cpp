// latcheck: decide and certify order properties of operators between
// concrete vector lattices.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "latcheck/commands.hpp"

using namespace latcheck;

namespace {

std::vector<Property> parse_properties(const std::string &list)
{
	std::vector<Property> out;
	std::stringstream ss(list);
	std::string item;
	while (std::getline(ss, item, ','))
		if (!item.empty())
			out.push_back(parse_property(item));
	return out;
}

Format parse_format(const std::string &f)
{
	return f == "json" ? Format::json : Format::text;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Decide, certify and fuzz disjointness preservation and width conditions of lattice operators"};
	app.require_subcommand(1);

	std::string format = "text";
	std::uint64_t seed = 0;
	std::optional<std::uint64_t> budget;
	auto add_common = [&](CLI::App *sub, bool with_budget) {
		sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
		sub->add_option("--seed", seed, "Random seed (echoed in every report)");
		if (with_budget)
			sub->add_option("--budget", budget, "Random trials for refutation searches");
	};

	std::string input, properties;
	auto *check = app.add_subcommand("check", "Check properties of an operator given as JSON");
	check->add_option("input", input, "Operator spec file ('-' for stdin)")->required();
	check->add_option("--properties", properties, "Comma-separated: dp,beta,beta0,beta_plus,d_isomorphism");
	add_common(check, true);

	std::string name;
	std::size_t n = 2;
	std::string resolution = "3/4";
	auto *gal = app.add_subcommand("gallery", "Rebuild a named construction and compare with its claims");
	gal->add_option("name", name, "ex2.5, ex2.6 or ex4.4")->required();
	gal->add_option("--n", n, "Grid size for ex4.4")->check(CLI::PositiveNumber);
	gal->add_option("--resolution", resolution, "Cut resolution p in (0,1) for ex2.6");
	add_common(gal, true);

	std::string theorem = "all";
	std::optional<std::string> fuzz_corpus;
	std::size_t trials = 1000, max_n = 6, samples = 100;
	auto *fuzz = app.add_subcommand("fuzz", "Check theorem statements on matrix corpora");
	fuzz->add_option("--theorem", theorem, "Theorem name or 'all'");
	fuzz->add_option("--corpus", fuzz_corpus, "ternary3x3, quinary2x2 or exhaustive (default: random invertible)");
	fuzz->add_option("--trials", trials, "Random invertible matrices when no corpus is given");
	fuzz->add_option("--max-n", max_n, "Largest random matrix size")->check(CLI::PositiveNumber);
	fuzz->add_option("--samples", samples, "Sampled elements per instance");
	add_common(fuzz, false);

	std::string audit_corpus = "exhaustive";
	auto *audit = app.add_subcommand("oracle-audit", "Compare the deciders with the support-pattern oracles");
	audit->add_option("--corpus", audit_corpus, "ternary3x3, quinary2x2 or exhaustive");
	add_common(audit, false);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		int code = app.exit(e);
		return code == 0 ? 0 : exit_input_error;
	}

	CommandResult res;
	try {
		if (*check) {
			CheckConfig cfg;
			cfg.source = input;
			std::stringstream buf;
			if (input == "-") {
				buf << std::cin.rdbuf();
			} else {
				std::ifstream f(input);
				if (!f) {
					std::cerr << "error: cannot open " << input << '\n';
					return exit_input_error;
				}
				buf << f.rdbuf();
			}
			cfg.text = buf.str();
			cfg.properties = parse_properties(properties);
			cfg.seed = seed;
			cfg.budget = budget;
			cfg.format = parse_format(format);
			res = cmd_check(cfg);
		} else if (*gal) {
			GalleryConfig cfg;
			cfg.name = name;
			cfg.params.n = n;
			cfg.params.resolution = Rational::parse(resolution);
			cfg.seed = seed;
			cfg.budget = budget;
			cfg.format = parse_format(format);
			res = cmd_gallery(cfg);
		} else if (*fuzz) {
			FuzzConfig cfg;
			cfg.theorem = theorem;
			cfg.corpus = fuzz_corpus;
			cfg.trials = trials;
			cfg.max_n = max_n;
			cfg.samples = samples;
			cfg.seed = seed;
			cfg.format = parse_format(format);
			res = cmd_fuzz(cfg);
		} else {
			AuditConfig cfg;
			cfg.corpus = audit_corpus;
			cfg.format = parse_format(format);
			res = cmd_oracle_audit(cfg);
		}
	} catch (const std::invalid_argument &e) {
		std::cerr << "error: " << e.what() << '\n';
		return exit_input_error;
	}
	(res.exit_code == exit_input_error ? std::cerr : std::cout) << res.output;
	return res.exit_code;
}

#include "lgeo/cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "lgeo/errors.hpp"
#include "lgeo/io.hpp"
#include "lgeo/likelihood.hpp"

namespace lgeo {

namespace {

enum class Format { text, json };

struct InputSlot {
  std::string path;
  std::string ideal;
  std::string matrix;
  std::string model;

  void add_to(CLI::App* cmd) {
    cmd->add_option("input", path, "Model file (.ideal, .mat or .json)");
    cmd->add_option("--ideal", ideal, "Ideal file ('-' for stdin)");
    cmd->add_option("--matrix", matrix, "Integer matrix file ('-' for stdin)");
    cmd->add_option("--model,--graph", model, "Model JSON file ('-' for stdin)");
  }

  ModelInput load() const {
    const int given = !path.empty() + !ideal.empty() + !matrix.empty() + !model.empty();
    if (given != 1) throw InputError("give exactly one input: a file, --ideal, --matrix or --model");
    if (!ideal.empty()) return parse_ideal_text(read_file(ideal));
    if (!matrix.empty()) return ToricModel::from_matrix(parse_int_matrix(read_file(matrix)));
    if (!model.empty()) return parse_model_json(read_file(model));
    return load_model(path);
  }
};

Ideal require_ideal(const ModelInput& input, const char* command) {
  if (const auto* ideal = std::get_if<Ideal>(&input)) return *ideal;
  throw InputError(std::string(command) + " needs an ideal input");
}

ToricModel require_toric(const ModelInput& input, const char* command) {
  if (const auto* toric = std::get_if<ToricModel>(&input)) return *toric;
  if (const auto* graph = std::get_if<ModelGraph>(&input)) return toric_model_from_graph(*graph);
  throw InputError(std::string(command) + " needs a matrix or model JSON input");
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  auto number = [&](const std::string& part) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        part.size() > 15)
      throw InputError("--range expects LO:HI with positive integers, got '" + text + "'");
    return std::stoll(part);
  };
  if (colon == std::string::npos) throw InputError("--range expects LO:HI, got '" + text + "'");
  const auto lo = number(text.substr(0, colon));
  const auto hi = number(text.substr(colon + 1));
  if (lo < 1 || lo > hi) throw InputError("--range needs 1 <= LO <= HI");
  return {lo, hi};
}

std::vector<Rational> parse_pmf(const std::string& text) {
  std::vector<Rational> pmf;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) pmf.push_back(parse_rational(item));
  return pmf;
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + std::to_string(values[i]);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Likelihood correspondences and ML degrees of discrete statistical models", "lgeo"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format: text or json")->check(CLI::IsMember({"text", "json"}));
  Format format = Format::text;

  std::function<void()> action;
  auto emit_ideal = [&](const Ideal& ideal) {
    if (format == Format::json)
      out << emit_json(ideal) << "\n";
    else
      out << format_ideal(ideal);
  };
  auto emit_matrix = [&](const IntMatrix& m) {
    if (format == Format::json)
      out << emit_json(m) << "\n";
    else
      out << format_int_matrix(m);
  };

  // compute-lc
  InputSlot lc_input;
  std::string saturation_name = "full";
  bool saturate_singular = false;
  auto saturation_of = [](const std::string& name) {
    return name == "hyperplane" ? Saturation::hyperplane : Saturation::full;
  };
  auto* compute = app.add_subcommand("compute-lc", "Likelihood ideal of a model");
  lc_input.add_to(compute);
  compute->add_option("--saturation", saturation_name, "Toric saturation mode: full or hyperplane")
      ->check(CLI::IsMember({"full", "hyperplane"}));
  compute->add_flag("--saturate-singular", saturate_singular,
                    "Also saturate by the singular locus (ideal input)");
  compute->callback([&] {
    action = [&] { emit_ideal(compute_lc(lc_input.load(), saturation_of(saturation_name), {saturate_singular}).ideal); };
  });

  // ml-degree
  InputSlot ml_input;
  MLDegreeOptions ml_options;
  std::string range = "1:1000";
  std::string ml_saturation = "full";
  auto* ml = app.add_subcommand("ml-degree", "ML degree by counting a generic fiber");
  ml_input.add_to(ml);
  ml->add_option("--trials", ml_options.trials, "Number of random data vectors")->check(CLI::PositiveNumber);
  ml->add_option("--seed", ml_options.seed, "Random seed");
  ml->add_option("--range", range, "Data range LO:HI");
  ml->add_option("--monomial-cap", ml_options.monomial_cap, "Largest standard-monomial box to enumerate");
  ml->add_option("--saturation", ml_saturation, "Toric saturation mode: full or hyperplane")
      ->check(CLI::IsMember({"full", "hyperplane"}));
  ml->callback([&] {
    action = [&] {
      std::tie(ml_options.u_low, ml_options.u_high) = parse_range(range);
      ml_options.saturation = saturation_of(ml_saturation);
      const std::uint64_t degree = ml_degree(ml_input.load(), ml_options);
      if (format == Format::json)
        out << emit_json("ml_degree", degree) << "\n";
      else
        out << degree << "\n";
    };
  });

  // toric-ideal
  InputSlot toric_input;
  auto* toric = app.add_subcommand("toric-ideal", "Toric ideal of a matrix or model");
  toric_input.add_to(toric);
  toric->callback([&] {
    action = [&] { emit_ideal(toric_ideal(require_toric(toric_input.load(), "toric-ideal"))); };
  });

  // toric-polytope
  InputSlot polytope_input;
  auto* polytope = app.add_subcommand("toric-polytope", "Lattice matrix of a binomial ideal");
  polytope_input.add_to(polytope);
  polytope->callback([&] {
    action = [&] { emit_matrix(toric_polytope(require_ideal(polytope_input.load(), "toric-polytope"))); };
  });

  // loglinear-matrix
  InputSlot loglinear_input;
  auto* loglinear = app.add_subcommand("loglinear-matrix", "Design matrix of a log-linear or graphical model");
  loglinear_input.add_to(loglinear);
  loglinear->callback([&] {
    action = [&] { emit_matrix(require_toric(loglinear_input.load(), "loglinear-matrix").matrix()); };
  });

  // scroll
  std::vector<std::size_t> blocks;
  auto* scroll = app.add_subcommand("scroll", "Matrix of a rational normal scroll");
  scroll->add_option("--blocks", blocks, "Block lengths, e.g. 2,2,3")->required()->delimiter(',');
  scroll->callback([&] { action = [&] { emit_matrix(rational_normal_scroll(blocks).matrix()); }; });

  // groebner
  InputSlot gb_input;
  std::string order_name;
  auto* gb = app.add_subcommand("groebner", "Reduced Groebner basis of an ideal");
  gb_input.add_to(gb);
  gb->add_option("--order", order_name, "Monomial order (default: the file's order)")
      ->check(CLI::IsMember({"lex", "grevlex"}));
  gb->callback([&] {
    action = [&] {
      Ideal ideal = require_ideal(gb_input.load(), "groebner");
      if (!order_name.empty()) {
        const auto order = order_name == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
        ideal = ideal.mapped(PolyRing::make(ideal.ring()->names(), order));
      }
      emit_ideal(buchberger(ideal).as_ideal());
    };
  });

  // drv
  std::size_t arity = 0;
  std::string pmf_text;
  std::size_t draws = 1;
  std::uint64_t seed = 0;
  auto* drv = app.add_subcommand("drv", "Discrete random variable queries");
  drv->require_subcommand(1);
  drv->fallthrough();
  drv->add_option("--arity", arity, "Number of states")->required()->check(CLI::PositiveNumber);
  drv->add_option("--pmf", pmf_text, "Comma-separated probabilities (default uniform)");
  auto variable = [&] {
    return pmf_text.empty() ? DiscreteRandomVariable("X", arity)
                            : DiscreteRandomVariable("X", arity, parse_pmf(pmf_text));
  };
  drv->add_subcommand("states", "List the states")->callback([&] {
    action = [&] {
      const auto s = states(variable());
      if (format == Format::json)
        out << emit_json("states", s) << "\n";
      else
        out << join(s) << "\n";
    };
  });
  drv->add_subcommand("mean", "Exact mean")->callback([&] {
    action = [&] {
      const std::string m = to_string(mean(variable()));
      if (format == Format::json)
        out << emit_json("mean", m) << "\n";
      else
        out << m << "\n";
    };
  });
  auto* sample_cmd = drv->add_subcommand("sample", "Seeded samples");
  sample_cmd->add_option("-n,--n", draws, "Number of draws");
  sample_cmd->add_option("--seed", seed, "Random seed");
  sample_cmd->callback([&] {
    action = [&] {
      const auto s = sample(variable(), draws, seed);
      if (format == Format::json)
        out << emit_json("sample", s) << "\n";
      else
        out << join(s) << "\n";
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    err << app.help();
    return kExitInput;
  }
  format = format_name == "json" ? Format::json : Format::text;

  try {
    if (action) action();
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ComputationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  }
}

}  // namespace lgeo

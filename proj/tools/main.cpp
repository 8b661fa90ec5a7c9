// ditlogic: logical and Shannon entropy measures from the command line.
// Every command prints one JSON document (or a table with --pretty).
// Exit status: 0 ok, 1 input error, 2 verification failure.

#include <ditlogic/error.hpp>

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace ditlogic;
using namespace ditlogic::cli;

namespace {

constexpr int exit_input_error = 1;
constexpr int exit_verify_failed = 2;

void emit(const Report& r, bool pretty) {
  if (pretty) {
    std::cout << r.pretty();
  } else {
    std::cout << r.json().dump(2) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logical entropy, Shannon entropy and partition lattice tools"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  bool pretty = false;
  std::string base_text;
  app.add_flag("--pretty", pretty, "Print a table instead of JSON");
  app.add_option("--base", base_text, "Logarithm base for Shannon quantities (default 2)")
      ->check(CLI::IsMember({"2", "e"}));
  app.add_flag("--exact", opt.exact, "Force exact rational arithmetic for logical measures");
  app.add_option("--seed", opt.seed, "Random seed");

  std::string input, a, b, op, kind;
  std::size_t n = 0;
  std::size_t max_n = 5;
  bool as_partition = false, as_distribution = false, dot = false;
  SampleParams sp;
  std::string weights;
  std::size_t size = 0;

  auto* entropy = app.add_subcommand("entropy", "Entropies of a partition or a distribution");
  entropy->add_option("input", input, "Partition (0,1|2) or distribution (1/2,1/4,1/4)")
      ->required();
  entropy->add_option("--weights", weights, "Point probabilities for a partition");
  entropy->add_option("--size", size, "Universe size (default: max element + 1)");
  auto* pflag = entropy->add_flag("--partition", as_partition, "Treat input as a partition");
  entropy->add_flag("--distribution", as_distribution, "Treat input as a distribution")
      ->excludes(pflag);

  auto* joint = app.add_subcommand("joint", "Joint, marginal, conditional and mutual measures");
  joint->add_option("matrix", input, "CSV matrix; inline rows may be separated by ';'")
      ->required();

  auto* ops = app.add_subcommand("ops", "Partition lattice operations");
  ops->add_option("operation", op, "join, meet or implies")
      ->required()
      ->check(CLI::IsMember({"join", "meet", "implies"}));
  ops->add_option("pi", a, "First partition")->required();
  ops->add_option("sigma", b, "Second partition (the block container for implies)")->required();
  ops->add_option("--size", size, "Universe size");

  auto* compare = app.add_subcommand("compare", "Cross entropies and divergences of p and q");
  compare->add_option("p", a)->required();
  compare->add_option("q", b)->required();

  auto* verify = app.add_subcommand("verify", "Run the identity verification suites");
  verify->add_option("--max-n", max_n, "Largest universe for exhaustive pairs (2..6)");

  auto* lattice = app.add_subcommand("lattice", "Partition lattice size and Hasse diagram");
  lattice->add_option("n", n, "Universe size")->required();
  lattice->add_flag("--dot", dot, "Include a Graphviz rendering (n <= 6)");

  auto* sample = app.add_subcommand("sample", "Monte Carlo estimates");
  sample->add_option("kind", kind, "pairs, seqavg or typical")
      ->required()
      ->check(CLI::IsMember({"pairs", "seqavg", "typical"}));
  sample->add_option("p", a, "Distribution")->required();
  sample->add_option("--trials", sp.trials, "Draw pairs (pairs) or sequence length (seqavg)");
  sample->add_option("--length", sp.length, "Sequence or message length");
  sample->add_option("--samples", sp.samples, "Messages to sample (typical)");

  auto* stirling = app.add_subcommand("stirling", "Exact vs Stirling multinomial entropy");
  stirling->add_option("sizes", input, "Block sizes, e.g. 6,6")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_input_error;
  }

  if (!base_text.empty()) opt.base = base_text == "e" ? Base::e : Base::two;
  if (!weights.empty()) opt.weights = weights;
  if (size != 0) opt.size = size;

  const auto* sub = app.get_subcommands().front();
  try {
    if (sub == entropy) {
      const auto k = as_partition      ? EntropyInput::partition
                     : as_distribution ? EntropyInput::distribution
                                       : EntropyInput::automatic;
      emit(cmd_entropy(input, k, opt), pretty);
    } else if (sub == joint) {
      emit(cmd_joint(input, opt), pretty);
    } else if (sub == ops) {
      emit(cmd_ops(op, a, b, opt), pretty);
    } else if (sub == compare) {
      emit(cmd_compare(a, b, opt), pretty);
    } else if (sub == verify) {
      const auto r = cmd_verify(max_n, opt);
      emit(r, pretty);
      return r.json()["outputs"]["passed"]["value"].get<bool>() ? 0 : exit_verify_failed;
    } else if (sub == lattice) {
      emit(cmd_lattice(n, dot, opt), pretty);
    } else if (sub == sample) {
      emit(cmd_sample(kind, a, sp, opt), pretty);
    } else if (sub == stirling) {
      emit(cmd_stirling(input, opt), pretty);
    }
  } catch (const Error& e) {
    Json err = {{"command", sub->get_name()},
                {"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
    if (e.position()) err["error"]["position"] = *e.position();
    std::cout << err.dump(2) << '\n';
    std::cerr << "ditlogic " << sub->get_name() << ": " << e.what() << '\n';
    return exit_input_error;
  }
  return 0;
}

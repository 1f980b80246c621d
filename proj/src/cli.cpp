#include "crystal/cli.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "CLI11.hpp"

#include "crystal/arm_sequence.hpp"
#include "crystal/error.hpp"
#include "crystal/fayers.hpp"
#include "crystal/graph.hpp"
#include "crystal/isomorphism.hpp"
#include "crystal/monomial.hpp"

namespace crystal::cli {

namespace {

struct Options {
  int n = 0;
  std::string arm = "horizontal";
  std::string arm2 = "horizontal";
  std::string format = "text";

  std::string object;
  std::string word;
  std::string partition;

  std::string model = "partition";
  std::string model2 = "monomial";
  int depth = 0;
  bool use_psi = false;
  int max_size = 0;
  int horizon = 0;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--n", opt.n, "Rank n >= 3 of affine sl_n")->required();
  cmd->add_option("--arm", opt.arm,
                  "Arm sequence: horizontal, file:PATH or random:SEED:T");
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"dot", "json", "text"}));
}

struct Step {
  bool raise;
  long long color;
};

std::vector<Step> parse_word(const std::string& word) {
  std::vector<Step> steps;
  std::stringstream in(word);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.size() < 2 || (token[0] != 'e' && token[0] != 'f')) {
      throw Error(Errc::syntax_error, "bad operator '" + token +
                                          "' (expected e<i> or f<i>)");
    }
    long long color = 0;
    const char* first = token.data() + 1;
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, color);
    if (ec != std::errc{} || ptr != last) {
      throw Error(Errc::syntax_error, "bad operator '" + token + "'");
    }
    steps.push_back({token[0] == 'e', color});
  }
  return steps;
}

int cmd_apply(const Options& opt, std::ostream& out) {
  const auto steps = parse_word(opt.word);
  if (!opt.object.empty() && opt.object.front() == '[') {
    const auto arm = parse_arm_spec(opt.arm, opt.n);
    std::optional<Partition> current = Partition::parse(opt.object);
    for (const auto& step : steps) {
      if (!current) break;
      const Residue i(step.color, opt.n);
      current = step.raise ? apply_e(*current, i, arm) : apply_f(*current, i, arm);
    }
    out << (current ? current->to_string() : "0") << "\n";
    return exit_ok;
  }
  std::optional<Monomial> current = Monomial::parse(opt.object, opt.n);
  for (const auto& step : steps) {
    if (!current) break;
    const Residue i(step.color, opt.n);
    current = step.raise ? apply_e(*current, i) : apply_f(*current, i);
  }
  out << (current ? current->to_string() : "0") << "\n";
  return exit_ok;
}

int cmd_psi(const Options& opt, std::ostream& out) {
  require_rank(opt.n);
  out << psi(Partition::parse(opt.partition), opt.n).to_string() << "\n";
  return exit_ok;
}

int cmd_check(const Options& opt, std::ostream& out) {
  const auto arm = parse_arm_spec(opt.arm, opt.n);
  const auto bad = illegal_boxes(Partition::parse(opt.partition), arm);
  if (bad.empty()) {
    out << "regular\n";
    return exit_ok;
  }
  for (const auto& box : bad) {
    out << "illegal at (row " << box.box.row << ", col " << box.box.col
        << "): hook " << box.hook << ", arm " << box.arm << ", t " << box.t
        << "\n";
  }
  return exit_failure;
}

CrystalModel make_model(const std::string& kind, const std::string& arm,
                        int n) {
  if (kind == "partition") return CrystalModel::partitions(parse_arm_spec(arm, n));
  return CrystalModel::monomials(n);
}

int cmd_graph(const Options& opt, std::ostream& out) {
  const auto graph = generate_graph(make_model(opt.model, opt.arm, opt.n), opt.depth);
  if (opt.format == "dot") {
    out << export_dot(graph);
  } else if (opt.format == "json") {
    out << export_json(graph);
  } else {
    out << export_text(graph);
  }
  return exit_ok;
}

int cmd_compare(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.use_psi && !(opt.model == "partition" && opt.model2 == "monomial")) {
    err << "--use-psi requires --model partition --model2 monomial\n";
    return exit_usage;
  }
  const auto first = generate_graph(make_model(opt.model, opt.arm, opt.n), opt.depth);
  const auto second = generate_graph(make_model(opt.model2, opt.arm2, opt.n), opt.depth);
  const auto result = compare_graphs(first, second,
                                     opt.use_psi ? psi_label_map(opt.n) : LabelMap{});
  if (result.isomorphic()) {
    out << "isomorphic (" << first.vertices.size() << " vertices)\n";
    return exit_ok;
  }
  const auto& d = *result.divergence;
  out << "not isomorphic: " << d.reason;
  auto name = [](const CrystalGraph& g, int v) {
    return v < 0 ? std::string("-") : g.vertices[static_cast<std::size_t>(v)];
  };
  out << " at " << name(first, d.first_vertex) << " / "
      << name(second, d.second_vertex);
  if (d.color) out << " color " << *d.color;
  out << "\n";
  return exit_failure;
}

int cmd_count(const Options& opt, std::ostream& out) {
  const auto counts = count_regular(parse_arm_spec(opt.arm, opt.n), opt.max_size);
  for (std::size_t m = 0; m < counts.size(); ++m) {
    if (m) out << ' ';
    out << counts[m];
  }
  out << "\n";
  return exit_ok;
}

int cmd_validate_arm(const Options& opt, std::ostream& out) {
  // Files are validated as written, not rejected on load.
  const auto arm = opt.arm.starts_with("file:")
                       ? ArmSequence::unchecked(opt.n, read_arm_values(opt.arm.substr(5)))
                       : parse_arm_spec(opt.arm, opt.n);
  const auto violations = validate_arm(arm, opt.horizon);
  if (violations.empty()) {
    out << "ok\n";
    return exit_ok;
  }
  for (const auto& v : violations) out << "violation " << to_string(v) << "\n";
  return exit_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Partition and monomial realizations of the basic crystal of affine sl_n",
               "crystal"};
  app.require_subcommand(1);

  auto* apply = app.add_subcommand(
      "apply", "Apply an operator word such as f2,f0,e1 (left to right)");
  add_common(apply, opt);
  apply->add_option("object", opt.object, "Partition [a,b,...] or monomial Y(i,k)*...")
      ->required();
  apply->add_option("word", opt.word, "Comma-separated operators, applied left to right")
      ->required();

  auto* psi_cmd = app.add_subcommand("psi", "Map a partition to its monomial");
  add_common(psi_cmd, opt);
  psi_cmd->add_option("partition", opt.partition)->required();

  auto* check = app.add_subcommand("check", "List the illegal boxes of a partition");
  add_common(check, opt);
  check->add_option("partition", opt.partition)->required();

  auto* graph = app.add_subcommand("graph", "Generate the crystal graph to a depth");
  add_common(graph, opt);
  graph->add_option("--model", opt.model)
      ->check(CLI::IsMember({"partition", "monomial"}));
  graph->add_option("--depth", opt.depth)->required()->check(CLI::NonNegativeNumber);

  auto* compare = app.add_subcommand("compare", "Compare two crystal graphs");
  add_common(compare, opt);
  compare->add_option("--model", opt.model)
      ->check(CLI::IsMember({"partition", "monomial"}));
  compare->add_option("--model2", opt.model2)
      ->check(CLI::IsMember({"partition", "monomial"}));
  compare->add_option("--arm2", opt.arm2, "Arm sequence of the second partition model");
  compare->add_option("--depth", opt.depth)->required()->check(CLI::NonNegativeNumber);
  compare->add_flag("--use-psi", opt.use_psi, "Also require labels to agree under psi");

  auto* count = app.add_subcommand("count", "Count regular partitions by size");
  add_common(count, opt);
  count->add_option("--max", opt.max_size)->required()->check(CLI::NonNegativeNumber);

  auto* validate = app.add_subcommand("validate-arm", "Check the arm-sequence axioms");
  add_common(validate, opt);
  validate->add_option("--horizon", opt.horizon)->required()->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  try {
    require_rank(opt.n);
    if (apply->parsed()) return cmd_apply(opt, out);
    if (psi_cmd->parsed()) return cmd_psi(opt, out);
    if (check->parsed()) return cmd_check(opt, out);
    if (graph->parsed()) return cmd_graph(opt, out);
    if (compare->parsed()) return cmd_compare(opt, out, err);
    if (count->parsed()) return cmd_count(opt, out);
    if (validate->parsed()) return cmd_validate_arm(opt, out);
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace crystal::cli

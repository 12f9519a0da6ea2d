#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "germlab/commands.hpp"
#include "germlab/error.hpp"

namespace {

int write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "germlab: cannot write '" << path << "'\n";
    return germlab::exit_code::input_error;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fast-cycle obstructions for weighted-homogeneous germs"};
  app.set_version_flag("--version", germlab::kVersion);
  app.require_subcommand(1);

  std::string file, out_path, csv_path;
  germlab::CommandOptions opts;
  std::size_t budget = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "germ file (JSON)")->required();
    sub->add_option("--out", out_path, "write the JSON report here instead of stdout");
    sub->add_option("--seed", opts.seed, "root seed for every randomized step");
    sub->add_option("--budget", budget, "reduction-step budget per basis computation");
    sub->add_flag("--assume-milnor-fibre", opts.assume_milnor_fibre,
                  "assert that X & V(x_1 - t_0) is the Milnor fibre of X & V(x_1)");
    sub->add_flag("--assume-noncontractible-component", opts.assume_noncontractible_component,
                  "surface case: assert a smooth irreducible non-contractible component");
    sub->add_flag("--probabilistic-nnd", opts.probabilistic_nnd,
                  "fall back to torus sampling when the exact non-degeneracy check runs out of budget");
    sub->add_flag("--timing", opts.timing, "include wall-clock timing in the report");
  };

  auto* analyze = app.add_subcommand("analyze", "run the hypothesis ledger and the weight criterion");
  auto* newton = app.add_subcommand("newton", "Newton diagram and per-face criterion");
  auto* sigma = app.add_subcommand("sigma", "obstruction locus");
  auto* foliate = app.add_subcommand("foliate", "deform the weighted arcs and check the foliation");
  auto* milnor = app.add_subcommand("milnor", "Milnor number of a hypersurface germ");
  for (auto* sub : {analyze, newton, sigma, foliate, milnor}) add_common(sub);
  foliate->add_option("--epsilon", opts.epsilon, "perturbation parameter (a/b or decimal)");
  foliate->add_option("--samples", opts.samples, "number of link samples");
  foliate->add_option("--csv", csv_path, "write the arc dump here");
  foliate->add_flag("--allow-large-epsilon", opts.allow_large_epsilon,
                    "lift the |epsilon| <= 0.1 limit for same-order perturbations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : germlab::exit_code::input_error;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (budget > 0) opts.budget = budget;
  opts.input_name = file;

  germlab::CommandResult result;
  try {
    auto germ = germlab::load_germ_file(file);
    result = germlab::run_command(command, germ, opts);
  } catch (const germlab::Error& e) {
    std::cerr << "germlab: " << e.what() << '\n';
    return germlab::exit_code::input_error;
  } catch (const std::exception& e) {
    std::cerr << "germlab: internal error: " << e.what() << '\n';
    return germlab::exit_code::input_error;
  }

  const std::string json = result.report.dump(2) + "\n";
  if (command == "milnor") std::cout << result.text << '\n';
  if (!out_path.empty()) {
    if (write_text(out_path, json) != 0) return germlab::exit_code::input_error;
  } else if (command != "milnor") {
    std::cout << json;
  }
  if (!csv_path.empty() && write_text(csv_path, result.csv) != 0) {
    return germlab::exit_code::input_error;
  }
  if (result.report.contains("error")) {
    std::cerr << "germlab: " << result.report["error"].get<std::string>() << '\n';
  }
  return result.exit_code;
}

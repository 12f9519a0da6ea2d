#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "germlab/commands.hpp"
#include "germlab/error.hpp"
#include "germlab/groebner.hpp"
#include "germlab/parser.hpp"

namespace py = pybind11;

namespace {

py::tuple run(const std::string& command, const std::string& germ_json, std::uint64_t seed,
              std::optional<std::size_t> budget, const std::string& epsilon, std::size_t samples,
              bool assume_milnor_fibre, bool assume_noncontractible_component,
              bool probabilistic_nnd, bool allow_large_epsilon, const std::string& input_name) {
  germlab::CommandOptions opts;
  opts.seed = seed;
  opts.budget = budget;
  opts.epsilon = epsilon;
  opts.samples = samples;
  opts.assume_milnor_fibre = assume_milnor_fibre;
  opts.assume_noncontractible_component = assume_noncontractible_component;
  opts.probabilistic_nnd = probabilistic_nnd;
  opts.allow_large_epsilon = allow_large_epsilon;
  opts.input_name = input_name;
  germlab::CommandResult r;
  {
    py::gil_scoped_release release;
    r = germlab::run_command(command, germlab::parse_germ_file(germ_json), opts);
  }
  return py::make_tuple(r.exit_code, r.report.dump(2), r.text, r.csv);
}

germlab::GroebnerOptions budget_options(std::optional<std::size_t> budget) {
  germlab::GroebnerOptions o;
  if (budget) o.budget = *budget;
  return o;
}

std::vector<germlab::Polynomial> parse_all(const std::vector<std::string>& texts,
                                           const std::vector<std::string>& vars) {
  std::vector<germlab::Polynomial> out;
  for (const auto& t : texts) out.push_back(germlab::parse_polynomial(t, vars));
  return out;
}

germlab::MonomialOrder order_named(const std::string& name) {
  if (name == "grevlex") return germlab::MonomialOrder::grevlex();
  if (name == "elimination") return germlab::MonomialOrder::elimination();
  throw germlab::ValidationError("unknown order '" + name + "' (known: grevlex, elimination)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "germlab native core";
  m.attr("__version__") = germlab::kVersion;
  m.attr("REPORT_SCHEMA") = germlab::kReportSchema;

  auto base = py::register_exception<germlab::Error>(m, "GermlabError", PyExc_ValueError);
  py::register_exception<germlab::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<germlab::BudgetExhausted>(m, "BudgetExhausted", base.ptr());

  m.def("run", &run, py::arg("command"), py::arg("germ_json"), py::arg("seed") = 0,
        py::arg("budget") = py::none(), py::arg("epsilon") = "1/10", py::arg("samples") = 50,
        py::arg("assume_milnor_fibre") = false,
        py::arg("assume_noncontractible_component") = false,
        py::arg("probabilistic_nnd") = false, py::arg("allow_large_epsilon") = false,
        py::arg("input_name") = "",
        "Runs one command on a germ file given as JSON text. Returns "
        "(exit_code, report_json, text, csv).");

  m.def(
      "groebner_basis",
      [](const std::vector<std::string>& generators, const std::vector<std::string>& variables,
         const std::string& order, std::optional<std::size_t> budget) {
        auto gens = parse_all(generators, variables);
        auto gb = germlab::buchberger(gens, order_named(order), budget_options(budget));
        std::vector<std::string> out;
        for (const auto& g : gb.generators()) out.push_back(g.to_string());
        return out;
      },
      py::arg("generators"), py::arg("variables"), py::arg("order") = "grevlex",
      py::arg("budget") = py::none(), "Reduced Groebner basis, as polynomial strings.");

  m.def(
      "krull_dimension",
      [](const std::vector<std::string>& generators, const std::vector<std::string>& variables,
         std::optional<std::size_t> budget) {
        auto gens = parse_all(generators, variables);
        return germlab::krull_dimension(
            germlab::buchberger(gens, germlab::MonomialOrder::grevlex(), budget_options(budget)));
      },
      py::arg("generators"), py::arg("variables"), py::arg("budget") = py::none());

  m.def(
      "milnor_number",
      [](const std::string& f, const std::vector<std::string>& variables,
         std::optional<std::size_t> budget) {
        return germlab::milnor_number_hypersurface(germlab::parse_polynomial(f, variables),
                                                   budget_options(budget));
      },
      py::arg("f"), py::arg("variables"), py::arg("budget") = py::none(),
      "Local Milnor number; None when the singularity is not isolated.");
}

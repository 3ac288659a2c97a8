#include "oodlsp/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "oodlsp/calibration.hpp"
#include "oodlsp/csv_input.hpp"
#include "oodlsp/design_dsl.hpp"
#include "oodlsp/metrics.hpp"
#include "oodlsp/quality_model.hpp"
#include "oodlsp/report.hpp"

namespace oodlsp::cli {
namespace {

struct Failure {
  int status;
  std::string message;  // already formatted; may span lines
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsageError, path + ": error: cannot open file\n"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw Failure{kUsageError, path + ": error: cannot write file\n"};
}

ModelNode load_model(const std::string& path) {
  auto parsed = parse_model(read_file(path));
  if (parsed.ok()) return std::move(*parsed.root);
  std::ostringstream msg;
  for (const auto& e : parsed.errors) msg << path << ':' << e.line << ':' << e.column << ": error: " << e.message << '\n';
  throw Failure{kModelError, msg.str()};
}

ClassModel load_design(const std::string& path) {
  auto parsed = parse_design(read_file(path));
  if (parsed.ok()) return std::move(*parsed.model);
  std::string msg;
  bool syntax = false;
  for (const auto& e : parsed.errors) {
    msg += format_diagnostic(e, path);
    syntax = syntax || e.kind == ParseError::Kind::Syntax;
  }
  throw Failure{syntax ? kParseError : kModelError, msg};
}

std::string design_id(const std::string& path) { return std::filesystem::path(path).stem().string(); }

struct OutputOptions {
  std::string format = "text";
  std::string chart;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"text", "csv"}));
  cmd->add_option("--chart", opts.chart, "also write an SVG bar chart of the global preferences");
}

void emit(const ModelNode& model, const std::vector<DesignResult>& results, const OutputOptions& opts,
          std::ostream& out) {
  const ReportDocument doc = make_report(model, results);
  out << (opts.format == "csv" ? render_csv(doc) : render_text(doc));
  if (!opts.chart.empty()) {
    std::vector<std::pair<std::string, Preference>> globals;
    for (const auto& row : doc.rows) globals.emplace_back(row.design, row.global);
    if (globals.empty()) throw Failure{kUsageError, "error: nothing to chart\n"};
    write_file(opts.chart, render_chart(globals));
  }
}

EvaluationResult evaluate_checked(const ModelNode& model, const std::map<std::string, double>& inputs,
                                  const std::string& design) {
  try {
    return evaluate(model, inputs, InputMode::Preferences);
  } catch (const EvaluationError& e) {
    throw Failure{kModelError, "error: design " + design + ": " + e.what() + "\n"};
  }
}

std::vector<DesignResult> evaluate_prefs_file(const ModelNode& model, const std::string& path) {
  PreferenceTable table;
  try {
    table = read_preference_csv(read_file(path));
  } catch (const InputError& e) {
    throw Failure{kParseError, path + ":" + std::to_string(e.line()) + ":1: error: " + e.what() + "\n"};
  }
  std::vector<DesignResult> results;
  for (const auto& design : table.designs) {
    results.emplace_back(design, evaluate_checked(model, table.inputs.at(design), design));
  }
  return results;
}

DesignResult evaluate_design_file(const ModelNode& model, const std::string& path) {
  const ClassModel design = load_design(path);
  try {
    return {design_id(path), evaluate(model, compute_metrics(design))};
  } catch (const EvaluationError& e) {
    throw Failure{kModelError, path + ": error: " + e.what() + "\n"};
  }
}

void print_metrics(const MetricVector& m, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    out << "metric,value\n";
    for (MetricCode c : kAllMetrics) out << to_string(c) << ',' << m[c] << '\n';
    return;
  }
  for (MetricCode c : kAllMetrics) {
    out << std::left << std::setw(5) << to_string(c) << ' ' << std::setprecision(6) << m[c] << '\n';
  }
}

std::vector<GcdSymbol> parse_operator_list(const std::string& text) {
  if (text.empty()) return {kAllGcdSymbols.begin(), kAllGcdSymbols.end()};
  std::vector<GcdSymbol> ops;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto op = parse_gcd_symbol(item);
    if (!op) throw Failure{kUsageError, "error: --operators: unknown operator '" + item + "'\n"};
    ops.push_back(*op);
  }
  return ops;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Object-oriented design quality grading with logic scoring of preference"};
  app.name("oodlsp");
  app.require_subcommand(1);

  std::string design_path, model_path, prefs_path, observations_path, operators;
  std::vector<std::string> design_paths;
  std::size_t arity = 0;
  double grid_step = 0.01;
  OutputOptions output;
  std::string metrics_format = "text";

  auto* metrics = app.add_subcommand("metrics", "print the design metrics of a .ood file");
  metrics->add_option("design", design_path, "design file")->required();
  metrics->add_option("--format", metrics_format, "output format")->check(CLI::IsMember({"text", "csv"}));

  auto* evaluate_cmd = app.add_subcommand("evaluate", "metrics -> criteria -> aggregation for one design");
  evaluate_cmd->add_option("design", design_path, "design file")->required();
  evaluate_cmd->add_option("--model", model_path, "quality model file")->required();
  add_output_options(evaluate_cmd, output);

  auto* prefs = app.add_subcommand("prefs", "aggregate direct elementary preferences from CSV");
  prefs->add_option("prefs", prefs_path, "design_id,node_code,eq CSV")->required();
  prefs->add_option("--model", model_path, "quality model file")->required();
  add_output_options(prefs, output);

  auto* calibrate = app.add_subcommand("calibrate", "fit block weights and operator to observations");
  calibrate->add_option("--observations", observations_path, "design_id,in1,...,ink,target CSV")->required();
  calibrate->add_option("--arity", arity, "number of block inputs")->required()->check(CLI::Range(2, 8));
  calibrate->add_option("--grid-step", grid_step, "simplex grid spacing")
      ->check(CLI::IsMember({"0.05", "0.01", "0.005"}));
  calibrate->add_option("--operators", operators, "comma-separated candidate operators (default: all)");

  auto* report = app.add_subcommand("report", "compare several designs or preference sets");
  report->add_option("designs", design_paths, "design files");
  report->add_option("--prefs", prefs_path, "direct preference CSV");
  report->add_option("--model", model_path, "quality model file")->required();
  add_output_options(report, output);

  std::vector<std::string> argv_storage{"oodlsp"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "oodlsp: error: " << e.what() << "\nRun with --help for usage.\n";
    return kUsageError;
  }

  try {
    if (metrics->parsed()) {
      print_metrics(compute_metrics(load_design(design_path)), metrics_format, out);
    } else if (evaluate_cmd->parsed()) {
      const ModelNode model = load_model(model_path);
      emit(model, {evaluate_design_file(model, design_path)}, output, out);
    } else if (prefs->parsed()) {
      const ModelNode model = load_model(model_path);
      emit(model, evaluate_prefs_file(model, prefs_path), output, out);
    } else if (calibrate->parsed()) {
      std::vector<BlockObservation> obs;
      try {
        obs = read_observations_csv(read_file(observations_path), arity);
      } catch (const InputError& e) {
        throw Failure{kParseError,
                      observations_path + ":" + std::to_string(e.line()) + ":1: error: " + e.what() + "\n"};
      }
      const auto ops = parse_operator_list(operators);
      const CalibrationResult fit = fit_block(obs, ops, grid_step);
      std::ostringstream line;
      line << std::fixed << std::setprecision(4);
      line << "operator " << to_string(fit.op) << '\n' << "weights ";
      for (std::size_t i = 0; i < fit.weights.size(); ++i) line << (i ? "," : "") << fit.weights[i];
      line << '\n' << std::setprecision(6) << "residual " << fit.residual << '\n';
      line << "underdetermined " << (fit.underdetermined ? "yes" : "no");
      if (fit.underdetermined) {
        line << " (indices";
        for (std::size_t i : fit.unidentified) line << ' ' << i + 1;
        line << ')';
      }
      out << line.str() << '\n';
    } else if (report->parsed()) {
      if (design_paths.empty() == prefs_path.empty()) {
        err << "oodlsp report: error: give either design files or --prefs, not both or neither\n";
        return kUsageError;
      }
      const ModelNode model = load_model(model_path);
      std::vector<DesignResult> results;
      if (!prefs_path.empty()) {
        results = evaluate_prefs_file(model, prefs_path);
      } else {
        for (const auto& p : design_paths) results.push_back(evaluate_design_file(model, p));
      }
      emit(model, results, output, out);
    }
  } catch (const Failure& f) {
    err << f.message;
    return f.status;
  } catch (const ContractViolation& e) {
    err << "oodlsp: error: " << e.what() << '\n';
    return kModelError;
  } catch (const LookupError& e) {
    err << "oodlsp: error: " << e.what() << '\n';
    return kModelError;
  }
  return kOk;
}

}  // namespace oodlsp::cli

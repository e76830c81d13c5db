// qubofit command-line front end.
//
// Subcommands follow the four stages of the workflow:
//   generate    synthesize a benchmark dataset
//   sample      estimate parameter correlations and pick shared pairs,
//               optionally emitting the reduced plan and its QUBO
//   anneal      run simulated annealing on a QUBO file
//   experiment  full sweep: methods x shared-bit counts x trials

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qubofit/annealer.hpp"
#include "qubofit/datagen.hpp"
#include "qubofit/encoding.hpp"
#include "qubofit/harness.hpp"
#include "qubofit/qubo.hpp"
#include "qubofit/regression.hpp"
#include "qubofit/sampler.hpp"

namespace {

// key=value configuration for the experiment subcommand. Values here fill
// in options the command line did not set; '#' starts a comment line.
struct ConfigEntry {
  std::string key;
  std::string value;
};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream stream(s);
  std::string item;
  while (std::getline(stream, item, ',')) parts.push_back(trim(item));
  return parts;
}

std::vector<ConfigEntry> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::vector<ConfigEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line is not key=value: " + line);
    entries.push_back({trim(text.substr(0, eq)), trim(text.substr(eq + 1))});
  }
  return entries;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return in;
}

int run_generate(const qubofit::GeneratorConfig& cfg, const std::string& out_path) {
  qubofit::RegressionDataset ds = qubofit::generate(cfg);
  std::ofstream out = open_out(out_path);
  qubofit::write_dataset(out, ds);
  std::cout << "wrote " << ds.n_samples() << " samples, " << ds.dim() - 1
            << " features -> " << out_path << "\n";
  return 0;
}

struct SampleArgs {
  std::string data_path;
  qubofit::SamplerConfig sampler;
  double threshold = 0.8;
  int cut = 0;
  std::vector<double> basis = {0.5, -0.5, 1.0, -1.0, 2.0, -2.0, 4.0, -4.0, 8.0, -8.0};
  std::string corr_out, pairs_out, plan_out, qubo_out;
};

int run_sample(const SampleArgs& args) {
  std::ifstream in = open_in(args.data_path);
  qubofit::RegressionDataset ds = qubofit::read_dataset(in);

  qubofit::SamplerConfig sampler = args.sampler;
  if (sampler.interval <= 0) sampler.interval = 2 * ds.dim();

  qubofit::Mat chain = qubofit::sample_chain(ds, sampler);
  qubofit::CorrelationReport report = qubofit::correlation_report(chain, args.threshold);

  std::cout << "selected " << report.pairs.size() << " pair(s) at threshold "
            << args.threshold << "\n";
  qubofit::write_pairs(std::cout, report.pairs);

  if (!args.corr_out.empty()) {
    std::ofstream out = open_out(args.corr_out);
    qubofit::write_matrix(out, report.corr);
  }
  if (!args.pairs_out.empty()) {
    std::ofstream out = open_out(args.pairs_out);
    qubofit::write_pairs(out, report.pairs);
  }
  if (!args.plan_out.empty() || !args.qubo_out.empty()) {
    std::vector<qubofit::VarPair> pairs;
    for (const qubofit::SelectedPair& p : report.pairs) pairs.emplace_back(p.a, p.b);
    qubofit::EncodingPlan plan = qubofit::reduce_plan(
        qubofit::full_plan(ds.dim(), qubofit::BasisVector(args.basis)), pairs, args.cut);
    std::cout << "plan: " << plan.bit_count() << " binary variables (cut "
              << args.cut << ")\n";
    if (!args.plan_out.empty()) {
      std::ofstream out = open_out(args.plan_out);
      qubofit::write_plan(out, plan);
    }
    if (!args.qubo_out.empty()) {
      std::ofstream out = open_out(args.qubo_out);
      qubofit::write_qubo(out, qubofit::build_qubo(ds, plan));
    }
  }
  return 0;
}

struct AnnealArgs {
  std::string qubo_path;
  qubofit::AnnealSchedule schedule;
  std::string trace_out, plan_path, solution_out;
};

int run_anneal(const AnnealArgs& args) {
  std::ifstream in = open_in(args.qubo_path);
  qubofit::QuboProblem qubo = qubofit::read_qubo(in);

  std::vector<qubofit::TraceRow> trace;
  qubofit::AnnealResult result = qubofit::anneal(
      qubo, args.schedule, args.trace_out.empty() ? nullptr : &trace);

  std::cout << "best energy " << result.best_energy << " after "
            << result.flips_attempted << " flips (" << result.flips_accepted
            << " accepted, " << result.wall_time_seconds << " s)\n";
  std::cout << "state ";
  for (auto bit : result.best_state) std::cout << int(bit);
  std::cout << "\n";

  if (!args.trace_out.empty()) {
    std::ofstream out = open_out(args.trace_out);
    qubofit::write_trace(out, trace);
  }
  if (!args.plan_path.empty()) {
    std::ifstream plan_in = open_in(args.plan_path);
    qubofit::EncodingPlan plan = qubofit::read_plan(plan_in);
    std::vector<double> w = qubofit::decode(plan, result.best_state);
    std::cout << "decoded weights";
    for (double v : w) std::cout << ' ' << v;
    std::cout << "\n";
  }
  if (!args.solution_out.empty()) {
    std::ofstream out = open_out(args.solution_out);
    for (auto bit : result.best_state) out << int(bit);
    out << '\n';
  }
  return 0;
}

int run_experiment(const qubofit::ExperimentConfig& cfg, const std::string& out_path,
                   const std::string& summary_path) {
  qubofit::ExperimentResult result = qubofit::run_experiment(cfg);
  {
    std::ofstream out = open_out(out_path);
    qubofit::write_results_csv(out, result.rows);
  }
  if (!summary_path.empty()) {
    std::ofstream out = open_out(summary_path);
    qubofit::write_summary(out, result.aggregates);
  }
  qubofit::write_summary(std::cout, result.aggregates);
  std::cout << result.rows.size() << " trial rows -> " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"correlation-based discretization of linear regression into QUBO, "
               "with a simulated-annealing solver and benchmark harness"};
  app.require_subcommand(1);

  // generate
  qubofit::GeneratorConfig gen_cfg;
  std::string gen_out = "dataset.txt";
  CLI::App* generate = app.add_subcommand("generate", "synthesize a benchmark dataset");
  generate->add_option("--n-total", gen_cfg.n_total, "total sample count");
  generate->add_option("--train-size", gen_cfg.train_size, "per-trial training block size");
  generate->add_option("--noise-sigma", gen_cfg.noise_sigma, "observation noise std-dev");
  generate->add_option("--seed", gen_cfg.seed, "RNG seed");
  generate->add_option("--out", gen_out, "output dataset file");

  // sample
  SampleArgs sample_args;
  CLI::App* sample = app.add_subcommand(
      "sample", "estimate parameter correlations and select shared pairs");
  sample->add_option("--data", sample_args.data_path, "input dataset file")->required();
  sample->add_option("--temperature", sample_args.sampler.temperature, "sampling temperature");
  sample->add_option("--proposal-sigma", sample_args.sampler.proposal_sigma,
                     "proposal std-dev");
  sample->add_option("--interval", sample_args.sampler.interval,
                     "steps between retained samples (0 = 2*dim)");
  sample->add_option("--chain-length", sample_args.sampler.chain_length,
                     "retained sample count");
  sample->add_option("--burn-in", sample_args.sampler.burn_in, "discarded lead-in intervals");
  sample->add_option("--seed", sample_args.sampler.seed, "RNG seed");
  sample->add_option("--threshold", sample_args.threshold, "correlation threshold");
  sample->add_option("--cut", sample_args.cut, "shared bits per pair for --plan-out/--qubo-out");
  sample->add_option("--basis", sample_args.basis, "basis values, ascending |value|")
      ->delimiter(',');
  sample->add_option("--corr-out", sample_args.corr_out, "write correlation matrix here");
  sample->add_option("--pairs-out", sample_args.pairs_out, "write selected pairs here");
  sample->add_option("--plan-out", sample_args.plan_out, "write encoding plan here");
  sample->add_option("--qubo-out", sample_args.qubo_out, "write reduced QUBO here");

  // anneal
  AnnealArgs anneal_args;
  CLI::App* anneal = app.add_subcommand("anneal", "simulated annealing on a QUBO file");
  anneal->add_option("--qubo", anneal_args.qubo_path, "input QUBO file")->required();
  anneal->add_option("--iterations", anneal_args.schedule.iterations, "iteration count");
  anneal->add_option("--t0", anneal_args.schedule.t0, "initial temperature");
  anneal->add_option("--gamma", anneal_args.schedule.gamma, "geometric decay rate");
  anneal->add_option("--seed", anneal_args.schedule.seed, "RNG seed");
  anneal->add_option("--trace", anneal_args.trace_out, "write a decimated run trace here");
  anneal->add_option("--plan", anneal_args.plan_path,
                     "encoding plan file; decodes the best state into weights");
  anneal->add_option("--solution-out", anneal_args.solution_out, "write best bit string here");

  // experiment
  qubofit::ExperimentConfig exp_cfg;
  std::string exp_out = "results.csv";
  std::string exp_summary;
  std::string exp_config_path;
  std::vector<std::string> method_names = {"proposed", "random", "none"};
  CLI::App* experiment = app.add_subcommand(
      "experiment", "methods x shared-bit counts x trials benchmark sweep");
  experiment->add_option("--config", exp_config_path,
                         "key=value file; command-line flags win");
  experiment->add_option("--n-total", exp_cfg.generator.n_total, "total sample count");
  experiment->add_option("--train-size", exp_cfg.generator.train_size,
                         "per-trial training block size");
  experiment->add_option("--noise-sigma", exp_cfg.generator.noise_sigma,
                         "observation noise std-dev");
  experiment->add_option("--trials", exp_cfg.trials, "trial count");
  experiment->add_option("--basis", exp_cfg.basis, "basis values, ascending |value|")
      ->delimiter(',');
  experiment->add_option("--temperature", exp_cfg.sampler.temperature, "sampling temperature");
  experiment->add_option("--proposal-sigma", exp_cfg.sampler.proposal_sigma,
                         "proposal std-dev");
  experiment->add_option("--interval", exp_cfg.sampler.interval,
                         "sampling interval (0 = 2*dim)");
  experiment->add_option("--chain-length", exp_cfg.sampler.chain_length,
                         "retained sample count");
  experiment->add_option("--burn-in", exp_cfg.sampler.burn_in, "discarded lead-in intervals");
  experiment->add_option("--threshold", exp_cfg.threshold, "correlation threshold");
  experiment->add_option("--iterations", exp_cfg.schedule.iterations,
                         "annealing iteration count");
  experiment->add_option("--t0", exp_cfg.schedule.t0, "initial temperature");
  experiment->add_option("--gamma", exp_cfg.schedule.gamma, "geometric decay rate");
  experiment->add_option("--cuts", exp_cfg.cut_values, "shared-bit counts to sweep")
      ->delimiter(',');
  experiment->add_option("--methods", method_names, "subset of proposed,random,none")
      ->delimiter(',');
  experiment->add_option("--master-seed", exp_cfg.master_seed,
                         "seed for every derived RNG stream");
  experiment->add_option("--out", exp_out, "results CSV path");
  experiment->add_option("--summary-out", exp_summary, "also write the summary table here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) return run_generate(gen_cfg, gen_out);
    if (*sample) return run_sample(sample_args);
    if (*anneal) return run_anneal(anneal_args);
    if (*experiment) {
      if (!exp_config_path.empty()) {
        for (const ConfigEntry& entry : read_config(exp_config_path)) {
          if (experiment->count("--" + entry.key) > 0) continue;  // flag wins
          if (entry.key == "n-total") exp_cfg.generator.n_total = std::stoi(entry.value);
          else if (entry.key == "train-size") exp_cfg.generator.train_size = std::stoi(entry.value);
          else if (entry.key == "noise-sigma") exp_cfg.generator.noise_sigma = std::stod(entry.value);
          else if (entry.key == "trials") exp_cfg.trials = std::stoi(entry.value);
          else if (entry.key == "temperature") exp_cfg.sampler.temperature = std::stod(entry.value);
          else if (entry.key == "proposal-sigma") exp_cfg.sampler.proposal_sigma = std::stod(entry.value);
          else if (entry.key == "interval") exp_cfg.sampler.interval = std::stoi(entry.value);
          else if (entry.key == "chain-length") exp_cfg.sampler.chain_length = std::stoi(entry.value);
          else if (entry.key == "burn-in") exp_cfg.sampler.burn_in = std::stoi(entry.value);
          else if (entry.key == "threshold") exp_cfg.threshold = std::stod(entry.value);
          else if (entry.key == "iterations") exp_cfg.schedule.iterations = std::stoll(entry.value);
          else if (entry.key == "t0") exp_cfg.schedule.t0 = std::stod(entry.value);
          else if (entry.key == "gamma") exp_cfg.schedule.gamma = std::stod(entry.value);
          else if (entry.key == "master-seed") exp_cfg.master_seed = std::stoull(entry.value);
          else if (entry.key == "out") exp_out = entry.value;
          else if (entry.key == "summary-out") exp_summary = entry.value;
          else if (entry.key == "basis") {
            exp_cfg.basis.clear();
            for (const std::string& v : split_list(entry.value))
              exp_cfg.basis.push_back(std::stod(v));
          } else if (entry.key == "cuts") {
            exp_cfg.cut_values.clear();
            for (const std::string& v : split_list(entry.value))
              exp_cfg.cut_values.push_back(std::stoi(v));
          } else if (entry.key == "methods") {
            method_names = split_list(entry.value);
          } else {
            throw std::runtime_error("unknown config key: " + entry.key);
          }
        }
      }
      exp_cfg.methods.clear();
      for (const std::string& name : method_names)
        exp_cfg.methods.push_back(qubofit::method_from_string(name));
      return run_experiment(exp_cfg, exp_out, exp_summary);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

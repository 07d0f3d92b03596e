// Copyright 2026 The QQC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "common/error.hpp"
#include "common/rng.hpp"
#include "dataset/dataset.hpp"
#include "encoding/feature_map.hpp"
#include "harness/config.hpp"
#include "harness/experiment.hpp"
#include "harness/sweep.hpp"
#include "kernel/quantum_kernel.hpp"
#include "oracle.hpp"
#include "sim/circuit.hpp"
#include "svm/svm.hpp"
#include "svm_oracle.hpp"
#include "text/resources.hpp"
#include "text/tagger.hpp"
#include "text/tokenizer.hpp"
#include "vqc/ansatz.hpp"
#include "vqc/cobyla.hpp"
#include "vqc/vqc.hpp"

namespace {

namespace fs = std::filesystem;
using namespace qqc;
using encoding::Entanglement;
using encoding::FeatureMapSpec;

constexpr double kHalfPi = std::numbers::pi / 2.0;

struct Context {
  fs::path selqa;
  fs::path output_root;
  fs::path resources;
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

harness::ExperimentConfig shipped_config(const Context& ctx, const std::string& file) {
  auto c = harness::load_config(testing::source_path("configs/" + file));
  if (c.dataset.source == harness::DatasetSource::kSelqa) c.dataset.path = ctx.selqa.string();
  c.output_dir = (ctx.output_root / c.name).string();
  return c;
}

std::vector<harness::ExperimentConfig> shipped_sweep(const Context& ctx,
                                                     const std::string& file) {
  auto configs = harness::load_sweep_file(testing::source_path("configs/" + file));
  for (auto& c : configs) c.dataset.path = ctx.selqa.string();
  return configs;
}

Outcome reference_accuracy_run(const Context& ctx) {
  Clock clock;
  harness::RunOptions opts;
  opts.resource_dir = ctx.resources;
  const auto q = harness::run_experiment(shipped_config(ctx, "qsvm_exp8.json"), opts);
  const auto v = harness::run_experiment(shipped_config(ctx, "vqc_exp10.json"), opts);
  const double t = clock.seconds();
  return {t < 1800.0,
          fmt("qsvm exp8 test_accuracy=%.4f (reference value 0.6061), vqc exp10 "
              "test_accuracy=%.4f (reference value 0.5821), no band asserted; wall %.1f s < 1800 s",
              q.test_accuracy, v.test_accuracy, t)};
}

Outcome simulator_oracle(const Context&) {
  Clock clock;
  Rng rng(11);
  double worst_gate = 0.0;
  std::size_t gates = 0;
  for (int n = 1; n <= 3; ++n) {
    for (double angle : {0.0, 0.3, -1.7, std::numbers::pi, 2.9}) {
      for (const auto& g : testing::all_gates(n, angle)) {
        const auto psi = testing::random_state(n, rng);
        const auto got = sim::apply_gate(psi, g);
        const auto want = testing::mat_vec(testing::full_matrix(g, n), psi.amplitudes());
        for (std::size_t i = 0; i < want.size(); ++i)
          worst_gate = std::max(worst_gate, std::abs(got.amplitudes()[i] - want[i]));
        ++gates;
      }
    }
  }
  double worst_norm = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const auto pool = testing::all_gates(n, rng.uniform(-4.0, 4.0));
    sim::Statevector s(n);
    for (int g = 0; g < 30; ++g) sim::apply_gate_inplace(s, pool[rng.below(pool.size())]);
    worst_norm = std::max(worst_norm, std::abs(s.norm_squared() - 1.0));
  }
  const double t = clock.seconds();
  return {worst_gate <= 1e-12 && worst_norm <= 1e-9 && t < 10.0,
          fmt("%zu gate cases max |err|=%.2e <= 1e-12; 1000 circuits max |norm-1|=%.2e <= 1e-9; "
              "%.2f s < 10 s",
              gates, worst_gate, worst_norm, t)};
}

Outcome closed_form_kernel(const Context&) {
  Clock clock;
  const auto spec = FeatureMapSpec::z_map(1);
  double worst = 0.0;
  int close = 0;
  for (int a = 0; a < 20; ++a) {
    for (int b = 0; b < 20; ++b) {
      const std::vector<double> x = {kHalfPi * a / 19.0}, y = {kHalfPi * b / 19.0};
      const double want = std::pow(std::cos(x[0] - y[0]), 2);
      worst = std::max(worst, std::abs(kernel::kernel_entry_exact(spec, x, y) - want));
      const double s = kernel::kernel_entry_sampled(spec, x, y, 100000,
                                                    static_cast<std::uint64_t>(a * 20 + b));
      close += std::abs(s - want) <= 0.01;
    }
  }
  const double frac = close / 400.0;
  const double t = clock.seconds();
  return {worst <= 1e-10 && frac >= 0.95 && t < 30.0,
          fmt("exact max |K-cos^2|=%.2e <= 1e-10; sampled 1e5 shots within 0.01 at %.4f of "
              "grid >= 0.95; %.2f s < 30 s",
              worst, frac, t)};
}

Outcome gram_property(const Context&) {
  Clock clock;
  Rng rng(77);
  const std::vector<FeatureMapSpec> specs = {
      FeatureMapSpec::z_map(2), FeatureMapSpec::zz_map(3),
      FeatureMapSpec::pauli_map(3, 2, Entanglement::kLinear), FeatureMapSpec::pauli_map(4),
      FeatureMapSpec{3, {"XY", "Z"}, Entanglement::kFull, 1, true}};
  double asym = 0.0, diag = 0.0, min_ev = 1.0;
  for (const auto& spec : specs) {
    const auto x = testing::random_points(30, static_cast<std::size_t>(spec.n_features), rng);
    const auto k = kernel::train_kernel_matrix(spec, x);
    for (std::size_t i = 0; i < 30; ++i) {
      diag = std::max(diag, std::abs(k.values(i, i) - 1.0));
      for (std::size_t j = 0; j < 30; ++j)
        asym = std::max(asym, std::abs(k.values(i, j) - k.values(j, i)));
    }
    const auto ev = testing::jacobi_eigenvalues(k.values);
    min_ev = std::min(min_ev, *std::min_element(ev.begin(), ev.end()));
  }
  const double t = clock.seconds();
  return {asym <= 1e-9 && diag <= 1e-9 && min_ev >= -1e-8 && t < 60.0,
          fmt("5 specs x 30 points: max asymmetry %.2e <= 1e-9, max |diag-1| %.2e <= 1e-9, "
              "min eigenvalue %.3e >= -1e-8; %.2f s < 60 s",
              asym, diag, min_ev, t)};
}

Outcome svm_oracle(const Context&) {
  Clock clock;
  Rng rng(314);
  double worst_grid = 0.0, worst_exact = 0.0;
  for (int n = 0; n < 50; ++n) {
    const auto in = testing::random_instance(rng);
    svm::SolverOptions opts;
    opts.kkt_tolerance = 1e-10;
    const auto model = svm::solve_dual(in.k, in.labels01, in.C, opts);
    const double w = svm::dual_objective(in.k, model.labels_pm, model.alphas);
    worst_grid = std::max(worst_grid, std::abs(w - testing::grid_refine_oracle(in)));
    worst_exact = std::max(worst_exact, std::abs(w - testing::active_set_oracle(in)));
  }
  const auto id = Matrix::from_rows({{1.0, 0.0}, {0.0, 1.0}});
  const std::vector<int> labels = {0, 1};
  const auto m = svm::solve_dual(id, labels, 10.0);
  const double id_err = std::max({std::abs(m.alphas[0] - 1.0), std::abs(m.alphas[1] - 1.0),
                                  std::abs(m.bias)});
  const double t = clock.seconds();
  return {worst_grid <= 1e-2 && worst_exact <= 1e-5 && id_err <= 1e-12 && t < 60.0,
          fmt("50 instances D<=6: |W-grid| max %.2e <= 1e-2, |W-exact| max %.2e <= 1e-5; "
              "identity case max err %.1e <= 1e-12; %.2f s < 60 s",
              worst_grid, worst_exact, id_err, t)};
}

Outcome vqc_trainability(const Context&) {
  Clock clock;
  const auto data = dataset::generate_synthetic(50, 1, 0.9, 17);
  const FeatureMapSpec fm{1, {"Z"}, Entanglement::kFull, 1, true};
  vqc::AnsatzSpec ansatz;
  ansatz.n_qubits = 1;
  vqc::OptimizerConfig cfg;
  cfg.max_iterations = 100;
  cfg.seed = 1;
  const auto model = vqc::train_vqc(fm, ansatz, data.x_train, data.y_train, cfg);
  const double acc = svm::accuracy(vqc::predict_vqc(model, data.x_train), data.y_train);
  bool monotone = true;
  double best = model.history.front().loss, prev = best;
  for (const auto& h : model.history) {
    best = std::min(best, h.loss);
    monotone = monotone && best <= prev;
    prev = best;
  }
  monotone = monotone && model.final_loss == best;
  vqc::OptimizerConfig quad;
  quad.max_iterations = 100;
  const auto r = vqc::cobyla_minimize(
      [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1]; }, {1.0, 1.0}, quad);
  const double t = clock.seconds();
  return {acc >= 0.95 && model.history.size() <= 100 && monotone && r.f_best <= 1e-4 &&
              t < 60.0,
          fmt("1-feature train accuracy %.4f >= 0.95 in %zu <= 100 evaluations; best-so-far "
              "nonincreasing=%s; min |theta|^2 from (1,1) %.2e <= 1e-4; %.2f s < 60 s",
              acc, model.history.size(), monotone ? "yes" : "no", r.f_best, t)};
}

Outcome end_to_end_synthetic(const Context& ctx) {
  Clock clock;
  harness::RunOptions opts;
  opts.resource_dir = ctx.resources;
  const auto q = harness::run_experiment(shipped_config(ctx, "synthetic_qsvm.json"), opts);
  const auto v = harness::run_experiment(shipped_config(ctx, "synthetic_vqc.json"), opts);
  const double t = clock.seconds();
  const bool shape = q.n_train == 160 && q.n_test == 40 && q.config.feature_set == 4;
  return {shape && q.test_accuracy >= 0.90 && v.test_accuracy >= 0.90 && t < 300.0,
          fmt("100/class, 4 features, separation 0.95: qsvm test %.4f >= 0.90, vqc test %.4f "
              ">= 0.90; %.1f s < 300 s",
              q.test_accuracy, v.test_accuracy, t)};
}

Outcome feature_fidelity(const Context& ctx) {
  const auto res = text::load_resources(ctx.resources);
  struct Row {
    std::string q;
    int wh;
    int content, nouns, verbs;
  };
  const std::vector<Row> rows = {
      {"how many times was the who national fyrd called out between 1046 and 1065?", 7, 6, 2,
       2},
      {"when did the germans begin using chlorine gas on the western front?", 3, 8, 4, 2},
      {"what is the natural satellite of earth?", 2, 4, 2, 1},
      {"what two creations of confirmation bias are under study with respect to astrological "
       "belief?",
       2, 8, 6, 0},
      {"what had faraday concluded based on his electrochemical experiments?", 2, -1, 2, 3},
  };
  std::vector<std::string> problems;
  std::ostringstream wh_codes;
  for (const auto& r : rows) {
    const auto tokens = text::tokenize(r.q);
    const auto tagged = text::tag_pos(tokens, res);
    const int wh = text::extract_wh(tokens);
    wh_codes << wh << ' ';
    if (wh != r.wh) problems.push_back("wh " + r.q);
    const int content = text::count_content(tagged).first;
    if (r.content >= 0 && std::abs(content - r.content) > 1) problems.push_back("content " + r.q);
    if (std::abs(static_cast<int>(text::extract_nouns(tagged).size()) - r.nouns) > 1)
      problems.push_back("nouns " + r.q);
    if (std::abs(text::count_verbs(tagged) - r.verbs) > 1) problems.push_back("verbs " + r.q);
  }
  using Words = std::vector<std::string>;
  if (text::extract_keywords(text::tokenize(rows[2].q), res) !=
      Words{"natural", "satellite", "earth"})
    problems.push_back("keywords satellite row");
  if (text::extract_keywords(text::tokenize(rows[0].q), res) !=
      Words{"many", "time", "national", "fyrd", "call"})
    problems.push_back("keywords fyrd row");
  const auto a = harness::featurize_records_tsv(ctx.selqa, "", ctx.resources);
  const auto b = harness::featurize_records_tsv(ctx.selqa, "", ctx.resources);
  if (a != b) problems.push_back("corpus featurization differs between runs");
  std::string detail = "wh codes [" + wh_codes.str() + "] expect [7 3 2 2 2]; keywords 2 rows "
                       "exact; content/noun/verb within +-1; corpus featurization " +
                       std::to_string(a.size()) + " bytes identical=" + (a == b ? "yes" : "no");
  for (const auto& p : problems) detail += "; mismatch: " + p;
  return {problems.empty(), detail};
}

Outcome dataset_bookkeeping(const Context& ctx) {
  const auto records = dataset::load_records(ctx.selqa, dataset::format_for_path(ctx.selqa));
  const auto ds = dataset::build_experiment_dataset(records, "Historical Events", "Science", 42);
  const auto m = ds.manifest();
  std::map<std::string, std::size_t> per_class;
  for (const auto& r : records) ++per_class[r.domain];
  const auto train_a = std::count(ds.train_labels.begin(), ds.train_labels.end(), 0);
  const auto test_a = std::count(ds.test_labels.begin(), ds.test_labels.end(), 0);
  const auto train_b = static_cast<long>(ds.train.size()) - train_a;
  const auto test_b = static_cast<long>(ds.test.size()) - test_a;
  const bool totals = records.size() == 7060 && per_class["Historical Events"] == 730 &&
                      per_class["Science"] == 795;
  const bool splits = train_a == 534 && train_b == 534 && test_a == 146 && test_b == 146;
  return {totals && splits,
          fmt("total %zu (expect 7060), Historical Events %zu (730), Science %zu (795); "
              "train/test per class %ld/%ld and %ld/%ld (expect 534/146); a balanced 730 "
              "split 80/20 gives 584/146",
              records.size(), per_class["Historical Events"], per_class["Science"],
              static_cast<long>(train_a), static_cast<long>(test_a), train_b, test_b)};
}

Outcome depth_accounting(const Context& ctx) {
  std::vector<std::string> problems;
  const auto fixtures = testing::depth_fixtures();
  auto fixture_for = [&](const std::string& cls, int exp) -> const testing::DepthFixture* {
    for (const auto& f : fixtures)
      if (f.classifier == cls && f.exp == exp) return &f;
    return nullptr;
  };
  std::size_t checked = 0;
  for (const auto* file : {"qsvm_sweep.json", "vqc_sweep.json"}) {
    for (const auto& c : shipped_sweep(ctx, file)) {
      const auto d1 = harness::compute_depths(c);
      const auto d2 = harness::compute_depths(c);
      const auto fm = encoding::build_pauli_feature_map(c.feature_map);
      int total = sim::circuit_depth(fm);
      if (c.ansatz) {
        auto composed = fm;
        composed.append(vqc::build_two_local(*c.ansatz));
        total = sim::circuit_depth(composed);
      }
      const std::string cls(harness::classifier_name(c.classifier));
      const auto* f = fixture_for(cls, c.exp_no);
      const bool pure = d1.total_circuit_depth == d2.total_circuit_depth &&
                        d1.fm_circuit_depth == d2.fm_circuit_depth &&
                        d1.qc_circuit_depth == d2.qc_circuit_depth;
      const bool measured = d1.fm_circuit_depth == sim::circuit_depth(fm) &&
                            d1.total_circuit_depth == total &&
                            d1.fm_circuit_depth + d1.qc_circuit_depth.value_or(0) == total;
      const bool fixed = f && f->fm_depth == d1.fm_circuit_depth && f->total == total;
      if (!pure || !measured || !fixed) problems.push_back(cls + " exp" + std::to_string(c.exp_no));
      ++checked;
    }
  }
  const testing::DepthFixture* two_local = nullptr;
  for (const auto& f : fixtures)
    if (f.classifier == "two_local") two_local = &f;
  vqc::AnsatzSpec a;
  a.n_qubits = 11;
  const int tl = sim::circuit_depth(vqc::build_two_local(a));
  const int fm11 = sim::circuit_depth(
      encoding::build_pauli_feature_map(FeatureMapSpec::pauli_map(11)));
  const auto* q8 = fixture_for("qsvm", 8);
  const bool hand = two_local && two_local->qc_depth == tl && q8 && q8->fm_depth == fm11;
  if (!hand) problems.push_back("hand-layered 11-qubit fixtures");
  std::string detail = fmt("%zu configs pure and equal to constructed-circuit depths; 11-qubit "
                           "PauliFeatureMap reps=1 depth %d, TwoLocal reps=1 depth %d vs "
                           "fixtures",
                           checked, fm11, tl);
  for (const auto& p : problems) detail += "; mismatch: " + p;
  return {problems.empty(), detail};
}

std::string head(const std::string& s) { return s.substr(0, s.find('\n')); }

std::size_t lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

Outcome sweep_shape(const Context& ctx) {
  Clock clock;
  harness::SweepOptions opts;
  opts.run.resource_dir = ctx.resources;
  std::vector<std::string> problems;
  std::vector<harness::ExperimentResult> results;
  std::size_t rows_q = 0, rows_v = 0;
  for (const auto* file : {"qsvm_sweep.json", "vqc_sweep.json"}) {
    const auto configs = shipped_sweep(ctx, file);
    opts.output_root = ctx.output_root / "sweep_shape" / fs::path(file).stem();
    const auto rows = harness::run_sweep(configs, opts);
    harness::write_sweep_outputs(rows, opts.output_root);
    for (const auto& r : rows) {
      if (r.result) results.push_back(*r.result);
      else problems.push_back(r.config.name + " failed: " + r.error_json);
    }
    const bool qsvm = file == std::string("qsvm_sweep.json");
    const auto csv = qsvm ? harness::qsvm_table_csv(rows) : harness::vqc_table_csv(rows);
    const std::string want =
        qsvm ? "Exp no.,No. of Features,FM,Entanglement,FM Depth,FM Combination,Testing Accuracy"
             : "Exp no.,Features,FM,Entanglement,FM depth,FM combination,QC depth,"
               "Testing Accuracy";
    if (head(csv) != want) problems.push_back(std::string(file) + " header");
    (qsvm ? rows_q : rows_v) = lines(csv) - 1;
  }
  if (rows_q != 10) problems.push_back("qsvm rows " + std::to_string(rows_q));
  if (rows_v != 11) problems.push_back("vqc rows " + std::to_string(rows_v));
  std::string trends;
  for (const auto* cls : {"qsvm", "vqc"}) {
    std::vector<harness::ExperimentResult> mine;
    for (const auto& r : results)
      if (harness::classifier_name(r.config.classifier) == cls) mine.push_back(r);
    const auto trend = harness::depth_trend(cls, mine);
    if (trend.statement.empty()) problems.push_back(std::string(cls) + " trend missing");
    trends += fmt("; %s r=%.3f: %s", cls, trend.correlation, trend.statement.c_str());
  }
  if (!results.empty() &&
      harness::build_report(results).find("short-depth") == std::string::npos)
    problems.push_back("report lacks the short-depth statement");
  std::string detail = fmt("qsvm table rows %zu (expect 10), vqc table rows %zu (expect 11), "
                           "headers exact; %.1f s",
                           rows_q, rows_v, clock.seconds()) +
                       trends;
  for (const auto& p : problems) detail += "; problem: " + p;
  return {problems.empty(), detail};
}

const std::vector<std::pair<std::string, std::function<Outcome(const Context&)>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome(const Context&)>>> all = {
      {"reference-accuracy-run", reference_accuracy_run},
      {"simulator-oracle", simulator_oracle},
      {"closed-form-kernel", closed_form_kernel},
      {"gram-property", gram_property},
      {"svm-oracle", svm_oracle},
      {"vqc-trainability", vqc_trainability},
      {"end-to-end-synthetic", end_to_end_synthetic},
      {"feature-fidelity", feature_fidelity},
      {"dataset-bookkeeping", dataset_bookkeeping},
      {"depth-accounting", depth_accounting},
      {"sweep-shape", sweep_shape},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks; prints one PASS/FAIL line per criterion"};
  std::string which = "all";
  std::string selqa = testing::source_path("data/selqa_standin.jsonl").string();
  std::string output_root = harness::default_output_root().string();
  std::string resources = text::default_resource_dir().string();
  bool list = false;
  app.add_option("--criterion", which, "Criterion name or 'all'");
  app.add_option("--selqa", selqa, "SelQA-style records file");
  app.add_option("--output-root", output_root, "Directory for experiment outputs");
  app.add_option("--resources", resources, "Text resource directory");
  app.add_flag("--list", list, "Print criterion names");
  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (const auto& [name, fn] : criteria()) std::cout << name << '\n';
    return 0;
  }
  const Context ctx{selqa, fs::path(output_root) / "acceptance", resources};
  bool all_pass = true, found = false;
  for (const auto& [name, fn] : criteria()) {
    if (which != "all" && which != name) continue;
    found = true;
    Outcome out;
    try {
      out = fn(ctx);
    } catch (const std::exception& e) {
      out = {false, std::string("error: ") + e.what()};
    }
    std::cout << (out.pass ? "PASS " : "FAIL ") << name << " | " << out.detail << std::endl;
    all_pass = all_pass && out.pass;
  }
  if (!found) {
    std::cerr << "unknown criterion: " << which << '\n';
    return 2;
  }
  return all_pass ? 0 : 1;
}

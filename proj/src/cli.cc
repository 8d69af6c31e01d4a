// Copyright 2026 The mlpsol Authors
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

#include "mlpsol/cli.h"

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mlpsol/codegen.h"
#include "mlpsol/dataset.h"
#include "mlpsol/decimal.h"
#include "mlpsol/error.h"
#include "mlpsol/fixture.h"
#include "mlpsol/gas.h"
#include "mlpsol/inference.h"
#include "mlpsol/io.h"
#include "mlpsol/model.h"

namespace mlpsol {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

enum class ReportFormat { kText, kStructured };
enum class Engine { kFloat, kFixed, kBoth };

// 1234567 -> "1,234,567"
std::string Grouped(std::int64_t v) {
  std::string digits = std::to_string(v < 0 ? -v : v);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0 && (digits.size() - i) % 3 == 0) out += ',';
    out += digits[i];
  }
  return v < 0 ? "-" + out : out;
}

std::string Fraction(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

Dataset LoadData(const std::string& path, bool normalize) {
  Dataset data = LoadCsv(path);
  return normalize ? Normalize(data) : data;
}

ordered_json StatsJson(const ArchitectureStats& s) {
  ordered_json j;
  j["w"] = s.w;
  j["x"] = s.x ? ordered_json(*s.x) : ordered_json(nullptr);
  j["y"] = s.y;
  j["t"] = s.t();
  j["z"] = s.z;
  j["i"] = s.i;
  j["d"] = s.d;
  return j;
}

struct TranspileArgs {
  std::string model;
  std::string out;
  std::string data;
  std::string calldata;
  bool normalize = false;
  CodegenOptions options;
  bool has_name = false;
};

int Transpile(const TranspileArgs& args, std::ostream& out) {
  const ModelSpec model = LoadModel(args.model);
  CodegenOptions options = args.options;
  if (!args.has_name) options.contract_name = ContractNameFor(model.name);
  const std::string source = EmitContract(model, options);
  std::optional<std::string> manifest;
  if (!args.data.empty()) {
    manifest = EmitCalldata(Quantize(model), LoadData(args.data, args.normalize), options);
  }
  WriteFile(args.out, source);
  out << args.out << "\n";
  if (manifest) {
    std::string path = args.calldata;
    if (path.empty()) {
      fs::path p(args.out);
      p.replace_extension(".calldata.json");
      path = p.string();
    }
    WriteFile(path, *manifest);
    out << path << "\n";
  }
  return kExitOk;
}

struct GasArgs {
  std::string model;
  int layers = 0;
  int width = 0;
  int input_dim = 0;
  std::string coeffs;
  bool no_deployment = false;
  ReportFormat format = ReportFormat::kText;
};

int Gas(const GasArgs& args, CLI::App& cmd, std::ostream& out, std::ostream& err) {
  const bool from_flags =
      cmd.count("--layers") + cmd.count("--width") + cmd.count("--input-dim") > 0;
  if (from_flags == !args.model.empty()) {
    throw ValidationError(
        "give exactly one architecture source: a model file or --layers/--width/--input-dim");
  }
  ModelSpec model;
  if (from_flags) {
    if (!cmd.count("--layers") || !cmd.count("--input-dim")) {
      throw ValidationError("--layers and --input-dim are required without a model file");
    }
    const int width = cmd.count("--width") ? args.width : 1;
    model = UniformModel("flags", args.input_dim, args.layers, width);
  } else {
    model = LoadModel(args.model);
  }
  const GasCoefficients coefficients =
      args.coeffs.empty() ? GasCoefficients() : LoadCoefficients(args.coeffs);
  const ArchitectureStats stats = ArchStats(model);
  if (!stats.x && !args.no_deployment) {
    err << "error: deployment not estimable: " << ArchitectureLabel(model)
        << " has non-uniform hidden widths (use --no-deployment for upload and inference "
           "only)\n";
    return kExitFailure;
  }
  GasEstimate estimate = EstimateGas(stats, coefficients);
  if (args.no_deployment) estimate.deployment.reset();

  if (args.format == ReportFormat::kStructured) {
    ordered_json j;
    j["architecture"] = ArchitectureLabel(model);
    j["stats"] = StatsJson(stats);
    j["deployment"] = estimate.deployment ? ordered_json(*estimate.deployment)
                                          : ordered_json(nullptr);
    j["upload"] = estimate.upload;
    j["inference_per_call"] = estimate.inference_per_call;
    j["total_setup"] = estimate.total_setup() ? ordered_json(*estimate.total_setup())
                                              : ordered_json(nullptr);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "architecture: " << ArchitectureLabel(model) << " (w=" << stats.w;
  if (stats.x) out << ", x=" << *stats.x;
  out << ", y=t=" << stats.y << ", z=" << stats.z << ", i=" << stats.i
      << ", d=" << stats.d << ")\n";
  auto row = [&](const char* label, const std::optional<std::int64_t>& v) {
    out << std::left << std::setw(20) << label << std::right << std::setw(12)
        << (v ? Grouped(*v) : std::string("n/a")) << (v ? " gas" : "") << "\n";
  };
  row("deployment:", estimate.deployment);
  row("upload:", estimate.upload);
  row("total setup:", estimate.total_setup());
  row("inference per call:", estimate.inference_per_call);
  return kExitOk;
}

struct EvalArgs {
  std::string model;
  std::string data;
  bool normalize = false;
  Engine engine = Engine::kBoth;
  ReportFormat format = ReportFormat::kText;
};

int Infer(const EvalArgs& args, std::ostream& out) {
  const ModelSpec model = LoadModel(args.model);
  const Dataset data = LoadData(args.data, args.normalize);
  ValidateDataset(data);
  if (data.dim() != static_cast<std::size_t>(model.input_dim)) {
    throw ValidationError("dimension mismatch: model expects " +
                          std::to_string(model.input_dim) + " features, data has " +
                          std::to_string(data.dim()));
  }
  const bool run_float = args.engine != Engine::kFixed;
  const bool run_fixed = args.engine != Engine::kFloat;
  const FloatModel float_model = ToFloatModel(model);
  const QuantizedModel fixed_model = Quantize(model);
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < data.rows(); ++r) {
    ordered_json row;
    row["index"] = r;
    row["label"] = data.labels[r];
    std::ostringstream text;
    text << "row " << r << ": label=" << data.labels[r];
    if (run_float) {
      const double p = FloatForward(float_model, data.features[r]);
      row["float"] = {{"probability", p}, {"prediction", Predict(p)}};
      text << " float p=" << std::setprecision(17) << p << " -> " << Predict(p);
    }
    if (run_fixed) {
      const Fixed q = FixedForward(fixed_model, QuantizeRow(data.features[r]));
      row["fixed"] = {{"probability", q.ToDecimal()},
                      {"raw", q.RawString()},
                      {"prediction", Predict(q)}};
      text << " fixed p=" << q.ToDecimal() << " -> " << Predict(q);
    }
    if (args.format == ReportFormat::kText) out << text.str() << "\n";
    rows.push_back(std::move(row));
  }
  if (args.format == ReportFormat::kStructured) {
    ordered_json j;
    j["model"] = model.name;
    j["rows"] = std::move(rows);
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

int Compare(const EvalArgs& args, std::ostream& out) {
  const ModelSpec model = LoadModel(args.model);
  const Dataset data = LoadData(args.data, args.normalize);
  const EvaluationReport report = Evaluate(model, data);
  if (args.format == ReportFormat::kStructured) {
    ordered_json j;
    j["model"] = model.name;
    j["architecture"] = ArchitectureLabel(model);
    j["rows"] = report.rows;
    j["float_accuracy"] = report.float_accuracy;
    j["fixed_accuracy"] = report.fixed_accuracy;
    j["float_correct"] = report.float_correct;
    j["fixed_correct"] = report.fixed_correct;
    j["agreement_count"] = report.agreement_count;
    j["min_margin"] = report.min_margin;
    j["float_predictions"] = report.float_predictions;
    j["fixed_predictions"] = report.fixed_predictions;
    j["parity"] = report.parity();
    out << j.dump(2) << "\n";
  } else {
    out << "model: " << model.name << " (" << ArchitectureLabel(model)
        << ", d=" << model.input_dim << ")\n"
        << "rows: " << report.rows << "\n"
        << "float accuracy: " << Fraction(report.float_accuracy) << " ("
        << report.float_correct << "/" << report.rows << ")\n"
        << "fixed accuracy: " << Fraction(report.fixed_accuracy) << " ("
        << report.fixed_correct << "/" << report.rows << ")\n"
        << "agreement: " << report.agreement_count << "/" << report.rows << "\n"
        << "min margin: " << std::setprecision(6) << report.min_margin << "\n"
        << "parity: " << (report.parity() ? "yes" : "NO") << "\n";
  }
  return report.parity() ? kExitOk : kExitFailure;
}

struct FixtureArgs {
  std::uint64_t seed = 7;
  int rows = 0;
  int features = 0;
  int layers = 1;
  int width = 1;
  double test_fraction = 0.1;
  std::string out;
};

int MakeFixture(const FixtureArgs& args, std::ostream& out) {
  if (args.rows < 10) throw ValidationError("--rows must be at least 10");
  if (args.features < 1) throw ValidationError("--features must be at least 1");
  const Dataset data = SyntheticDataset(args.seed, args.rows, args.features);
  const auto [train, test] = Split(data, args.test_fraction, args.seed);
  // Separate stream so the model does not depend on the row count.
  const ModelSpec model =
      RandomUniformModel(args.seed + 1, args.features, args.layers, args.width);

  std::error_code ec;
  fs::create_directories(args.out, ec);
  if (ec) throw IoError("cannot create directory '" + args.out + "': " + ec.message());
  std::string label = ArchitectureLabel(model);
  for (char& c : label) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  const fs::path dir(args.out);
  const std::pair<fs::path, std::string> files[] = {
      {dir / "dataset.csv", WriteCsv(data)},
      {dir / "train.csv", WriteCsv(train)},
      {dir / "test.csv", WriteCsv(test)},
      {dir / ("model_" + label + ".json"), EmitModel(model)},
  };
  for (const auto& [path, contents] : files) {
    WriteFile(path, contents);
    out << path.string() << "\n";
  }
  return kExitOk;
}

const std::map<std::string, ReportFormat> kFormats = {
    {"text", ReportFormat::kText}, {"structured", ReportFormat::kStructured}};

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Translate MLP models into Solidity contracts using signed 59.18 "
               "fixed-point math, check float/fixed parity, and estimate gas."};
  app.name("mlpsol");
  app.require_subcommand(1);

  TranspileArgs transpile;
  CLI::App* transpile_cmd = app.add_subcommand("transpile", "Emit a Solidity contract for a model");
  transpile_cmd->add_option("model", transpile.model, "Model interchange file")->required();
  transpile_cmd->add_option("-o,--out", transpile.out, "Output .sol path")->required();
  transpile_cmd->add_option("--contract-name", transpile.options.contract_name,
                            "Contract identifier (default: derived from the model name)");
  transpile_cmd->add_option("--pragma", transpile.options.solidity_pragma,
                            "Solidity version pragma")
      ->capture_default_str();
  transpile_cmd->add_option("--math-import", transpile.options.math_import,
                            "Import path of the SD59x18 math library")
      ->capture_default_str();
  transpile_cmd->add_option("--data", transpile.data,
                            "Test-set CSV; also writes the calldata manifest");
  transpile_cmd->add_option("--calldata", transpile.calldata,
                            "Manifest path (default: <out> with .calldata.json)");
  transpile_cmd->add_flag("--normalize", transpile.normalize,
                          "Min-max normalize the test set first");

  GasArgs gas;
  CLI::App* gas_cmd = app.add_subcommand("gas", "Estimate deployment, upload and inference gas");
  gas_cmd->add_option("model", gas.model, "Model interchange file");
  gas_cmd->add_option("--layers", gas.layers, "Layer count w (output layer included)");
  gas_cmd->add_option("--width", gas.width, "Hidden-layer width x (default 1)");
  gas_cmd->add_option("--input-dim", gas.input_dim, "Input dimension d");
  gas_cmd->add_option("--coeffs", gas.coeffs, "Coefficient override file (JSON)");
  gas_cmd->add_flag("--no-deployment", gas.no_deployment,
                    "Skip the deployment estimate (allows non-uniform models)");
  gas_cmd->add_option("--report", gas.format, "text or structured")
      ->transform(CLI::CheckedTransformer(kFormats));

  EvalArgs infer;
  CLI::App* infer_cmd = app.add_subcommand("infer", "Run inference on every row of a CSV");
  infer_cmd->add_option("model", infer.model, "Model interchange file")->required();
  infer_cmd->add_option("data", infer.data, "Dataset CSV")->required();
  infer_cmd->add_option("--engine", infer.engine, "float, fixed or both")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Engine>{
          {"float", Engine::kFloat}, {"fixed", Engine::kFixed}, {"both", Engine::kBoth}}));
  infer_cmd->add_flag("--normalize", infer.normalize, "Min-max normalize features first");
  infer_cmd->add_option("--report", infer.format, "text or structured")
      ->transform(CLI::CheckedTransformer(kFormats));

  EvalArgs compare;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Compare float and fixed-point accuracy on a test set");
  compare_cmd->add_option("model", compare.model, "Model interchange file")->required();
  compare_cmd->add_option("data", compare.data, "Test-set CSV")->required();
  compare_cmd->add_flag("--normalize", compare.normalize, "Min-max normalize features first");
  compare_cmd->add_option("--report", compare.format, "text or structured")
      ->transform(CLI::CheckedTransformer(kFormats));

  FixtureArgs fixture;
  CLI::App* fixture_cmd =
      app.add_subcommand("fixture", "Write a seeded synthetic dataset and random model");
  fixture_cmd->add_option("--seed", fixture.seed, "RNG seed")->capture_default_str();
  fixture_cmd->add_option("--rows", fixture.rows, "Dataset rows (>= 10)")->required();
  fixture_cmd->add_option("--features", fixture.features, "Feature count")->required();
  fixture_cmd->add_option("--layers", fixture.layers, "Model layer count")->capture_default_str();
  fixture_cmd->add_option("--width", fixture.width, "Model hidden width")->capture_default_str();
  fixture_cmd->add_option("--test-fraction", fixture.test_fraction, "Test split fraction")
      ->capture_default_str();
  fixture_cmd->add_option("--out", fixture.out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitFailure;
  }

  try {
    if (*transpile_cmd) {
      transpile.has_name = transpile_cmd->count("--contract-name") > 0;
      return Transpile(transpile, out);
    }
    if (*gas_cmd) return Gas(gas, *gas_cmd, out, err);
    if (*infer_cmd) return Infer(infer, out);
    if (*compare_cmd) return Compare(compare, out);
    if (*fixture_cmd) return MakeFixture(fixture, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace mlpsol

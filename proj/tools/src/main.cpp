#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "ridgekit/error.hpp"

namespace cli = ridgekit::cli;

namespace {

void add_config_flags(CLI::App& cmd, cli::ConfigOptions& cfg, bool with_threshold) {
  cmd.add_option("--config", cfg.config_file, "Config file (key = value); overrides RIDGEKIT_CONFIG");
  cmd.add_option("--radius", cfg.radius, "ROI radius R in pixels")->check(CLI::PositiveNumber);
  cmd.add_option("--descriptors", cfg.descriptors, "Fourier descriptor count K")
      ->check(CLI::PositiveNumber);
  if (with_threshold) {
    cmd.add_option("--threshold", cfg.threshold, "Match threshold on the template distance")
        ->check(CLI::NonNegativeNumber);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fingerprint enrollment, matching and evaluation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ridgekit 0.1.0");

  cli::ConfigOptions config;

  cli::EnrollOptions enroll;
  auto* enroll_cmd = app.add_subcommand("enroll", "Enroll images into a template database");
  enroll_cmd->add_option("images", enroll.images, "Images named <finger>_<impression>.<ext>")
      ->required()
      ->check(CLI::ExistingFile);
  enroll_cmd->add_option("--db", enroll.db, "Template database directory")->required();
  enroll_cmd->add_option("--finger", enroll.finger, "Finger id (single image only)");
  enroll_cmd->add_option("--impression", enroll.impression, "Impression id (single image only)");
  add_config_flags(*enroll_cmd, config, false);

  cli::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "One-to-one match of a probe image");
  verify_cmd->add_option("probe", verify.probe, "Probe image")->required();
  verify_cmd->add_option("gallery", verify.gallery, "Enrolled template file (.fptl)")->required();
  add_config_flags(*verify_cmd, config, true);

  cli::IdentifyOptions identify;
  auto* identify_cmd = app.add_subcommand("identify", "One-to-many search of a probe image");
  identify_cmd->add_option("probe", identify.probe, "Probe image")->required();
  identify_cmd->add_option("--db", identify.db, "Template database directory")->required();
  add_config_flags(*identify_cmd, config, true);

  cli::EvaluateOptions evaluate;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "FAR/FRR/EER sweep over an FVC-style dataset");
  evaluate_cmd->add_option("dataset", evaluate.dataset, "Directory of <finger>_<impression> images")
      ->required();
  evaluate_cmd->add_option("--out", evaluate.out, "Output directory")->required();
  evaluate_cmd->add_option("--grid-radius", evaluate.radii, "Radii to evaluate")->delimiter(',');
  evaluate_cmd->add_option("--grid-descriptors", evaluate.descriptors, "Descriptor counts")
      ->delimiter(',');
  evaluate_cmd->add_option("--steps", evaluate.steps, "Threshold sweep resolution")
      ->capture_default_str()
      ->check(CLI::Range(2, 100000));
  add_config_flags(*evaluate_cmd, config, false);

  cli::InspectOptions inspect;
  auto* inspect_cmd = app.add_subcommand("inspect", "Dump intermediate pipeline stages");
  inspect_cmd->add_option("image", inspect.image, "Input image")->required();
  inspect_cmd->add_option("--out", inspect.out, "Output directory")->required();
  inspect_cmd->add_option("--stage", inspect.stage, "Last stage to write")
      ->capture_default_str()
      ->check(CLI::IsMember(cli::inspect_stages()));
  add_config_flags(*inspect_cmd, config, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kSuccess : cli::kFailure;
  }

  ridgekit::PipelineConfig cfg;
  try {
    cfg = cli::resolve_config(config, std::getenv("RIDGEKIT_CONFIG"));
  } catch (const std::exception& e) {
    std::cerr << "ridgekit: " << e.what() << "\n";
    return cli::kFailure;
  }

  if (*enroll_cmd) return cli::run_enroll(enroll, cfg, std::cout, std::cerr);
  if (*verify_cmd) return cli::run_verify(verify, cfg, std::cout, std::cerr);
  if (*identify_cmd) return cli::run_identify(identify, cfg, std::cout, std::cerr);
  if (*evaluate_cmd) return cli::run_evaluate(evaluate, cfg, std::cout, std::cerr);
  return cli::run_inspect(inspect, cfg, std::cout, std::cerr);
}

#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "ridgekit/descriptor.hpp"

namespace ridgekit {

/// Distance scores: same-finger pairs and different-finger pairs.
struct ScoreSet {
  std::vector<double> genuine;
  std::vector<double> impostor;

  /// Fraction of impostor scores accepted (<= t).
  double far_at(double t) const;
  /// Fraction of genuine scores rejected (> t).
  double frr_at(double t) const;
};

/// Genuine: every unordered impression pair within a finger. Impostor: the
/// first impression of each finger against the first impression of every
/// other finger. Throws Error{InsufficientData} if either side is empty.
ScoreSet collect_scores(std::span<const Template> db);

struct ErrorCurve {
  std::vector<double> thresholds;
  std::vector<double> far;
  std::vector<double> frr;
};

/// `steps` evenly spaced thresholds over [min score, max score].
/// Throws Error{InsufficientData} for empty score lists or steps < 2.
ErrorCurve error_curve(const ScoreSet& scores, int steps = 200);

struct EerResult {
  double eer_percent = 0.0;
  double threshold = 0.0;
  // FAR and FRR never cross; eer_percent is the smallest max(FAR, FRR).
  bool degenerate = false;
};

/// First crossing of FAR and FRR, linearly interpolated between samples.
EerResult equal_error_rate(const ErrorCurve& curve);

/// 100 * (1 - min over thresholds of (FAR + FRR) / 2).
double accuracy(const ErrorCurve& curve);

/// Threshold at which the accuracy optimum is reached (first one on ties).
double best_accuracy_threshold(const ErrorCurve& curve);

struct EvalReport {
  int radius = 0;
  int descriptor_count = 0;
  double eer = 0.0;               // percent
  double threshold_at_eer = 0.0;  // position of the crossing on the sweep, [0, 1]
  double dmin_at_eer = 0.0;       // distance at the crossing
  double accuracy = 0.0;          // percent, best half-total error
  bool degenerate = false;
};

EvalReport make_report(const ErrorCurve& curve, int radius, int descriptor_count);

void write_report(std::span<const EvalReport> rows, const std::filesystem::path& path);
void write_curve(const ErrorCurve& curve, const std::filesystem::path& path);

/// report.tsv and curve.csv in `out_dir`. Throws Error{IoError}.
void emit_report(const EvalReport& report, const ErrorCurve& curve,
                 const std::filesystem::path& out_dir);

}  // namespace ridgekit

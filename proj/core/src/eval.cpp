#include "ridgekit/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include "ridgekit/error.hpp"
#include "ridgekit/matcher.hpp"

namespace ridgekit {

namespace fs = std::filesystem;

double ScoreSet::far_at(double t) const {
  if (impostor.empty()) return 0.0;
  const auto n = std::count_if(impostor.begin(), impostor.end(), [t](double s) { return s <= t; });
  return static_cast<double>(n) / static_cast<double>(impostor.size());
}

double ScoreSet::frr_at(double t) const {
  if (genuine.empty()) return 0.0;
  const auto n = std::count_if(genuine.begin(), genuine.end(), [t](double s) { return s > t; });
  return static_cast<double>(n) / static_cast<double>(genuine.size());
}

ScoreSet collect_scores(std::span<const Template> db) {
  std::map<std::uint32_t, std::vector<const Template*>> by_finger;
  for (const auto& t : db) by_finger[t.id.finger].push_back(&t);
  for (auto& [finger, list] : by_finger) {
    std::sort(list.begin(), list.end(),
              [](const Template* a, const Template* b) { return a->id < b->id; });
  }

  ScoreSet scores;
  for (const auto& [finger, list] : by_finger) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        scores.genuine.push_back(template_distance(*list[i], *list[j]));
      }
    }
  }
  for (auto a = by_finger.begin(); a != by_finger.end(); ++a) {
    for (auto b = std::next(a); b != by_finger.end(); ++b) {
      scores.impostor.push_back(template_distance(*a->second.front(), *b->second.front()));
    }
  }
  if (scores.genuine.empty() || scores.impostor.empty()) {
    throw Error(ErrorCode::InsufficientData,
                "need >= 2 fingers and >= 2 impressions of some finger (genuine " +
                    std::to_string(scores.genuine.size()) + ", impostor " +
                    std::to_string(scores.impostor.size()) + ")");
  }
  return scores;
}

ErrorCurve error_curve(const ScoreSet& scores, int steps) {
  if (steps < 2) throw Error(ErrorCode::InsufficientData, "threshold sweep needs >= 2 steps");
  if (scores.genuine.empty() || scores.impostor.empty()) {
    throw Error(ErrorCode::InsufficientData, "empty score list");
  }
  std::vector<double> genuine = scores.genuine;
  std::vector<double> impostor = scores.impostor;
  std::sort(genuine.begin(), genuine.end());
  std::sort(impostor.begin(), impostor.end());
  const double lo = std::min(genuine.front(), impostor.front());
  const double hi = std::max(genuine.back(), impostor.back());

  ErrorCurve curve;
  curve.thresholds.resize(static_cast<std::size_t>(steps));
  curve.far.resize(curve.thresholds.size());
  curve.frr.resize(curve.thresholds.size());
  for (int i = 0; i < steps; ++i) {
    const double t = i + 1 == steps ? hi : lo + (hi - lo) * i / (steps - 1);
    const auto accepted_impostor = std::upper_bound(impostor.begin(), impostor.end(), t) - impostor.begin();
    const auto accepted_genuine = std::upper_bound(genuine.begin(), genuine.end(), t) - genuine.begin();
    curve.thresholds[i] = t;
    curve.far[i] = static_cast<double>(accepted_impostor) / static_cast<double>(impostor.size());
    curve.frr[i] = static_cast<double>(static_cast<long>(genuine.size()) - accepted_genuine) /
                   static_cast<double>(genuine.size());
  }
  return curve;
}

EerResult equal_error_rate(const ErrorCurve& curve) {
  const auto n = curve.thresholds.size();
  if (n == 0) throw Error(ErrorCode::InsufficientData, "empty error curve");
  for (std::size_t i = 0; i < n; ++i) {
    const double d = curve.far[i] - curve.frr[i];
    if (d == 0.0) return {100.0 * curve.far[i], curve.thresholds[i], false};
    if (i + 1 < n) {
      const double next = curve.far[i + 1] - curve.frr[i + 1];
      if (d < 0.0 && next > 0.0) {
        const double alpha = -d / (next - d);
        const double rate = curve.far[i] + alpha * (curve.far[i + 1] - curve.far[i]);
        const double t = curve.thresholds[i] + alpha * (curve.thresholds[i + 1] - curve.thresholds[i]);
        return {100.0 * rate, t, false};
      }
    }
  }
  EerResult best{101.0, curve.thresholds.front(), true};
  for (std::size_t i = 0; i < n; ++i) {
    const double worst = 100.0 * std::max(curve.far[i], curve.frr[i]);
    if (worst < best.eer_percent) best = {worst, curve.thresholds[i], true};
  }
  return best;
}

namespace {

std::size_t best_hter_index(const ErrorCurve& curve) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < curve.thresholds.size(); ++i) {
    if (curve.far[i] + curve.frr[i] < curve.far[best] + curve.frr[best]) best = i;
  }
  return best;
}

}  // namespace

double accuracy(const ErrorCurve& curve) {
  if (curve.thresholds.empty()) throw Error(ErrorCode::InsufficientData, "empty error curve");
  const auto i = best_hter_index(curve);
  return 100.0 * (1.0 - 0.5 * (curve.far[i] + curve.frr[i]));
}

double best_accuracy_threshold(const ErrorCurve& curve) {
  if (curve.thresholds.empty()) throw Error(ErrorCode::InsufficientData, "empty error curve");
  return curve.thresholds[best_hter_index(curve)];
}

EvalReport make_report(const ErrorCurve& curve, int radius, int descriptor_count) {
  const auto eer = equal_error_rate(curve);
  EvalReport r;
  r.radius = radius;
  r.descriptor_count = descriptor_count;
  r.eer = eer.eer_percent;
  r.dmin_at_eer = eer.threshold;
  const double lo = curve.thresholds.front();
  const double hi = curve.thresholds.back();
  r.threshold_at_eer = hi > lo ? (eer.threshold - lo) / (hi - lo) : 0.0;
  r.accuracy = accuracy(curve);
  r.degenerate = eer.degenerate;
  return r;
}

namespace {

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "short write to " + path.string());
}

}  // namespace

void write_report(std::span<const EvalReport> rows, const fs::path& path) {
  std::string text =
      "radius\tdescriptors\teer\tdmin_at_eer\taccuracy\tthreshold\t"
      "accuracy_100_minus_eer\taccuracy_100_minus_2eer\tdegenerate\n";
  for (const auto& r : rows) {
    text += std::to_string(r.radius) + "\t" + std::to_string(r.descriptor_count) + "\t" +
            fixed4(r.eer) + "\t" + fixed4(r.dmin_at_eer) + "\t" + fixed4(r.accuracy) + "\t" +
            fixed4(r.threshold_at_eer) + "\t" + fixed4(100.0 - r.eer) + "\t" +
            fixed4(100.0 - 2.0 * r.eer) + "\t" + (r.degenerate ? "1" : "0") + "\n";
  }
  write_text(path, text);
}

void write_curve(const ErrorCurve& curve, const fs::path& path) {
  std::string text = "threshold,far,frr\n";
  for (std::size_t i = 0; i < curve.thresholds.size(); ++i) {
    text += fixed4(curve.thresholds[i]) + "," + fixed4(curve.far[i]) + "," + fixed4(curve.frr[i]) + "\n";
  }
  write_text(path, text);
}

void emit_report(const EvalReport& report, const ErrorCurve& curve, const fs::path& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + out_dir.string() + ": " + ec.message());
  write_report(std::span(&report, 1), out_dir / "report.tsv");
  write_curve(curve, out_dir / "curve.csv");
}

}  // namespace ridgekit

#include "ridgekit/matcher.hpp"

#include <cmath>
#include <cstdio>

#include "ridgekit/error.hpp"

namespace ridgekit {

double template_distance(const Template& a, const Template& b) {
  if (a.descriptor_count() != b.descriptor_count() || a.radius != b.radius) {
    throw Error(ErrorCode::IncompatibleTemplates,
                "K " + std::to_string(a.descriptor_count()) + "/" +
                    std::to_string(b.descriptor_count()) + ", R " + std::to_string(a.radius) +
                    "/" + std::to_string(b.radius));
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < a.descriptors.size(); ++k) {
    const double d = a.descriptors[k] - b.descriptors[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

std::string format_id(const TemplateId& id) {
  return std::to_string(id.finger) + "_" + std::to_string(id.impression);
}

MatchDecision verify(const Template& probe, const Template& gallery, double threshold) {
  if (threshold < 0.0) throw Error(ErrorCode::InvalidArgument, "threshold must be >= 0");
  MatchDecision d;
  d.distance = template_distance(probe, gallery);
  d.threshold = threshold;
  d.matched = d.distance <= threshold;
  d.probe_id = format_id(probe.id);
  d.gallery_id = format_id(gallery.id);
  return d;
}

Identification identify(const Template& probe, std::span<const Template> gallery,
                        double threshold) {
  if (gallery.empty()) throw Error(ErrorCode::EmptyDatabase, "no enrolled templates");
  const Template* best = nullptr;
  double best_distance = 0.0;
  for (const auto& g : gallery) {
    const double d = template_distance(probe, g);
    if (!best || d < best_distance || (d == best_distance && g.id < best->id)) {
      best = &g;
      best_distance = d;
    }
  }
  Identification result;
  result.best = best->id;
  result.distance = best_distance;
  result.decision = verify(probe, *best, threshold);
  return result;
}

std::string format_decision(const MatchDecision& d) {
  char distance[64];
  std::snprintf(distance, sizeof distance, "%.6f", d.distance);
  return d.probe_id + "\t" + d.gallery_id + "\t" + distance + "\t" +
         (d.matched ? "match" : "no-match");
}

}  // namespace ridgekit

#pragma once

#include <span>
#include <string>

#include "ridgekit/descriptor.hpp"

namespace ridgekit {

struct MatchDecision {
  double distance = 0.0;
  double threshold = 0.0;
  bool matched = false;
  std::string probe_id;
  std::string gallery_id;
};

/// Euclidean distance between descriptor vectors.
/// Throws Error{IncompatibleTemplates} when K or R differ.
double template_distance(const Template& a, const Template& b);

/// Matched iff distance <= threshold.
MatchDecision verify(const Template& probe, const Template& gallery, double threshold);

struct Identification {
  TemplateId best;
  double distance = 0.0;
  MatchDecision decision;
};

/// Best match over the gallery; equal distances resolve to the smaller
/// (finger, impression). Throws Error{EmptyDatabase | IncompatibleTemplates}.
Identification identify(const Template& probe, std::span<const Template> gallery,
                        double threshold);

std::string format_id(const TemplateId& id);

/// probe<TAB>gallery<TAB>distance<TAB>match|no-match
std::string format_decision(const MatchDecision& d);

}  // namespace ridgekit

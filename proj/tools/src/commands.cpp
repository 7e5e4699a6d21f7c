#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "dataset.hpp"
#include "ridgekit/draw.hpp"
#include "ridgekit/error.hpp"
#include "ridgekit/eval.hpp"
#include "ridgekit/imageio.hpp"
#include "ridgekit/matcher.hpp"
#include "ridgekit/pipeline.hpp"
#include "ridgekit/template_io.hpp"

namespace ridgekit::cli {

namespace fs = std::filesystem;

PipelineConfig resolve_config(const ConfigOptions& opts, const char* env_config) {
  PipelineConfig cfg;
  if (opts.config_file) {
    cfg = load_config(*opts.config_file);
  } else if (env_config != nullptr && *env_config != '\0') {
    cfg = load_config(env_config);
  }
  if (opts.radius) cfg.radius = *opts.radius;
  if (opts.descriptors) cfg.descriptor_count = *opts.descriptors;
  if (opts.threshold) cfg.match_threshold = *opts.threshold;
  cfg.validate();
  return cfg;
}

namespace {

void report(std::ostream& err, const std::string& subject, const std::exception& e) {
  err << "ridgekit: " << subject << ": " << e.what() << "\n";
}

struct Enrolled {
  Template tmpl;
  std::size_t minutiae = 0;
};

Enrolled enroll_file(const fs::path& path, const PipelineConfig& cfg, TemplateId id) {
  const auto prepared = prepare(load_grayscale(path), cfg);
  const auto stages = extract_ridges(prepared, cfg);
  return {make_template(stages.minutiae, cfg, id), stages.minutiae.items.size()};
}

std::string probe_name(const fs::path& probe) {
  if (const auto id = parse_image_id(probe)) return format_id(*id);
  return probe.stem().string();
}

std::string decision_line(MatchDecision d, const std::string& probe) {
  d.probe_id = probe;
  return format_decision(d);
}

}  // namespace

int run_enroll(const EnrollOptions& opts, const PipelineConfig& cfg, std::ostream& out,
               std::ostream& err) {
  if ((opts.finger || opts.impression) && opts.images.size() != 1) {
    err << "ridgekit: --finger/--impression need exactly one image\n";
    return kFailure;
  }
  TemplateDatabase db(opts.db);
  std::error_code ec;
  fs::create_directories(opts.db, ec);

  std::vector<Template> enrolled;
  for (const auto& path : opts.images) {
    try {
      TemplateId id;
      if (opts.finger || opts.impression) {
        id = {opts.finger.value_or(0), opts.impression.value_or(0)};
      } else if (const auto parsed = parse_image_id(path)) {
        id = *parsed;
      } else {
        throw Error(ErrorCode::InvalidArgument,
                    "cannot derive finger/impression from the file name; use --finger/--impression");
      }
      auto result = enroll_file(path, cfg, id);
      out << format_id(id) << "\t" << template_filename(id) << "\t" << result.minutiae << "\n";
      enrolled.push_back(std::move(result.tmpl));
    } catch (const std::exception& e) {
      report(err, path.string(), e);
    }
  }
  if (enrolled.empty()) return kFailure;
  try {
    db.put_all(enrolled);
  } catch (const std::exception& e) {
    report(err, opts.db.string(), e);
    return kFailure;
  }
  return kSuccess;
}

int run_verify(const VerifyOptions& opts, const PipelineConfig& cfg, std::ostream& out,
               std::ostream& err) {
  try {
    const auto gallery = load_template(opts.gallery);
    const auto probe = enroll_file(opts.probe, cfg, {}).tmpl;
    const auto decision = verify(probe, gallery, cfg.match_threshold);
    out << decision_line(decision, probe_name(opts.probe)) << "\n";
    return decision.matched ? kSuccess : kNoMatch;
  } catch (const std::exception& e) {
    report(err, "verify", e);
    return kFailure;
  }
}

int run_identify(const IdentifyOptions& opts, const PipelineConfig& cfg, std::ostream& out,
                 std::ostream& err) {
  try {
    const auto gallery = TemplateDatabase(opts.db).load_all();
    const auto probe = enroll_file(opts.probe, cfg, {}).tmpl;
    const auto result = identify(probe, gallery, cfg.match_threshold);
    out << decision_line(result.decision, probe_name(opts.probe)) << "\n";
    return result.decision.matched ? kSuccess : kNoMatch;
  } catch (const std::exception& e) {
    report(err, "identify", e);
    return kFailure;
  }
}

int run_evaluate(const EvaluateOptions& opts, const PipelineConfig& cfg, std::ostream& out,
                 std::ostream& err) {
  try {
    const auto radii = opts.radii.empty() ? std::vector<int>{cfg.radius} : opts.radii;
    const auto counts =
        opts.descriptors.empty() ? std::vector<int>{cfg.descriptor_count} : opts.descriptors;
    for (int r : radii) {
      if (r <= 0) throw Error(ErrorCode::BadConfig, "grid radius must be > 0");
    }
    for (int k : counts) {
      if (k < 1 || k > cfg.signature_length) {
        throw Error(ErrorCode::BadConfig, "grid descriptor count must be in [1, signature_length]");
      }
    }

    const auto images = scan_dataset(opts.dataset);
    // Everything up to core detection is independent of R and K.
    std::vector<std::pair<TemplateId, PreparedImage>> prepared;
    for (const auto& img : images) {
      try {
        auto p = prepare(load_grayscale(img.path), cfg);
        if (!p.core) throw Error(ErrorCode::NoCoreFound, "no singular point above threshold");
        prepared.emplace_back(img.id, std::move(p));
      } catch (const std::exception& e) {
        report(err, img.path.string(), e);
      }
    }
    err << "ridgekit: " << prepared.size() << " of " << images.size() << " images usable\n";

    std::error_code ec;
    fs::create_directories(opts.out, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create " + opts.out.string());

    std::vector<EvalReport> rows;
    for (int radius : radii) {
      PipelineConfig run = cfg;
      run.radius = radius;
      std::vector<std::pair<TemplateId, MinutiaeSet>> minutiae;
      for (const auto& [id, p] : prepared) {
        try {
          minutiae.emplace_back(id, extract_ridges(p, run).minutiae);
        } catch (const std::exception& e) {
          report(err, format_id(id) + " (R=" + std::to_string(radius) + ")", e);
        }
      }
      for (int k : counts) {
        run.descriptor_count = k;
        std::vector<Template> templates;
        for (const auto& [id, m] : minutiae) templates.push_back(make_template(m, run, id));
        const auto curve = error_curve(collect_scores(templates), opts.steps);
        rows.push_back(make_report(curve, radius, k));
        write_curve(curve, opts.out / ("curve_R" + std::to_string(radius) + "_K" +
                                       std::to_string(k) + ".csv"));
        const auto& row = rows.back();
        char line[160];
        std::snprintf(line, sizeof line, "R=%d K=%d EER=%.4f%% dmin=%.4f accuracy=%.4f%%%s\n",
                      row.radius, row.descriptor_count, row.eer, row.dmin_at_eer, row.accuracy,
                      row.degenerate ? " (no crossing)" : "");
        out << line;
      }
    }
    write_report(rows, opts.out / "report.tsv");
    return kSuccess;
  } catch (const std::exception& e) {
    report(err, "evaluate", e);
    return kFailure;
  }
}

const std::vector<std::string>& inspect_stages() {
  static const std::vector<std::string> names = {"enhanced", "orientation", "strength",
                                                 "roi",      "binary",      "thin",
                                                 "morphology", "minutiae"};
  return names;
}

int run_inspect(const InspectOptions& opts, const PipelineConfig& cfg, std::ostream& out,
                std::ostream& err) {
  const auto& names = inspect_stages();
  const auto wanted = std::find(names.begin(), names.end(), opts.stage);
  if (wanted == names.end()) {
    err << "ridgekit: unknown stage '" << opts.stage << "'\n";
    return kFailure;
  }
  const auto last = static_cast<int>(wanted - names.begin());
  int stage = 0;
  auto dump = [&](const GrayImage& img) {
    char file[64];
    std::snprintf(file, sizeof file, "%02d_%s.pgm", stage + 1,
                  names[static_cast<std::size_t>(stage)].c_str());
    const auto path = opts.out / file;
    save_pgm(img, path);
    out << path.string() << "\n";
    return stage++ < last;
  };

  try {
    std::error_code ec;
    fs::create_directories(opts.out, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create " + opts.out.string());

    const auto prepared = prepare(load_grayscale(opts.image), cfg);
    const auto& analysis = prepared.orientation;
    if (!dump(prepared.enhanced)) return kSuccess;
    if (!dump(render_orientation(prepared.enhanced, analysis.smoothed))) return kSuccess;
    const auto* core = prepared.core ? &*prepared.core : nullptr;
    if (!dump(render_strength(analysis.strength, cfg.block_size, prepared.enhanced.width(),
                              prepared.enhanced.height(), core))) {
      return kSuccess;
    }
    const auto st = extract_ridges(prepared, cfg);
    if (!dump(st.roi.image)) return kSuccess;
    if (!dump(render_binary(st.binary))) return kSuccess;
    if (!dump(render_binary(st.thinned))) return kSuccess;
    if (!dump(render_binary(st.morphed))) return kSuccess;
    dump(render_minutiae(st.morphed, st.minutiae));

    std::ofstream csv(opts.out / "minutiae.csv", std::ios::trunc);
    csv << "x,y,kind,angle\n";
    for (const auto& m : st.minutiae.items) {
      char line[96];
      std::snprintf(line, sizeof line, "%d,%d,%s,%.6f\n", m.x, m.y,
                    m.kind == MinutiaKind::Termination ? "termination" : "bifurcation", m.angle);
      csv << line;
    }
    if (!csv) throw Error(ErrorCode::IoError, "cannot write minutiae.csv");
    out << (opts.out / "minutiae.csv").string() << "\n";
    return kSuccess;
  } catch (const std::exception& e) {
    report(err, opts.image.string(), e);
    return kFailure;
  }
}

}  // namespace ridgekit::cli

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "raster_io.hpp"
#include "ridgekit/imageio.hpp"
#include "ridgekit/template_io.hpp"
#include "synthetic.hpp"

namespace fs = std::filesystem;
using ridgekit::testing::TempDir;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new TempDir("cli");
    fs::create_directories(dataset());
    for (const auto& p : ridgekit::synth::fvc_like_corpus(3, 3, 515)) {
      ridgekit::testing::write_tiff_gray(
          p.image, dataset() / (std::to_string(p.finger) + "_" + std::to_string(p.impression) + ".tif"));
    }
    ridgekit::save_pgm(ridgekit::GrayImage(388, 374, 210), root() / "999_1.pgm");
  }
  static void TearDownTestSuite() {
    delete dir_;
    dir_ = nullptr;
  }

  static const fs::path& root() { return dir_->path(); }
  static fs::path dataset() { return root() / "dataset"; }
  static fs::path image(int finger, int impression) {
    return dataset() / (std::to_string(finger) + "_" + std::to_string(impression) + ".tif");
  }

  Result run(const std::string& args, const std::string& env = "") {
    const auto out = root() / "stdout.txt";
    const auto err = root() / "stderr.txt";
    const std::string cmd = (env.empty() ? "" : env + " ") + "'" RIDGEKIT_CLI_PATH "' " + args +
                            " >'" + out.string() + "' 2>'" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    Result r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  fs::path fresh(const std::string& name) {
    const auto p = root() / name;
    fs::remove_all(p);
    return p;
  }

 private:
  static TempDir* dir_;
};

TempDir* Cli::dir_ = nullptr;

}  // namespace

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("verify only-one-arg").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, EnrollWritesTemplatesAndIndex) {
  const auto db = fresh("db_enroll");
  const auto r = run("enroll '" + image(101, 1).string() + "' '" + image(101, 2).string() + "' '" +
                     image(101, 3).string() + "' --db '" + db.string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 3u);
  EXPECT_TRUE(fs::exists(db / "101_1.fptl"));
  EXPECT_TRUE(fs::exists(db / "101_3.fptl"));
  EXPECT_EQ(lines(slurp(db / "db.tsv")).size(), 4u);

  // Re-enrolling replaces the files and keeps one index row per id.
  const auto again = run("enroll '" + image(101, 2).string() + "' --db '" + db.string() + "'");
  EXPECT_EQ(again.code, 0);
  EXPECT_EQ(lines(slurp(db / "db.tsv")).size(), 4u);
}

TEST_F(Cli, EnrollIsolatesBadImages) {
  const auto db = fresh("db_blank");
  const auto r = run("enroll '" + (root() / "999_1.pgm").string() + "' '" +
                     image(102, 1).string() + "' --db '" + db.string() + "'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("NoCoreFound"), std::string::npos) << r.err;
  EXPECT_EQ(lines(slurp(db / "db.tsv")).size(), 2u);

  const auto all_bad = run("enroll '" + (root() / "999_1.pgm").string() + "' --db '" +
                           fresh("db_none").string() + "'");
  EXPECT_EQ(all_bad.code, 2);
}

TEST_F(Cli, EnrollWithExplicitIds) {
  const auto db = fresh("db_ids");
  const auto r = run("enroll '" + image(103, 2).string() + "' --finger 7 --impression 4 --db '" +
                     db.string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(ridgekit::load_template(db / "7_4.fptl").id, (ridgekit::TemplateId{7, 4}));
}

TEST_F(Cli, VerifyDecisionsAndExitCodes) {
  const auto db = fresh("db_verify");
  ASSERT_EQ(run("enroll '" + image(101, 1).string() + "' '" + image(102, 1).string() +
                "' --db '" + db.string() + "'")
                .code,
            0);
  const auto self = run("verify '" + image(101, 1).string() + "' '" + (db / "101_1.fptl").string() + "'");
  EXPECT_EQ(self.code, 0);
  EXPECT_EQ(self.out, "101_1\t101_1\t0.000000\tmatch\n");

  const auto other = run("verify '" + image(101, 2).string() + "' '" +
                         (db / "102_1.fptl").string() + "' --threshold 0");
  EXPECT_EQ(other.code, 1);
  EXPECT_NE(other.out.find("\tno-match"), std::string::npos);

  const auto mismatch = run("verify '" + image(101, 1).string() + "' '" +
                            (db / "101_1.fptl").string() + "' --descriptors 120");
  EXPECT_EQ(mismatch.code, 2);
  EXPECT_NE(mismatch.err.find("IncompatibleTemplates"), std::string::npos);
}

TEST_F(Cli, IdentifyFindsEnrolledProbe) {
  const auto db = fresh("db_identify");
  ASSERT_EQ(run("enroll '" + dataset().string() + "/101_1.tif' '" + dataset().string() +
                "/102_1.tif' '" + dataset().string() + "/103_1.tif' --db '" + db.string() + "'")
                .code,
            0);
  const auto hit = run("identify '" + image(102, 1).string() + "' --db '" + db.string() + "'");
  EXPECT_EQ(hit.code, 0);
  EXPECT_EQ(hit.out, "102_1\t102_1\t0.000000\tmatch\n");
  EXPECT_EQ(run("identify '" + image(102, 1).string() + "' --db '" + fresh("empty_db").string() + "'").code,
            2);
}

TEST_F(Cli, EvaluateGridIsDeterministic) {
  const auto out = fresh("eval");
  const std::string args = "evaluate '" + dataset().string() + "' --out '" + out.string() +
                           "' --grid-radius 90,100,150 --grid-descriptors 80,120";
  const auto r = run(args);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto report = slurp(out / "report.tsv");
  EXPECT_EQ(lines(report).size(), 7u);
  for (int radius : {90, 100, 150}) {
    for (int k : {80, 120}) {
      const auto curve = out / ("curve_R" + std::to_string(radius) + "_K" + std::to_string(k) + ".csv");
      EXPECT_EQ(lines(slurp(curve)).size(), 201u);
    }
  }
  ASSERT_EQ(run(args).code, 0);
  EXPECT_EQ(slurp(out / "report.tsv"), report);
}

TEST_F(Cli, EvaluateNeedsTwoFingers) {
  const auto one = fresh("one_finger");
  fs::create_directories(one);
  fs::copy_file(image(101, 1), one / "101_1.tif");
  fs::copy_file(image(101, 2), one / "101_2.tif");
  const auto r = run("evaluate '" + one.string() + "' --out '" + fresh("eval_one").string() + "'");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("InsufficientData"), std::string::npos) << r.err;
}

TEST_F(Cli, InspectWritesStages) {
  const auto out = fresh("inspect");
  const auto r = run("inspect '" + image(101, 1).string() + "' --out '" + out.string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  int pgm = 0;
  for (const auto& e : fs::directory_iterator(out)) pgm += e.path().extension() == ".pgm";
  EXPECT_EQ(pgm, 8);
  const auto csv = lines(slurp(out / "minutiae.csv"));
  ASSERT_GE(csv.size(), 2u);
  EXPECT_EQ(csv[0], "x,y,kind,angle");

  const auto partial = fresh("inspect_thin");
  ASSERT_EQ(run("inspect '" + image(101, 1).string() + "' --out '" + partial.string() + "' --stage thin").code, 0);
  EXPECT_TRUE(fs::exists(partial / "06_thin.pgm"));
  EXPECT_FALSE(fs::exists(partial / "07_morphology.pgm"));
  EXPECT_FALSE(fs::exists(partial / "minutiae.csv"));
}

TEST_F(Cli, InspectBlankStopsAfterStrengthMap) {
  const auto out = fresh("inspect_blank");
  const auto r = run("inspect '" + (root() / "999_1.pgm").string() + "' --out '" + out.string() + "'");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("NoCoreFound"), std::string::npos);
  EXPECT_TRUE(fs::exists(out / "03_strength.pgm"));
  EXPECT_FALSE(fs::exists(out / "04_roi.pgm"));
}

TEST_F(Cli, ConfigPrecedence) {
  const auto env_cfg = root() / "env.conf";
  const auto file_cfg = root() / "file.conf";
  std::ofstream(env_cfg) << "radius = 90\ndescriptor_count = 120\n";
  std::ofstream(file_cfg) << "radius = 150\n";
  const auto db = fresh("db_cfg");
  const std::string img = "'" + image(103, 1).string() + "'";

  ASSERT_EQ(run("enroll " + img + " --finger 1 --impression 1 --db '" + db.string() + "'",
                "RIDGEKIT_CONFIG='" + env_cfg.string() + "'")
                .code,
            0);
  auto t = ridgekit::load_template(db / "1_1.fptl");
  EXPECT_EQ(t.radius, 90);
  EXPECT_EQ(t.descriptor_count(), 120);

  ASSERT_EQ(run("enroll " + img + " --finger 1 --impression 2 --config '" + file_cfg.string() +
                    "' --db '" + db.string() + "'",
                "RIDGEKIT_CONFIG='" + env_cfg.string() + "'")
                .code,
            0);
  t = ridgekit::load_template(db / "1_2.fptl");
  EXPECT_EQ(t.radius, 150);
  EXPECT_EQ(t.descriptor_count(), 80);

  ASSERT_EQ(run("enroll " + img + " --finger 1 --impression 3 --radius 100 --config '" +
                    file_cfg.string() + "' --db '" + db.string() + "'")
                .code,
            0);
  EXPECT_EQ(ridgekit::load_template(db / "1_3.fptl").radius, 100);

  std::ofstream(root() / "bad.conf") << "radius = -5\n";
  EXPECT_EQ(run("inspect " + img + " --out x --config '" + (root() / "bad.conf").string() + "'").code, 2);
}

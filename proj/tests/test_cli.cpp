#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using basilica::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("basilica-cli-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "-" +
            std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string str() const { return path.string(); }
};

Result call(std::vector<std::string> args, const TempDir& dir) {
  args.insert(args.begin(), {"--out", dir.str()});
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("word trivial") {
    TempDir dir;
    const Result r = call({"word", "trivial", "[[a,b],b]"}, dir);
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["trivial"] == true);
    CHECK(fs::exists(dir.path / "word_trivial.json"));
    CHECK(fs::exists(dir.path / "word_trivial.meta.json"));
  }

  TEST_CASE("word decompose output shape") {
    TempDir dir;
    const Result r = call({"word", "decompose", "a"}, dir);
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["word"] == "a");
    CHECK(j["trivial"] == false);
    CHECK(j["sections"]["x"] == "b");
    CHECK(j["sections"]["y"] == "1");
    CHECK(j["swap"] == true);
  }

  TEST_CASE("spectrum eigen at level 1") {
    TempDir dir;
    const Result r = call({"spectrum", "eigen", "--level", "1", "--format", "csv"}, dir);
    CHECK(r.code == 0);
    CHECK(r.out == "value,multiplicity\n0.000000000000,1\n1.000000000000,1\n");
    CHECK(slurp(dir.path / "eigenvalues_n1.csv") == r.out);
  }

  TEST_CASE("usage errors exit with 2") {
    TempDir dir;
    CHECK(call({"nonsense"}, dir).code == 2);
    CHECK(call({"word"}, dir).code == 2);
    CHECK(call({"word", "trivial"}, dir).code == 2);
    CHECK(call({"spectrum", "eigen", "--level", "x"}, dir).code == 2);
    CHECK(call({"--format", "xml", "word", "trivial", "a"}, dir).code == 2);
  }

  TEST_CASE("module errors exit with 1 and a diagnostic") {
    TempDir dir;
    const Result r = call({"word", "trivial", "a^"}, dir);
    CHECK(r.code == 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["error"]["kind"] == "input");
    CHECK(j["error"]["command"] == "word_trivial");
    const Result cap = call({"spectrum", "eigen", "--level", "11"}, dir);
    CHECK(cap.code == 1);
    CHECK(nlohmann::json::parse(cap.out)["error"]["kind"] == "resource");
    CHECK(call({"hausdorff", "--a", "/nonexistent", "--b", "/nonexistent"}, dir).code == 1);
  }

  TEST_CASE("help prints defaults") {
    std::ostringstream out, err;
    CHECK(run({"--help"}, out, err) == 0);
    CHECK(out.str().find("\"julia_points\": 100000") != std::string::npos);
    CHECK(out.str().find("42") != std::string::npos);
  }

  TEST_CASE("artifacts are byte-identical across runs") {
    TempDir d1, d2;
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"julia", "sample", "--count", "500"},
             {"verify", "torsion", "--samples", "20"},
             {"schreier", "build", "--level", "4", "--method", "recursive"},
             {"spectrum", "measure", "--level", "5", "--bins", "16"}}) {
      const Result r1 = call(args, d1), r2 = call(args, d2);
      CHECK(r1.code == 0);
      CHECK(r1.out == r2.out);
    }
    for (const auto& entry : fs::directory_iterator(d1.path)) {
      const std::string name = entry.path().filename().string();
      if (name.find(".meta.") != std::string::npos) continue;
      CHECK_MESSAGE(slurp(entry.path()) == slurp(d2.path / name), name);
    }
  }

  TEST_CASE("seed changes the sample") {
    TempDir d1, d2;
    call({"--seed", "1", "julia", "sample", "--count", "100"}, d1);
    call({"--seed", "2", "julia", "sample", "--count", "100"}, d2);
    CHECK(slurp(d1.path / "julia_sample.csv") != slurp(d2.path / "julia_sample.csv"));
  }

  TEST_CASE("config file") {
    TempDir dir;
    const fs::path cfg = dir.path / "cfg.json";
    std::ofstream(cfg) << R"({"level_caps": {"spectrum": 2}})";
    const Result r = call({"--config", cfg.string(), "spectrum", "eigen", "--level", "3"}, dir);
    CHECK(r.code == 1);
    std::ofstream(cfg) << R"({"bogus": 1})";
    CHECK(call({"--config", cfg.string(), "word", "trivial", "a"}, dir).code == 1);
  }

  TEST_CASE("schreier, monodromy, embed and hausdorff") {
    TempDir dir;
    const Result dot = call({"schreier", "build", "--level", "3", "--format", "dot"}, dir);
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("digraph schreier_3", 0) == 0);
    CHECK(call({"schreier", "check", "--level", "6"}, dir).code == 0);
    CHECK(call({"monodromy", "check", "--level", "3"}, dir).code == 0);
    const std::string cloud = (dir.path / "v.csv").string();
    CHECK(call({"embed", "--level", "4", "--out", cloud}, dir).code == 0);
    CHECK(slurp(cloud).rfind("re,im,address\n", 0) == 0);
    CHECK(fs::exists(dir.path / "embedding_n4.json"));
    const Result h = call({"hausdorff", "--a", cloud, "--b", cloud}, dir);
    CHECK(h.code == 0);
    CHECK(nlohmann::json::parse(h.out)["distance"] == 0.0);
  }

  TEST_CASE("verification subcommands") {
    TempDir dir;
    CHECK(call({"verify", "identities"}, dir).code == 0);
    CHECK(call({"verify", "relators", "--max-exponent", "2"}, dir).code == 0);
    CHECK(call({"verify", "monoid", "--length", "6"}, dir).code == 0);
    CHECK(call({"verify", "transitivity", "--level", "6"}, dir).code == 0);
    CHECK(call({"verify", "witness"}, dir).code == 0);
    const Result rel = call({"relation", "find", "a", "b"}, dir);
    CHECK(rel.code == 0);
    CHECK(nlohmann::json::parse(rel.out)["verified"] == true);
    CHECK(call({"spectrum", "compare", "--level", "4"}, dir).code == 0);
    CHECK(call({"spectrum", "qroots", "--level", "3", "--grid", "10000"}, dir).code == 0);
    CHECK(call({"spectrum", "gaps", "--first", "2", "--last", "5"}, dir).code == 0);
  }

  TEST_CASE("verify all runs selected criteria") {
    TempDir dir;
    const Result r = call({"verify", "all", "--fast", "--criterion", "1", "--criterion", "5"}, dir);
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["criteria"].size() == 2);
    CHECK(r.err.find("[PASS]  1") != std::string::npos);
  }
}

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sqs/constructs.hpp"
#include "sqs/design_io.hpp"
#include "sqs/groups.hpp"
#include "sqs/perm_io.hpp"
#include "sqs_cli.hpp"

using namespace sqs;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::path(SQS_SCRATCH_DIR) / "cli";
  fs::create_directories(dir);
  return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
  auto p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("construct and verify") {
    auto r = run({"construct", "boolean:3"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out == format_design(boolean_sqs(3)));
    auto path = write("b3.json", r.out);
    auto v = run({"verify", path});
    CHECK(v.code == cli::kSuccess);
    CHECK(v.out == "true\n");
  }

  TEST_CASE("verify reports a witness") {
    auto blocks = boolean_sqs(3).blocks();
    blocks.pop_back();
    auto path = write("broken.json", format_design(Design(8, 4, blocks)));
    auto v = run({"verify", path});
    CHECK(v.code == cli::kFalse);
    CHECK(v.out.rfind("false witness=", 0) == 0);
    CHECK(v.out.find("covered=0") != std::string::npos);
  }

  TEST_CASE("bad input exits with usage code") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"construct", "boolean:9"}).code == cli::kUsage);
    auto bad = run({"verify", write("bad.json", "{\"v\": 5, \"k\": 2, \"blocks\": [[1,0]]}\n")});
    CHECK(bad.code == cli::kUsage);
    CHECK(bad.err.find("canonical") != std::string::npos);
    CHECK(run({"verify", "/nonexistent.json"}).code == cli::kUsage);
    CHECK(run({"screen", "--max-d", "40"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kSuccess);
  }

  TEST_CASE("derive") {
    auto path = write("n19.json", format_design(netto_sqs(19)));
    auto r = run({"derive", path, "--point", "0"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out == format_design(netto_triples(19)));
    CHECK(run({"derive", path, "--point", "20"}).code == cli::kUsage);
  }

  TEST_CASE("flagtrans") {
    auto path = write("b5.json", format_design(boolean_sqs(5)));
    CHECK(run({"flagtrans", path, "--group", "AGammaL(1,32)"}).out == "true\n");
    auto no = run({"flagtrans", path, "--group", "AGL(1,32)"});
    CHECK(no.code == cli::kFalse);
    CHECK(no.out == "false\n");
    auto p7 = write("b3.json", format_design(boolean_sqs(3)));
    auto foreign = run({"flagtrans", p7, "--group", "PSL(2,7)"});
    CHECK(foreign.code == cli::kFalse);
    CHECK(foreign.out == "false (not an automorphism group)\n");
    auto gens = write("agl32.gens", format_generators(agl(3, 2).generators()));
    CHECK(run({"flagtrans", p7, "--generators", gens}).out == "true\n");
    CHECK(run({"flagtrans", p7}).code == cli::kUsage);
    CHECK(run({"flagtrans", p7, "--group", "PSL(2,9)"}).code == cli::kUsage);
  }

  TEST_CASE("iso") {
    auto a = write("n7.json", format_design(netto_sqs(7)));
    auto b = write("b3.json", format_design(boolean_sqs(3)));
    auto c = write("pgl2.json", format_design(pgl_sqs(2)));
    auto r = run({"iso", a, b});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.rfind("isomorphic\n", 0) == 0);
    CHECK(run({"iso", b, c}).out == "not isomorphic\n");
  }

  TEST_CASE("search") {
    auto dir = scratch("search_agl32");
    fs::remove_all(dir);
    auto r = run({"search", "--group", "AGL(3,2)", "--out-dir", dir.string()});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.find("found=1") != std::string::npos);
    CHECK(read_design_file(dir / "design_0.json") == boolean_sqs(3));
    auto none = run({"search", "--group", "PSL(2,13)"});
    CHECK(none.code == cli::kFalse);
    CHECK(none.out == "found=0\n");
  }

  TEST_CASE("screen") {
    auto r = run({"screen", "--max-d", "6", "--max-q", "16"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.rfind("screen max_d=6 max_q=16", 0) == 0);
    auto j = run({"screen", "--max-d", "6", "--max-q", "16", "--json"});
    CHECK(j.out.front() == '{');
  }
}

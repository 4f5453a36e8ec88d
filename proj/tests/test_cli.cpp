#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "irrtri/generators.hpp"
#include "irrtri/io.hpp"
#include "support.hpp"

using namespace irrtri;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const std::string kTetra = "tri 4 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n";

}  // namespace

TEST_CASE("classify") {
  auto r = call({"classify", "-"}, kTetra);
  CHECK(r.code == 0);
  CHECK(r.out == "orientable 0 0 2\n");
  auto rp2 = call({"classify", "-"}, write_tri(canonical_surface(SurfaceName::projective_min)));
  CHECK(rp2.out == "nonorientable 1 0 1\n");
}

TEST_CASE("generate piped into classify") {
  auto gen = call({"generate", "figure1", "--g", "4", "--b", "3"});
  CHECK(gen.code == 0);
  CHECK(gen.err.find("diagonal-seed 0") != std::string::npos);
  auto r = call({"classify", "-"}, gen.out);
  CHECK(r.code == 0);
  CHECK(r.out == "orientable 4 3 -5\n");
}

TEST_CASE("every figure1 pair passes the audit") {
  for (auto [g, b] : testing::figure1_cases()) {
    CAPTURE(g);
    CAPTURE(b);
    auto gen = call({"generate", "figure1", "--g", std::to_string(g), "--b", std::to_string(b)});
    REQUIRE(gen.code == 0);
    auto r = call({"audit", "-"}, gen.out);
    CHECK(r.code == 0);
    CHECK(r.out.find("\"verdict\": \"pass\"") != std::string::npos);
  }
}

TEST_CASE("audit rejects reducible input") {
  auto r = call({"audit", "-"}, write_tri(octahedron()));
  CHECK(r.code == 1);
  CHECK(r.err.find("not-irreducible") != std::string::npos);
}

TEST_CASE("audit with 4-connectivity checks") {
  auto r = call({"audit", "-", "--conn-samples", "100", "--seed", "4"},
                write_tri(canonical_surface(SurfaceName::torus_k7)));
  CHECK(r.code == 0);
  CHECK(r.err.find("seed 4") != std::string::npos);
  CHECK(r.err.find("\"four_connected\": true") != std::string::npos);
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"classify", "-", "--bogus"}, kTetra).code == 2);
  CHECK(call({"reduce", "-", "--policy", "sideways"}, kTetra).code == 2);
  auto bad = call({"classify", "-"}, "tri 4 1\n0 1 9\n");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(call({"classify", "/nonexistent/file.tri"}).code == 2);
  CHECK(call({"generate", "figure1", "--g", "3", "--b", "1"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("validate") {
  CHECK(call({"validate", "-"}, kTetra).out == "valid\n");
  auto r = call({"validate", "-"}, "tri 5 2\n0 1 2\n2 3 4\n");
  CHECK(r.code == 1);
  CHECK(call({"classify", "-"}, "tri 5 2\n0 1 2\n2 3 4\n").code == 1);
}

TEST_CASE("edges, contractible and canon") {
  auto e = call({"edges", "-"}, "tri 3 1\n0 1 2\n");
  CHECK(e.out == "0 1 boundary\n0 2 boundary\n1 2 boundary\n");
  auto strip = call({"edges", "-"}, "tri 4 2\n0 1 2\n1 2 3\n");
  CHECK(strip.out.find("1 2 interior linking\n") != std::string::npos);
  CHECK(call({"contractible", "-"}, kTetra).out.empty());
  CHECK(call({"contractible", "-"}, write_tri(octahedron())).out.size() > 0);
  CHECK(call({"canon", "-"}, kTetra).out == canonical_form(testing::tetrahedron()) + "\n");
}

TEST_CASE("reduce") {
  auto input = write_tri(refine(testing::tetrahedron(), 30, 2));
  auto r = call({"reduce", "-"}, input);
  CHECK(r.code == 0);
  CHECK(r.out == kTetra);
  CHECK(r.err.find("seed 0") != std::string::npos);
  CHECK(r.err.find("contractions 30") != std::string::npos);
  auto again = call({"reduce", "-", "--policy", "first"}, input);
  CHECK(again.out == r.out);
  CHECK(again.err == r.err);
  auto random = call({"reduce", "-", "--policy", "random", "--seed", "9"}, input);
  CHECK(random.out == kTetra);
  CHECK(random.err.find("seed 9") != std::string::npos);
}

TEST_CASE("enumerate") {
  auto r = call({"enumerate", "--surface", "projective", "--max-vertices", "8", "--irreducible"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
  CHECK(r.err.find("complete true") != std::string::npos);
  auto jobs = call({"enumerate", "--surface", "projective", "--max-vertices", "8", "--irreducible", "--jobs", "3"});
  CHECK(jobs.out == r.out);
  CHECK(call({"enumerate", "--surface", "teacup"}).code == 2);
  CHECK(call({"enumerate"}).code == 2);
}

#include <doctest.h>

#include <cstdlib>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "norbit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = norbit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + needle.size())) ++n;
  return n;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("infchar json") {
    const auto r = run({"infchar", "B", "2", "3,1,1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["lambda"] == json({"1/2", "1/2"}));
    CHECK(j["rule"] == "even-dual");
    CHECK(j["orbit"]["partition"] == json({3, 1, 1}));
  }

  TEST_CASE("infchar explain and pairing mode") {
    const auto r = run({"infchar", "C", "3", "2,2,2", "--explain", "--pairing-mode", "literal", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["pairing_mode"] == "literal");
    CHECK(j["trace"]["columns"] == json({3, 3}));
    const auto text = run({"infchar", "D", "4", "3,3,1,1", "--explain"});
    CHECK(text.out.find("padded") != std::string::npos);
  }

  TEST_CASE("orbit-list and hasse") {
    const auto list = run({"orbit-list", "C", "2", "--format", "json"});
    REQUIRE(list.code == 0);
    CHECK(json::parse(list.out)["count"] == 4);
    const auto dot = run({"hasse", "B", "2", "--format", "dot"});
    REQUIRE(dot.code == 0);
    CHECK(dot.out.rfind("digraph B2 {", 0) == 0);
    CHECK(count(dot.out, " -> ") == 3);
    CHECK(count(dot.out, ";\n") == 1 + 4 + 3);
    CHECK(run({"hasse", "B", "2", "--format", "json"}).code == 0);
    CHECK(run({"orbit-list", "B", "2", "--format", "dot"}).code == 1);
  }

  TEST_CASE("validate") {
    CHECK(run({"validate", "B", "2", "3,1,1"}).code == 0);
    const auto bad = run({"validate", "C", "2", "3,1", "--format", "json"});
    CHECK(bad.code == 1);
    CHECK(json::parse(bad.out)["valid"] == false);
    CHECK(run({"validate", "D", "4", "4,4"}).code == 1);
    CHECK(run({"validate", "D", "4", "4,4", "--label", "II"}).code == 0);
  }

  TEST_CASE("orbit-info") {
    const auto r = run({"orbit-info", "B", "2", "2,2,1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["special"] == false);
    CHECK(j["cuspidal"] == true);
    CHECK(j["h"] == json({1, 1}));
    CHECK(j["infchar"]["lambda"] == json({"1", "1/2"}));
  }

  TEST_CASE("induce, complete, bvdual") {
    const auto ind = run({"induce", "B", "2", "--blocks", "2", "--format", "json"});
    REQUIRE(ind.code == 0);
    CHECK(json::parse(ind.out)["induced"]["partition"] == json({3, 1, 1}));
    const auto a = run({"induce", "A", "2", "--gl-orbit", "1,1", "--gl-orbit", "1", "--format", "json"});
    CHECK(json::parse(a.out)["induced"]["partition"] == json({2, 1}));
    CHECK(run({"induce", "B", "2", "--blocks", "3"}).code == 1);
    const auto comp = run({"complete", "D", "3", "1^6", "--format", "json"});
    REQUIRE(comp.code == 0);
    CHECK(json::parse(comp.out)["blocks"] == json({4, 2}));
    const auto dual = run({"bvdual", "B", "2", "3,1,1", "--format", "json"});
    CHECK(json::parse(dual.out)["dual"]["partition"] == json({2, 2}));
  }

  TEST_CASE("branch prints pairs as json") {
    const auto r = run({"branch", "C", "2", "--weight", "1,0", "--blocks", "2"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    REQUIRE(j["branching"].size() == 2);
    CHECK(j["branching"][1]["weight"] == json({"0", "-1"}));
    const auto t = run({"branch", "A", "2", "--weight", "1,0,-1", "--blocks", "2,1", "--trivial"});
    CHECK(json::parse(t.out)["trivial_multiplicity"] == 1);
  }

  TEST_CASE("verify exit codes") {
    CHECK(run({"verify", "collapse", "C", "8"}).code == 0);
    CHECK(run({"verify", "duality", "D", "4", "--format", "text"}).code == 0);
    CHECK(run({"verify", "stage", "B", "3"}).code == 0);
    CHECK(run({"verify", "consistency", "C", "3"}).code == 0);
    CHECK(run({"verify", "hilbert", "A", "1", "2", "--expect", "1,3,5,7"}).code == 0);
    CHECK(run({"verify", "hilbert", "A", "1", "2", "--max-degree", "2", "--expect", "1,3,4"}).code == 2);
    CHECK(run({"verify", "richardson", "A", "2", "2,1", "--degree", "2"}).code == 0);
    CHECK(run({"verify", "prop55", "--all-type-a", "3", "--format", "text"}).code == 0);
    CHECK(run({"verify", "prop55", "B", "2", "--blocks", "1"}).code == 0);
  }

  TEST_CASE("seed precedence") {
    const auto seed_of = [](const Result& r) { return json::parse(r.out)["parameters"]["seed"].get<std::uint64_t>(); };
    setenv("NORBIT_SEED", "41", 1);
    CHECK(seed_of(run({"verify", "hilbert", "A", "1", "2", "--max-degree", "1"})) == 41);
    CHECK(seed_of(run({"verify", "hilbert", "A", "1", "2", "--max-degree", "1", "--seed", "5"})) == 5);
    setenv("NORBIT_SEED", "junk", 1);
    CHECK(run({"verify", "hilbert", "A", "1", "2", "--max-degree", "1"}).code == 1);
    unsetenv("NORBIT_SEED");
    CHECK(seed_of(run({"verify", "hilbert", "A", "1", "2", "--max-degree", "1"})) == 20240611);
    CHECK(run({"infchar", "B", "2", "3,1,1", "--seed", "5"}).code == 1);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == 1);
    const auto unknown = run({"frobnicate"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("Usage") != std::string::npos);
    CHECK(run({"infchar", "E", "2", "3,1,1"}).code == 1);
    CHECK(run({"infchar", "B", "2", "3,x"}).code == 1);
    CHECK(run({"infchar", "B", "2"}).code == 1);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"verify", "hilbert", "B", "2", "3,1,1", "--max-degree", "2"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> info{"orbit-info", "D", "4", "4,4", "--label", "I", "--format", "json"};
    CHECK(run(info).out == run(info).out);
  }
}

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "partalg/cli.hpp"
#include "partalg/json_io.hpp"

using namespace partalg;

namespace {

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::filesystem::path temp_file(std::string const& name) {
    return std::filesystem::temp_directory_path()
           / ("partalg_cli_test_" + name + ".json");
  }

  Json read_json(std::filesystem::path const& path) {
    std::ifstream in(path);
    return Json::parse(in);
  }

  std::string read_text(std::filesystem::path const& path) {
    std::ifstream      in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  AlgebraElement expand(std::string const& family, std::string const& index,
                        std::string const& rank) {
    auto const path = temp_file("expand");
    Run const  r    = run({"expand", family, index, "--rank", rank, "--json",
                           path.string()});
    REQUIRE(r.code == kExitPass);
    return element_from_json(read_json(path));
  }

}  // namespace

TEST_CASE("compose prints the diagram and the removed count") {
  Run const s1 = run({"compose", "1 1' | 2 2'", "1 2'| 2 1'"});
  CHECK(s1.code == kExitPass);
  CHECK(s1.out == "1 2' | 2 1'\nremoved blocks: 0\n");

  Run const p1 = run({"compose", "1 | 1'", "1 | 1'"});
  CHECK(p1.code == kExitPass);
  CHECK(p1.out == "1 | 1'\nremoved blocks: 1\n");

  Run const json = run({"compose", "[[1,-2],[2,-1]]", "[[1,-2],[2,-1]]"});
  CHECK(json.code == kExitPass);
  CHECK(json.out == "1 1' | 2 2'\nremoved blocks: 0\n");
}

TEST_CASE("compose rejects bad input with exit 2") {
  CHECK(run({"compose", "1 1 | 1'", "1 | 1'"}).code == kExitUsage);
  CHECK(run({"compose", "1 | 1'", "1 1' | 2 2'"}).code == kExitUsage);
  CHECK(run({"compose", "1 | 1'"}).code == kExitUsage);
  Run const r = run({"compose", "garbage", "1 | 1'"});
  CHECK(r.code == kExitUsage);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("expand L 2 at rank 3 has five unit terms") {
  AlgebraElement const L2 = expand("L", "2", "3");
  REQUIRE(L2.size() == 5);
  int plus = 0, minus = 0;
  for (auto const& [d, c] : L2.terms()) {
    plus += c == IntPolynomial(1);
    minus += c == IntPolynomial(-1);
  }
  CHECK(plus == 3);
  CHECK(minus == 2);
}

TEST_CASE("expand sigma 1 is the identity") {
  CHECK(expand("sigma", "1", "2") == AlgebraElement::identity(2));
}

TEST_CASE("expand central 3/2 is the sum of the L expansions") {
  AlgebraElement const sum = expand("L", "1/2", "2") + expand("L", "1", "2")
                             + expand("L", "3/2", "2");
  CHECK(expand("central", "3/2", "2") == sum);
}

TEST_CASE("expand errors exit 2") {
  CHECK(run({"expand", "L", "4", "--rank", "3"}).code == kExitUsage);
  CHECK(run({"expand", "L", "4/3"}).code == kExitUsage);
  CHECK(run({"expand", "M", "2"}).code == kExitUsage);
  CHECK(run({"expand", "sigma", "0"}).code == kExitUsage);
  CHECK(run({"expand", "L", "2", "--rank", "99"}).code == kExitUsage);
}

TEST_CASE("verify all suites at rank 3") {
  Run const r = run({"verify", "--all", "--rank", "3"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify writes a deterministic JSON report") {
  auto const first  = temp_file("first");
  auto const second = temp_file("second");
  CHECK(run({"verify", "thm_ab", "--rank", "4", "--json", first.string()}).code
        == kExitPass);
  CHECK(run({"verify", "thm_ab", "--rank", "4", "--jobs", "2", "--json",
             second.string()})
            .code
        == kExitPass);
  Json const j = read_json(first);
  CHECK(j["suite"] == "thm_ab");
  CHECK(j["rank"] == 4);
  CHECK(j["vacuous"] == false);
  CHECK_FALSE(j["checks"].empty());
  CHECK(read_text(first) == read_text(second));
}

TEST_CASE("verify several suites writes an array") {
  auto const path = temp_file("many");
  CHECK(run({"verify", "r_2", "c_e", "--rank", "2", "--json", path.string()})
            .code
        == kExitPass);
  Json const j = read_json(path);
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
}

TEST_CASE("verify a tensor suite at one grid point") {
  Run const r = run({"verify", "tensor:hr_equality", "--n", "4", "--r", "2"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("n=4") != std::string::npos);
}

TEST_CASE("verify usage errors exit 2") {
  CHECK(run({"verify", "nope"}).code == kExitUsage);
  CHECK(run({"verify", "tensor:nope"}).code == kExitUsage);
  CHECK(run({"verify"}).code == kExitUsage);
  CHECK(run({"verify", "tensor:commutant", "--n", "3"}).code == kExitUsage);
  CHECK(run({"verify", "tensor:commutant", "--n", "2", "--r", "13"}).code
        == kExitUsage);
  CHECK(run({"verify", "r_2", "--jobs", "0"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
}

TEST_CASE("dims matches the restricted growth string oracle") {
  auto const path = temp_file("dims");
  Run const  r    = run({"dims", "--rank", "4", "--json", path.string()});
  CHECK(r.code == kExitPass);
  Json const j = read_json(path);
  REQUIRE(j["counts"].size() == 4);
  for (int k = 1; k <= 4; ++k) {
    CHECK(j["counts"][k - 1]["k"] == k);
    CHECK(j["counts"][k - 1]["diagrams"].get<std::uint64_t>()
          == oracle::count_rgs(2 * k));
  }
}

TEST_CASE("help exits 0") {
  Run const r = run({"--help"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("verify") != std::string::npos);
}

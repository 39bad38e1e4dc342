#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "support.hpp"
#include "vcwl/cache.hpp"
#include "vcwl/cli.hpp"
#include "vcwl/error.hpp"
#include "vcwl/io.hpp"

using namespace vcwl;
using vcwl::testing::Gen;
using vcwl::testing::P;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("vcwl-test-" + name + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

std::size_t error_position(const std::string& text, std::shared_ptr<const VeronesePresentation> pres) {
  try {
    parse_ideal(text, pres);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

std::string error_message(const std::string& text, std::shared_ptr<const VeronesePresentation> pres) {
  try {
    parse_ideal(text, pres);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(JobSpec spec) {
  std::ostringstream out, err;
  int code = run_command(spec, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse ideals") {
  auto pres = build_presentation(2, 2);
  auto a = parse_ideal("t1, t2", pres);
  CHECK(a.generators.size() == 2);
  auto b = parse_ideal("x1^2*x2^2", pres);
  REQUIRE(b.generators.size() == 1);
  CHECK(b.generators[0] == P("t1*t3", pres->S()));
  CHECK(parse_ideal("t2^2", pres).generators[0] == P("t1*t3", pres->S()));
  CHECK(parse_ideal("  ", pres).is_zero());
  CHECK(parse_ideal("0", pres).is_zero());
}

TEST_CASE("parse errors carry positions") {
  auto pres = build_presentation(2, 2);
  CHECK(error_position("x1^3", pres) == 0);
  CHECK(error_message("x1^3", pres).find("divisible") != std::string::npos);
  CHECK(error_position("t1, x1^2", pres) == 4);
  CHECK(error_message("t1, x1^2", pres).find("mixed") != std::string::npos);
  CHECK(error_position("t1, t2 + t1^2", pres) == 4);
  CHECK(error_message("t1, t2 + t1^2", pres).find("homogeneous") != std::string::npos);
  CHECK(error_position("t1,,t2", pres) == 3);
  CHECK(error_position("t1, t7", pres) == 4);
  CHECK(error_position("t1, t2 $", pres) == 7);
}

TEST_CASE("format and parse round trip") {
  Gen gen(41);
  for (int trial = 0; trial < 20; ++trial) {
    auto pres = build_presentation(trial % 2 ? 3 : 2, 2);
    std::vector<Polynomial> gens;
    for (int k = gen.integer(1, 3); k > 0; --k) gens.push_back(gen.homogeneous(pres->S(), gen.integer(1, 3), gen.integer(1, 2)));
    auto ideal = veronese_ideal(pres, gens);
    auto back = parse_ideal(format_ideal(ideal), pres);
    CHECK(back.generators == ideal.generators);
  }
}

TEST_CASE("Betti records round trip") {
  auto pres = build_presentation(2, 2);
  auto res = minimal_resolution(residue_field(pres), 3);
  auto json = to_json(res.betti);
  CHECK(betti_from_json(json) == res.betti);
  CHECK(betti_from_json(Json::parse(json.dump())) == res.betti);
  auto text = format_betti(res.betti);
  CHECK(text.find("total: 1 3 4 4") != std::string::npos);
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cache round trip and invalidation") {
  auto dir = fresh_dir("cache");
  Cache cache(dir);
  auto pres = build_presentation(2, 2);
  auto g = gin(expand(veronese_ideal(pres, {P("t1", pres->S()), P("t3", pres->S())})), TermOrder::degrevlex(2), 2, 5);
  Json payload = to_json(g.certificate, pres->R());
  Json inputs{{"what", "gin"}, {"seed", 5}};
  auto key = cache.key(inputs);
  CHECK_FALSE(cache.load(key).has_value());
  cache.store(key, payload);
  REQUIRE(cache.load(key).has_value());
  CHECK(*cache.load(key) == payload);

  Json other{{"what", "gin"}, {"seed", 6}};
  CHECK(cache.key(other) != key);
  CHECK_FALSE(cache.load(cache.key(other)).has_value());

  Cache bumped(dir, "vcwl-next");
  CHECK(bumped.key(inputs) != key);
  CHECK_FALSE(bumped.load(bumped.key(inputs)).has_value());
  // same key under a different version tag is still a miss
  CHECK_FALSE(bumped.load(key).has_value());

  {
    std::ofstream corrupt(dir / (key + ".json"), std::ios::trunc);
    corrupt << "{\"version\": ";
  }
  CHECK_FALSE(cache.load(key).has_value());
  cache.store(key, payload);
  CHECK(*cache.load(key) == payload);
  std::filesystem::remove_all(dir);
}

TEST_CASE("commands are deterministic and cache-transparent") {
  auto dir = fresh_dir("cli");
  for (const auto& command : commands()) {
    JobSpec spec;
    spec.command = command;
    spec.n = 2;
    spec.c = 2;
    spec.ideal_text = "t1^2, t2*t3";
    spec.seed = 3;
    spec.cache_dir = dir.string();
    for (auto format : {OutputFormat::Table, OutputFormat::Records}) {
      spec.format = format;
      spec.use_cache = false;
      auto plain = run(spec);
      spec.use_cache = true;
      auto first = run(spec);
      auto second = run(spec);
      CAPTURE(command);
      CHECK(plain.code != 1);
      CHECK(plain.out == first.out);
      CHECK(first.out == second.out);
      CHECK(first.code == second.code);
      if (format == OutputFormat::Records) {
        auto rec = Json::parse(plain.out);
        CHECK(rec["record"] == command);
        CHECK(rec["engine"] == kEngineVersion);
      }
    }
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("command examples and exit codes") {
  JobSpec spec;
  spec.n = 2;
  spec.c = 2;
  spec.use_cache = false;
  spec.command = "present";
  auto p = run(spec);
  CHECK(p.code == 0);
  CHECK(p.out.find("d = 3") != std::string::npos);
  CHECK(p.out.find("t2^2 - t1*t3") != std::string::npos);

  spec.command = "cwl-check";
  spec.imax = 3;
  spec.seed = 7;
  spec.format = OutputFormat::Records;
  spec.ideal_text = "t1, t2";
  auto pos = run(spec);
  CHECK(pos.code == 0);
  CHECK(Json::parse(pos.out)["verdict"] == "componentwise-linear");
  spec.ideal_text = "t1^2, t3^2";
  auto neg = Json::parse(run(spec).out);
  CHECK(neg["verdict"] == "not-componentwise-linear");
  CHECK(neg["direct"]["witness"]["i"] == 1);
  CHECK(neg["direct"]["witness"]["j"] == 4);

  spec.command = "betti";
  spec.ideal_text = "t1";
  spec.jmax = 1;
  spec.imax = 2;
  CHECK(run(spec).code == 2);  // window too small to certify column 2

  spec.ideal_text = "x1^3";
  auto bad = run(spec);
  CHECK(bad.code == 1);
  CHECK(bad.err.find("divisible") != std::string::npos);

  spec.command = "nonsense";
  CHECK(run(spec).code == 1);
  spec.command = "betti";
  spec.ideal_text.reset();
  CHECK(run(spec).code == 1);
}

TEST_CASE("ideal files") {
  auto dir = fresh_dir("file");
  std::filesystem::create_directories(dir);
  auto path = dir / "ideal.txt";
  {
    std::ofstream f(path);
    f << "t1,\nt3\n";
  }
  JobSpec spec;
  spec.command = "hilbert";
  spec.ideal_file = path.string();
  spec.use_cache = false;
  spec.format = OutputFormat::Records;
  auto r = run(spec);
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["hilbert"]["values"] == Json::array({1, 1, 0, 0, 0, 0, 0}));
  std::filesystem::remove_all(dir);
}

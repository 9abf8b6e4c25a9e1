#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "autoarc/job.hpp"

using namespace autoarc;

namespace {

const char* kDefnodeFlat = R"(
ring { char = 0 ; vars = x, y }
fatpoint { kind = linear ; order = 1 }
deformation { params = t ; polys = x*y - t }
task { run = flatness }
output { format = json }
)";

const char* kCubicIdeal = R"(
ring { char = 0 ; vars = x, y }
fatpoint { kind = linear ; order = 1 }
deformation { params = t ; polys = y^2 - x^3 - t }
task { run = arc-ideal }
)";

const char* kDnode3Classify = R"(
ring { char = 0 ; vars = x, y }
fatpoint { kind = linear ; order = 2 }
deformation { params = t ; polys = x*y - t^2 - t }
task { run = classify ; }
output { format = json ; file = out.json }
)";

}  // namespace

TEST_CASE("job parsing") {
  Job job = parse_job(kDnode3Classify);
  CHECK(job.characteristic == 0);
  CHECK(job.ring_vars == std::vector<std::string>{"x", "y"});
  REQUIRE(job.fatpoint.has_value());
  CHECK(job.fatpoint->order == 2);
  REQUIRE(job.deformation.has_value());
  CHECK(job.deformation->poly_texts ==
        std::vector<std::string>{"x*y - t^2 - t"});
  CHECK(job.task == "classify");
  CHECK(job.output_format == "json");
  CHECK(job.output_file == "out.json");
}

TEST_CASE("multiple polynomials split on semicolons") {
  Job job = parse_job(R"(
ring { char = 0 ; vars = x, y }
fatpoint { kind = linear ; order = 1 }
deformation { params = t ; polys = x*y - t ; x^2 - y }
task { run = dimension }
)");
  REQUIRE(job.deformation.has_value());
  CHECK(job.deformation->poly_texts.size() == 2);
}

TEST_CASE("germ fatpoint parsing") {
  Job job = parse_job(R"(
ring { char = 0 ; vars = x, y }
fatpoint { kind = germ ; vars = u, v ; ideal = v^2 - u^3 ; order = 3 }
deformation { params = u, v ; polys = x*y - u }
task { run = dimension }
)");
  REQUIRE(job.fatpoint.has_value());
  CHECK(job.fatpoint->kind == Job::FatPointSpec::Kind::Germ);
  CHECK(job.fatpoint->vars == std::vector<std::string>{"u", "v"});
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_job("ring { char = 0 ; vars = x }"), ParseError);
  CHECK_THROWS_AS(parse_job("ring { vars = x }\ntask { run = dimension }"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_job("ring { char = 0 ; vars = x }\ntask { run = fly }"),
      ParseError);
  CHECK_THROWS_AS(parse_job(R"(
ring { char = 0 ; vars = x, y }
task { run = defects }
)"),
                  ParseError);  // defects needs a range
  CHECK_THROWS_AS(parse_job(""), ParseError);
}

TEST_CASE("defnode flatness job") {
  Report r = run_job(parse_job(kDefnodeFlat));
  const auto& flat = r.payload["flatness"];
  REQUIRE(flat.is_array());
  bool dominance_flat = false, miracle_flat = false;
  for (const auto& v : flat) {
    if (v["method"] == "dominance") dominance_flat = v["verdict"] == "flat";
    if (v["method"] == "miracle") miracle_flat = v["verdict"] == "flat";
  }
  CHECK(dominance_flat);
  CHECK(miracle_flat);
  CHECK(r.payload["status"] == "ok");
}

TEST_CASE("cubic arc-ideal job renders the printed generators") {
  Report r = run_job(parse_job(kCubicIdeal));
  REQUIRE(r.ideal_alias.size() == 2);
  CHECK(r.ideal_alias[0] == "c^2 - a^3");
  CHECK(r.ideal_alias[1] == "2*c*d - 3*a^2*b - f");
  CHECK(r.payload["dimension"] == 3);
}

TEST_CASE("dnode3 classify job is weak with witness alias g") {
  Report r = run_job(parse_job(kDnode3Classify));
  const auto& cls = r.payload["classification"];
  CHECK(cls["class"] == "weak");
  CHECK(cls["failing_variable"] == "e_1_3");
  CHECK(r.payload["alias_map"]["e_1_3"] == "g");
}

TEST_CASE("defects job emits full rows") {
  Report r = run_job(parse_job(R"(
ring { char = 0 ; vars = x, y }
fatpoint { kind = linear ; order = 1 }
deformation { params = t ; polys = x*y - t }
task { run = defects ; range = 1..2 }
)"));
  const auto& table = r.payload["defect_table"];
  REQUIRE(table.is_array());
  REQUIRE(table.size() == 2);
  for (const char* key :
       {"n", "l", "delta", "dimA", "dimV", "d", "phi", "dstar", "e", "R",
        "validated", "family"})
    CHECK(table[0].contains(key));
  CHECK(table[1]["phi"] == "1/3");
}

TEST_CASE("schema completeness and determinism") {
  for (const char* text : {kDefnodeFlat, kCubicIdeal, kDnode3Classify}) {
    Report r1 = run_job(parse_job(text));
    for (const char* key :
         {"job", "task", "ideal", "alias_map", "dimension", "components",
          "flatness", "classification", "defect_table", "motivic", "warnings",
          "status"})
      CHECK(r1.payload.contains(key));
    Report r2 = run_job(parse_job(text));
    CHECK(render_report(r1, "json") == render_report(r2, "json"));
  }
}

TEST_CASE("motivic job reports virtual dimensions and convergence") {
  Report r = run_job(parse_job(R"(
ring { char = 0 ; vars = x, y }
fatpoint { kind = linear ; order = 1 }
deformation { params = t ; polys = x*y - t }
task { run = motivic ; range = 1..2 }
)"));
  const auto& mot = r.payload["motivic"];
  REQUIRE(!mot.is_null());
  CHECK(mot["singular_virtual_dims"] == nlohmann::ordered_json::array({-1, -1}));
  CHECK(mot["convergence"] == false);
  REQUIRE(mot["terms"].is_array());
  CHECK(mot["terms"].size() == 2);
  // rows come along with the motivic ledger
  CHECK(r.payload["defect_table"].is_array());
}

TEST_CASE("validate job reports the annihilator chain verdict") {
  Report r = run_job(parse_job(R"(
ring { char = 0 ; vars = x, y }
fatpoint { kind = linear ; order = 1 }
deformation { params = t ; polys = x*y - t }
task { run = validate }
)"));
  CHECK(r.payload["flatness"][0]["verdict"] == "flat");

  Report bad = run_job(parse_job(R"(
ring { char = 0 ; vars = x }
fatpoint { kind = linear ; order = 1 }
deformation { params = t ; polys = t }
task { run = validate }
)"));
  CHECK(bad.payload["flatness"][0]["verdict"] == "not-flat");
}

TEST_CASE("endo-ideal job over a germ fat point") {
  Report r = run_job(parse_job(R"(
ring { char = 0 ; vars = x, y }
fatpoint { kind = germ ; vars = u, v ; ideal = v^2 - u^3 ; order = 2 }
task { run = endo-ideal }
)"));
  CHECK(r.payload["status"] == "ok");
  CHECK(r.payload["dimension"].is_number());
}

TEST_CASE("char p jobs carry a warning") {
  Report r = run_job(parse_job(R"(
ring { char = 2 ; vars = x, y }
fatpoint { kind = linear ; order = 1 }
deformation { params = t ; polys = y^2 - x^3 - t }
task { run = dimension }
)"));
  REQUIRE(r.payload["warnings"].is_array());
  CHECK(r.payload["warnings"].size() >= 1);
}

TEST_CASE("components job lists status per component") {
  Report r = run_job(parse_job(R"(
ring { char = 0 ; vars = x, y }
fatpoint { kind = linear ; order = 1 }
deformation { params = t ; polys = x*y - t }
task { run = components }
)"));
  const auto& comps = r.payload["components"];
  REQUIRE(comps.size() == 2);
  for (const auto& c : comps) {
    CHECK(c["dimension"] == 3);
    CHECK((c["status"] == "heuristic" ||
           c["status"] == "certified-prime-by-split-exhaustion"));
  }
}

TEST_CASE("flatness job with base override finds the nonflat witness") {
  Report r = run_job(parse_job(R"(
ring { char = 2 ; vars = x, y, z }
fatpoint { kind = linear ; order = 1 }
deformation { polys = x^2 - y^2*z }
task { run = flatness ; base = e, f }
)"));
  bool found_notflat = false;
  for (const auto& v : r.payload["flatness"])
    if (v["method"] == "miracle" && v["verdict"] == "not-flat")
      found_notflat = true;
  CHECK(found_notflat);
}

TEST_CASE("text rendering is stable and readable") {
  Report r = run_job(parse_job(kCubicIdeal));
  std::string text = render_report(r, "text");
  CHECK(text.find("c^2 - a^3") != std::string::npos);
  CHECK(text.find("task: arc-ideal") != std::string::npos);
  CHECK_THROWS_AS(render_report(r, "yaml"), ParseError);
}

#include <doctest.h>

#include "pisot/output.hpp"

using namespace pisot;

TEST_CASE("point CSV layout") {
  const std::vector<CyclotomicInt> pts{CyclotomicInt(8), CyclotomicInt::root_of_unity(8, 1)};
  CHECK(io::points_csv(pts) == "c0,c1,c2,c3,re,im\n0,0,0,0,0,0\n0,1,0,0,0.707106781187,0.707106781187\n");
  const std::vector<CyclotomicInt> neg{CyclotomicInt::root_of_unity(8, 2) * CyclotomicInt::root_of_unity(8, 2)};
  CHECK(io::points_csv(neg) == "c0,c1,c2,c3,re,im\n-1,0,0,0,-1,0\n");
}

TEST_CASE("content hashes are deterministic") {
  CHECK(io::content_hash("abc") == io::content_hash(std::string("abc")));
  CHECK(io::content_hash("abc") != io::content_hash("abd"));
  CHECK(io::content_hash("").size() == 16);
  const BaseSpec b = lookup("tau", 5);
  const Patch p = generate_ball(b, make_alphabet(5), 3);
  CHECK(io::content_hash(io::patch_csv(p)) == io::content_hash(io::patch_csv(generate_ball(b, make_alphabet(5), 3))));
}

TEST_CASE("patch metadata and manifest") {
  const BaseSpec b = lookup("delta", 8);
  const Patch p = generate_ball(b, make_alphabet(8), 2);
  const io::Json j = io::patch_meta(p);
  CHECK(j["kind"] == "ball");
  CHECK(j["count"] == p.size());
  CHECK(j["complete"] == true);
  io::RunManifest m;
  m.command = "emit spectrum";
  m.case_name = "delta";
  m.order = 8;
  m.outputs.emplace_back("points.csv", io::content_hash("x"));
  const io::Json mj = m.to_json();
  CHECK(mj["case"]["order"] == 8);
  CHECK(mj["outputs"][0]["hash"] == io::content_hash("x"));
}

TEST_CASE("configuration graph in DOT") {
  const BaseSpec b = lookup("tau2", 10);
  const ConfigEnumeration e = enumerate_configs(b, make_alphabet(10));
  const auto edges = config_graph(e);
  const std::string dot = io::config_dot(e, edges, nullptr);
  std::size_t arrows = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2)) ++arrows;
  CHECK(arrows == edges.size());
  CHECK(dot.rfind("digraph", 0) == 0);
}

TEST_CASE("SVG canvas") {
  CHECK_THROWS_AS(io::Svg(0), InvalidInput);
  io::Svg s(1, 100);
  s.point(Complex(0, 1), 2, "#000");
  const std::string out = s.str();
  CHECK(out.find("cx=\"50\" cy=\"0\"") != std::string::npos);
  CHECK(out.find("</svg>") != std::string::npos);
}

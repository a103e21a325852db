#include <gtest/gtest.h>

#include <sstream>

#include "coxcfg/io.hpp"
#include "json.hpp"

using namespace coxcfg;

TEST(StructureJson, RoundTrip) {
  for (const auto& s : {cox(4), grassmannian(5, 2), k_dagger(4, 2)}) {
    auto text = structure_to_json(s);
    EXPECT_EQ(structure_from_json(text), s);
    EXPECT_EQ(structure_to_json(structure_from_json(text)), text);
  }
  EXPECT_THROW(structure_from_json("{"), FormatError);
  EXPECT_THROW(structure_from_json(R"({"points":["a"],"blocks":[{"label":"B","points":["z"]}]})"), FormatError);
  EXPECT_THROW(structure_from_json(R"({"points":["a","a"],"blocks":[]})"), FormatError);
}

TEST(Csv, SteinerMiquelOrder) {
  const std::string expected =
      ",q_A,q_{12},q_{13},q_{14},q_{23},q_{24},q_{34},q_B\n"
      "A_1,1,1,1,1,0,0,0,0\n"
      "A_2,1,1,0,0,1,1,0,0\n"
      "A_3,1,0,1,0,1,0,1,0\n"
      "A_4,1,0,0,1,0,1,1,0\n"
      "B_1,0,0,0,0,1,1,1,1\n"
      "B_2,0,0,1,1,0,0,1,1\n"
      "B_3,0,1,0,1,0,1,0,1\n"
      "B_4,0,1,1,0,1,0,0,1\n";
  EXPECT_EQ(incidence_csv(cox(4), MatrixOrder::SteinerMiquel), expected);
  EXPECT_THROW(incidence_csv(cox(5), MatrixOrder::SteinerMiquel), std::invalid_argument);
}

TEST(Csv, CanonicalOrderQuotesLabels) {
  auto csv = incidence_csv(cox(3));
  std::istringstream in(csv);
  std::string header, row;
  std::getline(in, header);
  EXPECT_EQ(header, ",{},\"{1,2}\",\"{1,3}\",\"{2,3}\"");
  std::getline(in, row);
  EXPECT_EQ(row, "{1},1,1,1,0");
}

TEST(Dot, ListsEveryEdge) {
  auto dot = graph_to_dot(hypercube(3), "q3");
  EXPECT_EQ(dot.rfind("graph q3 {", 0), 0u);
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
  EXPECT_EQ(edges, 12u);
}

TEST(RealizationJson, RoundTripIsExact) {
  auto r = realize(5);
  auto text = realization_to_json(r);
  auto back = realization_from_json(text);
  EXPECT_EQ(back.n(), 5);
  EXPECT_EQ(back.seed(), r.seed());
  EXPECT_FALSE(back.verified());
  for (auto p : r.point_labels()) EXPECT_EQ(back.point(p), r.point(p));
  for (auto b : r.circle_labels()) EXPECT_EQ(back.circle(b), r.circle(b));
  EXPECT_TRUE(verify(back).clean());

  auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j["points"][0]["label"], "{}");
  EXPECT_EQ(j["points"][0]["inf"], true);
  EXPECT_TRUE(j["circles"][0]["a"].is_string());
}

TEST(RealizationJson, RejectsMalformedInput) {
  EXPECT_THROW(realization_from_json(R"({"n":3})"), FormatError);
  EXPECT_THROW(realization_from_json(
                   R"({"n":3,"seed":1,"points":[{"label":"{1}","inf":true}],"circles":[]})"),
               FormatError);
  EXPECT_THROW(realization_from_json(
                   R"({"n":3,"seed":1,"points":[],"circles":[{"label":"{1}","a":"1","b":"0","c":"0","d":"1"}]})"),
               FormatError);
  EXPECT_THROW(realization_from_json(
                   R"({"n":3,"seed":1,"points":[{"label":"{1,2}","x_num":"x","x_den":"1","y_num":"0","y_den":"1"}],"circles":[]})"),
               FormatError);
}

TEST(SphereJson, CarriesResidual) {
  auto j = nlohmann::json::parse(sphere_to_json(stereographic(realize(4), 1)));
  EXPECT_EQ(j["points"].size(), 8u);
  EXPECT_EQ(j["circles"].size(), 8u);
  EXPECT_LT(j["max_residual"].get<double>(), 1e-9);
}

TEST(Svg, OneGroupPerCircle) {
  auto svg = realization_to_svg(realize(4));
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  std::size_t groups = 0;
  for (std::size_t pos = 0; (pos = svg.find("<g id=\"c", pos)) != std::string::npos; ++pos) ++groups;
  EXPECT_EQ(groups, 8u);
}

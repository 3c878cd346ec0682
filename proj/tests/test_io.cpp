#include "lemnis/errors.hpp"
#include "lemnis/families.hpp"
#include "lemnis/io.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace lemnis;
namespace fam = lemnis::families;

TEST(Json, NonFiniteAsNull)
{
  EXPECT_TRUE(number(std::numeric_limits<double>::infinity()).is_null());
  EXPECT_TRUE(std::isnan(read_number(json(nullptr))));
  EXPECT_EQ(read_number(number(0.1)), 0.1);
}

TEST(Json, CertReportRoundTrip)
{
  const auto r = criterion::certify(fam::make_f6(), 0.8);
  const json j = r;
  const auto back = json::parse(j.dump()).get<criterion::CertReport>();
  EXPECT_EQ(back.s1, r.s1);
  EXPECT_EQ(back.s2, r.s2);
  EXPECT_EQ(back.c, r.c);
  EXPECT_EQ(back.certified, r.certified);
  EXPECT_EQ(back.truncation_n, r.truncation_n);
  EXPECT_EQ(back.tail_bound, r.tail_bound);
  EXPECT_EQ(back.closed_form_s1, r.closed_form_s1);
  EXPECT_EQ(back.closed_form_s2, r.closed_form_s2);
  const json again = back;
  EXPECT_EQ(again.dump(), j.dump());
}

TEST(Json, CertReportFieldOrder)
{
  const json j = criterion::certify(fam::make_f1(), 1.0);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items())
    keys.push_back(k);
  const std::vector<std::string> expected{"s1", "s2", "c", "s1_ok", "s2_ok", "certified",
                                          "truncation_n", "tail_bound", "closed_form_s1", "closed_form_s2"};
  EXPECT_EQ(keys, expected);
}

TEST(Json, OtherReportsRoundTrip)
{
  verifier::SamplingGrid g;
  g.radii = {0.5, 0.9};
  g.points_per_circle = 64;
  const auto v = verifier::verify_membership(fam::make_f1(), 1.0, g);
  const json jv = v;
  EXPECT_EQ(json(json::parse(jv.dump()).get<verifier::VerifyReport>()).dump(), jv.dump());

  thresholds::ThresholdResult t{1.25, -3e-10, 31, 1.2499, 1.2501, 2};
  const json jt = t;
  EXPECT_EQ(json(jt.get<thresholds::ThresholdResult>()).dump(), jt.dump());

  thresholds::ConstantCheck c{"x", 1.0, std::nan(""), std::numeric_limits<double>::infinity(), 1e-4, false};
  const json jc = c;
  EXPECT_TRUE(jc["reproduced_value"].is_null());
  const auto cb = jc.get<thresholds::ConstantCheck>();
  EXPECT_TRUE(std::isnan(cb.reproduced));

  const auto s = identities::sweep_psi(20);
  const json js = s;
  EXPECT_EQ(json(js.get<identities::SweepResult>()).dump(), js.dump());

  RunManifest m{"certify", {{"c", "1"}}, {"a.json"}, library_version(), 12};
  const json jm = m;
  EXPECT_EQ(json(jm.get<RunManifest>()).dump(), jm.dump());
}

TEST(Json, ComplexAndParams)
{
  const Complex z{1.5, -0.25};
  EXPECT_EQ(complex_from_json(complex_to_json(z)), z);
  EXPECT_EQ(complex_from_json(json(2.0)), Complex(2.0));
  const json p = params_to_json({{"kappa", Complex(1.5, 0.5)}, {"eta", Complex(1.0)}});
  EXPECT_TRUE(p["eta"].is_number());
  EXPECT_TRUE(p["kappa"].is_object());
}

TEST(Csv, TableFormat)
{
  const std::vector<thresholds::TableRow> rows{{0.1, 4.25508, ""}, {0.2, std::nullopt, "bracket"}};
  EXPECT_EQ(table_csv(rows), "c,nu1\n0.10000000000000001,4.2550800000000004\n0.20000000000000001,\n");
  EXPECT_EQ(format_g17(0.5), "0.5");
}

TEST(Csv, Samples)
{
  const std::vector<verifier::Sample> s{{0.0, 0.5, Complex(1.0, 0.5), 0.25}};
  EXPECT_EQ(samples_csv(s), "theta,r,lemniscate_value,re_w,im_w\n0,0.5,0.25,1,0.5\n");
}

TEST(Svg, WellFormedShells)
{
  const std::vector<verifier::Sample> s{{0.0, 0.9, Complex(1.1, 0.1), 0.2}};
  const auto img = image_svg(s, 1.0);
  EXPECT_EQ(img.rfind("<svg", 0), 0u);
  EXPECT_NE(img.find("<circle"), std::string::npos);
  EXPECT_NE(img.find("</svg>"), std::string::npos);
  const auto curve = curve_svg({0.0, 1.0, 2.0}, {1.0, std::nan(""), 3.0}, "t", 0.0);
  EXPECT_NE(curve.find("<path"), std::string::npos);
  EXPECT_THROW(curve_svg({0.0}, {}, "t", 0.0), argument_error);
}

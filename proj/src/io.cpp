#include "lemnis/io.hpp"

#include "lemnis/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <limits>
#include <numbers>

namespace lemnis {

json
number(double x)
{
  return std::isfinite(x) ? json(x) : json(nullptr);
}

double
read_number(const json& j)
{
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

json
complex_to_json(Complex z)
{
  return json{{"re", number(z.real())}, {"im", number(z.imag())}};
}

Complex
complex_from_json(const json& j)
{
  if (j.is_number())
    return {j.get<double>(), 0.0};
  return {read_number(j.at("re")), read_number(j.at("im"))};
}

json
params_to_json(const std::map<std::string, Complex>& params)
{
  json j = json::object();
  for (const auto& [k, v] : params)
    j[k] = v.imag() == 0.0 ? number(v.real()) : complex_to_json(v);
  return j;
}

namespace {

json
optional_number(const std::optional<double>& x)
{
  return x ? number(*x) : json(nullptr);
}

std::optional<double>
read_optional(const json& j)
{
  if (j.is_null())
    return std::nullopt;
  return j.get<double>();
}

} // namespace

namespace criterion {

void
to_json(json& j, const CertReport& r)
{
  j = json{{"s1", number(r.s1)},
           {"s2", number(r.s2)},
           {"c", number(r.c)},
           {"s1_ok", r.s1_ok},
           {"s2_ok", r.s2_ok},
           {"certified", r.certified},
           {"truncation_n", r.truncation_n},
           {"tail_bound", number(r.tail_bound)},
           {"closed_form_s1", optional_number(r.closed_form_s1)},
           {"closed_form_s2", optional_number(r.closed_form_s2)}};
}

void
from_json(const json& j, CertReport& r)
{
  r.s1 = read_number(j.at("s1"));
  r.s2 = read_number(j.at("s2"));
  r.c = read_number(j.at("c"));
  r.s1_ok = j.at("s1_ok").get<bool>();
  r.s2_ok = j.at("s2_ok").get<bool>();
  r.certified = j.at("certified").get<bool>();
  r.truncation_n = j.at("truncation_n").get<std::size_t>();
  r.tail_bound = read_number(j.at("tail_bound"));
  r.closed_form_s1 = read_optional(j.at("closed_form_s1"));
  r.closed_form_s2 = read_optional(j.at("closed_form_s2"));
}

} // namespace criterion

namespace verifier {

void
to_json(json& j, const VerifyReport& r)
{
  json per_radius = json::array();
  for (double v : r.per_radius_max)
    per_radius.push_back(number(v));
  j = json{{"c", number(r.c)},
           {"max_lemniscate_value", number(r.max_lemniscate_value)},
           {"min_re_ratio", number(r.min_re_ratio)},
           {"worst_z", complex_to_json(r.worst_z)},
           {"passes", r.passes},
           {"per_radius_max", per_radius},
           {"samples", r.samples}};
}

void
from_json(const json& j, VerifyReport& r)
{
  r.c = read_number(j.at("c"));
  r.max_lemniscate_value = read_number(j.at("max_lemniscate_value"));
  r.min_re_ratio = read_number(j.at("min_re_ratio"));
  r.worst_z = complex_from_json(j.at("worst_z"));
  r.passes = j.at("passes").get<bool>();
  r.per_radius_max.clear();
  for (const auto& v : j.at("per_radius_max"))
    r.per_radius_max.push_back(read_number(v));
  r.samples = j.at("samples").get<std::size_t>();
}

} // namespace verifier

namespace thresholds {

void
to_json(json& j, const ThresholdResult& r)
{
  j = json{{"root", number(r.root)},
           {"residual", number(r.residual)},
           {"iterations", r.iterations},
           {"bracket_final", json::array({number(r.bracket_lo), number(r.bracket_hi)})},
           {"sign_changes", r.sign_changes}};
}

void
from_json(const json& j, ThresholdResult& r)
{
  r.root = read_number(j.at("root"));
  r.residual = read_number(j.at("residual"));
  r.iterations = j.at("iterations").get<std::size_t>();
  r.bracket_lo = read_number(j.at("bracket_final").at(0));
  r.bracket_hi = read_number(j.at("bracket_final").at(1));
  r.sign_changes = j.at("sign_changes").get<std::size_t>();
}

void
to_json(json& j, const ConstantCheck& r)
{
  j = json{{"name", r.name},
           {"value", number(r.reference)},
           {"reproduced_value", number(r.reproduced)},
           {"abs_err", number(r.abs_err)},
           {"tolerance", number(r.tolerance)},
           {"pass", r.pass}};
}

void
from_json(const json& j, ConstantCheck& r)
{
  r.name = j.at("name").get<std::string>();
  r.reference = read_number(j.at("value"));
  r.reproduced = read_number(j.at("reproduced_value"));
  r.abs_err = read_number(j.at("abs_err"));
  r.tolerance = read_number(j.at("tolerance"));
  r.pass = j.at("pass").get<bool>();
}

} // namespace thresholds

namespace identities {

void
to_json(json& j, const SweepResult& r)
{
  j = json{{"lemma", r.lemma},
           {"pass", r.pass},
           {"cases", r.cases},
           {"metric", r.metric},
           {"worst", number(r.worst)},
           {"tolerance", number(r.tolerance)},
           {"equality_at", r.equality_at},
           {"detail", r.detail}};
}

void
from_json(const json& j, SweepResult& r)
{
  r.lemma = j.at("lemma").get<std::string>();
  r.pass = j.at("pass").get<bool>();
  r.cases = j.at("cases").get<std::size_t>();
  r.metric = j.at("metric").get<std::string>();
  r.worst = read_number(j.at("worst"));
  r.tolerance = read_number(j.at("tolerance"));
  r.equality_at = j.at("equality_at").get<std::vector<std::size_t>>();
  r.detail = j.at("detail").get<std::string>();
}

} // namespace identities

void
to_json(json& j, const RunManifest& m)
{
  j = json{{"command", m.command},
           {"inputs", m.inputs},
           {"outputs", m.outputs},
           {"library_version", m.library_version},
           {"wall_time_ms", m.wall_time_ms}};
}

void
from_json(const json& j, RunManifest& m)
{
  m.command = j.at("command").get<std::string>();
  m.inputs = j.at("inputs");
  m.outputs = j.at("outputs").get<std::vector<std::string>>();
  m.library_version = j.at("library_version").get<std::string>();
  m.wall_time_ms = j.at("wall_time_ms").get<long long>();
}

const char*
library_version()
{
  return "0.1.0";
}

std::string
format_g17(double x)
{
  return fmt::format("{:.17g}", x);
}

void
write_text_file(const std::string& path, const std::string& text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw error(fmt::format("cannot open '{}' for writing", path));
  out << text;
  if (!out)
    throw error(fmt::format("failed writing '{}'", path));
}

std::string
table_csv(const std::vector<thresholds::TableRow>& rows)
{
  std::string out = "c,nu1\n";
  for (const auto& row : rows)
    out += fmt::format("{},{}\n", format_g17(row.c), row.nu1 ? format_g17(*row.nu1) : "");
  return out;
}

std::string
samples_csv(const std::vector<verifier::Sample>& samples)
{
  std::string out = "theta,r,lemniscate_value,re_w,im_w\n";
  for (const auto& s : samples)
    out += fmt::format("{},{},{},{},{}\n", format_g17(s.theta), format_g17(s.r),
                       format_g17(s.lemniscate_value), format_g17(s.w.real()),
                       format_g17(s.w.imag()));
  return out;
}

namespace {

struct Frame
{
  double x0, x1, y0, y1;
  double width = 480.0, height = 480.0, pad = 40.0;

  double px(double x) const { return pad + (x - x0) / (x1 - x0) * (width - 2 * pad); }
  double py(double y) const { return height - pad - (y - y0) / (y1 - y0) * (height - 2 * pad); }
};

std::string
svg_open(const Frame& f, const std::string& title)
{
  return fmt::format(
    "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n"
    "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    "<text x=\"{2}\" y=\"20\" font-family=\"sans-serif\" font-size=\"13\">{3}</text>\n",
    f.width, f.height, f.pad, title);
}

} // namespace

std::string
image_svg(const std::vector<verifier::Sample>& samples, double c)
{
  Frame f{-0.1, 1.6, -0.85, 0.85};
  std::string out = svg_open(f, fmt::format("image of z f'/f and boundary of sqrt(1 + {} z)", c));

  // Boundary: w = sqrt(1 + c e^{it}), principal branch.
  std::string path;
  for (int k = 0; k <= 720; ++k) {
    const double t = 2.0 * std::numbers::pi * k / 720.0;
    const Complex w = std::sqrt(1.0 + c * std::polar(1.0, t));
    path += fmt::format("{}{:.3f},{:.3f} ", k == 0 ? "M" : "L", f.px(w.real()), f.py(w.imag()));
  }
  out += fmt::format("<path d=\"{}Z\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n", path);

  double r_max = 0.0;
  for (const auto& s : samples)
    r_max = std::max(r_max, s.r);
  for (const auto& s : samples)
    if (s.r == r_max)
      out += fmt::format("<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"1\" fill=\"#c03030\"/>\n",
                         f.px(s.w.real()), f.py(s.w.imag()));
  out += "</svg>\n";
  return out;
}

std::string
curve_svg(const std::vector<double>& xs, const std::vector<double>& ys,
          const std::string& title, double y_ref)
{
  if (xs.empty() || xs.size() != ys.size())
    throw argument_error("curve_svg: need matching, non-empty x and y samples");
  double y_lo = y_ref, y_hi = y_ref;
  for (double y : ys)
    if (std::isfinite(y)) {
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  if (y_hi == y_lo)
    y_hi = y_lo + 1.0;
  Frame f{xs.front(), xs.back(), y_lo, y_hi};
  if (f.x1 == f.x0)
    f.x1 = f.x0 + 1.0;
  std::string out = svg_open(f, title);
  std::string path;
  bool pen_down = false;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(ys[i])) {
      pen_down = false;
      continue;
    }
    path += fmt::format("{}{:.3f},{:.3f} ", pen_down ? "L" : "M", f.px(xs[i]), f.py(ys[i]));
    pen_down = true;
  }
  out += fmt::format("<path d=\"{}\" fill=\"none\" stroke=\"#2040a0\" stroke-width=\"1.5\"/>\n", path);
  out += fmt::format("<line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n",
                     f.px(f.x0), f.py(y_ref), f.px(f.x1), f.py(y_ref));
  out += "</svg>\n";
  return out;
}

} // namespace lemnis

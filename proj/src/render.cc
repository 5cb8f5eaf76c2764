// Copyright 2026 The Vizentropy Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vizentropy/render.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "vizentropy/error.h"

namespace vizentropy {
namespace {

// Fixed three-decimal formatting with trailing zeros trimmed. to_chars is
// locale independent, which keeps documents byte-stable.
std::string Num(double v, int precision = 3) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, precision);
  std::string s(buf, ptr);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string Escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string_view KindName(GlyphKind kind) {
  switch (kind) {
    case GlyphKind::kCircle: return "circle";
    case GlyphKind::kWave: return "wave";
    case GlyphKind::kNull: return "null";
  }
  return "";
}

// Model space is y up; SVG is y down.
void AppendCircle(std::string& out, const char* cls, const Circle& c,
                  Rgb fill) {
  out += "<circle class=\"";
  out += cls;
  out += "\" cx=\"" + Num(c.center.x) + "\" cy=\"" + Num(-c.center.y) +
         "\" r=\"" + Num(c.radius) + "\" fill=\"" + fill.Hex() + "\"/>\n";
}

void AppendPath(std::string& out, const char* cls,
                const std::vector<Point>& vertices, Rgb fill) {
  out += "<path class=\"";
  out += cls;
  out += "\" d=\"";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out += i == 0 ? 'M' : 'L';
    out += Num(vertices[i].x);
    out += ',';
    out += Num(-vertices[i].y);
  }
  out += "Z\" fill=\"" + fill.Hex() + "\"/>\n";
}

void AppendGlyphBody(std::string& out, const GlyphGeometry& g) {
  AppendCircle(out, "dark-ring", g.dark_disc, g.dark_color);
  if (const auto* outline = std::get_if<PolarOutline>(&g.light_layer)) {
    AppendPath(out, "light-ring", outline->vertices, g.light_color);
  } else {
    AppendCircle(out, "light-ring", std::get<Circle>(g.light_layer),
                 g.light_color);
  }
  AppendCircle(out, "value-disc", g.value_disc, g.value_color);
  if (g.null_marker) {
    AppendPath(out, "null-marker", g.null_marker->bar.vertices,
               g.null_marker->color);
    AppendCircle(out, "null-marker", g.null_marker->dot, g.null_marker->color);
  }
  if (g.label) {
    out += "<text x=\"" + Num(g.label_anchor.x) + "\" y=\"" +
           Num(-g.label_anchor.y) + "\" font-family=\"sans-serif\" "
           "font-size=\"" + Num(g.label_size) +
           "\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"" +
           g.dark_color.Hex() + "\">" + Escape(*g.label) + "</text>\n";
  }
}

std::string GroupOpen(const GlyphGeometry& g) {
  std::string out = "<g class=\"glyph\" data-kind=\"";
  out += KindName(g.kind);
  out += "\" data-level=\"" + std::to_string(g.level) + "\"";
  return out;
}

constexpr char kXmlHeader[] = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
constexpr char kSvgNamespaces[] =
    "xmlns=\"http://www.w3.org/2000/svg\" "
    "xmlns:xlink=\"http://www.w3.org/1999/xlink\" version=\"1.1\"";

}  // namespace

std::string FormatValueLabel(double value) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, 1);
  std::string s(buf, ptr);
  if (s == "-0.0") s = "0.0";
  return s;
}

std::string RenderGlyph(const GlyphGeometry& glyph, int out_px) {
  if (out_px <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "output size must be positive");
  }
  const double d = glyph.diameter;
  std::string out = kXmlHeader;
  out += "<svg ";
  out += kSvgNamespaces;
  out += " width=\"" + std::to_string(out_px) + "\" height=\"" +
         std::to_string(out_px) + "\" viewBox=\"" + Num(-0.5 * d) + " " +
         Num(-0.5 * d) + " " + Num(d) + " " + Num(d) + "\">\n";
  out += GroupOpen(glyph) + ">\n";
  AppendGlyphBody(out, glyph);
  out += "</g>\n</svg>\n";
  return out;
}

std::string RenderScene(const SceneSpec& scene) {
  if (scene.width <= 0 || scene.height <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "canvas must be non-empty");
  }
  scene.color_map.Validate();
  scene.proportions.Validate();
  if (!scene.scale.bounds()) {
    throw Error(ErrorCode::kBoundsUnset, "scene scale has no variance range");
  }
  std::string out = kXmlHeader;
  out += "<svg ";
  out += kSvgNamespaces;
  out += " width=\"" + std::to_string(scene.width) + "\" height=\"" +
         std::to_string(scene.height) + "\" viewBox=\"0 0 " +
         std::to_string(scene.width) + " " + std::to_string(scene.height) +
         "\">\n";
  if (scene.background) {
    out += "<image class=\"background\" x=\"0\" y=\"0\" width=\"" +
           std::to_string(scene.width) + "\" height=\"" +
           std::to_string(scene.height) + "\" xlink:href=\"" +
           Escape(*scene.background) + "\"/>\n";
  }
  for (std::size_t i = 0; i < scene.placements.size(); ++i) {
    const Placement& p = scene.placements[i];
    if (!(p.position.x >= 0.0 && p.position.x <= scene.width &&
          p.position.y >= 0.0 && p.position.y <= scene.height)) {
      throw Error(ErrorCode::kPlacementOutOfCanvas,
                  "placement " + std::to_string(i) + " (" +
                      p.summary.sensor_id + ") at " + Num(p.position.x) + "," +
                      Num(p.position.y));
    }
    if (!(p.diameter > 0.0) || !std::isfinite(p.diameter)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "placement " + std::to_string(i) + " has no size");
    }
    const Rgb color = ValueToColor(p.summary.mean, scene.color_map);
    std::optional<std::string> label;
    if (scene.show_labels) label = FormatValueLabel(p.summary.mean);
    const int level = scene.scale.MapUncertainty(p.summary.variance);
    const GlyphGeometry g =
        level == kNullLevel
            ? AssembleGlyph(kNullCase, color, label, scene.proportions)
            : AssembleGlyph(scene.scale.levels()[level], color, label,
                            scene.proportions);
    out += GroupOpen(g);
    out += " data-sensor=\"" + Escape(p.summary.sensor_id) +
           "\" transform=\"translate(" + Num(p.position.x) + " " +
           Num(p.position.y) + ") scale(" +
           Num(p.diameter / scene.proportions.diameter, 6) + ")\">\n";
    AppendGlyphBody(out, g);
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

UncertaintyScale AutoRangeBounds(const UncertaintyScale& scale,
                                 std::span<const SensorSummary> summaries) {
  std::optional<double> lo, hi;
  for (const SensorSummary& s : summaries) {
    if (!s.variance || !std::isfinite(*s.variance)) continue;
    lo = lo ? std::min(*lo, *s.variance) : *s.variance;
    hi = hi ? std::max(*hi, *s.variance) : *s.variance;
  }
  if (!lo) {
    throw Error(ErrorCode::kBoundsUnset, "no summary carries a variance");
  }
  if (*hi == *lo) *hi = *lo + 1.0;
  return scale.WithBounds(*lo, *hi);
}

}  // namespace vizentropy

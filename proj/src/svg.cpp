#include "tropglue/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "tropglue/error.hpp"

namespace tropglue {

namespace {

constexpr double kScale = 400.0;
constexpr double kMargin = 40.0;
constexpr double kRay = 60.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v == 0.0 ? 0.0 : v);  // no "-0.00"
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}

struct Frame {
  double min_x = 0;
  double min_y = 0;
  double scale = kScale;
  double margin = kMargin;

  double px(const Rat& x) const { return margin + (x.get_d() - min_x) * scale; }
  double py(const Rat& y) const { return margin + kScale - (y.get_d() - min_y) * scale; }
};

}  // namespace

std::string render_svg(const GluingConfig& config) {
  const auto& type = config.type;
  const auto result = realize(type, config.domain, config.points.as_map());
  if (!result.realization) {
    throw Error(ErrorCode::NotRigid, "curve '" + config.name + "' has no realization to render");
  }
  const auto& pos = result.realization->positions;
  const bool plane = config.domain.mode == Mode::Plane;

  Frame frame;
  if (plane) {
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    bool first = true;
    for (const auto& [id, p] : pos) {
      const double x = p.x.get_d(), y = p.y.get_d();
      if (first) {
        lo_x = hi_x = x;
        lo_y = hi_y = y;
        first = false;
      }
      lo_x = std::min(lo_x, x);
      hi_x = std::max(hi_x, x);
      lo_y = std::min(lo_y, y);
      hi_y = std::max(hi_y, y);
    }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    frame.min_x = lo_x;
    frame.min_y = lo_y;
    frame.scale = kScale / span;
    frame.margin = kMargin + kRay;  // room for the rays
  }

  const double size = kScale + 2 * frame.margin;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size) << "\" height=\"" << fmt(size)
     << "\" viewBox=\"0 0 " << fmt(size) << ' ' << fmt(size) << "\">\n";
  if (config.name.empty()) {
    os << "<title>tropical curve</title>\n";
  } else {
    std::string title;
    for (char c : config.name) {
      if (c == '<') title += "&lt;";
      else if (c == '>') title += "&gt;";
      else if (c == '&') title += "&amp;";
      else title += c;
    }
    os << "<title>" << title << "</title>\n";
  }
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (plane) {
    const double x0 = frame.px(Rat(0)), y0 = frame.py(Rat(0));
    if (x0 >= 0 && x0 <= size) {
      os << "<line class=\"axis\" x1=\"" << fmt(x0) << "\" y1=\"0.00\" x2=\"" << fmt(x0) << "\" y2=\"" << fmt(size)
         << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    }
    if (y0 >= 0 && y0 <= size) {
      os << "<line class=\"axis\" x1=\"0.00\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(size) << "\" y2=\"" << fmt(y0)
         << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    }
  } else {
    os << "<polygon class=\"domain\" points=\"";
    for (FaceId c : {FaceId::C1, FaceId::C2, FaceId::C3}) {
      const RatPoint p = corner_point(c);
      os << fmt(frame.px(p.x)) << ',' << fmt(frame.py(p.y)) << (c == FaceId::C3 ? "" : " ");
    }
    os << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1.5\"/>\n";
  }

  for (const auto& e : type.internal_edges) {
    const auto& a = pos.at(e.tail);
    const auto& b = pos.at(e.head);
    os << "<line class=\"edge\" x1=\"" << fmt(frame.px(a.x)) << "\" y1=\"" << fmt(frame.py(a.y)) << "\" x2=\""
       << fmt(frame.px(b.x)) << "\" y2=\"" << fmt(frame.py(b.y)) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (const auto& u : type.unbounded_ends) {
    const auto& a = pos.at(u.vertex);
    const double dx = static_cast<double>(u.direction.x), dy = static_cast<double>(u.direction.y);
    const double norm = std::hypot(dx, dy);
    const double x = frame.px(a.x), y = frame.py(a.y);
    os << "<line class=\"ray\" x1=\"" << fmt(x) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(x + kRay * dx / norm)
       << "\" y2=\"" << fmt(y - kRay * dy / norm) << "\" stroke=\"black\" stroke-width=\"2\" stroke-dasharray=\"6 3\"/>\n";
  }

  std::map<int, std::vector<int>> labels;
  for (const auto& end : type.labeled_ends) labels[end.vertex].push_back(end.label);
  for (const auto& v : type.vertices) {
    const auto& p = pos.at(v.id);
    const double x = frame.px(p.x), y = frame.py(p.y);
    os << "<circle class=\"vertex\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"4\" fill=\"black\"/>\n";
    const auto it = labels.find(v.id);
    if (it == labels.end()) continue;
    auto sorted = it->second;
    std::sort(sorted.begin(), sorted.end());
    if (is_corner(v.face)) {
      // Corner ends all map to the corner itself, so only their number is shown.
      const double ox = v.face == FaceId::C2 ? 8 : -16;
      const double oy = v.face == FaceId::C3 ? -8 : 18;
      os << "<text class=\"count\" x=\"" << fmt(x + ox) << "\" y=\"" << fmt(y + oy)
         << "\" font-family=\"sans-serif\" font-size=\"12\">" << sorted.size() << "</text>\n";
    } else {
      std::string text;
      for (int l : sorted) text += (text.empty() ? "p" : ",p") + std::to_string(l);
      os << "<text class=\"label\" x=\"" << fmt(x + 6) << "\" y=\"" << fmt(y - 6)
         << "\" font-family=\"sans-serif\" font-size=\"11\">" << text << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace tropglue

#include "toricfrob/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "toricfrob/classes.hpp"
#include "toricfrob/frobenius.hpp"

namespace toricfrob {

namespace {

constexpr double kSize = 800.0;
constexpr double kMargin = 60.0;

using Point = std::pair<Integer, Integer>;

Integer cross(const Point& o, const Point& a, const Point& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Andrew's monotone chain, counterclockwise, collinear points dropped.
std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

class Canvas {
 public:
  Canvas(long lo_x, long hi_x, long lo_y, long hi_y) : lo_x_(lo_x), hi_y_(hi_y) {
    const double span = static_cast<double>(std::max(hi_x - lo_x, hi_y - lo_y));
    unit_ = (kSize - 2 * kMargin) / span;
  }
  double x(double v) const { return kMargin + (v - lo_x_) * unit_; }
  double y(double v) const { return kMargin + (hi_y_ - v) * unit_; }
  double unit() const { return unit_; }

 private:
  long lo_x_, hi_y_;
  double unit_ = 1;
};

double to_double(const Integer& v) { return v.get_d(); }

}  // namespace

std::string plot_ns(const Fan& fan) {
  require_valid(fan);
  const ClassGroup cg(fan);
  if (cg.rank() != 2) {
    throw Error(ErrorCode::RequiresRankTwo,
                "plot needs Picard rank 2, got " + std::to_string(cg.rank()));
  }
  const auto& classes = cg.ray_classes();
  const auto support = fsupp(fan, cg);
  const auto eff = extreme_rays(eff_cone(cg));
  const auto nef = nef_cone(fan, cg).generators;

  // Vertices of the zonotope: sums over subsets of the boundary classes.
  std::vector<Point> sums{{0, 0}};
  for (const auto& c : classes) {
    const std::size_t n = sums.size();
    for (std::size_t i = 0; i < n; ++i) sums.emplace_back(sums[i].first + c[0], sums[i].second + c[1]);
    sums = convex_hull(std::move(sums));
  }
  const auto hull = convex_hull(sums);

  long lo_x = 0, hi_x = 1, lo_y = 0, hi_y = 1;
  auto extend = [&](const Integer& a, const Integer& b) {
    lo_x = std::min(lo_x, a.get_si());
    hi_x = std::max(hi_x, a.get_si());
    lo_y = std::min(lo_y, b.get_si());
    hi_y = std::max(hi_y, b.get_si());
  };
  for (const auto& p : hull) extend(p.first, p.second);
  for (const auto& c : classes) extend(c[0], c[1]);
  --lo_x, --lo_y, ++hi_x, ++hi_y;
  const Canvas cv(lo_x, hi_x, lo_y, hi_y);

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
        "viewBox=\"0 0 800 800\">\n"
     << "<title>" << (fan.name.empty() ? "N1" : fan.name) << "</title>\n"
     << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";

  os << "<g id=\"grid\" stroke=\"#dddddd\" stroke-width=\"1\">\n";
  const long span = std::max(hi_x - lo_x, hi_y - lo_y);
  for (long i = lo_x; i <= lo_x + span; ++i)
    os << "<line x1=\"" << cv.x(i) << "\" y1=\"" << cv.y(lo_y) << "\" x2=\"" << cv.x(i) << "\" y2=\""
       << cv.y(hi_y) << "\"/>\n";
  for (long j = lo_y; j <= hi_y; ++j)
    os << "<line x1=\"" << cv.x(lo_x) << "\" y1=\"" << cv.y(j) << "\" x2=\"" << cv.x(lo_x + span)
       << "\" y2=\"" << cv.y(j) << "\"/>\n";
  os << "</g>\n";

  // Rays are drawn until they leave the plotted box.
  auto ray = [&](const IntVector& g, const char* id, const char* color, double width) {
    const double gx = to_double(g[0]), gy = to_double(g[1]);
    double t = 1e9;
    if (gx > 0) t = std::min(t, hi_x / gx);
    if (gx < 0) t = std::min(t, lo_x / gx);
    if (gy > 0) t = std::min(t, hi_y / gy);
    if (gy < 0) t = std::min(t, lo_y / gy);
    os << "<line class=\"" << id << "\" x1=\"" << cv.x(0) << "\" y1=\"" << cv.y(0) << "\" x2=\""
       << cv.x(gx * t) << "\" y2=\"" << cv.y(gy * t) << "\" stroke=\"" << color << "\" stroke-width=\""
       << width << "\"/>\n";
  };
  os << "<g id=\"eff\">\n";
  for (const auto& g : eff) ray(g, "eff", "#1f4e9c", 4);
  os << "</g>\n<g id=\"nef\">\n";
  for (const auto& g : nef) ray(g, "nef", "#c0392b", 2);
  os << "</g>\n";

  os << "<g id=\"zonotope\" stroke=\"#2e8b57\" stroke-width=\"2\">\n";
  os << "<polygon fill=\"#2e8b57\" fill-opacity=\"0.15\" stroke=\"none\" points=\"";
  for (std::size_t i = 0; i < hull.size(); ++i)
    os << (i ? " " : "") << cv.x(to_double(hull[i].first)) << "," << cv.y(to_double(hull[i].second));
  os << "\"/>\n";
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& a = hull[i];
    const Point& b = hull[(i + 1) % hull.size()];
    const RatVector mid{ratio(a.first + b.first, 2), ratio(a.second + b.second, 2)};
    const bool closed = half_open_combination(classes, mid).has_value();
    os << "<line x1=\"" << cv.x(to_double(a.first)) << "\" y1=\"" << cv.y(to_double(a.second))
       << "\" x2=\"" << cv.x(to_double(b.first)) << "\" y2=\"" << cv.y(to_double(b.second)) << "\""
       << (closed ? "" : " stroke-dasharray=\"8,6\"") << "/>\n";
  }
  os << "</g>\n";

  os << "<g id=\"fsupp\" fill=\"#7b2d8b\">\n";
  for (const auto& e : support) {
    os << "<circle class=\"fsupp\" cx=\"" << cv.x(to_double(e.cls.coords[0])) << "\" cy=\""
       << cv.y(to_double(e.cls.coords[1])) << "\" r=\"7\"/>\n";
  }
  os << "</g>\n";

  os << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"16\" fill=\"black\">\n";
  std::map<std::pair<long, long>, std::string> labels;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto& text = labels[{classes[i][0].get_si(), classes[i][1].get_si()}];
    text += (text.empty() ? "D" : ",D") + std::to_string(i + 1);
  }
  for (const auto& [at, text] : labels) {
    os << "<circle cx=\"" << cv.x(at.first) << "\" cy=\"" << cv.y(at.second)
       << "\" r=\"3\" fill=\"black\"/>\n";
    os << "<text x=\"" << cv.x(at.first) + 8 << "\" y=\"" << cv.y(at.second) - 8 << "\">" << text
       << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace toricfrob

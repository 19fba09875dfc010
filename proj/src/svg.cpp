#include "hypertsp/io.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

// Poincare view: geodesics and hypercycles are Euclidean circular arcs, each
// drawn exactly as the circle through its two endpoints and one interior point.

namespace hypertsp {

namespace {

constexpr double kSize = 640.0;
constexpr double kCenter = kSize / 2.0;
constexpr double kScale = 300.0;

struct Screen {
    double x, y;
};

Screen to_screen(Complex z) { return {kCenter + kScale * z.real(), kCenter - kScale * z.imag()}; }

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

double orient(Screen a, Screen b, Screen c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

std::string arc_path(Complex from, Complex mid, Complex to) {
    const Screen a = to_screen(from);
    const Screen m = to_screen(mid);
    const Screen b = to_screen(to);
    std::string d = "M " + num(a.x) + " " + num(a.y) + " ";
    const double o = orient(a, m, b);
    const double span = std::hypot(b.x - a.x, b.y - a.y) + std::hypot(m.x - a.x, m.y - a.y);
    if (std::abs(o) <= 1e-9 * span * span) return d + "L " + num(b.x) + " " + num(b.y);

    // Circumcenter of a, m, b.
    const double den = 2.0 * (a.x * (m.y - b.y) + m.x * (b.y - a.y) + b.x * (a.y - m.y));
    const double a2 = a.x * a.x + a.y * a.y, m2 = m.x * m.x + m.y * m.y, b2 = b.x * b.x + b.y * b.y;
    const Screen c{(a2 * (m.y - b.y) + m2 * (b.y - a.y) + b2 * (a.y - m.y)) / den,
                   (a2 * (b.x - m.x) + m2 * (a.x - b.x) + b2 * (m.x - a.x)) / den};
    const double r = std::hypot(a.x - c.x, a.y - c.y);
    const bool large = (orient(a, b, c) > 0) == (orient(a, b, m) > 0);
    const bool sweep = o > 0;
    return d + "A " + num(r) + " " + num(r) + " 0 " + (large ? "1" : "0") + " " + (sweep ? "1" : "0") +
           " " + num(b.x) + " " + num(b.y);
}

std::string path_element(const std::string& d, const char* cls) {
    return "  <path class=\"" + std::string(cls) + "\" d=\"" + d + "\"/>\n";
}

std::string geodesic_segment(const PoincarePoint& a, const PoincarePoint& b, const char* cls) {
    return path_element(arc_path(a.z(), geodesic_point(a, b, 0.5).z(), b.z()), cls);
}

std::string full_line(const HLine& line, const char* cls) {
    const Complex mid = DiskFrame::aligned(line).from_frame(0.0);
    return path_element(arc_path(line.first(), mid, line.second()), cls);
}

} // namespace

std::string separator_svg(const Instance& inst, const SeparatorRegion& region,
                          const std::optional<Tour>& tour) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
        << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
    out << "  <style>path{fill:none;stroke-width:1.2}.disk{fill:none;stroke:#000}"
           ".line{stroke:#1f5fbf}.cone{stroke:#999;stroke-dasharray:4 3}"
           ".region{stroke:#c0392b;stroke-width:1.6}.tour{stroke:#2e8b57}"
           ".pt{fill:#000}.apex{fill:#c0392b}</style>\n";
    out << "  <circle class=\"disk\" cx=\"" << num(kCenter) << "\" cy=\"" << num(kCenter) << "\" r=\""
        << num(kScale) << "\"/>\n";

    if (tour && tour->order.size() >= 2) {
        const auto& o = tour->order;
        for (std::size_t i = 0; i < o.size(); ++i)
            out << geodesic_segment(inst.point(o[i]), inst.point(o[(i + 1) % o.size()]), "tour");
    }

    const DoubleCone& cone = region.cone;
    out << full_line(HLine::through_point_at_angle(cone.apex, cone.axis_angle + cone.half_angle), "cone");
    out << full_line(HLine::through_point_at_angle(cone.apex, cone.axis_angle - cone.half_angle), "cone");
    out << full_line(region.line(), "line");

    // R: the two perpendicular sides and the two hypercycle arcs.
    out << geodesic_segment(region.a_t, region.b_t, "region");
    out << geodesic_segment(region.a_t_prime, region.b_t_prime, "region");
    const double h = std::tanh(0.5 * region.rho);
    out << path_element(arc_path(region.a_t.z(), region.frame.from_frame({0.0, h}), region.b_t_prime.z()),
                        "region");
    out << path_element(arc_path(region.b_t.z(), region.frame.from_frame({0.0, -h}), region.a_t_prime.z()),
                        "region");

    for (const auto& p : inst.points()) {
        const Screen s = to_screen(p.z());
        out << "  <circle class=\"pt\" cx=\"" << num(s.x) << "\" cy=\"" << num(s.y) << "\" r=\"3\"/>\n";
    }
    const Screen q = to_screen(cone.apex.z());
    out << "  <circle class=\"apex\" cx=\"" << num(q.x) << "\" cy=\"" << num(q.y) << "\" r=\"3.5\"/>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace hypertsp

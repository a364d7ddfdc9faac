#include "bnet/geometry.hpp"

#include <algorithm>
#include <vector>

namespace bnet {

double normalize_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    // fmod can round back up to the period itself
    if (t >= kTwoPi) t = 0.0;
    return t;
}

Rect::Rect(Point2 c, double len, double wid, double theta, std::optional<double> h)
    : center(c), length(len), width(wid), orientation(normalize_angle(theta)), height(h) {
    if (!(length > 0.0) || !std::isfinite(length))
        throw std::invalid_argument("Rect: length must be positive and finite");
    if (width < 0.0 || !std::isfinite(width))
        throw std::invalid_argument("Rect: width must be nonnegative and finite");
    if (height && (*height < 0.0 || !std::isfinite(*height)))
        throw std::invalid_argument("Rect: height mark must be nonnegative and finite");
}

std::array<Point2, 4> Rect::corners() const {
    const Point2 el = 0.5 * length * axisLength();
    const Point2 ew = 0.5 * width * axisWidth();
    return {center + el + ew, center + el - ew, center - el - ew, center - el + ew};
}

bool rect_contains_point(const Rect& r, Point2 q) {
    const Point2 d = q - r.center;
    const double u = dot(d, r.axisLength());
    const double v = dot(d, r.axisWidth());
    return std::abs(u) <= 0.5 * r.length && std::abs(v) <= 0.5 * r.width;
}

double point_segment_distance(Point2 q, const Segment& s) {
    const Point2 d = s.b - s.a;
    const double l2 = dot(d, d);
    if (l2 == 0.0) return norm(q - s.a);
    double t = dot(q - s.a, d) / l2;
    t = std::clamp(t, 0.0, 1.0);
    return norm(q - s.at(t));
}

namespace {

// Clips the segment parameter interval against one slab |coord| <= half.
// Returns false when the interval becomes empty.
bool clip_slab(double p0, double p1, double half, double& tLo, double& tHi) {
    const double d = p1 - p0;
    if (d == 0.0) return std::abs(p0) <= half;
    double t0 = (-half - p0) / d;
    double t1 = (half - p0) / d;
    if (t0 > t1) std::swap(t0, t1);
    tLo = std::max(tLo, t0);
    tHi = std::min(tHi, t1);
    return tLo <= tHi;
}

// Clipped parameter interval of the segment inside the rectangle, in the
// rect frame. Empty optional when they do not overlap.
std::optional<std::pair<double, double>> clip_segment(const Segment& s, const Rect& r) {
    const Point2 eu = r.axisLength();
    const Point2 ev = r.axisWidth();
    const Point2 da = s.a - r.center;
    const Point2 db = s.b - r.center;
    const double u0 = dot(da, eu), u1 = dot(db, eu);
    const double v0 = dot(da, ev), v1 = dot(db, ev);

    double tLo = 0.0, tHi = 1.0;
    if (!clip_slab(u0, u1, 0.5 * r.length, tLo, tHi)) return std::nullopt;
    if (!clip_slab(v0, v1, 0.5 * r.width, tLo, tHi)) return std::nullopt;
    return std::make_pair(tLo, tHi);
}

// Andrew monotone chain; strict turns so collinear interior points drop out.
std::vector<Point2> convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Point2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

bool point_on_segment(Point2 q, Point2 a, Point2 b) {
    if (cross(b - a, q - a) != 0.0) return false;
    const double t = dot(q - a, b - a);
    return t >= 0.0 && t <= dot(b - a, b - a);
}

bool convex_contains(const std::vector<Point2>& poly, Point2 q) {
    const std::size_t n = poly.size();
    if (n == 0) return false;
    if (n == 1) return poly[0].x == q.x && poly[0].y == q.y;
    if (n == 2) return point_on_segment(q, poly[0], poly[1]);
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = poly[i];
        const Point2 b = poly[(i + 1) % n];
        if (cross(b - a, q - a) < 0.0) return false;  // CCW hull, boundary allowed
    }
    return true;
}

}  // namespace

bool segment_intersects_rect(const Segment& s, const Rect& r) {
    return clip_segment(s, r).has_value();
}

bool segment_intersects_rect_dilation(const Segment& s, const Rect& r) {
    const Point2 el = 0.5 * r.length * r.axisLength();
    const Point2 ew = 0.5 * r.width * r.axisWidth();
    std::vector<Point2> pts;
    pts.reserve(8);
    for (Point2 base : {s.a, s.b}) {
        pts.push_back(base + el + ew);
        pts.push_back(base + el - ew);
        pts.push_back(base - el + ew);
        pts.push_back(base - el - ew);
    }
    return convex_contains(convex_hull(std::move(pts)), r.center);
}

double dilation_area(double R, double len, double wid, double theta) {
    if (R < 0.0 || len < 0.0 || wid < 0.0)
        throw std::invalid_argument("dilation_area: negative dimension");
    return R * len * std::abs(std::sin(theta)) + R * wid * std::abs(std::cos(theta)) + len * wid;
}

std::size_t count_intersections(const Segment& s, std::span<const Rect> blockages) {
    std::size_t n = 0;
    for (const Rect& r : blockages) {
        if (point_segment_distance(r.center, s) > r.halfDiagonal()) continue;
        if (segment_intersects_rect(s, r)) ++n;
    }
    return n;
}

std::optional<double> segment_rect_entry(const Segment& s, const Rect& r) {
    const auto iv = clip_segment(s, r);
    if (!iv) return std::nullopt;
    return iv->first;
}

}  // namespace bnet

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>

namespace bnet {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }

struct Segment {
    Point2 a;
    Point2 b;

    double length() const { return norm(b - a); }
    Point2 at(double t) const { return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; }
};

// Normalizes an angle into [0, 2*pi).
double normalize_angle(double theta);

// Oriented rectangle: center, side lengths, orientation of the long side
// against the x axis (normalized to [0, 2*pi) on construction), and an
// optional height mark. width == 0 degenerates to a line segment.
struct Rect {
    Point2 center;
    double length = 1.0;
    double width = 1.0;
    double orientation = 0.0;
    std::optional<double> height;

    Rect() = default;
    Rect(Point2 c, double len, double wid, double theta, std::optional<double> h = {});

    // Unit axes of the length and width directions.
    Point2 axisLength() const { return {std::cos(orientation), std::sin(orientation)}; }
    Point2 axisWidth() const { return {-std::sin(orientation), std::cos(orientation)}; }

    std::array<Point2, 4> corners() const;

    // Radius of the bounding circle around the center.
    double halfDiagonal() const { return 0.5 * std::hypot(length, width); }
};

// Closed-rectangle point containment (boundary counts).
bool rect_contains_point(const Rect& r, Point2 q);

// Distance from a point to a closed segment.
double point_segment_distance(Point2 q, const Segment& s);

// Segment/rectangle overlap test via slab clipping in the rectangle frame.
// Closed-set convention: touching counts as intersecting.
bool segment_intersects_rect(const Segment& s, const Rect& r);

// Independent route to the same predicate: the rectangle hits the segment
// iff its center lies inside the dilation (Minkowski sum) of the segment by
// the centered rectangle, a convex hexagon. Kept separate for cross-testing.
bool segment_intersects_rect_dilation(const Segment& s, const Rect& r);

// Area of the Minkowski sum of a segment of length R with a centered
// rectangle (len x wid) rotated theta against the segment:
//   R*len*|sin theta| + R*wid*|cos theta| + len*wid.
double dilation_area(double R, double len, double wid, double theta);

// Number of rectangles intersecting the segment. Uses an exact bounding
// circle prefilter before the full test.
std::size_t count_intersections(const Segment& s, std::span<const Rect> blockages);

// Smallest t in [0, 1] with s.at(t) inside the rectangle, if any.
std::optional<double> segment_rect_entry(const Segment& s, const Rect& r);

}  // namespace bnet

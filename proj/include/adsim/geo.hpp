#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace adsim {

// Mean spherical earth radius, meters.
inline constexpr double kEarthRadiusM = 6371008.8;
inline constexpr double kMetersPerMile = 1609.344;

// Ring pins are dropped at this multiple of the circle radius from the
// target. Must stay in (1, 2): far enough out that the target survives,
// close enough that the pin overlaps the include perimeter. 1.04 keeps
// the leftover sliver under 160 m across for an 8-pin ring.
inline constexpr double kDefaultRingSpacingFactor = 1.04;

struct Coordinate {
  double lat_deg = 0.0;
  double lon_deg = 0.0;

  friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

inline double normalize_longitude(double lon_deg) {
  double lon = std::fmod(lon_deg + 180.0, 360.0);
  if (lon < 0) lon += 360.0;
  return lon - 180.0;
}

inline bool coordinate_in_range(const Coordinate& c) {
  return c.lat_deg >= -90.0 && c.lat_deg <= 90.0 && c.lon_deg >= -180.0 && c.lon_deg < 180.0;
}

struct Circle {
  Coordinate center;
  double radius_m = 0.0;

  friend bool operator==(const Circle&, const Circle&) = default;
};

// Include/exclude composition of circles. A point is in the region iff
// it lies in at least one include and in no exclude.
struct LocationSpec {
  std::vector<Circle> includes;
  std::vector<Circle> excludes;

  friend bool operator==(const LocationSpec&, const LocationSpec&) = default;
};

inline double to_radians(double deg) { return deg * std::numbers::pi / 180.0; }
inline double to_degrees(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Great-circle (haversine) distance in meters on the spherical earth.
inline double distance(const Coordinate& a, const Coordinate& b) {
  const double lat1 = to_radians(a.lat_deg);
  const double lat2 = to_radians(b.lat_deg);
  const double dlat = to_radians(b.lat_deg - a.lat_deg);
  const double dlon = to_radians(b.lon_deg - a.lon_deg);
  const double sl = std::sin(dlat / 2.0);
  const double so = std::sin(dlon / 2.0);
  double h = sl * sl + std::cos(lat1) * std::cos(lat2) * so * so;
  h = std::clamp(h, 0.0, 1.0);
  return 2.0 * kEarthRadiusM * std::atan2(std::sqrt(h), std::sqrt(1.0 - h));
}

/// Point reached from `origin` after traveling `distance_m` along the
/// initial bearing (degrees clockwise from north).
inline Coordinate destination_point(const Coordinate& origin, double bearing_deg,
                                    double distance_m) {
  const double lat1 = to_radians(origin.lat_deg);
  const double lon1 = to_radians(origin.lon_deg);
  const double brg = to_radians(bearing_deg);
  const double ang = distance_m / kEarthRadiusM;
  const double lat2 =
      std::asin(std::sin(lat1) * std::cos(ang) + std::cos(lat1) * std::sin(ang) * std::cos(brg));
  const double lon2 =
      lon1 + std::atan2(std::sin(brg) * std::sin(ang) * std::cos(lat1),
                        std::cos(ang) - std::sin(lat1) * std::sin(lat2));
  return Coordinate{to_degrees(lat2), normalize_longitude(to_degrees(lon2))};
}

inline bool circle_contains(const Circle& c, const Coordinate& p) {
  return distance(c.center, p) <= c.radius_m;
}

/// Membership test: inside at least one include and zero excludes.
/// Exclusion dominates.
inline bool region_contains(const LocationSpec& spec, const Coordinate& p) {
  for (const auto& ex : spec.excludes)
    if (circle_contains(ex, p)) return false;
  for (const auto& inc : spec.includes)
    if (circle_contains(inc, p)) return true;
  return false;
}

/// Every violation of the platform's location rules; empty means valid.
inline std::vector<std::string> validate_location_spec(const LocationSpec& spec,
                                                       double min_radius_m) {
  std::vector<std::string> violations;
  if (spec.includes.empty()) violations.push_back("location spec has no include circles");
  auto check = [&](const Circle& c, const char* role, std::size_t i) {
    if (c.radius_m < min_radius_m)
      violations.push_back(std::string(role) + " circle " + std::to_string(i) +
                           " radius below platform minimum");
    if (!coordinate_in_range(c.center))
      violations.push_back(std::string(role) + " circle " + std::to_string(i) +
                           " center out of range");
  };
  for (std::size_t i = 0; i < spec.includes.size(); ++i) check(spec.includes[i], "include", i);
  for (std::size_t i = 0; i < spec.excludes.size(); ++i) check(spec.excludes[i], "exclude", i);
  return violations;
}

/// Builds the pin-ring fence: one minimum-radius include centered on the
/// target plus `ring_size` minimum-radius excludes whose centers sit at
/// spacing_factor * radius from the target, evenly spread by bearing.
/// The excludes bite off everything except a sliver around the target.
/// The result always contains the target and always satisfies the
/// platform's radius floor.
inline LocationSpec construct_geofence(const Coordinate& target, int ring_size,
                                       double min_radius_m,
                                       double spacing_factor = kDefaultRingSpacingFactor) {
  if (ring_size < 3) throw std::invalid_argument("construct_geofence: ring_size must be >= 3");
  if (!(spacing_factor > 1.0 && spacing_factor < 2.0))
    throw std::invalid_argument("construct_geofence: spacing_factor must be in (1, 2)");
  if (!coordinate_in_range(target))
    throw std::invalid_argument("construct_geofence: target coordinate out of range");
  LocationSpec spec;
  spec.includes.push_back(Circle{target, min_radius_m});
  for (int k = 0; k < ring_size; ++k) {
    const double bearing = 360.0 * k / ring_size;
    spec.excludes.push_back(
        Circle{destination_point(target, bearing, spacing_factor * min_radius_m), min_radius_m});
  }
  return spec;
}

struct RegionMeasure {
  double area_m2 = 0.0;
  double max_width_m = 0.0;
};

namespace detail {

struct LatLonBox {
  double lat_min = 0, lat_max = 0, lon_min = 0, lon_max = 0;  // degrees
};

// Bounding box of the include circles. Longitude extent uses the exact
// spherical-cap formula; falls back to the full band near the poles.
inline LatLonBox bounding_box(const std::vector<Circle>& includes) {
  LatLonBox box{90.0, -90.0, 180.0, -180.0};
  for (const auto& c : includes) {
    const double ang = c.radius_m / kEarthRadiusM;
    const double lat = to_radians(c.center.lat_deg);
    box.lat_min = std::min(box.lat_min, std::max(-90.0, c.center.lat_deg - to_degrees(ang)));
    box.lat_max = std::max(box.lat_max, std::min(90.0, c.center.lat_deg + to_degrees(ang)));
    double dlon;
    if (std::cos(lat) <= std::sin(ang)) {
      dlon = 180.0;
    } else {
      dlon = to_degrees(std::asin(std::sin(ang) / std::cos(lat)));
    }
    box.lon_min = std::min(box.lon_min, c.center.lon_deg - dlon);
    box.lon_max = std::max(box.lon_max, c.center.lon_deg + dlon);
  }
  return box;
}

// Max pairwise distance via convex hull of the locally projected hits;
// quadratic scan over hull vertices only.
inline double hit_diameter(const std::vector<Coordinate>& hits) {
  if (hits.size() < 2) return 0.0;
  double lat0 = 0, lon0 = 0;
  for (const auto& h : hits) {
    lat0 += h.lat_deg;
    lon0 += h.lon_deg;
  }
  lat0 /= static_cast<double>(hits.size());
  lon0 /= static_cast<double>(hits.size());
  const double coslat = std::cos(to_radians(lat0));

  struct P {
    double x, y;
    std::size_t idx;
  };
  std::vector<P> pts;
  pts.reserve(hits.size());
  for (std::size_t i = 0; i < hits.size(); ++i)
    pts.push_back({(hits[i].lon_deg - lon0) * coslat, hits[i].lat_deg - lat0, i});
  std::sort(pts.begin(), pts.end(), [](const P& a, const P& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  auto cross = [](const P& o, const P& a, const P& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::vector<P> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k > 1 ? k - 1 : k);

  double best = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i)
    for (std::size_t j = i + 1; j < hull.size(); ++j)
      best = std::max(best, distance(hits[hull[i].idx], hits[hull[j].idx]));
  return best;
}

}  // namespace detail

/// Monte Carlo estimate of region area and maximum width. Samples are
/// drawn area-uniformly over the bounding box of the include circles;
/// width is the diameter of the hit set. Deterministic for a given seed.
inline RegionMeasure measure_region(const LocationSpec& spec, std::size_t samples,
                                    std::uint64_t seed) {
  if (samples < 1000) throw std::invalid_argument("measure_region: need at least 1000 samples");
  if (spec.includes.empty()) return RegionMeasure{};

  const auto box = detail::bounding_box(spec.includes);
  const double sin_lo = std::sin(to_radians(box.lat_min));
  const double sin_hi = std::sin(to_radians(box.lat_max));
  const double lon_span_rad = to_radians(box.lon_max - box.lon_min);
  const double box_area = kEarthRadiusM * kEarthRadiusM * (sin_hi - sin_lo) * lon_span_rad;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u_sin(sin_lo, sin_hi);
  std::uniform_real_distribution<double> u_lon(box.lon_min, box.lon_max);

  std::vector<Coordinate> hits;
  for (std::size_t i = 0; i < samples; ++i) {
    Coordinate p{to_degrees(std::asin(u_sin(rng))), u_lon(rng)};
    if (region_contains(spec, p)) hits.push_back(p);
  }

  RegionMeasure m;
  m.area_m2 = box_area * static_cast<double>(hits.size()) / static_cast<double>(samples);
  m.max_width_m = detail::hit_diameter(hits);
  return m;
}

}  // namespace adsim

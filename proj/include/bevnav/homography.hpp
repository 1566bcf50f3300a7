#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>

#include "bevnav/raster.hpp"

namespace bevnav {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Exactly four point pairs: perspective pixels on the left, BEV pixels on the
// right (1 BEV px = 1 mm of ground). No three points of either side may be
// collinear.
struct Correspondences {
    std::array<Point, 4> src;
    std::array<Point, 4> dst;
};

// Metric BEV canvas; the pixel-to-millimeter ratio is fixed at 1:1, so the
// canvas is width_mm x height_mm pixels.
struct BevCanvas {
    int width_mm = 2000;
    int height_mm = 1900;
};

// 3x3 projective transform, canonically scaled so m(2,2) == 1. When that
// entry of the solved matrix is (near) zero the origin maps to infinity; the
// matrix is then scaled to unit Frobenius norm and flagged instead.
struct Homography {
    Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
    bool origin_maps_to_infinity = false;

    std::array<double, 9> to_array() const;
    static Homography from_array(const std::array<double, 9>& values);
};

enum class Sampling { nearest, bilinear };

// Canonical scaling plus the invertibility check shared by every constructor
// of a Homography value.
Homography normalize(const Eigen::Matrix3d& m);

// Solves the 8-equation linear system contributed by the four pairs (two rows
// per pair). Throws on collinear triples or an ill-conditioned configuration.
Homography estimate(const Correspondences& c);

// Applies h to p in homogeneous coordinates; throws if p maps to infinity.
Point project(const Homography& h, const Point& p);

// Same, but reports a point at infinity as nullopt instead of throwing.
std::optional<Point> try_project(const Homography& h, const Point& p);

Homography invert(const Homography& h);

// Inverse-mapped warps: every destination pixel center is pulled back through
// invert(h) and sampled from the source. Destinations whose source falls
// outside the raster get the fill value (labels: kOutOfViewClass, costs: the
// configured out-of-view cost). Label rasters only admit nearest sampling.
LabelImage warp(const LabelImage& src, const Homography& h, int out_width, int out_height,
                Sampling sampling);
LabelImage warp(const LabelImage& src, const Homography& h, const BevCanvas& canvas,
                Sampling sampling);
CostMap warp(const CostMap& src, const Homography& h, const BevCanvas& canvas, Sampling sampling,
             double out_of_view_cost);

}  // namespace bevnav

#include "bevnav/homography.hpp"

#include <cmath>
#include <optional>

#include "bevnav/errors.hpp"

namespace bevnav {
namespace {

constexpr double kSingularEps = 1e-12;

// Largest pairwise span, used to make the collinearity test scale-free.
double point_spread(const std::array<Point, 4>& pts) {
    double spread = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            spread = std::max(spread, std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y));
        }
    }
    return spread;
}

bool has_collinear_triple(const std::array<Point, 4>& pts) {
    const double spread = point_spread(pts);
    const double eps = 1e-9 * spread * spread;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            for (int k = j + 1; k < 4; ++k) {
                const double cross = (pts[j].x - pts[i].x) * (pts[k].y - pts[i].y) -
                                     (pts[j].y - pts[i].y) * (pts[k].x - pts[i].x);
                if (std::abs(cross) <= eps) return true;
            }
        }
    }
    return false;
}

// Nullspace route for the rare exact solutions with m(2,2) == 0, where the
// 8x8 system is singular even though the points are in general position.
Eigen::Matrix3d solve_nullspace(const Correspondences& c) {
    Eigen::Matrix<double, 8, 9> a = Eigen::Matrix<double, 8, 9>::Zero();
    for (int i = 0; i < 4; ++i) {
        const Point& s = c.src[i];
        const Point& d = c.dst[i];
        a.row(2 * i) << s.x, s.y, 1.0, 0.0, 0.0, 0.0, -d.x * s.x, -d.x * s.y, -d.x;
        a.row(2 * i + 1) << 0.0, 0.0, 0.0, s.x, s.y, 1.0, -d.y * s.x, -d.y * s.y, -d.y;
    }
    Eigen::JacobiSVD<Eigen::Matrix<double, 8, 9>> svd(a, Eigen::ComputeFullV);
    const Eigen::Matrix<double, 9, 1> h = svd.matrixV().col(8);
    Eigen::Matrix3d m;
    m << h(0), h(1), h(2), h(3), h(4), h(5), h(6), h(7), h(8);
    return m;
}

}  // namespace

std::optional<Point> try_project(const Homography& h, const Point& p) {
    const double w = h.m(2, 0) * p.x + h.m(2, 1) * p.y + h.m(2, 2);
    if (std::abs(w) <= kSingularEps) return std::nullopt;
    return Point{(h.m(0, 0) * p.x + h.m(0, 1) * p.y + h.m(0, 2)) / w,
                 (h.m(1, 0) * p.x + h.m(1, 1) * p.y + h.m(1, 2)) / w};
}

std::array<double, 9> Homography::to_array() const {
    std::array<double, 9> out;
    for (int r = 0; r < 3; ++r) {
        for (int col = 0; col < 3; ++col) out[r * 3 + col] = m(r, col);
    }
    return out;
}

Homography Homography::from_array(const std::array<double, 9>& values) {
    Eigen::Matrix3d m;
    for (int r = 0; r < 3; ++r) {
        for (int col = 0; col < 3; ++col) m(r, col) = values[r * 3 + col];
    }
    return normalize(m);
}

Homography normalize(const Eigen::Matrix3d& m) {
    Homography h;
    if (std::abs(m(2, 2)) > kSingularEps) {
        h.m = m / m(2, 2);
        h.m(2, 2) = 1.0;  // kill residual rounding so golden files stay exact
    } else {
        h.m = m / m.norm();
        h.origin_maps_to_infinity = true;
    }
    if (std::abs(h.m.determinant()) <= kSingularEps) {
        throw Error(Stage::calibration, "homography matrix is singular");
    }
    return h;
}

Homography estimate(const Correspondences& c) {
    if (has_collinear_triple(c.src) || has_collinear_triple(c.dst)) {
        throw Error(Stage::calibration,
                    "degenerate correspondences: three points are collinear");
    }

    // Two equations per pair with h(2,2) pinned to 1:
    //   [x y 1 0 0 0 -ux -uy] . h = u
    //   [0 0 0 x y 1 -vx -vy] . h = v
    Eigen::Matrix<double, 8, 8> a = Eigen::Matrix<double, 8, 8>::Zero();
    Eigen::Matrix<double, 8, 1> b;
    for (int i = 0; i < 4; ++i) {
        const Point& s = c.src[i];
        const Point& d = c.dst[i];
        a.row(2 * i) << s.x, s.y, 1.0, 0.0, 0.0, 0.0, -d.x * s.x, -d.x * s.y;
        a.row(2 * i + 1) << 0.0, 0.0, 0.0, s.x, s.y, 1.0, -d.y * s.x, -d.y * s.y;
        b(2 * i) = d.x;
        b(2 * i + 1) = d.y;
    }

    Eigen::FullPivLU<Eigen::Matrix<double, 8, 8>> lu(a);
    Eigen::Matrix3d m;
    if (lu.isInvertible()) {
        const Eigen::Matrix<double, 8, 1> h = lu.solve(b);
        m << h(0), h(1), h(2), h(3), h(4), h(5), h(6), h(7), 1.0;
    } else {
        m = solve_nullspace(c);
    }
    Homography result = normalize(m);

    for (int i = 0; i < 4; ++i) {
        const auto p = try_project(result, c.src[i]);
        if (!p || std::hypot(p->x - c.dst[i].x, p->y - c.dst[i].y) > 1e-6) {
            throw Error(Stage::calibration,
                        "correspondences are too ill-conditioned for a reliable estimate");
        }
    }
    return result;
}

Point project(const Homography& h, const Point& p) {
    const auto out = try_project(h, p);
    if (!out) {
        throw Error(Stage::warp, "point maps to infinity under this homography");
    }
    return *out;
}

Homography invert(const Homography& h) {
    if (std::abs(h.m.determinant()) <= kSingularEps) {
        throw Error(Stage::calibration, "homography matrix is singular");
    }
    return normalize(h.m.inverse().eval());
}

namespace {

// Shared inverse-mapping loop. sample(sx, sy) fills one destination pixel
// from the continuous source location; out-of-range destinations are filled
// by the caller beforehand.
template <typename Raster, typename Sampler>
void warp_pull(Raster& dst, const Homography& inv, Sampler&& sample) {
    for (int y = 0; y < dst.height; ++y) {
        for (int x = 0; x < dst.width; ++x) {
            const auto s = try_project(inv, Point{x + 0.5, y + 0.5});
            if (s) sample(x, y, s->x, s->y);
        }
    }
}

}  // namespace

LabelImage warp(const LabelImage& src, const Homography& h, int out_width, int out_height,
                Sampling sampling) {
    if (sampling != Sampling::nearest) {
        throw Error(Stage::warp, "label rasters require nearest sampling; class ids must not be blended");
    }
    if (out_width <= 0 || out_height <= 0) {
        throw Error(Stage::warp, "warp canvas has non-positive size");
    }
    LabelImage dst = LabelImage::filled(out_width, out_height, kOutOfViewClass);
    const Homography inv = invert(h);
    warp_pull(dst, inv, [&](int x, int y, double sx, double sy) {
        const int ix = static_cast<int>(std::floor(sx));
        const int iy = static_cast<int>(std::floor(sy));
        if (ix >= 0 && ix < src.width && iy >= 0 && iy < src.height) {
            dst.at(x, y) = src.at(ix, iy);
        }
    });
    return dst;
}

LabelImage warp(const LabelImage& src, const Homography& h, const BevCanvas& canvas,
                Sampling sampling) {
    return warp(src, h, canvas.width_mm, canvas.height_mm, sampling);
}

CostMap warp(const CostMap& src, const Homography& h, const BevCanvas& canvas, Sampling sampling,
             double out_of_view_cost) {
    if (!std::isfinite(out_of_view_cost) || out_of_view_cost < 0.0) {
        throw Error(Stage::warp, "out-of-view cost must be finite and non-negative");
    }
    CostMap dst = CostMap::filled(canvas.width_mm, canvas.height_mm, out_of_view_cost,
                                  CostMap::Space::bev);
    const Homography inv = invert(h);
    if (sampling == Sampling::nearest) {
        warp_pull(dst, inv, [&](int x, int y, double sx, double sy) {
            const int ix = static_cast<int>(std::floor(sx));
            const int iy = static_cast<int>(std::floor(sy));
            if (ix >= 0 && ix < src.width && iy >= 0 && iy < src.height) {
                dst.at(x, y) = src.at(ix, iy);
            }
        });
    } else {
        warp_pull(dst, inv, [&](int x, int y, double sx, double sy) {
            if (sx < 0.0 || sx >= src.width || sy < 0.0 || sy >= src.height) return;
            const double gx = sx - 0.5;
            const double gy = sy - 0.5;
            const int x0 = static_cast<int>(std::floor(gx));
            const int y0 = static_cast<int>(std::floor(gy));
            const double fx = gx - x0;
            const double fy = gy - y0;
            auto clamped = [&](int px, int py) {
                px = std::clamp(px, 0, src.width - 1);
                py = std::clamp(py, 0, src.height - 1);
                return src.at(px, py);
            };
            const double top = clamped(x0, y0) * (1.0 - fx) + clamped(x0 + 1, y0) * fx;
            const double bottom = clamped(x0, y0 + 1) * (1.0 - fx) + clamped(x0 + 1, y0 + 1) * fx;
            dst.at(x, y) = top * (1.0 - fy) + bottom * fy;
        });
    }
    return dst;
}

}  // namespace bevnav

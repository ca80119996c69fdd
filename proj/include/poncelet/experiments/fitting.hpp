#pragma once

/// \file
/// \brief Stationarity statistics and circle fitting for swept loci.

#include <cmath>
#include <span>
#include <stdexcept>

#include <Eigen/Dense>

#include "poncelet/core.hpp"

namespace poncelet::experiments {

struct StationarityReport {
    CPoint mean{0.0, 0.0};
    double max_deviation = 0.0;
    std::size_t count = 0;
};

/// Max distance of the points to their coordinate-wise mean.
inline StationarityReport stationarity(std::span<const CPoint> pts)
{
    if (pts.size() < 2)
        throw std::invalid_argument("stationarity: need at least 2 points");
    StationarityReport r;
    r.count = pts.size();
    for (CPoint p : pts)
        r.mean += p;
    r.mean /= static_cast<double>(pts.size());
    for (CPoint p : pts)
        r.max_deviation = std::max(r.max_deviation, std::abs(p - r.mean));
    return r;
}

inline double max_distance_to(std::span<const CPoint> pts, CPoint target)
{
    double m = 0.0;
    for (CPoint p : pts)
        m = std::max(m, std::abs(p - target));
    return m;
}

struct CircleFitResult {
    CPoint center{0.0, 0.0};
    double radius = 0.0;
    double rms = 0.0;
};

inline double circle_rms(std::span<const CPoint> pts, CPoint c, double r)
{
    double acc = 0.0;
    for (CPoint p : pts) {
        const double e = std::abs(p - c) - r;
        acc += e * e;
    }
    return std::sqrt(acc / static_cast<double>(pts.size()));
}

/// Taubin's algebraic fit (the generalized eigenproblem solved through its
/// characteristic polynomial by Newton from zero), followed by one
/// Gauss-Newton pass on the geometric distances.
inline CircleFitResult fit_circle(std::span<const CPoint> pts)
{
    if (pts.size() < 3)
        throw std::invalid_argument("fit_circle: need at least 3 points");
    const auto n = static_cast<double>(pts.size());
    CPoint centroid{0.0, 0.0};
    for (CPoint p : pts)
        centroid += p;
    centroid /= n;

    double mxx = 0, myy = 0, mxy = 0, mxz = 0, myz = 0, mzz = 0;
    for (CPoint p : pts) {
        const double x = p.real() - centroid.real();
        const double y = p.imag() - centroid.imag();
        const double z = x * x + y * y;
        mxx += x * x;
        myy += y * y;
        mxy += x * y;
        mxz += x * z;
        myz += y * z;
        mzz += z * z;
    }
    mxx /= n, myy /= n, mxy /= n, mxz /= n, myz /= n, mzz /= n;

    const double mz = mxx + myy;
    if (!(mz > 0.0))
        throw GeometryError("fit_circle: all points coincide");
    const double cov_xy = mxx * myy - mxy * mxy;
    const double var_z = mzz - mz * mz;
    const double a3 = 4.0 * mz;
    const double a2 = -3.0 * mz * mz - mzz;
    const double a1 = var_z * mz + 4.0 * cov_xy * mz - mxz * mxz - myz * myz;
    const double a0 = mxz * (mxz * myy - myz * mxy) + myz * (myz * mxx - mxz * mxy) - var_z * cov_xy;

    double x = 0.0;
    double y = a0;
    for (int it = 0; it < 50; ++it) {
        const double dy = a1 + x * (2.0 * a2 + 3.0 * a3 * x);
        if (dy == 0.0)
            break;
        const double xnew = x - y / dy;
        if (!std::isfinite(xnew) || xnew < 0.0)
            break;
        const double ynew = a0 + xnew * (a1 + xnew * (a2 + xnew * a3));
        if (std::abs(ynew) > std::abs(y))
            break;
        const bool done = std::abs(xnew - x) <= 1e-14 * std::max(1.0, std::abs(xnew));
        x = xnew;
        y = ynew;
        if (done)
            break;
    }

    const double det = x * x - x * mz + cov_xy;
    const double scale = mz * mz;
    if (std::abs(det) <= 1e-14 * scale)
        throw GeometryError("fit_circle: points are collinear");
    const CPoint c((mxz * (myy - x) - myz * mxy) / det / 2.0, (myz * (mxx - x) - mxz * mxy) / det / 2.0);

    CircleFitResult res;
    res.center = c + centroid;
    res.radius = std::sqrt(std::norm(c) + mz);
    if (!std::isfinite(res.radius) || res.radius > 1e8 * std::sqrt(mz))
        throw GeometryError("fit_circle: points are collinear");

    // One Gauss-Newton step on sum (|p - c| - r)^2.
    Eigen::Matrix3d jtj = Eigen::Matrix3d::Zero();
    Eigen::Vector3d jtr = Eigen::Vector3d::Zero();
    for (CPoint p : pts) {
        const CPoint d = p - res.center;
        const double dist = std::abs(d);
        if (dist == 0.0)
            continue;
        const Eigen::Vector3d j(-d.real() / dist, -d.imag() / dist, -1.0);
        const double r = dist - res.radius;
        jtj += j * j.transpose();
        jtr += j * r;
    }
    const Eigen::Vector3d step = jtj.ldlt().solve(-jtr);
    if (step.allFinite()) {
        const CPoint c2 = res.center + CPoint(step[0], step[1]);
        const double r2 = res.radius + step[2];
        if (r2 > 0.0 && circle_rms(pts, c2, r2) <= circle_rms(pts, res.center, res.radius)) {
            res.center = c2;
            res.radius = r2;
        }
    }
    res.rms = circle_rms(pts, res.center, res.radius);
    return res;
}

} // namespace poncelet::experiments

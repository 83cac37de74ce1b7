#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

// Coordinate conventions: the radiating surface lies in the yoz plane with
// the x-axis normal to it. The feed sits on the negative x-axis and the user
// terminal on the refraction side (x > 0). All quantities are SI (meters,
// watts, radians); unit conversions happen at the CLI boundary only.

namespace rrslink {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}

inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }

inline double dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

/// Refractive surface: m_count x n_count sub-wavelength elements of size
/// element_dy x element_dz, each applying a tunable phase with a fixed
/// refraction amplitude in (0, 1].
struct SurfaceGeometry {
    int m_count;
    int n_count;
    double element_dy;
    double element_dz;
    double refraction_amplitude;

    SurfaceGeometry(int m, int n, double dy, double dz, double amplitude)
        : m_count(m), n_count(n), element_dy(dy), element_dz(dz),
          refraction_amplitude(amplitude) {
        if (m < 1 || n < 1) throw std::invalid_argument("surface: element counts must be >= 1");
        if (!(dy > 0.0) || !(dz > 0.0))
            throw std::invalid_argument("surface: element dimensions must be positive");
        if (!(amplitude > 0.0) || !(amplitude <= 1.0))
            throw std::invalid_argument("surface: refraction amplitude must be in (0, 1]");
    }

    long long element_count() const {
        return static_cast<long long>(m_count) * n_count;
    }
    // aspect ratio is derived, never stored
    double aspect_ratio() const {
        return static_cast<double>(m_count) / static_cast<double>(n_count);
    }
    double width_y() const { return m_count * element_dy; }
    double width_z() const { return n_count * element_dz; }
};

/// Phased array: m_count x n_count omni elements with linear gain
/// element_gain, spaced element_dy x element_dz apart.
struct ArrayGeometry {
    int m_count;
    int n_count;
    double element_dy;
    double element_dz;
    double element_gain;

    ArrayGeometry(int m, int n, double dy, double dz, double gain)
        : m_count(m), n_count(n), element_dy(dy), element_dz(dz), element_gain(gain) {
        if (m < 1 || n < 1) throw std::invalid_argument("array: element counts must be >= 1");
        if (!(dy > 0.0) || !(dz > 0.0))
            throw std::invalid_argument("array: element spacings must be positive");
        if (!(gain > 0.0)) throw std::invalid_argument("array: element gain must be positive");
    }

    long long element_count() const {
        return static_cast<long long>(m_count) * n_count;
    }
    double aspect_ratio() const {
        return static_cast<double>(m_count) / static_cast<double>(n_count);
    }
    double width_y() const { return m_count * element_dy; }
    double width_z() const { return n_count * element_dz; }
};

/// Directional feed on the negative x-axis at the given distance from the
/// surface center. Pattern 2(alpha+1) cos^alpha(theta) over the front
/// hemisphere, zero behind.
struct FeedModel {
    double gain_exponent;  // alpha
    double distance;       // meters from surface center

    FeedModel(double alpha, double dist) : gain_exponent(alpha), distance(dist) {
        if (!(alpha >= 0.0)) throw std::invalid_argument("feed: gain exponent must be >= 0");
        if (!(dist > 0.0)) throw std::invalid_argument("feed: distance must be positive");
    }

    Vec3 position() const { return {-distance, 0.0, 0.0}; }
};

/// User terminal placement in spherical coordinates: zenith measured from the
/// z-axis, azimuth from the x-axis in the xy-plane. Must lie on the
/// refraction side (x direction cosine > 0).
struct UePlacement {
    double range;    // meters from surface center
    double zenith;   // radians
    double azimuth;  // radians
    double ue_gain;  // linear

    UePlacement(double r, double theta, double phi, double gain)
        : range(r), zenith(theta), azimuth(phi), ue_gain(gain) {
        if (!(r > 0.0)) throw std::invalid_argument("ue: range must be positive");
        if (!(gain > 0.0)) throw std::invalid_argument("ue: gain must be positive");
        if (!(dir_x() > 0.0))
            throw std::invalid_argument("ue: placement must have positive x direction cosine");
    }

    // direction cosines of the unit vector from the surface center to the UE
    double dir_x() const { return std::sin(zenith) * std::cos(azimuth); }
    double dir_y() const { return std::sin(zenith) * std::sin(azimuth); }
    double dir_z() const { return std::cos(zenith); }
    Vec3 direction() const { return {dir_x(), dir_y(), dir_z()}; }
};

/// Complete single-link scene: feed + surface + UE plus the shared link
/// budget (transmit power, noise power, wavelength). The same transmit power
/// and noise apply to any phased array compared against this scene.
struct Scene {
    FeedModel feed;
    SurfaceGeometry surface;
    UePlacement ue;
    double tx_power;     // watts
    double noise_power;  // watts
    double wavelength;   // meters

    Scene(FeedModel f, SurfaceGeometry s, UePlacement u, double p, double n2, double lambda)
        : feed(f), surface(s), ue(u), tx_power(p), noise_power(n2), wavelength(lambda) {
        if (!(p > 0.0)) throw std::invalid_argument("scene: tx power must be positive");
        if (!(n2 > 0.0)) throw std::invalid_argument("scene: noise power must be positive");
        if (!(lambda > 0.0)) throw std::invalid_argument("scene: wavelength must be positive");
    }
};

// Zero-centered symmetric element indexing: index offsets run over
// {-(M-1)/2, ..., (M-1)/2} in unit steps (half-integers for even M), so the
// grid is symmetric about the origin and odd grids have a true center
// element. Enumeration order is row-major: m outer, n inner.
void for_each_element(int m_count, int n_count, double dy, double dz,
                      const std::function<void(int m, int n, const Vec3& pos)>& fn);

std::vector<Vec3> element_positions(const SurfaceGeometry& geom);
std::vector<Vec3> element_positions(const ArrayGeometry& geom);

Vec3 ue_position(const UePlacement& placement);

}  // namespace rrslink

#include "rrslink/geometry.hpp"

namespace rrslink {

void for_each_element(int m_count, int n_count, double dy, double dz,
                      const std::function<void(int m, int n, const Vec3& pos)>& fn) {
    const double m_off = 0.5 * (m_count - 1);
    const double n_off = 0.5 * (n_count - 1);
    for (int m = 0; m < m_count; ++m) {
        const double y = (m - m_off) * dy;
        for (int n = 0; n < n_count; ++n) {
            const double z = (n - n_off) * dz;
            fn(m, n, Vec3{0.0, y, z});
        }
    }
}

namespace {

std::vector<Vec3> grid_positions(int m_count, int n_count, double dy, double dz) {
    std::vector<Vec3> out;
    out.reserve(static_cast<std::size_t>(m_count) * n_count);
    for_each_element(m_count, n_count, dy, dz,
                     [&](int, int, const Vec3& p) { out.push_back(p); });
    return out;
}

}  // namespace

std::vector<Vec3> element_positions(const SurfaceGeometry& geom) {
    return grid_positions(geom.m_count, geom.n_count, geom.element_dy, geom.element_dz);
}

std::vector<Vec3> element_positions(const ArrayGeometry& geom) {
    return grid_positions(geom.m_count, geom.n_count, geom.element_dy, geom.element_dz);
}

Vec3 ue_position(const UePlacement& placement) {
    return placement.range * placement.direction();
}

}  // namespace rrslink

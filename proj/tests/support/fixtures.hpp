#pragma once

#include <initializer_list>
#include <vector>

#include "conirep/cone.hpp"
#include "conirep/linalg.hpp"

namespace conirep::check {

inline Vector vec(std::initializer_list<double> xs) {
    Vector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v(i++) = x;
    return v;
}

inline Matrix mat(std::initializer_list<std::initializer_list<double>> rows) {
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = static_cast<Eigen::Index>(rows.begin()->size());
    Matrix a(r, c);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (double x : row) a(i, j++) = x;
        ++i;
    }
    return a;
}

inline StateMatrix wedge2() { return StateMatrix(mat({{1, 3, 1, 2}, {1, 2, 0, 1}})); }
inline StateMatrix simplicial3() { return StateMatrix(mat({{2, 3, 0}, {3, 1, 0}, {1, 1, 1}})); }

/// Index of the cone ray parallel to `direction`, or rays.size() if none.
inline std::size_t ray_index(const Cone& cone, const Vector& direction) {
    const Vector unit = direction.normalized();
    for (std::size_t k = 0; k < cone.rays.size(); ++k)
        if (cone.rays[k].dot(unit) > 1.0 - 1e-12) return k;
    return cone.rays.size();
}

inline RaySet ray_set(const Cone& cone, std::initializer_list<Vector> directions) {
    RaySet out;
    for (const Vector& d : directions) out.push_back(ray_index(cone, d));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace conirep::check

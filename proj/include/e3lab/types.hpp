#pragma once

#include <complex>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace e3lab {

using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using cplx = std::complex<double>;
using Vec6c = Eigen::Matrix<cplx, 6, 1>;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;

/// A point of e(3)^*: angular momentum M and the vector Gamma.
///
/// Coordinates are ordered (M1, M2, M3, G1, G2, G3) whenever the state is
/// flattened to a 6-vector.
struct E3State {
  Vec3 M = Vec3::Zero();
  Vec3 Gamma = Vec3::Zero();

  static E3State from_vector(const Vec6& v) {
    return {v.head<3>(), v.tail<3>()};
  }

  Vec6 to_vector() const {
    Vec6 v;
    v << M, Gamma;
    return v;
  }

  bool finite() const { return M.allFinite() && Gamma.allFinite(); }
};

/// Constants of the family: the moment of inertia I2 and the direction
/// (x0, 0, z0). alpha, beta and q are derived once at construction.
class SystemParams {
 public:
  /// Throws InvalidParameter when I2 <= 0, when x0 = z0 = 0, or when any
  /// value is not finite.
  SystemParams(double I2, double x0, double z0);

  double I2() const { return I2_; }
  double x0() const { return x0_; }
  double z0() const { return z0_; }
  /// sqrt(x0^2 + z0^2)
  double norm() const { return norm_; }
  double alpha() const { return x0_ / norm_; }
  double beta() const { return z0_ / norm_; }
  double q() const { return I2_ * norm_; }

 private:
  double I2_;
  double x0_;
  double z0_;
  double norm_;
};

}  // namespace e3lab

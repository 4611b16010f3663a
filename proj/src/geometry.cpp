#include "borinot/geometry.hpp"

#include <cmath>

namespace borinot {

Mat3 skew(const Vec3& v) {
  Mat3 m;
  m << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
  return m;
}

Quat quat_exp(const Vec3& w) {
  const double theta = w.norm();
  if (theta < 1e-10) {
    // second-order series of cos/sinc around zero
    const double half2 = 0.25 * theta * theta;
    Quat q(1.0 - 0.5 * half2, 0.5 * w.x(), 0.5 * w.y(), 0.5 * w.z());
    q.normalize();
    return q;
  }
  const double half = 0.5 * theta;
  const double s = std::sin(half) / theta;
  return Quat(std::cos(half), s * w.x(), s * w.y(), s * w.z());
}

Vec3 quat_log(const Quat& q_in) {
  Quat q = q_in;
  if (q.w() < 0.0) q.coeffs() = -q.coeffs();
  const Vec3 v = q.vec();
  const double vn = v.norm();
  if (vn < 1e-10) {
    return 2.0 * v / q.w();
  }
  const double angle = 2.0 * std::atan2(vn, q.w());
  return (angle / vn) * v;
}

Mat3 exp3(const Vec3& w) { return quat_exp(w).toRotationMatrix(); }

Vec3 log3(const Mat3& R) { return quat_log(Quat(R)); }

Vec3 rpy_from_rotation(const Mat3& R) {
  const double pitch = std::atan2(-R(2, 0), std::sqrt(R(0, 0) * R(0, 0) + R(1, 0) * R(1, 0)));
  const double roll = std::atan2(R(2, 1), R(2, 2));
  const double yaw = std::atan2(R(1, 0), R(0, 0));
  return Vec3(roll, pitch, yaw);
}

Mat3 rotation_from_rpy(double roll, double pitch, double yaw) {
  return (Eigen::AngleAxisd(yaw, Vec3::UnitZ()) * Eigen::AngleAxisd(pitch, Vec3::UnitY()) *
          Eigen::AngleAxisd(roll, Vec3::UnitX()))
      .toRotationMatrix();
}

Vec6 motion_act(const SE3& X, const Vec6& m) {
  const Vec3 v = m.head<3>();
  const Vec3 w = m.tail<3>();
  const Vec3 Rw = X.rotation * w;
  Vec6 out;
  out.head<3>() = X.rotation * v + X.translation.cross(Rw);
  out.tail<3>() = Rw;
  return out;
}

Vec6 motion_act_inv(const SE3& X, const Vec6& m) {
  const Vec3 v = m.head<3>();
  const Vec3 w = m.tail<3>();
  Vec6 out;
  out.head<3>() = X.rotation.transpose() * (v - X.translation.cross(w));
  out.tail<3>() = X.rotation.transpose() * w;
  return out;
}

Vec6 force_act(const SE3& X, const Vec6& f) {
  const Vec3 fl = f.head<3>();
  const Vec3 tau = f.tail<3>();
  const Vec3 Rf = X.rotation * fl;
  Vec6 out;
  out.head<3>() = Rf;
  out.tail<3>() = X.rotation * tau + X.translation.cross(Rf);
  return out;
}

Vec6 force_act_inv(const SE3& X, const Vec6& f) {
  const Vec3 fl = f.head<3>();
  const Vec3 tau = f.tail<3>();
  Vec6 out;
  out.head<3>() = X.rotation.transpose() * fl;
  out.tail<3>() = X.rotation.transpose() * (tau - X.translation.cross(fl));
  return out;
}

Vec6 motion_cross(const Vec6& a, const Vec6& b) {
  const Vec3 va = a.head<3>();
  const Vec3 wa = a.tail<3>();
  const Vec3 vb = b.head<3>();
  const Vec3 wb = b.tail<3>();
  Vec6 out;
  out.head<3>() = wa.cross(vb) + va.cross(wb);
  out.tail<3>() = wa.cross(wb);
  return out;
}

Vec6 force_cross(const Vec6& m, const Vec6& f) {
  const Vec3 v = m.head<3>();
  const Vec3 w = m.tail<3>();
  const Vec3 fl = f.head<3>();
  const Vec3 tau = f.tail<3>();
  Vec6 out;
  out.head<3>() = w.cross(fl);
  out.tail<3>() = w.cross(tau) + v.cross(fl);
  return out;
}

Mat6 spatial_inertia(double mass, const Vec3& com, const Mat3& inertia_com) {
  const Mat3 cx = skew(com);
  Mat6 I;
  I.topLeftCorner<3, 3>() = mass * Mat3::Identity();
  I.topRightCorner<3, 3>() = -mass * cx;
  I.bottomLeftCorner<3, 3>() = mass * cx;
  I.bottomRightCorner<3, 3>() = inertia_com - mass * cx * cx;
  return I;
}

Mat6 transform_inertia(const SE3& X, const Mat6& inertia) {
  // force/motion transform pair: I_parent = Psi(X) * I_child * Lambda(X)^-1
  const Mat3& R = X.rotation;
  const Mat3 px = skew(X.translation);
  Mat6 lambda_inv;  // motion action of X^-1
  lambda_inv.topLeftCorner<3, 3>() = R.transpose();
  lambda_inv.topRightCorner<3, 3>() = -R.transpose() * px;
  lambda_inv.bottomLeftCorner<3, 3>().setZero();
  lambda_inv.bottomRightCorner<3, 3>() = R.transpose();
  return lambda_inv.transpose() * inertia * lambda_inv;
}

void inertia_params(const Mat6& inertia, double& mass, Vec3& com, Mat3& inertia_com) {
  mass = inertia(0, 0);
  const Mat3 mcx = inertia.bottomLeftCorner<3, 3>();
  com = Vec3(mcx(2, 1), mcx(0, 2), mcx(1, 0)) / mass;
  const Mat3 cx = skew(com);
  inertia_com = inertia.bottomRightCorner<3, 3>() + mass * cx * cx;
}

}  // namespace borinot

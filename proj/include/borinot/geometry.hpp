#ifndef BORINOT_GEOMETRY_HPP
#define BORINOT_GEOMETRY_HPP

#include <Eigen/Dense>

namespace borinot {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using VecX = Eigen::VectorXd;
using Mat3 = Eigen::Matrix3d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using MatX = Eigen::MatrixXd;
using Quat = Eigen::Quaterniond;

/// Rigid transform. Maps coordinates in the local frame to the parent
/// frame: x_parent = rotation * x_local + translation.
struct SE3 {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  SE3() = default;
  SE3(const Mat3& R, const Vec3& p) : rotation(R), translation(p) {}

  static SE3 Identity() { return SE3(); }

  SE3 operator*(const SE3& other) const {
    return SE3(rotation * other.rotation, rotation * other.translation + translation);
  }

  SE3 inverse() const {
    return SE3(rotation.transpose(), -(rotation.transpose() * translation));
  }

  Vec3 act(const Vec3& point) const { return rotation * point + translation; }

  bool isApprox(const SE3& other, double tol = 1e-12) const {
    return rotation.isApprox(other.rotation, tol) &&
           translation.isApprox(other.translation, tol);
  }
};

Mat3 skew(const Vec3& v);

// SO(3) exponential and logarithm. log3 returns the rotation vector of the
// shortest rotation; angle lies in [0, pi].
Mat3 exp3(const Vec3& w);
Vec3 log3(const Mat3& R);
Quat quat_exp(const Vec3& w);
Vec3 quat_log(const Quat& q);

// Roll-pitch-yaw (ZYX convention): R = Rz(yaw) * Ry(pitch) * Rx(roll).
Vec3 rpy_from_rotation(const Mat3& R);
Mat3 rotation_from_rpy(double roll, double pitch, double yaw);

// Spatial vectors use the linear-part-first layout: a motion is (v, w),
// a force is (f, tau), both expressed at a frame origin.

// Change-of-frame actions. X is the pose of the child frame in the parent;
// the plain action re-expresses a child-frame quantity in the parent frame,
// act_inv goes the other way.
Vec6 motion_act(const SE3& X, const Vec6& m);
Vec6 motion_act_inv(const SE3& X, const Vec6& m);
Vec6 force_act(const SE3& X, const Vec6& f);
Vec6 force_act_inv(const SE3& X, const Vec6& f);

// Spatial cross products: motion x motion and motion x* force.
Vec6 motion_cross(const Vec6& a, const Vec6& b);
Vec6 force_cross(const Vec6& m, const Vec6& f);

// 6x6 spatial inertia of a rigid body about the body-frame origin, from the
// mass, the CoM offset and the rotational inertia about the CoM.
Mat6 spatial_inertia(double mass, const Vec3& com, const Mat3& inertia_com);

// Re-express a spatial inertia given in the child frame of X in the parent
// frame of X.
Mat6 transform_inertia(const SE3& X, const Mat6& inertia);

// Recover (mass, com, inertia about com) from a 6x6 spatial inertia.
void inertia_params(const Mat6& inertia, double& mass, Vec3& com, Mat3& inertia_com);

}  // namespace borinot

#endif  // BORINOT_GEOMETRY_HPP

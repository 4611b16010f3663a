#ifndef BORINOT_DYNAMICS_HPP
#define BORINOT_DYNAMICS_HPP

#include <utility>
#include <vector>

#include "borinot/model.hpp"

namespace borinot {

struct FramePoses {
  std::vector<SE3> body;   // world pose of each body frame
  std::vector<SE3> frame;  // world pose of each named frame
};

FramePoses forward_kinematics(const Model& model, const VecX& q);

/// (world CoM position, total mass)
std::pair<Vec3, double> center_of_mass(const Model& model, const VecX& q);

/// Joint-space inertia matrix via the composite rigid body algorithm.
/// Symmetric positive definite for any valid model.
MatX mass_matrix(const Model& model, const VecX& q);

/// External forces: one spatial force (f, tau) per body, expressed in the
/// body's local frame about the body origin. Empty means none.
using ExternalForces = std::vector<Vec6>;

ExternalForces no_forces(const Model& model);

/// Adds a world-frame point force applied at a named frame to fext.
void add_force_at_frame(const Model& model, const FramePoses& fk, int frame,
                        const Vec3& force_world, ExternalForces& fext);

/// Recursive Newton-Euler: generalized force tau with M(q) a + bias(q, v) =
/// tau + ext. The first six entries of the result are the base wrench
/// (force, torque) in the base frame when the root is a free-flyer.
VecX inverse_dynamics(const Model& model, const VecX& q, const VecX& v, const VecX& a,
                      const ExternalForces& fext = {});

/// Articulated body algorithm: generalized acceleration for given tau.
/// Throws std::runtime_error if the articulated inertia factorization fails
/// (only possible on an invalid model).
VecX forward_dynamics(const Model& model, const VecX& q, const VecX& v, const VecX& tau,
                      const ExternalForces& fext = {});

/// Configuration update q' = q (+) v*dt. The free-flyer translation advances
/// along the body-frame linear velocity; the orientation by the exponential
/// map of w*dt, renormalized.
VecX integrate_configuration(const Model& model, const VecX& q, const VecX& v, double dt);

/// Tangent-space difference d with integrate_configuration(q0, d, 1) == q1.
VecX configuration_difference(const Model& model, const VecX& q0, const VecX& q1);

/// Semi-implicit Euler step: v' = v + a*dt, q' = q (+) v'*dt.
State integrate(const Model& model, const State& state, const VecX& a, double dt);

/// Kinetic plus gravitational potential energy (potential zero at z = 0).
double mechanical_energy(const Model& model, const VecX& q, const VecX& v);

/// Spatial velocity of each body, local frame.
std::vector<Vec6> body_velocities(const Model& model, const VecX& q, const VecX& v);

/// (linear, angular) velocity of a named frame, world coordinates.
Vec6 frame_velocity(const Model& model, const VecX& q, const VecX& v, int frame);

}  // namespace borinot

#endif  // BORINOT_DYNAMICS_HPP

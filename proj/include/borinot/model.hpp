#ifndef BORINOT_MODEL_HPP
#define BORINOT_MODEL_HPP

#include <string>
#include <vector>

#include "borinot/geometry.hpp"

namespace borinot {

enum class JointType { FreeFlyer, Revolute, Prismatic };

/// Rigid body: mass, rotational inertia about the CoM (expressed in the body
/// frame) and CoM offset in the body frame.
struct BodySpec {
  std::string name;
  double mass = 0.0;
  Mat3 inertia = Mat3::Zero();
  Vec3 com = Vec3::Zero();
};

/// Joint connecting `child` to `parent`. The placement is the pose of the
/// joint frame in the parent frame; the child body frame coincides with the
/// joint frame at the zero configuration. Use parent = "world" for the root.
struct JointSpec {
  std::string parent;
  std::string child;
  JointType type = JointType::Revolute;
  Vec3 axis = Vec3::UnitZ();  // ignored for free-flyer
  SE3 placement;
};

/// Named frame rigidly attached to a body.
struct FrameSpec {
  std::string name;
  std::string body;
  SE3 placement;
};

struct ModelSpec {
  std::vector<BodySpec> bodies;
  std::vector<JointSpec> joints;
  std::vector<FrameSpec> frames;
  Vec3 gravity = Vec3(0.0, 0.0, -9.80665);
};

/// Validated kinematic tree with precomputed topology. Bodies are stored in
/// topological order (parents before children). Treat as immutable after
/// build_model().
///
/// Conventions, fixed project-wide:
///  - configuration q: free-flyer stores position (3) then unit quaternion
///    as (x, y, z, w); 1-dof joints store one coordinate each.
///  - velocity v: free-flyer stores (linear, angular), both expressed in the
///    body frame; 1-dof joints store one rate each.
struct Model {
  int nb = 0;  // number of bodies
  int nq = 0;  // configuration dimension
  int nv = 0;  // velocity / tangent dimension
  int n_joints = 0;  // articulated (1-dof) joints

  std::vector<std::string> body_names;
  std::vector<int> parent;         // parent body index, -1 for the root
  std::vector<JointType> joint_type;
  std::vector<Vec3> joint_axis;
  std::vector<SE3> tree_placement;  // joint frame in parent frame
  std::vector<Mat6> inertia;        // spatial inertia about each body frame
  std::vector<double> body_mass;
  std::vector<Vec3> body_com;
  std::vector<int> idx_q;  // per body: offset into q
  std::vector<int> idx_v;  // per body: offset into v
  std::vector<int> nq_j;   // per body: joint configuration size
  std::vector<int> nv_j;   // per body: joint dof

  struct Frame {
    std::string name;
    int body = 0;
    SE3 placement;
  };
  std::vector<Frame> frames;

  Vec3 gravity = Vec3(0.0, 0.0, -9.80665);
  double total_mass = 0.0;

  int body_index(const std::string& name) const;
  int frame_index(const std::string& name) const;

  /// q with the base at identity and all joint coordinates at zero.
  VecX neutral_configuration() const;
};

/// Generalized position/velocity pair.
struct State {
  VecX q;
  VecX v;
};

State neutral_state(const Model& model);

/// Validates the spec and precomputes the topology.
/// Throws std::invalid_argument naming the offending element on: joint graph
/// not a rooted tree, non-positive mass, non-SPD or non-physical inertia,
/// non-unit joint axis, unknown body references.
Model build_model(const ModelSpec& spec);

}  // namespace borinot

#endif  // BORINOT_MODEL_HPP

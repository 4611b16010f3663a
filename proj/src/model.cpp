#include "borinot/model.hpp"

#include <Eigen/Eigenvalues>
#include <map>
#include <set>
#include <stdexcept>

namespace borinot {

namespace {

void validate_inertia(const BodySpec& body) {
  if (!(body.mass > 0.0)) {
    throw std::invalid_argument("body '" + body.name + "': mass must be > 0");
  }
  if ((body.inertia - body.inertia.transpose()).lpNorm<Eigen::Infinity>() > 1e-9) {
    throw std::invalid_argument("body '" + body.name + "': inertia tensor is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Mat3> eig(body.inertia);
  const Vec3 lam = eig.eigenvalues();
  if (lam.minCoeff() <= 0.0) {
    throw std::invalid_argument("body '" + body.name + "': inertia tensor is not positive definite");
  }
  // triangle inequality on principal moments
  const double tol = 1e-12 * lam.maxCoeff();
  if (lam(0) + lam(1) < lam(2) - tol) {
    throw std::invalid_argument("body '" + body.name +
                                "': principal moments violate the triangle inequality");
  }
}

}  // namespace

int Model::body_index(const std::string& name) const {
  for (int i = 0; i < nb; ++i) {
    if (body_names[i] == name) return i;
  }
  throw std::invalid_argument("unknown body '" + name + "'");
}

int Model::frame_index(const std::string& name) const {
  for (size_t i = 0; i < frames.size(); ++i) {
    if (frames[i].name == name) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown frame '" + name + "'");
}

VecX Model::neutral_configuration() const {
  VecX q = VecX::Zero(nq);
  for (int i = 0; i < nb; ++i) {
    if (joint_type[i] == JointType::FreeFlyer) {
      q(idx_q[i] + 6) = 1.0;  // unit quaternion (x, y, z, w)
    }
  }
  return q;
}

State neutral_state(const Model& model) {
  return State{model.neutral_configuration(), VecX::Zero(model.nv)};
}

Model build_model(const ModelSpec& spec) {
  if (spec.bodies.empty()) {
    throw std::invalid_argument("model spec has no bodies");
  }

  std::map<std::string, int> body_id;
  for (size_t i = 0; i < spec.bodies.size(); ++i) {
    const auto& b = spec.bodies[i];
    if (b.name.empty() || b.name == "world") {
      throw std::invalid_argument("body names must be non-empty and different from 'world'");
    }
    if (!body_id.emplace(b.name, static_cast<int>(i)).second) {
      throw std::invalid_argument("duplicate body name '" + b.name + "'");
    }
    validate_inertia(b);
  }

  if (spec.joints.size() != spec.bodies.size()) {
    throw std::invalid_argument("joint graph is not a rooted tree: expected one joint per body");
  }

  // one joint per child body, exactly one root
  std::map<std::string, const JointSpec*> joint_of_child;
  int root_count = 0;
  for (const auto& j : spec.joints) {
    if (j.parent == j.child) {
      throw std::invalid_argument("cycle: joint on body '" + j.child +
                                  "' lists the body as its own parent");
    }
    if (!joint_of_child.emplace(j.child, &j).second) {
      throw std::invalid_argument("cycle: body '" + j.child + "' has more than one parent joint");
    }
    if (!body_id.count(j.child)) {
      throw std::invalid_argument("joint child '" + j.child + "' is not a declared body");
    }
    if (j.parent == "world") {
      ++root_count;
    } else if (!body_id.count(j.parent)) {
      throw std::invalid_argument("joint parent '" + j.parent + "' is not a declared body");
    }
    if (j.type != JointType::FreeFlyer) {
      if (std::abs(j.axis.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("joint on body '" + j.child + "': axis is not unit norm");
      }
    }
  }
  if (root_count != 1) {
    throw std::invalid_argument("joint graph must have exactly one root joint (parent 'world')");
  }

  // topological order from the root; failure to reach every body means the
  // graph has a cycle or a disconnected component
  std::vector<const JointSpec*> ordered;
  {
    std::multimap<std::string, const JointSpec*> children;
    for (const auto& j : spec.joints) children.emplace(j.parent, &j);
    std::vector<std::string> stack = {"world"};
    std::set<std::string> visited;
    while (!stack.empty()) {
      const std::string parent = stack.back();
      stack.pop_back();
      auto [lo, hi] = children.equal_range(parent);
      for (auto it = lo; it != hi; ++it) {
        const JointSpec* j = it->second;
        if (!visited.insert(j->child).second) {
          throw std::invalid_argument("cycle detected at body '" + j->child + "'");
        }
        ordered.push_back(j);
        stack.push_back(j->child);
      }
    }
    if (ordered.size() != spec.bodies.size()) {
      throw std::invalid_argument("joint graph is not a tree: some bodies are unreachable from the root");
    }
  }

  Model model;
  model.nb = static_cast<int>(spec.bodies.size());
  model.gravity = spec.gravity;

  std::map<std::string, int> new_index;
  for (int i = 0; i < model.nb; ++i) {
    const JointSpec& j = *ordered[i];
    const BodySpec& b = spec.bodies[body_id.at(j.child)];
    new_index[b.name] = i;

    model.body_names.push_back(b.name);
    model.parent.push_back(j.parent == "world" ? -1 : new_index.at(j.parent));
    model.joint_type.push_back(j.type);
    model.joint_axis.push_back(j.axis);
    model.tree_placement.push_back(j.placement);
    model.inertia.push_back(spatial_inertia(b.mass, b.com, b.inertia));
    model.body_mass.push_back(b.mass);
    model.body_com.push_back(b.com);

    const int nq_j = (j.type == JointType::FreeFlyer) ? 7 : 1;
    const int nv_j = (j.type == JointType::FreeFlyer) ? 6 : 1;
    model.idx_q.push_back(model.nq);
    model.idx_v.push_back(model.nv);
    model.nq_j.push_back(nq_j);
    model.nv_j.push_back(nv_j);
    model.nq += nq_j;
    model.nv += nv_j;
    if (nv_j == 1) ++model.n_joints;
    model.total_mass += b.mass;
  }

  std::set<std::string> frame_names;
  for (const auto& f : spec.frames) {
    if (!new_index.count(f.body)) {
      throw std::invalid_argument("frame '" + f.name + "': unknown parent body '" + f.body + "'");
    }
    if (!frame_names.insert(f.name).second) {
      throw std::invalid_argument("duplicate frame name '" + f.name + "'");
    }
    model.frames.push_back({f.name, new_index.at(f.body), f.placement});
  }

  return model;
}

}  // namespace borinot

#include "borinot/dynamics.hpp"

#include <Eigen/Cholesky>
#include <stdexcept>

namespace borinot {

namespace {

// motion subspace S (6 x dof) and joint transform for body i at configuration q
struct JointCalc {
  SE3 placement;                   // body frame in parent frame
  Eigen::Matrix<double, 6, 6> S;   // only the first nv_j columns are used
};

JointCalc jcalc(const Model& model, int i, const VecX& q) {
  JointCalc jc;
  jc.S.setZero();
  const int iq = model.idx_q[i];
  switch (model.joint_type[i]) {
    case JointType::FreeFlyer: {
      Quat quat;
      quat.coeffs() = q.segment<4>(iq + 3);  // stored (x, y, z, w)
      quat.normalize();
      jc.placement = model.tree_placement[i] * SE3(quat.toRotationMatrix(), q.segment<3>(iq));
      jc.S.setIdentity();
      break;
    }
    case JointType::Revolute: {
      jc.placement = model.tree_placement[i] * SE3(exp3(model.joint_axis[i] * q(iq)), Vec3::Zero());
      jc.S.block<3, 1>(3, 0) = model.joint_axis[i];
      break;
    }
    case JointType::Prismatic: {
      jc.placement = model.tree_placement[i] * SE3(Mat3::Identity(), model.joint_axis[i] * q(iq));
      jc.S.block<3, 1>(0, 0) = model.joint_axis[i];
      break;
    }
  }
  return jc;
}

}  // namespace

FramePoses forward_kinematics(const Model& model, const VecX& q) {
  FramePoses out;
  out.body.resize(model.nb);
  for (int i = 0; i < model.nb; ++i) {
    const SE3 X = jcalc(model, i, q).placement;
    out.body[i] = (model.parent[i] < 0) ? X : out.body[model.parent[i]] * X;
  }
  out.frame.reserve(model.frames.size());
  for (const auto& f : model.frames) {
    out.frame.push_back(out.body[f.body] * f.placement);
  }
  return out;
}

std::pair<Vec3, double> center_of_mass(const Model& model, const VecX& q) {
  const FramePoses fk = forward_kinematics(model, q);
  Vec3 weighted = Vec3::Zero();
  for (int i = 0; i < model.nb; ++i) {
    weighted += model.body_mass[i] * fk.body[i].act(model.body_com[i]);
  }
  return {weighted / model.total_mass, model.total_mass};
}

MatX mass_matrix(const Model& model, const VecX& q) {
  std::vector<JointCalc> jc(model.nb);
  std::vector<Mat6> Ic(model.nb);
  for (int i = 0; i < model.nb; ++i) {
    jc[i] = jcalc(model, i, q);
    Ic[i] = model.inertia[i];
  }

  MatX M = MatX::Zero(model.nv, model.nv);
  for (int i = model.nb - 1; i >= 0; --i) {
    if (model.parent[i] >= 0) {
      Ic[model.parent[i]] += transform_inertia(jc[i].placement, Ic[i]);
    }
    const int ni = model.nv_j[i];
    Eigen::Matrix<double, 6, Eigen::Dynamic> F = Ic[i] * jc[i].S.leftCols(ni);
    M.block(model.idx_v[i], model.idx_v[i], ni, ni) =
        jc[i].S.leftCols(ni).transpose() * F;
    int j = i;
    while (model.parent[j] >= 0) {
      for (int c = 0; c < ni; ++c) {
        F.col(c) = force_act(jc[j].placement, F.col(c));
      }
      j = model.parent[j];
      const int nj = model.nv_j[j];
      M.block(model.idx_v[i], model.idx_v[j], ni, nj) =
          F.transpose() * jc[j].S.leftCols(nj);
      M.block(model.idx_v[j], model.idx_v[i], nj, ni) =
          M.block(model.idx_v[i], model.idx_v[j], ni, nj).transpose();
    }
  }
  return M;
}

ExternalForces no_forces(const Model& model) {
  return ExternalForces(model.nb, Vec6::Zero());
}

void add_force_at_frame(const Model& model, const FramePoses& fk, int frame,
                        const Vec3& force_world, ExternalForces& fext) {
  if (fext.empty()) fext = no_forces(model);
  const auto& f = model.frames.at(frame);
  const Vec3 f_local = fk.body[f.body].rotation.transpose() * force_world;
  fext[f.body].head<3>() += f_local;
  fext[f.body].tail<3>() += f.placement.act(Vec3::Zero()).cross(f_local);
}

VecX inverse_dynamics(const Model& model, const VecX& q, const VecX& v, const VecX& a,
                      const ExternalForces& fext) {
  std::vector<JointCalc> jc(model.nb);
  std::vector<Vec6> vel(model.nb), acc(model.nb), force(model.nb);

  Vec6 a0 = Vec6::Zero();
  a0.head<3>() = -model.gravity;  // gravity as a fictitious base acceleration

  for (int i = 0; i < model.nb; ++i) {
    jc[i] = jcalc(model, i, q);
    const int ni = model.nv_j[i];
    const Vec6 vj = jc[i].S.leftCols(ni) * v.segment(model.idx_v[i], ni);
    const Vec6 aj = jc[i].S.leftCols(ni) * a.segment(model.idx_v[i], ni);
    if (model.parent[i] < 0) {
      vel[i] = vj;
      acc[i] = motion_act_inv(jc[i].placement, a0) + aj + motion_cross(vel[i], vj);
    } else {
      vel[i] = motion_act_inv(jc[i].placement, vel[model.parent[i]]) + vj;
      acc[i] = motion_act_inv(jc[i].placement, acc[model.parent[i]]) + aj +
               motion_cross(vel[i], vj);
    }
    force[i] = model.inertia[i] * acc[i] + force_cross(vel[i], model.inertia[i] * vel[i]);
    if (!fext.empty()) force[i] -= fext[i];
  }

  VecX tau(model.nv);
  for (int i = model.nb - 1; i >= 0; --i) {
    const int ni = model.nv_j[i];
    tau.segment(model.idx_v[i], ni) = jc[i].S.leftCols(ni).transpose() * force[i];
    if (model.parent[i] >= 0) {
      force[model.parent[i]] += force_act(jc[i].placement, force[i]);
    }
  }
  return tau;
}

VecX forward_dynamics(const Model& model, const VecX& q, const VecX& v, const VecX& tau,
                      const ExternalForces& fext) {
  std::vector<JointCalc> jc(model.nb);
  std::vector<Vec6> vel(model.nb), bias_acc(model.nb), pA(model.nb);
  std::vector<Mat6> IA(model.nb);
  std::vector<Eigen::Matrix<double, 6, Eigen::Dynamic>> U(model.nb);
  std::vector<MatX> Dinv(model.nb);
  std::vector<VecX> u(model.nb);

  for (int i = 0; i < model.nb; ++i) {
    jc[i] = jcalc(model, i, q);
    const int ni = model.nv_j[i];
    const Vec6 vj = jc[i].S.leftCols(ni) * v.segment(model.idx_v[i], ni);
    vel[i] = (model.parent[i] < 0)
                 ? vj
                 : Vec6(motion_act_inv(jc[i].placement, vel[model.parent[i]]) + vj);
    bias_acc[i] = motion_cross(vel[i], vj);
    IA[i] = model.inertia[i];
    pA[i] = force_cross(vel[i], model.inertia[i] * vel[i]);
    if (!fext.empty()) pA[i] -= fext[i];
  }

  for (int i = model.nb - 1; i >= 0; --i) {
    const int ni = model.nv_j[i];
    U[i] = IA[i] * jc[i].S.leftCols(ni);
    const MatX D = jc[i].S.leftCols(ni).transpose() * U[i];
    Eigen::LLT<MatX> llt(D);
    if (llt.info() != Eigen::Success) {
      throw std::runtime_error("forward_dynamics: articulated inertia factorization failed at body '" +
                               model.body_names[i] + "'");
    }
    Dinv[i] = llt.solve(MatX::Identity(ni, ni));
    u[i] = tau.segment(model.idx_v[i], ni) - jc[i].S.leftCols(ni).transpose() * pA[i];
    if (model.parent[i] >= 0) {
      const Mat6 Ia = IA[i] - U[i] * Dinv[i] * U[i].transpose();
      const Vec6 pa = pA[i] + Ia * bias_acc[i] + U[i] * Dinv[i] * u[i];
      IA[model.parent[i]] += transform_inertia(jc[i].placement, Ia);
      pA[model.parent[i]] += force_act(jc[i].placement, pa);
    }
  }

  Vec6 a0 = Vec6::Zero();
  a0.head<3>() = -model.gravity;

  VecX qdd(model.nv);
  std::vector<Vec6> acc(model.nb);
  for (int i = 0; i < model.nb; ++i) {
    const int ni = model.nv_j[i];
    const Vec6 a_parent = (model.parent[i] < 0) ? a0 : acc[model.parent[i]];
    const Vec6 a_prime = motion_act_inv(jc[i].placement, a_parent) + bias_acc[i];
    qdd.segment(model.idx_v[i], ni) = Dinv[i] * (u[i] - U[i].transpose() * a_prime);
    acc[i] = a_prime + jc[i].S.leftCols(ni) * qdd.segment(model.idx_v[i], ni);
  }
  return qdd;
}

VecX integrate_configuration(const Model& model, const VecX& q, const VecX& v, double dt) {
  VecX out = q;
  for (int i = 0; i < model.nb; ++i) {
    const int iq = model.idx_q[i];
    const int iv = model.idx_v[i];
    if (model.joint_type[i] == JointType::FreeFlyer) {
      Quat quat;
      quat.coeffs() = q.segment<4>(iq + 3);
      const Mat3 R = quat.toRotationMatrix();
      out.segment<3>(iq) = q.segment<3>(iq) + R * v.segment<3>(iv) * dt;
      Quat qn = quat * quat_exp(v.segment<3>(iv + 3) * dt);
      qn.normalize();
      out.segment<4>(iq + 3) = qn.coeffs();
    } else {
      out(iq) = q(iq) + v(iv) * dt;
    }
  }
  return out;
}

VecX configuration_difference(const Model& model, const VecX& q0, const VecX& q1) {
  VecX d(model.nv);
  for (int i = 0; i < model.nb; ++i) {
    const int iq = model.idx_q[i];
    const int iv = model.idx_v[i];
    if (model.joint_type[i] == JointType::FreeFlyer) {
      Quat quat0, quat1;
      quat0.coeffs() = q0.segment<4>(iq + 3);
      quat1.coeffs() = q1.segment<4>(iq + 3);
      const Mat3 R0 = quat0.toRotationMatrix();
      d.segment<3>(iv) = R0.transpose() * (q1.segment<3>(iq) - q0.segment<3>(iq));
      d.segment<3>(iv + 3) = quat_log(quat0.conjugate() * quat1);
    } else {
      d(iv) = q1(iq) - q0(iq);
    }
  }
  return d;
}

State integrate(const Model& model, const State& state, const VecX& a, double dt) {
  State out;
  out.v = state.v + a * dt;
  out.q = integrate_configuration(model, state.q, out.v, dt);
  return out;
}

double mechanical_energy(const Model& model, const VecX& q, const VecX& v) {
  const double kinetic = 0.5 * v.dot(mass_matrix(model, q) * v);
  const FramePoses fk = forward_kinematics(model, q);
  double potential = 0.0;
  for (int i = 0; i < model.nb; ++i) {
    potential -= model.body_mass[i] * model.gravity.dot(fk.body[i].act(model.body_com[i]));
  }
  return kinetic + potential;
}

std::vector<Vec6> body_velocities(const Model& model, const VecX& q, const VecX& v) {
  std::vector<Vec6> vel(model.nb);
  for (int i = 0; i < model.nb; ++i) {
    const JointCalc jc = jcalc(model, i, q);
    const int ni = model.nv_j[i];
    const Vec6 vj = jc.S.leftCols(ni) * v.segment(model.idx_v[i], ni);
    vel[i] = (model.parent[i] < 0)
                 ? vj
                 : Vec6(motion_act_inv(jc.placement, vel[model.parent[i]]) + vj);
  }
  return vel;
}

Vec6 frame_velocity(const Model& model, const VecX& q, const VecX& v, int frame) {
  const auto& f = model.frames.at(frame);
  const std::vector<Vec6> vel = body_velocities(model, q, v);
  const FramePoses fk = forward_kinematics(model, q);
  const Vec3 v_lin = vel[f.body].head<3>();
  const Vec3 w = vel[f.body].tail<3>();
  const Vec3 p = f.placement.translation;
  const Mat3& R = fk.body[f.body].rotation;
  Vec6 out;
  out.head<3>() = R * (v_lin + w.cross(p));
  out.tail<3>() = R * w;
  return out;
}

}  // namespace borinot

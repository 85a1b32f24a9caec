#include "uavqos/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace uavqos {

namespace {

// Argument of phi in the goal term is a rate deficit expressed in Mbps.
constexpr double kBitsPerMbit = 1.0e6;

double sigmoid1(double z) { return z / std::sqrt(1.0 + z * z); }

}  // namespace

KernelParams KernelParams::from(const ControlGains& g) {
  KernelParams p;
  p.eps = g.eps;
  p.a = g.a;
  p.b = g.b;
  p.c1 = g.c1;
  p.c2_reg = g.c2_reg;
  p.c2_prem = g.c2_prem;
  p.beta = g.beta;
  p.n_max = g.n_max;
  p.r = g.r;
  p.d = g.d;
  p.u_max = g.u_max;
  // Signed offset: identical to |a-b|/sqrt(4ab) for a <= b and keeps phi(0)
  // at zero for a > b as well.
  p.c_sig = (g.b - g.a) / std::sqrt(4.0 * g.a * g.b);
  p.sigma_r = sigma_norm(g.r, g.eps);
  p.sigma_d = sigma_norm(g.d, g.eps);
  p.sigma_n_max = sigma_norm(g.n_max, g.eps);
  return p;
}

double bump(double z, double gamma) {
  z = std::max(z, 0.0);
  if (z >= 1.0) return 0.0;
  if (z < gamma) return 1.0;
  return 0.5 * (1.0 + std::cos(std::numbers::pi * (z - gamma) / (1.0 - gamma)));
}

double sigma_norm(double z, double eps) { return (std::sqrt(1.0 + eps * z * z) - 1.0) / eps; }

double sigma_norm(const Vec3& z, double eps) {
  return (std::sqrt(1.0 + eps * z.squared_norm()) - 1.0) / eps;
}

Vec3 sigma_grad(const Vec3& z, double eps) { return z * (1.0 / std::sqrt(1.0 + eps * z.squared_norm())); }

double phi_sigmoid(double z, const KernelParams& p) {
  return 0.5 * (p.a + p.b) * (sigmoid1(z + p.c_sig) - sigmoid1(p.c_sig));
}

double pair_potential(double z, const KernelParams& p) {
  return bump(z / p.sigma_r, 0.2) * phi_sigmoid(z - p.sigma_d, p);
}

Vec3 f_term(UavId i, std::span<const UavState> uavs, const KernelParams& p) {
  const UavState& self = uavs[static_cast<std::size_t>(i)];
  Vec3 out;
  for (UavId j : neighbor_set(i, uavs, p.r)) {
    const UavState& other = uavs[static_cast<std::size_t>(j)];
    const Vec3 offset = other.position - self.position;
    const double excess = std::max(static_cast<double>(other.demand) - p.n_max, 0.0);
    const double overload = p.a * (1.0 - bump(sigma_norm(excess, p.eps) / p.sigma_n_max, 0.0));
    out += (pair_potential(sigma_norm(offset, p.eps), p) + overload) * sigma_grad(offset, p.eps);
  }
  return out;
}

Vec3 g_term(UavId i, std::span<const UavState> uavs, const KernelParams& p) {
  const UavState& self = uavs[static_cast<std::size_t>(i)];
  Vec3 out;
  for (UavId j : neighbor_set(i, uavs, p.r)) {
    const UavState& other = uavs[static_cast<std::size_t>(j)];
    const double w = bump(sigma_norm(self.position - other.position, p.eps) / p.sigma_r, 0.2);
    out += w * (other.velocity - self.velocity);
  }
  return out;
}

Vec3 h_term(UavId i, std::span<const UavState> uavs, std::span<const UserState> users,
            const KernelParams& p) {
  const UavState& self = uavs[static_cast<std::size_t>(i)];
  Vec3 out;
  for (const UserState& m : users) {
    const double target = m.target_rate;
    if (m.serving_uav == i) {
      const double c2 = m.klass == UserClass::premium ? p.c2_prem : p.c2_reg;
      const double gate = bump(m.achieved_rate / (p.beta * target), 0.0);
      if (gate == 0.0) continue;
      const double pull = phi_sigmoid((target - m.achieved_rate) / kBitsPerMbit, p);
      out += (c2 * gate * pull) * sigma_grad(m.position - self.position, p.eps);
    } else {
      if (distance(self.position, m.position) > p.r) continue;
      const double deficit = std::max((target - m.achieved_rate) / target, 0.0);
      if (deficit == 0.0) continue;
      out += (p.c1 * deficit) * sigma_grad(self.position - m.position, p.eps);
    }
  }
  return out;
}

Vec3 centroid_term(UavId i, std::span<const UavState> uavs, std::span<const UserState> users,
                   const KernelParams& p) {
  if (users.empty()) return {};
  Vec3 centroid;
  for (const UserState& m : users) centroid += m.position;
  centroid *= 1.0 / static_cast<double>(users.size());
  return p.c1 * sigma_grad(centroid - uavs[static_cast<std::size_t>(i)].position, p.eps);
}

Vec3 control_input(UavId i, std::span<const UavState> uavs, std::span<const UserState> users,
                   const KernelParams& p, ControllerMode mode) {
  Vec3 u = f_term(i, uavs, p) + g_term(i, uavs, p);
  u += mode == ControllerMode::qos_driven ? h_term(i, uavs, users, p)
                                          : centroid_term(i, uavs, users, p);
  u.z = 0.0;
  return clamp_norm(u, p.u_max);
}

}  // namespace uavqos

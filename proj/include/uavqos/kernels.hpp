#pragma once

#include <span>

#include "uavqos/model.hpp"

namespace uavqos {

// Control gains plus the constants derived from them once per run.
struct KernelParams {
  double eps = 0.1;
  double a = 5.0;
  double b = 5.0;
  double c1 = 6.0;
  double c2_reg = 4.0;
  double c2_prem = 6.0;
  double beta = 1.5;
  double n_max = 80.0;
  double r = 300.0;
  double d = 100.0;
  double u_max = 10.0;

  double c_sig = 0.0;       // sigmoid offset, zero when a == b
  double sigma_r = 0.0;     // ||r||_sigma
  double sigma_d = 0.0;     // ||d||_sigma
  double sigma_n_max = 0.0; // ||N_max||_sigma

  static KernelParams from(const ControlGains& gains);
};

// Smooth gate: 1 on [0, gamma), cosine roll-off on [gamma, 1), 0 beyond.
// Negative arguments are treated as 0.
double bump(double z, double gamma);

double sigma_norm(double z, double eps);
double sigma_norm(const Vec3& z, double eps);
Vec3 sigma_grad(const Vec3& z, double eps);

// Uneven sigmoid with phi(0) == 0 and asymptotes -b and a.
double phi_sigmoid(double z, const KernelParams& p);

// Pairwise spacing potential on sigma-norm distances: repulsive below
// ||d||_sigma, attractive above it, cut off at ||r||_sigma.
double pair_potential(double z, const KernelParams& p);

Vec3 f_term(UavId i, std::span<const UavState> uavs, const KernelParams& p);
Vec3 g_term(UavId i, std::span<const UavState> uavs, const KernelParams& p);
Vec3 h_term(UavId i, std::span<const UavState> uavs, std::span<const UserState> users,
            const KernelParams& p);

// Navigation toward the user centroid, used by the flocking baseline.
Vec3 centroid_term(UavId i, std::span<const UavState> uavs, std::span<const UserState> users,
                   const KernelParams& p);

// Horizontal control input, saturated at u_max.
Vec3 control_input(UavId i, std::span<const UavState> uavs, std::span<const UserState> users,
                   const KernelParams& p, ControllerMode mode);

}  // namespace uavqos

#pragma once

#include <cstdint>
#include <span>

#include "ditlogic/distribution.hpp"
#include "ditlogic/partition.hpp"

// Shannon-entropy family. Bits by default; Base::e gives nats. Terms with
// zero probability contribute 0 (0 log 1/0 = 0). Cross entropy and KL
// divergence return +infinity when some p_i > 0 meets q_i = 0.

namespace ditlogic {

enum class Base { two, e };

const char* unit_name(Base base) noexcept;

/// log(1/p) in the requested base, with log(1/0) = +inf.
double log_inverse(double p, Base base = Base::two);

/// H(p0) = log(1/p0). Throws Error{domain} unless 0 < p0 <= 1.
double shannon_hartley(double p0, Base base = Base::two);

double shannon_entropy(const Distribution& p, Base base = Base::two);
/// H(pi) = H of the block probabilities; uniform weights when omitted.
double shannon_entropy(const Partition& pi, Base base = Base::two);
double shannon_entropy(const Partition& pi, const Distribution& weights, Base base = Base::two);

double joint_shannon_entropy(const JointDistribution& j, Base base = Base::two);
double marginal_shannon_entropy(const JointDistribution& j, Axis axis, Base base = Base::two);

/// H(x | y) = sum p(x,y) log(p(y) / p(x,y)) for given == Axis::y.
double shannon_conditional(const JointDistribution& j, Axis given, Base base = Base::two);
/// H(pi | sigma) = sum over C of p_C H(pi | C).
double shannon_conditional(const Partition& pi, const Partition& sigma, Base base = Base::two);
double shannon_conditional(const Partition& pi, const Partition& sigma, const Distribution& weights,
                           Base base = Base::two);

/// I(x, y) = sum p(x,y) log(p(x,y) / (p(x) p(y))).
double shannon_mutual(const JointDistribution& j, Base base = Base::two);
/// I(pi, sigma) = sum over B, C of p_BC log(p_BC / (p_B p_C)).
double shannon_mutual(const Partition& pi, const Partition& sigma, Base base = Base::two);
double shannon_mutual(const Partition& pi, const Partition& sigma, const Distribution& weights,
                      Base base = Base::two);

/// H(p || q) = sum p_i log(1/q_i). Throws Error{size_mismatch}.
double cross_entropy(const Distribution& p, const Distribution& q, Base base = Base::two);
/// [H(p || q) + H(q || p)] / 2.
double symmetrized_cross_entropy(const Distribution& p, const Distribution& q,
                                 Base base = Base::two);
/// D(p || q) = sum p_i log(p_i / q_i).
double kl_divergence(const Distribution& p, const Distribution& q, Base base = Base::two);
/// [D(p || q) + D(q || p)] / 2.
double symmetrized_kl_divergence(const Distribution& p, const Distribution& q,
                                 Base base = Base::two);

/// H = log(1/(1 - h)) for an equiprobable set. Throws Error{domain} unless 0 <= h < 1.
double dit_to_bit(double h0, Base base = Base::two);
/// h = 1 - base^(-H). Throws Error{domain} for negative H.
double bit_to_dit(double big_h0, Base base = Base::two);

}  // namespace ditlogic

#pragma once

#include <cstddef>

#include "ditlogic/distribution.hpp"
#include "ditlogic/pair_relation.hpp"
#include "ditlogic/partition.hpp"

// Logical-entropy quantities. Each function template is explicitly
// instantiated for double and Rational. Partition overloads without weights
// use the normalized counting measure on U x U; weighted overloads use the
// product measure mu(S) = sum of p_u p_v over (u, v) in S.

namespace ditlogic {

/// mu(S) = sum of p_u p_v over member pairs. Throws Error{size_mismatch}.
template <class T>
T product_measure(const PairRelation& s, const BasicDistribution<T>& p);

/// |S| / n^2.
template <class T>
T counting_measure(const PairRelation& s);

/// h(pi) = |dit(pi)| / n^2.
template <class T>
T logical_entropy(const Partition& pi);
/// h(pi) = mu(dit(pi)).
template <class T>
T logical_entropy(const Partition& pi, const BasicDistribution<T>& weights);
/// sum over blocks of p_B (1 - p_B); equal to the product-measure form.
template <class T>
T logical_entropy_from_blocks(const Partition& pi, const BasicDistribution<T>& weights);

/// Probabilities p_B of the blocks of pi, in block order.
template <class T>
BasicDistribution<T> block_distribution(const Partition& pi, const BasicDistribution<T>& weights);
template <class T>
BasicDistribution<T> block_distribution(const Partition& pi);

/// h(p) = 1 - sum p_i^2.
template <class T>
T logical_entropy(const BasicDistribution<T>& p);

/// sum p_i^2, the repeat rate.
template <class T>
T identification_probability(const BasicDistribution<T>& p);

/// h(pi | sigma) = measure of dit(pi) - dit(sigma). Weighted universes use the
/// product measure.
template <class T>
T logical_conditional(const Partition& pi, const Partition& sigma);
template <class T>
T logical_conditional(const Partition& pi, const Partition& sigma,
                      const BasicDistribution<T>& weights);

/// m(pi, sigma) = measure of dit(pi) & dit(sigma).
template <class T>
T logical_mutual(const Partition& pi, const Partition& sigma);
template <class T>
T logical_mutual(const Partition& pi, const Partition& sigma, const BasicDistribution<T>& weights);

/// h(x, y) = 1 - sum p(x,y)^2.
template <class T>
T joint_logical_entropy(const BasicJointDistribution<T>& j);

/// h(x) or h(y) of a marginal.
template <class T>
T marginal_logical_entropy(const BasicJointDistribution<T>& j, Axis axis);

/// h(x | y) = sum p(x,y) [p(y) - p(x,y)] for given == Axis::y, and the
/// mirrored form for given == Axis::x.
template <class T>
T logical_conditional(const BasicJointDistribution<T>& j, Axis given);

/// m(x, y) = sum p(x,y) [(1 - p(x)) + (1 - p(y)) - (1 - p(x,y))].
template <class T>
T logical_mutual(const BasicJointDistribution<T>& j);

/// h(p || q) = 1 - sum p_i q_i. Throws Error{size_mismatch}.
template <class T>
T logical_cross_entropy(const BasicDistribution<T>& p, const BasicDistribution<T>& q);

/// d(p || q) = (1/2) sum (p_i - q_i)^2.
template <class T>
T logical_divergence(const BasicDistribution<T>& p, const BasicDistribution<T>& q);

/// Q = sum over i != j of d_ij p_i p_j. Throws Error{size_mismatch}.
double quadratic_entropy(const Distribution& p, const DistanceMatrix& d);

template <class T>
struct MixingReport {
  T mixed;       ///< h((p + q) / 2)
  T cross;       ///< h(p || q)
  T mean;        ///< [h(p) + h(q)] / 2
  T identity_residual;  ///< mixed - (cross / 2 + mean / 2)
  bool chain_holds;     ///< cross >= mixed >= mean
};

template <class T>
MixingReport<T> mixing_entropy(const BasicDistribution<T>& p, const BasicDistribution<T>& q);

}  // namespace ditlogic

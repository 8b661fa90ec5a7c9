#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ditlogic/distribution.hpp"
#include "ditlogic/shannon.hpp"

namespace ditlogic {

enum class Compound { entropy, conditional, mutual, cross, divergence };

const char* to_string(Compound c) noexcept;
/// Throws Error{unknown_selector}.
Compound compound_from_string(std::string_view name);

/// weight * (1 - prob) in dits, weight * log(1/prob) in bits.
struct DitTerm {
  double weight;
  double prob;
};

/// A logical-entropy compound written as a weighted sum of normalized dit
/// counts (1 - r) of equiprobable sets U_{1/r}. Swapping each dit count for
/// the bit count log(1/r) of the same set yields the Shannon counterpart.
class DitExpansion {
 public:
  explicit DitExpansion(std::vector<DitTerm> terms) : terms_(std::move(terms)) {}

  const std::vector<DitTerm>& terms() const noexcept { return terms_; }

  /// sum weight (1 - prob): the logical quantity.
  double dits() const;
  /// sum weight log(1/prob), zero-weight terms skipped.
  double bits(Base base = Base::two) const;

 private:
  std::vector<DitTerm> terms_;
};

/// h(p) = sum p_i (1 - p_i).
DitExpansion expand_entropy(const Distribution& p);
/// h(x|y) = sum p(x,y) [(1 - p(x,y)) - (1 - p(y))], mirrored for given == x.
DitExpansion expand_conditional(const JointDistribution& j, Axis given);
/// m(x,y) = sum p(x,y) [(1 - p(x)) + (1 - p(y)) - (1 - p(x,y))].
DitExpansion expand_mutual(const JointDistribution& j);
/// h(p||q) = sum p_i (1 - q_i).
DitExpansion expand_cross(const Distribution& p, const Distribution& q);
/// d(p||q) = (1/2)[sum p(1-q) + sum q(1-p)] - (1/2)[sum p(1-p) + sum q(1-q)].
DitExpansion expand_divergence(const Distribution& p, const Distribution& q);

struct TransformInputs {
  std::optional<Distribution> p;
  std::optional<Distribution> q;
  std::optional<JointDistribution> joint;
  Axis given = Axis::y;
};

struct TransformReport {
  Compound compound;
  double logical;      ///< the dit-count expansion evaluated
  double transformed;  ///< the same expansion with bit counts substituted
  double direct;       ///< the Shannon quantity computed from its own formula
  double residual;     ///< |transformed - direct|; 0 when both are the same infinity
};

/// Direct counterparts: entropy -> H(p), conditional -> H(x|y), mutual ->
/// I(x,y), cross -> H(p||q), divergence -> D_s(p||q). Throws
/// Error{empty_input} when the compound's inputs are missing.
TransformReport dit_bit_transform(Compound compound, const TransformInputs& in,
                                  Base base = Base::two);
TransformReport dit_bit_transform(std::string_view selector, const TransformInputs& in,
                                  Base base = Base::two);

}  // namespace ditlogic

#include "ditlogic/dit_bit.hpp"

#include <cmath>
#include <string>

#include "ditlogic/error.hpp"

namespace ditlogic {

namespace {

void check_lengths(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorKind::size_mismatch, "distributions of lengths " + std::to_string(p.size()) +
                                              " and " + std::to_string(q.size()));
  }
}

template <class T>
const T& require(const std::optional<T>& v, Compound c, const char* name) {
  if (!v) {
    throw Error(ErrorKind::empty_input,
                std::string(to_string(c)) + " transform needs input '" + name + "'");
  }
  return *v;
}

}  // namespace

const char* to_string(Compound c) noexcept {
  switch (c) {
    case Compound::entropy: return "entropy";
    case Compound::conditional: return "conditional";
    case Compound::mutual: return "mutual";
    case Compound::cross: return "cross";
    case Compound::divergence: return "divergence";
  }
  return "unknown";
}

Compound compound_from_string(std::string_view name) {
  for (auto c : {Compound::entropy, Compound::conditional, Compound::mutual, Compound::cross,
                 Compound::divergence}) {
    if (name == to_string(c)) return c;
  }
  throw Error(ErrorKind::unknown_selector, "unknown compound '" + std::string(name) +
                                               "' (expected entropy, conditional, mutual, "
                                               "cross or divergence)");
}

double DitExpansion::dits() const {
  double total = 0.0;
  for (const auto& t : terms_) total += t.weight * (1.0 - t.prob);
  return total;
}

double DitExpansion::bits(Base base) const {
  double total = 0.0;
  for (const auto& t : terms_) {
    if (t.weight != 0.0) total += t.weight * log_inverse(t.prob, base);
  }
  return total;
}

DitExpansion expand_entropy(const Distribution& p) {
  std::vector<DitTerm> terms;
  for (double pi : p.probs()) terms.push_back({pi, pi});
  return DitExpansion(std::move(terms));
}

DitExpansion expand_conditional(const JointDistribution& j, Axis given) {
  std::vector<DitTerm> terms;
  for (std::size_t x = 0; x < j.rows(); ++x) {
    for (std::size_t y = 0; y < j.cols(); ++y) {
      const double c = j(x, y);
      const double cond = given == Axis::y ? j.marginal_y()[y] : j.marginal_x()[x];
      terms.push_back({c, c});
      terms.push_back({-c, cond});
    }
  }
  return DitExpansion(std::move(terms));
}

DitExpansion expand_mutual(const JointDistribution& j) {
  std::vector<DitTerm> terms;
  for (std::size_t x = 0; x < j.rows(); ++x) {
    for (std::size_t y = 0; y < j.cols(); ++y) {
      const double c = j(x, y);
      terms.push_back({c, j.marginal_x()[x]});
      terms.push_back({c, j.marginal_y()[y]});
      terms.push_back({-c, c});
    }
  }
  return DitExpansion(std::move(terms));
}

DitExpansion expand_cross(const Distribution& p, const Distribution& q) {
  check_lengths(p, q);
  std::vector<DitTerm> terms;
  for (std::size_t i = 0; i < p.size(); ++i) terms.push_back({p[i], q[i]});
  return DitExpansion(std::move(terms));
}

DitExpansion expand_divergence(const Distribution& p, const Distribution& q) {
  check_lengths(p, q);
  std::vector<DitTerm> terms;
  for (std::size_t i = 0; i < p.size(); ++i) {
    terms.push_back({0.5 * p[i], q[i]});
    terms.push_back({0.5 * q[i], p[i]});
    terms.push_back({-0.5 * p[i], p[i]});
    terms.push_back({-0.5 * q[i], q[i]});
  }
  return DitExpansion(std::move(terms));
}

TransformReport dit_bit_transform(Compound compound, const TransformInputs& in, Base base) {
  auto expansion = DitExpansion({});
  double direct = 0.0;
  switch (compound) {
    case Compound::entropy: {
      const auto& p = require(in.p, compound, "p");
      expansion = expand_entropy(p);
      direct = shannon_entropy(p, base);
      break;
    }
    case Compound::conditional: {
      const auto& j = require(in.joint, compound, "joint");
      expansion = expand_conditional(j, in.given);
      direct = shannon_conditional(j, in.given, base);
      break;
    }
    case Compound::mutual: {
      const auto& j = require(in.joint, compound, "joint");
      expansion = expand_mutual(j);
      direct = shannon_mutual(j, base);
      break;
    }
    case Compound::cross: {
      const auto& p = require(in.p, compound, "p");
      const auto& q = require(in.q, compound, "q");
      expansion = expand_cross(p, q);
      direct = cross_entropy(p, q, base);
      break;
    }
    case Compound::divergence: {
      const auto& p = require(in.p, compound, "p");
      const auto& q = require(in.q, compound, "q");
      expansion = expand_divergence(p, q);
      direct = symmetrized_kl_divergence(p, q, base);
      break;
    }
  }
  TransformReport r{compound, expansion.dits(), expansion.bits(base), direct, 0.0};
  if (!(std::isinf(r.transformed) && r.transformed == r.direct)) {
    r.residual = std::abs(r.transformed - r.direct);
  }
  return r;
}

TransformReport dit_bit_transform(std::string_view selector, const TransformInputs& in,
                                  Base base) {
  return dit_bit_transform(compound_from_string(selector), in, base);
}

}  // namespace ditlogic

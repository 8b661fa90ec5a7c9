#include "ditlogic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ditlogic/dit_bit.hpp"
#include "ditlogic/error.hpp"
#include "ditlogic/logical.hpp"
#include "ditlogic/partition.hpp"
#include "ditlogic/shannon.hpp"
#include "ditlogic/stochastic.hpp"

namespace ditlogic {

namespace {

constexpr double float_tolerance = 1e-12;

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok) {
    ++result_.checks;
    if (!ok) ++result_.failures;
  }

  void residual(double r, double tolerance = float_tolerance) {
    ++result_.checks;
    if (!(r <= tolerance)) ++result_.failures;
    if (!(r <= result_.worst_residual)) result_.worst_residual = r;
  }

  void exact_zero(const Rational& r) {
    ++result_.checks;
    if (r != 0) {
      ++result_.failures;
      result_.worst_residual = std::max(result_.worst_residual, std::abs(to_double(r)));
    }
  }

  SuiteResult finish() && { return std::move(result_); }

 private:
  SuiteResult result_;
};

Distribution random_distribution(Xoshiro256StarStar& rng, std::size_t n, bool allow_zeros) {
  std::vector<double> w(n);
  for (auto& x : w) {
    x = -std::log(rng.uniform_open_closed());
    if (allow_zeros && rng() % 5 == 0) x = 0.0;
  }
  w[rng() % n] += 0.5;  // never all zero
  double total = 0.0;
  for (double x : w) total += x;
  for (auto& x : w) x /= total;
  return Distribution(std::move(w));
}

JointDistribution random_joint(Xoshiro256StarStar& rng, std::size_t rows, std::size_t cols) {
  const auto flat = random_distribution(rng, rows * cols, true);
  std::vector<std::vector<double>> m(rows, std::vector<double>(cols));
  for (std::size_t x = 0; x < rows; ++x) {
    for (std::size_t y = 0; y < cols; ++y) m[x][y] = flat[x * cols + y];
  }
  return JointDistribution(m);
}

PairRelation random_relation(Xoshiro256StarStar& rng, std::size_t n) {
  PairRelation r(n);
  for (std::size_t u = 0; u < n; ++u) {
    const std::uint64_t row = rng() & ((std::uint64_t{1} << n) - 1);
    for (std::size_t v = 0; v < n; ++v) {
      if ((row >> v) & 1u) r.insert(u, v);
    }
  }
  return r;
}

// Rows {x} x Y and columns X x {y} of the product universe, element x*|Y| + y.
std::pair<Partition, Partition> product_partitions(std::size_t nx, std::size_t ny) {
  std::vector<std::size_t> rows(nx * ny);
  std::vector<std::size_t> cols(nx * ny);
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      rows[x * ny + y] = x;
      cols[x * ny + y] = y;
    }
  }
  return {Partition::from_labels(rows), Partition::from_labels(cols)};
}

double infinite_aware_difference(double a, double b) {
  if (std::isinf(a) && a == b) return 0.0;
  return std::abs(a - b);
}

void partition_suites(std::size_t max_n, std::vector<SuiteResult>& out,
                      VerificationReport& report) {
  Suite relations("partition_relations");
  Suite join_union("join_dit_union");
  Suite meet_interior("meet_interior");
  Suite refinement("refinement_implication");
  Suite structure("mutual_structure");
  Suite intersect("nonempty_dits_intersect");
  Suite contrapositive("equivalence_union_contrapositive");
  Suite lattice("lattice_laws");
  Suite measures("logical_measure_identities_exact");
  Suite shannon("shannon_partition_identities");

  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto parts = enumerate_partitions(n);
    const auto top = Partition::discrete(n);
    const auto bottom = Partition::indiscrete(n);
    const auto full = PairRelation::full(n);

    std::vector<PairRelation> dits;
    std::vector<Rational> h;
    std::vector<double> big_h;
    for (const auto& pi : parts) {
      const auto d = dit_set(pi);
      const auto ind = indit_set(pi);
      relations.check(d.is_partition_relation() && d.flagged_partition_relation());
      relations.check(ind.is_equivalence());
      relations.check((d | ind) == full && (d & ind).empty());
      relations.check(partition_from_equivalence(ind) == pi);

      Rational concentration = 0;
      for (const auto& b : pi.blocks()) {
        const Rational share(b.size(), n);
        concentration += share * share;
      }
      const Rational hp = logical_entropy<Rational>(pi);
      measures.exact_zero(hp - (1 - concentration));
      measures.exact_zero(hp - product_measure(d, ExactDistribution::uniform(n)));

      lattice.check(join(pi, pi) == pi && meet(pi, pi) == pi);
      lattice.check(join(pi, top) == top && meet(pi, bottom) == bottom);
      lattice.check(join(pi, bottom) == pi && meet(pi, top) == pi);

      dits.push_back(d);
      h.push_back(hp);
      big_h.push_back(shannon_entropy(pi));
    }

    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = 0; j < parts.size(); ++j) {
        const auto& pi = parts[i];
        const auto& sigma = parts[j];
        const auto joined = join(pi, sigma);
        const auto met = meet(pi, sigma);
        const auto d_join = dit_set(joined);

        join_union.check(d_join == (dits[i] | dits[j]));

        meet_interior.check(dit_set(met) == interior(dits[i] & dits[j]));
        meet_interior.check(met == meet_via_interior(pi, sigma));

        const bool r = refines(sigma, pi);
        const auto implied = implication(sigma, pi);
        refinement.check(r == dits[j].subset_of(dits[i]));
        refinement.check(r == (implied == top));
        refinement.check(implied == implication_via_interior(sigma, pi));

        const auto mut = mutual_dit_set(pi, sigma);
        structure.check(mut == mutual_dit_set_structural(pi, sigma));
        if (!pi.is_indiscrete() && !sigma.is_indiscrete()) intersect.check(!mut.empty());

        const auto e1 = dits[i].complement();
        const auto e2 = dits[j].complement();
        if ((e1 | e2) == full) contrapositive.check(e1 == full || e2 == full);

        if (n <= 5) {
          lattice.check(joined == join(sigma, pi) && met == meet(sigma, pi));
          lattice.check(join(pi, meet(pi, sigma)) == pi && meet(pi, join(pi, sigma)) == pi);
        }

        const Rational h_join = logical_entropy<Rational>(joined);
        const Rational m = logical_mutual<Rational>(pi, sigma);
        measures.exact_zero(m - (h[i] + h[j] - h_join));
        measures.exact_zero(logical_conditional<Rational>(pi, sigma) - (h_join - h[j]));
        measures.check(logical_entropy<Rational>(met) <= h[i] + h[j] - h_join);
        measures.exact_zero(((1 - h_join) - (1 - h[i]) * (1 - h[j])) - (m - h[i] * h[j]));

        const double big_h_join = shannon_entropy(joined);
        shannon.residual(std::abs(shannon_conditional(pi, sigma) - (big_h_join - big_h[j])));
        const double info = shannon_mutual(pi, sigma);
        shannon.residual(std::abs(info - (big_h[i] + big_h[j] - big_h_join)));
        shannon.check(info >= -float_tolerance);
      }
    }

    if (n <= std::min<std::size_t>(max_n, 4)) {
      for (const auto& a : parts) {
        for (const auto& b : parts) {
          for (const auto& c : parts) {
            lattice.check(join(join(a, b), c) == join(a, join(b, c)));
            lattice.check(meet(meet(a, b), c) == meet(a, meet(b, c)));
          }
        }
      }
    }

    const auto pairs = static_cast<std::uint64_t>(parts.size()) * parts.size();
    report.pairs_checked_total += pairs;
    if (n == max_n) report.pairs_checked_at_max_n = pairs;
  }

  for (auto* s : {&relations, &join_union, &meet_interior, &refinement, &structure, &intersect,
                  &contrapositive, &lattice, &measures, &shannon}) {
    out.push_back(std::move(*s).finish());
  }
}

void closure_suite(std::size_t max_n, Xoshiro256StarStar& rng, std::vector<SuiteResult>& out) {
  Suite s("closure_operator_laws");
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 4); ++n) {
    std::vector<PairRelation> samples;
    for (int k = 0; k < 500; ++k) samples.push_back(random_relation(rng, n));
    for (const auto& pi : enumerate_partitions(n)) {
      samples.push_back(dit_set(pi));
      samples.push_back(indit_set(pi));
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const auto& r = samples[i];
      const auto closed = rst_closure(r);
      const auto open = interior(r);
      s.check(closed.is_equivalence() && r.subset_of(closed) && rst_closure(closed) == closed);
      s.check(open.is_partition_relation() && open.subset_of(r) && interior(open) == open);
      const auto& other = samples[(i * 7 + 3) % samples.size()];
      const auto bigger = r | other;
      s.check(closed.subset_of(rst_closure(bigger)));
      s.check(open.subset_of(interior(bigger)));
    }
  }
  out.push_back(std::move(s).finish());
}

void weighted_suite(std::size_t max_n, Xoshiro256StarStar& rng, std::vector<SuiteResult>& out) {
  Suite s("weighted_measure_identities_exact");
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 4); ++n) {
    std::vector<Rational> w(n);
    for (auto& x : w) x = Rational(1 + rng() % 997);
    Rational total = 0;
    for (const auto& x : w) total += x;
    for (auto& x : w) x /= total;
    const ExactDistribution weights(w);
    const auto parts = enumerate_partitions(n);
    for (const auto& pi : parts) {
      s.exact_zero(logical_entropy(pi, weights) - logical_entropy_from_blocks(pi, weights));
      for (const auto& sigma : parts) {
        const Rational hp = logical_entropy(pi, weights);
        const Rational hs = logical_entropy(sigma, weights);
        const Rational hj = logical_entropy(join(pi, sigma), weights);
        s.exact_zero(logical_mutual(pi, sigma, weights) - (hp + hs - hj));
        s.exact_zero(logical_conditional(pi, sigma, weights) - (hj - hs));
      }
    }
  }
  out.push_back(std::move(s).finish());
}

void independence_suite(std::vector<SuiteResult>& out) {
  Suite s("independence_product_universes");
  for (std::size_t nx = 2; nx <= 4; ++nx) {
    for (std::size_t ny = 2; ny <= 4; ++ny) {
      const auto [pi, sigma] = product_partitions(nx, ny);
      const auto joined = join(pi, sigma);
      const Rational hp = logical_entropy<Rational>(pi);
      const Rational hs = logical_entropy<Rational>(sigma);
      s.exact_zero(logical_mutual<Rational>(pi, sigma) - hp * hs);
      s.exact_zero((1 - hp) * (1 - hs) - (1 - logical_entropy<Rational>(joined)));
      s.residual(std::abs(shannon_mutual(pi, sigma)));
      s.residual(std::abs(shannon_entropy(joined) - shannon_entropy(pi) - shannon_entropy(sigma)));

      const auto px = ExactDistribution::uniform(nx);
      const auto py = ExactDistribution::uniform(ny);
      const auto j = ExactJointDistribution::product(px, py);
      const Rational hx = marginal_logical_entropy(j, Axis::x);
      const Rational hy = marginal_logical_entropy(j, Axis::y);
      s.exact_zero(logical_mutual(j) - hx * hy);
      s.exact_zero((1 - hx) * (1 - hy) - (1 - joint_logical_entropy(j)));
    }
  }
  out.push_back(std::move(s).finish());
}

void bounds_suite(std::vector<SuiteResult>& out) {
  Suite s("distribution_bounds");
  for (std::size_t n = 2; n <= 64; ++n) {
    const auto u = Distribution::uniform(n);
    s.residual(std::abs(logical_entropy(u) - (1.0 - 1.0 / static_cast<double>(n))));
    s.residual(std::abs(shannon_entropy(u) - std::log2(static_cast<double>(n))));
    s.exact_zero(logical_entropy(ExactDistribution::uniform(n)) - Rational(n - 1, n));
    const auto point = Distribution::point_mass(n, n / 2);
    s.check(logical_entropy(point) == 0.0 && shannon_entropy(point) == 0.0);
  }
  s.check(shannon_hartley(1.0 / 32.0) == 5.0);
  out.push_back(std::move(s).finish());
}

void divergence_suite(Xoshiro256StarStar& rng, std::vector<SuiteResult>& out) {
  Suite s("divergence_inequalities");
  for (int k = 0; k < 2000; ++k) {
    const std::size_t n = 2 + rng() % 7;
    const auto p = random_distribution(rng, n, true);
    const auto q = k % 10 == 0 ? p : random_distribution(rng, n, true);
    const bool same = p == q;

    const double kl = kl_divergence(p, q);
    const double d = logical_divergence(p, q);
    s.check(kl >= 0.0 && d >= 0.0);
    s.check(same ? (kl == 0.0 && d == 0.0) : d > 0.0);

    const double hp = logical_entropy(p);
    const double hq = logical_entropy(q);
    s.residual(std::abs(d - (logical_cross_entropy(p, q) - (hp + hq) / 2.0)));
    const auto mix = mixing_entropy(p, q);
    s.residual(std::abs(mix.identity_residual));
    s.check(mix.chain_holds);

    s.residual(infinite_aware_difference(kl, cross_entropy(p, q) - shannon_entropy(p)));
    s.residual(infinite_aware_difference(
        symmetrized_kl_divergence(p, q),
        symmetrized_cross_entropy(p, q) - (shannon_entropy(p) + shannon_entropy(q)) / 2.0));
    s.residual(std::abs(quadratic_entropy(p, DistanceMatrix::logical(n)) - hp));
  }
  out.push_back(std::move(s).finish());
}

void joint_suite(Xoshiro256StarStar& rng, std::vector<SuiteResult>& out) {
  Suite s("joint_identities");
  for (int k = 0; k < 500; ++k) {
    const auto j = random_joint(rng, 1 + rng() % 4, 1 + rng() % 4);
    const double hxy = joint_logical_entropy(j);
    const double hx = marginal_logical_entropy(j, Axis::x);
    const double hy = marginal_logical_entropy(j, Axis::y);
    s.residual(std::abs(logical_conditional(j, Axis::y) - (hxy - hy)));
    s.residual(std::abs(logical_conditional(j, Axis::x) - (hxy - hx)));
    s.residual(std::abs(logical_mutual(j) - (hx + hy - hxy)));

    const double big_hxy = joint_shannon_entropy(j);
    const double big_hx = marginal_shannon_entropy(j, Axis::x);
    const double big_hy = marginal_shannon_entropy(j, Axis::y);
    s.residual(std::abs(shannon_conditional(j, Axis::y) - (big_hxy - big_hy)));
    s.residual(std::abs(shannon_mutual(j) - (big_hx + big_hy - big_hxy)));
    const Distribution flat(std::vector<double>(j.cells().begin(), j.cells().end()));
    const auto indep = j.product_of_marginals();
    const Distribution flat_indep(std::vector<double>(indep.cells().begin(), indep.cells().end()));
    s.residual(std::abs(shannon_mutual(j) - kl_divergence(flat, flat_indep)));

    // Product measure over pairs of outcomes (x,y), (x',y').
    double cond = 0.0;
    double mutual = 0.0;
    for (std::size_t a = 0; a < j.cells().size(); ++a) {
      for (std::size_t b = 0; b < j.cells().size(); ++b) {
        const bool x_differs = a / j.cols() != b / j.cols();
        const bool y_differs = a % j.cols() != b % j.cols();
        const double w = j.cells()[a] * j.cells()[b];
        if (x_differs && !y_differs) cond += w;
        if (x_differs && y_differs) mutual += w;
      }
    }
    s.residual(std::abs(cond - logical_conditional(j, Axis::y)));
    s.residual(std::abs(mutual - logical_mutual(j)));
  }
  out.push_back(std::move(s).finish());
}

void dit_bit_suite(Xoshiro256StarStar& rng, std::vector<SuiteResult>& out) {
  Suite s("dit_bit_bridge");
  for (int k = 0; k < 1000; ++k) {
    const double h0 = 0.999 * k / 999.0;
    s.residual(std::abs(bit_to_dit(dit_to_bit(h0)) - h0));
  }
  for (int m = 1; m <= 6; ++m) {
    const double p0 = std::ldexp(1.0, -m);
    s.residual(std::abs(dit_to_bit(1.0 - p0) - shannon_hartley(p0)));
    s.residual(std::abs(bit_to_dit(shannon_hartley(p0)) - (1.0 - p0)));
  }
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 2 + rng() % 7;
    TransformInputs in;
    in.p = random_distribution(rng, n, true);
    in.q = random_distribution(rng, n, true);
    in.joint = random_joint(rng, 1 + rng() % 4, 1 + rng() % 4);
    for (auto c : {Compound::entropy, Compound::conditional, Compound::mutual, Compound::cross,
                   Compound::divergence}) {
      s.residual(dit_bit_transform(c, in).residual);
    }
  }
  out.push_back(std::move(s).finish());
}

}  // namespace

bool VerificationReport::passed() const noexcept {
  return std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.passed(); });
}

VerificationReport run_verification(std::size_t max_n, std::uint64_t seed) {
  if (max_n < 2 || max_n > max_verification_n) {
    throw Error(ErrorKind::limit_exceeded, "verification max_n must lie in [2, " +
                                               std::to_string(max_verification_n) + "], got " +
                                               std::to_string(max_n));
  }
  VerificationReport report;
  Xoshiro256StarStar rng(seed);
  partition_suites(max_n, report.suites, report);
  closure_suite(max_n, rng, report.suites);
  weighted_suite(max_n, rng, report.suites);
  independence_suite(report.suites);
  bounds_suite(report.suites);
  divergence_suite(rng, report.suites);
  joint_suite(rng, report.suites);
  dit_bit_suite(rng, report.suites);
  return report;
}

}  // namespace ditlogic

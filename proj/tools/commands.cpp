#include "commands.hpp"

#include <ditlogic/dit_bit.hpp>
#include <ditlogic/error.hpp>
#include <ditlogic/logical.hpp>
#include <ditlogic/partition.hpp>
#include <ditlogic/stirling.hpp>
#include <ditlogic/stochastic.hpp>
#include <ditlogic/text_format.hpp>
#include <ditlogic/verify.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>

namespace ditlogic::cli {

namespace {

constexpr const char* prob = "probability";

Base base_or(const Options& opt, Base fallback) { return opt.base.value_or(fallback); }

bool exact_path(const Options& opt, bool has_fraction) { return opt.exact || has_fraction; }

Json text_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json matrix_text(const std::vector<std::vector<Rational>>& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(text_list(row));
  return out;
}

std::uint64_t symmetric_difference(const PairRelation& a, const PairRelation& b) {
  return ((a - b) | (b - a)).cardinality();
}

// Distribution input is decided by '|' (partition), then by whether the
// values sum to 1 (distribution), then by whether they list 0..k-1.
bool looks_like_partition(const std::string& text) {
  if (text.find('|') != std::string::npos) return true;
  ParsedNumbers nums;
  try {
    nums = parse_number_list(text);
  } catch (const Error&) {
    return false;
  }
  Rational sum = 0;
  for (const auto& v : nums.values) sum += v;
  if (abs(sum - 1) <= Rational(1, 1000000000)) return false;
  std::vector<bool> seen(nums.values.size(), false);
  for (const auto& v : nums.values) {
    if (denominator(v) != 1 || v < 0 || v >= static_cast<long>(seen.size())) return false;
    const auto i = static_cast<std::size_t>(numerator(v));
    if (seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

template <class T>
BasicDistribution<T> make_dist(const ParsedNumbers& n) {
  if constexpr (std::is_same_v<T, double>) {
    return Distribution(to_doubles(n.values));
  } else {
    return ExactDistribution(n.values);
  }
}

template <class T>
BasicJointDistribution<T> make_joint(const ParsedMatrix& m) {
  if constexpr (std::is_same_v<T, double>) {
    return JointDistribution(to_doubles(m.rows));
  } else {
    return ExactJointDistribution(m.rows);
  }
}

void dit_bit_outputs(Report& r, double h, double big_h, const Distribution& blocks, Base base) {
  const std::string unit = unit_name(base);
  r.quantity("H_from_h", dit_to_bit(h, base), unit);
  r.quantity("h_from_H", bit_to_dit(big_h, base), prob);
  TransformInputs in;
  in.p = blocks;
  r.residual("dit_bit_entropy", dit_bit_transform(Compound::entropy, in, base).residual, unit);
}

template <class T>
void partition_entropy(Report& r, const Partition& pi, const std::optional<ParsedNumbers>& w,
                       Base base) {
  std::optional<BasicDistribution<T>> weights;
  if (w) weights = make_dist<T>(*w);
  const T h = weights ? logical_entropy(pi, *weights) : logical_entropy<T>(pi);
  const auto blocks = weights ? block_distribution(pi, *weights) : block_distribution<T>(pi);
  const T rho = identification_probability(blocks);

  const Distribution blocks_d = to_double(blocks);
  const double big_h =
      weights ? shannon_entropy(pi, to_double(*weights), base) : shannon_entropy(pi, base);

  r.quantity("h", h, prob);
  r.quantity("H", big_h, unit_name(base));
  r.count("dits", dit_set(pi).cardinality());
  r.count("blocks", pi.block_count());
  r.quantity("identification_probability", rho, prob);
  dit_bit_outputs(r, to_double(h), big_h, blocks_d, base);
  r.residual("h_block_form", T(h - logical_entropy(blocks)), prob);
  r.residual("h_plus_rho_minus_1", T(h + rho - T(1)), prob);
}

template <class T>
void distribution_entropy(Report& r, const ParsedNumbers& nums, Base base) {
  const auto p = make_dist<T>(nums);
  const auto pd = to_double(p);
  const T h = logical_entropy(p);
  const T rho = identification_probability(p);
  const double big_h = shannon_entropy(pd, base);

  std::uint64_t support = 0;
  for (double x : pd.probs()) support += x > 0.0 ? 1 : 0;

  r.quantity("h", h, prob);
  r.quantity("H", big_h, unit_name(base));
  r.count("support", support);
  r.quantity("identification_probability", rho, prob);
  dit_bit_outputs(r, to_double(h), big_h, pd, base);
  r.residual("h_plus_rho_minus_1", T(h + rho - T(1)), prob);
}

template <class T>
void joint_measures(Report& r, const ParsedMatrix& m, Base base) {
  const auto j = make_joint<T>(m);
  const auto jd = to_double(j);
  const std::string unit = unit_name(base);

  const T hx = marginal_logical_entropy(j, Axis::x);
  const T hy = marginal_logical_entropy(j, Axis::y);
  const T hxy = joint_logical_entropy(j);
  const T hx_y = logical_conditional(j, Axis::y);
  const T hy_x = logical_conditional(j, Axis::x);
  const T mxy = logical_mutual(j);

  const double Hx = marginal_shannon_entropy(jd, Axis::x, base);
  const double Hy = marginal_shannon_entropy(jd, Axis::y, base);
  const double Hxy = joint_shannon_entropy(jd, base);
  const double Hx_y = shannon_conditional(jd, Axis::y, base);
  const double Hy_x = shannon_conditional(jd, Axis::x, base);
  const double Ixy = shannon_mutual(jd, base);

  r.quantity("h_x", hx, prob);
  r.quantity("h_y", hy, prob);
  r.quantity("h_xy", hxy, prob);
  r.quantity("h_x_given_y", hx_y, prob);
  r.quantity("h_y_given_x", hy_x, prob);
  r.quantity("m_xy", mxy, prob);
  r.quantity("H_x", Hx, unit);
  r.quantity("H_y", Hy, unit);
  r.quantity("H_xy", Hxy, unit);
  r.quantity("H_x_given_y", Hx_y, unit);
  r.quantity("H_y_given_x", Hy_x, unit);
  r.quantity("I_xy", Ixy, unit);
  r.quantity("independence_residual", T(mxy - hx * hy), prob);

  r.residual("venn_h_xy", T(hxy - (hx_y + hy_x + mxy)), prob);
  r.residual("venn_h_x", T(hx - (hx_y + mxy)), prob);
  r.residual("venn_h_y", T(hy - (hy_x + mxy)), prob);
  r.residual("venn_m_xy", T(mxy - (hx + hy - hxy)), prob);
  r.residual("complement_product",
             T((T(1) - hxy) - (T(1) - hx) * (T(1) - hy) - (mxy - hx * hy)), prob);
  r.residual("venn_H_xy", Hxy - (Hx_y + Hy_x + Ixy), unit);
  r.residual("venn_H_x", Hx - (Hx_y + Ixy), unit);
  r.residual("venn_H_y", Hy - (Hy_x + Ixy), unit);
  r.residual("venn_I_xy", Ixy - (Hx + Hy - Hxy), unit);

  std::vector<double> cells, independent;
  const auto px = jd.marginal_x();
  const auto py = jd.marginal_y();
  for (std::size_t x = 0; x < jd.rows(); ++x) {
    for (std::size_t y = 0; y < jd.cols(); ++y) {
      cells.push_back(jd(x, y));
      independent.push_back(px[x] * py[y]);
    }
  }
  r.residual("mutual_as_divergence",
             Ixy - kl_divergence(Distribution(cells), Distribution(independent), base), unit);
}

// Float comparisons allow a few ulps so equal quantities stay ordered.
bool at_least(double a, double b) { return a + 1e-12 >= b; }
bool at_least(const Rational& a, const Rational& b) { return a >= b; }

template <class T>
void compare_logical(Report& r, const ParsedNumbers& pn, const ParsedNumbers& qn) {
  const auto p = make_dist<T>(pn);
  const auto q = make_dist<T>(qn);
  const T cross = logical_cross_entropy(p, q);
  const T d = logical_divergence(p, q);
  const T hp = logical_entropy(p);
  const T hq = logical_entropy(q);
  const auto mix = mixing_entropy(p, q);

  r.quantity("h_cross", cross, prob);
  r.quantity("h_p", hp, prob);
  r.quantity("h_q", hq, prob);
  r.quantity("d", d, prob);
  r.quantity("h_mix", mix.mixed, prob);
  r.flag("chain_cross_ge_mix", at_least(mix.cross, mix.mixed));
  r.flag("chain_mix_ge_mean", at_least(mix.mixed, mix.mean));
  r.residual("jensen", T(d - (cross - (hp + hq) / T(2))), prob);
  r.residual("mixing_identity", mix.identity_residual, prob);
}

std::uint64_t as_count(const Rational& v, const char* what) {
  if (denominator(v) != 1 || v < 0) {
    throw Error(ErrorKind::parse, std::string(what) + " must be a non-negative integer, got " +
                                      to_string(v));
  }
  return static_cast<std::uint64_t>(numerator(v));
}

}  // namespace

std::string read_input(const std::string& arg) {
  if (arg == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw Error(ErrorKind::parse, "cannot read " + arg);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
  return arg;
}

Report cmd_entropy(const std::string& input, EntropyInput kind, const Options& opt) {
  Report r("entropy");
  const std::string text = read_input(input);
  const Base base = base_or(opt, Base::two);
  const bool partition = kind == EntropyInput::partition ||
                         (kind == EntropyInput::automatic && looks_like_partition(text));
  if (partition) {
    const auto pi = parse_partition(text, opt.size);
    std::optional<ParsedNumbers> w;
    if (opt.weights) w = parse_number_list(read_input(*opt.weights));
    // Uniform weights are counting measure, which is exact at no cost.
    const bool exact = !w || exact_path(opt, w->has_fraction);
    r.inputs()["partition"] = format_partition(pi);
    r.inputs()["universe"] = pi.size();
    r.inputs()["weights"] = w ? text_list(w->values) : Json("uniform");
    r.inputs()["path"] = exact ? "exact" : "float";
    if (exact) {
      partition_entropy<Rational>(r, pi, w, base);
    } else {
      partition_entropy<double>(r, pi, w, base);
    }
  } else {
    if (opt.weights) throw Error(ErrorKind::size_mismatch, "--weights applies only to partitions");
    const auto nums = parse_number_list(text);
    const bool exact = exact_path(opt, nums.has_fraction);
    r.inputs()["distribution"] = text_list(nums.values);
    r.inputs()["path"] = exact ? "exact" : "float";
    if (exact) {
      distribution_entropy<Rational>(r, nums, base);
    } else {
      distribution_entropy<double>(r, nums, base);
    }
  }
  return r;
}

Report cmd_joint(const std::string& input, const Options& opt) {
  Report r("joint");
  const auto m = parse_matrix(read_input(input));
  const bool exact = exact_path(opt, m.has_fraction);
  r.inputs()["matrix"] = matrix_text(m.rows);
  r.inputs()["path"] = exact ? "exact" : "float";
  if (exact) {
    joint_measures<Rational>(r, m, base_or(opt, Base::two));
  } else {
    joint_measures<double>(r, m, base_or(opt, Base::two));
  }
  return r;
}

Report cmd_ops(const std::string& op, const std::string& a, const std::string& b,
               const Options& opt) {
  Report r("ops");
  const auto first = parse_partition(read_input(a), opt.size);
  const auto second = parse_partition(read_input(b), opt.size);
  r.inputs()["operation"] = op;
  const auto residual_pairs = [&](const char* name, std::uint64_t v) {
    r.residual(name, static_cast<double>(v), "pairs");
  };

  Partition result = first;
  if (op == "join") {
    r.inputs()["pi"] = format_partition(first);
    r.inputs()["sigma"] = format_partition(second);
    result = join(first, second);
    residual_pairs("dit_union", symmetric_difference(dit_set(result),
                                                     dit_set(first) | dit_set(second)));
  } else if (op == "meet") {
    r.inputs()["pi"] = format_partition(first);
    r.inputs()["sigma"] = format_partition(second);
    result = meet(first, second);
    residual_pairs("meet_paths", symmetric_difference(dit_set(result),
                                                      dit_set(meet_via_interior(first, second))));
    residual_pairs("meet_interior",
                   symmetric_difference(dit_set(result),
                                        interior(dit_set(first) & dit_set(second))));
  } else if (op == "implies") {
    // `implies pi sigma` keeps the blocks of pi and discretizes those that
    // lie inside a block of sigma; it is the top partition iff sigma <= pi.
    r.inputs()["pi"] = format_partition(first);
    r.inputs()["sigma"] = format_partition(second);
    result = implication(second, first);
    residual_pairs("implication_paths",
                   symmetric_difference(dit_set(result),
                                        dit_set(implication_via_interior(second, first))));
    r.flag("sigma_refines_to_pi", refines(second, first));
    r.flag("is_top", result.is_discrete());
  } else {
    throw Error(ErrorKind::unknown_selector, "unknown operation '" + op + "'");
  }

  const Base base = base_or(opt, Base::two);
  r.text("result", format_partition(result), "partition");
  r.count("dits", dit_set(result).cardinality());
  r.count("blocks", result.block_count());
  r.quantity("h", logical_entropy<Rational>(result), prob);
  r.quantity("H", shannon_entropy(result, base), unit_name(base));
  return r;
}

Report cmd_compare(const std::string& p_text, const std::string& q_text, const Options& opt) {
  Report r("compare");
  const auto pn = parse_number_list(read_input(p_text));
  const auto qn = parse_number_list(read_input(q_text));
  const bool exact = exact_path(opt, pn.has_fraction || qn.has_fraction);
  r.inputs()["p"] = text_list(pn.values);
  r.inputs()["q"] = text_list(qn.values);
  r.inputs()["path"] = exact ? "exact" : "float";
  if (exact) {
    compare_logical<Rational>(r, pn, qn);
  } else {
    compare_logical<double>(r, pn, qn);
  }

  const Base base = base_or(opt, Base::two);
  const std::string unit = unit_name(base);
  const Distribution p(to_doubles(pn.values));
  const Distribution q(to_doubles(qn.values));
  const double Hpq = cross_entropy(p, q, base);
  const double Hqp = cross_entropy(q, p, base);
  const double Hs = symmetrized_cross_entropy(p, q, base);
  const double Ds = symmetrized_kl_divergence(p, q, base);
  const double Hp = shannon_entropy(p, base);
  const double Hq = shannon_entropy(q, base);
  r.quantity("H_pq", Hpq, unit);
  r.quantity("H_qp", Hqp, unit);
  r.quantity("H_s", Hs, unit);
  r.quantity("D_pq", kl_divergence(p, q, base), unit);
  r.quantity("D_qp", kl_divergence(q, p, base), unit);
  r.quantity("D_s", Ds, unit);
  // Both sides are +inf together when some p_i, q_i pair has one zero.
  if (std::isfinite(Hs)) r.residual("shannon_jensen", Ds - (Hs - (Hp + Hq) / 2.0), unit);
  return r;
}

Report cmd_verify(std::size_t max_n, const Options& opt) {
  Report r("verify");
  r.inputs()["max_n"] = max_n;
  r.inputs()["seed"] = opt.seed;
  const auto report = run_verification(max_n, opt.seed);
  for (const auto& s : report.suites) {
    Json rec = Json::object();
    rec["value"] = s.passed();
    rec["unit"] = "boolean";
    rec["checks"] = s.checks;
    rec["failures"] = s.failures;
    rec["worst_residual"] = number(s.worst_residual);
    r.raw(s.name, std::move(rec));
    r.residual(s.name, s.worst_residual, "worst abs");
  }
  r.count("pairs_checked_at_max_n", report.pairs_checked_at_max_n);
  r.count("pairs_checked_total", report.pairs_checked_total);
  r.flag("passed", report.passed());
  return r;
}

Report cmd_lattice(std::size_t n, bool dot, const Options&) {
  constexpr std::size_t max_edge_n = 6;
  Report r("lattice");
  r.inputs()["n"] = n;
  if (n == 0) throw Error(ErrorKind::empty_universe, "n must be at least 1");
  if (n > default_enumeration_limit) {
    throw Error(ErrorKind::limit_exceeded,
                "lattice counts are limited to n <= " + std::to_string(default_enumeration_limit));
  }
  if (dot && n > max_edge_n) {
    throw Error(ErrorKind::limit_exceeded,
                "Hasse diagrams are limited to n <= " + std::to_string(max_edge_n));
  }
  r.count("partitions", bell_number(n));
  if (n > max_edge_n) return r;

  const auto all = enumerate_partitions(n);
  const auto covers = refinement_covers(all);
  Json names = Json::array();
  for (const auto& pi : all) names.push_back(format_partition(pi));
  Json edges = Json::array();
  for (const auto& [lo, hi] : covers) edges.push_back({lo, hi});
  r.count("covers", covers.size());
  r.raw("nodes", Json{{"value", names}, {"unit", "partition"}});
  r.raw("edges", Json{{"value", edges}, {"unit", "index pair (coarser, finer)"}});

  if (dot) {
    std::ostringstream g;
    g << "digraph partitions {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < all.size(); ++i) {
      g << "  p" << i << " [label=\"" << names[i].get<std::string>() << "\"];\n";
    }
    for (const auto& [lo, hi] : covers) g << "  p" << lo << " -> p" << hi << ";\n";
    g << "}\n";
    r.text("dot", g.str(), "graphviz");
  }
  return r;
}

Report cmd_sample(const std::string& kind, const std::string& p_text, const SampleParams& params,
                  const Options& opt) {
  Report r("sample");
  const auto nums = parse_number_list(read_input(p_text));
  const Distribution p(to_doubles(nums.values));
  r.inputs()["kind"] = kind;
  r.inputs()["p"] = text_list(nums.values);
  r.inputs()["seed"] = opt.seed;

  SampleReport s;
  double target = 0.0;
  double scale = 1.0;
  std::string unit = prob;
  if (kind == "pairs") {
    const auto trials = params.trials.value_or(1000000);
    r.inputs()["trials"] = trials;
    s = pair_distinction_rate(p, trials, opt.seed);
    target = logical_entropy(p);
  } else if (kind == "seqavg") {
    const auto length = params.length.value_or(params.trials.value_or(10000));
    r.inputs()["length"] = length;
    s = average_difference_rate(p, length, opt.seed);
    target = logical_entropy(p);
  } else if (kind == "typical") {
    const Base base = base_or(opt, Base::two);
    const auto length = params.length.value_or(1000);
    r.inputs()["length"] = length;
    r.inputs()["samples"] = params.samples;
    s = typical_message_stats(p, length, params.samples, opt.seed);
    unit = unit_name(base);
    scale = base == Base::two ? 1.0 : std::numbers::ln2;
    target = shannon_entropy(p, base);
    r.quantity("log_typical_count", typical_count_log(p, length) * scale, unit);
  } else {
    throw Error(ErrorKind::unknown_selector, "unknown sample kind '" + kind + "'");
  }

  const double estimate = s.estimate * scale;
  r.quantity("estimate", estimate, unit);
  r.quantity("target", target, unit);
  r.quantity("abs_error", std::abs(estimate - target), unit);
  r.quantity("std_error", s.std_error * scale, unit);
  r.count("trials", s.trials);
  r.count("seed", s.seed);
  return r;
}

Report cmd_stirling(const std::string& sizes_text, const Options& opt) {
  Report r("stirling");
  const auto nums = parse_number_list(read_input(sizes_text));
  std::vector<std::uint64_t> sizes;
  for (const auto& v : nums.values) sizes.push_back(as_count(v, "block size"));
  r.inputs()["sizes"] = sizes;

  // Natural logs unless a base was asked for explicitly.
  const Base base = base_or(opt, Base::e);
  const double scale = base == Base::e ? 1.0 : 1.0 / std::numbers::ln2;
  const std::string unit = unit_name(base);
  const auto s = stirling_entropy(sizes);
  r.quantity("exact", s.exact * scale, unit);
  r.quantity("approx2", s.approx2 * scale, unit);
  r.quantity("approx3", s.approx3 * scale, unit);
  r.quantity("error2", s.error2 * scale, unit);
  r.quantity("error3", s.error3 * scale, unit);
  r.flag("approx3_closer", s.error3 < s.error2);
  return r;
}

}  // namespace ditlogic::cli

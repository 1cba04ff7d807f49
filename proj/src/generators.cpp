#include "graphlab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "graphlab/error.hpp"
#include "graphlab/metrics.hpp"

namespace graphlab {

MeasureRule MeasureRule::parse(const std::string& text) {
  MeasureRule r;
  if (text.empty() || text == "none") return r;
  if (text == "unit") {
    r.kind = Kind::Unit;
    return r;
  }
  if (text == "canonical_M") {
    r.kind = Kind::CanonicalM;
    return r;
  }
  const std::string prefix = "geometric:";
  if (text.rfind(prefix, 0) == 0) {
    r.kind = Kind::Geometric;
    std::size_t used = 0;
    try {
      r.q = std::stod(text.substr(prefix.size()), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() - prefix.size()) {
      throw Error(ErrorCode::InvalidArgument, "malformed geometric ratio in \"" + text + "\"");
    }
    return r;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown measure rule \"" + text + "\"");
}

std::string MeasureRule::to_string() const {
  switch (kind) {
    case Kind::None: return "none";
    case Kind::Unit: return "unit";
    case Kind::CanonicalM: return "canonical_M";
    case Kind::Geometric: {
      std::ostringstream s;
      s << "geometric:" << q;
      return s.str();
    }
  }
  return "none";
}

double zeta_tail(double p, long from) {
  if (!(p > 1.0)) throw Error(ErrorCode::InvalidArgument, "zeta tail needs p > 1");
  from = std::max(from, 1L);
  const long last = from + 20000;
  double s = 0.0;
  // Smallest terms first for accuracy.
  for (long j = last; j >= from; --j) s += std::pow(static_cast<double>(j), -p);
  // Σ_{j>last} j^{-p} ≤ ∫_{last}^{∞} x^{-p} dx.
  return s + std::pow(static_cast<double>(last), 1.0 - p) / (p - 1.0);
}

namespace {

/// One level of a family before killing and measure are attached. Vertices
/// of level n form a prefix of level n + 1.
struct RawLevel {
  std::vector<VertexId> ids;
  std::vector<int> depth;
  std::vector<Edge> edges;

  std::size_t add(VertexId id, int d) {
    ids.push_back(std::move(id));
    depth.push_back(d);
    return ids.size() - 1;
  }
};

using RawBuilder = std::function<RawLevel(int)>;

void check_spec(const FamilySpec& spec) {
  if (spec.measure.kind == MeasureRule::Kind::Geometric && !(spec.measure.q > 0.0 && spec.measure.q < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "geometric ratio must lie in (0, 1)");
  }
  if (!(spec.killing >= 0.0) || !std::isfinite(spec.killing)) {
    throw Error(ErrorCode::InvalidArgument, "killing scale must be nonnegative");
  }
  if (spec.killing > 0.0 && !(spec.killing_ratio > 0.0 && spec.killing_ratio <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "killing ratio must lie in (0, 1]");
  }
}

std::vector<double> killing_values(const FamilySpec& spec, const std::vector<int>& depth) {
  std::vector<double> c(depth.size(), 0.0);
  if (spec.killing > 0.0) {
    for (std::size_t i = 0; i < depth.size(); ++i) {
      c[i] = spec.killing * std::pow(spec.killing_ratio, depth[i] + 1);
    }
  }
  return c;
}

GraphFamily wrap(std::string name, VertexId root, RawBuilder raw, const FamilySpec& spec,
                 AnalyticFacts facts) {
  if (spec.killing > 0.0) {
    facts.killing_free = false;
    if (facts.bounded_degree_infinite_set) *facts.bounded_degree_infinite_set += spec.killing;
  }
  auto builder = [raw = std::move(raw), spec](int level) {
    RawLevel a = raw(level);
    RawLevel b = raw(level + 1);
    Truncation t;
    t.graph = WeightedGraph(a.ids, a.edges, killing_values(spec, a.depth));
    const std::size_t n = a.ids.size();
    std::vector<char> frontier(n, 0);
    for (const auto& e : b.edges) {
      if (e.u < n && e.v >= n) frontier[e.u] = 1;
      if (e.v < n && e.u >= n) frontier[e.v] = 1;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (frontier[x]) t.frontier.push_back(a.ids[x]);
    }
    switch (spec.measure.kind) {
      case MeasureRule::Kind::None: break;
      case MeasureRule::Kind::Unit: t.measure = Measure::unit(n); break;
      case MeasureRule::Kind::Geometric: {
        std::vector<double> m(n);
        for (std::size_t x = 0; x < n; ++x) m[x] = std::pow(spec.measure.q, a.depth[x] + 1);
        t.measure = Measure(std::move(m));
        break;
      }
      case MeasureRule::Kind::CanonicalM: {
        // All neighbours of B_n lie in B_{n+1}.
        std::vector<double> m(n, 0.0);
        for (const auto& e : b.edges) {
          if (e.u < n) m[e.u] += 0.5 / e.weight;
          if (e.v < n) m[e.v] += 0.5 / e.weight;
        }
        t.measure = Measure(std::move(m));
        break;
      }
    }
    return t;
  };
  return GraphFamily(std::move(name), std::move(root), std::move(builder), std::move(facts));
}

std::string str(long v) { return std::to_string(v); }
std::string pair_id(long n, long k) { return std::to_string(n) + ":" + std::to_string(k); }

void require_level_cap(int level, int cap, const std::string& family) {
  if (level > cap) {
    throw Error(ErrorCode::InvalidArgument,
                family + " supports levels up to " + std::to_string(cap) + " (edge weights overflow)");
  }
}

// Finite graphs: levels are hop balls around vertex 0, ordered by (hops, index).
GraphFamily finite_family(std::string name, std::vector<VertexId> ids, std::vector<Edge> edges,
                          const FamilySpec& spec, AnalyticFacts facts) {
  const std::size_t n = ids.size();
  WeightedGraph full(ids, edges, std::vector<double>(n, 0.0));
  std::vector<int> hops(n, -1);
  std::vector<std::size_t> queue{0};
  hops[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& nb : full.neighbors(queue[head])) {
      if (hops[nb.vertex] < 0) {
        hops[nb.vertex] = hops[queue[head]] + 1;
        queue.push_back(nb.vertex);
      }
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto rank = [&](std::size_t x) { return hops[x] < 0 ? std::numeric_limits<int>::max() : hops[x]; };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rank(a) < rank(b); });
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

  facts.finite = true;
  facts.tree = full.is_tree();
  double inv = 0.0;
  for (const auto& e : edges) inv += 1.0 / e.weight;
  facts.inverse_weight_total = inv;
  PseudometricTable d = path_metric(full, LengthFunction::inverse_b());
  double diam = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) diam = std::max(diam, d.at(x, y).as_double());
  }
  facts.d_diameter_bound = diam;
  facts.d_tail = [](int) { return 0.0; };
  facts.rho_tail = [](int) { return 0.0; };
  if (spec.measure.kind == MeasureRule::Kind::Unit) facts.total_measure = static_cast<double>(n);
  if (spec.measure.kind == MeasureRule::Kind::CanonicalM) facts.total_measure = inv;
  if (spec.measure.kind == MeasureRule::Kind::Geometric) {
    double total = 0.0;
    for (std::size_t x = 0; x < n; ++x) total += std::pow(spec.measure.q, std::max(hops[x], 0) + 1);
    facts.total_measure = total;
  }

  auto raw = [=](int level) {
    RawLevel r;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t x = order[i];
      if (hops[x] < 0 || hops[x] > level) break;
      r.add(ids[x], hops[x]);
    }
    const std::size_t k = r.ids.size();
    for (const auto& e : edges) {
      std::size_t u = position[e.u];
      std::size_t v = position[e.v];
      if (u < k && v < k) r.edges.push_back({std::min(u, v), std::max(u, v), e.weight});
    }
    std::sort(r.edges.begin(), r.edges.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    return r;
  };
  if (hops.end() != std::find(hops.begin(), hops.end(), -1)) {
    facts.notes.push_back("vertices unreachable from the root are never part of a level");
  }
  return wrap(std::move(name), ids[0], raw, spec, std::move(facts));
}

void require_size(const FamilySpec& spec) {
  if (spec.size < 1) throw Error(ErrorCode::InvalidArgument, "size must be at least 1");
  if (!(spec.weight > 0.0)) throw Error(ErrorCode::InvalidArgument, "weight must be positive");
}

GraphFamily make_finite_path(const FamilySpec& spec) {
  require_size(spec);
  std::vector<VertexId> ids;
  std::vector<Edge> edges;
  for (int i = 0; i < spec.size; ++i) ids.push_back(str(i));
  for (int i = 1; i < spec.size; ++i) {
    edges.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i), spec.weight});
  }
  return finite_family("finite_path", ids, edges, spec, {});
}

GraphFamily make_finite_tree(const FamilySpec& spec) {
  require_size(spec);
  std::vector<VertexId> ids;
  std::vector<Edge> edges;
  for (int i = 0; i < spec.size; ++i) ids.push_back(str(i));
  for (int i = 1; i < spec.size; ++i) {
    edges.push_back({static_cast<std::size_t>((i - 1) / 2), static_cast<std::size_t>(i), spec.weight});
  }
  return finite_family("finite_tree", ids, edges, spec, {});
}

GraphFamily make_random_tree(const FamilySpec& spec) {
  require_size(spec);
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> log_weight(std::log(0.25), std::log(4.0));
  std::vector<VertexId> ids;
  std::vector<Edge> edges;
  for (int i = 0; i < spec.size; ++i) ids.push_back(str(i));
  for (int i = 1; i < spec.size; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    std::size_t p = static_cast<std::size_t>(parent(rng));
    edges.push_back({p, static_cast<std::size_t>(i), std::exp(log_weight(rng))});
  }
  return finite_family("random_tree", ids, edges, spec, {});
}

GraphFamily make_ray_power(const FamilySpec& spec) {
  const double p = spec.power;
  if (!(p >= 0.0) || !std::isfinite(p)) throw Error(ErrorCode::InvalidArgument, "ray_power needs p >= 0");
  AnalyticFacts facts;
  facts.tree = true;
  if (p > 1.0) {
    const double zeta = zeta_tail(p, 1);
    facts.inverse_weight_total = zeta;
    facts.d_diameter_bound = zeta;
    // Vertices beyond level n are m ≥ n + 2; d(m, n + 1) ≤ Σ_{j ≥ n+1} j^{-p}.
    facts.d_tail = [p](int n) { return zeta_tail(p, n + 1); };
    facts.rho_tail = [p](int n) { return std::sqrt(zeta_tail(p, n + 1)); };
  } else {
    facts.d_diameter_lower = [p](int n) {
      double s = 0.0;
      for (int j = n; j >= 1; --j) s += std::pow(static_cast<double>(j), -p);
      return s;
    };
    facts.notes.push_back("p <= 1: the d-diameter diverges like the harmonic-type series");
  }
  if (spec.measure.kind == MeasureRule::Kind::Geometric) {
    facts.total_measure = spec.measure.q / (1.0 - spec.measure.q);
  } else if (spec.measure.kind == MeasureRule::Kind::CanonicalM && facts.inverse_weight_total) {
    facts.total_measure = facts.inverse_weight_total;
  }
  auto raw = [p](int level) {
    RawLevel r;
    for (int n = 1; n <= level + 1; ++n) r.add(str(n), n - 1);
    for (int n = 1; n <= level; ++n) {
      r.edges.push_back({static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n),
                         std::pow(static_cast<double>(n), p)});
    }
    return r;
  };
  std::ostringstream name;
  name << "ray_power(" << p << ")";
  return wrap(name.str(), "1", raw, spec, std::move(facts));
}

GraphFamily make_comb(const FamilySpec& spec) {
  AnalyticFacts facts;
  facts.tree = true;
  // Spine length Σ 2^{-n} = 1 and every tooth has length Σ 2^{-k} = 1.
  facts.d_diameter_bound = 3.0;
  // The vertices x_{n,2} are pairwise at d-distance at least 2(1/2 + 1/4).
  facts.d_separation = 1.5;
  // The vertices x_{n,1} have Σ_y b = 2 + 4.
  facts.bounded_degree_infinite_set = 6.0;
  auto raw = [](int level) {
    require_level_cap(level, 1000, "comb");
    RawLevel r;
    std::vector<std::vector<std::size_t>> index(static_cast<std::size_t>(level) + 1);
    for (int s = 0; s <= level; ++s) {
      for (int n = 0; n <= s; ++n) {
        int k = s - n;
        std::size_t i = r.add(pair_id(n, k), s);
        index[static_cast<std::size_t>(n)].push_back(i);
        if (k > 0) {
          r.edges.push_back({index[static_cast<std::size_t>(n)][static_cast<std::size_t>(k - 1)], i,
                             std::ldexp(1.0, k)});
        } else if (n > 0) {
          r.edges.push_back({index[static_cast<std::size_t>(n - 1)][0], i, std::ldexp(1.0, n)});
        }
      }
    }
    return r;
  };
  return wrap("comb", "0:0", raw, spec, std::move(facts));
}

GraphFamily make_triangle_ladder(const FamilySpec& spec) {
  AnalyticFacts facts;
  // d(x_1, x_{n+1}) = Σ_{j ≤ n} 2/j on level n.
  facts.d_diameter_lower = [](int n) {
    double s = 0.0;
    for (int j = n; j >= 1; --j) s += 2.0 / j;
    return s;
  };
  // The subgraph resistance of (x_j, x_{j+1}) is 2/(j(j+1)), so spine
  // vertices beyond level n lie within r ≤ 2/(n+1) of x_{n+1}; a tooth of
  // level j ≥ n+1 lies within d = 1/j of x_j, and ρ² ≤ d.
  facts.rho_tail = [](int n) {
    const double k = std::max(n, 1);
    return std::sqrt(2.0 / k) + 1.0 / std::sqrt(k);
  };
  facts.rho_diameter_bound = 2.0 * (std::sqrt(2.0) + 1.0);
  facts.notes.push_back("subgraph resistance r(x_n, x_{n+1}) = 2/(n(n+1))");
  auto raw = [](int level) {
    RawLevel r;
    std::vector<std::size_t> spine;
    r.add("1", 0);
    spine.push_back(0);
    for (int d = 1; d <= level; ++d) {
      const int n = d;  // teeth of level n and spine vertex n + 1 appear at depth n
      std::size_t next = r.add(str(n + 1), d);
      spine.push_back(next);
      const std::size_t left = spine[static_cast<std::size_t>(n - 1)];
      r.edges.push_back({left, next, n / 2.0});
      for (int k = 1; k <= n; ++k) {
        std::size_t tooth = r.add(pair_id(n, k), d);
        r.edges.push_back({left, tooth, static_cast<double>(n)});
        r.edges.push_back({next, tooth, static_cast<double>(n)});
      }
    }
    return r;
  };
  return wrap("triangle_ladder", "1", raw, spec, std::move(facts));
}

GraphFamily make_twin_rays(const FamilySpec& spec) {
  AnalyticFacts facts;
  // Rails have length Σ 2^{-n} = 2 and every vertex is within d = 1 of a
  // rail vertex at its level, so d(v, x_0^{(0)}) ≤ 1 + 2.
  facts.d_diameter_bound = 6.0;
  // The extra vertices x_n^{(k)}, k ≥ 2, only touch the rails with weight 1.
  facts.d_separation = 2.0;
  facts.bounded_degree_infinite_set = 2.0;
  auto raw = [](int level) {
    require_level_cap(level, 1000, "twin_rays");
    RawLevel r;
    std::vector<std::size_t> previous;
    for (int n = 0; n <= level; ++n) {
      std::vector<std::size_t> current;
      for (int k = 0; k <= n + 1; ++k) current.push_back(r.add(pair_id(n, k), n));
      for (int i = 0; i < 2; ++i) {
        if (n > 0) r.edges.push_back({previous[static_cast<std::size_t>(i)], current[static_cast<std::size_t>(i)], std::ldexp(1.0, n - 1)});
      }
      r.edges.push_back({current[0], current[1], 1.0});
      for (int k = 2; k <= n + 1; ++k) {
        r.edges.push_back({current[0], current[static_cast<std::size_t>(k)], 1.0});
        r.edges.push_back({current[1], current[static_cast<std::size_t>(k)], 1.0});
      }
      previous = current;
    }
    return r;
  };
  return wrap("twin_rays", "0:0", raw, spec, std::move(facts));
}

GraphFamily make_star_augmented(const FamilySpec& spec) {
  if (spec.measure.kind == MeasureRule::Kind::CanonicalM) {
    throw Error(ErrorCode::InvalidArgument, "canonical_M is infinite at the hub of star_augmented");
  }
  FamilySpec base = spec.base ? *spec.base : FamilySpec{};
  if (!spec.base) {
    base.name = "ray_power";
    base.power = 3.0;
  }
  if (base.name != "ray_power" || !(base.power > 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "star_augmented needs a ray_power base with p > 1");
  }
  const double p = base.power;
  AnalyticFacts facts;
  facts.locally_finite = false;
  // Adding edges only shortens d, so the base certificates carry over.
  facts.d_diameter_bound = zeta_tail(p, 1);
  facts.d_tail = [p](int n) { return zeta_tail(p, n + 1); };
  facts.rho_tail = [p](int n) { return std::sqrt(zeta_tail(p, n + 1)); };
  facts.notes.push_back("hub 1 joined to every n >= 3 with weight 2^-n");
  if (spec.measure.kind == MeasureRule::Kind::Geometric) {
    facts.total_measure = spec.measure.q / (1.0 - spec.measure.q);
  }
  auto raw = [p](int level) {
    require_level_cap(level, 1000, "star_augmented");
    RawLevel r;
    for (int n = 1; n <= level + 1; ++n) r.add(str(n), n - 1);
    for (int n = 1; n <= level; ++n) {
      r.edges.push_back({static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n),
                         std::pow(static_cast<double>(n), p)});
    }
    for (int n = 3; n <= level + 1; ++n) {
      r.edges.push_back({0, static_cast<std::size_t>(n - 1), std::ldexp(1.0, -n)});
    }
    std::sort(r.edges.begin(), r.edges.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    return r;
  };
  std::ostringstream name;
  name << "star_augmented(ray_power(" << p << "))";
  return wrap(name.str(), "1", raw, spec, std::move(facts));
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"finite_path", "finite_tree",     "random_tree",
                                              "ray_power",   "comb",            "triangle_ladder",
                                              "twin_rays",   "star_augmented"};
  return names;
}

GraphFamily make_family(const FamilySpec& spec) {
  check_spec(spec);
  if (spec.name == "finite_path") return make_finite_path(spec);
  if (spec.name == "finite_tree") return make_finite_tree(spec);
  if (spec.name == "random_tree") return make_random_tree(spec);
  if (spec.name == "ray_power") return make_ray_power(spec);
  if (spec.name == "comb") return make_comb(spec);
  if (spec.name == "triangle_ladder") return make_triangle_ladder(spec);
  if (spec.name == "twin_rays") return make_twin_rays(spec);
  if (spec.name == "star_augmented") return make_star_augmented(spec);
  throw Error(ErrorCode::InvalidArgument, "unknown family \"" + spec.name + "\"");
}

std::vector<Witness> witness_functions(const GraphFamily& family, int level) {
  if (family.name().rfind("ray_power(", 0) != 0) {
    throw Error(ErrorCode::NotApplicable, "witness functions need a ray_power family");
  }
  const double p = std::stod(family.name().substr(std::string("ray_power(").size()));
  Truncation t = family.build_ball(level);
  const auto n = static_cast<Eigen::Index>(t.graph.size());
  auto build = [&](const std::string& name, double a) {
    Witness w;
    w.name = name;
    w.values.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) w.values[i] = std::pow(static_cast<double>(i + 1), -a);
    w.energy = energy(t.graph, w.values).energy;
    // Σ n^p (n^{-a} - (n+1)^{-a})² behaves like Σ n^{p-2a-2}. The killing
    // rule keeps c bounded, and a > 1/2 keeps Σ c f² finite.
    w.finite_energy = a > 0.5 * (p - 1.0);
    return w;
  };
  std::vector<Witness> out;
  out.push_back(build("f", 1.0));
  for (int k = 1; k <= 3; ++k) out.push_back(build("f_" + std::to_string(k), 1.0 + 1.0 / k));
  Witness one = build("one", 0.0);
  one.finite_energy = family.facts().killing_free;
  out.push_back(one);
  return out;
}

}  // namespace graphlab

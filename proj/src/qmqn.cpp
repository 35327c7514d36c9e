#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "constructive_util.hpp"
#include "pr/constructive.hpp"
#include "pr/errors.hpp"
#include "pr/extremal.hpp"
#include "pr/rng.hpp"

namespace pr {

using detail::ScanStatus;

std::uint64_t QmqnPlan::res_prefix_size(std::uint64_t i) const {
  if (i > t_mu) i = t_mu;
  return n + ((1ULL << i) - 1) * t_eta;
}

QmqnPlan make_qmqn_plan(std::uint64_t m, std::uint64_t n, double eps, bool override_condition) {
  if (!(n >= m && m >= 2)) throw std::invalid_argument("qmqn: n >= m >= 2 required");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("qmqn: 0 < eps < 1 required");
  QmqnPlan p;
  p.m = m;
  p.n = n;
  p.epsilon = eps;
  p.condition_holds = epsilon_condition(m, n, eps);
  if (!p.condition_holds && !override_condition)
    throw HypothesisViolation(
        "qmqn: (n+m)/n * 1/((1-eps) log m) + m^-eps <= eps fails; enable the desk-scale override "
        "to attempt the run anyway");
  double log_m = std::log2(static_cast<double>(m));
  double t_mu_real = (1.0 - eps) * log_m;
  p.t_mu = static_cast<std::uint64_t>(std::max(0.0, std::floor(t_mu_real)));
  p.t_mu = std::min<std::uint64_t>(p.t_mu, m);
  if (p.t_mu > 62) throw InfeasibleArithmetic("qmqn: t_mu too large for the reservoir layout");
  p.t_eta = std::min<std::uint64_t>((n * p.t_mu) / m, n);
  double host_real = static_cast<double>(n) *
                     (static_cast<double>(m) - (1.0 - eps) * (1.0 - eps) * log_m);
  if (host_real < 1.0) throw InfeasibleArithmetic("qmqn: host dimension collapses to zero");
  p.host_dim = static_cast<std::uint64_t>(std::floor(host_real));
  p.rounding_slack =
      std::abs(static_cast<double>(p.host_dim) -
               (static_cast<double>(n) * static_cast<double>(m - p.t_mu) +
                eps * static_cast<double>(n) * static_cast<double>(p.t_mu)));
  unsigned __int128 total =
      static_cast<unsigned __int128>(n) + (((static_cast<unsigned __int128>(1) << p.t_mu) - 1) *
                                           p.t_eta);
  unsigned __int128 need = static_cast<unsigned __int128>(m) + total +
                           static_cast<unsigned __int128>(m - p.t_mu) * n;
  if (need > p.host_dim)
    throw InfeasibleArithmetic(
        "qmqn reservoir budget: n + (2^t_mu - 1) t_eta <= N - n(m - t_mu) - m fails");
  p.reservoir_total = static_cast<std::uint64_t>(total);
  return p;
}

namespace {

struct RedSwitch {  // a truncated blob with no blue vertex found
  Blob blob;
  bool exact;  // the whole blob was scanned
};

struct MonoCubeFound {  // a completion blob entirely in the opposite color
  Blob blob;
  Color color;
};

// deterministic family of abstract subsets of [0,dim): a few per bottom layer
// up to `depth`, then a nested chain with same-size mates through a handful
// of completion layers
std::vector<Vertex> sample_family(std::uint64_t dim, std::uint64_t depth, std::uint64_t seed,
                                  std::uint64_t per_layer) {
  SplitMix rng(mix64(seed) ^ (dim * 1315423911ULL) ^ depth);
  std::vector<std::uint32_t> perm(dim);
  for (std::uint64_t i = 0; i < dim; ++i) perm[i] = static_cast<std::uint32_t>(i);
  auto shuffle = [&](std::vector<std::uint32_t>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[rng.next_below(i)]);
  };
  auto random_subset = [&](std::uint64_t k) {
    std::vector<std::uint32_t> p(perm);
    shuffle(p);
    p.resize(k);
    return Vertex::from_members(std::move(p));
  };

  std::vector<Vertex> fam;
  std::uint64_t kd = std::min(depth, dim);
  for (std::uint64_t k = 0; k <= kd; ++k) {
    fam.push_back(Vertex::range(0, static_cast<std::uint32_t>(k)));
    for (std::uint64_t extra = 1; extra < per_layer; ++extra) fam.push_back(random_subset(k));
  }
  if (dim > depth) {
    std::vector<std::uint64_t> layers = {depth + 1, depth + 2, (depth + 1 + dim) / 2, dim - 1,
                                         dim};
    std::sort(layers.begin(), layers.end());
    layers.erase(std::unique(layers.begin(), layers.end()), layers.end());
    std::vector<std::uint32_t> chain_perm(perm);
    shuffle(chain_perm);
    for (std::uint64_t L : layers) {
      if (L <= depth || L > dim) continue;
      fam.push_back(Vertex::from_members(
          std::vector<std::uint32_t>(chain_perm.begin(), chain_perm.begin() + L)));
      if (L < dim) fam.push_back(random_subset(L));
    }
  }
  std::sort(fam.begin(), fam.end(), size_lex_less);
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  return fam;
}

// first `count` free indices of [0,host) \ used, skipping the first `skip`
// free ones
Vertex free_block(const Vertex& used, std::uint64_t host, std::uint64_t skip,
                  std::uint64_t count) {
  std::vector<std::uint32_t> picked;
  picked.reserve(count);
  auto um = used.members();
  std::size_t ui = 0;
  std::uint64_t seen_free = 0;
  for (std::uint64_t e = 0; e < host && picked.size() < count; ++e) {
    while (ui < um.size() && um[ui] < e) ++ui;
    if (ui < um.size() && um[ui] == e) continue;
    if (seen_free++ < skip) continue;
    picked.push_back(static_cast<std::uint32_t>(e));
  }
  if (picked.size() < count)
    throw InfeasibleArithmetic("qmqn: completion block does not fit in the host lattice");
  return Vertex::from_members(std::move(picked));
}

struct Engine {
  const Coloring& coloring;
  const QmqnPlan& plan;
  std::uint64_t probe_limit;

  Vertex ground_x;  // [0, m)
  std::unordered_map<Vertex, std::pair<Vertex, Vertex>> skel;  // X -> (phi(X), S_X)
  std::vector<std::uint64_t> max_sx;  // per skeleton layer

  Engine(const Coloring& c, const QmqnPlan& p, std::uint64_t probes)
      : coloring(c), plan(p), probe_limit(std::max<std::uint64_t>(1, probes)),
        ground_x(Vertex::range(0, static_cast<std::uint32_t>(p.m))),
        max_sx(p.t_mu + 1, 0) {}

  std::uint64_t probe_for(const Blob& b) const { return std::min(b.count(), probe_limit); }

  const std::pair<Vertex, Vertex>& eval_skel(const Vertex& x) {
    auto it = skel.find(x);
    if (it != skel.end()) return it->second;
    Vertex s;
    x.for_each_member([&](std::uint32_t e) {
      const auto& sub = eval_skel(x.minus(Vertex{e}));
      s = s.union_with(sub.second).union_with(sub.first.minus(ground_x));
    });
    std::uint64_t cap = ((1ULL << x.size()) - 1) * plan.t_eta;
    if (s.size() > cap)
      throw ConstructionBug("qmqn: base growth bound (2^i - 1) t_eta violated at " +
                            x.to_string());
    max_sx[x.size()] = std::max<std::uint64_t>(max_sx[x.size()], s.size());

    // T_X: lexicographically first n reservoir elements outside S_X
    std::uint64_t pref = plan.res_prefix_size(x.size());
    std::vector<std::uint32_t> tmem;
    tmem.reserve(plan.n);
    for (std::uint64_t e = plan.res_begin(); e < plan.res_begin() + pref && tmem.size() < plan.n;
         ++e)
      if (!s.contains(static_cast<std::uint32_t>(e)))
        tmem.push_back(static_cast<std::uint32_t>(e));
    if (tmem.size() < plan.n)
      throw InfeasibleArithmetic("qmqn: variable set T_X does not fit in the reservoir prefix");
    Vertex base = x.union_with(s);
    Blob blob(base, Vertex::from_members(std::move(tmem)), base.size() + plan.t_eta);
    auto scan = detail::scan_blob(coloring, blob, Color::Blue, probe_for(blob));
    if (scan.status == ScanStatus::Found)
      return skel.emplace(x, std::make_pair(scan.found, s)).first->second;
    throw RedSwitch{blob, scan.status == ScanStatus::AllOpposite};
  }

  Vertex completion_block(std::uint64_t level) const {  // level in (t_mu, m]
    std::uint64_t begin = plan.res_end() + (level - plan.t_mu - 1) * plan.n;
    return Vertex::range(static_cast<std::uint32_t>(begin),
                         static_cast<std::uint32_t>(begin + plan.n));
  }

  Vertex eval_blue(const Vertex& x) {
    if (x.size() <= plan.t_mu) return eval_skel(x).first;
    // the reservoir span and the blocks of all previous completion layers are
    // contiguous index ranges
    Vertex spans = Vertex::range(
        static_cast<std::uint32_t>(plan.res_begin()),
        static_cast<std::uint32_t>(plan.res_end() + (x.size() - plan.t_mu - 1) * plan.n));
    Vertex base = x.union_with(spans);
    Blob blob(base, completion_block(x.size()));
    auto scan = detail::scan_blob(coloring, blob, Color::Blue, probe_for(blob));
    if (scan.status == ScanStatus::Found) return scan.found;
    if (scan.status == ScanStatus::AllOpposite) throw MonoCubeFound{blob, Color::Red};
    throw BudgetExceeded("qmqn: completion blob scan inconclusive at the probe limit");
  }
};

void add_identity(std::vector<LayerIdentity>& rows, std::string name, std::uint64_t layer,
                  std::uint64_t lhs, std::uint64_t rhs, bool ok) {
  rows.push_back(LayerIdentity{std::move(name), layer, lhs, rhs, ok});
}

void verify_sample(const std::vector<std::pair<Vertex, Vertex>>& sample, const Coloring& coloring,
                   Color want, const std::optional<Vertex>& good_ground) {
  for (const auto& [abs_a, img_a] : sample) {
    if (coloring.of(img_a) != want)
      throw ConstructionBug("qmqn: sampled image has the wrong color at " + abs_a.to_string());
    if (good_ground && !(img_a.intersect(*good_ground) ==
                         detail::rename_subset(abs_a, good_ground->members())))
      throw ConstructionBug("qmqn: embedding is not ground-good at " + abs_a.to_string());
  }
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = 0; j < sample.size(); ++j) {
      if (i == j) continue;
      bool rel = sample[i].first.subset_of(sample[j].first);
      bool img = sample[i].second.subset_of(sample[j].second);
      if (rel != img)
        throw ConstructionBug("qmqn: induced condition fails on the sampled pair " +
                              sample[i].first.to_string() + ", " + sample[j].first.to_string());
    }
}

// result over an interval copy: abstract subsets of [0,dim) map to
// base u rename(W, variable members)
QmqnResult interval_result(QmqnResult res, const Blob& blob, Color color,
                           const Coloring& coloring, std::uint64_t seed,
                           std::uint64_t per_layer) {
  auto vm = blob.variable.members();
  res.color = color;
  res.copy_dim = vm.size();
  res.sample.clear();
  auto fam = sample_family(vm.size(), std::min<std::uint64_t>(vm.size(), 6), seed, per_layer);
  for (const Vertex& w : fam)
    res.sample.emplace_back(w, blob.base.union_with(detail::rename_subset(w, vm)));
  verify_sample(res.sample, coloring, color, std::nullopt);
  res.sample_verified = true;
  return res;
}

}  // namespace

QmqnResult qmqn_construct(std::uint64_t m, std::uint64_t n, double eps, const Coloring& coloring,
                          const QmqnOptions& opts) {
  QmqnPlan plan = make_qmqn_plan(m, n, eps, opts.override_condition);
  if (coloring.dim() != plan.host_dim)
    throw std::invalid_argument("qmqn_construct: coloring dimension must equal the plan's N (" +
                                std::to_string(plan.host_dim) + ")");
  QmqnResult res;
  res.plan = plan;
  {
    unsigned __int128 rhs = static_cast<unsigned __int128>(plan.host_dim) -
                            static_cast<unsigned __int128>(n) * (m - plan.t_mu) - m;
    add_identity(res.identities, "reservoir-budget", 0, plan.reservoir_total,
                 static_cast<std::uint64_t>(rhs), plan.reservoir_total <= rhs);
    add_identity(res.identities, "volume-cap", 0, m + plan.reservoir_total,
                 static_cast<std::uint64_t>(rhs) + m, m + plan.reservoir_total <= rhs + m);
    for (std::uint64_t i = 0; i <= plan.t_mu; ++i)
      add_identity(res.identities, "reservoir-prefix", i, plan.res_prefix_size(i),
                   n + ((1ULL << i) - 1) * plan.t_eta,
                   plan.res_prefix_size(i) == n + ((1ULL << i) - 1) * plan.t_eta);
  }

  Engine eng(coloring, plan, opts.probe_limit.value_or(2048));
  try {
    try {
      auto fam = sample_family(m, plan.t_mu, opts.sample_seed, opts.sample_per_layer);
      for (const Vertex& x : fam) res.sample.emplace_back(x, eng.eval_blue(x));
      verify_sample(res.sample, coloring, Color::Blue, eng.ground_x);
      res.color = Color::Blue;
      res.copy_dim = m;
      res.sample_verified = true;
    } catch (const MonoCubeFound& cube) {
      res = interval_result(std::move(res), cube.blob, cube.color, coloring, opts.sample_seed,
                            opts.sample_per_layer);
    }
  } catch (const RedSwitch& rs) {
    res.phase1_fired = rs.exact;
    res.presumed_red = !rs.exact;
    res.sample.clear();
    const Vertex& s_base = rs.blob.base;
    const Vertex& t_var = rs.blob.variable;
    std::uint64_t span = s_base.size() + t_var.size();
    if (span + (n - plan.t_eta) * m > plan.host_dim)
      throw InfeasibleArithmetic(
          "qmqn red route: |S u T| <= N - (n - t_eta) m fails for the red blob");
    Vertex used = s_base.union_with(t_var);
    auto tm = t_var.members();
    try {
      auto fam = sample_family(n, plan.t_eta, opts.sample_seed, opts.sample_per_layer);
      for (const Vertex& w_abs : fam) {
        Vertex w = detail::rename_subset(w_abs, tm);
        Vertex img;
        if (w.size() <= plan.t_eta) {
          img = s_base.union_with(w);
          if (coloring.of(img) != Color::Red) {
            if (rs.exact)
              throw ConstructionBug("qmqn: fully scanned red blob produced a blue vertex");
            throw BudgetExceeded(
                "qmqn: presumed-red blob refuted beyond the probe limit; raise probe_limit");
          }
        } else {
          // blocks of all previous completion layers in one pass
          Vertex block_prefix =
              free_block(used, plan.host_dim, 0, (w.size() - plan.t_eta - 1) * m);
          Vertex base = w.union_with(s_base).union_with(block_prefix);
          Blob blob(base, free_block(used, plan.host_dim, (w.size() - plan.t_eta - 1) * m, m));
          auto scan = detail::scan_blob(coloring, blob, Color::Red, eng.probe_for(blob));
          if (scan.status == ScanStatus::Found)
            img = scan.found;
          else if (scan.status == ScanStatus::AllOpposite)
            throw MonoCubeFound{blob, Color::Blue};
          else
            throw BudgetExceeded("qmqn: red-route completion scan inconclusive at probe limit");
        }
        res.sample.emplace_back(w_abs, img);
      }
      verify_sample(res.sample, coloring, Color::Red, t_var);
      res.color = Color::Red;
      res.copy_dim = n;
      res.sample_verified = true;
    } catch (const MonoCubeFound& cube) {
      res = interval_result(std::move(res), cube.blob, cube.color, coloring, opts.sample_seed,
                            opts.sample_per_layer);
    }
  }

  for (std::uint64_t i = 0; i < eng.max_sx.size(); ++i)
    add_identity(res.identities, "base-growth", i, eng.max_sx[i],
                 ((1ULL << i) - 1) * plan.t_eta, eng.max_sx[i] <= ((1ULL << i) - 1) * plan.t_eta);
  res.queries_used = coloring.oracle_queries();
  return res;
}

std::optional<Blob> find_red_truncated_blob(const Coloring& coloring, std::uint32_t n,
                                            std::uint64_t t_eta, std::uint64_t max_base) {
  std::uint32_t host = coloring.dim();
  if (host > 16) throw std::invalid_argument("find_red_truncated_blob: host <= 16");
  if (n > host) return std::nullopt;
  GroundSet ground{host};
  for (std::uint32_t s_size = 0; s_size <= std::min<std::uint64_t>(max_base, host - n); ++s_size) {
    LayerCursor bases(ground, s_size);
    Vertex base;
    while (bases.next(base)) {
      auto free_members = ground.full().minus(base).members();
      LayerCursor vars(GroundSet{static_cast<std::uint32_t>(free_members.size())}, n);
      Vertex var_abs;
      while (vars.next(var_abs)) {
        Blob blob(base, detail::rename_subset(var_abs, free_members), base.size() + t_eta);
        auto scan = detail::scan_blob(coloring, blob, Color::Blue, blob.count());
        if (scan.status == detail::ScanStatus::AllOpposite) return blob;
      }
    }
  }
  return std::nullopt;
}

}  // namespace pr

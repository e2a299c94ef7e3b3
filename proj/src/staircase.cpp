#include "rsyt/staircase.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "rsyt/error.hpp"

namespace rsyt {

namespace {

std::size_t pair_count(int k) { return static_cast<std::size_t>(k) * (k - 1) / 2; }

// Swap positions obtained by firing label pairs in the given order, or
// nullopt if some pair is not adjacent when it fires.
std::optional<std::vector<int>> positions_of_pairs(int k, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> label_at(k), pos_of(k);
  std::iota(label_at.begin(), label_at.end(), 0);
  std::iota(pos_of.begin(), pos_of.end(), 0);
  std::vector<int> swaps;
  swaps.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    const int p = std::min(pos_of[a], pos_of[b]);
    if (std::abs(pos_of[a] - pos_of[b]) != 1) return std::nullopt;
    std::swap(label_at[p], label_at[p + 1]);
    pos_of[label_at[p]] = p;
    pos_of[label_at[p + 1]] = p + 1;
    swaps.push_back(p + 1);
  }
  return swaps;
}

// Integer coordinates for the randomized searches; slopes compare exactly by
// cross multiplication.
struct IPoint {
  long long x;
  long long y;
};

// Pair ids (a*k + b, labels by increasing x) in firing order, or nullopt when
// the configuration is not generic.
std::optional<std::vector<int>> pair_order(std::vector<IPoint> pts) {
  const int k = static_cast<int>(pts.size());
  std::sort(pts.begin(), pts.end(), [](const IPoint& p, const IPoint& q) { return p.x < q.x; });
  for (int i = 0; i + 1 < k; ++i)
    if (pts[i].x == pts[i + 1].x) return std::nullopt;
  std::vector<int> ids;
  ids.reserve(pair_count(k));
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) ids.push_back(a * k + b);
  // slope(p) < slope(q)  <=>  dy_p * dx_q < dy_q * dx_p, all dx > 0.
  auto cmp = [&](int p, int q) {
    const IPoint &p1 = pts[p / k], &p2 = pts[p % k], &q1 = pts[q / k], &q2 = pts[q % k];
    return (p2.y - p1.y) * (q2.x - q1.x) < (q2.y - q1.y) * (p2.x - p1.x);
  };
  std::sort(ids.begin(), ids.end(), cmp);
  for (std::size_t i = 0; i + 1 < ids.size(); ++i)
    if (!cmp(ids[i], ids[i + 1])) return std::nullopt;
  return ids;
}

std::vector<int> swaps_of_order(int k, const std::vector<int>& ids) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(ids.size());
  for (int id : ids) pairs.emplace_back(id / k, id % k);
  auto swaps = positions_of_pairs(k, pairs);
  if (!swaps) throw std::logic_error("slope order does not form a sorting network");
  return *swaps;
}

PointConfiguration to_configuration(const std::vector<IPoint>& pts) {
  PointConfiguration c;
  for (const auto& p : pts) c.points.push_back(Point2{Rational(p.x), Rational(p.y)});
  return c;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class GridSampler {
 public:
  GridSampler(std::uint64_t seed, int grid) : rng_(seed), grid_(std::max(1, grid)) {}

  // Call once per trial; the grid doubles after every full round.
  void count_trial() {
    if (++trials_ % kGridRound == 0 && grid_ < (1 << 20)) grid_ *= 2;
  }
  long long trials() const { return trials_; }

  std::vector<IPoint> sample(int k) {
    std::uniform_int_distribution<long long> coord(0, grid_);
    std::vector<IPoint> pts(k);
    for (auto& p : pts) p = IPoint{coord(rng_), coord(rng_)};
    return pts;
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
  long long grid_;
  long long trials_ = 0;
};

}  // namespace

void validate_network(const SortingNetwork& net) {
  const int k = net.wires;
  if (k < 2) throw Error(ErrorKind::BadInput, "a sorting network needs at least 2 wires");
  if (net.swaps.size() != pair_count(k))
    throw Error(ErrorKind::BadInput, "expected " + std::to_string(pair_count(k)) + " swaps on " + std::to_string(k) +
                                         " wires, got " + std::to_string(net.swaps.size()));
  std::vector<int> label_at(k);
  std::iota(label_at.begin(), label_at.end(), 0);
  for (std::size_t s = 0; s < net.swaps.size(); ++s) {
    const int p = net.swaps[s];
    if (p < 1 || p >= k) throw Error(ErrorKind::BadInput, "swap " + std::to_string(s + 1) + " out of range");
    if (label_at[p - 1] > label_at[p])
      throw Error(ErrorKind::BadInput, "swap " + std::to_string(s + 1) + " undoes an inversion");
    std::swap(label_at[p - 1], label_at[p]);
  }
}

bool is_sorting_network(const SortingNetwork& net) {
  try {
    validate_network(net);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<std::vector<int>> rank_sequences(const SortingNetwork& net) {
  validate_network(net);
  const int k = net.wires;
  std::vector<int> label_at(k), rank(k);
  std::iota(label_at.begin(), label_at.end(), 0);
  std::iota(rank.begin(), rank.end(), 1);
  std::vector<std::vector<int>> out{rank};
  for (int p : net.swaps) {
    std::swap(label_at[p - 1], label_at[p]);
    rank[label_at[p - 1]] = p;
    rank[label_at[p]] = p + 1;
    out.push_back(rank);
  }
  return out;
}

std::vector<std::pair<int, int>> swap_pairs(const SortingNetwork& net) {
  validate_network(net);
  std::vector<int> label_at(net.wires);
  std::iota(label_at.begin(), label_at.end(), 1);
  std::vector<std::pair<int, int>> out;
  for (int p : net.swaps) {
    out.emplace_back(std::min(label_at[p - 1], label_at[p]), std::max(label_at[p - 1], label_at[p]));
    std::swap(label_at[p - 1], label_at[p]);
  }
  return out;
}

std::optional<std::pair<int, int>> genericity_violation(const PointConfiguration& config) {
  const auto& pts = config.points;
  const int k = static_cast<int>(pts.size());
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (pts[a].x == pts[b].x) return std::make_pair(a, b);
  struct Seg {
    Rational slope;
    int a, b;
  };
  std::vector<Seg> segs;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) segs.push_back(Seg{(pts[b].y - pts[a].y) / (pts[b].x - pts[a].x), a, b});
  std::stable_sort(segs.begin(), segs.end(), [](const Seg& s, const Seg& t) { return s.slope < t.slope; });
  for (std::size_t i = 0; i + 1 < segs.size(); ++i)
    if (segs[i].slope == segs[i + 1].slope) return std::make_pair(segs[i + 1].a, segs[i + 1].b);
  return std::nullopt;
}

SortingNetwork network_of_points(const PointConfiguration& config) {
  const int k = static_cast<int>(config.points.size());
  if (k < 2) throw Error(ErrorKind::BadInput, "need at least 2 points");
  if (auto bad = genericity_violation(config))
    throw Error(ErrorKind::NotGeneric, "points " + std::to_string(bad->first + 1) + " and " +
                                           std::to_string(bad->second + 1) + " violate genericity");

  std::vector<int> by_x(k);
  std::iota(by_x.begin(), by_x.end(), 0);
  std::sort(by_x.begin(), by_x.end(), [&](int a, int b) { return config.points[a].x < config.points[b].x; });

  struct Seg {
    Rational slope;
    int a, b;
  };
  std::vector<Seg> segs;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const Point2 &p = config.points[by_x[a]], &q = config.points[by_x[b]];
      segs.push_back(Seg{(q.y - p.y) / (q.x - p.x), a, b});
    }
  std::sort(segs.begin(), segs.end(), [](const Seg& s, const Seg& t) { return s.slope < t.slope; });
  std::vector<std::pair<int, int>> pairs;
  for (const auto& s : segs) pairs.emplace_back(s.a, s.b);
  auto swaps = positions_of_pairs(k, pairs);
  if (!swaps) throw std::logic_error("slope order does not form a sorting network");
  SortingNetwork net{k, std::move(*swaps)};
  validate_network(net);
  return net;
}

void for_each_network(int k, const std::function<void(const SortingNetwork&)>& visit, int cap) {
  if (k < 2) throw Error(ErrorKind::BadInput, "a sorting network needs at least 2 wires");
  if (k > cap)
    throw Error(ErrorKind::CapExceeded, std::to_string(k) + " wires exceeds the cap of " + std::to_string(cap));
  SortingNetwork net{k, {}};
  std::vector<int> label_at(k);
  std::iota(label_at.begin(), label_at.end(), 0);
  const std::size_t total = pair_count(k);
  auto rec = [&](auto&& self) -> void {
    if (net.swaps.size() == total) {
      visit(net);
      return;
    }
    for (int p = 1; p < k; ++p) {
      if (label_at[p - 1] > label_at[p]) continue;
      std::swap(label_at[p - 1], label_at[p]);
      net.swaps.push_back(p);
      self(self);
      net.swaps.pop_back();
      std::swap(label_at[p - 1], label_at[p]);
    }
  };
  rec(rec);
}

std::vector<SortingNetwork> enumerate_networks(int k, int cap) {
  std::vector<SortingNetwork> out;
  for_each_network(k, [&](const SortingNetwork& n) { out.push_back(n); }, cap);
  return out;
}

BigInt count_networks(int k, int cap) {
  BigInt count = 0;
  for_each_network(k, [&](const SortingNetwork&) { ++count; }, cap);
  return count;
}

RealizabilityVerdict witness_search(const SortingNetwork& net, const SearchOptions& options) {
  validate_network(net);
  const int k = net.wires;
  RealizabilityVerdict verdict;

  // target_rank[id] = firing index of the label pair in the queried network.
  std::vector<int> target_rank(k * k, -1);
  {
    const auto pairs = swap_pairs(net);
    for (std::size_t s = 0; s < pairs.size(); ++s) target_rank[(pairs[s].first - 1) * k + pairs[s].second - 1] = s;
  }
  auto disagreement = [&](const std::vector<int>& ids) {
    long long bad = 0;
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        if (target_rank[ids[i]] > target_rank[ids[j]]) ++bad;
    return bad;
  };

  GridSampler sampler(options.seed, options.grid);
  const int climb_steps = 8 * k;
  while (sampler.trials() < options.budget) {
    std::vector<IPoint> pts = sampler.sample(k);
    sampler.count_trial();
    auto ids = pair_order(pts);
    if (!ids) continue;
    long long score = disagreement(*ids);
    for (int step = 0; score > 0 && step < climb_steps && sampler.trials() < options.budget; ++step) {
      std::vector<IPoint> cand = pts;
      IPoint& p = cand[sampler.uniform(0, k - 1)];
      const int dx = sampler.uniform(-2, 2), dy = sampler.uniform(-2, 2);
      p.x += dx;
      p.y += dy;
      sampler.count_trial();
      auto cand_ids = pair_order(cand);
      if (!cand_ids) continue;
      const long long s = disagreement(*cand_ids);
      if (s <= score) {
        pts = std::move(cand);
        score = s;
      }
    }
    if (score == 0) {
      PointConfiguration config = to_configuration(pts);
      if (network_of_points(config) == net) {
        verdict.witness = std::move(config);
        break;
      }
    }
  }
  verdict.trials = sampler.trials();
  return verdict;
}

std::vector<RealizabilityVerdict> witness_search_all(const std::vector<SortingNetwork>& nets,
                                                     const SearchOptions& options, int jobs) {
  std::vector<RealizabilityVerdict> out(nets.size());
  auto run = [&](std::size_t i) {
    SearchOptions o = options;
    o.seed = splitmix64(options.seed ^ splitmix64(i));
    out[i] = witness_search(nets[i], o);
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < nets.size(); ++i) run(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < nets.size(); i = next++) run(i);
    });
  for (auto& w : workers) w.join();
  return out;
}

std::vector<SortingNetwork> saturation_enumerate(int k, const SearchOptions& options, int cap) {
  if (k < 2) throw Error(ErrorKind::BadInput, "need at least 2 points");
  if (k > cap)
    throw Error(ErrorKind::CapExceeded, std::to_string(k) + " points exceeds the cap of " + std::to_string(cap));
  std::set<std::vector<int>> seen;
  GridSampler sampler(options.seed, options.grid);
  while (sampler.trials() < options.budget) {
    const std::vector<IPoint> pts = sampler.sample(k);
    sampler.count_trial();
    if (auto ids = pair_order(pts)) seen.insert(swaps_of_order(k, *ids));
  }
  std::vector<SortingNetwork> out;
  for (const auto& s : seen) out.push_back(SortingNetwork{k, s});
  return out;
}

Rational default_e_upper() { return Rational(BigInt(27182818285LL), BigInt(10000000000LL)); }

Rational staircase_upper_bound(int n, const Rational& e_upper) {
  if (n < 2) throw Error(ErrorKind::BadInput, "staircase bound needs n >= 2");
  if (n == 2) return Rational(1);
  const BigInt pairs = binomial(binomial(static_cast<unsigned long>(n), 2), 2);
  const Rational base = 4 * e_upper * 2 * Rational(pairs) / Rational(2 * n);
  return pow(base, static_cast<unsigned>(2 * n)) / Rational(factorial(n));
}

Rational staircase_lower_factor(int n) {
  if (n < 1) throw Error(ErrorKind::BadInput, "staircase factor needs n >= 1");
  BigInt sum = 0;
  for (int i = 1; i <= n; ++i) sum += 2 * (i - 1) * binomial(binomial(static_cast<unsigned long>(i), 2), 2);
  return Rational(sum, BigInt(n + 1));
}

Rational staircase_lower_recurrence(int n, int base_n, const Rational& base) {
  if (base_n < 1 || n < base_n) throw Error(ErrorKind::BadInput, "need 1 <= base_n <= n");
  Rational value = base;
  for (int j = base_n + 1; j <= n; ++j) value *= staircase_lower_factor(j);
  return value;
}

}  // namespace rsyt

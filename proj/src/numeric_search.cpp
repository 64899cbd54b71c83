#include "gradenorm/numeric_search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "gradenorm/expansion.hpp"

namespace gradenorm {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Counter-based stream: the draws for (seed, phase, index) do not depend on
// how work is split across threads.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t phase, std::uint64_t index)
      : state_(splitmix64(splitmix64(seed) ^ splitmix64(phase * 0xD1B54A32D192ED03ULL) ^
                          splitmix64(index + 0x632BE59BD9B4E019ULL))) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return splitmix64(state_);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double log_uniform(double lo_exp, double hi_exp) {
    return std::pow(10.0, lo_exp + (hi_exp - lo_exp) * uniform());
  }

 private:
  std::uint64_t state_;
};

enum Phase : std::uint64_t { kGrid = 1, kRandom = 2, kLine = 3, kGridDigits = 4 };

constexpr double kLogLo = -3.0;
constexpr double kLogHi = 3.0;
constexpr double kZeroProbability = 0.15;
constexpr std::int64_t kBlock = 4096;

double relative_defect_raw(const GradingSignature& sig, std::span<const double> a,
                           std::span<const double> b, std::vector<double>& scratch,
                           double* raw = nullptr) {
  const std::size_t r = a.size();
  scratch.resize(r);
  for (std::size_t i = 0; i < r; ++i) scratch[i] = a[i] + b[i];
  const double na = scalar_norm(sig, a);
  const double nb = scalar_norm(sig, b);
  const double defect = scalar_norm(sig, scratch) - (na + nb);
  if (raw) *raw = defect;
  return defect / std::max(1.0, na + nb);
}

// Point is the concatenation (a_1..a_r, b_1..b_r).
struct Candidate {
  double rel = -std::numeric_limits<double>::infinity();
  std::int64_t index = 0;
  std::vector<double> point;
};

bool better(const Candidate& lhs, const Candidate& rhs) {
  if (lhs.rel != rhs.rel) return lhs.rel > rhs.rel;
  return lhs.index < rhs.index;
}

class TopK {
 public:
  explicit TopK(std::size_t capacity) : capacity_(capacity) {}

  bool admits(double rel, std::int64_t index) const {
    if (items_.size() < capacity_) return true;
    return better(Candidate{rel, index, {}}, items_.back());
  }

  void offer(Candidate c) {
    if (!admits(c.rel, c.index)) return;
    items_.insert(std::upper_bound(items_.begin(), items_.end(), c, better), std::move(c));
    if (items_.size() > capacity_) items_.pop_back();
  }

  void merge(TopK&& other) {
    for (auto& c : other.items_) offer(std::move(c));
  }

  const std::vector<Candidate>& items() const { return items_; }

 private:
  std::size_t capacity_;
  std::vector<Candidate> items_;
};

// g^dims, or nullopt when it exceeds `cap`.
std::optional<std::int64_t> grid_size(int resolution, int dims, std::int64_t cap) {
  std::int64_t total = 1;
  for (int d = 0; d < dims; ++d) {
    if (total > cap / resolution) return std::nullopt;
    total *= resolution;
  }
  return total;
}

// Runs fn(begin, end, top) over [0, n) in fixed-size blocks on `threads`
// workers and merges the per-worker top lists.
template <typename Fn>
TopK parallel_top(std::int64_t n, int threads, std::size_t k, Fn fn) {
  const std::int64_t blocks = (n + kBlock - 1) / kBlock;
  const int workers = static_cast<int>(std::max<std::int64_t>(1, std::min<std::int64_t>(threads, blocks)));
  std::vector<TopK> partial(static_cast<std::size_t>(workers), TopK(k));
  const auto work = [&](int w) {
    for (std::int64_t blk = w; blk < blocks; blk += workers) {
      const std::int64_t begin = blk * kBlock;
      fn(begin, std::min(n, begin + kBlock), partial[static_cast<std::size_t>(w)]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  TopK merged(k);
  for (auto& p : partial) merged.merge(std::move(p));
  return merged;
}

ProfilePair split_point(const GradingSignature& sig, const std::vector<double>& point) {
  const auto r = static_cast<std::ptrdiff_t>(sig.r());
  return ProfilePair{ScalarProfile(sig, std::vector<double>(point.begin(), point.begin() + r)),
                     ScalarProfile(sig, std::vector<double>(point.begin() + r, point.end()))};
}

std::vector<double> join_pair(const ProfilePair& pair) {
  std::vector<double> point(pair.a.magnitudes().begin(), pair.a.magnitudes().end());
  point.insert(point.end(), pair.b.magnitudes().begin(), pair.b.magnitudes().end());
  return point;
}

}  // namespace

void SearchConfig::validate() const {
  if (r < 1) throw std::domain_error("SearchConfig: r must be >= 1");
  if (sample_count < 1 || grid_cap < 1 || ascent_starts < 1 || ascent_steps < 1) {
    throw std::domain_error("SearchConfig: counts must be positive");
  }
  if (grid_resolution < 2) throw std::domain_error("SearchConfig: grid_resolution must be >= 2");
  if (!(ascent_step_size > 0.0)) throw std::domain_error("SearchConfig: ascent_step_size must be > 0");
  if (!(tolerance > 0.0)) throw std::domain_error("SearchConfig: tolerance must be > 0");
  if (threads < 0) throw std::domain_error("SearchConfig: threads must be >= 0");
}

int default_thread_count() {
  int n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("GRADENORM_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) n = std::min<long>(n, cap);
  }
  return n;
}

double scalar_defect(const ScalarProfile& a, const ScalarProfile& b) {
  const ScalarProfile sum = a + b;
  return scalar_norm(sum) - (scalar_norm(a) + scalar_norm(b));
}

double relative_defect(const ScalarProfile& a, const ScalarProfile& b) {
  return scalar_defect(a, b) / std::max(1.0, scalar_norm(a) + scalar_norm(b));
}

ProfilePair refine(const ProfilePair& start, int steps, double step_size, std::int64_t* evaluations) {
  const GradingSignature& sig = start.a.signature();
  if (!(start.b.signature() == sig)) throw std::domain_error("refine: signature mismatch");
  const std::size_t r = static_cast<std::size_t>(sig.r());
  std::vector<double> x = join_pair(start);
  std::vector<double> scratch;
  std::int64_t evals = 0;
  const auto objective = [&](const std::vector<double>& p) {
    ++evals;
    return relative_defect_raw(sig, std::span(p).first(r), std::span(p).subspan(r), scratch);
  };

  double best = objective(x);
  double h = step_size;
  for (int step = 0; step < steps && h > 1e-12; ++step) {
    bool improved = false;
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double current = x[j];
      const double reference = std::max(1e-3, *std::max_element(x.begin(), x.end()));
      const double trials[] = {current > 0.0 ? current * (1.0 + h) : reference * h,
                               current > 0.0 ? std::max(0.0, current * (1.0 - h)) : 0.0, 0.0};
      double best_trial = current;
      for (double t : trials) {
        if (t == current) continue;
        x[j] = t;
        const double value = objective(x);
        if (value > best) {
          best = value;
          best_trial = t;
          improved = true;
        }
      }
      x[j] = best_trial;
    }
    if (!improved) h *= 0.5;
  }
  if (evaluations) *evaluations += evals;
  return split_point(sig, x);
}

SearchOutcome hunt(const SearchConfig& config) {
  config.validate();
  const GradingSignature sig(config.r);
  const int r = config.r;
  const int threads = config.threads > 0 ? config.threads : default_thread_count();
  const auto k = static_cast<std::size_t>(config.ascent_starts);

  // Phase 1: grid on [0, 1]^{2r}, each level rescaled by a log-uniform factor.
  // Grids larger than grid_cap are subsampled: digits come from the RNG.
  const std::optional<std::int64_t> full = grid_size(config.grid_resolution, 2 * r, config.grid_cap);
  const std::int64_t grid_points = full.value_or(config.grid_cap);
  const auto g = static_cast<std::uint64_t>(config.grid_resolution);
  const double denom = config.grid_resolution - 1;

  TopK grid = parallel_top(grid_points, threads, k, [&](std::int64_t begin, std::int64_t end, TopK& top) {
    std::vector<double> point(static_cast<std::size_t>(2 * r));
    std::vector<double> scratch;
    for (std::int64_t j = begin; j < end; ++j) {
      auto idx = static_cast<std::uint64_t>(j);
      StreamRng digits(config.rng_seed, kGridDigits, static_cast<std::uint64_t>(j));
      for (auto& c : point) {
        const std::uint64_t digit = full ? idx % g : digits.next() % g;
        idx /= g;
        c = static_cast<double>(digit) / denom;
      }
      StreamRng rng(config.rng_seed, kGrid, static_cast<std::uint64_t>(j));
      for (int i = 0; i < r; ++i) {
        const double scale = rng.log_uniform(kLogLo, kLogHi);
        point[static_cast<std::size_t>(i)] *= scale;
        point[static_cast<std::size_t>(i + r)] *= scale;
      }
      const auto span = std::span<const double>(point);
      const double rel = relative_defect_raw(sig, span.first(static_cast<std::size_t>(r)),
                                             span.subspan(static_cast<std::size_t>(r)), scratch);
      if (top.admits(rel, j)) top.offer(Candidate{rel, j, point});
    }
  });

  // Phase 2: random log-uniform profiles with occasional exact zeros.
  TopK random = parallel_top(config.sample_count, threads, k,
                             [&](std::int64_t begin, std::int64_t end, TopK& top) {
    std::vector<double> point(static_cast<std::size_t>(2 * r));
    std::vector<double> scratch;
    for (std::int64_t j = begin; j < end; ++j) {
      StreamRng rng(config.rng_seed, kRandom, static_cast<std::uint64_t>(j));
      for (auto& c : point) {
        const double u = rng.uniform();
        const double mag = rng.log_uniform(kLogLo, kLogHi);
        c = u < kZeroProbability ? 0.0 : mag;
      }
      const auto span = std::span<const double>(point);
      const double rel = relative_defect_raw(sig, span.first(static_cast<std::size_t>(r)),
                                             span.subspan(static_cast<std::size_t>(r)), scratch);
      // Offset indices so grid and random candidates never tie on index.
      const std::int64_t index = grid_points + j;
      if (top.admits(rel, index)) top.offer(Candidate{rel, index, point});
    }
  });

  TopK starts(k);
  starts.merge(std::move(grid));
  starts.merge(std::move(random));

  SearchOutcome outcome{0.0, -std::numeric_limits<double>::infinity(),
                        ProfilePair{ScalarProfile(sig, std::vector<double>(static_cast<std::size_t>(r))),
                                    ScalarProfile(sig, std::vector<double>(static_cast<std::size_t>(r)))},
                        grid_points + config.sample_count, false};

  // Phase 3: coordinate ascent from the best points.
  TopK refined(1);
  std::int64_t refined_index = grid_points + config.sample_count;
  for (const Candidate& c : starts.items()) {
    refined.offer(c);
    const ProfilePair polished =
        refine(split_point(sig, c.point), config.ascent_steps, config.ascent_step_size,
               &outcome.samples_evaluated);
    std::vector<double> scratch;
    const double rel = relative_defect_raw(sig, polished.a.magnitudes(), polished.b.magnitudes(), scratch);
    refined.offer(Candidate{rel, refined_index++, join_pair(polished)});
  }

  const Candidate& best = refined.items().front();
  outcome.argmax = split_point(sig, best.point);
  std::vector<double> scratch;
  outcome.max_relative_defect = relative_defect_raw(sig, outcome.argmax.a.magnitudes(),
                                                    outcome.argmax.b.magnitudes(), scratch,
                                                    &outcome.max_defect);
  outcome.violation_found = outcome.max_relative_defect > config.tolerance;
  return outcome;
}

double line_margin(const GradingSignature& sig, const CertificateLine& line, double x, double y) {
  const TermOrbit orbit = lhs_orbit(sig, line.level, line.split);
  const RhsOrbit rhs = rhs_orbit(sig, line.target);
  const ShadowPair sh = shadow(sig, line.target, line.level);
  return orbit.coefficient.get_d() * orbit_value(orbit, x, y) -
         rhs.coefficient.get_d() * shadow_value(sig, sh, x, y);
}

double check_line_numeric(const GradingSignature& sig, const CertificateLine& line,
                          const SearchConfig& config) {
  const TermOrbit orbit = lhs_orbit(sig, line.level, line.split);
  const RhsOrbit rhs = rhs_orbit(sig, line.target);
  const ShadowPair sh = shadow(sig, line.target, line.level);
  const double c_left = orbit.coefficient.get_d();
  const double c_right = rhs.coefficient.get_d();

  double worst = -std::numeric_limits<double>::infinity();
  const auto probe = [&](double x, double y) {
    const double left = c_left * orbit_value(orbit, x, y);
    const double right = c_right * shadow_value(sig, sh, x, y);
    worst = std::max(worst, (left - right) / std::max({1.0, left, right}));
  };
  for (double v : {0.0, 1e-3, 0.5, 1.0, 2.0, 100.0}) {
    probe(0.0, v);
    probe(v, 0.0);
    probe(v, v);
  }
  for (std::int64_t j = 0; j < config.sample_count; ++j) {
    StreamRng rng(config.rng_seed, kLine, static_cast<std::uint64_t>(j));
    const double x = rng.log_uniform(-3.0, 2.0);
    const double y = rng.log_uniform(-3.0, 2.0);
    probe(x, y);
  }
  return worst;
}

}  // namespace gradenorm

#include "roughmap/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "roughmap/enumeration.hpp"
#include "roughmap/error.hpp"

namespace roughmap {

namespace {

struct Found {
  std::size_t r1 = 0;
  std::size_t r2 = 0;
  Mask x = 0;
  Witness witness;
};

struct UnitResult {
  Tallies tallies;
  std::vector<Found> found;
};

struct Level {
  std::size_t n;
  std::vector<SurjMap> maps;
  const std::vector<Partition>* partitions;
};

std::vector<SurjMap> level_maps(MapConstraint constraint, std::size_t n, std::size_t m,
                                bool canonical) {
  switch (constraint) {
    case MapConstraint::Any: return all_maps(n, m);
    case MapConstraint::Surjective:
      if (m > n) return {};
      return all_surjections(n, m, canonical);
    case MapConstraint::Bijective:
      if (m != n) return {};
      return all_surjections(n, m, canonical);
  }
  return {};
}

UnitResult run_unit(const Claim& claim, const SurjMap& f, const std::vector<Partition>& parts,
                    bool stop_at_first, std::size_t cap) {
  UnitResult out;
  const std::size_t n = f.domain_size();
  const bool two = claim.shape.partitions == 2;
  const Mask x_end = claim.shape.needs_subset ? full_mask(n) : 0;
  std::array<Partition, 2> chosen{parts[0], parts[0]};

  for (std::size_t i = 0; i < parts.size(); ++i) {
    chosen[0] = parts[i];
    for (std::size_t j = 0; j < (two ? parts.size() : 1); ++j) {
      chosen[1] = parts[j];
      Mask x = 0;
      for (;;) {
        std::optional<Subset> subset;
        if (claim.shape.needs_subset) subset = Subset::from_mask(n, x);
        const Verdict v = evaluate(
            claim, InstanceView{f, std::span<const Partition>(chosen.data(), two ? 2 : 1),
                                subset ? &*subset : nullptr});
        out.tallies.add(v.outcome);
        if (v.outcome == Outcome::Fails) {
          if (out.found.size() < cap) out.found.push_back({i, j, x, *v.witness});
          if (stop_at_first) return out;
        }
        if (x == x_end) break;
        ++x;
      }
    }
  }
  return out;
}

// Evaluates every map of a level, sharded across workers. In falsify mode,
// maps after the earliest failing one are skipped; the results of maps at or
// before it are always complete.
std::vector<std::optional<UnitResult>> run_level(const Claim& claim, const Level& level,
                                                 bool stop_at_first, std::size_t cap,
                                                 std::size_t workers) {
  const std::size_t units = level.maps.size();
  std::vector<std::optional<UnitResult>> results(units);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> earliest_fail{std::numeric_limits<std::size_t>::max()};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&] {
    try {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= units) return;
        if (stop_at_first && i > earliest_fail.load()) return;
        results[i] = run_unit(claim, level.maps[i], *level.partitions, stop_at_first, cap);
        if (!results[i]->found.empty()) {
          std::size_t cur = earliest_fail.load();
          while (i < cur && !earliest_fail.compare_exchange_weak(cur, i)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(units);
    }
  };

  const std::size_t count = std::max<std::size_t>(1, std::min(workers, units));
  if (count == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < count; ++t) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
  return results;
}

SearchReport run_search(const Claim& claim, Bounds bounds, const SearchOptions& options,
                        SearchMode mode) {
  if (bounds.max_u == 0 || bounds.max_v == 0)
    throw Error(Errc::EmptyUniverse, "search bounds must be at least 1");
  if (bounds.max_u > 8 || bounds.max_v > 8)
    throw Error(Errc::TooLarge, "search bounds above 8 are out of reach for exhaustive scans");

  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.claim = claim.id;
  report.mode = mode;
  report.bounds = bounds;
  report.canonical_maps = options.canonical_maps.value_or(mode == SearchMode::Falsify) &&
                          claim.shape.map != MapConstraint::Any;
  const bool stop_at_first = mode == SearchMode::Falsify;
  const std::size_t cap = stop_at_first ? 1 : options.failure_cap;
  const std::size_t workers = options.workers ? options.workers : default_worker_count();

  for (std::size_t n = 1; n <= bounds.max_u && !report.stopped_early; ++n) {
    const std::vector<Partition> parts = all_partitions(n);
    for (std::size_t m = 1; m <= bounds.max_v && !report.stopped_early; ++m) {
      Level level{n, level_maps(claim.shape.map, n, m, report.canonical_maps), &parts};
      if (level.maps.empty()) continue;
      ++report.effort.levels;
      auto results = run_level(claim, level, stop_at_first, cap, workers);

      for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i]) break;  // only skipped after a failure
        const UnitResult& unit = *results[i];
        ++report.effort.maps;
        report.tallies += unit.tallies;
        for (const Found& found : unit.found) {
          std::vector<Partition> chosen{parts[found.r1]};
          if (claim.shape.partitions == 2) chosen.push_back(parts[found.r2]);
          std::optional<Subset> x;
          if (claim.shape.needs_subset) x = Subset::from_mask(n, found.x);
          Counterexample cx{make_generated_instance(claim, level.maps[i], std::move(chosen), x),
                            found.witness};
          if (!report.first_counterexample) report.first_counterexample = cx;
          if (mode == SearchMode::Verify && report.failures.size() < options.failure_cap)
            report.failures.push_back(std::move(cx));
        }
        if (stop_at_first && !unit.found.empty()) {
          report.stopped_early = true;
          break;
        }
      }
    }
  }
  report.effort.instances = report.tallies.total();
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace

void Tallies::add(Outcome outcome) {
  switch (outcome) {
    case Outcome::Holds: ++holds; break;
    case Outcome::Fails: ++fails; break;
    case Outcome::IllTyped: ++ill_typed; break;
    case Outcome::Vacuous: ++vacuous; break;
  }
}

Tallies& Tallies::operator+=(const Tallies& other) {
  holds += other.holds;
  fails += other.fails;
  ill_typed += other.ill_typed;
  vacuous += other.vacuous;
  return *this;
}

std::size_t default_worker_count() {
  if (const char* env = std::getenv("ROUGHMAP_WORKERS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SearchReport falsify(const Claim& claim, Bounds bounds, const SearchOptions& options) {
  return run_search(claim, bounds, options, SearchMode::Falsify);
}

SearchReport verify(const Claim& claim, Bounds bounds, const SearchOptions& options) {
  return run_search(claim, bounds, options, SearchMode::Verify);
}

Instance make_generated_instance(const Claim& claim, const SurjMap& f,
                                 std::vector<Partition> partitions, std::optional<Subset> x) {
  std::vector<std::string> names;
  if (partitions.size() == 1) {
    names.push_back("R");
  } else {
    for (std::size_t i = 0; i < partitions.size(); ++i) names.push_back("R" + std::to_string(i + 1));
  }
  if (!claim.shape.needs_subset) x.reset();
  return Instance{numbered_universe(f.domain_size()), lettered_universe(f.codomain_size()), f,
                  std::move(partitions), std::move(x), std::move(names)};
}

}  // namespace roughmap

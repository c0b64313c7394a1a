#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace quasibell::cli {

/// NAME:MIN:MAX:STEPS, evenly spaced and inclusive of both ends.
struct SweepSpec {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int steps = 0;

  std::vector<double> points() const;
};

/// Throws DomainError on malformed text, min >= max or steps < 2.
SweepSpec parse_sweep(const std::string& text);

/// Values of one parameter: the sweep points if the sweep targets `name`,
/// otherwise the single fixed value. Throws DomainError when both or neither
/// are given.
std::vector<double> parameter_values(const std::string& name, const std::optional<double>& fixed,
                                     const std::optional<SweepSpec>& sweep);

/// Sweep values that must be integers (m_cut).
std::vector<int> integer_values(const std::vector<double>& values, const std::string& name);

/// Evaluates f on every point with up to `jobs` threads. Results keep input
/// order; if several points throw, the exception of the earliest one wins.
template <class T, class F>
auto evaluate_points(const std::vector<T>& points, int jobs, F f) {
  using R = decltype(f(points.front()));
  std::vector<std::optional<R>> results(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        results[i].emplace(f(points[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto n_threads = static_cast<std::size_t>(std::max(1, jobs));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(n_threads, points.size()); ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::vector<R> out;
  out.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*results[i]));
  }
  return out;
}

}  // namespace quasibell::cli

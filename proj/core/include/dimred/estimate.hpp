#pragma once

#include <cstdint>
#include <functional>

#include "dimred/rng.hpp"

namespace dimred {

/// Monte Carlo estimate. std_error is sample-std / sqrt(n_samples); exact
/// values carry std_error = 0.
struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  int workers = 1;

  static MCEstimate exact(double value, std::uint64_t seed = 0, int workers = 1);

  /// Pools two estimates of the same quantity as if their samples came from
  /// one pass. Associative up to rounding.
  MCEstimate merge(const MCEstimate& other) const;
  /// Sum of two independent estimates of different quantities.
  MCEstimate add_independent(const MCEstimate& other) const;
  MCEstimate scaled(double factor) const;
};

/// Streaming mean/variance (Welford), mergeable with Chan's update.
class Accumulator {
 public:
  void add(double x) {
    ++n_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - mean_);
  }
  void merge(const Accumulator& other);

  std::uint64_t count() const { return n_; }
  double mean() const { return mean_; }
  double m2() const { return m2_; }
  double sample_variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
  MCEstimate estimate(std::uint64_t seed, int workers) const;

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

struct RunOptions {
  std::uint64_t n_samples = 100000;
  std::uint64_t seed = 0;
  int workers = 1;
  /// Offset added to chunk indices when deriving stream ids, so independent
  /// estimators sharing a seed draw from disjoint streams.
  std::uint64_t stream_base = 0;
};

inline constexpr std::uint64_t kChunkSize = 8192;

/// Runs `chunk(rng, count, acc)` over ceil(n_samples / kChunkSize) chunks,
/// chunk c drawing from RngStream(seed, stream_base + c). Chunks are
/// distributed over `workers` threads and merged in chunk order, so the
/// result does not depend on the worker count.
using ChunkBody = std::function<void(RngStream& rng, std::uint64_t count, Accumulator& acc)>;
Accumulator run_chunked(const RunOptions& opts, const ChunkBody& chunk);
MCEstimate estimate_chunked(const RunOptions& opts, const ChunkBody& chunk);

void validate(const RunOptions& opts);

/// (a - b) / sqrt(se_a^2 + se_b^2). Two exact values give 0 when they agree
/// to 1e-9 (relative) and infinity otherwise.
double z_score(const MCEstimate& a, const MCEstimate& b);
inline constexpr double kZThreshold = 4.0;

}  // namespace dimred

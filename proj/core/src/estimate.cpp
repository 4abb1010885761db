#include "dimred/estimate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>
#include <vector>

#include "dimred/errors.hpp"

namespace dimred {

MCEstimate MCEstimate::exact(double value, std::uint64_t seed, int workers) {
  return MCEstimate{value, 0.0, 0, seed, workers};
}

MCEstimate MCEstimate::merge(const MCEstimate& other) const {
  if (n_samples == 0) return other;
  if (other.n_samples == 0) return *this;
  const double na = static_cast<double>(n_samples);
  const double nb = static_cast<double>(other.n_samples);
  const double n = na + nb;
  const double m2a = std_error * std_error * na * (na - 1.0);
  const double m2b = other.std_error * other.std_error * nb * (nb - 1.0);
  const double delta = other.mean - mean;
  const double m2 = m2a + m2b + delta * delta * na * nb / n;
  MCEstimate out = *this;
  out.n_samples = n_samples + other.n_samples;
  out.mean = mean + delta * nb / n;
  out.std_error = std::sqrt(m2 / (n - 1.0) / n);
  return out;
}

MCEstimate MCEstimate::add_independent(const MCEstimate& other) const {
  MCEstimate out = *this;
  out.mean = mean + other.mean;
  out.std_error = std::hypot(std_error, other.std_error);
  out.n_samples = n_samples + other.n_samples;
  return out;
}

MCEstimate MCEstimate::scaled(double factor) const {
  MCEstimate out = *this;
  out.mean *= factor;
  out.std_error *= std::abs(factor);
  return out;
}

void Accumulator::merge(const Accumulator& other) {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(other.n_);
  const double n = na + nb;
  const double delta = other.mean_ - mean_;
  mean_ += delta * nb / n;
  m2_ += other.m2_ + delta * delta * na * nb / n;
  n_ += other.n_;
}

MCEstimate Accumulator::estimate(std::uint64_t seed, int workers) const {
  const double se = n_ > 1 ? std::sqrt(sample_variance() / static_cast<double>(n_)) : 0.0;
  return MCEstimate{mean_, se, n_, seed, workers};
}

void validate(const RunOptions& opts) {
  if (opts.n_samples < 1) throw PreconditionError("n_samples must be >= 1");
  if (opts.workers < 1) throw PreconditionError("workers must be >= 1");
}

double z_score(const MCEstimate& a, const MCEstimate& b) {
  const double diff = a.mean - b.mean;
  const double se = std::hypot(a.std_error, b.std_error);
  if (se > 0.0) return diff / se;
  const double scale = std::max({1.0, std::abs(a.mean), std::abs(b.mean)});
  if (std::abs(diff) <= 1e-9 * scale) return 0.0;
  return diff > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
}

Accumulator run_chunked(const RunOptions& opts, const ChunkBody& chunk) {
  validate(opts);
  const std::uint64_t chunks = (opts.n_samples + kChunkSize - 1) / kChunkSize;
  std::vector<Accumulator> parts(chunks);
  auto run_one = [&](std::uint64_t c) {
    const std::uint64_t count = std::min(kChunkSize, opts.n_samples - c * kChunkSize);
    RngStream rng(opts.seed, opts.stream_base + c);
    chunk(rng, count, parts[c]);
  };
  const auto threads = static_cast<std::uint64_t>(opts.workers);
  if (threads == 1 || chunks == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_one(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (std::uint64_t t = 0; t < std::min(threads, chunks); ++t) {
      pool.emplace_back([&] {
        for (std::uint64_t c = next++; c < chunks && !failed; c = next++) {
          try {
            run_one(c);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  Accumulator total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

MCEstimate estimate_chunked(const RunOptions& opts, const ChunkBody& chunk) {
  return run_chunked(opts, chunk).estimate(opts.seed, opts.workers);
}

}  // namespace dimred

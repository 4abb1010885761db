#pragma once

#include <cstdint>
#include <vector>

#include "dimred/arrangement.hpp"
#include "dimred/subset.hpp"

namespace dimred {

/// Total order on a ground set {0, ..., size-1}.
class LinearOrder {
 public:
  /// sequence lists the elements from smallest to largest; must be a
  /// permutation of {0, ..., size-1}.
  explicit LinearOrder(std::vector<int> sequence);

  static LinearOrder identity(int size);
  /// Uniformly random order, reproducible from seed.
  static LinearOrder random(int size, std::uint64_t seed);

  int size() const { return static_cast<int>(sequence_.size()); }
  const std::vector<int>& sequence() const { return sequence_; }
  int position(int e) const { return position_.at(static_cast<std::size_t>(e)); }
  bool less(int a, int b) const { return position(a) < position(b); }
  /// Minimal element of a non-empty subset.
  int min_of(GroundSubset s) const;

 private:
  std::vector<int> sequence_;
  std::vector<int> position_;
};

/// The matroid M_H of an arrangement: ground set = hyperplanes, independent
/// sets = subsets with linearly independent normals. All rank questions are
/// answered exactly. For ground sets of at most kRankTableLimit elements the
/// full rank table is built once at construction, so every query is a
/// lookup. Immutable and thread-safe.
class MatroidView {
 public:
  static constexpr int kRankTableLimit = 18;
  /// Guard for the exponential enumerations (spanning subsets, chi).
  static constexpr int kEnumerationLimit = 24;

  explicit MatroidView(Arrangement arrangement);

  const Arrangement& arrangement() const { return arrangement_; }
  int size() const { return arrangement_.size(); }
  /// r(M); equals the ambient dimension because arrangements are essential.
  int rank() const { return rank_; }
  GroundSubset ground_set() const { return GroundSubset::full(size()); }
  bool has_rank_table() const { return !rank_table_.empty(); }

  int rank_of(GroundSubset s) const;
  bool is_independent(GroundSubset s) const { return rank_of(s) == s.size(); }
  bool is_spanning(GroundSubset s) const { return rank_of(s) == rank_; }
  bool is_base(GroundSubset s) const { return s.size() == rank_ && is_spanning(s); }

  /// All bases, ascending by bitmask.
  std::vector<GroundSubset> bases() const;
  /// Bases of the restriction M_S (bases of M contained in S), ascending.
  std::vector<GroundSubset> bases_within(GroundSubset s) const;
  /// All spanning subsets, ascending by bitmask.
  std::vector<GroundSubset> spanning_subsets() const;

  /// Unique circuit in B + e. Throws PreconditionError unless B is a base
  /// and e is a ground-set element outside B.
  GroundSubset fundamental_circuit(GroundSubset base, int e) const;

  /// True iff no element outside B is the order-minimum of its fundamental
  /// circuit.
  bool is_safe(GroundSubset base, const LinearOrder& order) const;
  /// Safety of B as a base of M_S: only elements of S \ B are tested.
  bool is_safe_within(GroundSubset base, GroundSubset s, const LinearOrder& order) const;

  /// chi_{M_S}(0) by subset expansion: sum over spanning T within S of
  /// (-1)^|T|. S must be spanning.
  long long chi_at_zero(GroundSubset s) const;
  long long chi_at_zero() const { return chi_at_zero(ground_set()); }
  /// Number of order-safe bases of M_S; equals (-1)^r chi_at_zero(S).
  long long safe_base_count(GroundSubset s, const LinearOrder& order) const;
  /// chi_{M_S}(0) via the safe-base formula with the sign (-1)^r applied.
  long long chi_at_zero_from_bases(GroundSubset s, const LinearOrder& order) const;

 private:
  void check_subset(GroundSubset s) const;
  void require_spanning(GroundSubset s, const char* op) const;
  void build_rank_table();

  Arrangement arrangement_;
  int rank_ = 0;
  std::vector<std::uint8_t> rank_table_;
};

}  // namespace dimred

#include "dimred/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace dimred {

LinearOrder::LinearOrder(std::vector<int> sequence) : sequence_(std::move(sequence)) {
  position_.assign(sequence_.size(), -1);
  for (std::size_t p = 0; p < sequence_.size(); ++p) {
    const int e = sequence_[p];
    if (e < 0 || e >= static_cast<int>(sequence_.size()) || position_[static_cast<std::size_t>(e)] != -1)
      throw PreconditionError("LinearOrder: sequence is not a permutation");
    position_[static_cast<std::size_t>(e)] = static_cast<int>(p);
  }
}

LinearOrder LinearOrder::identity(int size) {
  std::vector<int> seq(static_cast<std::size_t>(size));
  std::iota(seq.begin(), seq.end(), 0);
  return LinearOrder(std::move(seq));
}

LinearOrder LinearOrder::random(int size, std::uint64_t seed) {
  std::vector<int> seq(static_cast<std::size_t>(size));
  std::iota(seq.begin(), seq.end(), 0);
  std::mt19937_64 gen(seed);
  // Fisher-Yates with an explicit draw so the result does not depend on the
  // standard library's shuffle implementation.
  for (std::size_t i = seq.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(gen() % i);
    std::swap(seq[i - 1], seq[j]);
  }
  return LinearOrder(std::move(seq));
}

int LinearOrder::min_of(GroundSubset s) const {
  if (s.empty()) throw PreconditionError("LinearOrder::min_of on empty subset");
  int best = -1;
  for (int e : s.elements())
    if (best < 0 || position(e) < position(best)) best = e;
  return best;
}

MatroidView::MatroidView(Arrangement arrangement) : arrangement_(std::move(arrangement)) {
  rank_ = arrangement_.dim();
  if (size() <= kRankTableLimit) build_rank_table();
}

void MatroidView::build_rank_table() {
  rank_table_.assign(std::size_t{1} << size(), 0);
  EchelonSpan span(static_cast<std::size_t>(arrangement_.dim()));
  const int n = size();
  // Depth-first over subsets in "add larger elements" order; each node
  // extends its parent's echelon basis by at most one vector.
  auto visit = [&](auto&& self, int start, std::uint64_t mask) -> void {
    rank_table_[mask] = static_cast<std::uint8_t>(span.rank());
    for (int e = start; e < n; ++e) {
      const std::uint64_t child = mask | (std::uint64_t{1} << e);
      if (static_cast<int>(span.rank()) == rank_) {
        // Full rank already: every superset is spanning.
        auto fill = [&](auto&& fself, int s, std::uint64_t m) -> void {
          rank_table_[m] = static_cast<std::uint8_t>(rank_);
          for (int f = s; f < n; ++f) fself(fself, f + 1, m | (std::uint64_t{1} << f));
        };
        fill(fill, e + 1, child);
        continue;
      }
      const bool pushed = span.push(arrangement_.hyperplane(e).normal);
      self(self, e + 1, child);
      if (pushed) span.pop();
    }
  };
  visit(visit, 0, 0);
}

void MatroidView::check_subset(GroundSubset s) const {
  if (!s.is_subset_of(ground_set())) throw PreconditionError("subset contains elements outside the ground set");
}

void MatroidView::require_spanning(GroundSubset s, const char* op) const {
  check_subset(s);
  if (!is_spanning(s))
    throw PreconditionError(std::string(op) + ": subset has rank " + std::to_string(rank_of(s)) +
                            ", needs to be spanning (rank " + std::to_string(rank_) + ")");
}

int MatroidView::rank_of(GroundSubset s) const {
  if (has_rank_table()) {
    check_subset(s);
    return rank_table_[s.bits];
  }
  check_subset(s);
  return static_cast<int>(dimred::rank(arrangement_.normal_matrix(s)));
}

std::vector<GroundSubset> MatroidView::bases_within(GroundSubset s) const {
  check_subset(s);
  std::vector<GroundSubset> out;
  const std::vector<int> elems = s.elements();
  EchelonSpan span(static_cast<std::size_t>(arrangement_.dim()));
  auto visit = [&](auto&& self, std::size_t idx, GroundSubset chosen) -> void {
    if (chosen.size() == rank_) {
      out.push_back(chosen);
      return;
    }
    if (idx == elems.size()) return;
    if (static_cast<int>(elems.size() - idx) < rank_ - chosen.size()) return;
    const int e = elems[idx];
    if (span.push(arrangement_.hyperplane(e).normal)) {
      self(self, idx + 1, chosen.with(e));
      span.pop();
    }
    self(self, idx + 1, chosen);
  };
  visit(visit, 0, GroundSubset{});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroundSubset> MatroidView::bases() const { return bases_within(ground_set()); }

std::vector<GroundSubset> MatroidView::spanning_subsets() const {
  if (size() > kEnumerationLimit) throw PreconditionError("spanning_subsets: ground set too large to enumerate");
  std::vector<GroundSubset> out;
  const std::uint64_t end = std::uint64_t{1} << size();
  for (std::uint64_t m = 1; m < end; ++m)
    if (rank_of(GroundSubset(m)) == rank_) out.emplace_back(m);
  return out;
}

GroundSubset MatroidView::fundamental_circuit(GroundSubset base, int e) const {
  check_subset(base);
  if (!is_base(base)) throw PreconditionError("fundamental_circuit: B is not a base");
  if (e < 0 || e >= size()) throw PreconditionError("fundamental_circuit: element outside ground set");
  if (base.contains(e)) throw PreconditionError("fundamental_circuit: element already in B");
  GroundSubset circuit = GroundSubset{}.with(e);
  for (int b : base.elements())
    if (is_base(base.without(b).with(e))) circuit = circuit.with(b);
  return circuit;
}

bool MatroidView::is_safe_within(GroundSubset base, GroundSubset s, const LinearOrder& order) const {
  if (order.size() != size()) throw PreconditionError("is_safe: order size differs from ground set");
  if (!base.is_subset_of(s)) throw PreconditionError("is_safe: base is not contained in the subset");
  if (!is_base(base)) throw PreconditionError("is_safe: B is not a base");
  for (int e : (s - base).elements())
    if (order.min_of(fundamental_circuit(base, e)) == e) return false;
  return true;
}

bool MatroidView::is_safe(GroundSubset base, const LinearOrder& order) const {
  return is_safe_within(base, ground_set(), order);
}

long long MatroidView::chi_at_zero(GroundSubset s) const {
  require_spanning(s, "chi_at_zero");
  if (s.size() > kEnumerationLimit) throw PreconditionError("chi_at_zero: subset too large for subset expansion");
  long long total = 0;
  // Enumerate every submask T of S (T = S first, T = 0 last).
  for (std::uint64_t t = s.bits;; t = (t - 1) & s.bits) {
    const GroundSubset sub(t);
    if (rank_of(sub) == rank_) total += (sub.size() % 2 == 0) ? 1 : -1;
    if (t == 0) break;
  }
  return total;
}

long long MatroidView::safe_base_count(GroundSubset s, const LinearOrder& order) const {
  require_spanning(s, "safe_base_count");
  long long count = 0;
  for (GroundSubset b : bases_within(s))
    if (is_safe_within(b, s, order)) ++count;
  return count;
}

long long MatroidView::chi_at_zero_from_bases(GroundSubset s, const LinearOrder& order) const {
  const long long count = safe_base_count(s, order);
  return (rank_ % 2 == 0) ? count : -count;
}

}  // namespace dimred

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hopfkit/scalar.hpp"

namespace hopfkit {

/// Sparse exact-rational vector; entries sorted by index, no zeros stored.
class SparseVec {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVec() = default;
  /// Entries may be unsorted and contain repeats or zeros.
  static SparseVec from_entries(std::vector<Entry> entries);
  static SparseVec unit(std::size_t index, const Scalar& value = 1);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  std::size_t nonzeros() const noexcept { return entries_.size(); }
  /// Index of the first nonzero entry; undefined on the zero vector.
  std::size_t leading() const { return entries_.front().first; }
  Scalar get(std::size_t index) const;

  /// this += a * v
  void axpy(const Scalar& a, const SparseVec& v);
  void scale(const Scalar& a);
  /// Keeps entries with index < limit (before) or >= limit (after, shifted down).
  SparseVec head(std::size_t limit) const;
  SparseVec tail(std::size_t limit) const;
  /// Appends `other` with indices shifted by `offset` (all must exceed current indices).
  void append_shifted(const SparseVec& other, std::size_t offset);

  bool operator==(const SparseVec&) const = default;

 private:
  std::vector<Entry> entries_;
};

enum class Exec { serial, parallel };

/// Reduced row-echelon form of a row list. Zero rows are dropped, the
/// result is ordered by increasing pivot column and is unique.
///
/// rref_serial is the reference: rows are inserted one at a time into an
/// already reduced basis. rref_parallel is Gauss-Jordan elimination that
/// clears each new pivot column from every other row in an OpenMP loop.
std::vector<SparseVec> rref_serial(std::vector<SparseVec> rows);
std::vector<SparseVec> rref_parallel(std::vector<SparseVec> rows);
std::vector<SparseVec> rref(std::vector<SparseVec> rows, Exec exec = Exec::parallel);

std::size_t rank(std::vector<SparseVec> rows, Exec exec = Exec::parallel);

/// Evaluates `fn(i)` for i in [0, n). Serial or OpenMP parallel-for; `fn`
/// must be safe to call concurrently for distinct i.
template <class Fn>
std::vector<SparseVec> map_columns(std::size_t n, Fn&& fn, Exec exec = Exec::parallel);

/// Given image vectors v_0..v_{n-1} of a linear map (one per domain basis
/// vector), returns an RREF basis of {c : sum c_i v_i = 0}.
std::vector<SparseVec> kernel(const std::vector<SparseVec>& images, Exec exec = Exec::parallel);

/// Decides membership of a target in span{g_i} and returns coefficients.
class SpanSolver {
 public:
  explicit SpanSolver(const std::vector<SparseVec>& generators, Exec exec = Exec::parallel);

  std::size_t generator_count() const noexcept { return count_; }
  std::size_t rank() const noexcept { return pivots_.size(); }

  /// Coefficients c with sum c_i g_i = target, or nullopt if target is not
  /// in the span. When the generators are dependent one particular solution
  /// is returned.
  std::optional<std::vector<Scalar>> solve(const SparseVec& target) const;
  bool contains(const SparseVec& target) const;
  /// target minus its projection along the pivot rows (zero iff in span).
  SparseVec residual(const SparseVec& target) const;

 private:
  std::size_t count_ = 0;
  std::size_t width_ = 0;
  /// RREF rows of [g_i | e_i] restricted to those with a pivot in the left block.
  std::vector<SparseVec> pivots_;
};

}  // namespace hopfkit

#include "hopfkit/linalg_impl.hpp"

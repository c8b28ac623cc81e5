#include "hopfkit/linalg.hpp"

#include <algorithm>

namespace hopfkit {

SparseVec SparseVec::from_entries(std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVec v;
  for (auto& e : entries) {
    if (!v.entries_.empty() && v.entries_.back().first == e.first) {
      v.entries_.back().second += e.second;
    } else {
      if (!v.entries_.empty() && v.entries_.back().second == 0) v.entries_.pop_back();
      v.entries_.push_back(std::move(e));
    }
  }
  if (!v.entries_.empty() && v.entries_.back().second == 0) v.entries_.pop_back();
  return v;
}

SparseVec SparseVec::unit(std::size_t index, const Scalar& value) {
  SparseVec v;
  if (value != 0) v.entries_.emplace_back(index, value);
  return v;
}

Scalar SparseVec::get(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

void SparseVec::axpy(const Scalar& a, const SparseVec& v) {
  if (a == 0 || v.is_zero()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + v.entries_.size());
  auto i = entries_.begin();
  auto j = v.entries_.begin();
  while (i != entries_.end() || j != v.entries_.end()) {
    if (j == v.entries_.end() || (i != entries_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == entries_.end() || j->first < i->first) {
      out.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      Scalar s = i->second + a * j->second;
      if (s != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  entries_ = std::move(out);
}

void SparseVec::scale(const Scalar& a) {
  if (a == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= a;
}

SparseVec SparseVec::head(std::size_t limit) const {
  SparseVec v;
  for (const auto& e : entries_) {
    if (e.first < limit) v.entries_.push_back(e);
  }
  return v;
}

SparseVec SparseVec::tail(std::size_t limit) const {
  SparseVec v;
  for (const auto& e : entries_) {
    if (e.first >= limit) v.entries_.emplace_back(e.first - limit, e.second);
  }
  return v;
}

void SparseVec::append_shifted(const SparseVec& other, std::size_t offset) {
  for (const auto& e : other.entries_) entries_.emplace_back(e.first + offset, e.second);
}

std::vector<SparseVec> rref_serial(std::vector<SparseVec> rows) {
  std::vector<SparseVec> basis;
  for (auto& v : rows) {
    for (const auto& b : basis) {
      const Scalar c = v.get(b.leading());
      if (c != 0) v.axpy(-c, b);
    }
    if (v.is_zero()) continue;
    v.scale(1 / v.entries().front().second);
    const std::size_t p = v.leading();
    for (auto& b : basis) {
      const Scalar c = b.get(p);
      if (c != 0) b.axpy(-c, v);
    }
    auto pos = std::lower_bound(basis.begin(), basis.end(), p,
                                [](const SparseVec& b, std::size_t col) { return b.leading() < col; });
    basis.insert(pos, std::move(v));
  }
  return basis;
}

std::vector<SparseVec> rref_parallel(std::vector<SparseVec> rows) {
  std::erase_if(rows, [](const SparseVec& v) { return v.is_zero(); });
  std::vector<SparseVec> done;
  while (!rows.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].leading() < rows[best].leading()) best = i;
    }
    SparseVec pivot = std::move(rows[best]);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
    pivot.scale(1 / pivot.entries().front().second);
    const std::size_t p = pivot.leading();
    const auto pending = static_cast<long long>(rows.size());
    const auto finished = static_cast<long long>(done.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < pending + finished; ++i) {
      SparseVec& r = i < pending ? rows[static_cast<std::size_t>(i)] : done[static_cast<std::size_t>(i - pending)];
      const Scalar c = r.get(p);
      if (c != 0) r.axpy(-c, pivot);
    }
    std::erase_if(rows, [](const SparseVec& v) { return v.is_zero(); });
    done.push_back(std::move(pivot));
  }
  return done;
}

std::vector<SparseVec> rref(std::vector<SparseVec> rows, Exec exec) {
  return exec == Exec::parallel ? rref_parallel(std::move(rows)) : rref_serial(std::move(rows));
}

std::size_t rank(std::vector<SparseVec> rows, Exec exec) { return rref(std::move(rows), exec).size(); }

namespace {

std::size_t width_of(const std::vector<SparseVec>& rows) {
  std::size_t w = 0;
  for (const auto& r : rows) {
    if (!r.is_zero()) w = std::max(w, r.entries().back().first + 1);
  }
  return w;
}

std::vector<SparseVec> augment(const std::vector<SparseVec>& rows, std::size_t width) {
  std::vector<SparseVec> out;
  out.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseVec r = rows[i];
    r.append_shifted(SparseVec::unit(i), width);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<SparseVec> kernel(const std::vector<SparseVec>& images, Exec exec) {
  const std::size_t width = width_of(images);
  std::vector<SparseVec> out;
  for (auto& r : rref(augment(images, width), exec)) {
    if (r.leading() >= width) out.push_back(r.tail(width));
  }
  return out;
}

SpanSolver::SpanSolver(const std::vector<SparseVec>& generators, Exec exec)
    : count_(generators.size()), width_(width_of(generators)) {
  for (auto& r : rref(augment(generators, width_), exec)) {
    if (r.leading() < width_) pivots_.push_back(std::move(r));
  }
}

SparseVec SpanSolver::residual(const SparseVec& target) const {
  SparseVec r = target;
  for (const auto& p : pivots_) {
    const Scalar c = r.get(p.leading());
    if (c != 0) r.axpy(-c, p.head(width_));
  }
  return r;
}

bool SpanSolver::contains(const SparseVec& target) const { return residual(target).is_zero(); }

std::optional<std::vector<Scalar>> SpanSolver::solve(const SparseVec& target) const {
  if (!target.is_zero() && target.entries().back().first >= width_) return std::nullopt;
  SparseVec r = target;
  for (const auto& p : pivots_) {
    const Scalar c = r.get(p.leading());
    if (c != 0) r.axpy(-c, p);
  }
  if (!r.head(width_).is_zero()) return std::nullopt;
  std::vector<Scalar> coeffs(count_, 0);
  const SparseVec right = r.tail(width_);
  for (const auto& [i, c] : right.entries()) coeffs[i] = -c;
  return coeffs;
}

}  // namespace hopfkit

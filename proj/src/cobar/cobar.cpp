#include "hopfkit/cobar.hpp"

#include <functional>
#include <map>

#include "hopfkit/error.hpp"
#include "hopfkit/expression.hpp"

namespace hopfkit {

CobarComplex::CobarComplex(const HopfPresentation& H, int max_weight, Exec exec)
    : truncation_(H, max_weight, exec), exec_(exec) {
  require_connected(truncation_);
  const Alphabet& a = H.alphabet();
  for (Letter g = 0; g < a.size(); ++g) {
    if (H.epsilon_of(g) != 0) throw RefusedError("cobar complex needs counit zero on generators (" + a[g].name + ")");
  }
  words_by_weight_.assign(static_cast<std::size_t>(max_weight) + 1, {});
  const std::size_t n = truncation_.dim();
  for (std::size_t i = 1; i < n; ++i) {
    const Word& w = truncation_.words()[i];
    const int wt = weight(w, a);
    words_by_weight_[static_cast<std::size_t>(wt)].push_back(w);
    for (const auto& [idx, c] : truncation_.reduced_delta_of(i).entries()) {
      const Word& u = truncation_.words()[idx / n];
      const Word& v = truncation_.words()[idx % n];
      if (weight(u, a) + weight(v, a) != wt) {
        throw RefusedError("reduced comultiplication is not weight-homogeneous on " + format_word(w, a));
      }
    }
  }
}

CobarPiece CobarComplex::piece(int n, int w) const {
  if (n < 0 || w < 0) throw ValidationError("cobar degree and weight must be non-negative");
  if (w > max_weight()) throw ValidationError("weight " + std::to_string(w) + " exceeds the cobar window");
  CobarPiece out{n, w, {}};
  WordTuple current;
  std::function<void(int, int)> fill = [&](int left, int remaining) {
    if (left == 0) {
      if (remaining == 0) out.basis.push_back(current);
      return;
    }
    // Each remaining factor needs weight at least 1.
    for (int wt = 1; wt <= remaining - (left - 1); ++wt) {
      for (const Word& word : words_by_weight_[static_cast<std::size_t>(wt)]) {
        current.push_back(word);
        fill(left - 1, remaining - wt);
        current.pop_back();
      }
    }
  };
  fill(n, w);
  return out;
}

TensorChain CobarComplex::reduced_delta_word(const Word& w) const {
  auto i = truncation_.index_of(w);
  if (!i || *i == 0) {
    throw ValidationError("cobar legs must be non-unit normal words inside the window: " +
                          format_word(w, hopf().alphabet()));
  }
  TensorChain out;
  for (const auto& [pair, c] : truncation_.pair_element(truncation_.reduced_delta_of(*i))) {
    out.add(WordTuple{pair.first, pair.second}, c);
  }
  return out;
}

TensorChain CobarComplex::apply_differential(const TensorChain& c) const {
  std::map<Word, TensorChain> memo;
  auto rd = [&](const Word& w) -> const TensorChain& {
    auto it = memo.find(w);
    if (it == memo.end()) it = memo.emplace(w, reduced_delta_word(w)).first;
    return it->second;
  };
  TensorChain out;
  for (const auto& [legs, coeff] : c) {
    for (std::size_t i = 0; i < legs.size(); ++i) {
      const Scalar sign = (i % 2 == 0) ? -coeff : coeff;
      for (const auto& [pair, d] : rd(legs[i])) {
        WordTuple t(legs.begin(), legs.begin() + static_cast<std::ptrdiff_t>(i));
        t.insert(t.end(), pair.begin(), pair.end());
        t.insert(t.end(), legs.begin() + static_cast<std::ptrdiff_t>(i) + 1, legs.end());
        out.add(t, sign * d);
      }
    }
  }
  return out;
}

CobarDifferentialMatrix CobarComplex::differential(int n, int w) const {
  CobarDifferentialMatrix m;
  m.domain = piece(n, w);
  m.codomain = piece(n + 1, w);
  std::map<WordTuple, std::size_t> index;
  for (std::size_t i = 0; i < m.codomain.basis.size(); ++i) index.emplace(m.codomain.basis[i], i);
  m.columns = map_columns(
      m.domain.basis.size(),
      [&](std::size_t j) {
        std::vector<SparseVec::Entry> e;
        for (const auto& [t, c] : apply_differential(TensorChain(m.domain.basis[j]))) {
          auto it = index.find(t);
          if (it == index.end()) throw Error("cobar differential left its codomain piece");
          e.emplace_back(it->second, c);
        }
        return SparseVec::from_entries(std::move(e));
      },
      exec_);
  return m;
}

std::size_t CobarComplex::cohomology_dim(int n, int w) const {
  if (n > kMaxCobarDegree) {
    throw ValidationError("cobar cohomology is computed up to degree " + std::to_string(kMaxCobarDegree));
  }
  const auto d = differential(n, w);
  const std::size_t kernel_dim = d.domain.basis.size() - rank(d.columns, exec_);
  const std::size_t image_dim = n == 0 ? 0 : rank(differential(n - 1, w).columns, exec_);
  return kernel_dim - image_dim;
}

bool CobarComplex::square_zero(int n, int w) const {
  for (const auto& t : piece(n, w).basis) {
    if (!apply_differential(apply_differential(TensorChain(t))).is_zero()) return false;
  }
  return true;
}

namespace {

TensorChain as_chain(const TensorPoly& t) {
  TensorChain out;
  for (const auto& [k, c] : t) out.add(WordTuple{k.first, k.second}, c);
  return out;
}

}  // namespace

std::optional<NCPoly> CobarComplex::is_coboundary(const TensorPoly& t, int w) const {
  const Alphabet& a = hopf().alphabet();
  const TensorPoly tr = reduce_legs(t, hopf().presentation());
  for (const auto& [k, c] : tr) {
    if (k.first.empty() || k.second.empty() || weight(k.first, a) + weight(k.second, a) != w) {
      throw ValidationError("tensor term " + format_word(k.first, a) + "@" + format_word(k.second, a) +
                            " is not a non-unit term of weight " + std::to_string(w));
    }
  }
  const TensorChain d2 = apply_differential(as_chain(tr));
  if (!d2.is_zero()) throw ValidationError("not a cocycle: d2 t = " + format_chain(d2, a));
  const auto d1 = differential(1, w);
  std::map<WordTuple, std::size_t> index;
  for (std::size_t i = 0; i < d1.codomain.basis.size(); ++i) index.emplace(d1.codomain.basis[i], i);
  std::vector<SparseVec::Entry> e;
  for (const auto& [k, c] : tr) e.emplace_back(index.at(WordTuple{k.first, k.second}), c);
  const SpanSolver solver(d1.columns, exec_);
  auto coeffs = solver.solve(SparseVec::from_entries(std::move(e)));
  if (!coeffs) return std::nullopt;
  NCPoly v;
  for (std::size_t j = 0; j < coeffs->size(); ++j) v.add(d1.domain.basis[j][0], (*coeffs)[j]);
  // Canonical modulo the primitives (the kernel of d^1).
  SparseVec coords = truncation_.coordinates(v);
  for (const auto& r : primitives(truncation_).rows) {
    const Scalar c = coords.get(r.leading());
    if (c != 0) coords.axpy(-c, r);
  }
  return truncation_.element(coords);
}

CobarDifferentialMatrix cobar_differential(const HopfPresentation& H, int n, int w, Exec exec) {
  return CobarComplex(H, std::max(w, 0), exec).differential(n, w);
}

std::size_t cohomology_dim(const HopfPresentation& H, int n, int w, Exec exec) {
  return CobarComplex(H, std::max(w, 0), exec).cohomology_dim(n, w);
}

std::optional<NCPoly> is_coboundary(const HopfPresentation& H, const TensorPoly& t, int w, Exec exec) {
  return CobarComplex(H, std::max(w, 0), exec).is_coboundary(t, w);
}

ObstructionClass cocycle_class_of_obstruction(const HopfPresentation& H, const TensorPoly& u, const NCPoly& x,
                                              const NCPoly& y, Exec exec) {
  const Alphabet& a = H.alphabet();
  const TensorPoly ur = reduce_legs(u, H.presentation());
  if (ur.is_zero()) return {Scalar(0)};
  const auto& first = ur.begin()->first;
  const int w = weight(first.first, a) + weight(first.second, a);
  const CobarComplex C(H, w, exec);
  if (C.is_coboundary(ur, w)) return {Scalar(0)};
  const TensorPoly xy = reduce_legs(tensor(x, y), H.presentation());
  for (const auto& [k, c] : xy) {
    if (weight(k.first, a) + weight(k.second, a) != w) return {std::nullopt};
  }
  const auto d1 = C.differential(1, w);
  std::map<WordTuple, std::size_t> index;
  for (std::size_t i = 0; i < d1.codomain.basis.size(); ++i) index.emplace(d1.codomain.basis[i], i);
  auto coords = [&](const TensorPoly& t) {
    std::vector<SparseVec::Entry> e;
    for (const auto& [k, c] : t) {
      auto it = index.find(WordTuple{k.first, k.second});
      if (it == index.end()) throw ValidationError("tensor has a unit leg or leaves the window");
      e.emplace_back(it->second, c);
    }
    return SparseVec::from_entries(std::move(e));
  };
  std::vector<SparseVec> gens = d1.columns;
  gens.push_back(coords(xy));
  const SpanSolver solver(gens, exec);
  auto sol = solver.solve(coords(ur));
  if (!sol) return {std::nullopt};
  return {sol->back()};
}

}  // namespace hopfkit

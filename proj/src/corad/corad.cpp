#include "hopfkit/corad.hpp"

#include <algorithm>
#include <random>

#include "hopfkit/error.hpp"
#include "hopfkit/expression.hpp"

namespace hopfkit {

std::vector<Word> truncated_basis(const HopfPresentation& H, int max_weight) {
  if (max_weight < 0) throw ValidationError("truncation depth must be non-negative");
  require_confluent(H.presentation());
  std::vector<Word> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto level = normal_words(H.presentation(), Grading::weight, w);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Truncation::Truncation(const HopfPresentation& H, int max_weight, Exec exec)
    : hopf_(&H), max_weight_(max_weight), exec_(exec), words_(truncated_basis(H, max_weight)) {
  for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], i);
  augmented_.resize(words_.size());
  for (std::size_t i = 1; i < words_.size(); ++i) {
    augmented_[i] = SparseVec::from_entries({{i, Scalar(1)}, {0, -counit(monomial(words_[i]), H)}});
  }
  reduced_delta_ = map_columns(
      words_.size(),
      [&](std::size_t i) {
        if (i == 0) return SparseVec();
        NCPoly p = monomial(words_[i]);
        p.add(Word{}, -counit(p, H));
        return pair_coordinates(reduced_delta(p, H));
      },
      exec);
}

std::optional<std::size_t> Truncation::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVec Truncation::coordinates(const NCPoly& p) const {
  std::vector<SparseVec::Entry> e;
  for (const auto& [w, c] : reduce(p, hopf_->presentation())) {
    auto i = index_of(w);
    if (!i) {
      throw ValidationError("element leaves the truncation window F_" + std::to_string(max_weight_) + ": " +
                            format_word(w, hopf_->alphabet()));
    }
    e.emplace_back(*i, c);
  }
  return SparseVec::from_entries(std::move(e));
}

SparseVec Truncation::pair_coordinates(const TensorPoly& t) const {
  std::vector<SparseVec::Entry> e;
  const std::size_t n = dim();
  for (const auto& [k, c] : t) {
    auto u = index_of(k.first);
    auto v = index_of(k.second);
    if (!u || !v) {
      throw ValidationError("tensor leaves the truncation window F_" + std::to_string(max_weight_) + ": " +
                            format_word(k.first, hopf_->alphabet()) + "@" + format_word(k.second, hopf_->alphabet()));
    }
    e.emplace_back(*u * n + *v, c);
  }
  return SparseVec::from_entries(std::move(e));
}

NCPoly Truncation::element(const SparseVec& v) const {
  NCPoly out;
  for (const auto& [i, c] : v.entries()) out.add(words_.at(i), c);
  return out;
}

TensorPoly Truncation::pair_element(const SparseVec& v) const {
  TensorPoly out;
  const std::size_t n = dim();
  for (const auto& [i, c] : v.entries()) out.add({words_.at(i / n), words_.at(i % n)}, c);
  return out;
}

NCPoly SubspaceBasis::element(std::size_t i) const {
  NCPoly out;
  for (const auto& [j, c] : rows.at(i).entries()) out.add(ambient.at(j), c);
  return out;
}

std::vector<NCPoly> SubspaceBasis::elements() const {
  std::vector<NCPoly> out;
  for (std::size_t i = 0; i < rows.size(); ++i) out.push_back(element(i));
  return out;
}

namespace {

/// v minus its components along the pivots of an RREF row list.
SparseVec reduce_against(SparseVec v, const std::vector<SparseVec>& rows) {
  for (const auto& r : rows) {
    const Scalar c = v.get(r.leading());
    if (c != 0) v.axpy(-c, r);
  }
  return v;
}

}  // namespace

bool SubspaceBasis::contains(const NCPoly& p) const {
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < ambient.size(); ++i) index.emplace(ambient[i], i);
  std::vector<SparseVec::Entry> e;
  for (const auto& [w, c] : p) {
    auto it = index.find(w);
    if (it == index.end()) return false;
    e.emplace_back(it->second, c);
  }
  return reduce_against(SparseVec::from_entries(std::move(e)), rows).is_zero();
}

void require_connected(const Truncation& T) {
  // For a group-like w, reduced_delta(w - 1) = (w - 1) (x) (w - 1).
  const HopfPresentation& H = T.hopf();
  for (std::size_t i = 1; i < T.dim(); ++i) {
    const Word& w = T.words()[i];
    if (counit(monomial(w), H) != 1) continue;
    NCPoly a = monomial(w);
    a.add(Word{}, -1);
    if (T.reduced_delta_of(i) == T.pair_coordinates(tensor(a, a))) {
      throw RefusedError("not connected: " + format_word(w, H.alphabet()) + " is group-like");
    }
  }
}

namespace {

SubspaceBasis kernel_subspace(const Truncation& T, const std::vector<SparseVec>& images) {
  // images[k] is the image of augmented(k + 1).
  SubspaceBasis out{T.words(), {}};
  std::vector<SparseVec> ambient_rows;
  for (const auto& k : kernel(images, T.exec())) {
    SparseVec v;
    for (const auto& [i, c] : k.entries()) v.axpy(c, T.augmented(i + 1));
    ambient_rows.push_back(std::move(v));
  }
  out.rows = rref(std::move(ambient_rows), T.exec());
  return out;
}

std::vector<SparseVec> augmented_images(const Truncation& T) {
  std::vector<SparseVec> images;
  for (std::size_t i = 1; i < T.dim(); ++i) images.push_back(T.reduced_delta_of(i));
  return images;
}

}  // namespace

SubspaceBasis primitives(const Truncation& T) {
  require_connected(T);
  return kernel_subspace(T, augmented_images(T));
}

SubspaceBasis primitives(const HopfPresentation& H, int max_weight, Exec exec) {
  const Truncation T(H, max_weight, exec);
  return primitives(T);
}

namespace {

/// (pi (x) id) t or (id (x) pi) t, where pi removes the components along
/// the pivots of an RREF basis of a subspace.
SparseVec project_leg(const SparseVec& t, const std::vector<SparseVec>& rows, std::size_t n, bool left) {
  std::map<std::size_t, const SparseVec*> by_pivot;
  for (const auto& r : rows) by_pivot.emplace(r.leading(), &r);
  std::vector<SparseVec::Entry> e(t.entries().begin(), t.entries().end());
  for (const auto& [idx, c] : t.entries()) {
    const std::size_t u = idx / n;
    const std::size_t v = idx % n;
    auto it = by_pivot.find(left ? u : v);
    if (it == by_pivot.end()) continue;
    for (const auto& [j, d] : it->second->entries()) {
      e.emplace_back(left ? j * n + v : u * n + j, -c * d);
    }
  }
  return SparseVec::from_entries(std::move(e));
}

int complete_level_of(const Truncation& T) {
  return T.max_weight() / T.hopf().alphabet().max_weight();
}

}  // namespace

namespace {

CoradicalFiltration filtration(const Truncation& T, int levels, bool stop_when_full) {
  CoradicalFiltration out;
  out.max_weight = T.max_weight();
  out.complete_level = complete_level_of(T);
  if (levels > out.complete_level) {
    out.warnings.push_back("levels above " + std::to_string(out.complete_level) + " are within-window only (D = " +
                           std::to_string(T.max_weight()) + ")");
  }
  const std::size_t n = T.dim();
  out.levels.push_back(SubspaceBasis{T.words(), {SparseVec::unit(0)}});
  const std::size_t offset = n * n;
  for (int m = 1; m <= levels; ++m) {
    if (stop_when_full && out.levels.back().dim() == n) break;
    const auto& prev = out.levels.back().rows;
    auto images = map_columns(
        n - 1,
        [&](std::size_t k) {
          const SparseVec& t = T.reduced_delta_of(k + 1);
          SparseVec img = project_leg(t, prev, n, true);
          img.append_shifted(project_leg(t, prev, n, false), offset);
          return img;
        },
        T.exec());
    SubspaceBasis level = kernel_subspace(T, images);
    level.rows.push_back(SparseVec::unit(0));
    level.rows = rref(std::move(level.rows), T.exec());
    out.levels.push_back(std::move(level));
  }
  return out;
}

}  // namespace

CoradicalFiltration coradical_filtration(const Truncation& T, int levels) {
  if (levels < 0) throw ValidationError("number of filtration levels must be non-negative");
  require_connected(T);
  return filtration(T, levels, false);
}

CoradicalFiltration coradical_filtration(const HopfPresentation& H, int levels, int max_weight, Exec exec) {
  const Truncation T(H, max_weight, exec);
  return coradical_filtration(T, levels);
}

std::vector<std::size_t> weighted_polynomial_hilbert(const std::vector<int>& degrees, int top) {
  if (top < 0) return {};
  std::vector<std::size_t> h(static_cast<std::size_t>(top) + 1, 0);
  h[0] = 1;
  for (int d : degrees) {
    if (d <= 0) throw ValidationError("polynomial generator degrees must be positive");
    for (int n = d; n <= top; ++n) h[static_cast<std::size_t>(n)] += h[static_cast<std::size_t>(n - d)];
  }
  return h;
}

namespace {

/// Row-reduced basis grown one vector at a time.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(std::vector<SparseVec> rows) : rows_(std::move(rows)) {}

  bool insert(SparseVec v) {
    v = reduce_against(std::move(v), rows_);
    if (v.is_zero()) return false;
    v.scale(1 / v.entries().front().second);
    const std::size_t p = v.leading();
    for (auto& r : rows_) {
      const Scalar c = r.get(p);
      if (c != 0) r.axpy(-c, v);
    }
    rows_.push_back(std::move(v));
    return true;
  }

 private:
  std::vector<SparseVec> rows_;
};

std::vector<Scalar> tail_coordinates(const std::vector<Scalar>& coeffs, std::size_t skip) {
  return std::vector<Scalar>(coeffs.begin() + static_cast<std::ptrdiff_t>(skip), coeffs.end());
}

}  // namespace

GrTable gr_structure(const HopfPresentation& H, int max_weight, Exec exec) {
  const Truncation T(H, max_weight, exec);
  require_connected(T);
  GrTable g;
  g.max_weight = max_weight;
  g.complete_degree = complete_level_of(T);

  // Every element of weight <= D lies in H_D, so D levels exhaust F_D.
  const CoradicalFiltration F = filtration(T, max_weight, true);
  const int top = static_cast<int>(F.levels.size()) - 1;

  std::vector<std::vector<SparseVec>> rep_vecs(static_cast<std::size_t>(top) + 1);
  rep_vecs[0] = {SparseVec::unit(0)};
  for (int n = 1; n <= top; ++n) {
    IncrementalBasis basis(F.levels[static_cast<std::size_t>(n - 1)].rows);
    for (const auto& r : F.levels[static_cast<std::size_t>(n)].rows) {
      if (basis.insert(r)) rep_vecs[static_cast<std::size_t>(n)].push_back(r);
    }
  }
  for (const auto& reps : rep_vecs) {
    g.hilbert.push_back(reps.size());
    std::vector<NCPoly> polys;
    for (const auto& v : reps) polys.push_back(T.element(v));
    g.representatives.push_back(std::move(polys));
  }

  // Solvers over [H_{n-1} rows, reps of degree n].
  std::vector<std::optional<SpanSolver>> solvers(static_cast<std::size_t>(top) + 1);
  std::vector<std::size_t> lower_dim(static_cast<std::size_t>(top) + 1, 0);
  for (int n = 1; n <= top; ++n) {
    auto gens = F.levels[static_cast<std::size_t>(n - 1)].rows;
    lower_dim[static_cast<std::size_t>(n)] = gens.size();
    gens.insert(gens.end(), rep_vecs[static_cast<std::size_t>(n)].begin(), rep_vecs[static_cast<std::size_t>(n)].end());
    solvers[static_cast<std::size_t>(n)].emplace(gens, exec);
  }

  const int reach = std::min(g.complete_degree, top);
  const Presentation& pres = H.presentation();
  for (int i = 1; i <= reach; ++i) {
    for (int j = 1; i + j <= reach; ++j) {
      const auto d = static_cast<std::size_t>(i + j);
      for (std::size_t a = 0; a < g.representatives[static_cast<std::size_t>(i)].size(); ++a) {
        for (std::size_t b = 0; b < g.representatives[static_cast<std::size_t>(j)].size(); ++b) {
          const NCPoly prod = multiply_reduced(g.representatives[static_cast<std::size_t>(i)][a],
                                               g.representatives[static_cast<std::size_t>(j)][b], pres);
          auto coeffs = solvers[d]->solve(T.coordinates(prod));
          if (!coeffs) {
            g.associative = false;
            g.warnings.push_back("product of degree " + std::to_string(i) + " and " + std::to_string(j) +
                                 " classes leaves H_" + std::to_string(i + j));
            continue;
          }
          g.constants[{i, a, j, b}] = tail_coordinates(*coeffs, lower_dim[d]);
        }
      }
    }
  }

  for (const auto& [key, value] : g.constants) {
    const auto [i, a, j, b] = key;
    auto it = g.constants.find({j, b, i, a});
    if (it != g.constants.end() && it->second != value) {
      g.commutative = false;
      if (g.commutativity_witness.empty()) {
        g.commutativity_witness = "[" + format_element(g.representatives[static_cast<std::size_t>(i)][a], H.alphabet()) +
                                  ", " + format_element(g.representatives[static_cast<std::size_t>(j)][b], H.alphabet()) +
                                  "] not in H_" + std::to_string(i + j - 1);
      }
    }
  }

  if (reach >= 3) {
    const std::size_t n1 = g.hilbert[1];
    const std::size_t n2 = g.hilbert[2];
    for (std::size_t a = 0; a < n1 && g.associative; ++a) {
      for (std::size_t b = 0; b < n1 && g.associative; ++b) {
        for (std::size_t c = 0; c < n1 && g.associative; ++c) {
          std::vector<Scalar> left(g.hilbert[3], 0), right(g.hilbert[3], 0);
          const auto& ab = g.constants.at({1, a, 1, b});
          const auto& bc = g.constants.at({1, b, 1, c});
          for (std::size_t k = 0; k < n2; ++k) {
            const auto& kc = g.constants.at({2, k, 1, c});
            const auto& ak = g.constants.at({1, a, 2, k});
            for (std::size_t t = 0; t < g.hilbert[3]; ++t) {
              left[t] += ab[k] * kc[t];
              right[t] += bc[k] * ak[t];
            }
          }
          if (left != right) {
            g.associative = false;
            g.warnings.push_back("associativity fails on degree-one triple (" + std::to_string(a) + ", " +
                                 std::to_string(b) + ", " + std::to_string(c) + ")");
          }
        }
      }
    }
  }

  if (reach >= 1) g.degree_one_generators = g.hilbert[1];
  if (reach >= 2) {
    std::vector<SparseVec> products;
    for (std::size_t a = 0; a < g.hilbert[1]; ++a) {
      for (std::size_t b = 0; b < g.hilbert[1]; ++b) {
        std::vector<SparseVec::Entry> e;
        const auto& v = g.constants.at({1, a, 1, b});
        for (std::size_t k = 0; k < v.size(); ++k) e.emplace_back(k, v[k]);
        products.push_back(SparseVec::from_entries(std::move(e)));
      }
    }
    g.degree_two_generators = g.hilbert[2] - rank(std::move(products), exec);
  } else {
    g.warnings.push_back("window too small to count degree-two generators");
  }
  std::vector<int> degrees(g.degree_one_generators, 1);
  degrees.insert(degrees.end(), g.degree_two_generators, 2);
  g.polynomial_hilbert = weighted_polynomial_hilbert(degrees, g.complete_degree);
  g.hilbert_matches = reach == g.complete_degree &&
                      std::equal(g.polynomial_hilbert.begin(), g.polynomial_hilbert.end(), g.hilbert.begin());
  if (g.hilbert_matches) g.growth_degree = static_cast<int>(degrees.size());
  if (top > g.complete_degree) {
    g.warnings.push_back("degrees above " + std::to_string(g.complete_degree) + " are within-window only");
  }
  return g;
}

FindZResult find_z(const HopfPresentation& H, const NCPoly& x, const NCPoly& y, int max_weight, Exec exec) {
  const Truncation T(H, max_weight, exec);
  require_connected(T);
  const Presentation& pres = H.presentation();
  for (const NCPoly* p : {&x, &y}) {
    if (counit(*p, H) != 0 || !reduced_delta(*p, H).is_zero()) {
      throw ValidationError(format_element(*p, H.alphabet()) + " is not primitive");
    }
  }
  const NCPoly xr = reduce(x, pres);
  const NCPoly yr = reduce(y, pres);
  if (rank({T.coordinates(xr), T.coordinates(yr)}, exec) != 2) {
    throw ValidationError("x and y must be linearly independent");
  }
  const auto images = augmented_images(T);
  FindZResult out;
  out.homogeneous_kernel = kernel_subspace(T, images);
  const SpanSolver solver(images, exec);
  auto coeffs = solver.solve(T.pair_coordinates(tensor(xr, yr)));
  if (!coeffs) return out;
  SparseVec z;
  for (std::size_t k = 0; k < coeffs->size(); ++k) z.axpy((*coeffs)[k], T.augmented(k + 1));
  z = reduce_against(std::move(z), out.homogeneous_kernel.rows);
  out.z = T.element(z);
  return out;
}

SubspaceBasis subalgebra_span(const HopfPresentation& H, const std::vector<NCPoly>& gens, int max_weight) {
  const Truncation T(H, max_weight, Exec::serial);
  const Presentation& pres = H.presentation();
  std::vector<int> gen_weight;
  std::vector<NCPoly> reduced;
  for (const auto& g : gens) {
    reduced.push_back(reduce(g, pres));
    const int w = hopfkit::max_weight(reduced.back(), H.alphabet());
    if (w < 1) throw ValidationError("subalgebra generators must be nonconstant");
    gen_weight.push_back(w);
  }
  // by_weight[w]: a spanning set of the products of nominal weight w.
  std::vector<std::vector<NCPoly>> by_weight(static_cast<std::size_t>(max_weight) + 1);
  by_weight[0] = {constant(1)};
  std::vector<SparseVec> all{SparseVec::unit(0)};
  for (int w = 1; w <= max_weight; ++w) {
    std::vector<SparseVec> level;
    std::vector<NCPoly> candidates;
    for (std::size_t g = 0; g < reduced.size(); ++g) {
      const int from = w - gen_weight[g];
      if (from < 0) continue;
      for (const auto& p : by_weight[static_cast<std::size_t>(from)]) {
        candidates.push_back(multiply_reduced(p, reduced[g], pres));
        level.push_back(T.coordinates(candidates.back()));
      }
    }
    for (const auto& r : rref(level, Exec::serial)) {
      by_weight[static_cast<std::size_t>(w)].push_back(T.element(r));
      all.push_back(r);
    }
  }
  return SubspaceBasis{T.words(), rref(std::move(all), Exec::serial)};
}

std::size_t intersection_dim(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient != b.ambient) throw ValidationError("subspaces live in different windows");
  std::vector<SparseVec> both = a.rows;
  both.insert(both.end(), b.rows.begin(), b.rows.end());
  return a.dim() + b.dim() - rank(std::move(both), Exec::serial);
}

DomainCheck spot_check_domain(const HopfPresentation& H, int max_weight, std::size_t trials,
                              unsigned long long seed) {
  const auto words = truncated_basis(H, max_weight);
  const Presentation& pres = H.presentation();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<std::size_t> terms(1, std::min<std::size_t>(4, words.size()));
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  auto random_element = [&] {
    NCPoly p;
    while (p.is_zero()) {
      const std::size_t k = terms(rng);
      for (std::size_t t = 0; t < k; ++t) p.add(words[pick(rng)], coeff(rng));
    }
    return p;
  };
  DomainCheck out;
  for (std::size_t t = 0; t < trials; ++t) {
    const NCPoly a = random_element();
    const NCPoly b = random_element();
    ++out.trials;
    if (multiply_reduced(a, b, pres).is_zero()) {
      out.passed = false;
      out.witness = "(" + format_element(a, H.alphabet()) + ") * (" + format_element(b, H.alphabet()) + ") = 0";
      break;
    }
  }
  return out;
}

}  // namespace hopfkit

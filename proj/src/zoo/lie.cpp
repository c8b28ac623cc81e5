#include "hopfkit/lie.hpp"

#include "hopfkit/error.hpp"
#include "hopfkit/linalg.hpp"

namespace hopfkit {

namespace {

SparseVec to_sparse(const LieAlgebra::Vector& v) {
  std::vector<SparseVec::Entry> e;
  for (std::size_t i = 0; i < v.size(); ++i) e.emplace_back(i, v[i]);
  return SparseVec::from_entries(std::move(e));
}

LieAlgebra::Vector to_dense(const SparseVec& v, std::size_t n) {
  LieAlgebra::Vector out(n, 0);
  for (const auto& [i, c] : v.entries()) out[i] = c;
  return out;
}

}  // namespace

LieAlgebra::LieAlgebra(std::vector<std::string> names,
                       const std::map<std::pair<std::size_t, std::size_t>, Vector>& brackets)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  if (n == 0) throw ValidationError("a Lie algebra needs at least one basis element");
  table_.assign(n, std::vector<Vector>(n, Vector(n, 0)));
  for (const auto& [ij, v] : brackets) {
    const auto [i, j] = ij;
    if (i >= j || j >= n) throw ValidationError("brackets must be listed for index pairs i < j < dim");
    if (v.size() != n) throw ValidationError("bracket vector has the wrong length");
    table_[i][j] = v;
    for (std::size_t k = 0; k < n; ++k) table_[j][i][k] = -v[k];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        auto e = [n](std::size_t idx) {
          Vector v(n, 0);
          v[idx] = 1;
          return v;
        };
        const Vector a = bracket(e(i), bracket(j, k));
        const Vector b = bracket(e(j), bracket(k, i));
        const Vector c = bracket(e(k), bracket(i, j));
        for (std::size_t t = 0; t < n; ++t) {
          if (a[t] + b[t] + c[t] != 0) {
            throw ValidationError("Jacobi identity fails on (" + names_[i] + ", " + names_[j] + ", " + names_[k] + ")");
          }
        }
      }
    }
  }
}

LieAlgebra::Vector LieAlgebra::bracket(const Vector& a, const Vector& b) const {
  const std::size_t n = dim();
  Vector out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const Scalar c = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k) out[k] += c * table_[i][j][k];
    }
  }
  return out;
}

bool LieAlgebra::is_abelian() const { return derived_dim() == 0; }

std::size_t LieAlgebra::derived_dim() const {
  std::vector<SparseVec> rows;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i + 1; j < dim(); ++j) rows.push_back(to_sparse(table_[i][j]));
  }
  return rank(std::move(rows), Exec::serial);
}

bool LieAlgebra::is_solvable() const {
  std::vector<SparseVec> current;
  for (std::size_t i = 0; i < dim(); ++i) current.push_back(SparseVec::unit(i));
  while (!current.empty()) {
    std::vector<SparseVec> next;
    for (std::size_t a = 0; a < current.size(); ++a) {
      for (std::size_t b = a + 1; b < current.size(); ++b) {
        next.push_back(to_sparse(bracket(to_dense(current[a], dim()), to_dense(current[b], dim()))));
      }
    }
    next = rref(std::move(next), Exec::serial);
    if (next.size() == current.size()) return false;
    current = std::move(next);
  }
  return true;
}

namespace {

LieAlgebra::Vector vec(std::initializer_list<int> v) {
  LieAlgebra::Vector out;
  for (int x : v) out.emplace_back(x);
  return out;
}

}  // namespace

LieAlgebra lie_preset(std::string_view name) {
  const std::vector<std::string> xyz{"x", "y", "z"};
  if (name == "abelian") return LieAlgebra(xyz, {});
  if (name == "heisenberg") return LieAlgebra(xyz, {{{0, 1}, vec({0, 0, 1})}});
  if (name == "r3") return LieAlgebra(xyz, {{{0, 1}, vec({0, 1, 0})}, {{0, 2}, vec({0, 1, 1})}});
  if (name.starts_with("r3lambda")) {
    Scalar lambda = 2;
    std::string_view rest = name.substr(8);
    if (!rest.empty()) {
      if (rest.size() < 3 || rest.front() != '(' || rest.back() != ')') {
        throw ValidationError("expected r3lambda or r3lambda(<rational>)");
      }
      lambda = parse_rational(rest.substr(1, rest.size() - 2));
    }
    return LieAlgebra(xyz, {{{0, 1}, vec({0, 1, 0})}, {{0, 2}, LieAlgebra::Vector{0, 0, lambda}}});
  }
  if (name == "sl2") {
    // e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
    return LieAlgebra({"e", "f", "h"},
                      {{{0, 1}, vec({0, 0, 1})}, {{0, 2}, vec({-2, 0, 0})}, {{1, 2}, vec({0, 2, 0})}});
  }
  if (name == "e2") return LieAlgebra(xyz, {{{0, 1}, vec({0, 0, 1})}, {{0, 2}, vec({0, -1, 0})}});
  if (name == "2dim" || name == "2dim-nonabelian") return LieAlgebra({"x", "y"}, {{{0, 1}, vec({0, 1})}});
  if (name == "2dim-abelian") return LieAlgebra({"x", "y"}, {});
  if (name == "1dim") return LieAlgebra({"x"}, {});
  throw ValidationError("unknown Lie algebra preset '" + std::string(name) + "'");
}

std::vector<std::string> lie_preset_names() {
  return {"abelian", "heisenberg", "r3", "r3lambda", "sl2", "e2", "2dim", "2dim-nonabelian", "2dim-abelian", "1dim"};
}

std::vector<std::string> lie_presets_3dim() { return {"abelian", "heisenberg", "r3", "r3lambda", "sl2", "e2"}; }

}  // namespace hopfkit

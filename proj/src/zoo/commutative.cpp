#include "hopfkit/commutative.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hopfkit {

namespace {

int degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded reverse lexicographic: true when a > b.
bool grevlex_greater(const Exponents& a, const Exponents& b) {
  const int da = degree(a), db = degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

const Exponents& leading(const CommPoly& p) {
  auto best = p.begin();
  for (auto it = p.begin(); it != p.end(); ++it) {
    if (grevlex_greater(it->first, best->first)) best = it;
  }
  return best->first;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents difference(const Exponents& b, const Exponents& a) {
  Exponents out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = b[i] - a[i];
  return out;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

/// p += c * x^shift * q
void add_shifted(CommPoly& p, const Scalar& c, const Exponents& shift, const CommPoly& q) {
  for (const auto& [e, d] : q) {
    Exponents m(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = e[i] + shift[i];
    auto [it, inserted] = p.try_emplace(m, c * d);
    if (!inserted) {
      it->second += c * d;
      if (it->second == 0) p.erase(it);
    }
  }
}

void make_monic(CommPoly& p) {
  const Scalar lc = p.at(leading(p));
  for (auto& [e, c] : p) c /= lc;
}

/// Full reduction of p modulo the basis.
CommPoly normal_form(CommPoly p, const std::vector<CommPoly>& basis) {
  CommPoly rem;
  while (!p.empty()) {
    const Exponents lt = leading(p);
    const Scalar lc = p.at(lt);
    bool reduced = false;
    for (const auto& g : basis) {
      const Exponents& lg = leading(g);
      if (divides(lg, lt)) {
        add_shifted(p, -lc / g.at(lg), difference(lt, lg), g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.emplace(lt, lc);
      p.erase(lt);
    }
  }
  return rem;
}

}  // namespace

std::vector<CommPoly> groebner_basis(std::vector<CommPoly> generators, std::size_t nvars) {
  std::vector<CommPoly> basis;
  for (auto& g : generators) {
    std::erase_if(g, [](const auto& kv) { return kv.second == 0; });
    for (const auto& [e, c] : g) {
      if (e.size() != nvars) throw std::invalid_argument("exponent vector has the wrong length");
    }
    if (!g.empty()) basis.push_back(std::move(g));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
  }
  while (!pairs.empty()) {
    const auto [i, j] = pairs.back();
    pairs.pop_back();
    const Exponents& li = leading(basis[i]);
    const Exponents& lj = leading(basis[j]);
    const Exponents l = lcm(li, lj);
    CommPoly s;
    add_shifted(s, 1 / basis[i].at(li), difference(l, li), basis[i]);
    add_shifted(s, -1 / basis[j].at(lj), difference(l, lj), basis[j]);
    CommPoly r = normal_form(std::move(s), basis);
    if (r.empty()) continue;
    basis.push_back(std::move(r));
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }
  // Minimalize, then inter-reduce.
  std::vector<CommPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Exponents& li = leading(basis[i]);
      const Exponents& lj = leading(basis[j]);
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<CommPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<CommPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const Exponents lt = leading(minimal[i]);
    CommPoly tail = minimal[i];
    const Scalar lc = tail.at(lt);
    tail.erase(lt);
    CommPoly p = normal_form(std::move(tail), others);
    p.emplace(lt, lc);
    make_monic(p);
    reduced.push_back(std::move(p));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const CommPoly& a, const CommPoly& b) { return grevlex_greater(leading(b), leading(a)); });
  return reduced;
}

int krull_dimension(const std::vector<CommPoly>& basis, std::size_t nvars) {
  std::vector<Exponents> leads;
  for (const auto& g : basis) {
    const Exponents& l = leading(g);
    if (degree(l) == 0) return -1;
    leads.push_back(l);
  }
  int best = 0;
  for (unsigned long mask = 0; mask < (1ul << nvars); ++mask) {
    bool independent = true;
    for (const auto& l : leads) {
      bool inside = true;
      for (std::size_t i = 0; i < nvars; ++i) {
        if (l[i] > 0 && !(mask & (1ul << i))) inside = false;
      }
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcountl(mask));
  }
  return best;
}

}  // namespace hopfkit

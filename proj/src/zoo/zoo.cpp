#include "hopfkit/zoo.hpp"

#include <algorithm>
#include <sstream>

#include "hopfkit/commutative.hpp"
#include "hopfkit/error.hpp"
#include "hopfkit/expression.hpp"

namespace hopfkit {

namespace {

Alphabet xyz_alphabet() { return Alphabet({{"X", 1}, {"Y", 1}, {"Z", 2}}); }

constexpr Letter kX = 0, kY = 1, kZ = 2;

Word w(std::initializer_list<Letter> l) { return Word(l); }

NCPoly terms(std::initializer_list<std::pair<Word, Scalar>> t) {
  NCPoly p;
  for (const auto& [word, c] : t) p.add(word, c);
  return p;
}

HopfPresentation xyz_hopf(std::vector<RewriteRule> rules) {
  Presentation pres(xyz_alphabet(), std::move(rules));
  auto primitive = [](Letter g) { return tensor(constant(1), generator(g)) + tensor(generator(g), constant(1)); };
  TensorPoly dz = primitive(kZ);
  dz.add({w({kX}), w({kY})}, 1);
  std::vector<TensorPoly> delta{primitive(kX), primitive(kY), dz};
  std::vector<Scalar> eps{0, 0, 0};
  std::vector<NCPoly> s{monomial(w({kX}), -1), monomial(w({kY}), -1), terms({{w({kZ}), -1}, {w({kX, kY}), 1}})};
  return HopfPresentation(std::move(pres), std::move(delta), std::move(eps), std::move(s));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Scalar> parse_params(std::string_view s, std::size_t count, std::string_view family) {
  const auto parts = split(s, ',');
  if (parts.size() != count) {
    throw ValidationError(std::string(family) + " expects " + std::to_string(count) + " comma-separated parameters");
  }
  std::vector<Scalar> out;
  for (const auto& p : parts) out.push_back(parse_rational(p));
  return out;
}

/// "x,y,z;[x,y]=z;[x,z]=-y" (pairs not listed are zero).
LieAlgebra parse_lie_constants(std::string_view text) {
  const auto sections = split(text, ';');
  std::vector<std::string> names;
  for (const auto& n : split(sections[0], ',')) names.push_back(trim(n));
  std::vector<Generator> gens;
  for (const auto& n : names) gens.push_back({n, 1});
  const Alphabet alphabet(gens);
  std::map<std::pair<std::size_t, std::size_t>, LieAlgebra::Vector> brackets;
  for (std::size_t s = 1; s < sections.size(); ++s) {
    const std::string item = trim(sections[s]);
    if (item.empty()) continue;
    const auto close = item.find(']');
    const auto eq = item.find('=');
    if (item.front() != '[' || close == std::string::npos || eq == std::string::npos || eq < close) {
      throw ValidationError("expected a bracket '[a,b]=expr', got '" + item + "'");
    }
    const auto ab = split(item.substr(1, close - 1), ',');
    if (ab.size() != 2) throw ValidationError("expected two names inside the bracket in '" + item + "'");
    auto ia = alphabet.find(trim(ab[0]));
    auto ib = alphabet.find(trim(ab[1]));
    if (!ia || !ib || *ia == *ib) throw ValidationError("bad bracket names in '" + item + "'");
    const NCPoly rhs = parse_element(item.substr(eq + 1), alphabet);
    LieAlgebra::Vector v(names.size(), 0);
    for (const auto& [word, c] : rhs) {
      if (word.size() != 1) throw ValidationError("bracket values must be linear in '" + item + "'");
      v[word[0]] = c;
    }
    if (*ia > *ib) {
      for (auto& c : v) c = -c;
    }
    brackets[{std::min(*ia, *ib), std::max(*ia, *ib)}] = v;
  }
  return LieAlgebra(names, brackets);
}

}  // namespace

HopfPresentation build_A(const Scalar& l1, const Scalar& l2, const Scalar& alpha) {
  if (alpha != 0 && alpha != 1) throw ValidationError("A(l1, l2, alpha) needs alpha in {0, 1}");
  if (l1 != l2 && alpha != 0) throw ValidationError("A(l1, l2, alpha) needs alpha = 0 when l1 != l2");
  return xyz_hopf({
      {w({kY, kX}), terms({{w({kX, kY}), 1}})},
      {w({kZ, kX}), terms({{w({kX, kZ}), 1}, {w({kX}), l1}, {w({kY}), alpha}})},
      {w({kZ, kY}), terms({{w({kY, kZ}), 1}, {w({kY}), l2}})},
  });
}

HopfPresentation build_B_perturbed(const Scalar& lambda, const Scalar& a21, const Scalar& a22) {
  return xyz_hopf({
      {w({kY, kX}), terms({{w({kX, kY}), 1}, {w({kY}), -1}})},
      {w({kZ, kX}), terms({{w({kX, kZ}), 1}, {w({kZ}), -1}, {w({kY}), lambda}})},
      {w({kZ, kY}), terms({{w({kY, kZ}), 1}, {w({kY, kY}), Scalar(1, 2)}, {w({kX}), a21}, {w({kY}), a22}})},
  });
}

HopfPresentation build_B(const Scalar& lambda) { return build_B_perturbed(lambda, 0, 0); }

HopfPresentation build_enveloping(const LieAlgebra& lie) {
  std::vector<Generator> gens;
  for (const auto& n : lie.names()) gens.push_back({n, 1});
  Alphabet alphabet(gens);
  std::vector<RewriteRule> rules;
  const std::size_t n = lie.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      NCPoly rhs = monomial(Word({static_cast<Letter>(j), static_cast<Letter>(i)}));
      const auto& b = lie.bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) rhs.add(Word::letter(static_cast<Letter>(k)), b[k]);
      rules.push_back({Word({static_cast<Letter>(i), static_cast<Letter>(j)}), rhs});
    }
  }
  Presentation pres(alphabet, std::move(rules));
  std::vector<TensorPoly> delta;
  std::vector<NCPoly> antipode;
  for (std::size_t i = 0; i < n; ++i) {
    const NCPoly g = generator(static_cast<Letter>(i));
    delta.push_back(tensor(constant(1), g) + tensor(g, constant(1)));
    antipode.push_back(monomial(Word::letter(static_cast<Letter>(i)), -1));
  }
  return HopfPresentation(std::move(pres), std::move(delta), std::vector<Scalar>(n, 0), std::move(antipode));
}

HopfPresentation build_free(const std::vector<std::string>& names) {
  std::vector<Generator> gens;
  for (const auto& n : names) gens.push_back({n, 1});
  Presentation pres(Alphabet(gens), {});
  std::vector<TensorPoly> delta;
  std::vector<NCPoly> antipode;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const NCPoly g = generator(static_cast<Letter>(i));
    delta.push_back(tensor(constant(1), g) + tensor(g, constant(1)));
    antipode.push_back(monomial(Word::letter(static_cast<Letter>(i)), -1));
  }
  return HopfPresentation(std::move(pres), std::move(delta), std::vector<Scalar>(names.size(), 0),
                          std::move(antipode));
}

HopfPresentation build_family(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ValidationError("family spec needs the form <family>:<parameters>");
  const std::string family = trim(spec.substr(0, colon));
  const std::string_view rest = spec.substr(colon + 1);
  if (family == "A") {
    const auto p = parse_params(rest, 3, "A");
    return build_A(p[0], p[1], p[2]);
  }
  if (family == "B") return build_B(parse_params(rest, 1, "B")[0]);
  if (family == "Bpert") {
    const auto p = parse_params(rest, 3, "Bpert");
    return build_B_perturbed(p[0], p[1], p[2]);
  }
  if (family == "env") {
    const bool custom = rest.find(';') != std::string_view::npos || rest.find(',') != std::string_view::npos;
    if (custom) return build_enveloping(parse_lie_constants(rest));
    return build_enveloping(lie_preset(trim(rest)));
  }
  if (family == "free") {
    std::vector<std::string> names;
    for (const auto& n : split(rest, ',')) names.push_back(trim(n));
    return build_free(names);
  }
  throw ValidationError("unknown family '" + family + "'");
}

std::vector<std::string> family_catalog() {
  std::vector<std::string> out{
      "A:l1,l2,alpha    [Z,X] = l1 X + alpha Y, [Z,Y] = l2 Y, [X,Y] = 0",
      "B:lambda         [X,Y] = Y, [Z,X] = -Z + lambda Y, [Z,Y] = Y^2/2",
      "Bpert:lambda,a21,a22   B with [Z,Y] = Y^2/2 + a21 X + a22 Y",
      "env:<preset>     enveloping algebra of a Lie algebra preset",
      "env:x,y,z;[x,y]=z;...  enveloping algebra from structure constants",
      "free:a,b,...     tensor algebra on primitive generators",
  };
  for (const auto& p : lie_preset_names()) out.push_back("  preset " + p);
  return out;
}

int abelianization_vars(const HopfPresentation& H) {
  const Presentation& pres = H.presentation();
  require_confluent(pres);
  const std::size_t n = pres.alphabet().size();
  auto commutative = [n](const Word& word) {
    Exponents e(n, 0);
    for (Letter l : word) ++e[l];
    return e;
  };
  std::vector<CommPoly> gens;
  for (const auto& r : pres.rules()) {
    CommPoly p;
    p[commutative(r.lhs)] += 1;
    for (const auto& [word, c] : r.rhs) p[commutative(word)] -= c;
    std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
    if (!p.empty()) gens.push_back(std::move(p));
  }
  return krull_dimension(groebner_basis(std::move(gens), n), n);
}

namespace {

using Matrix = std::vector<std::vector<Scalar>>;
/// Ascending coefficients.
using UPoly = std::vector<Scalar>;

void trim_poly(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly derivative(const UPoly& p) {
  UPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
  trim_poly(out);
  return out;
}

UPoly remainder(UPoly a, const UPoly& b) {
  trim_poly(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Scalar c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim_poly(a);
  }
  return a;
}

UPoly quotient(UPoly a, const UPoly& b) {
  trim_poly(a);
  if (a.size() < b.size()) return {};
  UPoly q(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size() && !a.empty()) {
    const Scalar c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim_poly(a);
  }
  return q;
}

UPoly gcd(UPoly a, UPoly b) {
  trim_poly(a);
  trim_poly(b);
  while (!b.empty()) {
    UPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

UPoly ascending(const CharPoly& c) { return UPoly(c.rbegin(), c.rend()); }

Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<Scalar>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<Scalar>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

/// p(M) by Horner's rule.
Matrix evaluate(const UPoly& p, const Matrix& m) {
  const std::size_t n = m.size();
  Matrix acc(n, std::vector<Scalar>(n, 0));
  for (std::size_t d = p.size(); d-- > 0;) {
    acc = multiply(acc, m);
    for (std::size_t i = 0; i < n; ++i) acc[i][i] += p[d];
  }
  return acc;
}

std::size_t matrix_rank(const Matrix& m) {
  std::vector<SparseVec> rows;
  for (const auto& r : m) {
    std::vector<SparseVec::Entry> e;
    for (std::size_t j = 0; j < r.size(); ++j) e.emplace_back(j, r[j]);
    rows.push_back(SparseVec::from_entries(std::move(e)));
  }
  return rank(std::move(rows), Exec::serial);
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

Scalar evaluate(const UPoly& p, const Scalar& x) {
  Scalar acc = 0;
  for (std::size_t d = p.size(); d-- > 0;) acc = acc * x + p[d];
  return acc;
}

/// Distinct rational roots of p with multiplicities.
std::vector<std::pair<Scalar, int>> rational_roots(UPoly p) {
  trim_poly(p);
  std::vector<std::pair<Scalar, int>> out;
  if (p.size() <= 1) return out;
  int zero_mult = 0;
  while (p.size() > 1 && p.front() == 0) {
    p.erase(p.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.emplace_back(Scalar(0), zero_mult);
  if (p.size() <= 1) return out;
  mpz_class den = 1;
  for (const auto& c : p) den = lcm(den, mpz_class(c.get_den()));
  std::vector<mpz_class> ints;
  for (const auto& c : p) ints.push_back(mpz_class(c * den));
  std::vector<Scalar> candidates;
  for (const auto& a : divisors(ints.front())) {
    for (const auto& b : divisors(ints.back())) {
      Scalar r(a, b);
      r.canonicalize();
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& r : candidates) {
    int mult = 0;
    while (p.size() > 1 && evaluate(p, r) == 0) {
      p = quotient(p, UPoly{-r, 1});
      ++mult;
    }
    if (mult > 0) out.emplace_back(r, mult);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CharPoly characteristic_polynomial(const std::vector<std::vector<Scalar>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw ValidationError("characteristic polynomial needs a square matrix");
  }
  // Faddeev-LeVerrier: M_1 = I, c_k = -tr(A M_k)/k, M_{k+1} = A M_k + c_k I.
  CharPoly c{1};
  Matrix mk = identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const Matrix am = multiply(m, mk);
    Scalar tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    const Scalar ck = -tr / static_cast<long>(k);
    c.push_back(ck);
    mk = am;
    for (std::size_t i = 0; i < n; ++i) mk[i][i] += ck;
  }
  return c;
}

AdProfile ad_profile(const HopfPresentation& H, const NCPoly& z, int max_weight) {
  const Truncation T(H, max_weight);
  const SubspaceBasis P = primitives(T);
  const Presentation& pres = H.presentation();
  AdProfile out;
  out.primitive_basis = P.elements();
  const std::size_t n = P.dim();
  const SpanSolver solver(P.rows, Exec::serial);
  out.matrix.assign(n, std::vector<Scalar>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    const NCPoly& p = out.primitive_basis[j];
    const NCPoly bracket = multiply_reduced(z, p, pres) - multiply_reduced(p, z, pres);
    std::optional<std::vector<Scalar>> coeffs;
    try {
      coeffs = solver.solve(T.coordinates(bracket));
    } catch (const ValidationError&) {
      coeffs.reset();
    }
    if (!coeffs) {
      throw ValidationError("ad(" + format_element(z, H.alphabet()) + ") does not preserve the primitives: [z, " +
                            format_element(p, H.alphabet()) + "] = " + format_element(bracket, H.alphabet()));
    }
    for (std::size_t i = 0; i < n; ++i) out.matrix[i][j] = (*coeffs)[i];
  }
  out.charpoly = characteristic_polynomial(out.matrix);
  const UPoly chi = ascending(out.charpoly);
  for (const auto& [mu, mult] : rational_roots(chi)) {
    Matrix shifted = out.matrix;
    for (std::size_t i = 0; i < n; ++i) shifted[i][i] -= mu;
    out.rational_eigenvalues.push_back({mu, mult, static_cast<int>(n - matrix_rank(shifted))});
  }
  const UPoly g = gcd(chi, derivative(chi));
  const UPoly squarefree = g.empty() ? chi : quotient(chi, g);
  out.eigenvector_count = static_cast<int>(n - matrix_rank(evaluate(squarefree, out.matrix)));
  return out;
}

bool projectively_equivalent(const CharPoly& a, const CharPoly& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size() - 1;
  std::vector<std::size_t> nonzero;
  for (std::size_t k = 1; k <= n; ++k) {
    if ((a[k] == 0) != (b[k] == 0)) return false;
    if (a[k] != 0) nonzero.push_back(k);
  }
  if (nonzero.empty()) return true;
  // Scaling the roots by s multiplies c_k by s^k.
  if (a[1] != 0) {
    const Scalar s = a[1] / b[1];
    Scalar power = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      power *= s;
      if (a[k] != power * b[k]) return false;
    }
    return true;
  }
  auto pow = [](const Scalar& x, std::size_t e) {
    Scalar r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= x;
    return r;
  };
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    for (std::size_t j = i + 1; j < nonzero.size(); ++j) {
      const std::size_t k = nonzero[i], l = nonzero[j];
      const Scalar rk = a[k] / b[k], rl = a[l] / b[l];
      if (pow(rk, l) != pow(rl, k)) return false;
    }
  }
  return true;
}

std::string charpoly_text(const CharPoly& c) {
  std::ostringstream os;
  const std::size_t n = c.size() - 1;
  bool first = true;
  for (std::size_t k = 0; k <= n; ++k) {
    if (c[k] == 0) continue;
    const std::size_t d = n - k;
    Scalar coeff = c[k];
    if (!first) {
      os << (coeff < 0 ? " - " : " + ");
      coeff = abs(coeff);
    } else if (coeff < 0) {
      os << "-";
      coeff = -coeff;
    }
    if (coeff != 1 || d == 0) os << coeff.get_str() << (d > 0 ? "*" : "");
    if (d > 0) os << "t" << (d > 1 ? "^" + std::to_string(d) : "");
    first = false;
  }
  return first ? "0" : os.str();
}

InvariantProfile invariant_profile(const HopfPresentation& H, int max_weight) {
  InvariantProfile prof;
  const Truncation T(H, max_weight);
  const SubspaceBasis P = primitives(T);
  const Presentation& pres = H.presentation();
  prof.dim_P = P.dim();
  prof.gk = growth(pres, Grading::length, 8).growth_degree;
  prof.abelianization_vars = abelianization_vars(H);
  const auto basis = P.elements();
  std::vector<SparseVec> brackets;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      brackets.push_back(
          T.coordinates(multiply_reduced(basis[i], basis[j], pres) - multiply_reduced(basis[j], basis[i], pres)));
    }
  }
  prof.primitive_derived_dim = rank(std::move(brackets), Exec::serial);
  if (prof.dim_P != 2) {
    prof.ad_note = "ad-data needs dim P = 2";
  } else if (prof.primitive_derived_dim != 0) {
    prof.ad_note = "ad-data needs abelian P";
  } else {
    const auto fz = find_z(H, basis[0], basis[1], max_weight);
    if (!fz.z) {
      prof.ad_note = "no z with reduced delta z = x@y in F_" + std::to_string(max_weight);
    } else {
      prof.z = fz.z;
      prof.ad = ad_profile(H, *fz.z, max_weight);
    }
  }
  return prof;
}

Distinction distinguish(const InvariantProfile& a, const InvariantProfile& b) {
  auto cert = [](std::string what, const std::string& x, const std::string& y) {
    return Distinction{true, what + ": " + x + " vs " + y};
  };
  if (a.dim_P != b.dim_P) return cert("dim P", std::to_string(a.dim_P), std::to_string(b.dim_P));
  const bool gk_known = a.gk.kind != GrowthDegree::Kind::inconclusive && b.gk.kind != GrowthDegree::Kind::inconclusive;
  if (gk_known && a.gk != b.gk) return cert("GK dimension", to_string(a.gk), to_string(b.gk));
  if (a.abelianization_vars != b.abelianization_vars) {
    return cert("abelianization variables", std::to_string(a.abelianization_vars),
                std::to_string(b.abelianization_vars));
  }
  if (a.primitive_derived_dim != b.primitive_derived_dim) {
    return cert("dim [P,P]", std::to_string(a.primitive_derived_dim), std::to_string(b.primitive_derived_dim));
  }
  if (a.ad && b.ad) {
    if (!projectively_equivalent(a.ad->charpoly, b.ad->charpoly)) {
      return cert("ad(z) eigenvalues up to scaling", charpoly_text(a.ad->charpoly), charpoly_text(b.ad->charpoly));
    }
    if (a.ad->eigenvector_count != b.ad->eigenvector_count) {
      return cert("ad(z) independent eigenvectors", std::to_string(a.ad->eigenvector_count),
                  std::to_string(b.ad->eigenvector_count));
    }
  }
  return Distinction{false, ""};
}

Distinction distinguish(const HopfPresentation& a, const HopfPresentation& b) {
  return distinguish(invariant_profile(a), invariant_profile(b));
}

namespace {

SolvableCheck solvable_check(const LieAlgebra& lie, GeneratorImages images, const HopfPresentation& target,
                             int max_weight) {
  SolvableCheck out;
  out.names = lie.names();
  out.substitution = images;
  const Presentation& pres = target.presentation();
  const Alphabet& ta = target.alphabet();
  out.brackets_match = true;
  const std::size_t n = lie.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const NCPoly actual =
          multiply_reduced(images[i], images[j], pres) - multiply_reduced(images[j], images[i], pres);
      NCPoly expected;
      std::string rhs;
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = lie.bracket(i, j)[k];
        if (c == 0) continue;
        expected.add_scaled(images[k], c);
        rhs += (rhs.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        if (abs(c) != 1) rhs += to_string(Scalar(abs(c))) + "*";
        rhs += lie.names()[k];
      }
      expected = reduce(expected, pres);
      const bool ok = actual == expected;
      out.brackets_match = out.brackets_match && ok;
      out.brackets.push_back("[" + lie.names()[i] + ", " + lie.names()[j] + "] = " + (rhs.empty() ? "0" : rhs) +
                             (ok ? "" : "  (reduces to " + format_element(actual, ta) + ")"));
    }
  }
  out.lie_is_solvable = lie.is_solvable();
  out.morphism = check_algebra_morphism(images, build_enveloping(lie).presentation(), pres, max_weight);
  return out;
}

}  // namespace

SolvableCheck solvable_presentation_of_B(const Scalar& lambda, int max_weight) {
  // Basis X, Y, Z' with [X,Y] = Y, [X,Z'] = Z' - lambda Y, [Y,Z'] = 0.
  const LieAlgebra lie({"X", "Y", "Zp"},
                       {{{0, 1}, LieAlgebra::Vector{0, 1, 0}}, {{0, 2}, LieAlgebra::Vector{0, -lambda, 1}}});
  NCPoly zp = generator(kZ);
  zp.add(w({kX, kY}), Scalar(-1, 2));
  return solvable_check(lie, {generator(kX), generator(kY), zp}, build_B(lambda), max_weight);
}

SolvableCheck solvable_presentation_of_A(const Scalar& l1, const Scalar& l2, const Scalar& alpha, int max_weight) {
  const HopfPresentation A = build_A(l1, l2, alpha);
  const LieAlgebra lie({"X", "Y", "Z"},
                       {{{0, 2}, LieAlgebra::Vector{-l1, -alpha, 0}}, {{1, 2}, LieAlgebra::Vector{0, -l2, 0}}});
  return solvable_check(lie, {generator(kX), generator(kY), generator(kZ)}, A, max_weight);
}

}  // namespace hopfkit

#include "hopfkit/presentation_file.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "hopfkit/error.hpp"
#include "hopfkit/expression.hpp"

namespace hopfkit {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

struct Assignment {
  std::size_t line = 0;
  std::string lhs;
  std::string rhs;
};

Assignment split_assignment(const std::string& text, std::size_t line) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw ValidationError("line " + std::to_string(line) + ": expected 'lhs = rhs'");
  Assignment a{line, trim(text.substr(0, eq)), trim(text.substr(eq + 1))};
  if (a.lhs.empty() || a.rhs.empty()) {
    throw ValidationError("line " + std::to_string(line) + ": empty side in assignment");
  }
  return a;
}

std::string at_line(std::size_t line, const std::string& message) {
  return "line " + std::to_string(line) + ": " + message;
}

Letter generator_named(const Alphabet& a, const Assignment& as) {
  auto l = a.find(as.lhs);
  if (!l) throw ValidationError(at_line(as.line, "unknown generator '" + as.lhs + "'"));
  return *l;
}

}  // namespace

LoadedPresentation parse_presentation_file(std::string_view text) {
  static const std::vector<std::string> kSections{"generators", "relations", "delta", "epsilon", "antipode"};
  std::vector<Generator> gens;
  std::map<std::string, std::vector<Assignment>> sections;
  std::string current;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ValidationError(at_line(line_no, "malformed section header"));
      current = trim(line.substr(1, line.size() - 2));
      if (std::find(kSections.begin(), kSections.end(), current) == kSections.end()) {
        throw ValidationError(at_line(line_no, "unknown section [" + current + "]"));
      }
      if (sections.contains(current)) throw ValidationError(at_line(line_no, "repeated section [" + current + "]"));
      sections[current];
      continue;
    }
    if (current.empty()) throw ValidationError(at_line(line_no, "content before the first section"));
    if (current == "generators") {
      std::istringstream fields(line);
      std::string name, extra;
      int weight = 1;
      fields >> name;
      if (fields >> weight) {
        if (fields >> extra) throw ValidationError(at_line(line_no, "expected 'name weight'"));
      } else if (!fields.eof()) {
        throw ValidationError(at_line(line_no, "generator weight must be an integer"));
      }
      if (weight < 1) throw ValidationError(at_line(line_no, "generator weight must be positive"));
      gens.push_back({name, weight});
    } else {
      sections[current].push_back(split_assignment(line, line_no));
    }
  }
  if (!sections.contains("generators") || gens.empty()) throw ValidationError("missing [generators] section");

  const Alphabet alphabet(gens);
  std::vector<RewriteRule> rules;
  for (const auto& as : sections["relations"]) {
    try {
      const NCPoly lhs = parse_element(as.lhs, alphabet);
      if (lhs.size() != 1 || lhs.begin()->second != 1) {
        throw ValidationError("relation left side must be a single monomial");
      }
      rules.push_back({lhs.begin()->first, parse_element(as.rhs, alphabet)});
    } catch (const ValidationError& e) {
      throw ValidationError(at_line(as.line, e.what()));
    }
  }
  LoadedPresentation out{Presentation(alphabet, std::move(rules)), std::nullopt};

  const bool any_coalgebra = sections.contains("delta") || sections.contains("epsilon") || sections.contains("antipode");
  if (!any_coalgebra) return out;
  const std::size_t n = alphabet.size();
  std::vector<std::optional<TensorPoly>> delta(n);
  std::vector<std::optional<Scalar>> epsilon(n);
  std::vector<std::optional<NCPoly>> antipode(n);
  auto fill = [&](const std::string& section, auto& slots, auto&& parse) {
    for (const auto& as : sections[section]) {
      const Letter g = generator_named(alphabet, as);
      if (slots[g]) throw ValidationError(at_line(as.line, "repeated " + section + " entry for " + as.lhs));
      try {
        slots[g] = parse(as.rhs);
      } catch (const ValidationError& e) {
        throw ValidationError(at_line(as.line, e.what()));
      }
    }
    for (std::size_t g = 0; g < n; ++g) {
      if (!slots[g]) throw ValidationError("[" + section + "] has no entry for " + alphabet[static_cast<Letter>(g)].name);
    }
  };
  fill("delta", delta, [&](const std::string& s) { return parse_tensor(s, alphabet); });
  fill("epsilon", epsilon, [&](const std::string& s) {
    const NCPoly p = parse_element(s, alphabet);
    if (p.size() > 1 || (p.size() == 1 && !p.begin()->first.empty())) {
      throw ValidationError("counit value must be a rational constant");
    }
    return p.coefficient(Word{});
  });
  fill("antipode", antipode, [&](const std::string& s) { return parse_element(s, alphabet); });
  std::vector<TensorPoly> d;
  std::vector<Scalar> e;
  std::vector<NCPoly> a;
  for (std::size_t g = 0; g < n; ++g) {
    d.push_back(*delta[g]);
    e.push_back(*epsilon[g]);
    a.push_back(*antipode[g]);
  }
  out.hopf.emplace(out.presentation, std::move(d), std::move(e), std::move(a));
  return out;
}

LoadedPresentation load_presentation_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read presentation file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation_file(buf.str());
}

std::string emit_presentation_file(const Presentation& pres) {
  const Alphabet& a = pres.alphabet();
  std::ostringstream os;
  os << "[generators]\n";
  for (const auto& g : a.generators()) os << g.name << ' ' << g.weight << '\n';
  os << "\n[relations]\n";
  for (const auto& r : pres.rules()) os << format_word(r.lhs, a) << " = " << format_element(r.rhs, a) << '\n';
  return os.str();
}

std::string emit_presentation_file(const HopfPresentation& H) {
  const Alphabet& a = H.alphabet();
  std::ostringstream os;
  os << emit_presentation_file(H.presentation());
  os << "\n[delta]\n";
  for (Letter g = 0; g < a.size(); ++g) os << a[g].name << " = " << format_tensor(H.delta_of(g), a) << '\n';
  os << "\n[epsilon]\n";
  for (Letter g = 0; g < a.size(); ++g) os << a[g].name << " = " << to_string(H.epsilon_of(g)) << '\n';
  os << "\n[antipode]\n";
  for (Letter g = 0; g < a.size(); ++g) os << a[g].name << " = " << format_element(H.antipode_of(g), a) << '\n';
  return os.str();
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t digest(const Presentation& pres) { return fnv1a(emit_presentation_file(pres)); }
std::uint64_t digest(const HopfPresentation& H) { return fnv1a(emit_presentation_file(H)); }

std::string digest_hex(std::uint64_t d) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(d));
  return buf;
}

}  // namespace hopfkit

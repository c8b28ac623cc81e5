#include "hopfkit/freehopf.hpp"

#include <algorithm>
#include <set>

#include "hopfkit/error.hpp"

namespace hopfkit {

namespace {

constexpr const char* kUnit = "1";

using Triple = std::tuple<std::string, std::string, std::string>;

}  // namespace

PointedCoalgebraData::PointedCoalgebraData(std::vector<std::string> grouplikes, std::vector<Generator> extras,
                                           std::map<std::string, std::vector<CoalgebraTerm>> delta,
                                           std::map<std::string, Scalar> counit)
    : grouplikes_(std::move(grouplikes)), extras_(std::move(extras)), delta_(std::move(delta)), counit_(std::move(counit)) {
  std::set<std::string> names{kUnit};
  for (const auto& g : grouplikes_) {
    if (g.empty() || !names.insert(g).second) throw ValidationError("duplicate or empty basis name '" + g + "'");
  }
  for (const auto& e : extras_) {
    if (e.name.empty() || !names.insert(e.name).second) {
      throw ValidationError("duplicate or empty basis name '" + e.name + "'");
    }
    if (e.weight < 1) throw ValidationError("extra basis element " + e.name + " needs weight >= 1");
    if (!delta_.contains(e.name)) throw ValidationError("missing comultiplication of " + e.name);
  }
  for (const auto& [name, terms] : delta_) {
    if (!names.contains(name) || name == kUnit ||
        std::find(grouplikes_.begin(), grouplikes_.end(), name) != grouplikes_.end()) {
      throw ValidationError("comultiplication given for '" + name + "', which is not an extra basis element");
    }
    for (const auto& t : terms) {
      if (!names.contains(t.left) || !names.contains(t.right)) {
        throw ValidationError("comultiplication of " + name + " uses an unknown basis element");
      }
    }
  }
  for (const auto& [name, c] : counit_) {
    if (!names.contains(name)) throw ValidationError("counit given for unknown basis element '" + name + "'");
    const bool grouplike =
        name == kUnit || std::find(grouplikes_.begin(), grouplikes_.end(), name) != grouplikes_.end();
    if (grouplike && c != 1) throw ValidationError("group-like " + name + " must have counit 1");
  }

  auto delta_of = [&](const std::string& b) {
    std::map<std::pair<std::string, std::string>, Scalar> out;
    auto it = delta_.find(b);
    if (it == delta_.end()) {
      out[{b, b}] = 1;
    } else {
      for (const auto& t : it->second) out[{t.left, t.right}] += t.coeff;
    }
    return out;
  };
  auto eps = [&](const std::string& b) -> Scalar {
    auto it = counit_.find(b);
    if (it != counit_.end()) return it->second;
    return delta_.contains(b) ? Scalar(0) : Scalar(1);
  };
  auto prune = [](auto& m) {
    for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
  };

  for (const auto& e : extras_) {
    const auto d = delta_of(e.name);
    std::map<Triple, Scalar> left, right;
    std::map<std::string, Scalar> counit_left, counit_right;
    for (const auto& [pair, c] : d) {
      for (const auto& [inner, c2] : delta_of(pair.first)) left[{inner.first, inner.second, pair.second}] += c * c2;
      for (const auto& [inner, c2] : delta_of(pair.second)) right[{pair.first, inner.first, inner.second}] += c * c2;
      counit_left[pair.second] += eps(pair.first) * c;
      counit_right[pair.first] += c * eps(pair.second);
    }
    prune(left);
    prune(right);
    prune(counit_left);
    prune(counit_right);
    if (left != right) throw ValidationError("comultiplication is not coassociative on " + e.name);
    const std::map<std::string, Scalar> identity{{e.name, Scalar(1)}};
    if (counit_left != identity || counit_right != identity) {
      throw ValidationError("counit axiom fails on " + e.name);
    }
  }
}

PointedCoalgebraData PointedCoalgebraData::group_algebra(std::vector<std::string> grouplikes) {
  return PointedCoalgebraData(std::move(grouplikes), {}, {}, {});
}

PointedCoalgebraData PointedCoalgebraData::primitive_extras(std::vector<Generator> extras) {
  std::map<std::string, std::vector<CoalgebraTerm>> delta;
  std::map<std::string, Scalar> counit;
  for (const auto& e : extras) {
    delta[e.name] = {{Scalar(1), kUnit, e.name}, {Scalar(1), e.name, kUnit}};
    counit[e.name] = 0;
  }
  return PointedCoalgebraData({}, std::move(extras), std::move(delta), std::move(counit));
}

ReducedWordLanguage reduced_word_language(const PointedCoalgebraData& data) {
  ReducedWordLanguage lang;
  const std::size_t g = data.grouplikes().size();
  lang.grouplike_count = g;
  for (const auto& name : data.grouplikes()) {
    lang.letter_names.push_back(name);
    lang.letter_weights.push_back(0);
  }
  for (const auto& name : data.grouplikes()) {
    lang.letter_names.push_back(name + "^-1");
    lang.letter_weights.push_back(0);
  }
  for (const auto& e : data.extras()) {
    lang.letter_names.push_back(e.name);
    lang.letter_weights.push_back(e.weight);
  }
  for (std::size_t i = 0; i < g; ++i) {
    const auto a = static_cast<Letter>(i), b = static_cast<Letter>(i + g);
    lang.forbidden.push_back(Word{a, b});
    lang.forbidden.push_back(Word{b, a});
  }
  return lang;
}

ReducedWordCount reduced_words(const PointedCoalgebraData& data, int length, bool materialize) {
  if (length < 0) throw ValidationError("length must be non-negative");
  const ReducedWordLanguage lang = reduced_word_language(data);
  const std::size_t n = lang.letters(), g = lang.grouplike_count;
  auto allowed = [&](std::size_t prev, std::size_t next) {
    return !(prev < 2 * g && next < 2 * g && prev != next && prev % g == next % g);
  };
  ReducedWordCount out;
  if (length == 0) {
    out.count = 1;
    if (materialize) out.words.push_back(Word{});
    return out;
  }
  // ends[l] = number of reduced words of the current length ending in l.
  std::vector<mpz_class> ends(n, 1);
  for (int step = 1; step < length; ++step) {
    std::vector<mpz_class> next(n, 0);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t l = 0; l < n; ++l) {
        if (allowed(p, l)) next[l] += ends[p];
      }
    }
    ends = std::move(next);
  }
  out.count = 0;
  for (const auto& c : ends) out.count += c;
  if (materialize) {
    std::vector<std::vector<Letter>> current{{}};
    for (int step = 0; step < length; ++step) {
      std::vector<std::vector<Letter>> next;
      for (const auto& w : current) {
        for (std::size_t l = 0; l < n; ++l) {
          if (w.empty() || allowed(w.back(), l)) {
            next.push_back(w);
            next.back().push_back(static_cast<Letter>(l));
          }
        }
      }
      current = std::move(next);
    }
    for (auto& w : current) out.words.emplace_back(std::move(w));
  }
  return out;
}

GradedDim graded_dims(const PointedCoalgebraData& data, int weight) {
  if (weight < 0) throw ValidationError("weight must be non-negative");
  if (!data.grouplikes().empty()) return {true, 0};
  // Words over the extras only; count compositions by weight.
  std::vector<mpz_class> dp(static_cast<std::size_t>(weight) + 1, 0);
  dp[0] = 1;
  for (int w = 1; w <= weight; ++w) {
    for (const auto& e : data.extras()) {
      if (e.weight <= w) dp[static_cast<std::size_t>(w)] += dp[static_cast<std::size_t>(w - e.weight)];
    }
  }
  return {false, dp.back()};
}

GrowthClass growth_class(const PointedCoalgebraData& data) {
  const ReducedWordLanguage lang = reduced_word_language(data);
  return analyze_growth(build_dfa(lang.letters(), lang.forbidden));
}

}  // namespace hopfkit

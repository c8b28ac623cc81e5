#include "hopfkit/automaton.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "hopfkit/error.hpp"

namespace hopfkit {

NormalWordDFA build_dfa(std::size_t letters, const std::vector<Word>& forbidden) {
  // Trie with goto completion and failure links.
  std::vector<std::vector<int>> go(1, std::vector<int>(letters, -1));
  std::vector<char> terminal(1, 0);
  for (const Word& w : forbidden) {
    if (w.empty()) throw ValidationError("empty forbidden factor");
    int s = 0;
    for (Letter l : w) {
      if (l >= letters) throw ValidationError("letter index out of range");
      if (go[s][l] < 0) {
        go[s][l] = static_cast<int>(go.size());
        go.emplace_back(letters, -1);
        terminal.push_back(0);
      }
      s = go[s][l];
    }
    terminal[s] = 1;
  }
  std::vector<int> fail(go.size(), 0);
  std::queue<int> queue;
  for (std::size_t l = 0; l < letters; ++l) {
    if (go[0][l] < 0) {
      go[0][l] = 0;
    } else {
      fail[go[0][l]] = 0;
      queue.push(go[0][l]);
    }
  }
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop();
    if (terminal[fail[s]]) terminal[s] = 1;
    for (std::size_t l = 0; l < letters; ++l) {
      const int t = go[s][l];
      if (t < 0) {
        go[s][l] = go[fail[s]][l];
      } else {
        fail[t] = go[fail[s]][l];
        queue.push(t);
      }
    }
  }

  NormalWordDFA dfa;
  dfa.letters = letters;
  std::vector<int> renumber(go.size(), NormalWordDFA::kDead);
  int count = 0;
  for (std::size_t s = 0; s < go.size(); ++s) {
    if (!terminal[s]) renumber[s] = count++;
  }
  dfa.next.assign(static_cast<std::size_t>(count), std::vector<int>(letters, NormalWordDFA::kDead));
  for (std::size_t s = 0; s < go.size(); ++s) {
    if (terminal[s]) continue;
    for (std::size_t l = 0; l < letters; ++l) {
      dfa.next[static_cast<std::size_t>(renumber[s])][l] = renumber[static_cast<std::size_t>(go[s][l])];
    }
  }
  dfa.start = 0;
  return dfa;
}

NormalWordDFA build_dfa(const Presentation& pres) {
  std::vector<Word> lhs;
  lhs.reserve(pres.rules().size());
  for (const auto& r : pres.rules()) lhs.push_back(r.lhs);
  return build_dfa(pres.alphabet().size(), lhs);
}

bool accepts(const NormalWordDFA& dfa, const Word& w) {
  int s = dfa.start;
  for (Letter l : w) {
    if (l >= dfa.letters) return false;
    s = dfa.next[static_cast<std::size_t>(s)][l];
    if (s == NormalWordDFA::kDead) return false;
  }
  return true;
}

std::vector<mpz_class> count_by_length(const NormalWordDFA& dfa, int max_length) {
  std::vector<mpz_class> out;
  if (max_length < 0) return out;
  std::vector<mpz_class> ways(dfa.states(), 0);
  ways[static_cast<std::size_t>(dfa.start)] = 1;
  for (int n = 0;; ++n) {
    mpz_class total = 0;
    for (const auto& w : ways) total += w;
    out.push_back(total);
    if (n == max_length) break;
    std::vector<mpz_class> next(dfa.states(), 0);
    for (std::size_t s = 0; s < dfa.states(); ++s) {
      if (ways[s] == 0) continue;
      for (int t : dfa.next[s]) {
        if (t != NormalWordDFA::kDead) next[static_cast<std::size_t>(t)] += ways[s];
      }
    }
    ways = std::move(next);
  }
  return out;
}

GrowthClass analyze_growth(const NormalWordDFA& dfa) {
  const std::size_t n = dfa.states();
  std::vector<char> reachable(n, 0);
  {
    std::vector<int> stack{dfa.start};
    reachable[static_cast<std::size_t>(dfa.start)] = 1;
    while (!stack.empty()) {
      const int s = stack.back();
      stack.pop_back();
      for (int t : dfa.next[static_cast<std::size_t>(s)]) {
        if (t != NormalWordDFA::kDead && !reachable[static_cast<std::size_t>(t)]) {
          reachable[static_cast<std::size_t>(t)] = 1;
          stack.push_back(t);
        }
      }
    }
  }

  // Tarjan's algorithm; components come out in reverse topological order.
  std::vector<int> index(n, -1), low(n, 0), component(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int counter = 0, components = 0;
  std::function<void(int)> visit = [&](int v) {
    const auto vi = static_cast<std::size_t>(v);
    index[vi] = low[vi] = counter++;
    stack.push_back(v);
    on_stack[vi] = 1;
    for (int t : dfa.next[vi]) {
      if (t == NormalWordDFA::kDead) continue;
      const auto ti = static_cast<std::size_t>(t);
      if (index[ti] < 0) {
        visit(t);
        low[vi] = std::min(low[vi], low[ti]);
      } else if (on_stack[ti]) {
        low[vi] = std::min(low[vi], index[ti]);
      }
    }
    if (low[vi] == index[vi]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[static_cast<std::size_t>(w)] = 0;
        component[static_cast<std::size_t>(w)] = components;
      } while (w != v);
      ++components;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    if (reachable[s] && index[s] < 0) visit(static_cast<int>(s));
  }

  const auto nc = static_cast<std::size_t>(components);
  std::vector<int> nodes(nc, 0), internal(nc, 0);
  std::vector<std::vector<int>> successors(nc);
  for (std::size_t s = 0; s < n; ++s) {
    if (!reachable[s]) continue;
    const auto c = static_cast<std::size_t>(component[s]);
    ++nodes[c];
    for (int t : dfa.next[s]) {
      if (t == NormalWordDFA::kDead) continue;
      const int ct = component[static_cast<std::size_t>(t)];
      if (static_cast<std::size_t>(ct) == c) {
        ++internal[c];
      } else {
        successors[c].push_back(ct);
      }
    }
  }
  GrowthClass out;
  for (std::size_t c = 0; c < nc; ++c) {
    if (internal[c] > nodes[c]) {
      out.exponential = true;
      return out;
    }
  }
  // Successor components have smaller indices, so ascending order is a
  // valid evaluation order for the longest-path recurrence.
  std::vector<int> best(nc, 0);
  for (std::size_t c = 0; c < nc; ++c) {
    int tail = 0;
    for (int d : successors[c]) tail = std::max(tail, best[static_cast<std::size_t>(d)]);
    best[c] = tail + (internal[c] > 0 ? 1 : 0);
  }
  out.degree = best[static_cast<std::size_t>(component[static_cast<std::size_t>(dfa.start)])];
  return out;
}

}  // namespace hopfkit

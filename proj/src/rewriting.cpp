#include "mppa/error.hpp"
#include "mppa/presentation.hpp"

#include <algorithm>

namespace mppa {

bool Algebra::match_at(const Word& w, std::size_t pos, const Word& lhs) const {
  if (pos + lhs.size() > w.size()) return false;
  for (std::size_t k = 0; k < lhs.size(); ++k)
    if (w.letters[pos + k] != lhs.letters[k]) return false;
  return true;
}

int Algebra::find_rule_at(const Word& w, std::size_t pos) const {
  for (int r : rules_by_first_[w.letters[pos]])
    if (match_at(w, pos, rules_[r].lhs)) return r;
  return -1;
}

bool Algebra::is_normal(const Word& w) const {
  for (std::size_t p = 0; p < w.size(); ++p)
    if (find_rule_at(w, p) >= 0) return false;
  return true;
}

Element Algebra::rewrite_once_at(const Word& w, int rule, std::size_t pos) const {
  const Rule& r = rules_.at(rule);
  if (!match_at(w, pos, r.lhs)) throw Error("rule does not match at the given position");
  Element out;
  for (const auto& [rw, rc] : r.rhs.terms) {
    Word nw{w.tgt, w.src, {}};
    nw.letters.reserve(w.size() - r.lhs.size() + rw.size());
    nw.letters.insert(nw.letters.end(), w.letters.begin(), w.letters.begin() + pos);
    nw.letters.insert(nw.letters.end(), rw.letters.begin(), rw.letters.end());
    nw.letters.insert(nw.letters.end(), w.letters.begin() + pos + r.lhs.size(), w.letters.end());
    out.add(nw, rc);
  }
  return out;
}

Element Algebra::nf(const Element& a) const { return nf_rounds(a, -1, nullptr); }

// Rewrites every term at its leftmost redex once per round, aggregating
// coefficients between rounds so cancellations happen early.
Element Algebra::nf_rounds(const Element& a, int rounds, bool* reduced) const {
  Element result;
  Element cur = a;
  long steps = 0;
  int round = 0;
  if (reduced) *reduced = true;
  while (!cur.is_zero()) {
    if (rounds >= 0 && round >= rounds) {
      result += cur;
      if (reduced) *reduced = false;
      break;
    }
    Element next;
    for (const auto& [w, c] : cur.terms) {
      int rule = -1;
      std::size_t pos = 0;
      for (; pos < w.size(); ++pos)
        if ((rule = find_rule_at(w, pos)) >= 0) break;
      if (rule < 0) {
        result.add(w, c);
        continue;
      }
      if (++steps > opts_.step_budget)
        throw BudgetExceeded("rewrite budget of " + std::to_string(opts_.step_budget) + " steps exceeded in " +
                             name());
      Element piece = rewrite_once_at(w, rule, pos);
      for (const auto& [nw, nc] : piece.terms) next.add(nw, c * nc);
    }
    cur = std::move(next);
    ++round;
  }
  return result;
}

std::vector<CriticalPair> Algebra::critical_pairs(int depth) const {
  std::vector<CriticalPair> out;
  auto composable = [&](const std::vector<int>& letters) {
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
      if (gen_src_[letters[i]] != gen_tgt_[letters[i + 1]]) return false;
    return true;
  };
  auto resolve = [&](CriticalPair cp, std::size_t pos_b) {
    cp.left = nf_rounds(rewrite_once_at(cp.overlap, cp.rule_a, 0), depth, nullptr);
    cp.right = nf_rounds(rewrite_once_at(cp.overlap, cp.rule_b, pos_b), depth, nullptr);
    cp.joinable = cp.left == cp.right;
    out.push_back(std::move(cp));
  };
  const int n = static_cast<int>(rules_.size());
  for (int i = 0; i < n; ++i) {
    const auto& A = rules_[i].lhs.letters;
    for (int j = 0; j < n; ++j) {
      const auto& B = rules_[j].lhs.letters;
      for (std::size_t k = 1; k < std::min(A.size(), B.size()); ++k) {
        if (!std::equal(A.end() - k, A.end(), B.begin())) continue;
        std::vector<int> letters(A);
        letters.insert(letters.end(), B.begin() + k, B.end());
        if (!composable(letters)) continue;
        CriticalPair cp;
        cp.rule_a = i;
        cp.rule_b = j;
        cp.overlap = make_word(letters);
        resolve(std::move(cp), A.size() - k);
      }
      if (i == j || B.size() > A.size()) continue;
      for (std::size_t p = 0; p + B.size() <= A.size(); ++p) {
        if (!std::equal(B.begin(), B.end(), A.begin() + p)) continue;
        CriticalPair cp;
        cp.rule_a = i;
        cp.rule_b = j;
        cp.overlap = rules_[i].lhs;
        resolve(std::move(cp), p);
      }
    }
  }
  return out;
}

}  // namespace mppa

#pragma once

// Branch-and-bound over 2-packings, i.e. independent sets of the square graph.
//
// Branching is include-first on the lowest remaining candidate, so leaves are
// visited in lexicographic order of their ascending member sequences and the
// first maximum found is the lexicographically smallest one. The bound is a
// greedy clique partition of the remaining candidates in the conflict graph
// (every clique holds at most one packing vertex), which never exceeds the
// plain remaining-candidate count.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "idim/error.hpp"
#include "idim/graph.hpp"

namespace idim::detail {

using Word = VertexSet::Word;

/// Flattened n x words matrix of closed radius-2 balls of `g`.
std::vector<Word> conflict_rows(const Graph& g);

struct NoConstraint {
  static constexpr bool kActive = false;
  void push(Vertex, const Word*) {}
  void pop() {}
  bool dead(const Word*, const Word*) const { return false; }
  bool accept(const Word*) const { return true; }
};

template <class Constraint = NoConstraint>
class PackingSearch {
 public:
  PackingSearch(std::size_t n, std::vector<Word> conflict, Constraint constraint = {})
      : n_(n),
        words_((n + 63) / 64),
        conflict_(std::move(conflict)),
        constraint_(std::move(constraint)),
        cand_stack_((n + 2) * words_, 0),
        chosen_(words_, 0) {}

  void enumerate_all(std::size_t cap) {
    enumerate_ = true;
    cap_ = cap;
  }

  void run() {
    Word* root = cand_stack_.data();
    for (std::size_t v = 0; v < n_; ++v) root[v / 64] |= Word{1} << (v % 64);
    expand(0);
    if (overflow_) throw WitnessCapExceeded(cap_);
  }

  /// -1 when no feasible leaf exists (cannot happen: the empty set is always
  /// reachable unless the constraint rejects it).
  std::ptrdiff_t best_size() const { return best_; }
  const std::vector<Word>& best_witness() const { return best_witness_; }
  const std::vector<std::vector<Word>>& all_witnesses() const { return all_; }
  std::size_t nodes() const { return nodes_; }

 private:
  bool empty(const Word* s) const {
    for (std::size_t i = 0; i < words_; ++i) {
      if (s[i] != 0) return false;
    }
    return true;
  }

  std::size_t lowest(const Word* s) const {
    for (std::size_t i = 0; i < words_; ++i) {
      if (s[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(s[i]));
    }
    return n_;
  }

  const Word* row(std::size_t v) const { return &conflict_[v * words_]; }

  // True iff a greedy clique partition of `cand` needs at least `need` cliques.
  bool bound_at_least(const Word* cand, std::ptrdiff_t need) {
    scratch_rem_.assign(cand, cand + words_);
    scratch_grow_.resize(words_);
    std::ptrdiff_t cliques = 0;
    Word* rem = scratch_rem_.data();
    Word* grow = scratch_grow_.data();
    while (!empty(rem)) {
      if (++cliques >= need) return true;
      std::size_t v = lowest(rem);
      rem[v / 64] &= ~(Word{1} << (v % 64));
      for (std::size_t i = 0; i < words_; ++i) grow[i] = rem[i] & row(v)[i];
      while (!empty(grow)) {
        const std::size_t w = lowest(grow);
        rem[w / 64] &= ~(Word{1} << (w % 64));
        for (std::size_t i = 0; i < words_; ++i) grow[i] &= row(w)[i];
        grow[w / 64] &= ~(Word{1} << (w % 64));
      }
    }
    return cliques >= need;
  }

  void leaf() {
    if (!constraint_.accept(chosen_.data())) return;
    const auto size = static_cast<std::ptrdiff_t>(depth_);
    if (size > best_) {
      best_ = size;
      best_witness_ = chosen_;
      if (enumerate_) {
        all_.clear();
        overflow_ = false;
      }
    }
    if (enumerate_ && size == best_) {
      if (all_.size() < cap_) {
        all_.push_back(chosen_);
      } else {
        overflow_ = true;
      }
    }
  }

  void expand(std::size_t level) {
    ++nodes_;
    Word* cand = &cand_stack_[level * words_];
    for (;;) {
      if constexpr (Constraint::kActive) {
        if (constraint_.dead(chosen_.data(), cand)) return;
      }
      if (empty(cand)) {
        leaf();
        return;
      }
      if (best_ >= 0) {
        const std::ptrdiff_t need =
            best_ - static_cast<std::ptrdiff_t>(depth_) + (enumerate_ ? 0 : 1);
        if (need > 0 && !bound_at_least(cand, need)) return;
      }
      const std::size_t v = lowest(cand);
      Word* next = &cand_stack_[(level + 1) * words_];
      for (std::size_t i = 0; i < words_; ++i) next[i] = cand[i] & ~row(v)[i];

      constraint_.push(static_cast<Vertex>(v), chosen_.data());
      chosen_[v / 64] |= Word{1} << (v % 64);
      ++depth_;
      expand(level + 1);
      --depth_;
      chosen_[v / 64] &= ~(Word{1} << (v % 64));
      constraint_.pop();

      cand[v / 64] &= ~(Word{1} << (v % 64));
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<Word> conflict_;
  Constraint constraint_;
  std::vector<Word> cand_stack_;
  std::vector<Word> chosen_;
  std::size_t depth_ = 0;

  bool enumerate_ = false;
  std::size_t cap_ = 0;
  bool overflow_ = false;

  std::ptrdiff_t best_ = -1;
  std::vector<Word> best_witness_;
  std::vector<std::vector<Word>> all_;
  std::size_t nodes_ = 0;

  std::vector<Word> scratch_rem_;
  std::vector<Word> scratch_grow_;
};

}  // namespace idim::detail

#include "idim/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "idim/error.hpp"

namespace idim {

namespace {

std::size_t word_count(std::size_t universe) {
  return (universe + VertexSet::kWordBits - 1) / VertexSet::kWordBits;
}

}  // namespace

VertexSet::const_iterator::const_iterator(const Word* words, std::size_t nwords, std::size_t index)
    : words_(words), nwords_(nwords) {
  seek(index);
}

void VertexSet::const_iterator::seek(std::size_t from) {
  std::size_t w = from / kWordBits;
  if (w >= nwords_) {
    pos_ = nwords_ * kWordBits;
    return;
  }
  Word cur = words_[w] & (~Word{0} << (from % kWordBits));
  while (cur == 0) {
    if (++w == nwords_) {
      pos_ = nwords_ * kWordBits;
      return;
    }
    cur = words_[w];
  }
  pos_ = w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
}

VertexSet::const_iterator& VertexSet::const_iterator::operator++() {
  seek(pos_ + 1);
  return *this;
}

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  s.trim();
  return s;
}

VertexSet VertexSet::from_words(std::size_t universe, std::span<const Word> words) {
  VertexSet s(universe);
  if (words.size() != s.words_.size()) throw Error("word count does not match universe");
  std::copy(words.begin(), words.end(), s.words_.begin());
  s.trim();
  return s;
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) throw Error("vertex out of range");
  words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) return;
  words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

void VertexSet::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

Vertex VertexSet::front() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<Vertex>(i * kWordBits + std::countr_zero(words_[i]));
  }
  return static_cast<Vertex>(universe_);
}

VertexSet VertexSet::complement() const {
  VertexSet s(*this);
  for (Word& w : s.words_) w = ~w;
  s.trim();
  return s;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~o.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & o.words_[i]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

std::vector<Vertex> VertexSet::to_vector() const { return {begin(), end()}; }

std::string VertexSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Vertex v : *this) {
    if (!first) out << ", ";
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

void VertexSet::check_same_universe(const VertexSet& o) const {
  if (o.universe_ != universe_) throw Error("vertex set universes differ");
}

void VertexSet::trim() noexcept {
  const std::size_t tail = universe_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

std::strong_ordering lex_compare(const VertexSet& a, const VertexSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  const auto ea = a.end();
  const auto eb = b.end();
  for (; ia != ea && ib != eb; ++ia, ++ib) {
    if (*ia != *ib) return *ia <=> *ib;
  }
  if (ia == ea && ib == eb) return std::strong_ordering::equal;
  return ia == ea ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace idim

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace idim {

using Vertex = std::uint32_t;

/// A subset of the vertex range [0, universe) stored as packed 64-bit words.
///
/// Iteration visits members in ascending order. Binary set operations require
/// both operands to share the same universe.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const Word* words, std::size_t nwords, std::size_t index);

    Vertex operator*() const { return static_cast<Vertex>(pos_); }
    const_iterator& operator++();
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

   private:
    void seek(std::size_t from);

    const Word* words_ = nullptr;
    std::size_t nwords_ = 0;
    std::size_t pos_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);
  /// Adopts packed words (bit v of word v/64); bits at or above universe are dropped.
  static VertexSet from_words(std::size_t universe, std::span<const Word> words);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept;

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear() noexcept;

  /// Smallest member, or universe() when empty.
  Vertex front() const noexcept;

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  VertexSet& operator^=(const VertexSet& o);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  const_iterator begin() const { return {words_.data(), words_.size(), 0}; }
  const_iterator end() const { return {words_.data(), words_.size(), words_.size() * kWordBits}; }

  std::vector<Vertex> to_vector() const;
  std::span<const Word> words() const noexcept { return words_; }

  /// "{0, 3, 4}"
  std::string to_string() const;

 private:
  void check_same_universe(const VertexSet& o) const;
  void trim() noexcept;

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

/// Lexicographic order on the ascending member sequences; the order used for
/// every canonical witness in the library.
std::strong_ordering lex_compare(const VertexSet& a, const VertexSet& b);

inline bool lex_less(const VertexSet& a, const VertexSet& b) {
  return lex_compare(a, b) == std::strong_ordering::less;
}

}  // namespace idim

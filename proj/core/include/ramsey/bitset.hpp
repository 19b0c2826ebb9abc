#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ramsey {

/// Dynamically sized bitset over vertex labels 0..size-1.
class Bitset {
public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  static Bitset full(int size) {
    Bitset b(size);
    for (int i = 0; i < size; ++i) b.set(i);
    return b;
  }

  int size() const { return size_; }

  bool test(int i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(int i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(int i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void assign(int i, bool value) {
    if (value)
      set(i);
    else
      reset(i);
  }

  int count() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  /// Lowest set index, or -1.
  int first() const { return next(0); }

  /// Lowest set index >= from, or -1.
  int next(int from) const {
    if (from >= size_) return -1;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w) return static_cast<int>(wi * kWordBits + std::countr_zero(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  int intersection_count(const Bitset& other) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
    return c;
  }

  bool intersects(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  /// this \ other
  Bitset& subtract(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(wi * kWordBits + b));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

private:
  int size_ = 0;
  std::vector<Word> words_;
};

}  // namespace ramsey

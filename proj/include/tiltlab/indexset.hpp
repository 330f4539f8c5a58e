#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "tiltlab/errors.hpp"

namespace tiltlab {

// A set of small nonnegative integers (census positions or vertices).
// Capacity 128 covers every simply-laced Dynkin census up to E8.
class IndexSet {
 public:
  static constexpr int kCapacity = 128;

  IndexSet() = default;
  IndexSet(std::initializer_list<int> members) {
    for (int m : members) insert(m);
  }
  template <typename Range>
  static IndexSet of(const Range& members) {
    IndexSet s;
    for (int m : members) s.insert(m);
    return s;
  }
  static IndexSet range(int n) {
    IndexSet s;
    for (int i = 0; i < n; ++i) s.insert(i);
    return s;
  }

  void insert(int i) {
    check(i);
    words_[i >> 6] |= bit(i);
  }
  void erase(int i) {
    check(i);
    words_[i >> 6] &= ~bit(i);
  }
  bool contains(int i) const noexcept {
    return i >= 0 && i < kCapacity && (words_[i >> 6] & bit(i)) != 0;
  }
  int size() const noexcept { return std::popcount(words_[0]) + std::popcount(words_[1]); }
  bool empty() const noexcept { return (words_[0] | words_[1]) == 0; }

  bool is_subset_of(const IndexSet& o) const noexcept {
    return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
  }
  bool intersects(const IndexSet& o) const noexcept {
    return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
  }

  friend IndexSet operator|(IndexSet a, const IndexSet& b) noexcept {
    a.words_[0] |= b.words_[0];
    a.words_[1] |= b.words_[1];
    return a;
  }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) noexcept {
    a.words_[0] &= b.words_[0];
    a.words_[1] &= b.words_[1];
    return a;
  }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) noexcept {
    a.words_[0] &= ~b.words_[0];
    a.words_[1] &= ~b.words_[1];
    return a;
  }
  IndexSet with(int i) const {
    IndexSet s = *this;
    s.insert(i);
    return s;
  }
  IndexSet without(int i) const {
    IndexSet s = *this;
    s.erase(i);
    return s;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int w = 0; w < 2; ++w) {
      auto bits = words_[w];
      while (bits != 0) {
        f(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }
  int min() const noexcept {
    if (words_[0] != 0) return std::countr_zero(words_[0]);
    if (words_[1] != 0) return 64 + std::countr_zero(words_[1]);
    return -1;
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  static std::uint64_t bit(int i) noexcept { return std::uint64_t{1} << (i & 63); }
  static void check(int i) {
    if (i < 0 || i >= kCapacity) throw ContractError("index out of IndexSet capacity");
  }

  std::array<std::uint64_t, 2> words_{};
};

// Presentation order: by size, then lexicographically by members.
inline bool presentation_less(const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

}  // namespace tiltlab

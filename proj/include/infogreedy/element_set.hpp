#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace infogreedy {

inline constexpr std::size_t kMaxElements = 256;

// A subset of the ground set S. Element ids are dense, 0-based.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<std::size_t> ids) {
    for (auto id : ids) bits_.set(id);
  }
  static ElementSet from_ids(const std::vector<std::size_t>& ids) {
    ElementSet s;
    for (auto id : ids) s.insert(id);
    return s;
  }
  // Low 64 ids from a bitmask; used when enumerating subsets of small S.
  static ElementSet from_mask(std::uint64_t mask) {
    ElementSet s;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
      if (mask & 1u) s.bits_.set(i);
    return s;
  }

  void insert(std::size_t id) { bits_.set(id); }
  void erase(std::size_t id) { bits_.reset(id); }
  bool contains(std::size_t id) const { return bits_.test(id); }
  bool empty() const { return bits_.none(); }
  std::size_t size() const { return bits_.count(); }

  // One past the largest id present, 0 if empty.
  std::size_t extent() const {
    for (std::size_t i = kMaxElements; i > 0; --i)
      if (bits_.test(i - 1)) return i;
    return 0;
  }

  std::vector<std::size_t> ids() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0, n = extent(); i < n; ++i)
      if (bits_.test(i)) out.push_back(i);
    return out;
  }

  bool is_subset_of(const ElementSet& other) const {
    return (bits_ & ~other.bits_).none();
  }

  ElementSet& operator|=(const ElementSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.bits_ == b.bits_;
  }

  std::size_t hash() const { return std::hash<std::bitset<kMaxElements>>{}(bits_); }

 private:
  std::bitset<kMaxElements> bits_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace infogreedy

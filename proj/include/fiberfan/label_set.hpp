#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fiberfan {

/// Set of vertex labels (0..63). Face and collection identity is label based.
class LabelSet {
 public:
  constexpr LabelSet() = default;
  constexpr explicit LabelSet(std::uint64_t bits) : bits_(bits) {}

  static LabelSet of(std::initializer_list<int> labels) {
    LabelSet s;
    for (int l : labels) s.insert(l);
    return s;
  }
  static LabelSet of(const std::vector<int>& labels) {
    LabelSet s;
    for (int l : labels) s.insert(l);
    return s;
  }
  static constexpr LabelSet first(int n) {
    return LabelSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int label) const { return (bits_ >> label) & 1U; }
  constexpr void insert(int label) { bits_ |= std::uint64_t{1} << label; }
  constexpr void erase(int label) { bits_ &= ~(std::uint64_t{1} << label); }
  constexpr bool subset_of(LabelSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr LabelSet operator&(LabelSet o) const { return LabelSet(bits_ & o.bits_); }
  constexpr LabelSet operator|(LabelSet o) const { return LabelSet(bits_ | o.bits_); }
  constexpr LabelSet minus(LabelSet o) const { return LabelSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const LabelSet&) const = default;

  /// Orders by size, then lexicographically by sorted label list.
  std::strong_ordering operator<=>(const LabelSet& o) const {
    if (auto c = size() <=> o.size(); c != 0) return c;
    std::uint64_t diff = bits_ ^ o.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    // The set holding the smallest differing label sorts first.
    return (bits_ & (diff & (~diff + 1))) != 0 ? std::strong_ordering::less
                                                : std::strong_ordering::greater;
  }

  std::vector<int> labels() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int l : labels()) {
      if (!first) s += ",";
      s += std::to_string(l);
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace fiberfan

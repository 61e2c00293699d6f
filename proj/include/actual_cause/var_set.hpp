#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace actual_cause {

/// Set of endogenous variables, stored as a bitmask over declaration
/// indices. Models are limited to 64 endogenous variables.
class VarSet {
public:
  static constexpr std::size_t kCapacity = 64;

  class iterator {
  public:
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend constexpr bool operator==(const iterator&, const iterator&) = default;

  private:
    std::uint64_t rest_ = 0;
  };

  constexpr VarSet() = default;
  constexpr explicit VarSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VarSet(std::initializer_list<std::size_t> vars) {
    for (auto v : vars) insert(v);
  }

  static constexpr VarSet all(std::size_t n) {
    return VarSet(n >= kCapacity ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
  [[nodiscard]] constexpr bool contains(std::size_t v) const { return (bits_ >> v) & 1U; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  [[nodiscard]] constexpr bool is_subset_of(VarSet other) const { return (bits_ & ~other.bits_) == 0; }
  [[nodiscard]] constexpr bool is_proper_subset_of(VarSet other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }

  constexpr void insert(std::size_t v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(std::size_t v) { bits_ &= ~(std::uint64_t{1} << v); }

  [[nodiscard]] constexpr iterator begin() const { return iterator(bits_); }
  [[nodiscard]] constexpr iterator end() const { return iterator(0); }

  [[nodiscard]] std::vector<std::size_t> to_vector() const { return {begin(), end()}; }

  friend constexpr VarSet operator|(VarSet a, VarSet b) { return VarSet(a.bits_ | b.bits_); }
  friend constexpr VarSet operator&(VarSet a, VarSet b) { return VarSet(a.bits_ & b.bits_); }
  friend constexpr VarSet operator-(VarSet a, VarSet b) { return VarSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VarSet, VarSet) = default;

private:
  std::uint64_t bits_ = 0;
};

/// Size-then-lexicographic order on index sequences, the canonical order
/// for every subset enumeration in the library.
[[nodiscard]] inline bool size_lex_less(VarSet a, VarSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return false;
}

/// Lazily enumerates all subsets of `universe` in size-then-lexicographic
/// order, starting with the empty set.
class SubsetEnumerator {
public:
  explicit SubsetEnumerator(VarSet universe, std::size_t max_size = VarSet::kCapacity)
      : elements_(universe.to_vector()), max_size_(max_size) {}

  /// Returns false once every subset has been produced.
  bool next(VarSet& out) {
    if (done_) return false;
    if (!started_) {
      started_ = true;
      out = VarSet{};
      return true;
    }
    if (!advance()) {
      done_ = true;
      return false;
    }
    VarSet s;
    for (auto p : positions_) s.insert(elements_[p]);
    out = s;
    return true;
  }

private:
  bool advance() {
    const std::size_t n = elements_.size();
    const std::size_t k = positions_.size();
    // Next combination of the same size.
    for (std::size_t i = k; i-- > 0;) {
      if (positions_[i] < n - k + i) {
        ++positions_[i];
        for (std::size_t j = i + 1; j < k; ++j) positions_[j] = positions_[j - 1] + 1;
        return true;
      }
    }
    if (k + 1 > n || k + 1 > max_size_) return false;
    positions_.resize(k + 1);
    for (std::size_t j = 0; j <= k; ++j) positions_[j] = j;
    return true;
  }

  std::vector<std::size_t> elements_;
  std::vector<std::size_t> positions_;
  std::size_t max_size_;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace actual_cause

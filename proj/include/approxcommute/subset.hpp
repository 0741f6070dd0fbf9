#pragma once

#include <bit>
#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "approxcommute/group.hpp"

namespace approxcommute {

/// Dense membership set over the elements of one group. Values are immutable;
/// build new ones with SubsetBuilder or the free functions below.
class Subset {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ElementId;
    using difference_type = std::ptrdiff_t;
    using pointer = const ElementId*;
    using reference = ElementId;

    const_iterator() = default;
    ElementId operator*() const noexcept { return ElementId(word_ * 64 + std::countr_zero(bits_)); }
    const_iterator& operator++() noexcept {
      bits_ &= bits_ - 1;
      settle();
      return *this;
    }
    const_iterator operator++(int) noexcept {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& o) const noexcept { return word_ == o.word_ && bits_ == o.bits_; }

   private:
    friend class Subset;
    const_iterator(std::span<const std::uint64_t> words, std::size_t word) noexcept
        : words_(words), word_(word), bits_(word < words.size() ? words[word] : 0) {
      settle();
    }
    void settle() noexcept {
      while (bits_ == 0 && word_ < words_.size()) {
        ++word_;
        bits_ = word_ < words_.size() ? words_[word_] : 0;
      }
    }
    std::span<const std::uint64_t> words_;
    std::size_t word_ = 0;
    std::uint64_t bits_ = 0;
  };

  /// Empty subset of g.
  explicit Subset(GroupPtr g);

  static Subset all(GroupPtr g);
  static Subset identity_only(GroupPtr g);
  /// Throws SpecParseError on ids outside the group.
  static Subset of(GroupPtr g, std::span<const ElementId> ids);
  static Subset of(GroupPtr g, std::initializer_list<ElementId> ids) {
    return of(std::move(g), std::span<const ElementId>(ids.begin(), ids.size()));
  }

  const Group& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool is_full() const noexcept { return size_ == group_->order(); }
  bool contains(ElementId x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1U; }
  bool contains_identity() const noexcept { return contains(Group::identity()); }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  const_iterator begin() const noexcept { return {words_, 0}; }
  const_iterator end() const noexcept { return {words_, words_.size()}; }
  /// Sorted member ids.
  std::vector<ElementId> elements() const;

  bool same_group(const Subset& o) const noexcept { return group_ == o.group_; }
  bool is_subset_of(const Subset& o) const;
  bool intersects(const Subset& o) const;
  bool operator==(const Subset& o) const;

  friend Subset operator|(const Subset& a, const Subset& b);
  friend Subset operator&(const Subset& a, const Subset& b);
  friend Subset operator-(const Subset& a, const Subset& b);

 private:
  friend class SubsetBuilder;
  Subset(GroupPtr g, std::vector<std::uint64_t> words);
  void recount() noexcept;

  GroupPtr group_;
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

/// Mutable accumulator that yields a Subset.
class SubsetBuilder {
 public:
  explicit SubsetBuilder(GroupPtr g);
  explicit SubsetBuilder(const Subset& start);

  /// Returns true when x was not yet present.
  bool insert(ElementId x) noexcept {
    auto& w = words_[x >> 6];
    const auto bit = std::uint64_t{1} << (x & 63);
    if (w & bit) return false;
    w |= bit;
    ++size_;
    return true;
  }
  bool contains(ElementId x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1U; }
  void merge(const Subset& s);
  std::size_t size() const noexcept { return size_; }
  bool is_full() const noexcept { return size_ == group_->order(); }
  Subset build() const;

 private:
  GroupPtr group_;
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

enum class Side { Left, Right };

/// Throws GroupMismatch unless both subsets live in the same group.
void require_same_group(const Subset& a, const Subset& b);

/// {xy : x in X, y in Y}; stops early once the whole group is reached.
Subset product(const Subset& x, const Subset& y);
/// X^j, j >= 1.
Subset power(const Subset& x, unsigned j);
Subset inverse(const Subset& x);
bool is_symmetric(const Subset& x);
Subset symmetrize(const Subset& x);
Subset with_identity(const Subset& x);
/// gX or Xg.
Subset translate(ElementId g, const Subset& x, Side side = Side::Left);

}  // namespace approxcommute

#include "approxcommute/subset.hpp"

#include <algorithm>

#include "approxcommute/error.hpp"

namespace approxcommute {

namespace {

std::size_t word_count(const Group& g) { return (g.order() + 63) / 64; }

}  // namespace

Subset::Subset(GroupPtr g) : group_(std::move(g)), words_(word_count(*group_), 0) {}

Subset::Subset(GroupPtr g, std::vector<std::uint64_t> words) : group_(std::move(g)), words_(std::move(words)) {
  recount();
}

void Subset::recount() noexcept {
  size_ = 0;
  for (auto w : words_) size_ += std::size_t(std::popcount(w));
}

Subset Subset::all(GroupPtr g) {
  const auto n = g->order();
  std::vector<std::uint64_t> words(word_count(*g), ~std::uint64_t{0});
  if (n % 64) words.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return Subset(std::move(g), std::move(words));
}

Subset Subset::identity_only(GroupPtr g) { return of(std::move(g), {Group::identity()}); }

Subset Subset::of(GroupPtr g, std::span<const ElementId> ids) {
  SubsetBuilder b(g);
  for (auto x : ids) {
    if (x >= g->order())
      throw Error(ErrorKind::SpecParseError, "element id " + std::to_string(x) + " outside group of order " +
                                                 std::to_string(g->order()));
    b.insert(x);
  }
  return b.build();
}

std::vector<ElementId> Subset::elements() const {
  std::vector<ElementId> out;
  out.reserve(size_);
  for (auto x : *this) out.push_back(x);
  return out;
}

bool Subset::is_subset_of(const Subset& o) const {
  require_same_group(*this, o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool Subset::intersects(const Subset& o) const {
  require_same_group(*this, o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

bool Subset::operator==(const Subset& o) const { return group_ == o.group_ && words_ == o.words_; }

Subset operator|(const Subset& a, const Subset& b) {
  require_same_group(a, b);
  auto w = a.words_;
  for (std::size_t i = 0; i < w.size(); ++i) w[i] |= b.words_[i];
  return Subset(a.group_, std::move(w));
}

Subset operator&(const Subset& a, const Subset& b) {
  require_same_group(a, b);
  auto w = a.words_;
  for (std::size_t i = 0; i < w.size(); ++i) w[i] &= b.words_[i];
  return Subset(a.group_, std::move(w));
}

Subset operator-(const Subset& a, const Subset& b) {
  require_same_group(a, b);
  auto w = a.words_;
  for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~b.words_[i];
  return Subset(a.group_, std::move(w));
}

SubsetBuilder::SubsetBuilder(GroupPtr g) : group_(std::move(g)), words_(word_count(*group_), 0) {}

SubsetBuilder::SubsetBuilder(const Subset& start)
    : group_(start.group_ptr()), words_(start.words().begin(), start.words().end()), size_(start.size()) {}

void SubsetBuilder::merge(const Subset& s) {
  if (s.group_ptr() != group_) throw Error(ErrorKind::GroupMismatch, "subset belongs to another group");
  size_ = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] |= s.words()[i];
    size_ += std::size_t(std::popcount(words_[i]));
  }
}

Subset SubsetBuilder::build() const { return Subset(group_, words_); }

void require_same_group(const Subset& a, const Subset& b) {
  if (!a.same_group(b)) throw Error(ErrorKind::GroupMismatch, "subsets belong to different groups");
}

Subset product(const Subset& x, const Subset& y) {
  require_same_group(x, y);
  const auto& g = x.group();
  SubsetBuilder out(x.group_ptr());
  const auto ys = y.elements();
  for (auto a : x) {
    const auto r = g.row(a);
    for (auto b : ys) out.insert(r[b]);
    if (out.is_full()) break;
  }
  return out.build();
}

Subset power(const Subset& x, unsigned j) {
  if (j == 0) throw Error(ErrorKind::BadParams, "power exponent must be positive");
  Subset acc = x;
  for (unsigned i = 1; i < j && !acc.is_full(); ++i) acc = product(acc, x);
  return acc;
}

Subset inverse(const Subset& x) {
  SubsetBuilder out(x.group_ptr());
  for (auto a : x) out.insert(x.group().inv(a));
  return out.build();
}

bool is_symmetric(const Subset& x) {
  for (auto a : x)
    if (!x.contains(x.group().inv(a))) return false;
  return true;
}

Subset symmetrize(const Subset& x) { return x | inverse(x); }

Subset with_identity(const Subset& x) {
  SubsetBuilder out(x);
  out.insert(Group::identity());
  return out.build();
}

Subset translate(ElementId g, const Subset& x, Side side) {
  const auto& grp = x.group();
  SubsetBuilder out(x.group_ptr());
  for (auto a : x) out.insert(side == Side::Left ? grp.mul(g, a) : grp.mul(a, g));
  return out.build();
}

}  // namespace approxcommute

#include "cantor/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "cantor/errors.hpp"

namespace cantor {

VertexSet::VertexSet(std::size_t width)
    : width_(width), words_(words_for(width), 0) {}

VertexSet::VertexSet(std::size_t width, std::initializer_list<VertexId> members)
    : VertexSet(width) {
  for (VertexId v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t width) {
  VertexSet s(width);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  s.clear_tail();
  return s;
}

VertexSet VertexSet::from_ids(std::size_t width, std::span<const VertexId> ids) {
  VertexSet s(width);
  for (VertexId v : ids) s.insert(v);
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t count = 0;
  for (Word w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool VertexSet::contains(VertexId v) const {
  check_index(v);
  return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
}

void VertexSet::insert(VertexId v) {
  check_index(v);
  words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(VertexId v) {
  check_index(v);
  words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
  VertexSet r = *this;
  r |= other;
  return r;
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
  VertexSet r = *this;
  r &= other;
  return r;
}

VertexSet VertexSet::operator-(const VertexSet& other) const {
  check_width(other);
  VertexSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~other.words_[i];
  return r;
}

VertexSet VertexSet::operator^(const VertexSet& other) const {
  check_width(other);
  VertexSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] ^= other.words_[i];
  return r;
}

VertexSet VertexSet::complement() const {
  VertexSet r = *this;
  for (Word& w : r.words_) w = ~w;
  r.clear_tail();
  return r;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool VertexSet::operator==(const VertexSet& other) const {
  check_width(other);
  return words_ == other.words_;
}

std::vector<VertexId> VertexSet::to_vector() const {
  std::vector<VertexId> out;
  out.reserve(size());
  for_each([&](VertexId v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](VertexId v) {
    if (!first) os << ',';
    os << v;
    first = false;
  });
  os << '}';
  return os.str();
}

void VertexSet::check_width(const VertexSet& other) const {
  if (other.width_ != width_) {
    throw InvalidArgument("vertex set width mismatch: " + std::to_string(width_) +
                          " vs " + std::to_string(other.width_));
  }
}

void VertexSet::check_index(VertexId v) const {
  if (v >= width_) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for width " +
                          std::to_string(width_));
  }
}

void VertexSet::clear_tail() noexcept {
  const std::size_t rem = width_ % kWordBits;
  if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

}  // namespace cantor

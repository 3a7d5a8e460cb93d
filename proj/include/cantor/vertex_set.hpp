#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cantor {

using VertexId = std::size_t;

/// Fixed-width bitset over vertex ids [0, width). Every binary operation
/// requires equal widths and throws InvalidArgument otherwise.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t width);
  VertexSet(std::size_t width, std::initializer_list<VertexId> members);

  static VertexSet full(std::size_t width);
  static VertexSet from_ids(std::size_t width, std::span<const VertexId> ids);

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept;  // population count
  bool empty() const noexcept;

  bool contains(VertexId v) const;
  void insert(VertexId v);
  void erase(VertexId v);

  VertexSet operator|(const VertexSet& other) const;
  VertexSet operator&(const VertexSet& other) const;
  VertexSet operator-(const VertexSet& other) const;  // difference
  VertexSet operator^(const VertexSet& other) const;  // symmetric difference
  VertexSet complement() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  bool operator==(const VertexSet& other) const;

  /// Members in increasing order.
  std::vector<VertexId> to_vector() const;
  std::string to_string() const;  // "{0,2,5}"

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(__builtin_ctzll(bits));
        f(w * kWordBits + bit);
        bits &= bits - 1;
      }
    }
  }

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  static std::size_t words_for(std::size_t width) noexcept {
    return (width + kWordBits - 1) / kWordBits;
  }

 private:
  void check_width(const VertexSet& other) const;
  void check_index(VertexId v) const;
  void clear_tail() noexcept;

  std::size_t width_ = 0;
  std::vector<Word> words_;
};

}  // namespace cantor

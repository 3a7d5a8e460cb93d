#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

/// Raw, possibly non-canonical description of an ultimately periodic set.
/// n is a member iff (n < threshold and n in exceptionals) or
/// (n >= threshold and n mod period in residues).
struct UPSetParts {
  std::uint64_t threshold = 0;
  std::uint64_t period = 1;
  std::vector<std::uint64_t> residues;
  std::vector<std::uint64_t> exceptionals;
};

/// Ultimately periodic subset of the naturals, always held in canonical form
/// (minimal period, then minimal threshold), so equality is structural.
class UPSet {
 public:
  static constexpr std::uint64_t kDefaultPeriodCap = std::uint64_t{1} << 20;

  /// The empty set.
  UPSet() = default;

  /// Validates and canonicalizes. Throws InvalidArgument on period 0, a
  /// residue >= period or an exceptional >= threshold; PeriodCapExceeded if
  /// the period exceeds `period_cap`.
  static UPSet normalize(UPSetParts parts, std::uint64_t period_cap = kDefaultPeriodCap);

  static UPSet from_finite(std::span<const std::uint64_t> values);
  static UPSet from_finite(std::initializer_list<std::uint64_t> values) {
    return from_finite(std::span<const std::uint64_t>(values.begin(), values.size()));
  }
  /// {start, start + step, start + 2*step, ...}
  static UPSet progression(std::uint64_t start, std::uint64_t step);
  static UPSet naturals() { return progression(0, 1); }

  /// Parses `finite(a,b,...)` or `up(t=T,d=D,r=r1|r2,f=f1|f2)`; whitespace is
  /// ignored and `f=` is optional. Throws ParseError.
  static UPSet parse(std::string_view literal);
  /// Canonical literal; `finite(...)` when the set is finite.
  std::string literal() const;

  std::uint64_t threshold() const noexcept { return threshold_; }
  std::uint64_t period() const noexcept { return period_; }
  const std::vector<std::uint64_t>& residues() const noexcept { return residues_; }
  const std::vector<std::uint64_t>& exceptionals() const noexcept { return exceptionals_; }

  bool contains(std::uint64_t m) const;
  bool empty() const noexcept { return residues_.empty() && exceptionals_.empty(); }
  bool is_finite() const noexcept { return residues_.empty(); }
  std::optional<std::uint64_t> min_element() const;

  /// Members in [0, bound].
  std::vector<std::uint64_t> members_up_to(std::uint64_t bound) const;

  /// {m | m >= k and m - k in *this}
  UPSet shifted(std::uint64_t k) const;

  /// Exact intersection. Throws PeriodCapExceeded when lcm of the periods
  /// exceeds `period_cap`.
  static UPSet intersect(const UPSet& a, const UPSet& b,
                         std::uint64_t period_cap = kDefaultPeriodCap);

  bool operator==(const UPSet&) const = default;

 private:
  std::uint64_t threshold_ = 0;
  std::uint64_t period_ = 1;
  std::vector<std::uint64_t> residues_;      // sorted, each < period_
  std::vector<std::uint64_t> exceptionals_;  // sorted, each < threshold_
};

// Free-function spellings of the core operations.
inline UPSet upset_from_finite(std::span<const std::uint64_t> values) {
  return UPSet::from_finite(values);
}
inline bool upset_member(const UPSet& s, std::uint64_t m) { return s.contains(m); }
inline UPSet upset_shift(const UPSet& s, std::uint64_t k) { return s.shifted(k); }
inline UPSet upset_intersect(const UPSet& a, const UPSet& b,
                             std::uint64_t period_cap = UPSet::kDefaultPeriodCap) {
  return UPSet::intersect(a, b, period_cap);
}
inline bool upset_is_empty(const UPSet& s) { return s.empty(); }
inline UPSet upset_normalize(UPSetParts parts) { return UPSet::normalize(std::move(parts)); }

}  // namespace cantor

#include "cantor/upset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "cantor/errors.hpp"

namespace cantor {
namespace {

bool sorted_contains(const std::vector<std::uint64_t>& v, std::uint64_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

void sort_unique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::uint64_t smallest_period(const std::vector<bool>& in_residues) {
  const std::uint64_t d = in_residues.size();
  for (std::uint64_t p = 1; p < d; ++p) {
    if (d % p != 0) continue;
    bool invariant = true;
    for (std::uint64_t r = p; r < d && invariant; ++r) {
      invariant = in_residues[r] == in_residues[r % p];
    }
    if (invariant) return p;
  }
  return d;
}

}  // namespace

UPSet UPSet::normalize(UPSetParts parts, std::uint64_t period_cap) {
  if (parts.period == 0) throw InvalidArgument("period must be positive");
  if (parts.period > period_cap) {
    throw PeriodCapExceeded("period " + std::to_string(parts.period) + " exceeds cap " +
                            std::to_string(period_cap));
  }
  sort_unique(parts.residues);
  sort_unique(parts.exceptionals);
  if (!parts.residues.empty() && parts.residues.back() >= parts.period) {
    throw InvalidArgument("residue " + std::to_string(parts.residues.back()) +
                          " not below period " + std::to_string(parts.period));
  }
  if (!parts.exceptionals.empty() && parts.exceptionals.back() >= parts.threshold) {
    throw InvalidArgument("exceptional " + std::to_string(parts.exceptionals.back()) +
                          " not below threshold " + std::to_string(parts.threshold));
  }

  UPSet s;
  std::vector<bool> in_residues(parts.period, false);
  for (auto r : parts.residues) in_residues[r] = true;
  s.period_ = smallest_period(in_residues);
  for (std::uint64_t r = 0; r < s.period_; ++r) {
    if (in_residues[r]) s.residues_.push_back(r);
  }

  // Lower the threshold past every position where the exceptional list and
  // the periodic rule agree.
  std::uint64_t t = parts.threshold;
  if (s.residues_.empty()) {
    t = parts.exceptionals.empty() ? 0 : parts.exceptionals.back() + 1;
  } else {
    while (t > 0) {
      const std::uint64_t n = t - 1;
      if (sorted_contains(parts.exceptionals, n) != sorted_contains(s.residues_, n % s.period_)) {
        break;
      }
      --t;
    }
  }
  s.threshold_ = t;
  for (auto f : parts.exceptionals) {
    if (f < t) s.exceptionals_.push_back(f);
  }
  return s;
}

UPSet UPSet::from_finite(std::span<const std::uint64_t> values) {
  UPSetParts parts;
  parts.exceptionals.assign(values.begin(), values.end());
  parts.threshold = values.empty() ? 0 : *std::max_element(values.begin(), values.end()) + 1;
  return normalize(std::move(parts));
}

UPSet UPSet::progression(std::uint64_t start, std::uint64_t step) {
  if (step == 0) return from_finite({start});
  UPSetParts parts;
  parts.threshold = start;
  parts.period = step;
  parts.residues = {start % step};
  return normalize(std::move(parts));
}

bool UPSet::contains(std::uint64_t m) const {
  if (m < threshold_) return sorted_contains(exceptionals_, m);
  return sorted_contains(residues_, m % period_);
}

std::optional<std::uint64_t> UPSet::min_element() const {
  if (!exceptionals_.empty()) return exceptionals_.front();
  if (residues_.empty()) return std::nullopt;
  const std::uint64_t base = threshold_ % period_;
  std::uint64_t best = period_;
  for (auto r : residues_) best = std::min(best, (r + period_ - base) % period_);
  return threshold_ + best;
}

std::vector<std::uint64_t> UPSet::members_up_to(std::uint64_t bound) const {
  std::vector<std::uint64_t> out;
  for (auto f : exceptionals_) {
    if (f <= bound) out.push_back(f);
  }
  if (residues_.empty() || bound < threshold_) return out;
  for (std::uint64_t m = threshold_; m <= bound; ++m) {
    if (sorted_contains(residues_, m % period_)) out.push_back(m);
  }
  return out;
}

UPSet UPSet::shifted(std::uint64_t k) const {
  UPSetParts parts;
  parts.threshold = threshold_ + k;
  parts.period = period_;
  for (auto r : residues_) parts.residues.push_back((r + k) % period_);
  for (auto f : exceptionals_) parts.exceptionals.push_back(f + k);
  return normalize(std::move(parts));
}

UPSet UPSet::intersect(const UPSet& a, const UPSet& b, std::uint64_t period_cap) {
  const std::uint64_t g = std::gcd(a.period_, b.period_);
  const std::uint64_t step = a.period_ / g;
  if (step > period_cap / b.period_) {
    throw PeriodCapExceeded("lcm(" + std::to_string(a.period_) + "," +
                            std::to_string(b.period_) + ") exceeds period cap " +
                            std::to_string(period_cap));
  }
  const std::uint64_t lcm = step * b.period_;
  if (lcm > period_cap) {
    throw PeriodCapExceeded("lcm " + std::to_string(lcm) + " exceeds period cap " +
                            std::to_string(period_cap));
  }

  UPSetParts parts;
  parts.threshold = std::max(a.threshold_, b.threshold_);
  parts.period = lcm;
  // Below the joint threshold a member must be an exceptional of whichever
  // operand is still below its own threshold.
  std::vector<std::uint64_t> candidates = a.exceptionals_;
  for (auto f : b.exceptionals_) {
    if (f >= a.threshold_) candidates.push_back(f);
  }
  for (auto c : candidates) {
    if (c < parts.threshold && a.contains(c) && b.contains(c)) parts.exceptionals.push_back(c);
  }
  if (!a.residues_.empty() && !b.residues_.empty()) {
    for (std::uint64_t r = 0; r < lcm; ++r) {
      if (sorted_contains(a.residues_, r % a.period_) &&
          sorted_contains(b.residues_, r % b.period_)) {
        parts.residues.push_back(r);
      }
    }
  }
  return normalize(std::move(parts), period_cap);
}

namespace {

std::string join(const std::vector<std::uint64_t>& values, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) os << sep;
    os << values[i];
  }
  return os.str();
}

std::uint64_t parse_natural(std::string_view token, std::string_view literal) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("invalid natural '" + std::string(token) + "' in set literal '" +
                         std::string(literal) + "'",
                     0);
  }
  return value;
}

std::vector<std::uint64_t> parse_list(std::string_view body, char sep, std::string_view literal) {
  std::vector<std::uint64_t> out;
  if (body.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = body.find(sep, start);
    out.push_back(parse_natural(body.substr(start, pos - start), literal));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string UPSet::literal() const {
  if (is_finite()) return "finite(" + join(exceptionals_, ',') + ")";
  std::string out = "up(t=" + std::to_string(threshold_) + ",d=" + std::to_string(period_) +
                    ",r=" + join(residues_, '|');
  if (!exceptionals_.empty()) out += ",f=" + join(exceptionals_, '|');
  return out + ")";
}

UPSet UPSet::parse(std::string_view literal) {
  std::string text;
  for (char c : literal) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad set literal '" + std::string(literal) + "': " + why, 0);
  };
  const std::string_view sv = text;
  if (sv.empty() || sv.back() != ')') throw fail("expected closing ')'");

  if (sv.starts_with("finite(")) {
    const auto body = sv.substr(7, sv.size() - 8);
    return from_finite(parse_list(body, ',', literal));
  }
  if (!sv.starts_with("up(")) throw fail("expected 'finite(' or 'up('");

  const auto body = sv.substr(3, sv.size() - 4);
  std::optional<std::uint64_t> t;
  std::optional<std::uint64_t> d;
  std::optional<std::vector<std::uint64_t>> r;
  std::vector<std::uint64_t> f;
  bool seen_f = false;
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto pos = body.find(',', start);
    const auto field = body.substr(start, pos == std::string_view::npos ? pos : pos - start);
    if (field.size() < 2 || field[1] != '=') throw fail("expected key=value, got '" + std::string(field) + "'");
    const auto value = field.substr(2);
    const bool duplicate = (field[0] == 't' && t) || (field[0] == 'd' && d) ||
                           (field[0] == 'r' && r) || (field[0] == 'f' && seen_f);
    if (duplicate) throw fail(std::string("duplicate key '") + field[0] + "'");
    switch (field[0]) {
      case 't': t = parse_natural(value, literal); break;
      case 'd': d = parse_natural(value, literal); break;
      case 'r': r = parse_list(value, '|', literal); break;
      case 'f': f = parse_list(value, '|', literal); seen_f = true; break;
      default: throw fail(std::string("unknown key '") + field[0] + "'");
    }
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (!t || !d || !r) throw fail("t=, d= and r= are required");
  try {
    return normalize(UPSetParts{*t, *d, std::move(*r), std::move(f)});
  } catch (const InvalidArgument& e) {
    throw fail(e.what());
  }
}

}  // namespace cantor

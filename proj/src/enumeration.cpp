#include "roughmap/enumeration.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "roughmap/error.hpp"

namespace roughmap {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(Errc::TooLarge, "count overflows 64 bits");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(Errc::TooLarge, "count overflows 64 bits");
  return out;
}

void check_n(std::size_t n) {
  if (n == 0) throw Error(Errc::EmptyUniverse, "enumeration over an empty universe");
  if (n > kMaxElements) throw Error(Errc::TooLarge, "universe too large to enumerate");
}

bool is_rgs(const std::vector<std::uint8_t>& digits) {
  std::uint8_t next = 0;
  for (auto d : digits) {
    if (d > next) return false;
    if (d == next) ++next;
  }
  return true;
}

std::size_t distinct_values(const std::vector<std::uint8_t>& digits) {
  Mask seen = 0;
  for (auto d : digits) seen |= bit(d);
  return static_cast<std::size_t>(std::popcount(seen));
}

}  // namespace

std::string_view enum_kind_name(EnumKind kind) {
  switch (kind) {
    case EnumKind::Partitions: return "partitions";
    case EnumKind::Subsets: return "subsets";
    case EnumKind::Maps: return "maps";
    case EnumKind::Surjections: return "surjections";
    case EnumKind::CanonicalSurjections: return "canonical-surjections";
  }
  return "?";
}

EnumCursor::EnumCursor(EnumKind kind, std::size_t n, std::size_t m)
    : kind_(kind), n_(n), m_(m), digits_(kind == EnumKind::Subsets ? 0 : n, 0) {
  check_n(n);
  if (kind != EnumKind::Partitions && kind != EnumKind::Subsets) {
    if (m == 0) throw Error(Errc::EmptyUniverse, "enumeration into an empty codomain");
    if (m > kMaxElements) throw Error(Errc::TooLarge, "codomain too large to enumerate");
  }
  if ((kind == EnumKind::Surjections || kind == EnumKind::CanonicalSurjections) && m > n)
    throw Error(Errc::NoSurjection, "no surjection from " + std::to_string(n) + " onto " +
                                        std::to_string(m) + " elements");
  if (!accepted()) step();
}

EnumCursor EnumCursor::partitions(std::size_t n) { return {EnumKind::Partitions, n, 0}; }
EnumCursor EnumCursor::subsets(std::size_t n) { return {EnumKind::Subsets, n, 0}; }
EnumCursor EnumCursor::maps(std::size_t n, std::size_t m) { return {EnumKind::Maps, n, m}; }
EnumCursor EnumCursor::surjections(std::size_t n, std::size_t m, bool canonical) {
  return {canonical ? EnumKind::CanonicalSurjections : EnumKind::Surjections, n, m};
}

bool EnumCursor::accepted() const {
  switch (kind_) {
    case EnumKind::Surjections:
    case EnumKind::CanonicalSurjections: return distinct_values(digits_) == m_;
    default: return true;
  }
}

void EnumCursor::advance() {
  if (done_) return;
  ++index_;
  step();
}

// Moves to the next accepted state, or marks the cursor done.
void EnumCursor::step() {
  for (;;) {
    bool wrapped = false;
    switch (kind_) {
      case EnumKind::Subsets:
        if (mask_ == full_mask(n_)) {
          wrapped = true;
        } else {
          ++mask_;
        }
        break;
      case EnumKind::Maps:
      case EnumKind::Surjections: {
        std::size_t i = n_;
        while (i > 0 && digits_[i - 1] + 1u == m_) digits_[--i] = 0;
        if (i == 0) {
          wrapped = true;
        } else {
          ++digits_[i - 1];
        }
        break;
      }
      case EnumKind::Partitions:
      case EnumKind::CanonicalSurjections: {
        // Rightmost position that can grow while staying restricted-growth
        // (and, for surjections, below m blocks); the suffix restarts at 0.
        const std::size_t cap = kind_ == EnumKind::Partitions ? n_ : m_;
        std::vector<std::uint8_t> prefix_max(n_, 0);
        for (std::size_t i = 1; i < n_; ++i)
          prefix_max[i] = std::max(prefix_max[i - 1], digits_[i - 1]);
        std::size_t i = n_;
        for (; i > 1; --i) {
          const std::size_t limit = std::min<std::size_t>(prefix_max[i - 1] + 1u, cap - 1);
          if (digits_[i - 1] < limit) break;
        }
        if (i <= 1) {
          wrapped = true;
        } else {
          ++digits_[i - 1];
          std::fill(digits_.begin() + static_cast<std::ptrdiff_t>(i), digits_.end(), 0);
        }
        break;
      }
    }
    if (wrapped) {
      done_ = true;
      return;
    }
    if (accepted()) return;
  }
}

void EnumCursor::require(EnumKind kind) const {
  const bool map_like = kind == EnumKind::Maps &&
                        (kind_ == EnumKind::Maps || kind_ == EnumKind::Surjections ||
                         kind_ == EnumKind::CanonicalSurjections);
  if (kind_ != kind && !map_like)
    throw Error(Errc::BadCursor, std::string("cursor enumerates ") +
                                     std::string(enum_kind_name(kind_)));
  if (done_) throw Error(Errc::BadCursor, "cursor is exhausted");
}

Partition EnumCursor::partition() const {
  require(EnumKind::Partitions);
  return Partition::from_rgs(digits_);
}

Subset EnumCursor::subset() const {
  require(EnumKind::Subsets);
  return Subset::from_mask(n_, mask_);
}

SurjMap EnumCursor::map() const {
  require(EnumKind::Maps);
  std::vector<std::size_t> table(digits_.begin(), digits_.end());
  return SurjMap::make(n_, m_, table);
}

// Format: kind:n:m:index:state, state being "end", a decimal mask (subsets),
// or comma-separated digits.
std::string EnumCursor::serialize() const {
  std::ostringstream out;
  out << enum_kind_name(kind_) << ':' << n_ << ':' << m_ << ':' << index_ << ':';
  if (done_) {
    out << "end";
  } else if (kind_ == EnumKind::Subsets) {
    out << mask_;
  } else {
    for (std::size_t i = 0; i < digits_.size(); ++i)
      out << (i ? "," : "") << static_cast<unsigned>(digits_[i]);
  }
  return out.str();
}

EnumCursor EnumCursor::deserialize(std::string_view text) {
  auto fail = [&](const std::string& why) -> EnumCursor {
    throw Error(Errc::BadCursor, "bad cursor '" + std::string(text) + "': " + why);
  };
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i)
    if (i == text.size() || text[i] == ':') {
      fields.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  if (fields.size() != 5) return fail("expected 5 fields");

  auto number = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail("bad number '" + std::string(s) + "'");
    return v;
  };

  EnumKind kind{};
  bool found = false;
  for (auto k : {EnumKind::Partitions, EnumKind::Subsets, EnumKind::Maps, EnumKind::Surjections,
                 EnumKind::CanonicalSurjections})
    if (enum_kind_name(k) == fields[0]) {
      kind = k;
      found = true;
    }
  if (!found) return fail("unknown kind");

  EnumCursor cursor(kind, number(fields[1]), number(fields[2]));
  cursor.index_ = number(fields[3]);
  if (fields[4] == "end") {
    cursor.done_ = true;
    return cursor;
  }
  if (kind == EnumKind::Subsets) {
    cursor.mask_ = number(fields[4]);
    if (cursor.mask_ & ~full_mask(cursor.n_)) return fail("mask outside universe");
    return cursor;
  }
  std::vector<std::uint8_t> digits;
  std::size_t pos = 0;
  const std::string_view state = fields[4];
  while (pos <= state.size()) {
    const std::size_t comma = std::min(state.find(',', pos), state.size());
    digits.push_back(static_cast<std::uint8_t>(number(state.substr(pos, comma - pos))));
    pos = comma + 1;
  }
  if (digits.size() != cursor.n_) return fail("state length differs from n");
  const std::size_t bound = kind == EnumKind::Partitions ? cursor.n_ : cursor.m_;
  for (auto d : digits)
    if (d >= bound) return fail("digit out of range");
  if ((kind == EnumKind::Partitions || kind == EnumKind::CanonicalSurjections) && !is_rgs(digits))
    return fail("state is not restricted-growth");
  cursor.digits_ = std::move(digits);
  if (!cursor.accepted()) return fail("state is not surjective");
  return cursor;
}

std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  for (auto c = EnumCursor::partitions(n); !c.done(); c.advance()) out.push_back(c.partition());
  return out;
}

std::vector<Subset> all_subsets(std::size_t n) {
  std::vector<Subset> out;
  for (auto c = EnumCursor::subsets(n); !c.done(); c.advance()) out.push_back(c.subset());
  return out;
}

std::vector<SurjMap> all_maps(std::size_t n, std::size_t m) {
  std::vector<SurjMap> out;
  for (auto c = EnumCursor::maps(n, m); !c.done(); c.advance()) out.push_back(c.map());
  return out;
}

std::vector<SurjMap> all_surjections(std::size_t n, std::size_t m, bool canonical) {
  std::vector<SurjMap> out;
  for (auto c = EnumCursor::surjections(n, m, canonical); !c.done(); c.advance())
    out.push_back(c.map());
  return out;
}

std::uint64_t bell_number(std::size_t n) {
  check_n(n);
  // Bell triangle: each row starts with the last entry of the previous row;
  // B(n) is the last entry of row n.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(checked_add(next.back(), v));
    row = std::move(next);
  }
  return row.back();
}

std::uint64_t stirling2(std::size_t n, std::size_t m) {
  // S(i, j) = j * S(i-1, j) + S(i-1, j-1)
  std::vector<std::uint64_t> prev(m + 1, 0);
  prev[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> cur(m + 1, 0);
    for (std::size_t j = 1; j <= std::min(i, m); ++j)
      cur[j] = checked_add(checked_mul(j, prev[j]), prev[j - 1]);
    prev = std::move(cur);
  }
  return prev[m];
}

std::uint64_t surjection_count(std::size_t n, std::size_t m) {
  check_n(n);
  if (m == 0) throw Error(Errc::EmptyUniverse, "empty codomain");
  if (m > n) throw Error(Errc::NoSurjection, "no surjection onto a larger codomain");
  std::uint64_t factorial = 1;
  for (std::size_t k = 2; k <= m; ++k) factorial = checked_mul(factorial, k);
  return checked_mul(factorial, stirling2(n, m));
}

std::uint64_t subset_count(std::size_t n) {
  check_n(n);
  if (n >= 64) throw Error(Errc::TooLarge, "2^n overflows 64 bits");
  return std::uint64_t{1} << n;
}

Counts count_check(std::size_t n, std::size_t m) {
  return {bell_number(n), surjection_count(n, m), subset_count(n)};
}

}  // namespace roughmap

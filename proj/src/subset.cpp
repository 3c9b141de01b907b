#include "dpp/subset.hpp"

#include "dpp/error.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

namespace dpp {

Subset::Subset(std::initializer_list<int> indices)
    : Subset(std::vector<int>(indices)) {}

Subset::Subset(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (!indices_.empty() && indices_.front() < 0)
    throw Error(ErrorCode::InvalidSubset, "negative index");
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw Error(ErrorCode::InvalidSubset, "duplicate index");
}

Subset Subset::from_mask(std::uint64_t mask) {
  Subset s;
  s.indices_.reserve(std::popcount(mask));
  while (mask != 0) {
    s.indices_.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

Subset Subset::full(int n) {
  Subset s;
  s.indices_.resize(std::max(n, 0));
  std::iota(s.indices_.begin(), s.indices_.end(), 0);
  return s;
}

Subset Subset::parse(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
      ++pos;
  };
  skip_ws();
  if (pos == text.size())
    return Subset{};
  while (true) {
    skip_ws();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{})
      throw Error(ErrorCode::ParseError, "bad subset '" + std::string(text) + "'");
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    skip_ws();
    if (pos == text.size())
      break;
    if (text[pos] != ',')
      throw Error(ErrorCode::ParseError, "bad subset '" + std::string(text) + "'");
    ++pos;
  }
  return Subset(std::move(out));
}

bool Subset::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

std::uint64_t Subset::mask() const {
  std::uint64_t m = 0;
  for (int i : indices_) {
    if (i >= 64)
      throw Error(ErrorCode::DimensionTooLarge, "subset index beyond mask width");
    m |= std::uint64_t{1} << i;
  }
  return m;
}

void Subset::check_range(int n) const {
  if (bound() > n)
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(indices_.back()) + " outside ground set of size " +
                    std::to_string(n));
}

std::string Subset::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i > 0)
      out += ',';
    out += std::to_string(indices_[i]);
  }
  return out;
}

bool fock_order_less(const Subset &a, const Subset &b) {
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

std::vector<std::uint64_t> fock_order_masks(int n) {
  if (n < 0 || n > 30)
    throw Error(ErrorCode::DimensionTooLarge, "fock order over more than 30 elements");
  std::vector<std::uint64_t> masks(std::uint64_t{1} << n);
  std::iota(masks.begin(), masks.end(), std::uint64_t{0});
  std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb)
      return ca < cb;
    while (a != 0 && b != 0) {
      int ia = std::countr_zero(a), ib = std::countr_zero(b);
      if (ia != ib)
        return ia < ib;
      a &= a - 1;
      b &= b - 1;
    }
    return false;
  });
  return masks;
}

} // namespace dpp

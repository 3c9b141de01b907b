#ifndef DPP_SUBSET_HPP
#define DPP_SUBSET_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace dpp {

/// A finite set of 0-based ground-set indices, kept strictly increasing.
///
/// Doubles as a point configuration, a restriction domain, and a Fock basis
/// label. Range checks against a ground-set size happen at use sites via
/// `check_range`, since a subset on its own does not know `n`.
class Subset {
public:
  Subset() = default;
  Subset(std::initializer_list<int> indices);
  /// Sorts the input; duplicates or negative entries raise InvalidSubset.
  explicit Subset(std::vector<int> indices);

  static Subset from_mask(std::uint64_t mask);
  static Subset full(int n);
  /// Parses "0,2,3" (whitespace tolerated). The empty string is the empty set.
  static Subset parse(std::string_view text);

  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  const std::vector<int> &indices() const noexcept { return indices_; }
  int operator[](std::size_t i) const { return indices_[i]; }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }

  bool contains(int index) const;
  /// Largest index + 1, or 0 for the empty set.
  int bound() const noexcept { return indices_.empty() ? 0 : indices_.back() + 1; }

  /// Bit i set iff i is a member. Requires every index < 64.
  std::uint64_t mask() const;
  /// Throws IndexOutOfRange unless every index lies in [0, n).
  void check_range(int n) const;

  /// "0,2,3"; the empty set serializes as "".
  std::string to_string() const;

  friend auto operator<=>(const Subset &, const Subset &) = default;
  friend bool operator==(const Subset &, const Subset &) = default;

private:
  std::vector<int> indices_;
};

/// Fock basis order: by cardinality, then lexicographic on the sorted indices.
bool fock_order_less(const Subset &a, const Subset &b);

/// All 2^n masks over [0, n) sorted in Fock basis order.
std::vector<std::uint64_t> fock_order_masks(int n);

} // namespace dpp

#endif // DPP_SUBSET_HPP

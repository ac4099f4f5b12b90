#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace framekit {

/// A subset I of the index set J = {0, ..., n-1}, stored sorted and unique.
class IndexSubset {
 public:
  IndexSubset() = default;
  explicit IndexSubset(std::vector<std::size_t> indices);

  /// Members are the set bits of `mask` among the low `n` bits.
  static IndexSubset from_mask(std::uint64_t mask, std::size_t n);
  static IndexSubset all(std::size_t n);

  const std::vector<std::size_t>& indices() const { return indices_; }
  bool empty() const { return indices_.empty(); }
  std::size_t size() const { return indices_.size(); }
  bool contains(std::size_t j) const;

  /// Throws IndexOutOfRange when some member is >= n.
  void validate(std::size_t n) const;
  IndexSubset complement(std::size_t n) const;

  /// "{0,2,3}"
  std::string to_string() const;

  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  friend bool operator==(const IndexSubset&, const IndexSubset&) = default;

 private:
  std::vector<std::size_t> indices_;
};

}  // namespace framekit

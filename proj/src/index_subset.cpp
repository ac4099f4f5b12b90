#include "framekit/index_subset.hpp"

#include <algorithm>

#include "framekit/errors.hpp"

namespace framekit {

IndexSubset::IndexSubset(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

IndexSubset IndexSubset::from_mask(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n && j < 64; ++j) {
    if (mask & (std::uint64_t{1} << j)) out.push_back(j);
  }
  return IndexSubset(std::move(out));
}

IndexSubset IndexSubset::all(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = j;
  return IndexSubset(std::move(out));
}

bool IndexSubset::contains(std::size_t j) const {
  return std::binary_search(indices_.begin(), indices_.end(), j);
}

void IndexSubset::validate(std::size_t n) const {
  if (!indices_.empty() && indices_.back() >= n) {
    throw FrameError(ErrorCode::IndexOutOfRange,
                     "index " + std::to_string(indices_.back()) + " outside a family of " + std::to_string(n));
  }
}

IndexSubset IndexSubset::complement(std::size_t n) const {
  validate(n);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n; ++j) {
    if (!contains(j)) out.push_back(j);
  }
  return IndexSubset(std::move(out));
}

std::string IndexSubset::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(indices_[i]);
  }
  return s + "}";
}

}  // namespace framekit

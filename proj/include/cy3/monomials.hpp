#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace cy3 {

// Dense enumeration of exponent vectors in n variables with total degree <= D,
// graded by degree and lexicographically descending inside one degree.
// Tables are immutable and shared between all series of the same shape.
class MonomialTable {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  static std::shared_ptr<const MonomialTable> get(int nvars, int degree);

  MonomialTable(int nvars, int degree);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return degrees_.size(); }

  std::span<const int> exponents(std::size_t idx) const {
    return {exps_.data() + idx * static_cast<std::size_t>(nvars_), static_cast<std::size_t>(nvars_)};
  }
  int total_degree(std::size_t idx) const { return degrees_[idx]; }
  // Index range [degree_begin(d), degree_begin(d + 1)) holds the monomials of degree d.
  std::size_t degree_begin(int d) const;

  // npos when the degree exceeds the cap or an exponent is negative.
  std::size_t index_of(std::span<const int> exps) const;
  // Index of exps(i) + exps(j), npos when it exceeds the cap.
  std::size_t product_index(std::size_t i, std::size_t j) const {
    if (degrees_[i] + degrees_[j] > degree_) return npos;
    return static_cast<std::size_t>(lookup_[packed_[i] + packed_[j]]);
  }
  // Index of exps(idx) + delta * e_var, npos if out of range.
  std::size_t shifted(std::size_t idx, int var, int delta) const;

 private:
  int nvars_;
  int degree_;
  std::vector<int> exps_;
  std::vector<int> degrees_;
  std::vector<std::size_t> packed_;
  std::vector<std::int32_t> lookup_;
  std::vector<std::size_t> degree_starts_;
  std::vector<std::size_t> radix_;
};

}  // namespace cy3

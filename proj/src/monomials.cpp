#include "cy3/monomials.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "cy3/error.hpp"

namespace cy3 {

namespace {

void enumerate(int nvars, int remaining, int var, std::vector<int>& current,
               std::vector<int>& out) {
  if (var == nvars - 1) {
    current[var] = remaining;
    out.insert(out.end(), current.begin(), current.end());
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[var] = e;
    enumerate(nvars, remaining - e, var + 1, current, out);
  }
}

}  // namespace

std::shared_ptr<const MonomialTable> MonomialTable::get(int nvars, int degree) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const MonomialTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{nvars, degree}];
  if (!slot) slot = std::make_shared<const MonomialTable>(nvars, degree);
  return slot;
}

MonomialTable::MonomialTable(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars < 0 || degree < 0) raise(ErrorKind::InvalidArgument, "negative series shape");
  // Packed codes use radix 2D+1 so that the code of a sum of two in-range
  // exponent vectors is the sum of their codes.
  radix_.assign(static_cast<std::size_t>(nvars), 1);
  std::size_t span2 = 1;
  for (int j = 0; j < nvars; ++j) {
    radix_[static_cast<std::size_t>(j)] = span2;
    span2 *= static_cast<std::size_t>(2 * degree + 1);
    if (span2 > (std::size_t{1} << 26)) {
      raise(ErrorKind::InvalidArgument, "series shape too large for dense storage");
    }
  }
  lookup_.assign(span2, -1);

  degree_starts_.push_back(0);
  if (nvars == 0) {
    degrees_.push_back(0);
    packed_.push_back(0);
    lookup_[0] = 0;
    degree_starts_.assign(static_cast<std::size_t>(degree) + 2, 1);
    degree_starts_[0] = 0;
    return;
  }
  std::vector<int> current(static_cast<std::size_t>(nvars), 0);
  for (int d = 0; d <= degree; ++d) {
    enumerate(nvars, d, 0, current, exps_);
    const std::size_t count = exps_.size() / static_cast<std::size_t>(nvars);
    while (degrees_.size() < count) degrees_.push_back(d);
    degree_starts_.push_back(count);
  }
  packed_.resize(degrees_.size());
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    std::size_t code = 0;
    for (int j = 0; j < nvars; ++j) {
      code += static_cast<std::size_t>(exps_[i * static_cast<std::size_t>(nvars) + static_cast<std::size_t>(j)]) *
              radix_[static_cast<std::size_t>(j)];
    }
    packed_[i] = code;
    lookup_[code] = static_cast<std::int32_t>(i);
  }
}

std::size_t MonomialTable::degree_begin(int d) const {
  if (d <= 0) return 0;
  if (d > degree_) return size();
  return degree_starts_[static_cast<std::size_t>(d)];
}

std::size_t MonomialTable::index_of(std::span<const int> exps) const {
  if (static_cast<int>(exps.size()) != nvars_) return npos;
  int total = 0;
  std::size_t code = 0;
  for (int j = 0; j < nvars_; ++j) {
    const int e = exps[static_cast<std::size_t>(j)];
    if (e < 0) return npos;
    total += e;
    if (total > degree_) return npos;
    code += static_cast<std::size_t>(e) * radix_[static_cast<std::size_t>(j)];
  }
  const auto idx = lookup_[code];
  return idx < 0 ? npos : static_cast<std::size_t>(idx);
}

std::size_t MonomialTable::shifted(std::size_t idx, int var, int delta) const {
  const auto e = exps_[idx * static_cast<std::size_t>(nvars_) + static_cast<std::size_t>(var)];
  if (e + delta < 0 || degrees_[idx] + delta > degree_) return npos;
  const auto code = static_cast<std::ptrdiff_t>(packed_[idx]) +
                    delta * static_cast<std::ptrdiff_t>(radix_[static_cast<std::size_t>(var)]);
  const auto r = lookup_[static_cast<std::size_t>(code)];
  return r < 0 ? npos : static_cast<std::size_t>(r);
}

}  // namespace cy3

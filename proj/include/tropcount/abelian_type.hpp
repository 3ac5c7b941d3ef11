#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tropcount/bigint.hpp"

namespace tropcount {

/// Invariant factors (d1 | d2 | ... | dg) of a finite abelian group
/// Z/d1 x ... x Z/dg. Leading 1s are allowed and keep the rank g visible.
class AbelianType {
public:
  AbelianType() = default;
  explicit AbelianType(std::vector<Int> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) raise(ErrorKind::InvalidArgument, "empty type");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i] < 1) raise(ErrorKind::InvalidArgument, "type entries must be positive: " + str());
      if (i > 0 && factors_[i] % factors_[i - 1] != 0)
        raise(ErrorKind::InvalidArgument, "divisibility chain fails in " + str());
    }
  }
  AbelianType(std::initializer_list<long long> f) : AbelianType(std::vector<Int>(f.begin(), f.end())) {}

  const std::vector<Int> &factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  const Int &operator[](std::size_t i) const { return factors_[i]; }

  Int order() const {
    Int n = 1;
    for (const auto &d : factors_) n *= d;
    return n;
  }

  /// The same group with leading 1s dropped (at least one entry kept).
  AbelianType trimmed() const {
    std::size_t k = 0;
    while (k + 1 < factors_.size() && factors_[k] == 1) ++k;
    return AbelianType(std::vector<Int>(factors_.begin() + static_cast<long>(k), factors_.end()));
  }

  bool is_trivial() const { return factors_.back() == 1; }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? "," : "") << factors_[i];
    os << ')';
    return os.str();
  }

  friend bool operator==(const AbelianType &a, const AbelianType &b) { return a.factors_ == b.factors_; }
  friend bool operator!=(const AbelianType &a, const AbelianType &b) { return !(a == b); }
  friend bool operator<(const AbelianType &a, const AbelianType &b) { return a.factors_ < b.factors_; }
  friend std::ostream &operator<<(std::ostream &os, const AbelianType &t) { return os << t.str(); }

private:
  std::vector<Int> factors_;
};

} // namespace tropcount

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace summa {

using Index = std::int64_t;

/// A finite prefix of a real sequence, x_start, x_{start+1}, ..., with every
/// value finite. Indices are absolute; there is no implicit 0- or 1-basing.
class RealSequence {
 public:
  RealSequence(Index start, std::vector<double> values);

  Index start() const noexcept { return start_; }
  /// Last covered index (inclusive).
  Index last() const noexcept { return start_ + static_cast<Index>(values_.size()) - 1; }
  std::size_t size() const noexcept { return values_.size(); }
  bool covers(Index first, Index last_index) const noexcept {
    return first >= start_ && last_index <= last() && first <= last_index;
  }

  /// Value at absolute index n. Throws InvalidArgument when n is not covered.
  double at(Index n) const;
  /// Unchecked absolute-index access.
  double operator[](Index n) const noexcept { return values_[static_cast<std::size_t>(n - start_)]; }

  std::span<const double> values() const noexcept { return values_; }

  /// Sub-range [first, last_index], both inclusive and covered.
  RealSequence slice(Index first, Index last_index) const;

  bool operator==(const RealSequence&) const = default;

 private:
  Index start_;
  std::vector<double> values_;
};

/// Element-wise product over the common index range of x and y.
RealSequence pointwise_product(const RealSequence& x, const RealSequence& y);

/// Element-wise absolute value.
RealSequence abs(const RealSequence& x);

/// Names a closed-form family and the prefix to draw from it.
struct SequenceSpec {
  std::string family;
  std::map<std::string, double> params;
  Index n = 1;
  Index start = 0;

  bool operator==(const SequenceSpec&) const = default;
};

struct FamilyInfo {
  std::string_view name;
  std::string_view formula;
  std::string_view params;
};

/// The fixed catalog of closed-form families.
std::span<const FamilyInfo> family_catalog() noexcept;

/// First `spec.n` terms of the named family starting at `spec.start`.
/// Throws InvalidArgument for an unknown family, an unknown parameter, or a
/// parameter outside the family's domain.
RealSequence materialize(const SequenceSpec& spec);

/// Forward difference with the convention (Δx)_v = x_v - x_{v+1}; order 2
/// applies it twice. The result starts at the same index and is `order`
/// terms shorter.
RealSequence forward_difference(const RealSequence& seq, int order = 1);

/// Exponent bundle shared by the transforms and functionals.
struct CesaroParams {
  double alpha = 1.0;
  double k = 1.0;
  double beta = 0.0;
  double epsilon = 1.0;

  /// Throws InvalidArgument unless alpha > -1, k >= 1, beta >= 0, epsilon > 0.
  void validate() const;

  bool operator==(const CesaroParams&) const = default;
};

}  // namespace summa

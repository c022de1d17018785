#include "summa/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "summa/errors.hpp"

namespace summa {

RealSequence::RealSequence(Index start, std::vector<double> values)
    : start_(start), values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgument("RealSequence: empty sequence");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw InvalidArgument("RealSequence: non-finite value at index " +
                            std::to_string(start_ + static_cast<Index>(i)));
    }
  }
}

double RealSequence::at(Index n) const {
  if (n < start_ || n > last()) {
    throw InvalidArgument("RealSequence: index " + std::to_string(n) + " outside [" +
                          std::to_string(start_) + ", " + std::to_string(last()) + "]");
  }
  return (*this)[n];
}

RealSequence RealSequence::slice(Index first, Index last_index) const {
  if (!covers(first, last_index)) {
    throw InvalidArgument("RealSequence: slice [" + std::to_string(first) + ", " +
                          std::to_string(last_index) + "] not covered");
  }
  const auto b = values_.begin() + (first - start_);
  return RealSequence(first, std::vector<double>(b, b + (last_index - first + 1)));
}

RealSequence pointwise_product(const RealSequence& x, const RealSequence& y) {
  const Index first = std::max(x.start(), y.start());
  const Index last = std::min(x.last(), y.last());
  if (first > last) throw InvalidArgument("pointwise_product: disjoint index ranges");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(last - first + 1));
  for (Index n = first; n <= last; ++n) out.push_back(x[n] * y[n]);
  return RealSequence(first, std::move(out));
}

RealSequence abs(const RealSequence& x) {
  std::vector<double> out(x.values().begin(), x.values().end());
  for (auto& v : out) v = std::abs(v);
  return RealSequence(x.start(), std::move(out));
}

namespace {

using Params = std::map<std::string, double>;

struct Family {
  FamilyInfo info;
  std::vector<std::pair<std::string, double>> defaults;
  // Throws on a domain violation for the index range [first, last].
  std::function<void(const Params&, Index, Index)> check;
  std::function<double(const Params&, Index)> term;
};

[[noreturn]] void domain_error(std::string_view family, const std::string& what) {
  throw InvalidArgument("family '" + std::string(family) + "': " + what);
}

const std::vector<Family>& families() {
  static const std::vector<Family> table = [] {
    std::vector<Family> t;
    auto none = [](const Params&, Index, Index) {};
    t.push_back({{"alternating_unit", "(-1)^n", ""},
                 {},
                 none,
                 [](const Params&, Index n) { return n % 2 == 0 ? 1.0 : -1.0; }});
    t.push_back({{"unit_tail", "0 at n=0, 1 for n>=1", ""},
                 {},
                 none,
                 [](const Params&, Index n) { return n == 0 ? 0.0 : 1.0; }});
    t.push_back({{"power_decay", "c*(n+c0)^(-p)", "c=1, c0=1, p=1"},
                 {{"c", 1.0}, {"c0", 1.0}, {"p", 1.0}},
                 [](const Params& p, Index first, Index) {
                   if (static_cast<double>(first) + p.at("c0") <= 0.0) {
                     domain_error("power_decay", "n + c0 must be positive on the whole range");
                   }
                 },
                 [](const Params& p, Index n) {
                   return p.at("c") * std::pow(static_cast<double>(n) + p.at("c0"), -p.at("p"));
                 }});
    t.push_back({{"log_shift", "log(n+shift)", "shift=2"},
                 {{"shift", 2.0}},
                 [](const Params& p, Index first, Index) {
                   if (static_cast<double>(first) + p.at("shift") <= 0.0) {
                     domain_error("log_shift", "n + shift must be positive on the whole range");
                   }
                 },
                 [](const Params& p, Index n) { return std::log(static_cast<double>(n) + p.at("shift")); }});
    t.push_back({{"reciprocal_log", "1/log(n+shift)", "shift=2"},
                 {{"shift", 2.0}},
                 [](const Params& p, Index first, Index) {
                   if (static_cast<double>(first) + p.at("shift") <= 1.0) {
                     domain_error("reciprocal_log", "n + shift must exceed 1 on the whole range");
                   }
                 },
                 [](const Params& p, Index n) {
                   return 1.0 / std::log(static_cast<double>(n) + p.at("shift"));
                 }});
    t.push_back({{"almost_inc_example", "n*e^((-1)^n)", ""},
                 {},
                 none,
                 [](const Params&, Index n) {
                   return static_cast<double>(n) * std::exp(n % 2 == 0 ? 1.0 : -1.0);
                 }});
    t.push_back({{"power_weight", "n^q", "q=1"},
                 {{"q", 1.0}},
                 [](const Params& p, Index first, Index) {
                   if (first == 0 && p.at("q") < 0.0) {
                     domain_error("power_weight", "negative q requires start >= 1");
                   }
                 },
                 [](const Params& p, Index n) { return std::pow(static_cast<double>(n), p.at("q")); }});
    return t;
  }();
  return table;
}

}  // namespace

std::span<const FamilyInfo> family_catalog() noexcept {
  static const std::vector<FamilyInfo> infos = [] {
    std::vector<FamilyInfo> v;
    for (const auto& f : families()) v.push_back(f.info);
    return v;
  }();
  return infos;
}

RealSequence materialize(const SequenceSpec& spec) {
  const auto& table = families();
  const auto it = std::find_if(table.begin(), table.end(),
                               [&](const Family& f) { return f.info.name == spec.family; });
  if (it == table.end()) throw InvalidArgument("unknown family '" + spec.family + "'");
  if (spec.n < 1) throw InvalidArgument("family '" + spec.family + "': n must be >= 1");
  if (spec.start < 0) throw InvalidArgument("family '" + spec.family + "': start must be >= 0");

  Params params;
  for (const auto& [name, value] : it->defaults) params[name] = value;
  for (const auto& [name, value] : spec.params) {
    if (!params.contains(name)) domain_error(spec.family, "unknown parameter '" + name + "'");
    if (!std::isfinite(value)) domain_error(spec.family, "parameter '" + name + "' is not finite");
    params[name] = value;
  }
  const Index last = spec.start + spec.n - 1;
  it->check(params, spec.start, last);

  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(spec.n));
  for (Index n = spec.start; n <= last; ++n) values.push_back(it->term(params, n));
  return RealSequence(spec.start, std::move(values));
}

RealSequence forward_difference(const RealSequence& seq, int order) {
  if (order != 1 && order != 2) throw InvalidArgument("forward_difference: order must be 1 or 2");
  if (seq.size() < static_cast<std::size_t>(order) + 1) {
    throw InvalidArgument("forward_difference: sequence too short for order " + std::to_string(order));
  }
  auto v = seq.values();
  std::vector<double> out(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) out[i] = v[i] - v[i + 1];
  RealSequence first(seq.start(), std::move(out));
  return order == 1 ? first : forward_difference(first, 1);
}

void CesaroParams::validate() const {
  if (!(alpha > -1.0)) throw InvalidArgument("alpha must exceed -1");
  if (!(k >= 1.0)) throw InvalidArgument("k must be >= 1");
  if (!(beta >= 0.0)) throw InvalidArgument("beta must be >= 0");
  if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be positive");
  if (!std::isfinite(alpha) || !std::isfinite(k) || !std::isfinite(beta) || !std::isfinite(epsilon)) {
    throw InvalidArgument("Cesaro parameters must be finite");
  }
}

}  // namespace summa

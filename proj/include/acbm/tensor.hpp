#pragma once

#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acbm/expr.hpp"
#include "acbm/linalg.hpp"

namespace acbm {

enum class Slot { Upper, Lower };

// Constant symmetric frame metric with its exact inverse.
struct MetricData {
  RationalMatrix g;
  RationalMatrix ginv;
  static MetricData from_matrix(RationalMatrix g);  // throws if singular or asymmetric
  int dim() const { return static_cast<int>(g.size()); }
};

// Dense tensor of ScalarExpr components in a fixed frame. Slots carry their
// own variance, so index order is free; by convention operator-like tensors
// here order argument slots first and the value (upper) slot last.
class FrameTensor {
 public:
  FrameTensor() = default;
  FrameTensor(SymbolTablePtr table, int dim, std::vector<Slot> slots);

  static FrameTensor build(SymbolTablePtr table, int dim, std::vector<Slot> slots,
                           const std::function<ScalarExpr(std::span<const int>)>& f);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(slots_.size()); }
  const std::vector<Slot>& slots() const { return slots_; }
  const SymbolTablePtr& table() const { return table_; }

  const ScalarExpr& at(std::span<const int> idx) const;
  ScalarExpr& at(std::span<const int> idx);
  const ScalarExpr& at(std::initializer_list<int> idx) const;
  ScalarExpr& at(std::initializer_list<int> idx);

  bool is_zero() const;
  FrameTensor operator-() const;
  FrameTensor& operator+=(const FrameTensor& rhs);
  FrameTensor& operator-=(const FrameTensor& rhs);
  FrameTensor scaled(const ScalarExpr& s) const;
  FrameTensor scaled(const Rational& s) const;

  // Contracts slots a and b. Lower/lower uses metric.ginv; upper/lower sums
  // the Kronecker trace; upper/upper is rejected (never needed here and a
  // metric-lowering would hide intent).
  FrameTensor contract(int slot_a, int slot_b, const MetricData& metric) const;

  // Flat iteration helpers: total component count and index decoding.
  int size() const { return static_cast<int>(comps_.size()); }
  std::vector<int> unflatten(int flat) const;
  const ScalarExpr& flat_at(int i) const { return comps_[i]; }
  ScalarExpr& flat_at(int i) { return comps_[i]; }

  // "name[i,j,...] = expr" lines, 1-based indices, zeros omitted, ascending
  // index order; "name = 0" when the tensor vanishes.
  std::string component_list(std::string_view name) const;

  friend bool operator==(const FrameTensor& a, const FrameTensor& b);
  friend bool operator!=(const FrameTensor& a, const FrameTensor& b) { return !(a == b); }

 private:
  int flatten(std::span<const int> idx) const;

  SymbolTablePtr table_;
  int dim_ = 0;
  std::vector<Slot> slots_;
  std::vector<ScalarExpr> comps_;
};

FrameTensor operator+(FrameTensor a, const FrameTensor& b);
FrameTensor operator-(FrameTensor a, const FrameTensor& b);

}  // namespace acbm

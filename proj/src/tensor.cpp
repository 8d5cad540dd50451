#include "acbm/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace acbm {

MetricData MetricData::from_matrix(RationalMatrix g) {
  const int n = static_cast<int>(g.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(g[i].size()) != n) throw std::invalid_argument("metric is not square");
    for (int j = 0; j < i; ++j)
      if (g[i][j] != g[j][i]) throw std::invalid_argument("metric is not symmetric");
  }
  auto inv = invert(g);
  if (!inv) throw std::invalid_argument("metric is singular");
  return MetricData{std::move(g), std::move(*inv)};
}

namespace {
int power(int base, int exp) {
  int v = 1;
  while (exp-- > 0) v *= base;
  return v;
}
}  // namespace

FrameTensor::FrameTensor(SymbolTablePtr table, int dim, std::vector<Slot> slots)
    : table_(std::move(table)), dim_(dim), slots_(std::move(slots)) {
  if (dim_ <= 0) throw std::invalid_argument("tensor dimension must be positive");
  comps_.assign(power(dim_, static_cast<int>(slots_.size())), ScalarExpr(table_));
}

FrameTensor FrameTensor::build(SymbolTablePtr table, int dim, std::vector<Slot> slots,
                               const std::function<ScalarExpr(std::span<const int>)>& f) {
  FrameTensor t(std::move(table), dim, std::move(slots));
  for (int i = 0; i < t.size(); ++i) {
    auto idx = t.unflatten(i);
    t.comps_[i] = f(idx);
  }
  return t;
}

int FrameTensor::flatten(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != rank()) throw std::invalid_argument("wrong index rank");
  int flat = 0;
  for (int k = 0; k < rank(); ++k) {
    if (idx[k] < 0 || idx[k] >= dim_) throw std::out_of_range("tensor index out of range");
    flat = flat * dim_ + idx[k];
  }
  return flat;
}

std::vector<int> FrameTensor::unflatten(int flat) const {
  std::vector<int> idx(rank());
  for (int k = rank() - 1; k >= 0; --k) {
    idx[k] = flat % dim_;
    flat /= dim_;
  }
  return idx;
}

const ScalarExpr& FrameTensor::at(std::span<const int> idx) const { return comps_[flatten(idx)]; }
ScalarExpr& FrameTensor::at(std::span<const int> idx) { return comps_[flatten(idx)]; }
const ScalarExpr& FrameTensor::at(std::initializer_list<int> idx) const {
  return comps_[flatten(std::span<const int>(idx.begin(), idx.size()))];
}
ScalarExpr& FrameTensor::at(std::initializer_list<int> idx) {
  return comps_[flatten(std::span<const int>(idx.begin(), idx.size()))];
}

bool FrameTensor::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

FrameTensor FrameTensor::operator-() const {
  FrameTensor out = *this;
  for (auto& c : out.comps_) c = -c;
  return out;
}

namespace {
void require_same_shape(const FrameTensor& a, const FrameTensor& b) {
  if (a.dim() != b.dim() || a.slots() != b.slots())
    throw std::invalid_argument("tensor shape mismatch");
}
}  // namespace

FrameTensor& FrameTensor::operator+=(const FrameTensor& rhs) {
  require_same_shape(*this, rhs);
  for (int i = 0; i < size(); ++i) comps_[i] += rhs.comps_[i];
  return *this;
}

FrameTensor& FrameTensor::operator-=(const FrameTensor& rhs) {
  require_same_shape(*this, rhs);
  for (int i = 0; i < size(); ++i) comps_[i] -= rhs.comps_[i];
  return *this;
}

FrameTensor FrameTensor::scaled(const ScalarExpr& s) const {
  FrameTensor out = *this;
  for (auto& c : out.comps_) c *= s;
  return out;
}

FrameTensor FrameTensor::scaled(const Rational& s) const {
  FrameTensor out = *this;
  for (auto& c : out.comps_) c *= s;
  return out;
}

FrameTensor FrameTensor::contract(int slot_a, int slot_b, const MetricData& metric) const {
  if (slot_a == slot_b || slot_a < 0 || slot_b < 0 || slot_a >= rank() || slot_b >= rank())
    throw std::invalid_argument("invalid contraction slots");
  if (slot_a > slot_b) std::swap(slot_a, slot_b);
  const Slot va = slots_[slot_a], vb = slots_[slot_b];
  if (va == Slot::Upper && vb == Slot::Upper)
    throw std::invalid_argument("upper/upper contraction not supported");
  const bool both_lower = va == Slot::Lower && vb == Slot::Lower;
  if (both_lower && metric.dim() != dim_) throw std::invalid_argument("metric dimension mismatch");

  std::vector<Slot> out_slots;
  for (int k = 0; k < rank(); ++k)
    if (k != slot_a && k != slot_b) out_slots.push_back(slots_[k]);
  FrameTensor out(table_, dim_, std::move(out_slots));
  for (int flat = 0; flat < out.size(); ++flat) {
    auto rest = out.unflatten(flat);
    ScalarExpr sum(table_);
    std::vector<int> idx(rank());
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) {
        if (!both_lower && i != j) continue;
        int r = 0;
        for (int k = 0; k < rank(); ++k) {
          if (k == slot_a)
            idx[k] = i;
          else if (k == slot_b)
            idx[k] = j;
          else
            idx[k] = rest[r++];
        }
        const ScalarExpr& term = at(std::span<const int>(idx));
        if (term.is_zero()) continue;
        if (both_lower) {
          if (metric.ginv[i][j] == 0) continue;
          ScalarExpr scaled = term;
          scaled *= metric.ginv[i][j];
          sum += scaled;
        } else {
          sum += term;
        }
      }
    }
    out.comps_[flat] = sum;
  }
  return out;
}

std::string FrameTensor::component_list(std::string_view name) const {
  std::ostringstream out;
  bool any = false;
  for (int flat = 0; flat < size(); ++flat) {
    const auto& c = comps_[flat];
    if (c.is_zero()) continue;
    auto idx = unflatten(flat);
    out << name << "[";
    for (int k = 0; k < rank(); ++k) out << (k ? "," : "") << idx[k] + 1;
    out << "] = " << c.to_string() << "\n";
    any = true;
  }
  if (!any) out << name << " = 0\n";
  return out.str();
}

bool operator==(const FrameTensor& a, const FrameTensor& b) {
  if (a.dim() != b.dim() || a.slots() != b.slots()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a.flat_at(i) != b.flat_at(i)) return false;
  return true;
}

FrameTensor operator+(FrameTensor a, const FrameTensor& b) { return a += b; }
FrameTensor operator-(FrameTensor a, const FrameTensor& b) { return a -= b; }

}  // namespace acbm

#include "arbkk/chart.hpp"

#include <algorithm>

#include "arbkk/errors.hpp"

namespace arbkk {

AffineChart::AffineChart(const std::vector<RatVector>& points) {
  if (points.empty()) throw DomainError("affine chart of an empty point set");
  ambient_ = static_cast<int>(points[0].size());
  const RatVector& base = points[0];
  std::vector<RatVector> rows;
  std::vector<int> pivots;
  basis_.push_back(0);
  for (std::size_t i = 1; i < points.size() && static_cast<int>(rows.size()) < ambient_; ++i) {
    if (static_cast<int>(points[i].size()) != ambient_)
      throw DimensionError("points of different dimensions");
    RatVector v = sub(points[i], base);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rat& c = v[pivots[r]];
      if (c == 0) continue;
      Rat f = c / rows[r][pivots[r]];
      for (int j = 0; j < ambient_; ++j) v[j] -= f * rows[r][j];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rat& c) { return c != 0; });
    if (it == v.end()) continue;
    pivots.push_back(static_cast<int>(it - v.begin()));
    rows.push_back(std::move(v));
    basis_.push_back(static_cast<int>(i));
  }
  const int k = static_cast<int>(rows.size());
  // Keep chart coordinates ascending; permute rows along.
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pivots[a] < pivots[b]; });
  for (int i : order) coords_.push_back(pivots[i]);

  if (k == ambient_) {
    a_.assign(ambient_, zeros(k));
    for (int i = 0; i < k; ++i) a_[i][i] = 1;
    b_ = zeros(ambient_);
    return;
  }
  // A = R^T (R_S^T)^{-1}
  std::vector<RatVector> rst(k, RatVector(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) rst[j][i] = rows[i][coords_[j]];
  std::vector<RatVector> inv(k, RatVector(k));
  for (int col = 0; col < k; ++col) {
    RatVector e = zeros(k);
    e[col] = 1;
    RatVector x = solve(rst, e);
    for (int i = 0; i < k; ++i) inv[i][col] = x[i];
  }
  a_.assign(ambient_, zeros(k));
  for (int r = 0; r < ambient_; ++r)
    for (int c = 0; c < k; ++c) {
      Rat s = 0;
      for (int i = 0; i < k; ++i) s += rows[i][r] * inv[i][c];
      a_[r][c] = s;
    }
  b_ = base;
  for (int r = 0; r < ambient_; ++r)
    for (int c = 0; c < k; ++c) b_[r] -= a_[r][c] * base[coords_[c]];
}

AffineChart AffineChart::scaled(const Rat& factor) const {
  AffineChart c = *this;
  c.b_ = scale(b_, factor);
  return c;
}

RatVector AffineChart::project(const RatVector& x) const {
  RatVector y(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) y[i] = x[coords_[i]];
  return y;
}

RatVector AffineChart::lift(const RatVector& y) const {
  RatVector x = b_;
  for (int r = 0; r < ambient_; ++r)
    for (std::size_t c = 0; c < coords_.size(); ++c) x[r] += a_[r][c] * y[c];
  return x;
}

bool AffineChart::contains(const RatVector& x) const {
  return static_cast<int>(x.size()) == ambient_ && lift(project(x)) == x;
}

std::pair<RatVector, Rat> AffineChart::pull_back(const RatVector& u, const Rat& c) const {
  RatVector slope = zeros(coords_.size());
  for (std::size_t j = 0; j < coords_.size(); ++j)
    for (int r = 0; r < ambient_; ++r) slope[j] += u[r] * a_[r][j];
  return {slope, c + dot(u, b_)};
}

RatVector AffineChart::push_forward(const RatVector& slope) const {
  RatVector u = zeros(ambient_);
  for (std::size_t j = 0; j < coords_.size(); ++j) u[coords_[j]] = slope[j];
  return u;
}

std::vector<std::pair<RatVector, Rat>> AffineChart::equations() const {
  std::vector<std::pair<RatVector, Rat>> eqs;
  std::vector<bool> in_chart(ambient_, false);
  for (int c : coords_) in_chart[c] = true;
  for (int r = 0; r < ambient_; ++r) {
    if (in_chart[r]) continue;
    RatVector a = zeros(ambient_);
    a[r] = 1;
    for (std::size_t c = 0; c < coords_.size(); ++c) a[coords_[c]] -= a_[r][c];
    eqs.emplace_back(std::move(a), b_[r]);
  }
  return eqs;
}

}  // namespace arbkk

#include "acbm/oracle.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace acbm {

namespace {

using Mat = std::vector<std::vector<double>>;

Mat invert_numeric(Mat m) {
  const int n = static_cast<int>(m.size());
  Mat inv(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
    if (std::abs(m[pivot][c]) < 1e-12) throw std::domain_error("singular matrix in numeric oracle");
    std::swap(m[pivot], m[c]);
    std::swap(inv[pivot], inv[c]);
    const double d = m[c][c];
    for (int k = 0; k < n; ++k) {
      m[c][k] /= d;
      inv[c][k] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = m[r][c];
      if (f == 0.0) continue;
      for (int k = 0; k < n; ++k) {
        m[r][k] -= f * m[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

Mat frame_matrix_at(const ManifoldSpec& spec, const std::vector<double>& point) {
  if (!spec.realization)
    throw std::domain_error("numeric oracle requires a coordinate realization");
  const int d = spec.dim;
  Mat a(d, std::vector<double>(d));
  for (int i = 0; i < d; ++i)
    for (int c = 0; c < d; ++c) a[i][c] = spec.realization->a[i][c].evaluate(point);
  return a;
}

// Christoffel symbols of the coordinate metric at a point, via central
// differences of the metric components.
std::vector<double> christoffel_at(const ManifoldSpec& spec, const std::vector<double>& point,
                                   double step) {
  const int d = spec.dim;
  Mat g = coordinate_metric_numeric(spec, point);
  Mat ginv = invert_numeric(g);
  // dg[a][b][c] = d g_bc / d x_a
  std::vector<double> dg(d * d * d);
  for (int a = 0; a < d; ++a) {
    std::vector<double> hi = point, lo = point;
    hi[a] += step;
    lo[a] -= step;
    Mat ghi = coordinate_metric_numeric(spec, hi);
    Mat glo = coordinate_metric_numeric(spec, lo);
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        dg[(a * d + b) * d + c] = (ghi[b][c] - glo[b][c]) / (2.0 * step);
  }
  std::vector<double> gamma(d * d * d);  // [a][b][c] = Gamma^c_{ab}
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        double sum = 0.0;
        for (int e = 0; e < d; ++e)
          sum += ginv[e][c] * (dg[(a * d + e) * d + b] + dg[(b * d + e) * d + a] -
                               dg[(e * d + a) * d + b]);
        gamma[(a * d + b) * d + c] = 0.5 * sum;
      }
  return gamma;
}

}  // namespace

std::vector<std::vector<double>> coordinate_metric_numeric(const ManifoldSpec& spec,
                                                           const std::vector<double>& point) {
  const int d = spec.dim;
  Mat b = invert_numeric(frame_matrix_at(spec, point));
  Mat g(d, std::vector<double>(d, 0.0));
  for (int a = 0; a < d; ++a)
    for (int c = 0; c < d; ++c) {
      double sum = 0.0;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          sum += to_double(spec.metric.g[i][j]) * b[a][i] * b[c][j];
      g[a][c] = sum;
    }
  return g;
}

std::vector<double> numeric_curvature_r04(const ManifoldSpec& spec,
                                          const std::vector<double>& point, double step) {
  const int d = spec.dim;
  std::vector<double> gamma = christoffel_at(spec, point, step);

  // dgamma[a][b][c][e] = d Gamma^e_{bc} / d x_a, by a second central difference.
  std::vector<double> dgamma(d * d * d * d);
  for (int a = 0; a < d; ++a) {
    std::vector<double> hi = point, lo = point;
    hi[a] += step;
    lo[a] -= step;
    std::vector<double> ghi = christoffel_at(spec, hi, step);
    std::vector<double> glo = christoffel_at(spec, lo, step);
    for (int idx = 0; idx < d * d * d; ++idx)
      dgamma[a * d * d * d + idx] = (ghi[idx] - glo[idx]) / (2.0 * step);
  }

  auto gam = [&](int a, int b, int c) { return gamma[(a * d + b) * d + c]; };
  // R(d_a, d_b) d_c = nab_a nab_b d_c - nab_b nab_a d_c; coordinate brackets vanish.
  std::vector<double> r13(d * d * d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e) {
          double v = dgamma[((a * d + b) * d + c) * d + e] - dgamma[((b * d + a) * d + c) * d + e];
          for (int m = 0; m < d; ++m) v += gam(b, c, m) * gam(a, m, e) - gam(a, c, m) * gam(b, m, e);
          r13[((a * d + b) * d + c) * d + e] = v;
        }

  Mat g = coordinate_metric_numeric(spec, point);
  std::vector<double> r04(d * d * d * d, 0.0);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int w = 0; w < d; ++w) {
          double v = 0.0;
          for (int e = 0; e < d; ++e) v += r13[((a * d + b) * d + c) * d + e] * g[e][w];
          r04[((a * d + b) * d + c) * d + w] = v;
        }

  // Pull back to the moving frame at the point.
  Mat A = frame_matrix_at(spec, point);
  std::vector<double> out(d * d * d * d, 0.0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          double v = 0.0;
          for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
              for (int c = 0; c < d; ++c)
                for (int w = 0; w < d; ++w)
                  v += A[i][a] * A[j][b] * A[k][c] * A[l][w] * r04[((a * d + b) * d + c) * d + w];
          out[((i * d + j) * d + k) * d + l] = v;
        }
  return out;
}

OracleResult oracle_compare(const ManifoldSpec& spec, const CurvatureBundle& bundle,
                            const std::vector<std::vector<double>>& points, double step) {
  const int d = spec.dim;
  OracleResult result;
  for (const auto& point : points) {
    std::vector<double> numeric = numeric_curvature_r04(spec, point, step);
    for (int flat = 0; flat < d * d * d * d; ++flat) {
      const double exact = bundle.r04.flat_at(flat).evaluate(point);
      result.max_abs_diff = std::max(result.max_abs_diff, std::abs(exact - numeric[flat]));
    }
    ++result.points_checked;
  }
  return result;
}

std::vector<std::vector<double>> oracle_default_points(const ManifoldSpec& spec, int count,
                                                      unsigned seed) {
  const int nc = spec.table->coordinate_count();
  if (nc == 0) throw std::domain_error("numeric oracle requires coordinates");
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-0.8, 0.8);
  std::vector<std::vector<double>> points(count, std::vector<double>(nc));
  for (auto& p : points)
    for (auto& x : p) x = dist(rng);
  return points;
}

}  // namespace acbm

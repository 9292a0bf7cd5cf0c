#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace oracle {

double binomial(unsigned n, unsigned k) {
  double r = 1.0;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

Rational binomial_exact(unsigned n, unsigned k) {
  Rational r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double multinomial(unsigned n, const std::vector<unsigned>& parts) {
  double r = std::tgamma(n + 1.0);
  unsigned used = 0;
  for (unsigned p : parts) {
    r /= std::tgamma(p + 1.0);
    used += p;
  }
  return std::round(r / std::tgamma(n - used + 1.0));
}

double bernstein(unsigned n, unsigned i, double y) {
  return binomial(n, i) * std::pow(y, i) * std::pow(1.0 - y, n - i);
}

double hexagon_phi(double x, double y) { return 2.0 * (3.0 + x * y - x * x - y * y); }

namespace {

template <class T>
std::array<T, 2> g_impl(const T& s, const T& t) {
  const T denom = 2 * s + 2 * t + 3;
  return {2 * s * (2 * s + t + 3) / ((s + 1) * denom), 2 * t * (s + 2 * t + 3) / ((t + 1) * denom)};
}

long gcd_all(long a, long b, long c) { return std::gcd(std::gcd(std::labs(a), std::labs(b)), std::labs(c)); }

}  // namespace

std::array<double, 2> pentagon_g(double s, double t) { return g_impl(s, t); }
std::array<Rational, 2> pentagon_g(const Rational& s, const Rational& t) { return g_impl(s, t); }

std::size_t pentagon_grid_count(std::size_t grid_n) {
  // s = 2i/(n-1), t = 2j/(n-1); s + t <= 3 iff 2(i + j) <= 3(n - 1).
  std::size_t count = 0;
  for (std::size_t i = 0; i < grid_n; ++i) {
    for (std::size_t j = 0; j < grid_n; ++j) {
      if (2 * (i + j) <= 3 * (grid_n - 1)) ++count;
    }
  }
  return count;
}

std::vector<HalfSpace> brute_force_hull(const std::vector<Point>& pts) {
  const std::size_t d = pts.front().size();
  std::vector<HalfSpace> out;
  if (d == 1) {
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
    out.push_back({{1.0}, -(*lo)[0]});
    out.push_back({{-1.0}, (*hi)[0]});
    return out;
  }
  auto sub = [](const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
    return r;
  };
  auto consider = [&](Point normal, const Point& anchor) {
    double norm = 0.0;
    for (double v : normal) norm = std::max(norm, std::fabs(v));
    if (norm < 1e-9) return;
    for (double& v : normal) v /= norm;
    double offset = 0.0;
    for (std::size_t k = 0; k < d; ++k) offset -= normal[k] * anchor[k];
    bool pos = true, neg = true;
    for (const auto& p : pts) {
      double h = offset;
      for (std::size_t k = 0; k < d; ++k) h += normal[k] * p[k];
      pos = pos && h >= -1e-12;
      neg = neg && h <= 1e-12;
    }
    if (pos) out.push_back({normal, offset});
    if (neg) {
      for (double& v : normal) v = -v;
      out.push_back({normal, -offset});
    }
  };
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Point u = sub(pts[j], pts[i]);
      if (d == 2) {
        consider({-u[1], u[0]}, pts[i]);
        continue;
      }
      for (std::size_t k = j + 1; k < n; ++k) {
        Point v = sub(pts[k], pts[i]);
        consider({u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]},
                 pts[i]);
      }
    }
  }
  return out;
}

std::vector<std::pair<std::array<long, 2>, long>> brute_force_facets_2d(
    const std::vector<std::array<long, 2>>& pts) {
  std::set<std::pair<std::array<long, 2>, long>> found;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      long nx = -(pts[j][1] - pts[i][1]);
      long ny = pts[j][0] - pts[i][0];
      long c = -(nx * pts[i][0] + ny * pts[i][1]);
      bool supporting = true;
      for (const auto& p : pts) supporting = supporting && nx * p[0] + ny * p[1] + c >= 0;
      if (!supporting) continue;
      long g = gcd_all(nx, ny, 0);
      found.insert({{nx / g, ny / g}, c / g});
    }
  }
  return {found.begin(), found.end()};
}

Point interior_point(const std::vector<Point>& pts, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> lambda(pts.size());
  double total = 0.0;
  for (double& l : lambda) {
    l = expo(rng) + 1e-3;
    total += l;
  }
  Point x(pts.front().size(), 0.0);
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += lambda[a] / total * pts[a][k];
  }
  return x;
}

std::vector<RationalPoint> random_lattice_config(std::size_t d, std::size_t count, long r,
                                                 std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coord(-r, r);
  for (;;) {
    std::set<std::vector<long>> seen;
    while (seen.size() < count) {
      std::vector<long> p(d);
      for (auto& c : p) c = coord(rng);
      seen.insert(p);
    }
    std::vector<RationalPoint> pts;
    for (const auto& p : seen) {
      RationalPoint q;
      for (long c : p) q.emplace_back(c);
      pts.push_back(q);
    }
    // Full affine rank via exact elimination on the difference vectors.
    std::vector<RationalPoint> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      RationalPoint row(d);
      for (std::size_t k = 0; k < d; ++k) row[k] = pts[i][k] - pts[0][k];
      rows.push_back(row);
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < d && rank < rows.size(); ++col) {
      auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                                [&](const RationalPoint& row) { return row[col] != 0; });
      if (pivot == rows.end()) continue;
      std::iter_swap(rows.begin() + rank, pivot);
      for (std::size_t i = rank + 1; i < rows.size(); ++i) {
        Rational f = rows[i][col] / rows[rank][col];
        for (std::size_t k = col; k < d; ++k) rows[i][k] -= f * rows[rank][k];
      }
      ++rank;
    }
    if (rank == d) {
      std::shuffle(pts.begin(), pts.end(), rng);
      return pts;
    }
  }
}

std::vector<Rational> random_weights(std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 12);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> w;
  for (std::size_t i = 0; i < count; ++i) w.emplace_back(num(rng), den(rng));
  return w;
}

}  // namespace oracle

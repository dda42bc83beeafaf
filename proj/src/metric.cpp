#include "mrclust/metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mrclust/rng.hpp"

namespace mrclust {

namespace {

constexpr std::size_t kExhaustiveTriangleLimit = 1000;
constexpr std::size_t kSampledTriples = 20000;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

double Dataset::sqrt_(double x) { return std::sqrt(x); }

Dataset Dataset::euclidean(std::vector<double> coords, std::size_t dim) {
  require(dim >= 1, "euclidean dataset needs dim >= 1");
  require(!coords.empty() && coords.size() % dim == 0,
          "coordinate count must be a positive multiple of dim");
  for (double c : coords) {
    require(std::isfinite(c), "euclidean coordinates must be finite");
  }
  const std::size_t n = coords.size() / dim;
  return Dataset(Kind::euclidean, std::move(coords), n, dim);
}

Dataset Dataset::explicit_matrix(std::vector<double> matrix, std::size_t n) {
  require(n >= 1, "explicit dataset needs n >= 1");
  require(matrix.size() == n * n, "matrix size must be n*n");
  Dataset ds(Kind::explicit_matrix, std::move(matrix), n, 0);
  ds.validate_matrix();
  return ds;
}

void Dataset::validate_matrix() const {
  const std::vector<double>& m = data_;
  for (std::size_t i = 0; i < n_; ++i) {
    require(m[i * n_ + i] == 0.0, "matrix diagonal must be zero");
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double d = m[i * n_ + j];
      require(std::isfinite(d) && d >= 0.0, "matrix entries must be finite non-negatives");
      require(d == m[j * n_ + i], "matrix must be symmetric");
    }
  }
  auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    // allow for tiny representation error in matrices derived from coordinates
    const double slack = 1e-12 * (1.0 + m[a * n_ + b] + m[b * n_ + c]);
    if (m[a * n_ + c] > m[a * n_ + b] + m[b * n_ + c] + slack) {
      throw std::invalid_argument("matrix violates the triangle inequality");
    }
  };
  if (n_ <= kExhaustiveTriangleLimit) {
    for (std::size_t b = 0; b < n_; ++b)
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t c = 0; c < n_; ++c) check_triple(a, b, c);
  } else {
    Rng rng(0x7a3ce11e);
    for (std::size_t t = 0; t < kSampledTriples; ++t) {
      check_triple(rng.below(n_), rng.below(n_), rng.below(n_));
    }
  }
}

Dataset Dataset::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset file: " + path);
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("empty dataset file: " + path);
  std::istringstream hs(header);
  long long n = 0, d = 0;
  if (!(hs >> n)) throw std::runtime_error("bad dataset header: " + path);
  const bool euclid = static_cast<bool>(hs >> d);
  require(n >= 1, "dataset needs at least one point");
  if (euclid) {
    require(d >= 1, "euclidean dataset needs dim >= 1");
    std::vector<double> coords(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (double& c : coords) {
      if (!(in >> c)) throw std::runtime_error("truncated euclidean dataset: " + path);
    }
    return Dataset::euclidean(std::move(coords), static_cast<std::size_t>(d));
  }
  std::vector<double> matrix(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (double& v : matrix) {
    if (!(in >> v)) throw std::runtime_error("truncated distance matrix: " + path);
  }
  return Dataset::explicit_matrix(std::move(matrix), static_cast<std::size_t>(n));
}

void Dataset::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write dataset file: " + path);
  char buf[32];
  if (kind_ == Kind::euclidean) {
    out << n_ << ' ' << dim_ << '\n';
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        std::snprintf(buf, sizeof buf, "%.17g", data_[i * dim_ + j]);
        out << buf << (j + 1 == dim_ ? '\n' : ' ');
      }
    }
  } else {
    out << n_ << '\n';
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        std::snprintf(buf, sizeof buf, "%.17g", data_[i * n_ + j]);
        out << buf << (j + 1 == n_ ? '\n' : ' ');
      }
    }
  }
}

double Dataset::distance(PointId a, PointId b) const {
  require(a < n_ && b < n_, "point id out of range");
  return distance_unchecked(a, b);
}

double Dataset::distance_to_coords(PointId a, std::span<const double> c) const {
  require(kind_ == Kind::euclidean, "coordinate distance needs a euclidean dataset");
  require(a < n_ && c.size() == dim_, "bad point or coordinate size");
  const double* pa = data_.data() + std::size_t{a} * dim_;
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    const double d = pa[i] - c[i];
    s += d * d;
  }
  return std::sqrt(s);
}

std::span<const double> Dataset::coords(PointId a) const {
  require(kind_ == Kind::euclidean, "coords need a euclidean dataset");
  require(a < n_, "point id out of range");
  return {data_.data() + std::size_t{a} * dim_, dim_};
}

WeightedPointSet WeightedPointSet::unit(std::span<const PointId> pts) {
  std::vector<PointId> p(pts.begin(), pts.end());
  return make(std::move(p), std::vector<std::uint64_t>(pts.size(), 1));
}

WeightedPointSet WeightedPointSet::make(std::vector<PointId> pts,
                                        std::vector<std::uint64_t> ws) {
  require(pts.size() == ws.size(), "points and weights must align");
  for (std::uint64_t w : ws) require(w >= 1, "weights must be >= 1");
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
  WeightedPointSet out;
  out.points.reserve(pts.size());
  out.weights.reserve(ws.size());
  for (std::size_t i : order) {
    out.points.push_back(pts[i]);
    out.weights.push_back(ws[i]);
  }
  for (std::size_t i = 1; i < out.points.size(); ++i) {
    require(out.points[i] != out.points[i - 1], "weighted set points must be distinct");
  }
  return out;
}

std::uint64_t WeightedPointSet::total_weight() const {
  std::uint64_t t = 0;
  for (std::uint64_t w : weights) t += w;
  return t;
}

const char* objective_name(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kcenter: return "kcenter";
    case ObjectiveKind::kmedian: return "kmedian";
    case ObjectiveKind::weighted_kmedian: return "weighted_kmedian";
  }
  return "unknown";
}

std::pair<double, PointId> dist_to_set(const Dataset& ds, PointId x,
                                       std::span<const PointId> centers) {
  require(!centers.empty(), "center set must be non-empty");
  double best = std::numeric_limits<double>::infinity();
  PointId best_id = 0;
  for (PointId c : centers) {
    const double d = ds.distance_unchecked(x, c);
    if (d < best || (d == best && c < best_id)) {
      best = d;
      best_id = c;
    }
  }
  return {best, best_id};
}

double evaluate(const Dataset& ds, std::span<const PointId> centers, ObjectiveKind kind,
                const WeightedPointSet* weighted) {
  require(!centers.empty(), "center set must be non-empty");
  if (kind == ObjectiveKind::weighted_kmedian) {
    require(weighted != nullptr, "weighted objective needs a weighted point set");
    double total = 0.0;
    for (std::size_t i = 0; i < weighted->points.size(); ++i) {
      total += static_cast<double>(weighted->weights[i]) *
               dist_to_set(ds, weighted->points[i], centers).first;
    }
    return total;
  }
  require(weighted == nullptr, "weights are only valid for the weighted objective");
  if (kind == ObjectiveKind::kcenter) {
    double worst = 0.0;
    for (PointId x = 0; x < ds.size(); ++x) {
      worst = std::max(worst, dist_to_set(ds, x, centers).first);
    }
    return worst;
  }
  double total = 0.0;
  for (PointId x = 0; x < ds.size(); ++x) {
    total += dist_to_set(ds, x, centers).first;
  }
  return total;
}

ClusteringSolution make_solution(const Dataset& ds, std::vector<PointId> centers,
                                 ObjectiveKind kind) {
  require(!centers.empty(), "center set must be non-empty");
  require(kind != ObjectiveKind::weighted_kmedian,
          "weighted solutions are built from a weighted point set");
  ClusteringSolution sol;
  sol.objective_kind = kind;
  sol.assignment.resize(ds.size());
  double total = 0.0, worst = 0.0;
  for (PointId x = 0; x < ds.size(); ++x) {
    auto [d, c] = dist_to_set(ds, x, centers);
    sol.assignment[x] = c;
    total += d;
    worst = std::max(worst, d);
  }
  sol.centers = std::move(centers);
  sol.objective = kind == ObjectiveKind::kcenter ? worst : total;
  return sol;
}

ClusteringSolution make_weighted_solution(const Dataset& ds, const WeightedPointSet& ws,
                                          std::vector<PointId> centers) {
  require(!centers.empty(), "center set must be non-empty");
  ClusteringSolution sol;
  sol.objective_kind = ObjectiveKind::weighted_kmedian;
  sol.assignment.resize(ws.points.size());
  double total = 0.0;
  for (std::size_t i = 0; i < ws.points.size(); ++i) {
    auto [d, c] = dist_to_set(ds, ws.points[i], centers);
    sol.assignment[i] = c;
    total += static_cast<double>(ws.weights[i]) * d;
  }
  sol.centers = std::move(centers);
  sol.objective = total;
  return sol;
}

void check_solution(const Dataset& ds, const ClusteringSolution& solution,
                    const WeightedPointSet* weighted) {
  ClusteringSolution fresh =
      solution.objective_kind == ObjectiveKind::weighted_kmedian
          ? make_weighted_solution(ds, *weighted, solution.centers)
          : make_solution(ds, solution.centers, solution.objective_kind);
  if (fresh.assignment != solution.assignment) {
    throw std::runtime_error("solution assignment does not match nearest centers");
  }
  if (fresh.objective != solution.objective) {
    throw std::runtime_error("solution objective does not match its recomputation");
  }
}

std::string ClusteringSolution::to_csv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (i) out << ' ';
    out << centers[i];
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", objective);
  out << ';' << buf;
  return out.str();
}

std::uint64_t dataset_words(const Dataset& ds) {
  if (ds.is_euclidean()) {
    return static_cast<std::uint64_t>(ds.size()) * (ds.dim() + 1);
  }
  return static_cast<std::uint64_t>(ds.size()) * ds.size();
}

}  // namespace mrclust

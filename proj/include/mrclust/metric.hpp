#ifndef MRCLUST_METRIC_HPP
#define MRCLUST_METRIC_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mrclust {

// Dense point index, stable for the lifetime of a Dataset.
using PointId = std::uint32_t;

// Counter for distance evaluations; algorithms charge it at loop granularity
// so simulated work can be reported without instrumenting the hot path.
struct WorkCounter {
  std::uint64_t distance_evals = 0;
  void charge(std::uint64_t n) { distance_evals += n; }
};

// Immutable point set with a metric. Two storage kinds:
//  - euclidean: per-point coordinates, distance is the L2 norm;
//  - explicit_matrix: full n x n distance matrix, validated on load
//    (symmetry, zero diagonal, triangle inequality).
// Safe for concurrent reads once constructed.
class Dataset {
 public:
  enum class Kind { euclidean, explicit_matrix };

  static Dataset euclidean(std::vector<double> coords, std::size_t dim);
  static Dataset explicit_matrix(std::vector<double> matrix, std::size_t n);

  // File formats: euclidean files start with "n d" then n rows of d reals;
  // explicit files start with "n" then n rows of n reals.
  static Dataset load(const std::string& path);
  void save(const std::string& path) const;

  Kind kind() const { return kind_; }
  std::size_t size() const { return n_; }
  std::size_t dim() const { return dim_; }
  bool is_euclidean() const { return kind_ == Kind::euclidean; }

  double distance(PointId a, PointId b) const;

  // Unchecked fast path used by inner loops.
  double distance_unchecked(PointId a, PointId b) const {
    if (kind_ == Kind::euclidean) {
      const double* pa = data_.data() + std::size_t{a} * dim_;
      const double* pb = data_.data() + std::size_t{b} * dim_;
      double s = 0.0;
      for (std::size_t i = 0; i < dim_; ++i) {
        const double d = pa[i] - pb[i];
        s += d * d;
      }
      return sqrt_(s);
    }
    return data_[std::size_t{a} * n_ + b];
  }

  // Distance from euclidean point a to an arbitrary coordinate vector.
  double distance_to_coords(PointId a, std::span<const double> coords) const;

  std::span<const double> coords(PointId a) const;

 private:
  Dataset(Kind kind, std::vector<double> data, std::size_t n, std::size_t dim)
      : kind_(kind), data_(std::move(data)), n_(n), dim_(dim) {}
  static double sqrt_(double x);
  void validate_matrix() const;

  Kind kind_;
  std::vector<double> data_;  // coords (n*dim) or matrix (n*n)
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
};

// Points with positive integer weights, kept sorted by id.
struct WeightedPointSet {
  std::vector<PointId> points;
  std::vector<std::uint64_t> weights;

  static WeightedPointSet unit(std::span<const PointId> pts);
  static WeightedPointSet make(std::vector<PointId> pts, std::vector<std::uint64_t> ws);

  std::size_t size() const { return points.size(); }
  std::uint64_t total_weight() const;
};

enum class ObjectiveKind { kcenter, kmedian, weighted_kmedian };

const char* objective_name(ObjectiveKind kind);

// Minimum distance from x to a non-empty center set, plus the center that
// attains it; ties broken by the smallest center id.
std::pair<double, PointId> dist_to_set(const Dataset& ds, PointId x,
                                       std::span<const PointId> centers);

// Objective of a center set. kcenter/kmedian range over the whole dataset;
// weighted_kmedian ranges over `weighted` only (required for that kind,
// rejected for the others).
double evaluate(const Dataset& ds, std::span<const PointId> centers, ObjectiveKind kind,
                const WeightedPointSet* weighted = nullptr);

struct ClusteringSolution {
  std::vector<PointId> centers;
  std::vector<PointId> assignment;  // per point, the chosen center's id
  double objective = 0.0;
  ObjectiveKind objective_kind = ObjectiveKind::kmedian;

  // "center_ids;objective"
  std::string to_csv() const;
};

// Builds the nearest-center assignment and objective for a center set.
ClusteringSolution make_solution(const Dataset& ds, std::vector<PointId> centers,
                                 ObjectiveKind kind);
ClusteringSolution make_weighted_solution(const Dataset& ds, const WeightedPointSet& ws,
                                          std::vector<PointId> centers);

// Recomputes assignment and objective from scratch and throws on any
// mismatch; used by tests to re-validate solutions.
void check_solution(const Dataset& ds, const ClusteringSolution& solution,
                    const WeightedPointSet* weighted = nullptr);

// Words a machine needs to hold the dataset: id+coords per point for
// euclidean data, the full matrix for explicit data.
std::uint64_t dataset_words(const Dataset& ds);

}  // namespace mrclust

#endif  // MRCLUST_METRIC_HPP

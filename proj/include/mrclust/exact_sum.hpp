#ifndef MRCLUST_EXACT_SUM_HPP
#define MRCLUST_EXACT_SUM_HPP

#include <cstddef>
#include <vector>

// Error-free floating-point accumulation. The running sum is a Shewchuk-style
// expansion: a list of non-overlapping doubles, in increasing magnitude, whose
// exact sum equals the exact sum of everything added so far. Adding is
// grouping-independent, and round() returns the correctly rounded double of
// the exact value, so a partitioned reduction produces bit-identical results
// to a sequential loop for any machine count and combine order.
//
// Requires round-to-nearest FP mode and no -ffast-math style reassociation.

namespace mrclust {

class ExactSum {
 public:
  ExactSum() = default;

  // Grow-expansion with zero elimination.
  void add(double x) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const double a = terms_[i];
      const double s = a + x;
      const double bv = s - a;
      const double err = (a - (s - bv)) + (x - bv);
      if (err != 0.0) terms_[out++] = err;
      x = s;
    }
    terms_.resize(out);
    if (x != 0.0) terms_.push_back(x);
  }

  void add(const ExactSum& other) {
    for (double t : other.terms_) add(t);
  }

  // Correctly rounded value of the exact sum (fsum-style final pass with the
  // halfway-case correction). Depends only on the exact value, not on the
  // expansion representation.
  double round() const {
    const std::vector<double>& p = terms_;
    if (p.empty()) return 0.0;
    std::size_t j = p.size() - 1;
    double hi = p[j];
    double lo = 0.0;
    while (j > 0) {
      const double x = hi;
      const double y = p[--j];
      hi = x + y;
      const double yr = hi - x;
      lo = y - yr;
      if (lo != 0.0) break;
    }
    if (j > 0 && ((lo < 0.0 && p[j - 1] < 0.0) || (lo > 0.0 && p[j - 1] > 0.0))) {
      const double y2 = lo * 2.0;
      const double x2 = hi + y2;
      if (y2 == x2 - hi) hi = x2;
    }
    return hi;
  }

  const std::vector<double>& terms() const { return terms_; }
  void load_terms(std::vector<double> terms) { terms_ = std::move(terms); }

 private:
  std::vector<double> terms_;
};

}  // namespace mrclust

#endif  // MRCLUST_EXACT_SUM_HPP

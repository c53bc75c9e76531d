#ifndef FAIRBARY_MEASURE_HPP
#define FAIRBARY_MEASURE_HPP

#include <map>
#include <string>
#include <vector>

namespace fairbary {

struct MeasureAtom {
  std::string id;
  double weight = 0.0;
};

// Weighted atoms over an opaque point set. Immutable after construction;
// duplicate ids are merged by summing weights, atoms are kept sorted by id
// so that equal measures have identical representations.
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;
  explicit DiscreteMeasure(std::vector<MeasureAtom> atoms);

  // Requires the weights to sum to 1 within 1e-9 and renormalizes the
  // remaining rounding; rejects anything further off.
  static DiscreteMeasure probability(std::vector<MeasureAtom> atoms);

  const std::vector<MeasureAtom>& atoms() const { return atoms_; }
  double total_mass() const { return total_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  // Weight carried by `id`, zero if absent.
  double mass_of(const std::string& id) const;

 private:
  std::vector<MeasureAtom> atoms_;
  double total_ = 0.0;
};

struct RealAtom {
  double value = 0.0;
  double weight = 0.0;
};

// A measure on the real line: atoms sorted strictly ascending by value,
// exact-equal values merged. Carries c.d.f. / quantile evaluation.
class RealMeasure1D {
 public:
  RealMeasure1D() = default;
  explicit RealMeasure1D(std::vector<RealAtom> atoms);

  const std::vector<RealAtom>& atoms() const { return atoms_; }
  double total_mass() const { return total_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }

  double min_value() const;
  double max_value() const;
  double mean() const;

  // Right-continuous c.d.f.: mass of (-inf, t].
  double cdf(double t) const;

  // Generalized inverse inf{t : cdf(t) >= q}; q must lie in [0, 1].
  // q = 0 returns the smallest atom.
  double quantile(double q) const;

 private:
  std::vector<RealAtom> atoms_;
  std::vector<double> cumulative_;  // prefix sums, same length as atoms_
  double total_ = 0.0;
};

struct JordanDecomposition {
  DiscreteMeasure plus;   // (mu1 - mu2)_+ / mass
  DiscreteMeasure minus;  // (mu1 - mu2)_- / mass
  double mass = 0.0;      // common mass m of the signed parts
};

// Image measure of m under the point map f. Every atom of m must be mapped.
RealMeasure1D pushforward(const DiscreteMeasure& m,
                          const std::map<std::string, double>& f);

// Scaled Jordan decomposition of mu1 - mu2 for two probability measures.
// Throws when the measures coincide atomwise (mass would be zero).
JordanDecomposition jordan_decompose(const DiscreteMeasure& mu1,
                                     const DiscreteMeasure& mu2);

// Kolmogorov (sup-cdf) distance between two real measures.
double kolmogorov_distance(const RealMeasure1D& a, const RealMeasure1D& b);

// 1-Wasserstein distance between two probability measures on the line,
// computed as the integral of |F_a - F_b|.
double w1_distance(const RealMeasure1D& a, const RealMeasure1D& b);

}  // namespace fairbary

#endif

/**
 * @file sampling.hpp
 * @brief Distribution specs for matrix entries and deterministic, splittable
 *        random sampling of objective matrices.
 */

#ifndef PARETOLAB_SAMPLING_HPP
#define PARETOLAB_SAMPLING_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "paretolab/core.hpp"

namespace paretolab {

/**
 * @brief Counter-based splittable random stream.
 *
 * A stream is identified by a root seed and a derivation path of child
 * indices. Deriving a child never mutates the parent, and every draw is a
 * pure function of (seed, path, counter), so trials can be evaluated in any
 * order or in parallel with identical results.
 */
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  /// Child stream for path extension [index].
  RandomStream child(std::uint64_t index) const;

  /// The counter-th 64-bit block of this stream.
  std::uint64_t bits(std::uint64_t counter) const;

  /// The counter-th uniform draw in [0, 1), 53-bit resolution.
  double uniform01(std::uint64_t counter) const;

 private:
  struct FromState {};
  RandomStream(std::uint64_t state, FromState) : state_(state) {}
  std::uint64_t state_;
};

/// Kind of per-entry distribution.
enum class DistributionKind : std::uint8_t {
  kUniformInterval,   // uniform on [lo, hi), lo < hi
  kSymmetricUniform,  // uniform on [-h, h), h > 0
  kGaussian,          // mean 0, standard deviation sigma > 0
};

/**
 * @brief Specification of one matrix-entry distribution.
 *
 * Expressible as a string: `uniform:<lo>:<hi>`, `symuniform:<halfwidth>`,
 * `gaussian:<sigma>`.
 */
class DistributionSpec {
 public:
  static DistributionSpec uniform(double lo, double hi);
  static DistributionSpec symmetric_uniform(double halfwidth);
  static DistributionSpec gaussian(double sigma);

  static DistributionSpec parse(std::string_view text);
  std::string to_string() const;

  DistributionKind kind() const { return kind_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double sigma() const { return sigma_; }

  /// True iff the distribution is symmetric about the origin.
  bool symmetric_about_origin() const;

 private:
  DistributionSpec() = default;
  DistributionKind kind_ = DistributionKind::kUniformInterval;
  double lo_ = 0.0;
  double hi_ = 0.0;
  double sigma_ = 0.0;
};

/// Supremum of the probability density of `spec` (the phi parameter).
double phi_of(const DistributionSpec& spec);

/// One draw from `spec`, deterministic in the stream value.
double sample_entry(const DistributionSpec& spec, const RandomStream& stream);

/// Independent per-entry distribution specs for a d x n random matrix.
class MatrixDistribution {
 public:
  MatrixDistribution(int d, int n, std::vector<DistributionSpec> specs);

  /// Same spec for every entry.
  static MatrixDistribution iid(int d, int n, const DistributionSpec& spec);

  int objectives() const { return d_; }
  int variables() const { return n_; }
  const DistributionSpec& spec(int i, int j) const {
    return specs_[std::size_t(i) * n_ + j];
  }
  bool all_symmetric() const;

 private:
  int d_;
  int n_;
  std::vector<DistributionSpec> specs_;  // row-major
};

/// Samples entry (i,j) from specs[i][j] using the child stream [i, j].
ObjectiveMatrix sample_matrix(const MatrixDistribution& md,
                              const RandomStream& stream);

}  // namespace paretolab

#endif  // PARETOLAB_SAMPLING_HPP

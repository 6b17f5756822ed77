#include "paretolab/sampling.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

namespace paretolab {

namespace {

// splitmix64 finalizer; bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;
constexpr std::uint64_t kChildTag = 0xd1b54a32d192ed03ull;
constexpr std::uint64_t kDrawTag = 0x2545f4914f6cdd1dull;

double parse_real(std::string_view text, std::string_view what) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("bad " + std::string(what) + " in distribution spec");
  }
  return value;
}

std::string format_real(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed)
    : state_(mix64(seed + kGolden)) {}

RandomStream RandomStream::child(std::uint64_t index) const {
  return RandomStream(mix64(state_ ^ mix64(index + kChildTag)), FromState{});
}

std::uint64_t RandomStream::bits(std::uint64_t counter) const {
  return mix64(state_ ^ (counter * kGolden + kDrawTag));
}

double RandomStream::uniform01(std::uint64_t counter) const {
  return double(bits(counter) >> 11) * 0x1.0p-53;
}

DistributionSpec DistributionSpec::uniform(double lo, double hi) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("uniform interval requires finite lo < hi");
  }
  DistributionSpec s;
  s.kind_ = DistributionKind::kUniformInterval;
  s.lo_ = lo;
  s.hi_ = hi;
  return s;
}

DistributionSpec DistributionSpec::symmetric_uniform(double halfwidth) {
  if (!(halfwidth > 0.0) || !std::isfinite(halfwidth)) {
    throw std::invalid_argument("symmetric uniform requires halfwidth > 0");
  }
  DistributionSpec s;
  s.kind_ = DistributionKind::kSymmetricUniform;
  s.lo_ = -halfwidth;
  s.hi_ = halfwidth;
  return s;
}

DistributionSpec DistributionSpec::gaussian(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("gaussian requires sigma > 0");
  }
  DistributionSpec s;
  s.kind_ = DistributionKind::kGaussian;
  s.sigma_ = sigma;
  return s;
}

DistributionSpec DistributionSpec::parse(std::string_view text) {
  const auto first_colon = text.find(':');
  if (first_colon == std::string_view::npos) {
    throw std::invalid_argument("distribution spec needs kind:params");
  }
  const std::string_view kind = text.substr(0, first_colon);
  const std::string_view rest = text.substr(first_colon + 1);
  if (kind == "uniform") {
    const auto second_colon = rest.find(':');
    if (second_colon == std::string_view::npos) {
      throw std::invalid_argument("uniform spec needs uniform:<lo>:<hi>");
    }
    return uniform(parse_real(rest.substr(0, second_colon), "lo"),
                   parse_real(rest.substr(second_colon + 1), "hi"));
  }
  if (kind == "symuniform") {
    return symmetric_uniform(parse_real(rest, "halfwidth"));
  }
  if (kind == "gaussian") {
    return gaussian(parse_real(rest, "sigma"));
  }
  throw std::invalid_argument("unknown distribution kind '" + std::string(kind) + "'");
}

std::string DistributionSpec::to_string() const {
  switch (kind_) {
    case DistributionKind::kUniformInterval:
      return "uniform:" + format_real(lo_) + ":" + format_real(hi_);
    case DistributionKind::kSymmetricUniform:
      return "symuniform:" + format_real(hi_);
    case DistributionKind::kGaussian:
      return "gaussian:" + format_real(sigma_);
  }
  return {};
}

bool DistributionSpec::symmetric_about_origin() const {
  switch (kind_) {
    case DistributionKind::kUniformInterval:
      return lo_ == -hi_;
    case DistributionKind::kSymmetricUniform:
    case DistributionKind::kGaussian:
      return true;
  }
  return false;
}

double phi_of(const DistributionSpec& spec) {
  switch (spec.kind()) {
    case DistributionKind::kUniformInterval:
    case DistributionKind::kSymmetricUniform:
      return 1.0 / (spec.hi() - spec.lo());
    case DistributionKind::kGaussian:
      return 1.0 / (spec.sigma() * std::sqrt(2.0 * std::numbers::pi));
  }
  return 0.0;
}

double sample_entry(const DistributionSpec& spec, const RandomStream& stream) {
  switch (spec.kind()) {
    case DistributionKind::kUniformInterval:
    case DistributionKind::kSymmetricUniform:
      return spec.lo() + (spec.hi() - spec.lo()) * stream.uniform01(0);
    case DistributionKind::kGaussian: {
      // Box-Muller; u1 in (0,1] keeps the log finite.
      const double u1 = 1.0 - stream.uniform01(0);
      const double u2 = stream.uniform01(1);
      const double r = std::sqrt(-2.0 * std::log(u1));
      return spec.sigma() * r * std::cos(2.0 * std::numbers::pi * u2);
    }
  }
  return 0.0;
}

MatrixDistribution::MatrixDistribution(int d, int n,
                                       std::vector<DistributionSpec> specs)
    : d_(d), n_(n), specs_(std::move(specs)) {
  if (d_ < 1 || n_ < 1) {
    throw std::invalid_argument("matrix distribution needs d >= 1 and n >= 1");
  }
  if (specs_.size() != std::size_t(d_) * std::size_t(n_)) {
    throw std::invalid_argument("matrix distribution grid size mismatch");
  }
}

MatrixDistribution MatrixDistribution::iid(int d, int n,
                                           const DistributionSpec& spec) {
  if (d < 1 || n < 1) {
    throw std::invalid_argument("matrix distribution needs d >= 1 and n >= 1");
  }
  return MatrixDistribution(
      d, n, std::vector<DistributionSpec>(std::size_t(d) * std::size_t(n), spec));
}

bool MatrixDistribution::all_symmetric() const {
  for (const auto& s : specs_) {
    if (!s.symmetric_about_origin()) return false;
  }
  return true;
}

ObjectiveMatrix sample_matrix(const MatrixDistribution& md,
                              const RandomStream& stream) {
  std::vector<double> entries(std::size_t(md.objectives()) * md.variables());
  for (int i = 0; i < md.objectives(); ++i) {
    const RandomStream row_stream = stream.child(std::uint64_t(i));
    for (int j = 0; j < md.variables(); ++j) {
      entries[std::size_t(i) * md.variables() + j] =
          sample_entry(md.spec(i, j), row_stream.child(std::uint64_t(j)));
    }
  }
  return ObjectiveMatrix(md.objectives(), md.variables(), std::move(entries));
}

}  // namespace paretolab

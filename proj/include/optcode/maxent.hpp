#pragma once

// Maximum-entropy rank distributions p_i = exp(-alpha * l_i) / Z and the
// named families they specialize to: zeta, Zipf-Mandelbrot and geometric.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace optcode::maxent {

using Rank = std::uint64_t;

// sum_{j>=1} j^-alpha. Alternating-series (Dirichlet eta) evaluation with
// Borwein acceleration; absolute error well under 1e-10 for alpha > 1.
double riemann_zeta(double alpha);

// sum_{i>=0} (i+b)^-alpha by Euler-Maclaurin summation.
double hurwitz_zeta(double alpha, double b);

struct ZetaParams {
  explicit ZetaParams(double alpha);
  double alpha;
};

// Support starts at rank 1, so the normalizer is sum_{i>=1} (i+b)^-alpha,
// which is hurwitz_zeta(alpha, 1 + b).
struct ZipfMandelbrotParams {
  ZipfMandelbrotParams(double alpha, double b);
  double alpha;
  double b;
};

struct GeometricParams {
  explicit GeometricParams(double q);
  double q;
};

double zeta_pmf(const ZetaParams& params, Rank i);
double zipf_mandelbrot_pmf(const ZipfMandelbrotParams& params, Rank i);
double geometric_pmf(const GeometricParams& params, Rank i);

// Rank -> cost constraint l_i fed to the maximum-entropy form.
class LengthLaw {
 public:
  enum class Kind { linear, logarithmic, optimal_code, custom };

  // l_i = i
  static LengthLaw linear();
  // l_i = log_base(i); base e gives the zeta distribution directly.
  static LengthLaw logarithmic(double base);
  // l_i from the exact optimal non-singular length law over N symbols.
  static LengthLaw optimal_code(std::uint64_t n, unsigned l_min = 1);
  static LengthLaw custom(std::function<double(Rank)> fn);

  Kind kind() const noexcept { return kind_; }
  double base() const noexcept { return base_; }
  std::uint64_t alphabet_size() const noexcept { return n_; }
  unsigned l_min() const noexcept { return l_min_; }

  double operator()(Rank i) const;

 private:
  LengthLaw() = default;

  Kind kind_ = Kind::linear;
  double base_ = 0.0;
  std::uint64_t n_ = 0;
  unsigned l_min_ = 1;
  std::function<double(Rank)> fn_;
};

// alpha / ln(base): exponent of the power law that exp(-alpha * log_base i) equals.
double effective_exponent(double alpha, double base);

struct MaxentSpec {
  MaxentSpec(double alpha, LengthLaw law, std::optional<Rank> truncation = std::nullopt);

  double alpha;
  LengthLaw law;
  std::optional<Rank> truncation;
};

// Z = sum_j exp(-alpha * l_j). Infinite support uses closed forms for the
// built-in laws and throws DomainError when the sum diverges or the law is
// custom.
double partition_function(const MaxentSpec& spec);
double maxent_pmf(const MaxentSpec& spec, Rank i);

// Probability law over ranks 1, 2, ... with an exact survival function,
// which is what the sampler needs to invert the CDF past its table.
class RankLaw {
 public:
  virtual ~RankLaw() = default;
  virtual double pmf(Rank i) const = 0;
  // P(X > i).
  virtual double survival(Rank i) const = 0;
  virtual std::optional<Rank> support_max() const { return std::nullopt; }
};

class ZetaLaw final : public RankLaw {
 public:
  explicit ZetaLaw(ZetaParams params);
  double pmf(Rank i) const override;
  double survival(Rank i) const override;

 private:
  ZetaParams params_;
  double norm_;
};

class ZipfMandelbrotLaw final : public RankLaw {
 public:
  explicit ZipfMandelbrotLaw(ZipfMandelbrotParams params);
  double pmf(Rank i) const override;
  double survival(Rank i) const override;

 private:
  ZipfMandelbrotParams params_;
  double norm_;
};

class GeometricLaw final : public RankLaw {
 public:
  explicit GeometricLaw(GeometricParams params) : params_(params) {}
  double pmf(Rank i) const override;
  double survival(Rank i) const override;

 private:
  GeometricParams params_;
};

class MaxentLaw final : public RankLaw {
 public:
  explicit MaxentLaw(MaxentSpec spec);
  double pmf(Rank i) const override;
  double survival(Rank i) const override;
  std::optional<Rank> support_max() const override { return spec_.truncation; }

 private:
  MaxentSpec spec_;
  double z_;
};

// Finite support 1..size(probs).
class TabulatedLaw final : public RankLaw {
 public:
  explicit TabulatedLaw(std::vector<double> probs);
  double pmf(Rank i) const override;
  double survival(Rank i) const override;
  std::optional<Rank> support_max() const override { return probs_.size(); }

 private:
  std::vector<double> probs_;
  std::vector<double> survival_;
};

enum class EntropyUnit { nats, bits };

struct EntropyValue {
  double value;
  EntropyUnit unit;
};

// H = -sum p_i log p_i over ranks 1..truncation, with 0 log 0 = 0. Throws if
// the covered mass is further than 1e-6 from one.
EntropyValue entropy(const std::function<double(Rank)>& pmf, Rank truncation,
                     EntropyUnit unit = EntropyUnit::nats);
EntropyValue entropy(std::span<const double> probs, EntropyUnit unit = EntropyUnit::nats);

// Inverse-CDF sampler. The survival function is tabulated once for the head
// of the distribution; draws beyond the table are inverted through the law's
// exact survival function.
class RankSampler {
 public:
  static constexpr std::size_t kBlockSize = 1 << 14;

  explicit RankSampler(std::shared_ptr<const RankLaw> law, double tail_mass = 1e-12,
                       Rank max_table = Rank{1} << 20);

  // Smallest i with P(X > i) < v, for v in (0, 1]. Heavy tails can put that
  // rank past 2^63; such draws are clamped to kMaxRank.
  static constexpr Rank kMaxRank = Rank{1} << 63;
  Rank invert(double v) const;

  // n i.i.d. draws. Block b of kBlockSize draws uses its own stream derived
  // from (seed, b), so the output does not depend on the thread count.
  std::vector<Rank> sample(std::uint64_t seed, std::size_t n) const;

  std::size_t table_size() const noexcept { return survival_.size(); }

 private:
  std::shared_ptr<const RankLaw> law_;
  std::vector<double> survival_;  // survival_[k] = P(X > k + 1)
};

struct RankCounts {
  // (rank, count) sorted by rank, counts > 0.
  std::vector<std::pair<Rank, std::uint64_t>> entries;

  static RankCounts from_samples(std::span<const Rank> ranks);
  static RankCounts from_frequencies(std::span<const std::uint64_t> freq_by_rank);

  std::uint64_t total() const noexcept;
  std::size_t distinct() const noexcept { return entries.size(); }
};

enum class Family { zeta, zipf_mandelbrot, geometric };

const char* to_string(Family f) noexcept;
Family family_from_string(std::string_view name);

struct FitResult {
  Family family;
  std::vector<std::pair<std::string, double>> params;
  double log_likelihood;
  std::uint64_t n;
  Rank max_rank;
  // Optimum sits on the edge of the search bracket.
  bool at_boundary = false;

  double param(std::string_view name) const;
};

double log_likelihood(const RankCounts& data, const RankLaw& law);

// Maximum-likelihood fit. Geometric is closed form (q = 1/mean); zeta is a
// golden-section search on the concave log-likelihood in alpha; for
// Zipf-Mandelbrot the profile likelihood over log b is scanned, then refined.
FitResult fit_mle(const RankCounts& data, Family family);

}  // namespace optcode::maxent

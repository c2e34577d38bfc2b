#include "optcode/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <omp.h>

#include "optcode/codebook.hpp"
#include "optcode/error.hpp"
#include "optcode/rng.hpp"

namespace optcode::maxent {

namespace {

void check_rank(Rank i) {
  if (i == 0) throw DomainError("ranks start at 1");
}

// Maximizes a unimodal f on [lo, hi]. Returns the argmax.
template <class F>
double golden_section_max(F f, double lo, double hi, double tol = 1e-10) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol * (1.0 + std::abs(a) + std::abs(b))) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return (a + b) / 2.0;
}

constexpr double kAlphaLo = 1.0 + 1e-9;
constexpr double kAlphaHi = 50.0;
constexpr double kLogBLo = -13.815510557964274;  // ln 1e-6
constexpr double kLogBHi = 9.210340371976184;    // ln 1e4

bool near(double x, double edge, double scale) { return std::abs(x - edge) < 1e-6 * scale; }

}  // namespace

ZetaParams::ZetaParams(double a) : alpha(a) {
  if (!std::isfinite(a) || a <= 1.0) throw DomainError("zeta needs alpha > 1 (the sum diverges otherwise)");
}

ZipfMandelbrotParams::ZipfMandelbrotParams(double a, double offset) : alpha(a), b(offset) {
  if (!std::isfinite(a) || a <= 1.0) throw DomainError("Zipf-Mandelbrot needs alpha > 1");
  if (!std::isfinite(offset) || offset <= 0.0) throw DomainError("Zipf-Mandelbrot needs b > 0");
}

GeometricParams::GeometricParams(double p) : q(p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("geometric needs 0 < q < 1");
}

double zeta_pmf(const ZetaParams& params, Rank i) {
  check_rank(i);
  return std::pow(static_cast<double>(i), -params.alpha) / riemann_zeta(params.alpha);
}

double zipf_mandelbrot_pmf(const ZipfMandelbrotParams& params, Rank i) {
  check_rank(i);
  return std::pow(static_cast<double>(i) + params.b, -params.alpha) /
         hurwitz_zeta(params.alpha, 1.0 + params.b);
}

double geometric_pmf(const GeometricParams& params, Rank i) {
  check_rank(i);
  return params.q * std::pow(1.0 - params.q, static_cast<double>(i - 1));
}

LengthLaw LengthLaw::linear() { return LengthLaw(); }

LengthLaw LengthLaw::logarithmic(double base) {
  if (!std::isfinite(base) || base <= 1.0) throw DomainError("logarithm base must be > 1");
  LengthLaw law;
  law.kind_ = Kind::logarithmic;
  law.base_ = base;
  return law;
}

LengthLaw LengthLaw::optimal_code(std::uint64_t n, unsigned l_min) {
  if (n == 0) throw DomainError("alphabet size must be >= 1");
  LengthLaw law;
  law.kind_ = Kind::optimal_code;
  law.n_ = n;
  law.l_min_ = l_min;
  return law;
}

LengthLaw LengthLaw::custom(std::function<double(Rank)> fn) {
  if (!fn) throw DomainError("custom length law needs a function");
  LengthLaw law;
  law.kind_ = Kind::custom;
  law.fn_ = std::move(fn);
  return law;
}

double LengthLaw::operator()(Rank i) const {
  check_rank(i);
  switch (kind_) {
    case Kind::linear:
      return static_cast<double>(i);
    case Kind::logarithmic:
      return std::log(static_cast<double>(i)) / std::log(base_);
    case Kind::optimal_code:
      return codebook::code_length_for_rank(n_, l_min_, i);
    case Kind::custom:
      return fn_(i);
  }
  return 0.0;
}

double effective_exponent(double alpha, double base) {
  if (!std::isfinite(base) || base <= 1.0) throw DomainError("logarithm base must be > 1");
  return alpha / std::log(base);
}

MaxentSpec::MaxentSpec(double a, LengthLaw l, std::optional<Rank> trunc)
    : alpha(a), law(std::move(l)), truncation(trunc) {
  if (!std::isfinite(a) || a <= 0.0) throw DomainError("maxent needs alpha > 0");
  if (truncation && *truncation == 0) throw DomainError("truncation must be >= 1");
}

double partition_function(const MaxentSpec& spec) {
  if (spec.truncation) {
    double z = 0.0;
    for (Rank j = *spec.truncation; j >= 1; --j) z += std::exp(-spec.alpha * spec.law(j));
    return z;
  }
  switch (spec.law.kind()) {
    case LengthLaw::Kind::linear:
      return 1.0 / std::expm1(spec.alpha);
    case LengthLaw::Kind::logarithmic: {
      const double s = effective_exponent(spec.alpha, spec.law.base());
      if (s <= 1.0) {
        throw DomainError("partition sum diverges: effective exponent alpha/ln(base) = " +
                          std::to_string(s) + " <= 1; use a truncation");
      }
      return riemann_zeta(s);
    }
    case LengthLaw::Kind::optimal_code: {
      // sum_{l >= l_min} N^l e^(-alpha l) = r^l_min / (1 - r), r = N e^(-alpha).
      const double r = static_cast<double>(spec.law.alphabet_size()) * std::exp(-spec.alpha);
      if (r >= 1.0) {
        throw DomainError("partition sum diverges: alpha must exceed ln N; use a truncation");
      }
      return std::pow(r, spec.law.l_min()) / (1.0 - r);
    }
    case LengthLaw::Kind::custom:
      break;
  }
  throw DomainError("a custom length law needs a truncation to compute Z");
}

double maxent_pmf(const MaxentSpec& spec, Rank i) {
  check_rank(i);
  if (spec.truncation && i > *spec.truncation) return 0.0;
  return std::exp(-spec.alpha * spec.law(i)) / partition_function(spec);
}

ZetaLaw::ZetaLaw(ZetaParams params) : params_(params), norm_(riemann_zeta(params.alpha)) {}

double ZetaLaw::pmf(Rank i) const {
  check_rank(i);
  return std::pow(static_cast<double>(i), -params_.alpha) / norm_;
}

double ZetaLaw::survival(Rank i) const {
  if (i == 0) return 1.0;
  return hurwitz_zeta(params_.alpha, static_cast<double>(i) + 1.0) / norm_;
}

ZipfMandelbrotLaw::ZipfMandelbrotLaw(ZipfMandelbrotParams params)
    : params_(params), norm_(hurwitz_zeta(params.alpha, 1.0 + params.b)) {}

double ZipfMandelbrotLaw::pmf(Rank i) const {
  check_rank(i);
  return std::pow(static_cast<double>(i) + params_.b, -params_.alpha) / norm_;
}

double ZipfMandelbrotLaw::survival(Rank i) const {
  if (i == 0) return 1.0;
  return hurwitz_zeta(params_.alpha, static_cast<double>(i) + 1.0 + params_.b) / norm_;
}

double GeometricLaw::pmf(Rank i) const { return geometric_pmf(params_, i); }

double GeometricLaw::survival(Rank i) const {
  return std::pow(1.0 - params_.q, static_cast<double>(i));
}

MaxentLaw::MaxentLaw(MaxentSpec spec) : spec_(std::move(spec)), z_(partition_function(spec_)) {}

double MaxentLaw::pmf(Rank i) const {
  check_rank(i);
  if (spec_.truncation && i > *spec_.truncation) return 0.0;
  return std::exp(-spec_.alpha * spec_.law(i)) / z_;
}

double MaxentLaw::survival(Rank i) const {
  if (spec_.truncation) {
    double s = 0.0;
    for (Rank j = *spec_.truncation; j > i; --j) s += pmf(j);
    return s;
  }
  if (i == 0) return 1.0;
  const double alpha = spec_.alpha;
  switch (spec_.law.kind()) {
    case LengthLaw::Kind::linear:
      return std::exp(-alpha * static_cast<double>(i));
    case LengthLaw::Kind::logarithmic: {
      const double s = effective_exponent(alpha, spec_.law.base());
      return hurwitz_zeta(s, static_cast<double>(i) + 1.0) / z_;
    }
    case LengthLaw::Kind::optimal_code: {
      const std::uint64_t n = spec_.law.alphabet_size();
      const unsigned l_min = spec_.law.l_min();
      const unsigned l = codebook::code_length_for_rank(n, l_min, i);
      const Rank last = codebook::last_rank_of_length(n, l_min, l);
      const double r = static_cast<double>(n) * std::exp(-alpha);
      const double in_block = static_cast<double>(last - i) * std::exp(-alpha * l);
      return (in_block + std::pow(r, l + 1) / (1.0 - r)) / z_;
    }
    case LengthLaw::Kind::custom:
      break;
  }
  throw DomainError("a custom length law needs a truncation");
}

TabulatedLaw::TabulatedLaw(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw DomainError("tabulated law needs at least one rank");
  double sum = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) throw DomainError("probabilities must be finite and >= 0");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw DomainError("tabulated probabilities must sum to 1");
  survival_.assign(probs_.size() + 1, 0.0);
  for (std::size_t k = probs_.size(); k-- > 0;) survival_[k] = survival_[k + 1] + probs_[k];
}

double TabulatedLaw::pmf(Rank i) const {
  check_rank(i);
  return i <= probs_.size() ? probs_[i - 1] : 0.0;
}

double TabulatedLaw::survival(Rank i) const {
  return i < probs_.size() ? survival_[i] : 0.0;
}

EntropyValue entropy(const std::function<double(Rank)>& pmf, Rank truncation, EntropyUnit unit) {
  if (truncation == 0) throw DomainError("entropy needs a truncation >= 1");
  double mass = 0.0;
  double h = 0.0;
  for (Rank i = 1; i <= truncation; ++i) {
    const double p = pmf(i);
    if (!std::isfinite(p) || p < 0.0) throw DomainError("pmf returned an invalid probability");
    mass += p;
    if (p > 0.0) h -= p * std::log(p);
  }
  if (std::abs(mass - 1.0) > 1e-6) {
    throw DomainError("pmf is not normalized over the truncation (mass " + std::to_string(mass) + ")");
  }
  if (unit == EntropyUnit::bits) h /= std::log(2.0);
  return EntropyValue{std::max(h, 0.0), unit};
}

EntropyValue entropy(std::span<const double> probs, EntropyUnit unit) {
  return entropy([&](Rank i) { return probs[i - 1]; }, probs.size(), unit);
}

RankSampler::RankSampler(std::shared_ptr<const RankLaw> law, double tail_mass, Rank max_table)
    : law_(std::move(law)) {
  if (!law_) throw DomainError("sampler needs a law");
  const auto support = law_->support_max();
  const Rank limit = support ? std::min(*support, max_table) : max_table;
  double s = 1.0;
  for (Rank i = 1; i <= limit; ++i) {
    s -= law_->pmf(i);
    if (s < 0.0) s = 0.0;
    survival_.push_back(s);
    if (s < tail_mass && !support) break;
  }
  if (support && survival_.size() == *support) survival_.back() = 0.0;
}

Rank RankSampler::invert(double v) const {
  auto it = std::partition_point(survival_.begin(), survival_.end(), [v](double s) { return s >= v; });
  if (it != survival_.end()) return static_cast<Rank>(it - survival_.begin()) + 1;

  // Past the table: bracket with doubling, then bisect on the exact survival.
  Rank lo = survival_.size();  // survival(lo) >= v
  Rank hi = std::max<Rank>(2 * lo, 2);
  while (law_->survival(hi) >= v) {
    lo = hi;
    if (hi >= kMaxRank) return kMaxRank;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const Rank mid = lo + (hi - lo) / 2;
    if (law_->survival(mid) >= v) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::min(hi, kMaxRank);
}

std::vector<Rank> RankSampler::sample(std::uint64_t seed, std::size_t n) const {
  std::vector<Rank> out(n);
  const std::int64_t blocks = static_cast<std::int64_t>((n + kBlockSize - 1) / kBlockSize);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    rng::Engine eng(rng::block_seed(seed, static_cast<std::uint64_t>(b)));
    const std::size_t begin = static_cast<std::size_t>(b) * kBlockSize;
    const std::size_t end = std::min(n, begin + kBlockSize);
    for (std::size_t k = begin; k < end; ++k) out[k] = invert(rng::uniform_open_closed(eng));
  }
  return out;
}

RankCounts RankCounts::from_samples(std::span<const Rank> ranks) {
  std::vector<Rank> sorted(ranks.begin(), ranks.end());
  std::sort(sorted.begin(), sorted.end());
  RankCounts counts;
  for (Rank r : sorted) {
    check_rank(r);
    if (!counts.entries.empty() && counts.entries.back().first == r) {
      ++counts.entries.back().second;
    } else {
      counts.entries.emplace_back(r, 1);
    }
  }
  return counts;
}

RankCounts RankCounts::from_frequencies(std::span<const std::uint64_t> freq_by_rank) {
  RankCounts counts;
  for (std::size_t k = 0; k < freq_by_rank.size(); ++k) {
    if (freq_by_rank[k] > 0) counts.entries.emplace_back(k + 1, freq_by_rank[k]);
  }
  return counts;
}

std::uint64_t RankCounts::total() const noexcept {
  std::uint64_t n = 0;
  for (const auto& [rank, count] : entries) n += count;
  return n;
}

const char* to_string(Family f) noexcept {
  switch (f) {
    case Family::zeta:
      return "zeta";
    case Family::zipf_mandelbrot:
      return "zipf-mandelbrot";
    case Family::geometric:
      return "geometric";
  }
  return "?";
}

Family family_from_string(std::string_view name) {
  if (name == "zeta") return Family::zeta;
  if (name == "zipf-mandelbrot" || name == "zm") return Family::zipf_mandelbrot;
  if (name == "geometric") return Family::geometric;
  throw DomainError("unknown family '" + std::string(name) +
                    "' (expected zeta, zipf-mandelbrot or geometric)");
}

double FitResult::param(std::string_view name) const {
  for (const auto& [key, value] : params) {
    if (key == name) return value;
  }
  throw DomainError("fit has no parameter '" + std::string(name) + "'");
}

double log_likelihood(const RankCounts& data, const RankLaw& law) {
  double ll = 0.0;
  for (const auto& [rank, count] : data.entries) ll += static_cast<double>(count) * std::log(law.pmf(rank));
  return ll;
}

FitResult fit_mle(const RankCounts& data, Family family) {
  if (data.distinct() < 2) {
    throw DomainError("degenerate data: maximum likelihood needs at least two distinct ranks");
  }
  const std::uint64_t n = data.total();
  const double dn = static_cast<double>(n);
  const Rank max_rank = data.entries.back().first;
  FitResult fit{family, {}, 0.0, n, max_rank, false};

  switch (family) {
    case Family::geometric: {
      double rank_sum = 0.0;
      for (const auto& [rank, count] : data.entries) rank_sum += static_cast<double>(rank) * static_cast<double>(count);
      const double q = dn / rank_sum;
      fit.params = {{"q", q}};
      fit.log_likelihood = dn * std::log(q) + (rank_sum - dn) * std::log1p(-q);
      break;
    }
    case Family::zeta: {
      double log_rank_sum = 0.0;
      for (const auto& [rank, count] : data.entries) {
        log_rank_sum += static_cast<double>(count) * std::log(static_cast<double>(rank));
      }
      auto ll = [&](double a) { return -a * log_rank_sum - dn * std::log(riemann_zeta(a)); };
      const double alpha = golden_section_max(ll, kAlphaLo, kAlphaHi);
      fit.params = {{"alpha", alpha}};
      fit.log_likelihood = ll(alpha);
      fit.at_boundary = near(alpha, kAlphaLo, 1.0) || near(alpha, kAlphaHi, kAlphaHi);
      break;
    }
    case Family::zipf_mandelbrot: {
      auto ll = [&](double a, double b) {
        double s = 0.0;
        for (const auto& [rank, count] : data.entries) {
          s += static_cast<double>(count) * std::log(static_cast<double>(rank) + b);
        }
        return -a * s - dn * std::log(hurwitz_zeta(a, 1.0 + b));
      };
      auto profile_alpha = [&](double log_b) {
        const double b = std::exp(log_b);
        double s = 0.0;
        for (const auto& [rank, count] : data.entries) {
          s += static_cast<double>(count) * std::log(static_cast<double>(rank) + b);
        }
        auto ll_alpha = [&](double a) { return -a * s - dn * std::log(hurwitz_zeta(a, 1.0 + b)); };
        const double a = golden_section_max(ll_alpha, kAlphaLo, kAlphaHi, 1e-9);
        return std::pair{a, ll_alpha(a)};
      };

      constexpr int kGrid = 41;
      int best = 0;
      double best_ll = -std::numeric_limits<double>::infinity();
      for (int k = 0; k < kGrid; ++k) {
        const double u = kLogBLo + (kLogBHi - kLogBLo) * k / (kGrid - 1);
        const double value = profile_alpha(u).second;
        if (value > best_ll) {
          best_ll = value;
          best = k;
        }
      }
      const double step = (kLogBHi - kLogBLo) / (kGrid - 1);
      const double lo = kLogBLo + step * std::max(best - 1, 0);
      const double hi = kLogBLo + step * std::min(best + 1, kGrid - 1);
      const double log_b =
          golden_section_max([&](double u) { return profile_alpha(u).second; }, lo, hi, 1e-7);
      const double b = std::exp(log_b);
      const double alpha = profile_alpha(log_b).first;
      fit.params = {{"alpha", alpha}, {"b", b}};
      fit.log_likelihood = ll(alpha, b);
      fit.at_boundary = near(log_b, kLogBLo, 10.0) || near(log_b, kLogBHi, 10.0) ||
                        near(alpha, kAlphaLo, 1.0) || near(alpha, kAlphaHi, kAlphaHi);
      break;
    }
  }
  return fit;
}

}  // namespace optcode::maxent

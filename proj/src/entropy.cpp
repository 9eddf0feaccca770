#include "entrothresh/entropy.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "entrothresh/error.hpp"

namespace entrothresh {

namespace {

std::string format_value(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Applies `term(p, ln p)` to every positive probability and sums the results.
template <typename Term>
double sum_positive(const Distribution& d, Term term) {
  double acc = 0.0;
  for (double p : d.probs()) {
    if (p > 0.0) acc += term(p, std::log(p));
  }
  return acc;
}

}  // namespace

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw Error(ErrorCode::Domain, "distribution has no outcomes");
  }
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || p > 1.0) {
      throw Error(ErrorCode::Domain,
                  "probability " + format_value(p) + " is outside [0, 1]");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw Error(ErrorCode::Domain,
                "probabilities sum to " + format_value(total) + ", not 1");
  }
}

Distribution Distribution::product(const Distribution& other) const {
  std::vector<double> joint;
  joint.reserve(size() * other.size());
  for (double p : probs_) {
    for (double r : other.probs_) joint.push_back(p * r);
  }
  return Distribution(std::move(joint));
}

const char* to_string(EntropyKind kind) noexcept {
  switch (kind) {
    case EntropyKind::Shannon: return "shannon";
    case EntropyKind::Tsallis: return "tsallis";
    case EntropyKind::Kaniadakis: return "kaniadakis";
  }
  return "?";
}

std::optional<EntropyKind> parse_entropy_kind(std::string_view name) noexcept {
  if (name == "shannon") return EntropyKind::Shannon;
  if (name == "tsallis") return EntropyKind::Tsallis;
  if (name == "kaniadakis") return EntropyKind::Kaniadakis;
  return std::nullopt;
}

bool valid_tsallis_index(double q) noexcept {
  return std::isfinite(q) && q > 0.0 && q != 1.0;
}

bool valid_kaniadakis_index(double kappa) noexcept {
  return std::isfinite(kappa) && kappa != 0.0 && std::abs(kappa) < 1.0;
}

EntropyFunctional EntropyFunctional::tsallis(double q) {
  if (!valid_tsallis_index(q)) {
    throw Error(ErrorCode::Domain, "Tsallis index q = " + format_value(q) +
                                       " must satisfy q > 0 and q != 1");
  }
  return EntropyFunctional(EntropyKind::Tsallis, q);
}

EntropyFunctional EntropyFunctional::kaniadakis(double kappa) {
  if (!valid_kaniadakis_index(kappa)) {
    throw Error(ErrorCode::Domain, "Kaniadakis index kappa = " +
                                       format_value(kappa) +
                                       " must satisfy 0 < |kappa| < 1");
  }
  return EntropyFunctional(EntropyKind::Kaniadakis, kappa);
}

EntropyFunctional EntropyFunctional::make(EntropyKind kind, double index) {
  switch (kind) {
    case EntropyKind::Shannon: return shannon();
    case EntropyKind::Tsallis: return tsallis(index);
    case EntropyKind::Kaniadakis: return kaniadakis(index);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown entropy kind");
}

std::string EntropyFunctional::describe() const {
  switch (kind_) {
    case EntropyKind::Shannon: return "shannon";
    case EntropyKind::Tsallis: return "tsallis(q=" + format_value(index_) + ")";
    case EntropyKind::Kaniadakis:
      return "kaniadakis(kappa=" + format_value(index_) + ")";
  }
  return "?";
}

double q_log(double x, double q) {
  if (!(x > 0.0)) {
    throw Error(ErrorCode::Domain, "q_log needs x > 0, got " + format_value(x));
  }
  if (q == 1.0) {
    throw Error(ErrorCode::Domain, "q_log is undefined at q = 1");
  }
  const double a = 1.0 - q;
  return std::expm1(a * std::log(x)) / a;
}

double kappa_log(double x, double kappa) {
  if (!(x > 0.0)) {
    throw Error(ErrorCode::Domain,
                "kappa_log needs x > 0, got " + format_value(x));
  }
  if (kappa == 0.0) {
    throw Error(ErrorCode::Domain, "kappa_log is undefined at kappa = 0");
  }
  // (x^k - x^-k) / 2k == sinh(k ln x) / k
  return std::sinh(kappa * std::log(x)) / kappa;
}

double shannon_entropy(const Distribution& d) {
  return -sum_positive(d, [](double p, double ln_p) { return p * ln_p; });
}

double tsallis_entropy(const Distribution& d, double q) {
  if (!valid_tsallis_index(q)) {
    throw Error(ErrorCode::Domain, "invalid Tsallis index " + format_value(q));
  }
  // sum p (1 - p^(q-1)) / (q - 1)
  const double a = q - 1.0;
  return -sum_positive(d, [a](double p, double ln_p) {
           return p * std::expm1(a * ln_p);
         }) /
         a;
}

double kaniadakis_entropy(const Distribution& d, double kappa) {
  if (!valid_kaniadakis_index(kappa)) {
    throw Error(ErrorCode::Domain,
                "invalid Kaniadakis index " + format_value(kappa));
  }
  // p^(1+k) - p^(1-k) == 2 p sinh(k ln p)
  return -sum_positive(d, [kappa](double p, double ln_p) {
           return p * std::sinh(kappa * ln_p);
         }) /
         kappa;
}

double coentropy(const Distribution& d, double kappa) {
  if (!valid_kaniadakis_index(kappa)) {
    throw Error(ErrorCode::Domain,
                "invalid Kaniadakis index " + format_value(kappa));
  }
  // p^(1+k) + p^(1-k) == 2 p cosh(k ln p)
  return sum_positive(d, [kappa](double p, double ln_p) {
    return p * std::cosh(kappa * ln_p);
  });
}

double power_sum(const Distribution& d, double exponent) {
  return sum_positive(d, [exponent](double, double ln_p) {
    return std::exp(exponent * ln_p);
  });
}

double tsallis_compose(double s_a, double s_b, double q) {
  return s_a + s_b + (1.0 - q) * s_a * s_b;
}

double kaniadakis_compose(double s_a, double co_a, double s_b, double co_b) {
  return s_a * co_b + s_b * co_a;
}

double log_multiplicity(std::span<const std::uint64_t> counts) {
  const std::uint64_t n = std::accumulate(counts.begin(), counts.end(),
                                          std::uint64_t{0});
  if (n == 0) {
    throw Error(ErrorCode::Domain, "log_multiplicity needs a positive count");
  }
  // ln k! == lgamma(k + 1)
  double log_w = std::lgamma(static_cast<double>(n) + 1.0);
  for (std::uint64_t c : counts) {
    log_w -= std::lgamma(static_cast<double>(c) + 1.0);
  }
  return log_w / static_cast<double>(n);
}

}  // namespace entrothresh

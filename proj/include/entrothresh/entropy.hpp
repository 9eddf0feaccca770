#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace entrothresh {

// Probability vector whose entries are non-negative and sum to one within
// kNormalizationTolerance. Inputs outside the tolerance are rejected, never
// renormalized.
class Distribution {
 public:
  static constexpr double kNormalizationTolerance = 1e-9;

  explicit Distribution(std::vector<double> probs);

  std::span<const double> probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

  // Joint distribution of two independent variables, row-major in (this, other).
  Distribution product(const Distribution& other) const;

 private:
  std::vector<double> probs_;
};

enum class EntropyKind { Shannon, Tsallis, Kaniadakis };

const char* to_string(EntropyKind kind) noexcept;
std::optional<EntropyKind> parse_entropy_kind(std::string_view name) noexcept;

// Tagged entropy choice. Tsallis requires q > 0 and q != 1; Kaniadakis
// requires 0 < |kappa| < 1.
class EntropyFunctional {
 public:
  static EntropyFunctional shannon() noexcept { return EntropyFunctional(); }
  static EntropyFunctional tsallis(double q);
  static EntropyFunctional kaniadakis(double kappa);
  static EntropyFunctional make(EntropyKind kind, double index);

  EntropyKind kind() const noexcept { return kind_; }
  // Zero for Shannon.
  double index() const noexcept { return index_; }

  std::string describe() const;

  friend bool operator==(const EntropyFunctional&,
                         const EntropyFunctional&) = default;

 private:
  EntropyFunctional() = default;
  EntropyFunctional(EntropyKind kind, double index)
      : kind_(kind), index_(index) {}

  EntropyKind kind_ = EntropyKind::Shannon;
  double index_ = 0.0;
};

bool valid_tsallis_index(double q) noexcept;
bool valid_kaniadakis_index(double kappa) noexcept;

// ln_q(x) = (x^(1-q) - 1) / (1 - q). Domain error for x <= 0 or q == 1.
double q_log(double x, double q);

// ln_kappa(x) = (x^kappa - x^-kappa) / (2 kappa). Domain error for x <= 0 or
// kappa == 0. Odd under inversion: ln_kappa(1/x) == -ln_kappa(x).
double kappa_log(double x, double kappa);

// All functionals sum over positive probabilities only: 0 ln 0 and 0^a are 0.

double shannon_entropy(const Distribution& d);

// (1 - sum p^q) / (q - 1).
double tsallis_entropy(const Distribution& d, double q);

// -(1 / 2 kappa) sum (p^(1+kappa) - p^(1-kappa)). Even in kappa.
double kaniadakis_entropy(const Distribution& d, double kappa);

// (1/2) sum (p^(1+kappa) + p^(1-kappa)).
double coentropy(const Distribution& d, double kappa);

// sum p^a over positive p.
double power_sum(const Distribution& d, double exponent);

// Pseudo-additive composition of independent Tsallis subsystems.
double tsallis_compose(double s_a, double s_b, double q);

// Generalized sum for independent Kaniadakis subsystems:
// s_a * co_b + s_b * co_a.
double kaniadakis_compose(double s_a, double co_a, double s_b, double co_b);

// (ln N! - sum ln N_i!) / N evaluated with lgamma. Tends to the Shannon
// entropy of counts / N as N grows. Domain error when every count is zero.
double log_multiplicity(std::span<const std::uint64_t> counts);

}  // namespace entrothresh

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace orbiquant {

enum class ModelTag { ConeFree, ConeOscillator, SnmRadial, DihedralScalar, DihedralDoublet };

std::string to_string(ModelTag tag);

/// A finite Fourier sum sum_j c_j exp(i mu_j phi). Kept symbolic so angular
/// inner products over a wedge can be done in closed form.
struct FourierSum {
  struct Term {
    std::complex<double> coefficient;
    double frequency;
  };
  std::vector<Term> terms;

  std::complex<double> operator()(double phi) const;

  static FourierSum exponential(double frequency, std::complex<double> c = 1.0);
  static FourierSum cosine(double frequency, double c = 1.0);
  static FourierSum sine(double frequency, double c = 1.0);
  FourierSum operator+(const FourierSum& other) const;
};

/// Closed-form integral of conj(f) g over [0, width].
std::complex<double> angular_inner_product(const FourierSum& f, const FourierSum& g, double width);

/// Where an evaluator lives: a wedge 0 <= phi < width with measure r dr dphi,
/// or an interval [lo, hi] with measure dx (no angular part).
struct Domain {
  enum class Kind { Wedge, Interval };
  Kind kind = Kind::Wedge;
  double angular_width = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

/// Separated eigenfunction radial(u) * angular(phi), with one or two internal
/// components. Immutable once built.
class EigenfunctionEvaluator {
 public:
  EigenfunctionEvaluator(ModelTag model, std::map<std::string, std::int64_t> quantum_numbers,
                         double normalization, Domain domain, std::function<double(double)> radial,
                         std::vector<FourierSum> angular, std::map<std::string, double> ode_parameters);

  ModelTag model() const { return model_; }
  const std::map<std::string, std::int64_t>& quantum_numbers() const { return quantum_numbers_; }
  double normalization() const { return normalization_; }
  const Domain& domain() const { return domain_; }
  /// Parameters the radial equation needs (k, nu, beta, energy, lambda, ...).
  const std::map<std::string, double>& ode_parameters() const { return ode_parameters_; }
  double ode_parameter(const std::string& name) const;

  std::size_t components() const { return angular_.size(); }
  const std::vector<FourierSum>& angular() const { return angular_; }

  double radial(double u) const { return radial_(u); }
  /// First component at (u, phi); phi is ignored on interval domains.
  std::complex<double> operator()(double u, double phi = 0.0) const;
  /// All components (size components()).
  std::vector<std::complex<double>> values(double u, double phi = 0.0) const;

 private:
  ModelTag model_;
  std::map<std::string, std::int64_t> quantum_numbers_;
  double normalization_;
  Domain domain_;
  std::function<double(double)> radial_;
  std::vector<FourierSum> angular_;
  std::map<std::string, double> ode_parameters_;
};

}  // namespace orbiquant

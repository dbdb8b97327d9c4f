#include "orbiquant/eigenfunction.hpp"

#include "orbiquant/error.hpp"

#include <cmath>

namespace orbiquant {

std::string to_string(ModelTag tag) {
  switch (tag) {
    case ModelTag::ConeFree: return "cone-free";
    case ModelTag::ConeOscillator: return "cone-oscillator";
    case ModelTag::SnmRadial: return "snm";
    case ModelTag::DihedralScalar: return "dihedral-scalar";
    case ModelTag::DihedralDoublet: return "dihedral-doublet";
  }
  return "unknown";
}

std::complex<double> FourierSum::operator()(double phi) const {
  std::complex<double> sum = 0.0;
  for (const auto& t : terms) sum += t.coefficient * std::polar(1.0, t.frequency * phi);
  return sum;
}

FourierSum FourierSum::exponential(double frequency, std::complex<double> c) { return {{{c, frequency}}}; }

FourierSum FourierSum::cosine(double frequency, double c) {
  if (frequency == 0.0) return {{{c, 0.0}}};
  return {{{0.5 * c, frequency}, {0.5 * c, -frequency}}};
}

FourierSum FourierSum::sine(double frequency, double c) {
  if (frequency == 0.0) return {};
  const std::complex<double> k(0.0, -0.5 * c);  // sin x = (e^{ix} - e^{-ix}) / 2i
  return {{{k, frequency}, {-k, -frequency}}};
}

FourierSum FourierSum::operator+(const FourierSum& other) const {
  FourierSum out = *this;
  out.terms.insert(out.terms.end(), other.terms.begin(), other.terms.end());
  return out;
}

std::complex<double> angular_inner_product(const FourierSum& f, const FourierSum& g, double width) {
  std::complex<double> sum = 0.0;
  for (const auto& a : f.terms) {
    for (const auto& b : g.terms) {
      const double dmu = b.frequency - a.frequency;
      std::complex<double> integral;
      if (std::abs(dmu) * width < 1e-12) {
        integral = width;
      } else {
        // (e^{i dmu W} - 1) / (i dmu)
        integral = (std::polar(1.0, dmu * width) - 1.0) / std::complex<double>(0.0, dmu);
      }
      sum += std::conj(a.coefficient) * b.coefficient * integral;
    }
  }
  return sum;
}

EigenfunctionEvaluator::EigenfunctionEvaluator(ModelTag model, std::map<std::string, std::int64_t> quantum_numbers,
                                               double normalization, Domain domain,
                                               std::function<double(double)> radial,
                                               std::vector<FourierSum> angular,
                                               std::map<std::string, double> ode_parameters)
    : model_(model),
      quantum_numbers_(std::move(quantum_numbers)),
      normalization_(normalization),
      domain_(domain),
      radial_(std::move(radial)),
      angular_(std::move(angular)),
      ode_parameters_(std::move(ode_parameters)) {}

double EigenfunctionEvaluator::ode_parameter(const std::string& name) const {
  auto it = ode_parameters_.find(name);
  if (it == ode_parameters_.end()) fail(ErrorCode::DomainMismatch, "evaluator has no parameter '" + name + "'");
  return it->second;
}

std::complex<double> EigenfunctionEvaluator::operator()(double u, double phi) const {
  const double r = radial_(u);
  if (domain_.kind == Domain::Kind::Interval) return r;
  return r * angular_.front()(phi);
}

std::vector<std::complex<double>> EigenfunctionEvaluator::values(double u, double phi) const {
  const double r = radial_(u);
  if (domain_.kind == Domain::Kind::Interval) return {r};
  std::vector<std::complex<double>> out;
  out.reserve(angular_.size());
  for (const auto& a : angular_) out.push_back(r * a(phi));
  return out;
}

}  // namespace orbiquant

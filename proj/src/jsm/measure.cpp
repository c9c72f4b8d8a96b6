#include "jointspec/jsm/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace jointspec::jsm {

double SignedMeasure::total_mass() const {
  double s = 0.0;
  for (const auto& a : atoms) s += a.weight;
  return s;
}

double SignedMeasure::total_variation() const {
  double s = 0.0;
  for (const auto& a : atoms) s += std::fabs(a.weight);
  return s;
}

const Atom* SignedMeasure::find(const std::vector<int>& classes) const {
  auto it = std::lower_bound(atoms.begin(), atoms.end(), classes,
                             [](const Atom& a, const std::vector<int>& key) { return a.classes < key; });
  if (it == atoms.end() || it->classes != classes) return nullptr;
  return &*it;
}

SignedMeasure build_measure(const linalg::EigenSystem& eig, const MeasureConfig& cfg) {
  const std::size_t n = eig.size();
  if (n > cfg.max_dimension)
    throw std::domain_error("full measure construction is capped at n = " + std::to_string(cfg.max_dimension) +
                            " (got n = " + std::to_string(n) + "); use moment-level operations instead");

  std::map<std::vector<int>, double> groups;
  std::vector<int> tau(n);
  std::iota(tau.begin(), tau.end(), 0);
  std::vector<int> key(n);
  do {
    double w = static_cast<double>(linalg::permutation_sign(tau));
    for (std::size_t j = 0; j < n && w != 0.0; ++j) w *= eig.basis(j, static_cast<std::size_t>(tau[j]));
    for (std::size_t j = 0; j < n; ++j) key[j] = eig.class_of[static_cast<std::size_t>(tau[j])];
    if (w != 0.0) groups[key] += w;
  } while (std::next_permutation(tau.begin(), tau.end()));

  SignedMeasure mu;
  mu.dimension = n;
  for (const auto& [classes, weight] : groups) {
    Atom atom;
    atom.classes = classes;
    atom.weight = weight;
    atom.point.resize(n);
    for (std::size_t i = 0; i < n; ++i) atom.point[i] = eig.class_value(classes[i]);
    mu.atoms.push_back(std::move(atom));
  }
  return mu;
}

double moment_oracle(const SignedMeasure& measure, const MultiIndex& k) {
  if (k.size() != measure.dimension) throw std::invalid_argument("multi-index length must equal measure dimension");
  double total = 0.0;
  for (const auto& atom : measure.atoms) {
    double term = atom.weight;
    for (std::size_t i = 0; i < k.size(); ++i)
      for (unsigned e = 0; e < k[i]; ++e) term *= atom.point[i];
    total += term;
  }
  return total;
}

double moment_magnitude(const SignedMeasure& measure, const MultiIndex& k) {
  double total = 0.0;
  for (const auto& atom : measure.atoms) {
    double term = std::fabs(atom.weight);
    for (std::size_t i = 0; i < k.size(); ++i) term *= std::pow(std::fabs(atom.point[i]), k[i]);
    total += term;
  }
  return total;
}

double max_weight_difference(const SignedMeasure& a, const SignedMeasure& b) {
  double worst = 0.0;
  for (const auto& atom : a.atoms) {
    const Atom* other = b.find(atom.classes);
    worst = std::max(worst, std::fabs(atom.weight - (other ? other->weight : 0.0)));
  }
  for (const auto& atom : b.atoms)
    if (!a.find(atom.classes)) worst = std::max(worst, std::fabs(atom.weight));
  return worst;
}

}  // namespace jointspec::jsm

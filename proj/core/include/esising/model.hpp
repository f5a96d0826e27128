// Copyright 2026 The esising Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Extractive-summarization problem definition and the exact (floating
// point) formulation chain: objective -> penalty QUBO -> Ising.
//
// Conventions used throughout the library:
//  * Pairwise sums over ordered pairs (i != j) count each unordered pair
//    twice. Storage keeps one value per unordered pair i < j.
//  * QUBO quad{i,j} stores the folded coefficient, i.e. both ordered-pair
//    contributions, so  E_qubo(x) = sum_i linear_i x_i
//                                 + sum_{i<j} quad{i,j} x_i x_j + offset.
//  * Ising j{i,j} stores the per-ordered-pair coupling J_ij, so
//    E_ising(s) = sum_i h_i s_i + sum_{i<j} 2 j{i,j} s_i s_j + offset.
//  * Spins and bits are related by s = 2x - 1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "esising/triangular.hpp"

namespace esising {

using Bits = std::vector<std::uint8_t>;
using Spins = std::vector<std::int8_t>;

class EsInstance {
 public:
  // `beta` is the full N x N matrix. It must be exactly symmetric; a nonzero
  // diagonal is rejected too. Asymmetric input is never averaged.
  EsInstance(std::string name, std::vector<double> mu,
             const std::vector<std::vector<double>>& beta, double lambda,
             int summary_length, std::vector<std::string> sentences = {});

  // Same, from already-packed upper-triangular redundancy scores.
  EsInstance(std::string name, std::vector<double> mu,
             UpperTriangular<double> beta, double lambda, int summary_length,
             std::vector<std::string> sentences = {});

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(mu_.size()); }
  int summary_length() const { return summary_length_; }
  double lambda() const { return lambda_; }
  std::span<const double> mu() const { return mu_; }
  double mu(int i) const { return mu_[static_cast<std::size_t>(i)]; }
  double beta(int i, int j) const {
    return i == j ? 0.0
                  : beta_.at(static_cast<std::size_t>(i),
                             static_cast<std::size_t>(j));
  }
  const UpperTriangular<double>& beta_packed() const { return beta_; }
  const std::vector<std::string>& sentences() const { return sentences_; }
  bool has_sentences() const { return !sentences_.empty(); }

  // Subproblem over `indices` (parent positions, kept in the given order)
  // with a new summary length. mu and beta are exact restrictions.
  EsInstance restrict_to(std::span<const int> indices, int summary_length,
                         std::string name = {}) const;

 private:
  void validate() const;

  std::string name_;
  std::vector<double> mu_;
  UpperTriangular<double> beta_;
  double lambda_;
  int summary_length_;
  std::vector<std::string> sentences_;
};

// Binary sentence choice.
class Selection {
 public:
  Selection() = default;
  explicit Selection(Bits chosen);
  static Selection from_indices(int n, std::span<const int> indices);
  static Selection from_spins(std::span<const std::int8_t> spins);

  int size() const { return static_cast<int>(chosen_.size()); }
  int count() const;
  bool contains(int i) const { return chosen_[static_cast<std::size_t>(i)] != 0; }
  bool feasible(int summary_length) const { return count() == summary_length; }
  const Bits& bits() const { return chosen_; }
  std::vector<int> indices() const;
  Spins spins() const;

  void set(int i, bool on) { chosen_[static_cast<std::size_t>(i)] = on ? 1 : 0; }

  friend bool operator==(const Selection&, const Selection&) = default;

 private:
  Bits chosen_;
};

struct QuboForm {
  std::vector<double> linear;
  UpperTriangular<double> quad;
  double offset = 0.0;

  int size() const { return static_cast<int>(linear.size()); }
  double energy(std::span<const std::uint8_t> x) const;
};

struct IsingForm {
  std::vector<double> h;
  UpperTriangular<double> j;
  double offset = 0.0;

  int size() const { return static_cast<int>(h.size()); }
};

enum class Formulation { original, improved };

// sum_i mu_i x_i - lambda sum_{i != j} beta_ij x_i x_j. Feasibility is not
// required.
double fp_objective(const EsInstance& instance, const Selection& sel);

// The penalized maximization objective with bias mu_b:
// sum_i (mu_i + mu_b) x_i - lambda sum_{i!=j} beta_ij x_i x_j
//   - gamma (sum_i x_i - M)^2.
double penalized_objective(const EsInstance& instance, const Selection& sel,
                           double gamma, double mu_b);

// max_i |mu_i| + 2 lambda max_i sum_{j != i} |beta_ij| + 1e-6. From any
// infeasible point some single flip toward |x| = M strictly lowers the
// penalized energy, so every unconstrained minimum is feasible.
double default_gamma(const EsInstance& instance);

// Minimization QUBO whose energy equals -penalized_objective exactly.
QuboForm build_qubo(const EsInstance& instance, double gamma, double mu_b = 0.0);

// Exact change of variables x = (1 + s) / 2. Energies are preserved,
// including the constant.
IsingForm qubo_to_ising(const QuboForm& qubo);

// Ising energy including the offset.
double ising_energy(const IsingForm& form, std::span<const std::int8_t> spins);

// Even-length inputs return the mean of the two middle values.
double median(std::span<const double> values);

// Bias that aligns median(h) with median(J): builds the mu_b = 0 Ising form
// and returns 2 * (median(h) - median(J)).
double default_bias(const EsInstance& instance, double gamma);

// A compiled formulation with the parameters that produced it.
struct CompiledForm {
  Formulation formulation = Formulation::original;
  double gamma = 0.0;
  double mu_b = 0.0;
  QuboForm qubo;
  IsingForm ising;
};

// Builds QUBO and Ising forms. gamma defaults to default_gamma; for the
// improved formulation mu_b defaults to default_bias, otherwise 0.
CompiledForm compile(const EsInstance& instance, Formulation formulation,
                     std::optional<double> gamma = std::nullopt,
                     std::optional<double> mu_b = std::nullopt);

const char* to_string(Formulation f);
Formulation formulation_from_string(const std::string& s);

}  // namespace esising

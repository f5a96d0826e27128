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

#include "esising/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "esising/error.hpp"

namespace esising {
namespace {

UpperTriangular<double> pack_symmetric(const std::vector<std::vector<double>>& full,
                                       std::size_t n) {
  if (full.size() != n) {
    std::ostringstream os;
    os << "beta must be " << n << "x" << n << " (got " << full.size() << " rows)";
    throw InvalidInstance(os.str());
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (full[i].size() != n) {
      std::ostringstream os;
      os << "beta row " << i << " has " << full[i].size() << " entries, expected " << n;
      throw InvalidInstance(os.str());
    }
  }
  UpperTriangular<double> packed(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (full[i][i] != 0.0) {
      std::ostringstream os;
      os << "beta diagonal must be 0 (beta[" << i << "][" << i << "] = " << full[i][i] << ")";
      throw InvalidInstance(os.str());
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (full[i][j] != full[j][i]) {
        std::ostringstream os;
        os << "beta must be symmetric (beta[" << i << "][" << j << "] = " << full[i][j]
           << " but beta[" << j << "][" << i << "] = " << full[j][i] << ")";
        throw InvalidInstance(os.str());
      }
      packed.at(i, j) = full[i][j];
    }
  }
  return packed;
}

void check_length(const EsInstance& instance, int n, const char* what) {
  if (n != instance.size()) {
    std::ostringstream os;
    os << what << " has length " << n << " but the instance has " << instance.size()
       << " sentences";
    throw InvalidArgument(os.str());
  }
}

}  // namespace

EsInstance::EsInstance(std::string name, std::vector<double> mu,
                       const std::vector<std::vector<double>>& beta, double lambda,
                       int summary_length, std::vector<std::string> sentences)
    : EsInstance(std::move(name), mu, pack_symmetric(beta, mu.size()), lambda,
                 summary_length, std::move(sentences)) {}

EsInstance::EsInstance(std::string name, std::vector<double> mu,
                       UpperTriangular<double> beta, double lambda, int summary_length,
                       std::vector<std::string> sentences)
    : name_(std::move(name)),
      mu_(std::move(mu)),
      beta_(std::move(beta)),
      lambda_(lambda),
      summary_length_(summary_length),
      sentences_(std::move(sentences)) {
  validate();
}

void EsInstance::validate() const {
  const int n = size();
  if (n < 2) throw InvalidInstance("instance needs N >= 2 sentences (got " + std::to_string(n) + ")");
  if (beta_.dim() != mu_.size()) throw InvalidInstance("beta dimension does not match mu length");
  if (summary_length_ < 1 || summary_length_ >= n) {
    std::ostringstream os;
    os << "summary length M must satisfy 1 <= M < N (M = " << summary_length_ << ", N = " << n
       << ")";
    throw InvalidInstance(os.str());
  }
  if (!std::isfinite(lambda_) || lambda_ < 0.0) {
    throw InvalidInstance("lambda must be finite and >= 0");
  }
  for (double m : mu_) {
    if (!std::isfinite(m)) throw InvalidInstance("mu entries must be finite");
  }
  for (double b : beta_.values()) {
    if (!std::isfinite(b)) throw InvalidInstance("beta entries must be finite");
  }
  if (!sentences_.empty() && static_cast<int>(sentences_.size()) != n) {
    std::ostringstream os;
    os << "sentences has " << sentences_.size() << " entries but mu has " << n;
    throw InvalidInstance(os.str());
  }
}

EsInstance EsInstance::restrict_to(std::span<const int> indices, int summary_length,
                                   std::string name) const {
  const std::size_t k = indices.size();
  for (int idx : indices) {
    if (idx < 0 || idx >= size()) throw InvalidArgument("restriction index out of range");
  }
  std::vector<double> mu(k);
  UpperTriangular<double> beta(k);
  std::vector<std::string> sentences;
  for (std::size_t a = 0; a < k; ++a) {
    mu[a] = mu_[static_cast<std::size_t>(indices[a])];
    for (std::size_t b = a + 1; b < k; ++b) {
      if (indices[a] == indices[b]) throw InvalidArgument("restriction indices must be distinct");
      beta.at(a, b) = this->beta(indices[a], indices[b]);
    }
    if (has_sentences()) sentences.push_back(sentences_[static_cast<std::size_t>(indices[a])]);
  }
  return EsInstance(name.empty() ? name_ : std::move(name), std::move(mu), std::move(beta),
                    lambda_, summary_length, std::move(sentences));
}

Selection::Selection(Bits chosen) : chosen_(std::move(chosen)) {
  for (auto b : chosen_) {
    if (b > 1) throw InvalidArgument("selection entries must be 0 or 1");
  }
}

Selection Selection::from_indices(int n, std::span<const int> indices) {
  Bits bits(static_cast<std::size_t>(n), 0);
  for (int i : indices) {
    if (i < 0 || i >= n) throw InvalidArgument("selection index out of range");
    bits[static_cast<std::size_t>(i)] = 1;
  }
  return Selection(std::move(bits));
}

Selection Selection::from_spins(std::span<const std::int8_t> spins) {
  Bits bits(spins.size());
  for (std::size_t i = 0; i < spins.size(); ++i) {
    if (spins[i] != 1 && spins[i] != -1) throw InvalidArgument("spin values must be -1 or +1");
    bits[i] = spins[i] > 0 ? 1 : 0;
  }
  return Selection(std::move(bits));
}

int Selection::count() const {
  return static_cast<int>(std::count(chosen_.begin(), chosen_.end(), std::uint8_t{1}));
}

std::vector<int> Selection::indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < chosen_.size(); ++i) {
    if (chosen_[i]) out.push_back(static_cast<int>(i));
  }
  return out;
}

Spins Selection::spins() const {
  Spins s(chosen_.size());
  for (std::size_t i = 0; i < chosen_.size(); ++i) s[i] = chosen_[i] ? 1 : -1;
  return s;
}

double QuboForm::energy(std::span<const std::uint8_t> x) const {
  if (x.size() != linear.size()) throw InvalidArgument("bit vector length does not match QUBO size");
  const std::size_t n = linear.size();
  double e = offset;
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i]) continue;
    e += linear[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (x[j]) e += quad.at(i, j);
    }
  }
  return e;
}

double fp_objective(const EsInstance& instance, const Selection& sel) {
  check_length(instance, sel.size(), "selection");
  const auto idx = sel.indices();
  double obj = 0.0;
  double redundancy = 0.0;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    obj += instance.mu(idx[a]);
    for (std::size_t b = a + 1; b < idx.size(); ++b) redundancy += instance.beta(idx[a], idx[b]);
  }
  return obj - 2.0 * instance.lambda() * redundancy;
}

double penalized_objective(const EsInstance& instance, const Selection& sel, double gamma,
                           double mu_b) {
  const double k = sel.count();
  const double violation = k - instance.summary_length();
  return fp_objective(instance, sel) + mu_b * k - gamma * violation * violation;
}

double default_gamma(const EsInstance& instance) {
  const int n = instance.size();
  double mu_max = 0.0;
  for (double v : instance.mu()) mu_max = std::max(mu_max, std::abs(v));
  double row_max = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j != i) row += std::abs(instance.beta(i, j));
    }
    row_max = std::max(row_max, row);
  }
  // Redundancy is summed over ordered pairs, so one sentence moves the
  // objective by up to 2 lambda row_max.
  return mu_max + 2.0 * instance.lambda() * row_max + 1e-6;
}

QuboForm build_qubo(const EsInstance& instance, double gamma, double mu_b) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw InvalidArgument("penalty gamma must be positive and finite");
  }
  const int n = instance.size();
  const double m = instance.summary_length();
  QuboForm q;
  q.linear.resize(static_cast<std::size_t>(n));
  q.quad = UpperTriangular<double>(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    q.linear[static_cast<std::size_t>(i)] = -instance.mu(i) - mu_b - 2.0 * gamma * m + gamma;
    for (int j = i + 1; j < n; ++j) {
      q.quad.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          2.0 * (instance.lambda() * instance.beta(i, j) + gamma);
    }
  }
  q.offset = gamma * m * m;
  return q;
}

IsingForm qubo_to_ising(const QuboForm& qubo) {
  const std::size_t n = qubo.linear.size();
  IsingForm f;
  f.h.assign(n, 0.0);
  f.j = UpperTriangular<double>(n);
  double offset = qubo.offset;
  for (std::size_t i = 0; i < n; ++i) {
    f.h[i] += qubo.linear[i] / 2.0;
    offset += qubo.linear[i] / 2.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double q = qubo.quad.at(i, j);
      f.h[i] += q / 4.0;
      f.h[j] += q / 4.0;
      f.j.at(i, j) = q / 8.0;
      offset += q / 4.0;
    }
  }
  f.offset = offset;
  return f;
}

double ising_energy(const IsingForm& form, std::span<const std::int8_t> spins) {
  const std::size_t n = form.h.size();
  if (spins.size() != n) throw InvalidArgument("spin vector length does not match Ising size");
  double e = form.offset;
  for (std::size_t i = 0; i < n; ++i) {
    if (spins[i] != 1 && spins[i] != -1) throw InvalidArgument("spin values must be -1 or +1");
    e += form.h[i] * spins[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      e += 2.0 * form.j.at(i, j) * spins[i] * spins[j];
    }
  }
  return e;
}

double median(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("median of an empty set");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

double default_bias(const EsInstance& instance, double gamma) {
  const IsingForm f = qubo_to_ising(build_qubo(instance, gamma, 0.0));
  return 2.0 * (median(f.h) - median(f.j.values()));
}

CompiledForm compile(const EsInstance& instance, Formulation formulation,
                     std::optional<double> gamma, std::optional<double> mu_b) {
  CompiledForm c;
  c.formulation = formulation;
  c.gamma = gamma ? *gamma : default_gamma(instance);
  if (mu_b) {
    c.mu_b = *mu_b;
  } else {
    c.mu_b = formulation == Formulation::improved ? default_bias(instance, c.gamma) : 0.0;
  }
  c.qubo = build_qubo(instance, c.gamma, c.mu_b);
  c.ising = qubo_to_ising(c.qubo);
  return c;
}

const char* to_string(Formulation f) {
  return f == Formulation::improved ? "improved" : "original";
}

Formulation formulation_from_string(const std::string& s) {
  if (s == "original") return Formulation::original;
  if (s == "improved") return Formulation::improved;
  throw InvalidArgument("unknown formulation '" + s + "' (expected original|improved)");
}

}  // namespace esising

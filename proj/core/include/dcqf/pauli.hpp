// Copyright 2026 The DCQF Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Weighted Pauli strings and the symbolic algebra over them.
//
// Tensor order: site 0 is the most significant Kronecker factor, so basis
// index b has site i in bit (n - 1 - i). Every module inherits this.

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "dcqf/common.hpp"

namespace dcqf {

using Complex = std::complex<double>;

enum class Axis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char axis_char(Axis a);

/// Power of i: the phase i^k with k in {0, 1, 2, 3}.
struct Phase {
  int power = 0;

  Complex value() const;
  friend bool operator==(Phase, Phase) = default;
};

/// Tensor product of single-site Paulis on up to 64 sites, stored as x/z bit
/// masks (Y = both bits set). Identity sites carry no bits, so equality is
/// equality of the non-identity site maps.
class PauliString {
 public:
  static constexpr std::size_t kMaxSites = 64;

  PauliString() = default;
  explicit PauliString(std::size_t n);

  /// Parses "IXYZ"-style labels; character i is site i.
  static PauliString from_str(std::string_view labels);
  static PauliString single(std::size_t n, std::size_t site, Axis axis);
  static PauliString pair(std::size_t n, std::size_t i, Axis a, std::size_t j, Axis b);

  std::size_t num_sites() const { return n_; }
  Axis at(std::size_t site) const;
  void set(std::size_t site, Axis axis);

  std::size_t weight() const;
  std::size_t y_weight() const;
  bool is_identity() const { return (x_ | z_) == 0; }
  /// Non-identity sites in ascending order.
  std::vector<std::size_t> support() const;

  std::uint64_t x_bits() const { return x_; }
  std::uint64_t z_bits() const { return z_; }

  std::string str() const;

  bool commutes_with(const PauliString& other) const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  /// Lexicographic on site labels from site 0, with I < X < Y < Z.
  friend bool operator<(const PauliString& a, const PauliString& b);

 private:
  std::uint32_t n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

struct PauliProduct {
  Phase phase;
  PauliString string;
};

/// (matrix of a)(matrix of b) = phase * (matrix of result).
PauliProduct mul(const PauliString& a, const PauliString& b);

/// Linear combination of Pauli strings with complex coefficients. Terms with
/// |c| <= kDropTolerance are dropped on every mutation, so the map is canonical.
class PauliSum {
 public:
  using TermMap = std::map<PauliString, Complex>;

  PauliSum() = default;
  explicit PauliSum(std::size_t n) : n_(n) {}
  PauliSum(const PauliString& s, Complex c);

  static PauliSum identity(std::size_t n, Complex c = 1.0);

  std::size_t num_sites() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  TermMap::const_iterator begin() const { return terms_.begin(); }
  TermMap::const_iterator end() const { return terms_.end(); }

  Complex coeff(const PauliString& s) const;
  Complex coeff(std::string_view labels) const { return coeff(PauliString::from_str(labels)); }

  void add(const PauliString& s, Complex c);

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(Complex c);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(Complex c, PauliSum a) { return a *= c; }
  friend PauliSum operator*(PauliSum a, Complex c) { return a *= c; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  /// All coefficients real to within tol (Hermitian operator).
  bool is_hermitian(double tol = kDropTolerance) const;
  /// Hilbert-Schmidt norm sqrt(Tr[A^dag A] / 2^n).
  double norm() const;
  /// Largest string weight present (0 for an empty or identity-only sum).
  std::size_t max_weight() const;

  std::string str() const;

  friend bool operator==(const PauliSum&, const PauliSum&) = default;

 private:
  std::size_t n_ = 0;
  TermMap terms_;
};

/// AB - BA. Only anticommuting string pairs contribute, each as 2ab * phase.
PauliSum commutator(const PauliSum& a, const PauliSum& b);

/// Tr[A^dag B] / 2^n from Pauli-basis orthogonality; no matrices are formed.
Complex hs_inner(const PauliSum& a, const PauliSum& b);

Eigen::MatrixXcd to_dense(const PauliString& s);
Eigen::MatrixXcd to_dense(const PauliSum& a);

}  // namespace dcqf

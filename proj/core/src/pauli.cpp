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

#include "dcqf/pauli.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace dcqf {
namespace {

constexpr std::uint64_t bit(std::size_t site) { return std::uint64_t{1} << site; }

// Phase exponent k in a*b = i^k c for single-site labels.
constexpr int kSitePhase[4][4] = {
    //        I  X  Y  Z
    /* I */ {0, 0, 0, 0},
    /* X */ {0, 0, 1, 3},
    /* Y */ {0, 3, 0, 1},
    /* Z */ {0, 1, 3, 0},
};

void check_same_sites(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(std::string(what) + ": site count mismatch (" + std::to_string(a) + " vs " +
                std::to_string(b) + ")");
  }
}

}  // namespace

char axis_char(Axis a) { return "IXYZ"[static_cast<int>(a)]; }

Complex Phase::value() const {
  switch (power & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

PauliString::PauliString(std::size_t n) : n_(static_cast<std::uint32_t>(n)) {
  if (n > kMaxSites) {
    throw Error("PauliString supports at most 64 sites, got " + std::to_string(n));
  }
}

PauliString PauliString::from_str(std::string_view labels) {
  PauliString s(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    switch (labels[i]) {
      case 'I': case '_': break;
      case 'X': s.set(i, Axis::X); break;
      case 'Y': s.set(i, Axis::Y); break;
      case 'Z': s.set(i, Axis::Z); break;
      default:
        throw Error("invalid Pauli label '" + std::string(1, labels[i]) + "' at position " +
                    std::to_string(i));
    }
  }
  return s;
}

PauliString PauliString::single(std::size_t n, std::size_t site, Axis axis) {
  PauliString s(n);
  s.set(site, axis);
  return s;
}

PauliString PauliString::pair(std::size_t n, std::size_t i, Axis a, std::size_t j, Axis b) {
  PauliString s(n);
  s.set(i, a);
  s.set(j, b);
  return s;
}

Axis PauliString::at(std::size_t site) const {
  if (site >= n_) {
    throw Error("site " + std::to_string(site) + " out of range for " + std::to_string(n_) + " sites");
  }
  const bool x = (x_ & bit(site)) != 0;
  const bool z = (z_ & bit(site)) != 0;
  if (x) {
    return z ? Axis::Y : Axis::X;
  }
  return z ? Axis::Z : Axis::I;
}

void PauliString::set(std::size_t site, Axis axis) {
  if (site >= n_) {
    throw Error("site " + std::to_string(site) + " out of range for " + std::to_string(n_) + " sites");
  }
  x_ &= ~bit(site);
  z_ &= ~bit(site);
  if (axis == Axis::X || axis == Axis::Y) x_ |= bit(site);
  if (axis == Axis::Z || axis == Axis::Y) z_ |= bit(site);
}

std::size_t PauliString::weight() const { return static_cast<std::size_t>(std::popcount(x_ | z_)); }

std::size_t PauliString::y_weight() const { return static_cast<std::size_t>(std::popcount(x_ & z_)); }

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> sites;
  for (std::uint64_t m = x_ | z_; m != 0; m &= m - 1) {
    sites.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return sites;
}

std::string PauliString::str() const {
  std::string out(n_, 'I');
  for (std::size_t i = 0; i < n_; ++i) out[i] = axis_char(at(i));
  return out;
}

bool PauliString::commutes_with(const PauliString& other) const {
  // Symplectic form: number of sites where the two anticommute, mod 2.
  const std::uint64_t anti = (x_ & other.z_) ^ (z_ & other.x_);
  return std::popcount(anti) % 2 == 0;
}

bool operator<(const PauliString& a, const PauliString& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  const std::uint64_t diff = (a.x_ ^ b.x_) | (a.z_ ^ b.z_);
  if (diff == 0) return false;
  const auto site = static_cast<std::size_t>(std::countr_zero(diff));
  return static_cast<int>(a.at(site)) < static_cast<int>(b.at(site));
}

PauliProduct mul(const PauliString& a, const PauliString& b) {
  check_same_sites(a.num_sites(), b.num_sites(), "mul");
  int power = 0;
  for (std::uint64_t m = (a.x_bits() | a.z_bits()) & (b.x_bits() | b.z_bits()); m != 0; m &= m - 1) {
    const auto site = static_cast<std::size_t>(std::countr_zero(m));
    power += kSitePhase[static_cast<int>(a.at(site))][static_cast<int>(b.at(site))];
  }
  PauliString c(a.num_sites());
  for (std::uint64_t m = (a.x_bits() ^ b.x_bits()) | (a.z_bits() ^ b.z_bits()); m != 0; m &= m - 1) {
    const auto site = static_cast<std::size_t>(std::countr_zero(m));
    const bool x = ((a.x_bits() ^ b.x_bits()) >> site) & 1U;
    const bool z = ((a.z_bits() ^ b.z_bits()) >> site) & 1U;
    c.set(site, x ? (z ? Axis::Y : Axis::X) : Axis::Z);
  }
  return {Phase{power & 3}, c};
}

PauliSum::PauliSum(const PauliString& s, Complex c) : n_(s.num_sites()) { add(s, c); }

PauliSum PauliSum::identity(std::size_t n, Complex c) { return PauliSum(PauliString(n), c); }

Complex PauliSum::coeff(const PauliString& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Complex{} : it->second;
}

void PauliSum::add(const PauliString& s, Complex c) {
  if (terms_.empty() && n_ == 0) {
    n_ = s.num_sites();
  }
  check_same_sites(n_, s.num_sites(), "PauliSum::add");
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
  }
  if (std::abs(it->second) <= kDropTolerance) {
    terms_.erase(it);
  }
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_ == 0 && other.empty()) return *this;
  if (n_ == 0 && empty()) n_ = other.n_;
  check_same_sites(n_, other.n_, "PauliSum::operator+=");
  for (const auto& [s, c] : other.terms_) add(s, c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  if (other.n_ == 0 && other.empty()) return *this;
  if (n_ == 0 && empty()) n_ = other.n_;
  check_same_sites(n_, other.n_, "PauliSum::operator-=");
  for (const auto& [s, c] : other.terms_) add(s, -c);
  return *this;
}

PauliSum& PauliSum::operator*=(Complex c) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (std::abs(it->second) <= kDropTolerance) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  check_same_sites(a.n_, b.n_, "PauliSum product");
  PauliSum out(a.n_);
  for (const auto& [sa, ca] : a.terms_) {
    for (const auto& [sb, cb] : b.terms_) {
      auto [phase, s] = mul(sa, sb);
      out.add(s, phase.value() * ca * cb);
    }
  }
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& [s, c] : terms_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

double PauliSum::norm() const { return std::sqrt(hs_inner(*this, *this).real()); }

std::size_t PauliSum::max_weight() const {
  std::size_t w = 0;
  for (const auto& [s, c] : terms_) w = std::max(w, s.weight());
  return w;
}

std::string PauliSum::str() const {
  std::ostringstream os;
  os.precision(12);
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c.imag() == 0.0) {
      os << c.real();
    } else {
      os << '(' << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    }
    os << '*' << s.str();
  }
  return first ? "0" : os.str();
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  check_same_sites(a.num_sites(), b.num_sites(), "commutator");
  PauliSum out(a.num_sites());
  for (const auto& [sa, ca] : a) {
    for (const auto& [sb, cb] : b) {
      if (sa.commutes_with(sb)) continue;
      // Anticommuting: ab = w c and ba = -w c, so [a, b] = 2 w c.
      auto [phase, s] = mul(sa, sb);
      out.add(s, 2.0 * phase.value() * ca * cb);
    }
  }
  return out;
}

Complex hs_inner(const PauliSum& a, const PauliSum& b) {
  check_same_sites(a.num_sites(), b.num_sites(), "hs_inner");
  const PauliSum& small = a.size() <= b.size() ? a : b;
  const PauliSum& large = a.size() <= b.size() ? b : a;
  Complex acc{};
  for (const auto& [s, c] : small) {
    const Complex other = large.coeff(s);
    if (other == Complex{}) continue;
    acc += (&small == &a) ? std::conj(c) * other : std::conj(other) * c;
  }
  return acc;
}

Eigen::MatrixXcd to_dense(const PauliString& s) {
  const std::size_t n = s.num_sites();
  require_dense(n, "to_dense");
  const std::size_t dim = std::size_t{1} << n;
  // Site i lives in bit (n - 1 - i) of the basis index.
  std::uint64_t flip = 0;
  std::uint64_t zmask = 0;
  for (std::size_t site = 0; site < n; ++site) {
    const Axis a = s.at(site);
    const std::uint64_t b = std::uint64_t{1} << (n - 1 - site);
    if (a == Axis::X || a == Axis::Y) flip |= b;
    if (a == Axis::Z || a == Axis::Y) zmask |= b;
  }
  const Complex base = Phase{static_cast<int>(s.y_weight() & 3)}.value();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t col = 0; col < dim; ++col) {
    const double sign = (std::popcount(col & zmask) % 2 == 0) ? 1.0 : -1.0;
    m(static_cast<Eigen::Index>(col ^ flip), static_cast<Eigen::Index>(col)) = sign * base;
  }
  return m;
}

Eigen::MatrixXcd to_dense(const PauliSum& a) {
  const std::size_t n = a.num_sites();
  require_dense(n, "to_dense");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [s, c] : a) m += c * to_dense(s);
  return m;
}

}  // namespace dcqf

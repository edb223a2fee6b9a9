#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace isotone {

/// Norm of the ambient space: lp with exponent 1 <= p < infinity, or sup.
class Norm {
 public:
  static Norm lp(double exponent);
  static Norm sup() { return Norm(0.0, true); }

  bool is_sup() const { return sup_; }

  /// Exponent of an lp norm; invalid for sup.
  double exponent() const;

  std::string describe() const;

  friend bool operator==(const Norm& a, const Norm& b) {
    return a.sup_ == b.sup_ && (a.sup_ || a.exponent_ == b.exponent_);
  }
  friend bool operator!=(const Norm& a, const Norm& b) { return !(a == b); }

 private:
  Norm(double exponent, bool is_sup) : exponent_(exponent), sup_(is_sup) {}

  double exponent_;
  bool sup_;
};

/// Finite-dimensional real vector tagged with the norm of its ambient space.
/// Entries are validated finite at construction; treat instances as values,
/// every operation on them is pure.
class RealVector {
 public:
  RealVector(std::vector<double> entries, Norm norm_kind);

  std::size_t dim() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<double>& entries() const { return entries_; }
  const Norm& norm_kind() const { return norm_kind_; }

  friend bool operator==(const RealVector& a, const RealVector& b) {
    return a.norm_kind_ == b.norm_kind_ && a.entries_ == b.entries_;
  }

 private:
  std::vector<double> entries_;
  Norm norm_kind_;
};

/// Norm of x under its attached kind: (sum |x_i|^p)^(1/p) or max |x_i|.
double norm(const RealVector& x);
double norm(const std::vector<double>& entries, const Norm& kind);

double norm_l2(const RealVector& x);
double dot(const RealVector& x, const RealVector& y);

RealVector add(const RealVector& a, const RealVector& b);
RealVector sub(const RealVector& a, const RealVector& b);
RealVector scale(double s, const RealVector& a);

/// Componentwise max(x_i, 0); the canonical nearest point in every positive
/// cone handled by this library.
RealVector plus_part(const RealVector& x);

RealVector zeros_like(const RealVector& x);
RealVector constant_vector(std::size_t dim, double value, Norm kind);

/// Same entries, different ambient norm.
RealVector with_norm(const RealVector& x, Norm kind);

}  // namespace isotone

#include "isotone/vector.hpp"

#include <algorithm>
#include <cmath>

#include "isotone/errors.hpp"

namespace isotone {

Norm Norm::lp(double exponent) {
  require(std::isfinite(exponent) && exponent >= 1.0, Errc::invalid_argument,
          "lp norm exponent must satisfy 1 <= p < infinity");
  return Norm(exponent, false);
}

double Norm::exponent() const {
  require(!sup_, Errc::invalid_argument, "sup norm has no finite exponent");
  return exponent_;
}

std::string Norm::describe() const {
  if (sup_) return "sup";
  return "l" + std::to_string(exponent_);
}

RealVector::RealVector(std::vector<double> entries, Norm norm_kind)
    : entries_(std::move(entries)), norm_kind_(norm_kind) {
  require(!entries_.empty(), Errc::invalid_argument, "vector dimension must be >= 1");
  for (double e : entries_)
    require(std::isfinite(e), Errc::invalid_argument, "vector entries must be finite");
}

double norm(const std::vector<double>& entries, const Norm& kind) {
  if (kind.is_sup()) {
    double m = 0.0;
    for (double e : entries) m = std::max(m, std::abs(e));
    return m;
  }
  double p = kind.exponent();
  if (p == 1.0) {
    double s = 0.0;
    for (double e : entries) s += std::abs(e);
    return s;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (double e : entries) s += e * e;
    return std::sqrt(s);
  }
  double s = 0.0;
  for (double e : entries) s += std::pow(std::abs(e), p);
  return std::pow(s, 1.0 / p);
}

double norm(const RealVector& x) { return norm(x.entries(), x.norm_kind()); }

double norm_l2(const RealVector& x) { return norm(x.entries(), Norm::lp(2.0)); }

double dot(const RealVector& x, const RealVector& y) {
  require(x.dim() == y.dim(), Errc::dimension_mismatch, "dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) s += x[i] * y[i];
  return s;
}

RealVector add(const RealVector& a, const RealVector& b) {
  require(a.dim() == b.dim(), Errc::dimension_mismatch, "add: dimension mismatch");
  std::vector<double> e(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) e[i] = a[i] + b[i];
  return RealVector(std::move(e), a.norm_kind());
}

RealVector sub(const RealVector& a, const RealVector& b) {
  require(a.dim() == b.dim(), Errc::dimension_mismatch, "sub: dimension mismatch");
  std::vector<double> e(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) e[i] = a[i] - b[i];
  return RealVector(std::move(e), a.norm_kind());
}

RealVector scale(double s, const RealVector& a) {
  std::vector<double> e(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) e[i] = s * a[i];
  return RealVector(std::move(e), a.norm_kind());
}

RealVector plus_part(const RealVector& x) {
  std::vector<double> e(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) e[i] = std::max(x[i], 0.0);
  return RealVector(std::move(e), x.norm_kind());
}

RealVector zeros_like(const RealVector& x) {
  return RealVector(std::vector<double>(x.dim(), 0.0), x.norm_kind());
}

RealVector constant_vector(std::size_t dim, double value, Norm kind) {
  return RealVector(std::vector<double>(dim, value), kind);
}

RealVector with_norm(const RealVector& x, Norm kind) { return RealVector(x.entries(), kind); }

}  // namespace isotone

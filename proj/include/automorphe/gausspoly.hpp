#pragma once

#include <vector>

#include <Eigen/Dense>

#include "automorphe/common.hpp"

namespace automorphe {

// Dense polynomial in (x, xi): sum c(i,j) x^i xi^j
class Poly2 {
 public:
  Poly2() = default;
  explicit Poly2(cplx c);
  static Poly2 monomial(int i, int j, cplx c = 1.0);
  // a x + b xi + c
  static Poly2 linear(cplx a, cplx b, cplx c);

  int deg_x() const { return dx_; }
  int deg_xi() const { return dxi_; }
  cplx coeff(int i, int j) const;
  void add_to(int i, int j, cplx v);
  bool is_zero() const;

  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator*(const Poly2& o) const;
  Poly2 operator*(cplx s) const;
  Poly2& operator+=(const Poly2& o);

  Poly2 dx() const;
  Poly2 dxi() const;
  Poly2 times_x() const;
  Poly2 times_xi() const;
  cplx eval(double x, double xi) const;
  cplx eval(cplx x, cplx xi) const;
  // P(a11 x + a12 xi + b1, a21 x + a22 xi + b2)
  Poly2 affine(const Eigen::Matrix2cd& a, const Eigen::Vector2cd& b) const;
  // coefficients of t -> P(d1 t + o1, d2 t + o2)
  std::vector<cplx> along_line(double d1, double d2, double o1, double o2) const;
  // parity under (x,xi) -> (-x,-xi): 1 even, -1 odd, 0 mixed or zero
  int parity() const;

 private:
  int dx_ = -1, dxi_ = -1;
  std::vector<cplx> c_;
  void resize(int dx, int dxi);
};

// poly(x,xi) exp(-w^T Q w + 2 i pi (u x + v xi)), w = (x, xi)
struct GaussBlock {
  Poly2 poly;
  Eigen::Matrix2cd Q;
  Eigen::Vector2cd uv;
};

enum class Parity { Even, Odd, None };

class GaussPoly {
 public:
  GaussPoly() = default;
  // c x^a xi^b exp(-w^T Q w + 2 i pi (u x + v xi))
  static GaussPoly term(cplx c, int a, int b, const Eigen::Matrix2cd& Q, cplx u = 0.0, cplx v = 0.0);
  static GaussPoly gaussian(double s = PI);  // exp(-s (x^2 + xi^2))

  const std::vector<GaussBlock>& blocks() const { return blocks_; }
  bool is_zero() const;
  Parity parity() const;
  void add_block(GaussBlock b);

  GaussPoly operator+(const GaussPoly& o) const;
  GaussPoly operator-(const GaussPoly& o) const;
  GaussPoly operator*(cplx s) const;
  // pointwise product
  GaussPoly operator*(const GaussPoly& o) const;
  GaussPoly conj() const;

  cplx operator()(double x, double xi) const;
  // integral over the plane
  cplx integral() const;
  // int h(d1 t + o1, d2 t + o2) exp(2 i pi f t) dt
  cplx line_integral(double d1, double d2, double o1, double o2, double f) const;

 private:
  std::vector<GaussBlock> blocks_;
};

void validate_block(const GaussBlock& b);

// 1D moments int t^k exp(-A t^2 + B t) dt, k = 0..n
std::vector<cplx> gauss_moments_1d(cplx A, cplx B, int n);
// 2D moments int x^a xi^b exp(-w^T Q w + J.w), table m[a][b], a + b <= n
std::vector<std::vector<cplx>> gauss_moments_2d(const Eigen::Matrix2cd& Q, const Eigen::Vector2cd& J, int n);
// sqrt(det Q) on the branch continuous from positive-definite real Q
cplx sqrt_det(const Eigen::Matrix2cd& Q);

// h(A w) with real matrix A, times a scalar
GaussPoly linear_substitute(const GaussPoly& h, const Eigen::Matrix2d& A, cplx scale = 1.0);

}  // namespace automorphe

#include "automorphe/gausspoly.hpp"

#include <algorithm>

namespace automorphe {

Poly2::Poly2(cplx c) {
  resize(0, 0);
  c_[0] = c;
}

Poly2 Poly2::monomial(int i, int j, cplx c) {
  Poly2 p;
  p.add_to(i, j, c);
  return p;
}

Poly2 Poly2::linear(cplx a, cplx b, cplx c) {
  Poly2 p;
  p.add_to(0, 0, c);
  p.add_to(1, 0, a);
  p.add_to(0, 1, b);
  return p;
}

void Poly2::resize(int dx, int dxi) {
  if (dx <= dx_ && dxi <= dxi_) return;
  const int nx = std::max(dx, dx_), nxi = std::max(dxi, dxi_);
  std::vector<cplx> c(static_cast<std::size_t>((nx + 1) * (nxi + 1)), 0.0);
  for (int i = 0; i <= dx_; ++i)
    for (int j = 0; j <= dxi_; ++j) c[i * (nxi + 1) + j] = c_[i * (dxi_ + 1) + j];
  c_ = std::move(c);
  dx_ = nx;
  dxi_ = nxi;
}

cplx Poly2::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i > dx_ || j > dxi_) return 0.0;
  return c_[i * (dxi_ + 1) + j];
}

void Poly2::add_to(int i, int j, cplx v) {
  if (v == cplx(0.0)) return;
  resize(i, j);
  c_[i * (dxi_ + 1) + j] += v;
}

bool Poly2::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](cplx v) { return v == cplx(0.0); });
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r = *this;
  r += o;
  return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (int i = 0; i <= o.dx_; ++i)
    for (int j = 0; j <= o.dxi_; ++j) add_to(i, j, o.coeff(i, j));
  return *this;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + o * cplx(-1.0); }

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 r;
  for (int i = 0; i <= dx_; ++i)
    for (int j = 0; j <= dxi_; ++j) {
      const cplx a = coeff(i, j);
      if (a == cplx(0.0)) continue;
      for (int k = 0; k <= o.dx_; ++k)
        for (int l = 0; l <= o.dxi_; ++l) r.add_to(i + k, j + l, a * o.coeff(k, l));
    }
  return r;
}

Poly2 Poly2::operator*(cplx s) const {
  Poly2 r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

Poly2 Poly2::dx() const {
  Poly2 r;
  for (int i = 1; i <= dx_; ++i)
    for (int j = 0; j <= dxi_; ++j) r.add_to(i - 1, j, static_cast<double>(i) * coeff(i, j));
  return r;
}

Poly2 Poly2::dxi() const {
  Poly2 r;
  for (int i = 0; i <= dx_; ++i)
    for (int j = 1; j <= dxi_; ++j) r.add_to(i, j - 1, static_cast<double>(j) * coeff(i, j));
  return r;
}

Poly2 Poly2::times_x() const {
  Poly2 r;
  for (int i = 0; i <= dx_; ++i)
    for (int j = 0; j <= dxi_; ++j) r.add_to(i + 1, j, coeff(i, j));
  return r;
}

Poly2 Poly2::times_xi() const {
  Poly2 r;
  for (int i = 0; i <= dx_; ++i)
    for (int j = 0; j <= dxi_; ++j) r.add_to(i, j + 1, coeff(i, j));
  return r;
}

cplx Poly2::eval(cplx x, cplx xi) const {
  cplx acc = 0.0;
  for (int i = dx_; i >= 0; --i) {
    cplx row = 0.0;
    for (int j = dxi_; j >= 0; --j) row = row * xi + coeff(i, j);
    acc = acc * x + row;
  }
  return acc;
}

cplx Poly2::eval(double x, double xi) const { return eval(cplx(x), cplx(xi)); }

Poly2 Poly2::affine(const Eigen::Matrix2cd& a, const Eigen::Vector2cd& b) const {
  const Poly2 X = linear(a(0, 0), a(0, 1), b(0));
  const Poly2 Y = linear(a(1, 0), a(1, 1), b(1));
  std::vector<Poly2> xp(1, Poly2(1.0)), yp(1, Poly2(1.0));
  for (int i = 1; i <= dx_; ++i) xp.push_back(xp.back() * X);
  for (int j = 1; j <= dxi_; ++j) yp.push_back(yp.back() * Y);
  Poly2 r;
  for (int i = 0; i <= dx_; ++i)
    for (int j = 0; j <= dxi_; ++j) {
      const cplx c = coeff(i, j);
      if (c != cplx(0.0)) r += xp[i] * yp[j] * c;
    }
  return r;
}

std::vector<cplx> Poly2::along_line(double d1, double d2, double o1, double o2) const {
  const int n = std::max(0, dx_) + std::max(0, dxi_);
  std::vector<cplx> out(static_cast<std::size_t>(n + 1), 0.0);
  if (dx_ < 0) return out;
  // powers of (d1 t + o1) and (d2 t + o2) as real coefficient arrays
  std::vector<std::vector<double>> xp(dx_ + 1), yp(dxi_ + 1);
  xp[0] = {1.0};
  for (int i = 1; i <= dx_; ++i) {
    xp[i].assign(i + 1, 0.0);
    for (int k = 0; k < i; ++k) {
      xp[i][k] += o1 * xp[i - 1][k];
      xp[i][k + 1] += d1 * xp[i - 1][k];
    }
  }
  yp[0] = {1.0};
  for (int j = 1; j <= dxi_; ++j) {
    yp[j].assign(j + 1, 0.0);
    for (int k = 0; k < j; ++k) {
      yp[j][k] += o2 * yp[j - 1][k];
      yp[j][k + 1] += d2 * yp[j - 1][k];
    }
  }
  for (int i = 0; i <= dx_; ++i)
    for (int j = 0; j <= dxi_; ++j) {
      const cplx c = coeff(i, j);
      if (c == cplx(0.0)) continue;
      for (int a = 0; a <= i; ++a) {
        if (xp[i][a] == 0.0) continue;
        const cplx ca = c * xp[i][a];
        for (int b = 0; b <= j; ++b) out[a + b] += ca * yp[j][b];
      }
    }
  return out;
}

int Poly2::parity() const {
  bool even = false, odd = false;
  for (int i = 0; i <= dx_; ++i)
    for (int j = 0; j <= dxi_; ++j)
      if (coeff(i, j) != cplx(0.0)) ((i + j) % 2 == 0 ? even : odd) = true;
  if (even && odd) return 0;
  if (odd) return -1;
  return 1;
}

void validate_block(const GaussBlock& b) {
  if (b.Q(0, 1) != b.Q(1, 0)) throw DomainError("GaussPoly: Q must be symmetric");
  const Eigen::Matrix2d re = b.Q.real();
  if (!(re(0, 0) > 0 && re.determinant() > 0)) throw DomainError("GaussPoly: Re Q must be positive definite");
}

GaussPoly GaussPoly::term(cplx c, int a, int b, const Eigen::Matrix2cd& Q, cplx u, cplx v) {
  GaussPoly h;
  h.add_block({Poly2::monomial(a, b, c), Q, Eigen::Vector2cd(u, v)});
  return h;
}

GaussPoly GaussPoly::gaussian(double s) {
  Eigen::Matrix2cd Q = Eigen::Matrix2cd::Identity() * s;
  return term(1.0, 0, 0, Q);
}

bool GaussPoly::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const GaussBlock& b) { return b.poly.is_zero(); });
}

Parity GaussPoly::parity() const {
  int par = 2;  // unset
  for (const auto& b : blocks_) {
    if (b.poly.is_zero()) continue;
    if (b.uv != Eigen::Vector2cd::Zero()) return Parity::None;
    const int p = b.poly.parity();
    if (p == 0) return Parity::None;
    if (par == 2) par = p;
    else if (par != p) return Parity::None;
  }
  return par == -1 ? Parity::Odd : Parity::Even;
}

void GaussPoly::add_block(GaussBlock b) {
  if (b.poly.is_zero()) return;
  validate_block(b);
  for (auto& e : blocks_)
    if (e.Q == b.Q && e.uv == b.uv) {
      e.poly += b.poly;
      return;
    }
  blocks_.push_back(std::move(b));
}

GaussPoly GaussPoly::operator+(const GaussPoly& o) const {
  GaussPoly r = *this;
  for (const auto& b : o.blocks_) r.add_block(b);
  return r;
}

GaussPoly GaussPoly::operator-(const GaussPoly& o) const { return *this + o * cplx(-1.0); }

GaussPoly GaussPoly::operator*(cplx s) const {
  GaussPoly r;
  for (const auto& b : blocks_) r.add_block({b.poly * s, b.Q, b.uv});
  return r;
}

GaussPoly GaussPoly::operator*(const GaussPoly& o) const {
  GaussPoly r;
  for (const auto& a : blocks_)
    for (const auto& b : o.blocks_) r.add_block({a.poly * b.poly, a.Q + b.Q, a.uv + b.uv});
  return r;
}

GaussPoly GaussPoly::conj() const {
  GaussPoly r;
  for (const auto& b : blocks_) {
    Poly2 p;
    for (int i = 0; i <= b.poly.deg_x(); ++i)
      for (int j = 0; j <= b.poly.deg_xi(); ++j) p.add_to(i, j, std::conj(b.poly.coeff(i, j)));
    r.add_block({p, b.Q.conjugate(), -b.uv.conjugate()});
  }
  return r;
}

cplx GaussPoly::operator()(double x, double xi) const {
  cplx acc = 0.0;
  const Eigen::Vector2cd w(x, xi);
  for (const auto& b : blocks_) {
    const cplx quad = (w.transpose() * b.Q * w)(0, 0);
    const cplx lin = cplx(0.0, TWO_PI) * (b.uv(0) * x + b.uv(1) * xi);
    acc += b.poly.eval(x, xi) * std::exp(-quad + lin);
  }
  return acc;
}

std::vector<cplx> gauss_moments_1d(cplx A, cplx B, int n) {
  std::vector<cplx> m(static_cast<std::size_t>(n + 1));
  m[0] = std::sqrt(PI / A) * std::exp(B * B / (4.0 * A));
  if (n >= 1) m[1] = B / (2.0 * A) * m[0];
  for (int k = 1; k < n; ++k) m[k + 1] = (B * m[k] + static_cast<double>(k) * m[k - 1]) / (2.0 * A);
  return m;
}

cplx sqrt_det(const Eigen::Matrix2cd& Q) {
  const cplx tr = Q.trace();
  const cplx det = Q.determinant();
  const cplx disc = std::sqrt(tr * tr - 4.0 * det);
  const cplx l1 = 0.5 * (tr + disc), l2 = 0.5 * (tr - disc);
  return std::sqrt(l1) * std::sqrt(l2);
}

std::vector<std::vector<cplx>> gauss_moments_2d(const Eigen::Matrix2cd& Q, const Eigen::Vector2cd& J, int n) {
  std::vector<std::vector<cplx>> m(n + 2, std::vector<cplx>(n + 2, 0.0));
  const Eigen::Matrix2cd Qi = Q.inverse();
  m[0][0] = PI / sqrt_det(Q) * std::exp(0.25 * (J.transpose() * Qi * J)(0, 0));
  const Eigen::Matrix2cd half_inv = 0.5 * Qi;
  for (int d = 0; d < n; ++d)
    for (int a = 0; a <= d; ++a) {
      const int b = d - a;
      Eigen::Vector2cd rhs;
      rhs(0) = J(0) * m[a][b] + (a > 0 ? static_cast<double>(a) * m[a - 1][b] : 0.0);
      rhs(1) = J(1) * m[a][b] + (b > 0 ? static_cast<double>(b) * m[a][b - 1] : 0.0);
      const Eigen::Vector2cd sol = half_inv * rhs;
      m[a + 1][b] = sol(0);
      m[a][b + 1] = sol(1);
    }
  return m;
}

cplx GaussPoly::integral() const {
  cplx acc = 0.0;
  for (const auto& b : blocks_) {
    const int n = b.poly.deg_x() + b.poly.deg_xi();
    const Eigen::Vector2cd J = cplx(0.0, TWO_PI) * b.uv;
    const auto m = gauss_moments_2d(b.Q, J, n);
    for (int i = 0; i <= b.poly.deg_x(); ++i)
      for (int j = 0; j <= b.poly.deg_xi(); ++j) acc += b.poly.coeff(i, j) * m[i][j];
  }
  return acc;
}

cplx GaussPoly::line_integral(double d1, double d2, double o1, double o2, double f) const {
  cplx acc = 0.0;
  const cplx tpi(0.0, TWO_PI);
  for (const auto& b : blocks_) {
    const cplx q11 = b.Q(0, 0), q12 = b.Q(0, 1), q22 = b.Q(1, 1);
    const cplx A = q11 * d1 * d1 + 2.0 * q12 * d1 * d2 + q22 * d2 * d2;
    const cplx dQo = q11 * d1 * o1 + q12 * (d1 * o2 + d2 * o1) + q22 * d2 * o2;
    const cplx oQo = q11 * o1 * o1 + 2.0 * q12 * o1 * o2 + q22 * o2 * o2;
    const cplx B = -2.0 * dQo + tpi * (b.uv(0) * d1 + b.uv(1) * d2 + f);
    const cplx C = -oQo + tpi * (b.uv(0) * o1 + b.uv(1) * o2);
    const auto p = b.poly.along_line(d1, d2, o1, o2);
    // normalized moments m_k = M_k / M_0
    cplx mk_prev = 0.0, mk = 1.0, sum = p[0];
    const cplx inv2a = 1.0 / (2.0 * A);
    for (std::size_t k = 1; k < p.size(); ++k) {
      const cplx next = (B * mk + static_cast<double>(k - 1) * mk_prev) * inv2a;
      mk_prev = mk;
      mk = next;
      sum += p[k] * mk;
    }
    acc += sum * std::sqrt(PI / A) * std::exp(C + B * B * 0.25 / A);
  }
  return acc;
}

GaussPoly linear_substitute(const GaussPoly& h, const Eigen::Matrix2d& A, cplx scale) {
  GaussPoly r;
  const Eigen::Matrix2cd Ac = A.cast<cplx>();
  for (const auto& b : h.blocks()) {
    Poly2 p = b.poly.affine(Ac, Eigen::Vector2cd::Zero()) * scale;
    Eigen::Matrix2cd Q = Ac.transpose() * b.Q * Ac;
    Q(1, 0) = Q(0, 1) = 0.5 * (Q(0, 1) + Q(1, 0));
    r.add_block({p, Q, Ac.transpose() * b.uv});
  }
  return r;
}

}  // namespace automorphe

#include "affalg/form.hpp"

#include <vector>

namespace affalg {

BilinearForm::BilinearForm(BasisSpace space, FormSymmetry declared)
    : space_(std::move(space)), declared_(declared) {
  if (!space_.valid()) throw Error("bilinear form over empty space");
}

Rational BilinearForm::eval(int i, int j) const {
  auto it = m_.find({i, j});
  return it == m_.end() ? Rational(0) : it->second;
}

Rational BilinearForm::eval(const Tensor& x, const Tensor& y) const {
  if (x.rank() != 1 || y.rank() != 1) throw Error("form eval needs rank-1 arguments");
  if (x.leg(0) != space_ || y.leg(0) != space_) throw Error("form eval: space mismatch");
  Rational acc(0);
  for (const auto& [kx, vx] : x.coeffs())
    for (const auto& [ky, vy] : y.coeffs()) acc += vx * vy * eval(kx[0], ky[0]);
  return acc;
}

void BilinearForm::set(int i, int j, const Rational& v) {
  if (i < 0 || i >= space_.dim() || j < 0 || j >= space_.dim())
    throw Error("form entry out of range");
  m_.erase({i, j});
  if (v != 0) m_.emplace(std::make_pair(i, j), v);
}

bool BilinearForm::symmetry_ok() const {
  if (declared_ == FormSymmetry::none) return true;
  Rational sign(declared_ == FormSymmetry::symmetric ? 1 : -1);
  for (int i = 0; i < space_.dim(); ++i)
    for (int j = i; j < space_.dim(); ++j)
      if (eval(i, j) != sign * eval(j, i)) return false;
  return true;
}

namespace {

// Exact row reduction; returns rank. When inv != nullptr the matrix must be
// square full-rank and *inv receives the inverse.
int row_reduce(std::vector<std::vector<Rational>> m, std::vector<std::vector<Rational>>* inv) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<std::vector<Rational>> id;
  if (inv) {
    id.assign(rows, std::vector<Rational>(rows, Rational(0)));
    for (int i = 0; i < rows; ++i) id[i][i] = 1;
  }
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    if (inv) std::swap(id[pivot], id[rank]);
    Rational p = m[rank][col];
    for (int c = 0; c < cols; ++c) m[rank][c] /= p;
    if (inv)
      for (int c = 0; c < rows; ++c) id[rank][c] /= p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int c = 0; c < cols; ++c) m[r][c] -= f * m[rank][c];
      if (inv)
        for (int c = 0; c < rows; ++c) id[r][c] -= f * id[rank][c];
    }
    ++rank;
  }
  if (inv) *inv = std::move(id);
  return rank;
}

}  // namespace

bool BilinearForm::nondegenerate() const {
  int n = space_.dim();
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = eval(i, j);
  return row_reduce(std::move(g), nullptr) == n;
}

std::vector<Tensor> BilinearForm::dual_basis() const {
  int n = space_.dim();
  // f_i = Σ_k F_{ik} e_k with F·G = I, G_{kj} = form(e_k, e_j).
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, Rational(0)));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) g[k][j] = eval(k, j);
  std::vector<std::vector<Rational>> ginv;
  if (row_reduce(g, &ginv) != n) throw Error("dual basis needs a nondegenerate form");
  // row_reduce computed g^{-1}; F = g^{-1} works since (g^{-1})_{ik} solves
  // Σ_k F_{ik} g_{kj} = δ_ij.
  std::vector<Tensor> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    Tensor f({space_});
    for (int k = 0; k < n; ++k) f.add({k, 0, 0}, ginv[i][k]);
    out.push_back(std::move(f));
  }
  return out;
}

Rational pairing_multi(const Tensor& lhs, const Tensor& rhs, const BilinearForm& form) {
  if (lhs.rank() != rhs.rank()) throw Error("pairing_multi: rank mismatch");
  if (lhs.rank() < 2) throw Error("pairing_multi needs rank 2 or 3");
  for (int i = 0; i < lhs.rank(); ++i)
    if (lhs.leg(i) != form.space() || rhs.leg(i) != form.space())
      throw Error("pairing_multi: leg space differs from form space");
  Rational acc(0);
  for (const auto& [ka, va] : lhs.coeffs())
    for (const auto& [kb, vb] : rhs.coeffs()) {
      Rational term = va * vb;
      for (int leg = 0; leg < lhs.rank() && term != 0; ++leg)
        term *= form.eval(ka[leg], kb[leg]);
      acc += term;
    }
  return acc;
}

}  // namespace affalg

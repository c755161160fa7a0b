#include "gauge2/linalg.hpp"

namespace gauge2 {

RatMat matZero(size_t rows, size_t cols)
{
  return RatMat(rows, RatVec(cols, Rational(0)));
}

RatMat matIdentity(size_t n)
{
  RatMat m = matZero(n, n);
  for (size_t i = 0; i < n; i++) m[i][i] = 1;
  return m;
}

RatMat matMul(const RatMat & a, const RatMat & b)
{
  const size_t n = a.size(), k = b.size(), p = b.at(0).size();
  RatMat r = matZero(n, p);
  for (size_t i = 0; i < n; i++) {
    if (a[i].size() != k) throw std::invalid_argument("matMul: dimension mismatch");
    for (size_t j = 0; j < k; j++) {
      if (a[i][j] == 0) continue;
      for (size_t l = 0; l < p; l++) r[i][l] += a[i][j] * b[j][l];
    }
  }
  return r;
}

RatMat matAdd(const RatMat & a, const RatMat & b)
{
  RatMat r = a;
  for (size_t i = 0; i < r.size(); i++)
    for (size_t j = 0; j < r[i].size(); j++) r[i][j] += b[i][j];
  return r;
}

RatMat matSub(const RatMat & a, const RatMat & b)
{
  RatMat r = a;
  for (size_t i = 0; i < r.size(); i++)
    for (size_t j = 0; j < r[i].size(); j++) r[i][j] -= b[i][j];
  return r;
}

RatMat matScale(const RatMat & a, const Rational & c)
{
  RatMat r = a;
  for (auto & row : r)
    for (auto & v : row) v *= c;
  return r;
}

bool matIsZero(const RatMat & a)
{
  for (const auto & row : a)
    for (const auto & v : row)
      if (v != 0) return false;
  return true;
}

std::optional<RatMat> matInverse(const RatMat & a)
{
  const size_t n = a.size();
  RatMat work = a;
  RatMat inv = matIdentity(n);
  for (size_t col = 0; col < n; col++) {
    size_t pivot = col;
    while (pivot < n && work[pivot][col] == 0) pivot++;
    if (pivot == n) return std::nullopt;
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = work[col][col];
    for (size_t j = 0; j < n; j++) {
      work[col][j] /= p;
      inv[col][j] /= p;
    }
    for (size_t i = 0; i < n; i++) {
      if (i == col || work[i][col] == 0) continue;
      const Rational f = work[i][col];
      for (size_t j = 0; j < n; j++) {
        work[i][j] -= f * work[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::optional<RatVec> solveLinear(const RatMat & a, const RatVec & b)
{
  const size_t rows = a.size();
  if (rows == 0) return RatVec{};
  const size_t cols = a[0].size();
  // augmented elimination
  RatMat aug(rows, RatVec(cols + 1));
  for (size_t i = 0; i < rows; i++) {
    for (size_t j = 0; j < cols; j++) aug[i][j] = a[i][j];
    aug[i][cols] = b.at(i);
  }
  std::vector<int> pivot_col(rows, -1);
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; col++) {
    size_t pr = row;
    while (pr < rows && aug[pr][col] == 0) pr++;
    if (pr == rows) continue;
    std::swap(aug[pr], aug[row]);
    const Rational p = aug[row][col];
    for (size_t j = col; j <= cols; j++) aug[row][j] /= p;
    for (size_t i = 0; i < rows; i++) {
      if (i == row || aug[i][col] == 0) continue;
      const Rational f = aug[i][col];
      for (size_t j = col; j <= cols; j++) aug[i][j] -= f * aug[row][j];
    }
    pivot_col[row] = static_cast<int>(col);
    row++;
  }
  for (size_t i = row; i < rows; i++)
    if (aug[i][cols] != 0) return std::nullopt;
  RatVec x(cols, Rational(0));
  for (size_t i = 0; i < row; i++) x[static_cast<size_t>(pivot_col[i])] = aug[i][cols];
  return x;
}

} // namespace gauge2

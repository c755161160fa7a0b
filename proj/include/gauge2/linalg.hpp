#ifndef GAUGE2_LINALG_HPP
#define GAUGE2_LINALG_HPP

#include "gauge2/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace gauge2 {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>; // row-major

RatMat matZero(size_t rows, size_t cols);
RatMat matIdentity(size_t n);
RatMat matMul(const RatMat & a, const RatMat & b);
RatMat matAdd(const RatMat & a, const RatMat & b);
RatMat matSub(const RatMat & a, const RatMat & b);
RatMat matScale(const RatMat & a, const Rational & c);
bool matIsZero(const RatMat & a);

/// Exact inverse by Gauss-Jordan elimination; nullopt if singular.
std::optional<RatMat> matInverse(const RatMat & a);

/// Solves the (possibly overdetermined) system A x = b exactly.
/// Returns nullopt when inconsistent; when the system is underdetermined the
/// free variables are set to zero.
std::optional<RatVec> solveLinear(const RatMat & a, const RatVec & b);

} // namespace gauge2

#endif

#include "gdua/lattice.hpp"

#include <algorithm>
#include <cassert>

namespace gdua {

namespace {

// x*a + y*b = g = gcd(a, b), g >= 0.
Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  if (b == 0) {
    x = (a < 0) ? -1 : 1;
    y = 0;
    return a < 0 ? Integer(-a) : a;
  }
  Integer x1, y1;
  Integer g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

Integer dot(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

IntMat integer_kernel(const IntMat& a, std::size_t ncols) {
  // Candidate basis of Z^ncols; each constraint row removes at most one vector.
  IntMat basis(ncols, IntVec(ncols, 0));
  for (std::size_t i = 0; i < ncols; ++i) basis[i][i] = 1;

  for (const IntVec& row : a) {
    assert(row.size() == ncols);
    std::vector<Integer> vals(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) vals[i] = dot(row, basis[i]);

    // Combine pairs until at most one value is nonzero. The 2x2 update matrix
    // [[x, y], [vj/g, -vi/g]] has determinant -1, so the span is preserved.
    std::size_t pivot = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (vals[i] == 0) continue;
      if (pivot == basis.size()) {
        pivot = i;
        continue;
      }
      Integer x, y;
      Integer g = ext_gcd(vals[pivot], vals[i], x, y);
      IntVec combined(ncols), complement(ncols);
      for (std::size_t c = 0; c < ncols; ++c) {
        combined[c] = x * basis[pivot][c] + y * basis[i][c];
        complement[c] =
            (vals[i] / g) * basis[pivot][c] - (vals[pivot] / g) * basis[i][c];
      }
      basis[pivot] = std::move(combined);
      basis[i] = std::move(complement);
      vals[pivot] = g;
      vals[i] = 0;
    }
    if (pivot != basis.size()) {
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(pivot));
    }
  }
  return basis;
}

std::vector<std::array<Integer, 2>> hnf2(
    const std::vector<std::array<Integer, 2>>& rows) {
  std::vector<std::array<Integer, 2>> work;
  for (const auto& r : rows) {
    if (r[0] != 0 || r[1] != 0) work.push_back(r);
  }
  if (work.empty()) return {};

  // Clear the first column down to a single pivot via extended gcd row ops.
  std::size_t first_nonzero = work.size();
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (work[i][0] == 0) continue;
    if (first_nonzero == work.size()) {
      first_nonzero = i;
      continue;
    }
    Integer x, y;
    Integer g = ext_gcd(work[first_nonzero][0], work[i][0], x, y);
    std::array<Integer, 2> combined = {
        g, x * work[first_nonzero][1] + y * work[i][1]};
    std::array<Integer, 2> complement = {
        0, (work[i][0] / g) * work[first_nonzero][1] -
               (work[first_nonzero][0] / g) * work[i][1]};
    work[first_nonzero] = combined;
    work[i] = complement;
  }

  // Remaining rows are (0, *); their second entries collapse to a single gcd.
  Integer second = 0;
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (i == first_nonzero) continue;
    second = gcd(second, work[i][1]);
  }

  std::vector<std::array<Integer, 2>> out;
  if (first_nonzero != work.size()) {
    std::array<Integer, 2> top = work[first_nonzero];
    if (top[0] < 0) {
      top[0] = -top[0];
      top[1] = -top[1];
    }
    if (second != 0) {
      // Reduce the entry above the (0, c) pivot into [0, c).
      Integer c = second < 0 ? Integer(-second) : second;
      Integer b = top[1] % c;
      if (b < 0) b += c;
      top[1] = b;
      out.push_back(top);
      out.push_back({0, c});
    } else {
      out.push_back(top);
    }
  } else if (second != 0) {
    out.push_back({0, second < 0 ? Integer(-second) : second});
  }
  return out;
}

std::vector<Integer> snf_divisors(const std::vector<std::array<Integer, 2>>& rows) {
  std::vector<std::array<Integer, 2>> h = hnf2(rows);
  if (h.empty()) return {};
  if (h.size() == 1) {
    return {gcd(h[0][0], h[0][1])};
  }
  // 2x2 case: d1 = gcd of all entries, d1 * d2 = |det|.
  Integer d1 = gcd(gcd(h[0][0], h[0][1]), gcd(h[1][0], h[1][1]));
  Integer det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
  if (det < 0) det = -det;
  assert(d1 != 0 && det % d1 == 0);
  return {d1, det / d1};
}

}  // namespace gdua

#pragma once

#include <string>
#include <vector>

#include "hwprobe/tate.hpp"

namespace hwprobe::testing {

inline PolyRingPtr makeRing(std::uint32_t p, std::vector<std::string> names,
                            std::vector<int> weights = {},
                            OrderKind order = OrderKind::WeightedRevLex) {
  if (weights.empty()) weights.assign(names.size(), 1);
  return std::make_shared<const PolyRing>(PrimeField(p), std::move(names),
                                          std::move(weights), order);
}

inline std::vector<Poly> polys(const PolyRing& s, const std::vector<std::string>& texts) {
  std::vector<Poly> out;
  for (const auto& t : texts) out.push_back(parsePoly(s, t));
  return out;
}

inline QuotientRingPtr quotientRing(const PolyRingPtr& s, const std::vector<std::string>& ideal,
                                    bool domain = false) {
  return QuotientRing::create(s, polys(*s, ideal), domain);
}

/// Matrix from row strings; column degrees inferred from the first nonzero
/// entry of each column.
inline Matrix matrixOf(const PolyRingPtr& s, const std::vector<int>& rowDegrees,
                       const std::vector<std::vector<std::string>>& rows) {
  int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  std::vector<int> colDegrees(cols, 0);
  for (int j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Poly p = parsePoly(*s, rows[i][j]);
      if (!p.isZero()) {
        colDegrees[j] = rowDegrees[i] + s->degree(p);
        break;
      }
    }
  Matrix m(s, rowDegrees, colDegrees);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols; ++j) m.set(static_cast<int>(i), j, parsePoly(*s, rows[i][j]));
  return m;
}

inline Vec element(const FreeModule& f, const std::vector<std::string>& entries) {
  return f.fromColumn(polys(f.ring(), entries));
}

inline std::int64_t len(const Subquotient& q) {
  auto l = q.length();
  return l ? *l : -1;
}

inline std::int64_t len(const PresentedModule& m) {
  auto l = length(m);
  return l ? *l : -1;
}

/// F7[x,y]/(x^2 - y^3), weights (3, 2).
struct Cusp {
  PolyRingPtr s = makeRing(7, {"x", "y"}, {3, 2});
  QuotientRingPtr r = quotientRing(s, {"x^2 - y^3"}, true);
  PresentedModule k = PresentedModule::quotient(r, polys(*s, {"x", "y"}));
  PresentedModule m = syzygyModule(k, 1);
};

/// F101[x,y,z,w]/(xw - yz) with M = R/(x,z), N = R/(x,y).
struct A1Threefold {
  PolyRingPtr s = makeRing(101, {"x", "y", "z", "w"});
  QuotientRingPtr r = quotientRing(s, {"x*w - y*z"}, true);
  PresentedModule m = PresentedModule::quotient(r, polys(*s, {"x", "z"}));
  PresentedModule n = PresentedModule::quotient(r, polys(*s, {"x", "y"}));
};

/// F101[x,y,z]/(xz - y^2) with the MCM module coker [x y; y z].
struct A1Surface {
  PolyRingPtr s = makeRing(101, {"x", "y", "z"});
  QuotientRingPtr r = quotientRing(s, {"x*z - y^2"}, true);
  PresentedModule m = PresentedModule::present(r, matrixOf(s, {0, 0}, {{"x", "y"}, {"y", "z"}}));
};

/// One-dimensional weighted hypersurface domain with its maximal ideal.
struct CurveCase {
  std::string name;
  PolyRingPtr s;
  QuotientRingPtr r;
  PresentedModule m;
};

inline CurveCase curve(const std::string& name, std::uint32_t p, std::vector<int> weights,
                       const std::string& f) {
  auto s = makeRing(p, {"x", "y"}, std::move(weights));
  auto r = quotientRing(s, {f}, true);
  auto k = PresentedModule::quotient(r, polys(*s, {"x", "y"}));
  return {name, s, r, syzygyModule(k, 1)};
}

inline std::vector<CurveCase> curves() {
  return {curve("cusp", 7, {3, 2}, "x^2 - y^3"), curve("a4", 101, {5, 2}, "x^2 - y^5"),
          curve("fermat", 101, {4, 3}, "x^3 + y^4")};
}

/// The Gasharov-Peeva complex over F5 with alpha = 2: d_n = [x1, a^n x3 + x4; 0, x2].
struct GasharovPeeva {
  static constexpr int alpha = 2;
  PolyRingPtr s;
  QuotientRingPtr r;

  explicit GasharovPeeva(bool withT = false) {
    std::vector<std::string> names{"x1", "x2", "x3", "x4"};
    if (withT) names.push_back("t");
    s = makeRing(5, names);
    r = quotientRing(s, {"x1^2", "x2^2", "x3^2", "x4^2", "x3*x4", "x1*x4 + x2*x4",
                         "2*x1*x3 + x2*x3"});
  }

  int power(int n) const {
    int a = 1;
    for (int i = 0; i < n; ++i) a = a * alpha % 5;
    return a;
  }

  /// d_n with target generated in degree `shift`.
  Matrix d(int n, int shift) const {
    return matrixOf(s, {shift, shift},
                    {{"x1", std::to_string(power(n)) + "*x3 + x4"}, {"0", "x2"}});
  }
  Matrix d(int n) const { return d(n, n - 1); }
};

}  // namespace hwprobe::testing

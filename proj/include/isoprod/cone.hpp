#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isoprod/divisors.hpp"

namespace isoprod {

using Basis = std::pair<int, int>;  ///< 1-based divisor labels (A, B)

/// Divisors with equal coordinates alpha A + beta B in N^1(S)_Q.
struct NumericalClass {
  Rational alpha;
  Rational beta;
  std::vector<int> members;
};

/// (A, A', B, B') with A ~ A', B ~ B': in the order (D1, D4, D2, D3) of the
/// four-divisor criterion.
struct DivFQWitness {
  int a = 0;
  int a_prime = 0;
  int b = 0;
  int b_prime = 0;

  /// (D1, D2, D3, D4) = (A, B, B', A').
  std::array<int, 4> criterion_order() const { return {a, b, b_prime, a_prime}; }
};

enum class Verdict { MoriDream_EffEqNefEqSAmp, Inconclusive };

std::string to_string(Verdict v);

struct ConeReport {
  std::optional<Basis> basis;
  std::vector<NumericalClass> classes;
  std::optional<DivFQWitness> witness;
  Verdict verdict = Verdict::Inconclusive;
  /// Generators of Eff(S) = Nef(S) = SAmp(S) when the verdict is MoriDream.
  std::vector<int> generators;
  /// Divisors with negative self-intersection.
  std::vector<int> negative_curves;
};

/// First pair (i<j) with D_i^2 = D_j^2 = 0 and D_i.D_j > 0, else the first
/// pair with a nondegenerate 2x2 pairing. Throws unless the rank is exactly 2.
Basis choose_basis(const IntersectionTable& t);

std::vector<NumericalClass> numerical_classes(const IntersectionTable& t, Basis basis);

/// D1^2 = D2^2 = D3^2 = D4^2 = 0, D1.D4 = D2.D3 = 0,
/// D1.D2 = D1.D3 = D4.D2 = D4.D3 > 0, for distinct labels (D1, D2, D3, D4).
bool satisfies_divfq(const IntersectionTable& t, const std::array<int, 4>& d);

/// Lexicographically first (D1, D2, D3, D4) satisfying the criterion.
std::optional<DivFQWitness> find_divfq_quadruple(const IntersectionTable& t);

ConeReport cone_report(const IntersectionTable& t);

std::string format_cone_text(const ConeReport& r);
std::string format_cone_record(const ConeReport& r);

}  // namespace isoprod

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hforge/catalog.hpp"
#include "hforge/rational.hpp"
#include "hforge/report.hpp"

// Second reading of every catalog formula, evaluated at numbers only. Nothing
// here calls the catalog's evaluators or builds RatFunc/BiFrac values.
namespace hforge::oracle {

struct DegreeBound {
  std::int64_t s = 0;
  std::int64_t x = 0;
  friend bool operator==(const DegreeBound&, const DegreeBound&) = default;
};

/// Upper bound on the bidegree of both sides, which are polynomials in s and x
/// once binomials absorb the psi poles and (1+x)^n absorbs the x/(x+1) powers:
/// (2n, n) for Q(s,x), (2n, 0) for Q(s), (0, n) for Q(x), (0, 0) for Q.
DegreeBound degree_bound(const IdentityEntry& entry, std::int64_t n);

struct SamplePoint {
  Rational s;
  Rational x;
};

struct SampleCertificate {
  std::string id;
  std::string variant;
  Params params;
  std::int64_t n = 0;
  std::vector<SamplePoint> points;
  DegreeBound bound;
  bool all_equal = false;
  /// First point where the sides differ.
  std::optional<std::size_t> counterexample;
};

/// Both sides at s in {1..bound.s+1}, x in {1..bound.x+1}. Agreement on that
/// grid proves the identity at this n.
SampleCertificate sampling_verify(const IdentityEntry& entry, std::int64_t n, const Params& params = {},
                                  std::string_view variant = {});

/// Both sides at one rational point, by direct summation.
std::pair<Rational, Rational> sample_sides(const IdentityEntry& entry, std::int64_t n, const Rational& s,
                                           const Rational& x, const Params& params = {},
                                           std::string_view variant = {});

/// Both sides at integer s0 (and x0) using only harmonic numbers and integer
/// binomials: psi differences become H differences.
std::pair<Rational, Rational> integer_s_sides(const IdentityEntry& entry, std::int64_t n, std::int64_t s0,
                                              const Rational& x0 = Rational(1), const Params& params = {},
                                              std::string_view variant = {});

/// Equality of integer_s_sides at s0 (for every x in {1..n+1} when x occurs).
/// Throws DomainError when the entry does not involve s or s0 < 0.
bool integer_s_check(const IdentityEntry& entry, std::int64_t n, std::int64_t s0, const Params& params = {},
                     std::string_view variant = {});

/// ID-13 by direct summation for m in m_set, n in 1..n_max, and both printed
/// ID-14 forms against the m=2,3 cases.
Report id13_family_check(std::int64_t n_max, const std::vector<std::int64_t>& m_set);

}  // namespace hforge::oracle

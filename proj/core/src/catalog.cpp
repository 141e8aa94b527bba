#include "hforge/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "hforge/errors.hpp"

namespace hforge {
namespace {

using special::SpecialValues;
using I = std::int64_t;

Rational alt(I k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

BiFrac xpow(I k) { return BiFrac::x().pow(k); }

// x/(x+1), the ratio raised to powers on the right-hand side of the generating identity.
BiFrac x_ratio() { return BiFrac::x() / (BiFrac(Rational(1)) + BiFrac::x()); }

BiFrac one_plus_x_pow(I n) { return (BiFrac(Rational(1)) + BiFrac::x()).pow(n); }

// (psi(s+a)-psi(s+b))^2 + psi'(s+a)-psi'(s+b): the second logarithmic derivative combination.
RatFunc second_combo(const SpecialValues& v, I a, I b) {
  const RatFunc d = v.psi_diff(a, b);
  return d * d + v.psi1_diff(a, b);
}

// (-1)^k / ((k+1)^2 binom(n, k+1))
Rational thm26_weight(const SpecialValues& v, I n, I k) {
  return alt(k) / (Rational((k + 1) * (k + 1)) * v.binom_int(n, k + 1));
}

// (-1)^k/(k+1) * (H_n - H_k) / ((n-k) binom(n, k))
Rational thm29_weight(const SpecialValues& v, I n, I k) {
  return alt(k) / Rational(k + 1) * (v.harmonic(n) - v.harmonic(k)) /
         (Rational(n - k) * v.binom_int(n, k));
}

Rational h2sum(const SpecialValues& v, I n) {
  const Rational h = v.harmonic(n);
  return h * h + v.harmonic_gen(n, 2);
}

I param_m(const Params& p) { return p.at("m"); }

// sum_{k=0}^{n} (-1)^k binom(mn, k) H_{mn-k}
Rational id13_lhs(const SpecialValues& v, I n, I m) {
  Rational acc;
  for (I k = 0; k <= n; ++k) acc += alt(k) * v.binom_int(m * n, k) * v.harmonic(m * n - k);
  return acc;
}

// (-1)^n/m binom(mn, n) [(m-1) H_{(m-1)n} - 1/(mn)]
Rational id13_rhs(const SpecialValues& v, I n, I m) {
  return alt(n) / Rational(m) * v.binom_int(m * n, n) *
         (Rational(m - 1) * v.harmonic((m - 1) * n) - Rational(1, m * n));
}

std::vector<IdentityEntry> build_catalog() {
  std::vector<IdentityEntry> c;
  const RatFunc s = RatFunc::s();

  auto add = [&c](std::string id, Domain domain, std::string anchor, SideFn lhs, SideFn rhs) -> IdentityEntry& {
    IdentityEntry e;
    e.id = std::move(id);
    e.domain = domain;
    e.anchor = std::move(anchor);
    e.lhs = std::move(lhs);
    Variant v;
    v.rhs = std::move(rhs);
    e.variants.push_back(std::move(v));
    c.push_back(std::move(e));
    return c.back();
  };

  // ---- Theorem-level identities -------------------------------------------------

  add("THM-2.1", Domain::Qsx,
      "sum_{k=0}^{n} C(s+n,k) x^k = (1+x)^n [1 + s sum_{k=0}^{n-1} C(s+k,k)/(k+1) (x/(x+1))^(k+1)]",
      [](const SpecialValues& v, I n, const Params&) {
        BiFrac acc;
        for (I k = 0; k <= n; ++k) acc += BiFrac(v.binom_shift(n, k)) * xpow(k);
        return acc;
      },
      [s](const SpecialValues& v, I n, const Params&) {
        const BiFrac y = x_ratio();
        BiFrac inner;
        for (I k = 0; k < n; ++k) inner += BiFrac(v.binom_shift(k, k) * Rational(1, k + 1)) * y.pow(k + 1);
        return one_plus_x_pow(n) * (BiFrac(Rational(1)) + BiFrac(s) * inner);
      });

  add("THM-2.2", Domain::Qsx,
      "sum_{k=1}^{n} C(s+n,k) [psi(s+n+1)-psi(s+n-k+1)] x^k = "
      "(1+x)^n sum_{k=0}^{n-1} C(s+k,k)/(k+1) {1 + s[psi(s+k+1)-psi(s+1)]} (x/(x+1))^(k+1)",
      [](const SpecialValues& v, I n, const Params&) {
        BiFrac acc;
        for (I k = 1; k <= n; ++k) acc += BiFrac(v.binom_shift(n, k) * v.psi_diff(n + 1, n - k + 1)) * xpow(k);
        return acc;
      },
      [s](const SpecialValues& v, I n, const Params&) {
        const BiFrac y = x_ratio();
        BiFrac acc;
        for (I k = 0; k < n; ++k) {
          const RatFunc coeff = v.binom_shift(k, k) * Rational(1, k + 1) * (RatFunc(Rational(1)) + s * v.psi_diff(k + 1, 1));
          acc += BiFrac(coeff) * y.pow(k + 1);
        }
        return one_plus_x_pow(n) * acc;
      });

  add("COR-2.3", Domain::Qs,
      "sum_{k=0}^{n} (-1)^k C(s+n,k) [psi(s+n+1)-psi(s+n-k+1)] = "
      "(-1)^n/n C(s+n-1,n-1) [1 + s(psi(s+n)-psi(s+1))]",
      [](const SpecialValues& v, I n, const Params&) {
        RatFunc acc;
        for (I k = 0; k <= n; ++k) acc += v.binom_shift(n, k) * v.psi_diff(n + 1, n - k + 1) * alt(k);
        return BiFrac(acc);
      },
      [s](const SpecialValues& v, I n, const Params&) {
        return BiFrac(v.binom_shift(n - 1, n - 1) * (alt(n) / Rational(n)) *
                      (RatFunc(Rational(1)) + s * v.psi_diff(n, 1)));
      });

  add("THM-2.4", Domain::Qsx,
      "sum_{k=0}^{n} C(s+n,k) {(psi(s+n+1)-psi(s+n-k+1))^2 + psi'(s+n+1)-psi'(s+n-k+1)} x^k = "
      "(1+x)^n sum_{k=0}^{n-1} C(s+k,k)/(k+1) {2(psi(s+k+1)-psi(s+1)) + "
      "s[(psi(s+k+1)-psi(s+1))^2 + psi'(s+k+1)-psi'(s+1)]} (x/(x+1))^(k+1)",
      [](const SpecialValues& v, I n, const Params&) {
        BiFrac acc;
        for (I k = 0; k <= n; ++k) {
          acc += BiFrac(v.binom_shift(n, k) * second_combo(v, n + 1, n - k + 1)) * xpow(k);
        }
        return acc;
      },
      [s](const SpecialValues& v, I n, const Params&) {
        const BiFrac y = x_ratio();
        BiFrac acc;
        for (I k = 0; k < n; ++k) {
          const RatFunc coeff = v.binom_shift(k, k) * Rational(1, k + 1) *
                                (v.psi_diff(k + 1, 1) * Rational(2) + s * second_combo(v, k + 1, 1));
          acc += BiFrac(coeff) * y.pow(k + 1);
        }
        return one_plus_x_pow(n) * acc;
      });

  add("COR-2.5", Domain::Qs,
      "sum_{k=0}^{n} (-1)^k C(s+n,k) {(psi(s+n+1)-psi(s+n-k+1))^2 + psi'(s+n+1)-psi'(s+n-k+1)} = "
      "(-1)^n/n C(s+n-1,n-1) {2[psi(s+n)-psi(s+1)] + s[(psi(s+n)-psi(s+1))^2 + psi'(s+n)-psi'(s+1)]}",
      [](const SpecialValues& v, I n, const Params&) {
        RatFunc acc;
        for (I k = 0; k <= n; ++k) acc += v.binom_shift(n, k) * second_combo(v, n + 1, n - k + 1) * alt(k);
        return BiFrac(acc);
      },
      [s](const SpecialValues& v, I n, const Params&) {
        return BiFrac(v.binom_shift(n - 1, n - 1) * (alt(n) / Rational(n)) *
                      (v.psi_diff(n, 1) * Rational(2) + s * second_combo(v, n, 1)));
      });

  add("THM-2.6", Domain::Qs,
      "sum_{k=1}^{n} C(s+n,k) (-1)^(k-1)/k = H_n + s sum_{k=0}^{n-1} (-1)^k C(s+k,k) / ((k+1)^2 C(n,k+1))",
      [](const SpecialValues& v, I n, const Params&) {
        RatFunc acc;
        for (I k = 1; k <= n; ++k) acc += v.binom_shift(n, k) * (-alt(k) / Rational(k));
        return BiFrac(acc);
      },
      [s](const SpecialValues& v, I n, const Params&) {
        RatFunc sum;
        for (I k = 0; k < n; ++k) sum += v.binom_shift(k, k) * thm26_weight(v, n, k);
        return BiFrac(RatFunc(v.harmonic(n)) + s * sum);
      });

  add("THM-2.7", Domain::Qs,
      "sum_{k=1}^{n} (-1)^(k-1)/k C(s+n,k) [psi(s+n+1)-psi(s+n-k+1)] = "
      "sum_{k=0}^{n-1} (-1)^k C(s+k,k)/((k+1)^2 C(n,k+1)) + "
      "s sum_{k=0}^{n-1} (-1)^k C(s+k,k)/((k+1)^2 C(n,k+1)) [psi(s+k+1)-psi(s+1)]",
      [](const SpecialValues& v, I n, const Params&) {
        RatFunc acc;
        for (I k = 1; k <= n; ++k) {
          acc += v.binom_shift(n, k) * v.psi_diff(n + 1, n - k + 1) * (-alt(k) / Rational(k));
        }
        return BiFrac(acc);
      },
      [s](const SpecialValues& v, I n, const Params&) {
        RatFunc plain;
        RatFunc with_psi;
        for (I k = 0; k < n; ++k) {
          const RatFunc t = v.binom_shift(k, k) * thm26_weight(v, n, k);
          plain += t;
          with_psi += t * v.psi_diff(k + 1, 1);
        }
        return BiFrac(plain + s * with_psi);
      });

  add("THM-2.8", Domain::Qs,
      "sum_{k=1}^{n} (-1)^(k-1)/k C(s+n,k) {(psi(s+n+1)-psi(s+n-k+1))^2 + psi'(s+n+1)-psi'(s+n-k+1)} = "
      "2 sum_{k=0}^{n-1} (-1)^k C(s+k,k)/((k+1)^2 C(n,k+1)) [psi(s+k+1)-psi(s+1)] + "
      "s sum_{k=0}^{n-1} (-1)^k C(s+k,k)/((k+1)^2 C(n,k+1)) {(psi(s+k+1)-psi(s+1))^2 + psi'(s+k+1)-psi'(s+1)}",
      [](const SpecialValues& v, I n, const Params&) {
        RatFunc acc;
        for (I k = 1; k <= n; ++k) {
          acc += v.binom_shift(n, k) * second_combo(v, n + 1, n - k + 1) * (-alt(k) / Rational(k));
        }
        return BiFrac(acc);
      },
      [s](const SpecialValues& v, I n, const Params&) {
        RatFunc first;
        RatFunc second;
        for (I k = 0; k < n; ++k) {
          const RatFunc t = v.binom_shift(k, k) * thm26_weight(v, n, k);
          first += t * v.psi_diff(k + 1, 1);
          second += t * second_combo(v, k + 1, 1);
        }
        return BiFrac(first * Rational(2) + s * second);
      });

  add("THM-2.9", Domain::Qs,
      "sum_{k=1}^{n} C(s+n,k) (-1)^(k-1)/k^2 = (H_n^2 + H_n^(2))/2 + "
      "s sum_{k=0}^{n-1} (-1)^k/(k+1) C(s+k,k) (H_n - H_k)/((n-k) C(n,k))",
      [](const SpecialValues& v, I n, const Params&) {
        RatFunc acc;
        for (I k = 1; k <= n; ++k) acc += v.binom_shift(n, k) * (-alt(k) / Rational(k * k));
        return BiFrac(acc);
      },
      [s](const SpecialValues& v, I n, const Params&) {
        RatFunc sum;
        for (I k = 0; k < n; ++k) sum += v.binom_shift(k, k) * thm29_weight(v, n, k);
        return BiFrac(RatFunc(h2sum(v, n) / Rational(2)) + s * sum);
      });

  add("THM-2.10", Domain::Qs,
      "sum_{k=1}^{n} C(s+n,k) (-1)^(k-1)/k^2 [psi(s+n+1)-psi(s+n-k+1)] = "
      "sum_{k=0}^{n-1} (-1)^k/(k+1) C(s+k,k) (H_n-H_k)/((n-k) C(n,k)) + "
      "s sum_{k=0}^{n-1} (-1)^k/(k+1) C(s+k,k) (H_n-H_k)/((n-k) C(n,k)) [psi(s+k+1)-psi(s+1)]",
      [](const SpecialValues& v, I n, const Params&) {
        RatFunc acc;
        for (I k = 1; k <= n; ++k) {
          acc += v.binom_shift(n, k) * v.psi_diff(n + 1, n - k + 1) * (-alt(k) / Rational(k * k));
        }
        return BiFrac(acc);
      },
      [s](const SpecialValues& v, I n, const Params&) {
        RatFunc plain;
        RatFunc with_psi;
        for (I k = 0; k < n; ++k) {
          const RatFunc t = v.binom_shift(k, k) * thm29_weight(v, n, k);
          plain += t;
          with_psi += t * v.psi_diff(k + 1, 1);
        }
        return BiFrac(plain + s * with_psi);
      });

  add("THM-2.11", Domain::Qs,
      "sum_{k=1}^{n} C(s+n,k) (-1)^(k-1)/k^2 {(psi(s+n+1)-psi(s+n-k+1))^2 + psi'(s+n+1)-psi'(s+n-k+1)} = "
      "2 sum_{k=0}^{n-1} (-1)^k/(k+1) C(s+k,k) (H_n-H_k)/((n-k) C(n,k)) [psi(s+k+1)-psi(s+1)] + "
      "s sum_{k=0}^{n-1} (-1)^k/(k+1) C(s+k,k) (H_n-H_k)/((n-k) C(n,k)) "
      "{(psi(s+k+1)-psi(s+1))^2 + psi'(s+k+1)-psi'(s+1)}",
      [](const SpecialValues& v, I n, const Params&) {
        RatFunc acc;
        for (I k = 1; k <= n; ++k) {
          acc += v.binom_shift(n, k) * second_combo(v, n + 1, n - k + 1) * (-alt(k) / Rational(k * k));
        }
        return BiFrac(acc);
      },
      [s](const SpecialValues& v, I n, const Params&) {
        RatFunc first;
        RatFunc second;
        for (I k = 0; k < n; ++k) {
          const RatFunc t = v.binom_shift(k, k) * thm29_weight(v, n, k);
          first += t * v.psi_diff(k + 1, 1);
          second += t * second_combo(v, k + 1, 1);
        }
        return BiFrac(first * Rational(2) + s * second);
      });

  // ---- Applications ---------------------------------------------------------------

  add("ID-1", Domain::Qs, "sum_{k=0}^{n} (-1)^k C(s+n,k) = (-1)^n C(s+n-1,n)",
      [](const SpecialValues& v, I n, const Params&) {
        RatFunc acc;
        for (I k = 0; k <= n; ++k) acc += v.binom_shift(n, k) * alt(k);
        return BiFrac(acc);
      },
      [](const SpecialValues& v, I n, const Params&) { return BiFrac(v.binom_shift(n - 1, n) * alt(n)); });

  add("ID-2", Domain::Qs,
      "sum_{k=0}^{n} (-1)^k C(s,k) = (-1)^n C(s-1,n)  (stated for integer s >= n or non-integer s; "
      "checked here as polynomials in s)",
      [](const SpecialValues& v, I n, const Params&) {
        RatFunc acc;
        for (I k = 0; k <= n; ++k) acc += v.binom_shift(0, k) * alt(k);
        return BiFrac(acc);
      },
      [](const SpecialValues& v, I n, const Params&) { return BiFrac(v.binom_shift(-1, n) * alt(n)); });

  add("ID-3", Domain::Q, "sum_{k=0}^{n} C(2k,k)/2^(2k) = (2n+1)/2^(2n) C(2n,n)",
      [](const SpecialValues& v, I n, const Params&) {
        Rational acc;
        for (I k = 0; k <= n; ++k) acc += v.binom_int(2 * k, k) / Rational(4).pow(k);
        return BiFrac(acc);
      },
      [](const SpecialValues& v, I n, const Params&) {
        return BiFrac(Rational(2 * n + 1) / Rational(4).pow(n) * v.binom_int(2 * n, n));
      });

  add("ID-4", Domain::Q,
      "sum_{k=1}^{n} C(2k,k)/2^(2k) (2H_{2k} - H_k) = (2n+1)/2^(2n) C(2n,n) [2H_{2n} - H_n - 4n/(2n+1)]",
      [](const SpecialValues& v, I n, const Params&) {
        Rational acc;
        for (I k = 1; k <= n; ++k) {
          acc += v.binom_int(2 * k, k) / Rational(4).pow(k) * (Rational(2) * v.harmonic(2 * k) - v.harmonic(k));
        }
        return BiFrac(acc);
      },
      [](const SpecialValues& v, I n, const Params&) {
        return BiFrac(Rational(2 * n + 1) / Rational(4).pow(n) * v.binom_int(2 * n, n) *
                      (Rational(2) * v.harmonic(2 * n) - v.harmonic(n) - Rational(4 * n, 2 * n + 1)));
      });

  add("ID-5", Domain::Q, "sum_{k=1}^{n} (-1)^(k-1)/k C(n,k) = H_n",
      [](const SpecialValues& v, I n, const Params&) {
        Rational acc;
        for (I k = 1; k <= n; ++k) acc += -alt(k) / Rational(k) * v.binom_int(n, k);
        return BiFrac(acc);
      },
      [](const SpecialValues& v, I n, const Params&) { return BiFrac(v.harmonic(n)); });

  add("ID-6", Domain::Q, "sum_{k=1}^{n} (-1)^(k-1)/k C(n,k) H_{n-k} = H_n^2 + sum_{k=1}^{n} (-1)^k/(k^2 C(n,k))",
      [](const SpecialValues& v, I n, const Params&) {
        Rational acc;
        for (I k = 1; k <= n; ++k) acc += -alt(k) / Rational(k) * v.binom_int(n, k) * v.harmonic(n - k);
        return BiFrac(acc);
      },
      [](const SpecialValues& v, I n, const Params&) {
        Rational acc = v.harmonic(n) * v.harmonic(n);
        for (I k = 1; k <= n; ++k) acc += alt(k) / (Rational(k * k) * v.binom_int(n, k));
        return BiFrac(acc);
      });

  add("ID-7", Domain::Qx, "sum_{k=0}^{n} C(n,k) H_{n-k} x^k = (1+x)^n [H_n - sum_{k=1}^{n} 1/k (x/(1+x))^k]",
      [](const SpecialValues& v, I n, const Params&) {
        BiFrac acc;
        for (I k = 0; k <= n; ++k) acc += BiFrac(v.binom_int(n, k) * v.harmonic(n - k)) * xpow(k);
        return acc;
      },
      [](const SpecialValues& v, I n, const Params&) {
        const BiFrac y = x_ratio();
        BiFrac sum;
        for (I k = 1; k <= n; ++k) sum += BiFrac(Rational(1, k)) * y.pow(k);
        return one_plus_x_pow(n) * (BiFrac(v.harmonic(n)) - sum);
      });

  add("ID-8", Domain::Q, "sum_{k=0}^{n} C(n,k) H_k = 2^n [H_n - sum_{k=1}^{n} 1/(k 2^k)]",
      [](const SpecialValues& v, I n, const Params&) {
        Rational acc;
        for (I k = 0; k <= n; ++k) acc += v.binom_int(n, k) * v.harmonic(k);
        return BiFrac(acc);
      },
      [](const SpecialValues& v, I n, const Params&) {
        Rational sum;
        for (I k = 1; k <= n; ++k) sum += (Rational(k) * Rational(2).pow(k)).inverse();
        return BiFrac(Rational(2).pow(n) * (v.harmonic(n) - sum));
      });

  add("ID-9", Domain::Qx,
      "sum_{k=1}^{n} C(n,k) [H_k^2 + H_k^(2)] x^k = "
      "(1+x)^n [H_n^2 + H_n^(2) + 2 sum_{k=1}^{n} (H_{k-1} - H_n)/(k (1+x)^k)]",
      [](const SpecialValues& v, I n, const Params&) {
        BiFrac acc;
        for (I k = 1; k <= n; ++k) acc += BiFrac(v.binom_int(n, k) * h2sum(v, k)) * xpow(k);
        return acc;
      },
      [](const SpecialValues& v, I n, const Params&) {
        const BiFrac one_plus_x = BiFrac(Rational(1)) + BiFrac::x();
        BiFrac sum;
        for (I k = 1; k <= n; ++k) {
          sum += BiFrac((v.harmonic(k - 1) - v.harmonic(n)) / Rational(k)) / one_plus_x.pow(k);
        }
        return one_plus_x_pow(n) * (BiFrac(h2sum(v, n)) + BiFrac(Rational(2)) * sum);
      });

  add("ID-10", Domain::Q, "sum_{k=1}^{n} (-1)^k C(n,k) {H_k^2 + H_k^(2)} = -2/n^2",
      [](const SpecialValues& v, I n, const Params&) {
        Rational acc;
        for (I k = 1; k <= n; ++k) acc += alt(k) * v.binom_int(n, k) * h2sum(v, k);
        return BiFrac(acc);
      },
      [](const SpecialValues&, I n, const Params&) { return BiFrac(Rational(-2, n * n)); });

  add("ID-11", Domain::Q, "sum_{k=1}^{n} (-1)^k/(k C(n,k)) = ((-1)^n - 1)/(n+1)",
      [](const SpecialValues& v, I n, const Params&) {
        Rational acc;
        for (I k = 1; k <= n; ++k) acc += alt(k) / (Rational(k) * v.binom_int(n, k));
        return BiFrac(acc);
      },
      [](const SpecialValues&, I n, const Params&) { return BiFrac((alt(n) - Rational(1)) / Rational(n + 1)); });

  add("ID-12", Domain::Q,
      "sum_{k=1}^{n} (-1)^(k-1)/k C(n,k) [H_{n-k}^2 + H_{n-k}^(2)] = "
      "H_n^3 + H_n H_n^(2) + 2 sum_{k=1}^{n} (-1)^k [H_n - H_{k-1}]/(k^2 C(n,k))",
      [](const SpecialValues& v, I n, const Params&) {
        Rational acc;
        for (I k = 1; k <= n; ++k) acc += -alt(k) / Rational(k) * v.binom_int(n, k) * h2sum(v, n - k);
        return BiFrac(acc);
      },
      [](const SpecialValues& v, I n, const Params&) {
        const Rational h = v.harmonic(n);
        Rational sum;
        for (I k = 1; k <= n; ++k) {
          sum += alt(k) * (h - v.harmonic(k - 1)) / (Rational(k * k) * v.binom_int(n, k));
        }
        return BiFrac(h * h * h + h * v.harmonic_gen(n, 2) + Rational(2) * sum);
      });

  {
    IdentityEntry& e = add(
        "ID-13", Domain::Q,
        "sum_{k=0}^{n} (-1)^k C(mn,k) H_{mn-k} = (-1)^n/m C(mn,n) [(m-1) H_{(m-1)n} - 1/(mn)],  m >= 2",
        [](const SpecialValues& v, I n, const Params& p) { return BiFrac(id13_lhs(v, n, param_m(p))); },
        [](const SpecialValues& v, I n, const Params& p) { return BiFrac(id13_rhs(v, n, param_m(p))); });
    e.params.push_back(ParamSpec{"m", 2, {}, {2, 3, 4, 5}});
  }

  {
    auto printed = [](const SpecialValues& v, I n, const Params& p) {
      const I m = param_m(p);
      // m=2: (H_n - 1/(2n)); m=3 as printed: (2H_n - 1/(3n)).
      const Rational bracket = m == 2 ? v.harmonic(n) - Rational(1, 2 * n)
                                      : Rational(2) * v.harmonic(n) - Rational(1, 3 * n);
      return BiFrac(alt(n) / Rational(m) * v.binom_int(m * n, n) * bracket);
    };
    auto corrected = [](const SpecialValues& v, I n, const Params& p) {
      const I m = param_m(p);
      const Rational bracket = m == 2 ? v.harmonic(n) - Rational(1, 2 * n)
                                      : Rational(2) * v.harmonic(2 * n) - Rational(1, 3 * n);
      return BiFrac(alt(n) / Rational(m) * v.binom_int(m * n, n) * bracket);
    };
    IdentityEntry& e = add(
        "ID-14", Domain::Q,
        "sum_{k=0}^{n} (-1)^k C(2n,k) H_{2n-k} = (-1)^n/2 C(2n,n) (H_n - 1/(2n));  "
        "sum_{k=0}^{n} (-1)^k C(3n,k) H_{3n-k} = (-1)^n/3 C(3n,n) (2H_n - 1/(3n))",
        [](const SpecialValues& v, I n, const Params& p) { return BiFrac(id13_lhs(v, n, param_m(p))); },
        printed);
    e.params.push_back(ParamSpec{"m", 2, {2, 3}, {2, 3}});
    e.variants[0].name = "printed";
    e.variants[0].expected_fail = [](const Params& p) { return param_m(p) == 3; };
    e.variants[0].note = "m=3 form as printed (2H_n); fails for every n";
    e.variants.push_back(Variant{"corrected", corrected, [](const Params&) { return false; },
                                 "m=3 bracket 2H_{2n} - 1/(3n), the m=3 case of ID-13"});
  }

  add("ID-15", Domain::Q,
      "sum_{k=1}^{n} (-1)^k H_k/(k C(n,k)) = (-1)^n H_{n+1}/(n+1) + sum_{k=1}^{n+1} (-1)^k/(k^2 C(n+1,k))",
      [](const SpecialValues& v, I n, const Params&) {
        Rational acc;
        for (I k = 1; k <= n; ++k) acc += alt(k) * v.harmonic(k) / (Rational(k) * v.binom_int(n, k));
        return BiFrac(acc);
      },
      [](const SpecialValues& v, I n, const Params&) {
        Rational acc = alt(n) * v.harmonic(n + 1) / Rational(n + 1);
        for (I k = 1; k <= n + 1; ++k) acc += alt(k) / (Rational(k * k) * v.binom_int(n + 1, k));
        return BiFrac(acc);
      });

  add("ID-16", Domain::Q, "sum_{k=0}^{n} (-1)^(k-1) 4^k C(n,k) / C(2k,k) = 1/(2n-1)",
      [](const SpecialValues& v, I n, const Params&) {
        Rational acc;
        for (I k = 0; k <= n; ++k) acc += -alt(k) * Rational(4).pow(k) * v.binom_int(n, k) / v.binom_int(2 * k, k);
        return BiFrac(acc);
      },
      [](const SpecialValues&, I n, const Params&) { return BiFrac(Rational(1, 2 * n - 1)); });

  add("ID-17", Domain::Q, "sum_{k=1}^{n} C(n,k) (-1)^(k-1)/k^2 = (H_n^2 + H_n^(2))/2",
      [](const SpecialValues& v, I n, const Params&) {
        Rational acc;
        for (I k = 1; k <= n; ++k) acc += v.binom_int(n, k) * (-alt(k) / Rational(k * k));
        return BiFrac(acc);
      },
      [](const SpecialValues& v, I n, const Params&) { return BiFrac(h2sum(v, n) / Rational(2)); });

  add("ID-18", Domain::Q, "sum_{k=1}^{n} (-1)^k H_{n-k}/(k C(n,k)) = (1 - (-1)^n)/(n+1)^2 - H_n/(n+1)",
      [](const SpecialValues& v, I n, const Params&) {
        Rational acc;
        for (I k = 1; k <= n; ++k) acc += alt(k) * v.harmonic(n - k) / (Rational(k) * v.binom_int(n, k));
        return BiFrac(acc);
      },
      [](const SpecialValues& v, I n, const Params&) {
        return BiFrac((Rational(1) - alt(n)) / Rational((n + 1) * (n + 1)) - v.harmonic(n) / Rational(n + 1));
      });

  add("ID-19", Domain::Q,
      "sum_{k=1}^{n} (-1)^(k-1)/k^2 C(n,k) H_{n-k} = "
      "H_n (H_n^2 + H_n^(2))/2 - sum_{k=0}^{n-1} (-1)^k (H_n - H_k)/((k+1)(n-k) C(n,k))",
      [](const SpecialValues& v, I n, const Params&) {
        Rational acc;
        for (I k = 1; k <= n; ++k) acc += -alt(k) / Rational(k * k) * v.binom_int(n, k) * v.harmonic(n - k);
        return BiFrac(acc);
      },
      [](const SpecialValues& v, I n, const Params&) {
        const Rational h = v.harmonic(n);
        Rational sum;
        for (I k = 0; k < n; ++k) {
          sum += alt(k) * (h - v.harmonic(k)) / (Rational((k + 1) * (n - k)) * v.binom_int(n, k));
        }
        return BiFrac(h * h2sum(v, n) / Rational(2) - sum);
      });

  add("ID-20", Domain::Q,
      "sum_{k=1}^{n} (-1)^(k-1)/k^2 C(n,k) {H_{n-k}^2 + H_{n-k}^(2)} = "
      "(H_n^2 + H_n^(2))^2/2 - 2 sum_{k=0}^{n-1} (-1)^k (H_n - H_k)^2/((k+1)(n-k) C(n,k))",
      [](const SpecialValues& v, I n, const Params&) {
        Rational acc;
        for (I k = 1; k <= n; ++k) acc += -alt(k) / Rational(k * k) * v.binom_int(n, k) * h2sum(v, n - k);
        return BiFrac(acc);
      },
      [](const SpecialValues& v, I n, const Params&) {
        const Rational h = v.harmonic(n);
        Rational sum;
        for (I k = 0; k < n; ++k) {
          const Rational d = h - v.harmonic(k);
          sum += alt(k) * d * d / (Rational((k + 1) * (n - k)) * v.binom_int(n, k));
        }
        const Rational q = h2sum(v, n);
        return BiFrac(q * q / Rational(2) - Rational(2) * sum);
      });

  // ---- Identities quoted from the literature ----------------------------------------

  add("INTRO-1", Domain::Q, "sum_{k=0}^{n} C(n,k)^2 H_k = C(2n,n) [2H_n - H_{2n}]",
      [](const SpecialValues& v, I n, const Params&) {
        Rational acc;
        for (I k = 0; k <= n; ++k) {
          const Rational b = v.binom_int(n, k);
          acc += b * b * v.harmonic(k);
        }
        return BiFrac(acc);
      },
      [](const SpecialValues& v, I n, const Params&) {
        return BiFrac(v.binom_int(2 * n, n) * (Rational(2) * v.harmonic(n) - v.harmonic(2 * n)));
      });

  {
    auto lhs = [](const SpecialValues& v, I n, const Params&) {
      Rational acc;
      for (I k = 0; k <= n; ++k) acc += alt(k) * v.binom_int(n, k) * (v.harmonic(k) - Rational(2) * v.harmonic(2 * k));
      return BiFrac(acc);
    };
    auto printed = [](const SpecialValues& v, I n, const Params&) {
      const Rational b = v.binom_int(2 * n, n);
      return BiFrac(Rational(4).pow(n) / Rational(n) * b * b);
    };
    auto corrected = [](const SpecialValues& v, I n, const Params&) {
      return BiFrac(Rational(4).pow(n) / (Rational(n) * v.binom_int(2 * n, n)));
    };
    IdentityEntry& e = add("INTRO-2", Domain::Q,
                           "sum_{k=0}^{n} (-1)^k C(n,k) {H_k - 2H_{2k}} = 4^n/n C(2n,n)^2", lhs, printed);
    e.variants[0].name = "printed";
    e.variants[0].expected_fail = [](const Params&) { return true; };
    e.variants[0].note = "as printed; fails at n=1 (2 vs 16)";
    e.variants.push_back(Variant{"corrected", corrected, [](const Params&) { return false; },
                                 "RHS 4^n/(n C(2n,n)); correction derived by direct summation, not printed"});
  }

  add("INTRO-3", Domain::Q, "sum_{k=0}^{n} (-1)^k C(n,k) H_{n+k}^2 = 1/(n C(2n,n)) {H_n - H_{2n} - 2/n}",
      [](const SpecialValues& v, I n, const Params&) {
        Rational acc;
        for (I k = 0; k <= n; ++k) {
          const Rational h = v.harmonic(n + k);
          acc += alt(k) * v.binom_int(n, k) * h * h;
        }
        return BiFrac(acc);
      },
      [](const SpecialValues& v, I n, const Params&) {
        return BiFrac((v.harmonic(n) - v.harmonic(2 * n) - Rational(2, n)) / (Rational(n) * v.binom_int(2 * n, n)));
      });

  return c;
}

}  // namespace

std::string_view to_string(Domain d) {
  switch (d) {
    case Domain::Q:
      return "Q";
    case Domain::Qs:
      return "Q(s)";
    case Domain::Qx:
      return "Q(x)";
    case Domain::Qsx:
      return "Q(s,x)";
  }
  return "?";
}

bool domain_has_s(Domain d) { return d == Domain::Qs || d == Domain::Qsx; }
bool domain_has_x(Domain d) { return d == Domain::Qx || d == Domain::Qsx; }

std::string to_string(const Params& params) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, value] : params) {
    os << (first ? "" : ",") << name << "=" << value;
    first = false;
  }
  return os.str();
}

void IdentityEntry::validate(std::int64_t n, const Params& p) const {
  if (n < n_min) {
    throw DomainError(id + ": n must be >= " + std::to_string(n_min) + ", got " + std::to_string(n));
  }
  for (const auto& spec : params) {
    auto it = p.find(spec.name);
    if (it == p.end()) throw DomainError(id + ": missing parameter " + spec.name);
    if (it->second < spec.min) {
      throw DomainError(id + ": " + spec.name + " must be >= " + std::to_string(spec.min) + ", got " +
                        std::to_string(it->second));
    }
    if (!spec.allowed.empty() &&
        std::find(spec.allowed.begin(), spec.allowed.end(), it->second) == spec.allowed.end()) {
      throw DomainError(id + ": " + spec.name + "=" + std::to_string(it->second) + " is not one of the stated cases");
    }
  }
  for (const auto& [name, value] : p) {
    const bool known = std::any_of(params.begin(), params.end(), [&](const ParamSpec& s) { return s.name == name; });
    if (!known) throw DomainError(id + ": unexpected parameter " + name);
  }
}

std::vector<Params> IdentityEntry::default_param_grid() const {
  std::vector<Params> grid{Params{}};
  for (const auto& spec : params) {
    std::vector<Params> next;
    for (const auto& base : grid) {
      for (auto value : spec.default_grid) {
        Params p = base;
        p[spec.name] = value;
        next.push_back(std::move(p));
      }
    }
    grid = std::move(next);
  }
  return grid;
}

const Variant& IdentityEntry::variant(std::string_view name) const {
  if (name.empty()) return variants.front();
  for (const auto& v : variants) {
    if (v.name == name) return v;
  }
  throw DomainError(id + ": no variant named '" + std::string(name) + "'");
}

const std::vector<IdentityEntry>& catalog() {
  static const std::vector<IdentityEntry> entries = build_catalog();
  return entries;
}

bool is_known_id(std::string_view id) {
  const auto& c = catalog();
  return std::any_of(c.begin(), c.end(), [&](const IdentityEntry& e) { return e.id == id; });
}

const IdentityEntry& lookup(std::string_view id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  throw DomainError("unknown identity '" + std::string(id) + "'");
}

BiFrac eval_side(const IdentityEntry& entry, Side side, std::int64_t n, const Params& params,
                 std::string_view variant, const special::SpecialValues& values) {
  entry.validate(n, params);
  if (side == Side::Lhs) return entry.lhs(values, n, params);
  return entry.variant(variant).rhs(values, n, params);
}

}  // namespace hforge

#include "hforge/oracle.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "hforge/errors.hpp"
#include "hforge/special_values.hpp"

namespace hforge::oracle {
namespace {

using I = std::int64_t;
using R = Rational;

// Everything a formula may ask for, at one point.
class Model {
 public:
  virtual ~Model() = default;
  virtual R s() const = 0;
  virtual R x() const = 0;
  // binom(s+a, k)
  virtual R bs(I a, I k) const = 0;
  // psi(s+a) - psi(s+b), a >= b
  virtual R pd(I a, I b) const = 0;
  // psi'(s+a) - psi'(s+b), a >= b
  virtual R p1d(I a, I b) const = 0;
  virtual R H(I n) const = 0;
  virtual R H2(I n) const = 0;
  virtual R C(I n, I k) const = 0;
};

// Rational (s, x) with loops of its own.
class SampleModel final : public Model {
 public:
  SampleModel(R s, R x) : s_(std::move(s)), x_(std::move(x)) {}
  R s() const override { return s_; }
  R x() const override { return x_; }

  R bs(I a, I k) const override {
    R p(1);
    for (I j = 1; j <= k; ++j) p = p * (s_ + R(a - k + j)) / R(j);
    return p;
  }
  R pd(I a, I b) const override { return prefix(a, 1) - prefix(b, 1); }
  R p1d(I a, I b) const override { return prefix(b, 2) - prefix(a, 2); }
  R H(I n) const override { return harmonic(n, 1); }
  R H2(I n) const override { return harmonic(n, 2); }
  R C(I n, I k) const override {
    if (k < 0 || k > n) return R(0);
    R p(1);
    for (I j = 1; j <= k; ++j) p = p * R(n - k + j) / R(j);
    return p;
  }

 private:
  // sum_{j=0}^{m-1} 1/(s+j)^order
  R prefix(I m, int order) const {
    auto& t = order == 1 ? p1_ : p2_;
    while (static_cast<I>(t.size()) <= m) {
      const I j = static_cast<I>(t.size()) - 1;
      const R term = (s_ + R(j)).pow(-order);
      t.push_back(t.back() + term);
    }
    return t[static_cast<std::size_t>(m)];
  }
  R harmonic(I n, int order) const {
    auto& t = order == 1 ? h1_ : h2_;
    while (static_cast<I>(t.size()) <= n) {
      const I k = static_cast<I>(t.size());
      t.push_back(t.back() + R(k).pow(-order));
    }
    return t[static_cast<std::size_t>(n)];
  }

  R s_;
  R x_;
  mutable std::vector<R> p1_{R(0)}, p2_{R(0)}, h1_{R(0)}, h2_{R(0)};
};

// Integer s0 via harmonic numbers and integer binomials only.
class IntegerModel final : public Model {
 public:
  IntegerModel(I s0, R x) : s0_(s0), x_(std::move(x)) {}
  R s() const override { return R(s0_); }
  R x() const override { return x_; }

  R bs(I a, I k) const override {
    if (k < 0) return R(0);
    const I top = s0_ + a;
    if (top >= 0) return sv().binom_int(top, k);
    // binom(-m, k) = (-1)^k binom(m+k-1, k)
    const R mag = sv().binom_int(-top + k - 1, k);
    return k % 2 == 0 ? mag : -mag;
  }
  R pd(I a, I b) const override {
    pole_guard(b);
    return sv().harmonic(s0_ + a - 1) - sv().harmonic(s0_ + b - 1);
  }
  R p1d(I a, I b) const override {
    pole_guard(b);
    return sv().harmonic_gen(s0_ + b - 1, 2) - sv().harmonic_gen(s0_ + a - 1, 2);
  }
  R H(I n) const override { return sv().harmonic(n); }
  R H2(I n) const override { return sv().harmonic_gen(n, 2); }
  R C(I n, I k) const override { return sv().binom_int(n, k); }

 private:
  static const special::SpecialValues& sv() { return special::SpecialValues::shared(); }
  void pole_guard(I b) const {
    if (s0_ + b <= 0) throw DomainError("psi difference has a pole at s = " + std::to_string(s0_));
  }
  I s0_;
  R x_;
};

R sign(I k) { return k % 2 == 0 ? R(1) : R(-1); }

struct Formula {
  std::function<R(const Model&, I, const Params&)> lhs;
  std::function<R(const Model&, I, const Params&, std::string_view)> rhs;
};

using Table = std::map<std::string, Formula, std::less<>>;

// Shapes shared by the theorem families.
R Qv(const Model& M, I a, I b) { return M.pd(a, b) * M.pd(a, b) + M.p1d(a, b); }
R w26(const Model& M, I n, I k) { return sign(k) / (R((k + 1) * (k + 1)) * M.C(n, k + 1)); }
R w29(const Model& M, I n, I k) {
  return sign(k) * (M.H(n) - M.H(k)) / (R(k + 1) * R(n - k) * M.C(n, k));
}

Table build() {
  Table t;
  auto ignore_variant = [](auto f) {
    return [f](const Model& M, I n, const Params& p, std::string_view) { return f(M, n, p); };
  };

  // Generating-function family: (1+x)^n sum_{k<n} binom(s+k,k)/(k+1) c_k y^{k+1}, y = x/(x+1).
  auto gf_rhs = [](const Model& M, I n, const std::function<R(I)>& c) {
    const R y = M.x() / (M.x() + R(1));
    R total(0);
    for (I k = 0; k < n; ++k) total = total + M.bs(k, k) / R(k + 1) * c(k) * y.pow(k + 1);
    return (R(1) + M.x()).pow(n) * total;
  };

  t["THM-2.1"] = {[](const Model& M, I n, const Params&) {
                    R total(0);
                    for (I k = 0; k <= n; ++k) total = total + M.bs(n, k) * M.x().pow(k);
                    return total;
                  },
                  ignore_variant([](const Model& M, I n, const Params&) {
                    const R y = M.x() / (M.x() + R(1));
                    R inner(0);
                    for (I k = 0; k < n; ++k) inner = inner + M.bs(k, k) / R(k + 1) * y.pow(k + 1);
                    return (R(1) + M.x()).pow(n) * (R(1) + M.s() * inner);
                  })};
  t["THM-2.2"] = {[](const Model& M, I n, const Params&) {
                    R total(0);
                    for (I k = 1; k <= n; ++k) total = total + M.bs(n, k) * M.pd(n + 1, n - k + 1) * M.x().pow(k);
                    return total;
                  },
                  ignore_variant([gf_rhs](const Model& M, I n, const Params&) {
                    return gf_rhs(M, n, [&](I k) { return R(1) + M.s() * M.pd(k + 1, 1); });
                  })};
  t["THM-2.4"] = {[](const Model& M, I n, const Params&) {
                    R total(0);
                    for (I k = 0; k <= n; ++k) total = total + M.bs(n, k) * Qv(M, n + 1, n - k + 1) * M.x().pow(k);
                    return total;
                  },
                  ignore_variant([gf_rhs](const Model& M, I n, const Params&) {
                    return gf_rhs(M, n, [&](I k) { return R(2) * M.pd(k + 1, 1) + M.s() * Qv(M, k + 1, 1); });
                  })};
  t["COR-2.3"] = {[](const Model& M, I n, const Params&) {
                    R total(0);
                    for (I k = 0; k <= n; ++k) total = total + sign(k) * M.bs(n, k) * M.pd(n + 1, n - k + 1);
                    return total;
                  },
                  ignore_variant([](const Model& M, I n, const Params&) {
                    return sign(n) / R(n) * M.bs(n - 1, n - 1) * (R(1) + M.s() * M.pd(n, 1));
                  })};
  t["COR-2.5"] = {[](const Model& M, I n, const Params&) {
                    R total(0);
                    for (I k = 0; k <= n; ++k) total = total + sign(k) * M.bs(n, k) * Qv(M, n + 1, n - k + 1);
                    return total;
                  },
                  ignore_variant([](const Model& M, I n, const Params&) {
                    return sign(n) / R(n) * M.bs(n - 1, n - 1) * (R(2) * M.pd(n, 1) + M.s() * Qv(M, n, 1));
                  })};

  // The two alternating families: weight w(n,k), base value at s=0, order of 1/k.
  struct Family {
    std::string base, first, second;
    int order;
    std::function<R(const Model&, I, I)> w;
    std::function<R(const Model&, I)> at_zero;
  };
  const Family fams[] = {
      {"THM-2.6", "THM-2.7", "THM-2.8", 1, w26, [](const Model& M, I n) { return M.H(n); }},
      {"THM-2.9", "THM-2.10", "THM-2.11", 2, w29,
       [](const Model& M, I n) { return (M.H(n) * M.H(n) + M.H2(n)) / R(2); }},
  };
  for (const auto& f : fams) {
    // lhs_g = sum_{k=1}^n binom(s+n,k) (-1)^(k-1)/k^order * g_k
    auto alt_lhs = [order = f.order](const std::function<R(const Model&, I, I)>& g) {
      return [order, g](const Model& M, I n, const Params&) {
        R total(0);
        for (I k = 1; k <= n; ++k) total = total + M.bs(n, k) * (-sign(k)) / R(k).pow(order) * g(M, n, k);
        return total;
      };
    };
    auto wsum = [w = f.w](const Model& M, I n, const std::function<R(I)>& g) {
      R total(0);
      for (I k = 0; k < n; ++k) total = total + w(M, n, k) * M.bs(k, k) * g(k);
      return total;
    };
    t[f.base] = {alt_lhs([](const Model&, I, I) { return R(1); }),
                 ignore_variant([wsum, z = f.at_zero](const Model& M, I n, const Params&) {
                   return z(M, n) + M.s() * wsum(M, n, [](I) { return R(1); });
                 })};
    t[f.first] = {alt_lhs([](const Model& M, I n, I k) { return M.pd(n + 1, n - k + 1); }),
                  ignore_variant([wsum](const Model& M, I n, const Params&) {
                    return wsum(M, n, [](I) { return R(1); }) +
                           M.s() * wsum(M, n, [&](I k) { return M.pd(k + 1, 1); });
                  })};
    t[f.second] = {alt_lhs([](const Model& M, I n, I k) { return Qv(M, n + 1, n - k + 1); }),
                   ignore_variant([wsum](const Model& M, I n, const Params&) {
                     return R(2) * wsum(M, n, [&](I k) { return M.pd(k + 1, 1); }) +
                            M.s() * wsum(M, n, [&](I k) { return Qv(M, k + 1, 1); });
                   })};
  }

  t["ID-1"] = {[](const Model& M, I n, const Params&) {
                 R total(0);
                 for (I k = 0; k <= n; ++k) total = total + sign(k) * M.bs(n, k);
                 return total;
               },
               ignore_variant([](const Model& M, I n, const Params&) { return sign(n) * M.bs(n - 1, n); })};
  t["ID-2"] = {[](const Model& M, I n, const Params&) {
                 R total(0);
                 for (I k = 0; k <= n; ++k) total = total + sign(k) * M.bs(0, k);
                 return total;
               },
               ignore_variant([](const Model& M, I n, const Params&) { return sign(n) * M.bs(-1, n); })};

  t["ID-3"] = {[](const Model& M, I n, const Params&) {
                 R total(0);
                 for (I k = 0; k <= n; ++k) total = total + M.C(2 * k, k) / R(2).pow(2 * k);
                 return total;
               },
               ignore_variant([](const Model& M, I n, const Params&) {
                 return R(2 * n + 1) / R(2).pow(2 * n) * M.C(2 * n, n);
               })};
  t["ID-4"] = {[](const Model& M, I n, const Params&) {
                 R total(0);
                 for (I k = 1; k <= n; ++k) total = total + M.C(2 * k, k) / R(2).pow(2 * k) * (R(2) * M.H(2 * k) - M.H(k));
                 return total;
               },
               ignore_variant([](const Model& M, I n, const Params&) {
                 return R(2 * n + 1) / R(2).pow(2 * n) * M.C(2 * n, n) *
                        (R(2) * M.H(2 * n) - M.H(n) - R(4 * n) / R(2 * n + 1));
               })};
  t["ID-5"] = {[](const Model& M, I n, const Params&) {
                 R total(0);
                 for (I k = 1; k <= n; ++k) total = total + (-sign(k)) / R(k) * M.C(n, k);
                 return total;
               },
               ignore_variant([](const Model& M, I n, const Params&) { return M.H(n); })};
  t["ID-6"] = {[](const Model& M, I n, const Params&) {
                 R total(0);
                 for (I k = 1; k <= n; ++k) total = total + (-sign(k)) / R(k) * M.C(n, k) * M.H(n - k);
                 return total;
               },
               ignore_variant([](const Model& M, I n, const Params&) {
                 R total = M.H(n) * M.H(n);
                 for (I k = 1; k <= n; ++k) total = total + sign(k) / (R(k * k) * M.C(n, k));
                 return total;
               })};
  t["ID-7"] = {[](const Model& M, I n, const Params&) {
                 R total(0);
                 for (I k = 0; k <= n; ++k) total = total + M.C(n, k) * M.H(n - k) * M.x().pow(k);
                 return total;
               },
               ignore_variant([](const Model& M, I n, const Params&) {
                 const R y = M.x() / (R(1) + M.x());
                 R inner(0);
                 for (I k = 1; k <= n; ++k) inner = inner + y.pow(k) / R(k);
                 return (R(1) + M.x()).pow(n) * (M.H(n) - inner);
               })};
  t["ID-8"] = {[](const Model& M, I n, const Params&) {
                 R total(0);
                 for (I k = 0; k <= n; ++k) total = total + M.C(n, k) * M.H(k);
                 return total;
               },
               ignore_variant([](const Model& M, I n, const Params&) {
                 R inner(0);
                 for (I k = 1; k <= n; ++k) inner = inner + R(1) / (R(k) * R(2).pow(k));
                 return R(2).pow(n) * (M.H(n) - inner);
               })};
  t["ID-9"] = {[](const Model& M, I n, const Params&) {
                 R total(0);
                 for (I k = 1; k <= n; ++k) total = total + M.C(n, k) * (M.H(k) * M.H(k) + M.H2(k)) * M.x().pow(k);
                 return total;
               },
               ignore_variant([](const Model& M, I n, const Params&) {
                 R inner(0);
                 for (I k = 1; k <= n; ++k) inner = inner + (M.H(k - 1) - M.H(n)) / (R(k) * (R(1) + M.x()).pow(k));
                 return (R(1) + M.x()).pow(n) * (M.H(n) * M.H(n) + M.H2(n) + R(2) * inner);
               })};
  t["ID-10"] = {[](const Model& M, I n, const Params&) {
                  R total(0);
                  for (I k = 1; k <= n; ++k) total = total + sign(k) * M.C(n, k) * (M.H(k) * M.H(k) + M.H2(k));
                  return total;
                },
                ignore_variant([](const Model&, I n, const Params&) { return R(-2) / R(n * n); })};
  t["ID-11"] = {[](const Model& M, I n, const Params&) {
                  R total(0);
                  for (I k = 1; k <= n; ++k) total = total + sign(k) / (R(k) * M.C(n, k));
                  return total;
                },
                ignore_variant([](const Model&, I n, const Params&) { return (sign(n) - R(1)) / R(n + 1); })};
  t["ID-12"] = {[](const Model& M, I n, const Params&) {
                  R total(0);
                  for (I k = 1; k <= n; ++k) {
                    total = total + (-sign(k)) / R(k) * M.C(n, k) * (M.H(n - k) * M.H(n - k) + M.H2(n - k));
                  }
                  return total;
                },
                ignore_variant([](const Model& M, I n, const Params&) {
                  R inner(0);
                  for (I k = 1; k <= n; ++k) inner = inner + sign(k) * (M.H(n) - M.H(k - 1)) / (R(k * k) * M.C(n, k));
                  return M.H(n).pow(3) + M.H(n) * M.H2(n) + R(2) * inner;
                })};

  auto id13_lhs = [](const Model& M, I n, const Params& p) {
    const I m = p.at("m");
    R total(0);
    for (I k = 0; k <= n; ++k) total = total + sign(k) * M.C(m * n, k) * M.H(m * n - k);
    return total;
  };
  t["ID-13"] = {id13_lhs, ignore_variant([](const Model& M, I n, const Params& p) {
                  const I m = p.at("m");
                  return sign(n) / R(m) * M.C(m * n, n) * (R(m - 1) * M.H((m - 1) * n) - R(1) / R(m * n));
                })};
  t["ID-14"] = {id13_lhs, [](const Model& M, I n, const Params& p, std::string_view variant) {
                  const I m = p.at("m");
                  if (m == 2) return sign(n) / R(2) * M.C(2 * n, n) * (M.H(n) - R(1) / R(2 * n));
                  const R h = variant == "corrected" ? M.H(2 * n) : M.H(n);
                  return sign(n) / R(3) * M.C(3 * n, n) * (R(2) * h - R(1) / R(3 * n));
                }};
  t["ID-15"] = {[](const Model& M, I n, const Params&) {
                  R total(0);
                  for (I k = 1; k <= n; ++k) total = total + sign(k) * M.H(k) / (R(k) * M.C(n, k));
                  return total;
                },
                ignore_variant([](const Model& M, I n, const Params&) {
                  R total = sign(n) * M.H(n + 1) / R(n + 1);
                  for (I k = 1; k <= n + 1; ++k) total = total + sign(k) / (R(k * k) * M.C(n + 1, k));
                  return total;
                })};
  t["ID-16"] = {[](const Model& M, I n, const Params&) {
                  R total(0);
                  for (I k = 0; k <= n; ++k) total = total + (-sign(k)) * R(4).pow(k) * M.C(n, k) / M.C(2 * k, k);
                  return total;
                },
                ignore_variant([](const Model&, I n, const Params&) { return R(1) / R(2 * n - 1); })};
  t["ID-17"] = {[](const Model& M, I n, const Params&) {
                  R total(0);
                  for (I k = 1; k <= n; ++k) total = total + M.C(n, k) * (-sign(k)) / R(k * k);
                  return total;
                },
                ignore_variant([](const Model& M, I n, const Params&) { return (M.H(n) * M.H(n) + M.H2(n)) / R(2); })};
  t["ID-18"] = {[](const Model& M, I n, const Params&) {
                  R total(0);
                  for (I k = 1; k <= n; ++k) total = total + sign(k) * M.H(n - k) / (R(k) * M.C(n, k));
                  return total;
                },
                ignore_variant([](const Model& M, I n, const Params&) {
                  return (R(1) - sign(n)) / R(n + 1).pow(2) - M.H(n) / R(n + 1);
                })};
  t["ID-19"] = {[](const Model& M, I n, const Params&) {
                  R total(0);
                  for (I k = 1; k <= n; ++k) total = total + (-sign(k)) / R(k * k) * M.C(n, k) * M.H(n - k);
                  return total;
                },
                ignore_variant([](const Model& M, I n, const Params&) {
                  R inner(0);
                  for (I k = 0; k < n; ++k) {
                    inner = inner + sign(k) * (M.H(n) - M.H(k)) / (R(k + 1) * R(n - k) * M.C(n, k));
                  }
                  return M.H(n) * (M.H(n) * M.H(n) + M.H2(n)) / R(2) - inner;
                })};
  t["ID-20"] = {[](const Model& M, I n, const Params&) {
                  R total(0);
                  for (I k = 1; k <= n; ++k) {
                    total = total + (-sign(k)) / R(k * k) * M.C(n, k) * (M.H(n - k) * M.H(n - k) + M.H2(n - k));
                  }
                  return total;
                },
                ignore_variant([](const Model& M, I n, const Params&) {
                  R inner(0);
                  for (I k = 0; k < n; ++k) {
                    inner = inner + sign(k) * (M.H(n) - M.H(k)).pow(2) / (R(k + 1) * R(n - k) * M.C(n, k));
                  }
                  return (M.H(n) * M.H(n) + M.H2(n)).pow(2) / R(2) - R(2) * inner;
                })};

  t["INTRO-1"] = {[](const Model& M, I n, const Params&) {
                    R total(0);
                    for (I k = 0; k <= n; ++k) total = total + M.C(n, k).pow(2) * M.H(k);
                    return total;
                  },
                  ignore_variant([](const Model& M, I n, const Params&) {
                    return M.C(2 * n, n) * (R(2) * M.H(n) - M.H(2 * n));
                  })};
  t["INTRO-2"] = {[](const Model& M, I n, const Params&) {
                    R total(0);
                    for (I k = 0; k <= n; ++k) total = total + sign(k) * M.C(n, k) * (M.H(k) - R(2) * M.H(2 * k));
                    return total;
                  },
                  [](const Model& M, I n, const Params&, std::string_view variant) {
                    if (variant == "corrected") return R(4).pow(n) / (R(n) * M.C(2 * n, n));
                    return R(4).pow(n) / R(n) * M.C(2 * n, n).pow(2);
                  }};
  t["INTRO-3"] = {[](const Model& M, I n, const Params&) {
                    R total(0);
                    for (I k = 0; k <= n; ++k) total = total + sign(k) * M.C(n, k) * M.H(n + k).pow(2);
                    return total;
                  },
                  ignore_variant([](const Model& M, I n, const Params&) {
                    return (M.H(n) - M.H(2 * n) - R(2) / R(n)) / (R(n) * M.C(2 * n, n));
                  })};
  return t;
}

const Formula& formula(std::string_view id) {
  static const Table table = build();
  auto it = table.find(id);
  if (it == table.end()) throw DomainError("oracle has no formula for '" + std::string(id) + "'");
  return it->second;
}

std::string resolve_variant(const IdentityEntry& entry, std::string_view variant) {
  return std::string(entry.variant(variant).name);
}

std::pair<R, R> sides(const IdentityEntry& entry, const Model& M, I n, const Params& p, std::string_view variant) {
  entry.validate(n, p);
  const Formula& f = formula(entry.id);
  const std::string v = resolve_variant(entry, variant);
  return {f.lhs(M, n, p), f.rhs(M, n, p, v)};
}

}  // namespace

DegreeBound degree_bound(const IdentityEntry& entry, std::int64_t n) {
  return DegreeBound{domain_has_s(entry.domain) ? 2 * n : 0, domain_has_x(entry.domain) ? n : 0};
}

std::pair<Rational, Rational> sample_sides(const IdentityEntry& entry, std::int64_t n, const Rational& s,
                                           const Rational& x, const Params& params, std::string_view variant) {
  return sides(entry, SampleModel(s, x), n, params, variant);
}

SampleCertificate sampling_verify(const IdentityEntry& entry, std::int64_t n, const Params& params,
                                  std::string_view variant) {
  SampleCertificate cert;
  cert.id = entry.id;
  cert.variant = resolve_variant(entry, variant);
  cert.params = params;
  cert.n = n;
  cert.bound = degree_bound(entry, n);
  cert.all_equal = true;
  // Positive sample values sit away from every pole (all at s <= 0, x = -1).
  for (I si = 1; si <= cert.bound.s + 1; ++si) {
    for (I xi = 1; xi <= cert.bound.x + 1; ++xi) {
      cert.points.push_back(SamplePoint{R(si), R(xi)});
      const auto [l, r] = sample_sides(entry, n, R(si), R(xi), params, cert.variant);
      if (l != r && cert.all_equal) {
        cert.all_equal = false;
        cert.counterexample = cert.points.size() - 1;
      }
    }
  }
  const auto needed = static_cast<std::size_t>((cert.bound.s + 1) * (cert.bound.x + 1));
  if (cert.points.size() < needed) throw std::logic_error("sample grid smaller than the degree bound");
  return cert;
}

std::pair<Rational, Rational> integer_s_sides(const IdentityEntry& entry, std::int64_t n, std::int64_t s0,
                                              const Rational& x0, const Params& params, std::string_view variant) {
  if (s0 < 0) throw DomainError("integer_s_check needs s0 >= 0, got " + std::to_string(s0));
  return sides(entry, IntegerModel(s0, x0), n, params, variant);
}

bool integer_s_check(const IdentityEntry& entry, std::int64_t n, std::int64_t s0, const Params& params,
                     std::string_view variant) {
  if (!domain_has_s(entry.domain)) throw DomainError(entry.id + " does not involve s");
  const I x_points = domain_has_x(entry.domain) ? n + 1 : 1;
  for (I xi = 1; xi <= x_points; ++xi) {
    const auto [l, r] = integer_s_sides(entry, n, s0, R(xi), params, variant);
    if (l != r) return false;
  }
  return true;
}

Report id13_family_check(std::int64_t n_max, const std::vector<std::int64_t>& m_set) {
  const SampleModel M(R(0), R(0));
  const Formula& id13 = formula("ID-13");
  const Formula& id14 = formula("ID-14");
  Report report;
  auto row = [&](std::string id, std::string variant, I n, I m, const R& l, const R& r, bool xfail) {
    ReportRow out;
    out.id = std::move(id);
    out.variant = std::move(variant);
    out.n = n;
    out.params = Params{{"m", m}};
    out.passed = l == r;
    out.expected_fail = xfail;
    if (!out.passed) out.witness = Witness{BiPoly(l - r), l, r};
    report.rows.push_back(std::move(out));
  };
  for (I n = 1; n <= n_max; ++n) {
    for (I m : m_set) {
      if (m < 2) throw DomainError("ID-13: m must be >= 2, got " + std::to_string(m));
      const Params p{{"m", m}};
      const R rhs13 = id13.rhs(M, n, p, "");
      row("ID-13", "", n, m, id13.lhs(M, n, p), rhs13, false);
      if (m == 2 || m == 3) {
        row("ID-14", "printed", n, m, id14.rhs(M, n, p, "printed"), rhs13, m == 3);
        row("ID-14", "corrected", n, m, id14.rhs(M, n, p, "corrected"), rhs13, false);
      }
    }
  }
  return report;
}

}  // namespace hforge::oracle

#pragma once

// Independent reconstruction of a normalized lazy 2-cocycle on E(n) from its
// generator values: the cocycle identity and laziness are solved as exact
// linear systems, one total x-degree at a time. Used only by tests.

#include <optional>
#include <stdexcept>

#include "en/en_hopf.hpp"

namespace en::test {

struct OracleResult {
  bool consistent = true;
  std::size_t free_dims = 0;
  // Homogeneous solutions, indexed by table entry i*dim+j.
  std::vector<SparseVec> kernel;
  Matrix table;
};

inline OracleResult solve_cocycle(const HopfPtr& en, const Matrix& generator_values,
                                  bool zero_mixed_degree) {
  const Hopf& h = *en;
  const Algebra& a = h.alg();
  unsigned n = en_rank(h);
  std::size_t d = h.dim();
  std::vector<std::optional<Scalar>> val(d * d);
  auto deg = [](Index i) { return en_degree(i); };
  for (Index i = 0; i < d; ++i) {
    val[0 * d + i] = h.eps(i);
    val[i * d + 0] = h.eps(i);
  }
  val[1 * d + 1] = Scalar(1);
  for (unsigned j = 0; j < n; ++j) {
    Index x = en_index(0, std::uint64_t{1} << j);
    val[1 * d + x] = Scalar(0);
    val[x * d + 1] = Scalar(0);
    for (unsigned k = 0; k < n; ++k) {
      val[x * d + en_index(0, std::uint64_t{1} << k)] = generator_values(j, k);
      // parity relation σ(cx_j⊗x_k) = σ(x_j⊗x_k)
      val[(x | 1) * d + en_index(0, std::uint64_t{1} << k)] = generator_values(j, k);
    }
  }
  if (zero_mixed_degree)
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j)
        if (deg(i) != deg(j)) val[i * d + j] = Scalar(0);

  OracleResult out;
  for (unsigned stage = 0; stage <= 2 * n; ++stage) {
    std::vector<std::size_t> unknown_of(d * d, SIZE_MAX);
    std::vector<std::size_t> entries;
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j)
        if (deg(i) + deg(j) == stage && !val[i * d + j]) {
          unknown_of[i * d + j] = entries.size();
          entries.push_back(i * d + j);
        }
    if (entries.empty()) continue;
    LinearSystem sys(entries.size());

    struct Eq {
      SparseVec row;
      Scalar rhs;
    };
    // c * σ(e1) * σ(e2) moved into (row, rhs) form of Σ row·x = rhs.
    auto term = [&](Eq& eq, const Scalar& c, std::size_t e1, std::size_t e2) {
      const auto& v1 = val[e1];
      const auto& v2 = val[e2];
      if (v1 && v2)
        eq.rhs -= c * *v1 * *v2;
      else if (!v1 && v2)
        eq.row.add(unknown_of.at(e1), c * *v2);
      else if (v1 && !v2)
        eq.row.add(unknown_of.at(e2), c * *v1);
      else
        throw std::logic_error("quadratic term in cocycle oracle");
    };
    auto linear = [&](Eq& eq, const Scalar& c, std::size_t e) {
      if (val[e])
        eq.rhs -= c * *val[e];
      else
        eq.row.add(unknown_of.at(e), c);
    };

    for (Index g = 0; g < d; ++g)
      for (Index x = 0; x < d; ++x)
        for (Index m = 0; m < d; ++m) {
          if (deg(g) + deg(x) + deg(m) != stage) continue;
          Eq eq;
          for (const auto& [kg, cg] : h.delta(g))
            for (const auto& [kx, cx] : h.delta(x))
              for (const auto& [p, cp] : a.product(kg % d, kx % d))
                term(eq, cg * cx * cp, (kg / d) * d + kx / d, p * d + m);
          for (const auto& [kx, cx] : h.delta(x))
            for (const auto& [km, cm] : h.delta(m))
              for (const auto& [p, cp] : a.product(kx % d, km % d))
                term(eq, -(cx * cm * cp), (kx / d) * d + km / d, g * d + p);
          sys.add_equation(eq.row, eq.rhs);
        }
    for (Index x = 0; x < d; ++x)
      for (Index y = 0; y < d; ++y) {
        if (deg(x) + deg(y) != stage) continue;
        std::vector<Eq> eqs(d);
        for (const auto& [kx, cx] : h.delta(x))
          for (const auto& [ky, cy] : h.delta(y)) {
            for (const auto& [p, cp] : a.product(kx % d, ky % d))
              linear(eqs[p], cx * cy * cp, (kx / d) * d + ky / d);
            for (const auto& [p, cp] : a.product(kx / d, ky / d))
              linear(eqs[p], -(cx * cy * cp), (kx % d) * d + ky % d);
          }
        for (auto& eq : eqs) sys.add_equation(eq.row, eq.rhs);
      }
    auto sol = sys.solve();
    if (!sol) {
      out.consistent = false;
      return out;
    }
    out.free_dims += sol->kernel.size();
    for (const auto& k : sol->kernel) {
      SparseVec v;
      for (std::size_t u = 0; u < entries.size(); ++u) v.add(entries[u], k[u]);
      out.kernel.push_back(std::move(v));
    }
    for (std::size_t u = 0; u < entries.size(); ++u) val[entries[u]] = sol->particular[u];
  }
  out.table = Matrix(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) out.table(i, j) = val[i * d + j] ? *val[i * d + j] : Scalar();
  return out;
}

}  // namespace en::test

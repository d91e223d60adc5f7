#include "diq/corpus.hpp"

#include <functional>
#include <random>

#include "diq/error.hpp"
#include "diq/groebner.hpp"
#include "diq/ideal_ops.hpp"
#include "diq/mono_oracle.hpp"
#include "diq/parse.hpp"

namespace diq {
namespace {

Ideal gens(const RingPtr& ring, std::initializer_list<std::string_view> texts) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(parse_poly(t, ring));
  return Ideal(ring, std::move(out));
}

RingPtr ring_of(std::initializer_list<std::string> names) {
  return RingCtx::make(std::vector<std::string>(names));
}

std::string var_name(unsigned i, unsigned j) {
  return "x" + std::to_string(i) + std::to_string(j);
}

}  // namespace

std::vector<Ideal> DecomposedIdeal::divisors() const {
  std::vector<Ideal> out;
  for (const auto& c : components) out.push_back(c.prime);
  return out;
}

DecomposedIdeal build(std::string name, std::vector<std::pair<Ideal, Ideal>> components) {
  if (components.empty()) throw PreconditionError("build: no components");
  for (const auto& [q, p] : components) {
    if (!contains(p, q)) throw PreconditionError("build: " + name + ": Q is not contained in P");
    for (const auto& g : p.generators()) {
      if (!radical_membership(g, q)) {
        throw PreconditionError("build: " + name + ": P is not contained in the radical of Q");
      }
    }
  }
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (std::size_t j = i + 1; j < components.size(); ++j) {
      if (equals(components[i].second, components[j].second)) {
        throw PreconditionError("build: " + name + ": two components share a radical");
      }
    }
  }
  std::vector<Ideal> primaries;
  for (const auto& c : components) primaries.push_back(c.first);
  Ideal whole = intersect(primaries);
  if (components.size() > 1) {
    for (std::size_t i = 0; i < primaries.size(); ++i) {
      std::vector<Ideal> rest;
      for (std::size_t j = 0; j < primaries.size(); ++j) {
        if (j != i) rest.push_back(primaries[j]);
      }
      if (equals(intersect(rest), whole)) {
        throw PreconditionError("build: " + name + ": component " + std::to_string(i + 1) +
                                " is redundant");
      }
    }
  }
  DecomposedIdeal out{std::move(name), whole, {}};
  for (std::size_t i = 0; i < components.size(); ++i) {
    ComponentKind kind = ComponentKind::isolated;
    for (std::size_t j = 0; j < components.size(); ++j) {
      if (j != i && contains(components[i].second, components[j].second)) {
        kind = ComponentKind::embedded;
      }
    }
    out.components.push_back({components[i].first, components[i].second, kind});
  }
  return out;
}

DecomposedIdeal i1_family(unsigned n) {
  if (n == 0) throw PreconditionError("i1_family: n must be positive");
  RingPtr r = ring_of({"x", "y", "z"});
  const Polynomial f = (parse_poly("z + 1", r)).pow(n) + Polynomial::constant(r, Coeff(1));
  const Polynomial x = Polynomial::variable(r, 0);
  const Polynomial y = Polynomial::variable(r, 1);
  return build("I1(" + std::to_string(n) + ")",
               {{gens(r, {"x^2"}), gens(r, {"x"})},
                {gens(r, {"x^4", "y"}), gens(r, {"x", "y"})},
                {Ideal(r, {x.pow(3), y.pow(3), f}), Ideal(r, {x, y, f})}});
}

RingPtr matrix_ring(unsigned rows, unsigned cols) {
  std::vector<std::string> names;
  for (unsigned i = 1; i <= rows; ++i) {
    for (unsigned j = 1; j <= cols; ++j) names.push_back(var_name(i, j));
  }
  return RingCtx::make(std::move(names));
}

Ideal adjacent_minors(unsigned k, unsigned rows, unsigned cols) {
  if (k == 0 || k > rows || k > cols) {
    throw PreconditionError("adjacent_minors: need 1 <= k <= min(rows, cols)");
  }
  RingPtr r = matrix_ring(rows, cols);
  auto at = [&](unsigned i, unsigned j) { return Polynomial::variable(r, i * cols + j); };
  // Laplace expansion along the first row of the block.
  std::function<Polynomial(unsigned, unsigned, std::vector<unsigned>)> det =
      [&](unsigned row, unsigned size, std::vector<unsigned> cs) {
        if (size == 1) return at(row, cs[0]);
        Polynomial acc(r);
        for (unsigned c = 0; c < size; ++c) {
          std::vector<unsigned> rest = cs;
          rest.erase(rest.begin() + c);
          Polynomial term = at(row, cs[c]) * det(row + 1, size - 1, rest);
          acc = c % 2 == 0 ? acc + term : acc - term;
        }
        return acc;
      };
  std::vector<Polynomial> out;
  for (unsigned i = 0; i + k <= rows; ++i) {
    for (unsigned j = 0; j + k <= cols; ++j) {
      std::vector<unsigned> cs;
      for (unsigned c = 0; c < k; ++c) cs.push_back(j + c);
      out.push_back(det(i, k, cs));
    }
  }
  return Ideal(r, std::move(out));
}

std::vector<AssertedPrime> asserted_primes() {
  std::vector<AssertedPrime> out;
  {
    Ideal a = adjacent_minors(3, 4, 5);
    out.push_back({"A(3,4,5)/P2", a, gens(a.ring(), {"x13", "x23", "x33", "x43"}), true});
  }
  {
    Ideal a = adjacent_minors(2, 4, 4);
    out.push_back({"A(2,4,4)/P3", a,
                   gens(a.ring(), {"x12*x31 - x32*x11", "x42*x11 - x41*x12", "x42*x31 - x41*x32",
                                   "x44*x31 - x41*x34", "x44*x32 - x42*x34", "x13", "x21", "x22",
                                   "x23", "x24", "x33", "x43"}),
                   false});
  }
  {
    Ideal a = adjacent_minors(2, 3, 7);
    out.push_back({"A(2,3,7)/P4", a,
                   gens(a.ring(), {"x16*x27 - x17*x26", "x34*x13 - x33*x14", "x37*x16 - x36*x17",
                                   "x36*x27 - x37*x26", "x12", "x15", "x21", "x22", "x23", "x24",
                                   "x25", "x32", "x35"}),
                   false});
  }
  return out;
}

Ideal random_monomial_ideal(std::uint64_t seed, unsigned nvars, unsigned max_deg,
                            unsigned ngens) {
  if (nvars == 0 || max_deg == 0 || ngens == 0) {
    throw PreconditionError("random_monomial_ideal: parameters must be positive");
  }
  std::vector<std::string> names;
  static const char* small[] = {"x", "y", "z", "w"};
  for (unsigned i = 0; i < nvars; ++i) {
    names.push_back(nvars <= 4 ? small[i] : "x" + std::to_string(i + 1));
  }
  RingPtr r = RingCtx::make(std::move(names));
  std::mt19937_64 rng(seed);
  std::vector<Monomial> ms;
  for (unsigned g = 0; g < ngens; ++g) {
    std::vector<Monomial::Exponent> e(nvars, 0);
    const unsigned deg = 1 + static_cast<unsigned>(rng() % max_deg);
    for (unsigned d = 0; d < deg; ++d) ++e[rng() % nvars];
    ms.emplace_back(std::move(e));
  }
  return MonomialIdeal(nvars, std::move(ms)).to_ideal(r);
}

std::vector<DecomposedIdeal> standard_corpus() {
  std::vector<DecomposedIdeal> out;
  RingPtr r2 = ring_of({"x", "y"});
  RingPtr r3 = ring_of({"x", "y", "z"});
  RingPtr r4 = ring_of({"x", "y", "z", "w"});
  auto add = [&](std::string name, std::vector<std::pair<Ideal, Ideal>> comps) {
    out.push_back(build(std::move(name), std::move(comps)));
  };
  const auto& g = gens;

  add("x^2,xy", {{g(r2, {"x"}), g(r2, {"x"})}, {g(r2, {"x^2", "y"}), g(r2, {"x", "y"})}});
  add("x^3,x^2y", {{g(r2, {"x^2"}), g(r2, {"x"})}, {g(r2, {"x^3", "y"}), g(r2, {"x", "y"})}});
  add("xy", {{g(r2, {"x"}), g(r2, {"x"})}, {g(r2, {"y"}), g(r2, {"y"})}});
  add("x^2y,xy^2", {{g(r2, {"x"}), g(r2, {"x"})},
                    {g(r2, {"y"}), g(r2, {"y"})},
                    {g(r2, {"x^2", "y^2"}), g(r2, {"x", "y"})}});
  add("shifted x^2,xy", {{g(r2, {"x - 1"}), g(r2, {"x - 1"})},
                         {g(r2, {"(x - 1)^2", "y"}), g(r2, {"x - 1", "y"})}});
  add("(x^2+1)y", {{g(r2, {"x^2 + 1"}), g(r2, {"x^2 + 1"})}, {g(r2, {"y"}), g(r2, {"y"})}});
  add("parabola with point", {{g(r2, {"y - x^2"}), g(r2, {"y - x^2"})},
                              {g(r2, {"x", "y^2"}), g(r2, {"x", "y"})}});
  add("x with point (0,1)", {{g(r2, {"x"}), g(r2, {"x"})},
                             {g(r2, {"x^2", "y - 1"}), g(r2, {"x", "y - 1"})}});
  add("x^2y^3", {{g(r2, {"x^2"}), g(r2, {"x"})}, {g(r2, {"y^3"}), g(r2, {"y"})}});
  add("axes and (1,1)", {{g(r2, {"x"}), g(r2, {"x"})},
                         {g(r2, {"y"}), g(r2, {"y"})},
                         {g(r2, {"x - 1", "y - 1"}), g(r2, {"x - 1", "y - 1"})}});

  for (unsigned n : {1u, 2u, 4u, 8u}) out.push_back(i1_family(n));
  add("xyz", {{g(r3, {"x"}), g(r3, {"x"})},
              {g(r3, {"y"}), g(r3, {"y"})},
              {g(r3, {"z"}), g(r3, {"z"})}});
  add("xz,yz", {{g(r3, {"z"}), g(r3, {"z"})}, {g(r3, {"x", "y"}), g(r3, {"x", "y"})}});
  add("plane, line and fat point", {{g(r3, {"z"}), g(r3, {"z"})},
                                    {g(r3, {"x", "y"}), g(r3, {"x", "y"})},
                                    {g(r3, {"x^2", "y", "z^2"}), g(r3, {"x", "y", "z"})}});
  add("x with curve", {{g(r3, {"x"}), g(r3, {"x"})},
                       {g(r3, {"x^2", "y - z^2"}), g(r3, {"x", "y - z^2"})}});
  add("x^2,y with point", {{g(r3, {"x^2", "y"}), g(r3, {"x", "y"})},
                           {g(r3, {"x", "y^2", "z"}), g(r3, {"x", "y", "z"})}});
  add("two lines", {{g(r3, {"x^2", "y"}), g(r3, {"x", "y"})},
                    {g(r3, {"y^2", "z"}), g(r3, {"y", "z"})}});
  add("plane and double line", {{g(r3, {"x"}), g(r3, {"x"})},
                                {g(r3, {"y^2", "y*z", "z^2"}), g(r3, {"y", "z"})}});
  add("shifted plane with line", {{g(r3, {"x - 1"}), g(r3, {"x - 1"})},
                                  {g(r3, {"(x - 1)^2", "y", "z"}), g(r3, {"x - 1", "y", "z"})}});

  add("two planes", {{g(r4, {"x", "y"}), g(r4, {"x", "y"})},
                     {g(r4, {"z", "w"}), g(r4, {"z", "w"})}});
  add("hyperplane with plane", {{g(r4, {"x"}), g(r4, {"x"})},
                                {g(r4, {"x^2", "y", "z - w"}), g(r4, {"x", "y", "z - w"})}});
  add("xy with line", {{g(r4, {"x"}), g(r4, {"x"})},
                       {g(r4, {"y"}), g(r4, {"y"})},
                       {g(r4, {"z", "w"}), g(r4, {"z", "w"})}});
  add("hyperplane, plane and point", {{g(r4, {"x - 1"}), g(r4, {"x - 1"})},
                                      {g(r4, {"y", "z"}), g(r4, {"y", "z"})},
                                      {g(r4, {"(x - 1)^2", "y^2", "z", "w"}),
                                       g(r4, {"x - 1", "y", "z", "w"})}});
  return out;
}

std::vector<Ideal> decoy_primes(const DecomposedIdeal& decomposed) {
  const RingPtr& r = decomposed.ideal.ring();
  const std::size_t n = r->nvars();
  std::vector<Ideal> pool;
  auto var = [&](std::size_t i) { return Polynomial::variable(r, i); };
  const Polynomial one = Polynomial::constant(r, Coeff(1));
  for (std::size_t i = 0; i < n; ++i) {
    pool.push_back(Ideal(r, {var(i)}));
    pool.push_back(Ideal(r, {var(i) - one}));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      pool.push_back(Ideal(r, {var(i), var(j)}));
      pool.push_back(Ideal(r, {var(i) + var(j)}));
      pool.push_back(Ideal(r, {var(i) - one, var(j)}));
      pool.push_back(Ideal(r, {var(i), var(j) - one}));
    }
  }
  std::vector<Polynomial> all;
  for (std::size_t i = 0; i < n; ++i) all.push_back(var(i));
  pool.push_back(Ideal(r, all));
  all.back() = all.back() - one;
  pool.push_back(Ideal(r, all));

  std::vector<Ideal> out;
  for (auto& p : pool) {
    bool known = false;
    for (const auto& c : decomposed.components) known = known || equals(p, c.prime);
    if (!known) out.push_back(std::move(p));
  }
  return out;
}

std::vector<HullInstance> hull_instances() {
  RingPtr r2 = ring_of({"x", "y"});
  RingPtr r3 = ring_of({"x", "y", "z"});
  const auto& g = gens;
  auto meet = [](Ideal a, Ideal b) { return intersect(a, b); };
  std::vector<HullInstance> out;
  out.push_back({"x^2,xy", g(r2, {"x^2", "x*y"}), g(r2, {"x"})});
  out.push_back({"x^3,x^2y", g(r2, {"x^3", "x^2*y"}), g(r2, {"x"})});
  out.push_back({"(x,y)^2", g(r2, {"x^2", "x*y", "y^2"}), g(r2, {"x", "y"})});
  out.push_back({"x^2,xy,y^3", g(r2, {"x^2", "x*y", "y^3"}), g(r2, {"x", "y"})});
  out.push_back({"parabola with point",
                 meet(g(r2, {"y - x^2"}), g(r2, {"x", "y^2"})), g(r2, {"y - x^2"})});
  out.push_back({"(x^2+1) with point",
                 meet(g(r2, {"x^2 + 1"}), g(r2, {"x", "y"})), g(r2, {"x^2 + 1"})});
  out.push_back({"shifted double line",
                 meet(g(r2, {"(x - 1)^2"}), g(r2, {"(x - 1)^3", "y"})), g(r2, {"x - 1"})});
  out.push_back({"xz,yz", g(r3, {"x*z", "y*z"}), g(r3, {"z"})});
  out.push_back({"x^2 with line", meet(g(r3, {"x^2"}), g(r3, {"x^3", "y", "z"})), g(r3, {"x"})});
  out.push_back({"plane with line", meet(g(r3, {"x"}), g(r3, {"y", "z"})), g(r3, {"x"})});
  out.push_back({"x^2,y with point", meet(g(r3, {"x^2", "y"}), g(r3, {"x", "y^2", "z"})),
                 g(r3, {"x", "y"})});
  out.push_back({"plane, line and fat point",
                 meet(g(r3, {"x*z", "y*z"}), g(r3, {"x^2", "y", "z^2"})), g(r3, {"z"})});
  return out;
}

}  // namespace diq

#include "rigidcay/families.hpp"

#include <algorithm>
#include <numeric>

#include "rigidcay/config.hpp"
#include "rigidcay/errors.hpp"

namespace rigidcay {

namespace {

FiniteGroup product_of_cyclics(const std::vector<int>& moduli) {
  FiniteGroup g = make_cyclic(moduli.at(0));
  for (std::size_t i = 1; i < moduli.size(); ++i)
    g = direct_product(g, make_cyclic(moduli[i]));
  return g;
}

// Mixed-radix id of a digit tuple under the row-major pairing of fold-left
// binary products.
int id_from_digits(const std::vector<int>& moduli, const std::vector<int>& digits) {
  int id = 0;
  for (std::size_t i = 0; i < moduli.size(); ++i) id = id * moduli[i] + digits[i];
  return id;
}

std::vector<int> basis_element_ids(const std::vector<int>& moduli) {
  std::vector<int> ids;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    std::vector<int> digits(moduli.size(), 0);
    digits[i] = 1;
    ids.push_back(id_from_digits(moduli, digits));
  }
  return ids;
}

long long crt_combine(const std::vector<int>& moduli, const std::vector<int>& residues) {
  long long big = 1;
  for (int m : moduli) big *= m;
  long long x = 0;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const long long quotient = big / moduli[i];
    long long inv = 1;
    // quotient^{phi(m)-1} would need phi; small moduli, scan instead.
    for (long long c = 1; c < moduli[i]; ++c)
      if (quotient % moduli[i] * c % moduli[i] == 1) {
        inv = c;
        break;
      }
    x = (x + residues[i] % moduli[i] * quotient % big * inv) % big;
  }
  return x;
}

void check_family_capacity(long long order, const std::string& what) {
  if (order > family_capacity())
    throw CapacityExceededError(what + " instance order " + std::to_string(order) +
                                " exceeds family capacity " +
                                std::to_string(family_capacity()));
}

// Predicted == actual for counts and degree, the backing subgroup condition,
// and goodness of the certificate. Violations are construction bugs.
void finalize(FamilyInstance& instance, bool condition_holds) {
  if (!condition_holds)
    throw Error(instance.family_name + ": backing subgroup condition failed");
  const auto profile = degree_profile(instance.graph);
  if (instance.graph.vertex_count != instance.predicted_vertices)
    throw Error(instance.family_name + ": vertex count mismatch");
  if (static_cast<long long>(instance.graph.edges.size()) != instance.predicted_edges)
    throw Error(instance.family_name + ": edge count mismatch");
  if (!profile.is_regular ||
      (instance.graph.vertex_count > 0 && profile.degrees[0] != instance.predicted_regularity))
    throw Error(instance.family_name + ": regularity mismatch");
  if (!is_good_nac(instance.graph, instance.coloring).is_good)
    throw Error(instance.family_name + ": certificate coloring is not a good NAC-coloring");
}

FamilyInstance abelian_from_moduli(const std::vector<int>& moduli, std::string name,
                                   bool coprime) {
  long long order = 1;
  for (int m : moduli) {
    if (m < 2) throw InvalidParameterError("cyclic modulus must be >= 2");
    order *= m;
  }
  check_family_capacity(order, name);

  const FiniteGroup group = product_of_cyclics(moduli);
  const std::vector<int> basis = basis_element_ids(moduli);
  const GeneratorSet closed = symmetric_closure(make_generator_set(group, basis));
  SimpleGraph graph = cayley_graph(closed);

  FamilyInstance instance;
  instance.family_name = std::move(name);
  instance.coloring = generator_class_coloring(graph, {basis[0]});
  instance.predicted_vertices = order;
  int regularity = 0;
  for (int m : moduli) regularity += m == 2 ? 1 : 2;
  instance.predicted_regularity = regularity;
  instance.predicted_edges = order * regularity / 2;

  if (coprime) {
    for (int s : closed.elements) {
      std::vector<int> digits(moduli.size());
      int id = s;
      for (std::size_t i = moduli.size(); i-- > 0;) {
        digits[i] = id % moduli[i];
        id /= moduli[i];
      }
      instance.translated_generators.push_back(
          static_cast<int>(crt_combine(moduli, digits)));
    }
    std::sort(instance.translated_generators.begin(), instance.translated_generators.end());
  }

  const auto condition = check_partition_condition(group, basis, {basis[0]});
  instance.graph = std::move(graph);
  finalize(instance, condition.movable.holds);
  return instance;
}

}  // namespace

FamilyInstance abelian_power_family(int q, int alpha) {
  if (q <= 2) throw InvalidParameterError("power form needs q > 2");
  if (alpha < 2)
    throw InvalidParameterError(
        "power form needs alpha >= 2 (a single class cannot be 2-colored)");
  return abelian_from_moduli(std::vector<int>(alpha, q), "abelian-power", false);
}

FamilyInstance abelian_crt_family(const std::vector<int>& moduli) {
  if (moduli.size() < 2)
    throw InvalidParameterError("crt form needs at least two factors");
  for (std::size_t i = 0; i < moduli.size(); ++i)
    for (std::size_t j = i + 1; j < moduli.size(); ++j)
      if (std::gcd(moduli[i], moduli[j]) != 1)
        throw InvalidParameterError("crt moduli must be pairwise coprime");
  return abelian_from_moduli(moduli, "abelian-crt", true);
}

FamilyInstance abelian_involution_family(const std::vector<int>& moduli) {
  if (moduli.empty() || moduli[0] != 2)
    throw InvalidParameterError("involution form needs a leading Z/2 factor");
  FamilyInstance instance = abelian_crt_family(moduli);
  instance.family_name = "abelian-involution";
  return instance;
}

FamilyInstance dense_abelian_family(int n, int k) {
  if (n < 2) throw InvalidParameterError("dense family needs n >= 2");
  if (k < 1) throw InvalidParameterError("dense family needs k >= 1");
  long long second = 1;
  for (int i = 0; i < k; ++i) {
    second *= n;
    if (second > family_capacity())
      throw CapacityExceededError("n^k exceeds family capacity");
  }
  const long long order = n * second;
  check_family_capacity(order, "dense-abelian");

  const std::vector<int> moduli{n, static_cast<int>(second)};
  const FiniteGroup group = product_of_cyclics(moduli);
  std::vector<int> first_axis, second_axis;
  for (int a = 1; a < n; ++a) first_axis.push_back(id_from_digits(moduli, {a, 0}));
  for (int b = 1; b < second; ++b) second_axis.push_back(id_from_digits(moduli, {0, b}));
  std::vector<int> all = first_axis;
  all.insert(all.end(), second_axis.begin(), second_axis.end());

  SimpleGraph graph = cayley_graph(make_generator_set(group, all));

  FamilyInstance instance;
  instance.family_name = "dense-abelian";
  instance.coloring = generator_class_coloring(graph, first_axis);
  instance.predicted_vertices = order;
  instance.predicted_regularity = static_cast<int>(n + second - 2);
  instance.predicted_edges = order * (n + second - 2) / 2;

  const auto condition = check_partition_condition(group, all, first_axis);
  instance.graph = std::move(graph);
  finalize(instance, condition.movable.holds);
  return instance;
}

FamilyInstance sl_family(int n, int p, SlVariant variant) {
  if (n < 2) throw InvalidParameterError("SL family needs dimension >= 2");
  if (!is_prime(p)) throw InvalidParameterError(std::to_string(p) + " is not prime");
  check_family_capacity(sl_order_formula(n, p), "sl");

  FamilyInstance instance;
  std::vector<int> upper, lower;
  FiniteGroup group;
  if (variant == SlVariant::Elementary) {
    const GeneratorSet gens = elementary_generators(n, p);
    group = gens.group;
    for (int i = 0; i + 1 < n; ++i) {
      upper.push_back(sl_transvection(group, i, i + 1));
      lower.push_back(sl_transvection(group, i + 1, i));
    }
    instance.family_name = "sl-elementary";
    instance.predicted_regularity = p == 2 ? 2 * (n - 1) : 4 * (n - 1);
  } else {
    group = make_sl(n, p);
    upper = triangular_generators(group, TriangularSide::Upper);
    lower = triangular_generators(group, TriangularSide::Lower);
    instance.family_name = "sl-triangular";
    long long half = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) half *= p;
    instance.predicted_regularity = static_cast<int>(2 * (half - 1));
  }

  std::vector<int> all = upper;
  all.insert(all.end(), lower.begin(), lower.end());
  const GeneratorSet closed = symmetric_closure(make_generator_set(group, all));
  SimpleGraph graph = cayley_graph(closed);

  instance.coloring = generator_class_coloring(graph, upper);
  instance.predicted_vertices = group.order();
  instance.predicted_edges =
      static_cast<long long>(group.order()) * instance.predicted_regularity / 2;

  const auto condition = check_partition_condition(group, all, upper);
  instance.graph = std::move(graph);
  finalize(instance, condition.movable.holds);
  return instance;
}

FamilyInstance sl_product_family(int n1, int p1, int n2, int p2) {
  const long long o1 = sl_order_formula(n1, p1);
  const long long o2 = sl_order_formula(n2, p2);
  if (o1 < 2 || o2 < 2)
    throw InvalidParameterError("product family factors must have order >= 2");
  check_family_capacity(o1 * o2, "sl-product");

  const FiniteGroup g1 = make_sl(n1, p1);
  const FiniteGroup g2 = make_sl(n2, p2);

  auto complete_cayley = [](const FiniteGroup& g) {
    std::vector<int> all;
    for (int x = 0; x < g.order(); ++x)
      if (x != g.identity()) all.push_back(x);
    return cayley_graph(make_generator_set(g, all));
  };
  SimpleGraph graph = cartesian_product(complete_cayley(g1), complete_cayley(g2));

  FamilyInstance instance;
  instance.family_name = "sl-product";
  instance.coloring = product_coloring(graph);
  instance.predicted_vertices = o1 * o2;
  instance.predicted_regularity = static_cast<int>(o1 + o2 - 2);
  instance.predicted_edges = o1 * o2 * (o1 + o2 - 2) / 2;

  // The same instance as a single Cayley graph: product group with both
  // full axes as generators; its intersection condition backs movability.
  const FiniteGroup product = direct_product(g1, g2);
  std::vector<int> first_axis, second_axis;
  for (int x = 0; x < g1.order(); ++x)
    if (x != g1.identity()) first_axis.push_back(product_id(product, x, g2.identity()));
  for (int y = 0; y < g2.order(); ++y)
    if (y != g2.identity()) second_axis.push_back(product_id(product, g1.identity(), y));
  std::vector<int> all = first_axis;
  all.insert(all.end(), second_axis.begin(), second_axis.end());
  const auto condition = check_partition_condition(product, all, first_axis);

  instance.graph = std::move(graph);
  finalize(instance, condition.movable.holds);
  return instance;
}

FamilyInstance sl_product_family_power(int n, int p, int k) {
  if (k < 1) throw InvalidParameterError("product family needs k >= 1");
  long long second = 1;
  for (int i = 0; i < k; ++i) {
    second *= n;
    if (second > 64) throw CapacityExceededError("n^k dimension too large");
  }
  FamilyInstance instance = sl_product_family(n, p, static_cast<int>(second), p);
  return instance;
}

FamilyInstance regularity_construction(int r) {
  if (r < 2) throw InvalidParameterError("regularity must be >= 2");
  FamilyInstance instance;
  if (r == 3) {
    instance = abelian_involution_family({2, 3});
  } else if (r % 2 == 0) {
    instance = sl_family(r / 2 + 1, 2, SlVariant::Elementary);
  } else {
    // Odd r = 2*rho + 1 >= 5: elementary set plus the extra transvection
    // E_{1,3}; everything is an involution over F_2.
    const int dim = (r - 1) / 2 + 1;
    check_family_capacity(sl_order_formula(dim, 2), "regularity");
    const GeneratorSet gens = elementary_generators(dim, 2);
    const FiniteGroup group = gens.group;
    std::vector<int> upper, lower;
    for (int i = 0; i + 1 < dim; ++i) {
      upper.push_back(sl_transvection(group, i, i + 1));
      lower.push_back(sl_transvection(group, i + 1, i));
    }
    upper.push_back(sl_transvection(group, 0, 2));
    std::vector<int> all = upper;
    all.insert(all.end(), lower.begin(), lower.end());
    SimpleGraph graph = cayley_graph(symmetric_closure(make_generator_set(group, all)));

    instance.coloring = generator_class_coloring(graph, upper);
    instance.predicted_vertices = group.order();
    instance.predicted_regularity = r;
    instance.predicted_edges = static_cast<long long>(group.order()) * r / 2;
    const auto condition = check_partition_condition(group, all, upper);
    instance.graph = std::move(graph);
    instance.family_name = "regularity";
    finalize(instance, condition.movable.holds);
    return instance;
  }
  instance.family_name = "regularity";
  if (instance.predicted_regularity != r)
    throw Error("regularity construction produced the wrong degree");
  return instance;
}

}  // namespace rigidcay

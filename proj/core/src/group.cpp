#include "rigidcay/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <mutex>
#include <queue>
#include <unordered_map>
#include <utility>

#include "rigidcay/config.hpp"
#include "rigidcay/errors.hpp"

namespace rigidcay {

namespace {

std::vector<std::string> split_top_level(const std::string& text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

int parse_int(const std::string& text) {
  try {
    std::size_t consumed = 0;
    int value = std::stoi(text, &consumed);
    if (consumed != text.size()) throw ParseError("trailing characters in integer: " + text);
    return value;
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    throw ParseError("expected integer, got: '" + text + "'");
  }
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string GroupDescriptor::text() const {
  switch (kind) {
    case Kind::Cyclic:
      return "cyclic:" + std::to_string(n);
    case Kind::SpecialLinear:
      return "sl:" + std::to_string(n) + ":" + std::to_string(p);
    case Kind::Product:
      return "product:(" + factors[0].text() + "," + factors[1].text() + ")";
  }
  throw Error("unreachable descriptor kind");
}

bool GroupDescriptor::operator==(const GroupDescriptor& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::Cyclic:
      return n == other.n;
    case Kind::SpecialLinear:
      return n == other.n && p == other.p;
    case Kind::Product:
      return factors == other.factors;
  }
  return false;
}

GroupDescriptor GroupDescriptor::parse(const std::string& text) {
  if (text.rfind("cyclic:", 0) == 0) {
    GroupDescriptor d;
    d.kind = Kind::Cyclic;
    d.n = parse_int(text.substr(7));
    return d;
  }
  if (text.rfind("sl:", 0) == 0) {
    auto parts = split_top_level(text.substr(3), ':');
    if (parts.size() != 2) throw ParseError("expected sl:<n>:<p>, got: " + text);
    GroupDescriptor d;
    d.kind = Kind::SpecialLinear;
    d.n = parse_int(parts[0]);
    d.p = parse_int(parts[1]);
    return d;
  }
  if (text.rfind("product:(", 0) == 0 && text.back() == ')') {
    auto inner = text.substr(9, text.size() - 10);
    auto parts = split_top_level(inner, ',');
    if (parts.size() < 2) throw ParseError("product needs at least two factors: " + text);
    GroupDescriptor d = parse(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      GroupDescriptor combined;
      combined.kind = Kind::Product;
      combined.factors = {d, parse(parts[i])};
      d = std::move(combined);
    }
    return d;
  }
  throw ParseError("unrecognized group descriptor: '" + text + "'");
}

namespace detail {

class GroupImpl {
public:
  GroupImpl(GroupDescriptor desc, int order, int identity)
      : desc_(std::move(desc)), order_(order), identity_(identity) {}
  virtual ~GroupImpl() = default;

  int order() const { return order_; }
  int identity() const { return identity_; }
  const GroupDescriptor& descriptor() const { return desc_; }

  int multiply(int a, int b) const {
    check_id(a);
    check_id(b);
    if (order_ <= multiplication_table_cap()) {
      std::call_once(table_once_, [this] {
        table_.resize(static_cast<std::size_t>(order_) * order_);
        for (int x = 0; x < order_; ++x)
          for (int y = 0; y < order_; ++y)
            table_[static_cast<std::size_t>(x) * order_ + y] = multiply_raw(x, y);
      });
      return table_[static_cast<std::size_t>(a) * order_ + b];
    }
    return multiply_raw(a, b);
  }

  int invert(int a) const {
    check_id(a);
    std::call_once(inverse_once_, [this] {
      inverse_.resize(order_);
      for (int x = 0; x < order_; ++x) inverse_[x] = invert_raw(x);
    });
    return inverse_[a];
  }

  virtual int multiply_raw(int a, int b) const = 0;
  virtual int invert_raw(int a) const = 0;
  virtual std::string element_name(int id) const = 0;
  virtual int element_from_name(const std::string& name) const = 0;

protected:
  void check_id(int id) const {
    if (id < 0 || id >= order_)
      throw InvalidParameterError("element id " + std::to_string(id) +
                                  " out of range for group of order " +
                                  std::to_string(order_));
  }

private:
  GroupDescriptor desc_;
  int order_;
  int identity_;
  mutable std::once_flag table_once_;
  mutable std::vector<std::int32_t> table_;
  mutable std::once_flag inverse_once_;
  mutable std::vector<std::int32_t> inverse_;
};

namespace {

class CyclicGroup final : public GroupImpl {
public:
  explicit CyclicGroup(int n)
      : GroupImpl(GroupDescriptor{GroupDescriptor::Kind::Cyclic, n, 0, {}}, n, 0), n_(n) {}

  int multiply_raw(int a, int b) const override { return (a + b) % n_; }
  int invert_raw(int a) const override { return (n_ - a) % n_; }

  std::string element_name(int id) const override { return std::to_string(id); }

  int element_from_name(const std::string& name) const override {
    long long v = 0;
    try {
      std::size_t consumed = 0;
      v = std::stoll(name, &consumed);
      if (consumed != name.size()) throw ParseError("bad residue literal: '" + name + "'");
    } catch (const ParseError&) {
      throw;
    } catch (...) {
      throw ParseError("bad residue literal: '" + name + "'");
    }
    return static_cast<int>(((v % n_) + n_) % n_);
  }

private:
  int n_;
};

class ProductGroup final : public GroupImpl {
public:
  ProductGroup(FiniteGroup g1, FiniteGroup g2, GroupDescriptor desc, int order, int identity)
      : GroupImpl(std::move(desc), order, identity), g1_(std::move(g1)), g2_(std::move(g2)) {}

  int multiply_raw(int a, int b) const override {
    const int o2 = g2_.order();
    const int left = g1_.multiply(a / o2, b / o2);
    const int right = g2_.multiply(a % o2, b % o2);
    return left * o2 + right;
  }

  int invert_raw(int a) const override {
    const int o2 = g2_.order();
    return g1_.invert(a / o2) * o2 + g2_.invert(a % o2);
  }

  std::string element_name(int id) const override {
    const int o2 = g2_.order();
    return "(" + g1_.element_name(id / o2) + "," + g2_.element_name(id % o2) + ")";
  }

  int element_from_name(const std::string& name) const override {
    if (name.size() < 2 || name.front() != '(' || name.back() != ')')
      throw ParseError("expected (left,right) element literal, got: '" + name + "'");
    auto parts = split_top_level(name.substr(1, name.size() - 2), ',');
    if (parts.size() != 2)
      throw ParseError("expected exactly two components in: '" + name + "'");
    return g1_.element_from_name(parts[0]) * g2_.order() + g2_.element_from_name(parts[1]);
  }

  const FiniteGroup& left() const { return g1_; }
  const FiniteGroup& right() const { return g2_; }

private:
  FiniteGroup g1_;
  FiniteGroup g2_;
};

class SlGroup final : public GroupImpl {
public:
  SlGroup(int n, int p, std::vector<std::vector<std::uint8_t>> mats,
          std::unordered_map<std::uint64_t, std::int32_t> index, int identity)
      : GroupImpl(GroupDescriptor{GroupDescriptor::Kind::SpecialLinear, n, p, {}},
                  static_cast<int>(mats.size()), identity),
        n_(n),
        p_(p),
        mats_(std::move(mats)),
        index_(std::move(index)) {}

  static std::uint64_t encode(const std::vector<std::uint8_t>& entries, int p) {
    std::uint64_t key = 0;
    for (auto it = entries.rbegin(); it != entries.rend(); ++it)
      key = key * static_cast<std::uint64_t>(p) + *it;
    return key;
  }

  int lookup(const std::vector<std::uint8_t>& entries) const {
    auto it = index_.find(encode(entries, p_));
    return it == index_.end() ? -1 : it->second;
  }

  int multiply_raw(int a, int b) const override {
    const auto& ma = mats_[a];
    const auto& mb = mats_[b];
    std::vector<std::uint8_t> out(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        int acc = 0;
        for (int k = 0; k < n_; ++k) acc += ma[i * n_ + k] * mb[k * n_ + j];
        out[i * n_ + j] = static_cast<std::uint8_t>(acc % p_);
      }
    const int id = lookup(out);
    if (id < 0) throw Error("SL multiplication left the enumerated universe");
    return id;
  }

  int invert_raw(int a) const override {
    // Gauss-Jordan over F_p on [M | I].
    std::vector<int> left(mats_[a].begin(), mats_[a].end());
    std::vector<int> right(static_cast<std::size_t>(n_) * n_, 0);
    for (int i = 0; i < n_; ++i) right[i * n_ + i] = 1;
    for (int col = 0; col < n_; ++col) {
      int pivot = -1;
      for (int row = col; row < n_; ++row)
        if (left[row * n_ + col] % p_ != 0) {
          pivot = row;
          break;
        }
      if (pivot < 0) throw Error("singular matrix in SL group");
      if (pivot != col)
        for (int j = 0; j < n_; ++j) {
          std::swap(left[pivot * n_ + j], left[col * n_ + j]);
          std::swap(right[pivot * n_ + j], right[col * n_ + j]);
        }
      const int inv = mod_pow(left[col * n_ + col] % p_, p_ - 2);
      for (int j = 0; j < n_; ++j) {
        left[col * n_ + j] = left[col * n_ + j] * inv % p_;
        right[col * n_ + j] = right[col * n_ + j] * inv % p_;
      }
      for (int row = 0; row < n_; ++row) {
        if (row == col) continue;
        const int factor = left[row * n_ + col] % p_;
        if (factor == 0) continue;
        for (int j = 0; j < n_; ++j) {
          left[row * n_ + j] = (left[row * n_ + j] + (p_ - factor) * left[col * n_ + j]) % p_;
          right[row * n_ + j] = (right[row * n_ + j] + (p_ - factor) * right[col * n_ + j]) % p_;
        }
      }
    }
    std::vector<std::uint8_t> out(right.begin(), right.end());
    const int id = lookup(out);
    if (id < 0) throw Error("SL inverse left the enumerated universe");
    return id;
  }

  std::string element_name(int id) const override {
    const auto& m = mats_[id];
    std::string out = "[";
    for (int i = 0; i < n_; ++i) {
      out += i == 0 ? "[" : ",[";
      for (int j = 0; j < n_; ++j) {
        if (j > 0) out += ",";
        out += std::to_string(static_cast<int>(m[i * n_ + j]));
      }
      out += "]";
    }
    out += "]";
    return out;
  }

  int element_from_name(const std::string& name) const override {
    if (name.size() < 2 || name.front() != '[' || name.back() != ']')
      throw ParseError("expected [[..],..] matrix literal, got: '" + name + "'");
    auto rows = split_top_level(name.substr(1, name.size() - 2), ',');
    if (static_cast<int>(rows.size()) != n_)
      throw ParseError("expected " + std::to_string(n_) + " rows in: '" + name + "'");
    std::vector<std::uint8_t> entries(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i) {
      const std::string& row = rows[i];
      if (row.size() < 2 || row.front() != '[' || row.back() != ']')
        throw ParseError("bad matrix row: '" + row + "'");
      auto cells = split_top_level(row.substr(1, row.size() - 2), ',');
      if (static_cast<int>(cells.size()) != n_)
        throw ParseError("expected " + std::to_string(n_) + " columns in: '" + row + "'");
      for (int j = 0; j < n_; ++j) {
        const int v = parse_int(cells[j]);
        entries[i * n_ + j] = static_cast<std::uint8_t>(((v % p_) + p_) % p_);
      }
    }
    const int id = lookup(entries);
    if (id < 0) throw ParseError("matrix is not in SL_" + std::to_string(n_) + "(F_" +
                                 std::to_string(p_) + "): '" + name + "'");
    return id;
  }

  int dimension() const { return n_; }
  int characteristic() const { return p_; }
  const std::vector<std::uint8_t>& matrix(int id) const { return mats_[id]; }

private:
  int mod_pow(int base, int exp) const {
    long long acc = 1, b = base % p_;
    while (exp > 0) {
      if (exp & 1) acc = acc * b % p_;
      b = b * b % p_;
      exp >>= 1;
    }
    return static_cast<int>(acc);
  }

  int n_;
  int p_;
  std::vector<std::vector<std::uint8_t>> mats_;
  std::unordered_map<std::uint64_t, std::int32_t> index_;
};

int det_mod_p(std::vector<int> m, int n, int p) {
  long long det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (m[row * n + col] % p != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[col * n + j]);
      det = (p - det % p) % p;
    }
    const int pv = m[col * n + col] % p;
    det = det * pv % p;
    long long inv = 1, b = pv, e = p - 2;
    while (e > 0) {
      if (e & 1) inv = inv * b % p;
      b = b * b % p;
      e >>= 1;
    }
    for (int row = col + 1; row < n; ++row) {
      const long long factor = m[row * n + col] % p * inv % p;
      if (factor == 0) continue;
      for (int j = col; j < n; ++j)
        m[row * n + j] =
            static_cast<int>(((m[row * n + j] - factor * m[col * n + j]) % p + p) % p);
    }
  }
  return static_cast<int>(det % p);
}

}  // namespace
}  // namespace detail

int FiniteGroup::order() const { return impl_->order(); }
int FiniteGroup::identity() const { return impl_->identity(); }
int FiniteGroup::multiply(int a, int b) const { return impl_->multiply(a, b); }
int FiniteGroup::invert(int a) const { return impl_->invert(a); }
const GroupDescriptor& FiniteGroup::descriptor() const { return impl_->descriptor(); }
std::string FiniteGroup::descriptor_text() const { return impl_->descriptor().text(); }
std::string FiniteGroup::element_name(int id) const { return impl_->element_name(id); }
int FiniteGroup::element_from_name(const std::string& name) const {
  return impl_->element_from_name(name);
}

FiniteGroup make_cyclic(int n) {
  if (n < 1) throw InvalidParameterError("cyclic group order must be >= 1, got " +
                                         std::to_string(n));
  if (n > element_capacity())
    throw CapacityExceededError("cyclic group order " + std::to_string(n) +
                                " exceeds capacity " + std::to_string(element_capacity()));
  return FiniteGroup(std::make_shared<detail::CyclicGroup>(n));
}

FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  if (!g1.valid() || !g2.valid()) throw InvalidParameterError("invalid factor group");
  const long long order = static_cast<long long>(g1.order()) * g2.order();
  if (order > element_capacity())
    throw CapacityExceededError("product order " + std::to_string(order) +
                                " exceeds capacity " + std::to_string(element_capacity()));
  GroupDescriptor desc;
  desc.kind = GroupDescriptor::Kind::Product;
  desc.factors = {g1.descriptor(), g2.descriptor()};
  const int identity = g1.identity() * g2.order() + g2.identity();
  return FiniteGroup(std::make_shared<detail::ProductGroup>(g1, g2, std::move(desc),
                                                            static_cast<int>(order), identity));
}

long long sl_order_formula(int n, int p) {
  // (1/(p-1)) * prod_{k=0}^{n-1} (p^n - p^k), clamped on overflow.
  const long long cap = std::numeric_limits<long long>::max() / 4;
  long long pn = 1;
  for (int i = 0; i < n; ++i) {
    if (pn > cap / p) return cap;
    pn *= p;
  }
  long long result = 1;
  long long pk = 1;
  for (int k = 0; k < n; ++k) {
    const long long factor = pn - pk;
    if (result > cap / factor) return cap;
    result *= factor;
    pk *= p;
  }
  return result / (p - 1);
}

FiniteGroup make_sl(int n, int p) {
  if (n < 1) throw InvalidParameterError("SL dimension must be >= 1");
  if (!is_prime(p)) throw InvalidParameterError(std::to_string(p) + " is not prime");
  const long long order = sl_order_formula(n, p);
  if (order > element_capacity())
    throw CapacityExceededError("|SL_" + std::to_string(n) + "(F_" + std::to_string(p) +
                                ")| = " + std::to_string(order) + " exceeds capacity " +
                                std::to_string(element_capacity()));

  const int cells = n * n;
  std::vector<std::vector<std::uint8_t>> mats;
  mats.reserve(static_cast<std::size_t>(order));
  std::unordered_map<std::uint64_t, std::int32_t> index;
  index.reserve(static_cast<std::size_t>(order) * 2);

  std::vector<std::uint8_t> entries(cells, 0);
  std::vector<int> work(cells);
  // Lexicographic row-major enumeration makes ids deterministic.
  while (true) {
    for (int i = 0; i < cells; ++i) work[i] = entries[i];
    if (detail::det_mod_p(work, n, p) == 1) {
      index.emplace(detail::SlGroup::encode(entries, p),
                    static_cast<std::int32_t>(mats.size()));
      mats.push_back(entries);
    }
    int pos = cells - 1;
    while (pos >= 0 && entries[pos] == p - 1) entries[pos--] = 0;
    if (pos < 0) break;
    ++entries[pos];
  }
  if (static_cast<long long>(mats.size()) != order)
    throw Error("SL enumeration disagrees with the order formula");

  std::vector<std::uint8_t> ident(cells, 0);
  for (int i = 0; i < n; ++i) ident[i * n + i] = 1;
  const auto it = index.find(detail::SlGroup::encode(ident, p));
  return FiniteGroup(std::make_shared<detail::SlGroup>(n, p, std::move(mats), std::move(index),
                                                       it->second));
}

FiniteGroup make_group(const GroupDescriptor& desc) {
  switch (desc.kind) {
    case GroupDescriptor::Kind::Cyclic:
      return make_cyclic(desc.n);
    case GroupDescriptor::Kind::SpecialLinear:
      return make_sl(desc.n, desc.p);
    case GroupDescriptor::Kind::Product:
      return direct_product(make_group(desc.factors[0]), make_group(desc.factors[1]));
  }
  throw Error("unreachable descriptor kind");
}

int sl_transvection(const FiniteGroup& sl, int row, int col) {
  if (!sl.valid() || sl.descriptor().kind != GroupDescriptor::Kind::SpecialLinear)
    throw InvalidParameterError("sl_transvection requires an SL group");
  const int n = sl.descriptor().n;
  if (row < 0 || col < 0 || row >= n || col >= n || row == col)
    throw InvalidParameterError("bad transvection position");
  std::string name = "[";
  for (int i = 0; i < n; ++i) {
    name += i == 0 ? "[" : ",[";
    for (int j = 0; j < n; ++j) {
      if (j > 0) name += ",";
      const int v = (i == j) ? 1 : (i == row && j == col ? 1 : 0);
      name += std::to_string(v);
    }
    name += "]";
  }
  name += "]";
  return sl.element_from_name(name);
}

std::vector<int> sl_matrix_of(const FiniteGroup& sl, int id) {
  if (!sl.valid() || sl.descriptor().kind != GroupDescriptor::Kind::SpecialLinear)
    throw InvalidParameterError("sl_matrix_of requires an SL group");
  const std::string name = sl.element_name(id);
  std::vector<int> out;
  for (std::size_t i = 0; i < name.size();) {
    if (std::isdigit(static_cast<unsigned char>(name[i]))) {
      std::size_t j = i;
      while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j]))) ++j;
      out.push_back(std::stoi(name.substr(i, j - i)));
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

namespace {

long long descriptor_order(const GroupDescriptor& desc) {
  switch (desc.kind) {
    case GroupDescriptor::Kind::Cyclic:
      return desc.n;
    case GroupDescriptor::Kind::SpecialLinear:
      return sl_order_formula(desc.n, desc.p);
    case GroupDescriptor::Kind::Product:
      return descriptor_order(desc.factors[0]) * descriptor_order(desc.factors[1]);
  }
  throw Error("unreachable descriptor kind");
}

int right_factor_order(const FiniteGroup& product, const char* what) {
  if (!product.valid() || product.descriptor().kind != GroupDescriptor::Kind::Product)
    throw InvalidParameterError(std::string(what) + " requires a product group");
  return static_cast<int>(descriptor_order(product.descriptor().factors[1]));
}

}  // namespace

int product_id(const FiniteGroup& product, int left_id, int right_id) {
  const int o2 = right_factor_order(product, "product_id");
  return left_id * o2 + right_id;
}

std::pair<int, int> product_parts(const FiniteGroup& product, int id) {
  const int o2 = right_factor_order(product, "product_parts");
  return {id / o2, id % o2};
}

GeneratorSet make_generator_set(const FiniteGroup& group, std::vector<int> elements) {
  if (!group.valid()) throw InvalidParameterError("invalid group");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (int e : elements) {
    if (e < 0 || e >= group.order())
      throw InvalidParameterError("generator id " + std::to_string(e) + " out of range");
    if (e == group.identity())
      throw InvalidGeneratorError("identity is not allowed in a generating set");
  }
  return GeneratorSet{group, std::move(elements)};
}

std::vector<int> subgroup_closure(const FiniteGroup& group, const std::vector<int>& seed) {
  if (!group.valid()) throw InvalidParameterError("invalid group");
  std::vector<int> step;
  step.reserve(seed.size() * 2);
  for (int s : seed) {
    if (s < 0 || s >= group.order())
      throw InvalidParameterError("seed id " + std::to_string(s) + " out of range");
    step.push_back(s);
    step.push_back(group.invert(s));
  }
  std::sort(step.begin(), step.end());
  step.erase(std::unique(step.begin(), step.end()), step.end());

  std::vector<char> seen(group.order(), 0);
  std::queue<int> work;
  seen[group.identity()] = 1;
  work.push(group.identity());
  while (!work.empty()) {
    const int g = work.front();
    work.pop();
    for (int s : step) {
      const int h = group.multiply(g, s);
      if (!seen[h]) {
        seen[h] = 1;
        work.push(h);
      }
    }
  }
  std::vector<int> closure;
  for (int g = 0; g < group.order(); ++g)
    if (seen[g]) closure.push_back(g);
  return closure;
}

GeneratorSet symmetric_closure(const GeneratorSet& gens) {
  if (!gens.group.valid()) throw InvalidParameterError("invalid group");
  std::vector<int> closed = gens.elements;
  for (int e : gens.elements) {
    if (e == gens.group.identity())
      throw InvalidGeneratorError("identity is not allowed in a generating set");
    closed.push_back(gens.group.invert(e));
  }
  std::sort(closed.begin(), closed.end());
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  return GeneratorSet{gens.group, std::move(closed)};
}

bool is_generating(const GeneratorSet& gens) {
  const auto closed = symmetric_closure(gens);
  return static_cast<int>(subgroup_closure(gens.group, closed.elements).size()) ==
         gens.group.order();
}

GeneratorSet elementary_generators(int n, int p) {
  if (n < 2) throw InvalidParameterError("elementary generators need dimension >= 2");
  const FiniteGroup sl = make_sl(n, p);
  std::vector<int> elements;
  for (int i = 0; i + 1 < n; ++i) {
    elements.push_back(sl_transvection(sl, i, i + 1));
    elements.push_back(sl_transvection(sl, i + 1, i));
  }
  return make_generator_set(sl, std::move(elements));
}

std::vector<int> triangular_generators(const FiniteGroup& sl, TriangularSide side) {
  if (!sl.valid() || sl.descriptor().kind != GroupDescriptor::Kind::SpecialLinear)
    throw InvalidParameterError("triangular_generators requires an SL group");
  const int n = sl.descriptor().n;
  const int p = sl.descriptor().p;
  const int free_cells = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const bool upper = i < j;
      if ((side == TriangularSide::Upper && upper) || (side == TriangularSide::Lower && i > j))
        cells.emplace_back(i, j);
    }
  std::vector<int> values(free_cells, 0);
  std::vector<int> out;
  while (true) {
    bool nontrivial = false;
    for (int v : values) nontrivial |= v != 0;
    if (nontrivial) {
      std::string name = "[";
      std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) m[i][i] = 1;
      for (int c = 0; c < free_cells; ++c) m[cells[c].first][cells[c].second] = values[c];
      for (int i = 0; i < n; ++i) {
        name += i == 0 ? "[" : ",[";
        for (int j = 0; j < n; ++j) {
          if (j > 0) name += ",";
          name += std::to_string(m[i][j]);
        }
        name += "]";
      }
      name += "]";
      out.push_back(sl.element_from_name(name));
    }
    int pos = free_cells - 1;
    while (pos >= 0 && values[pos] == p - 1) values[pos--] = 0;
    if (pos < 0) break;
    ++values[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> triangular_generators(int n, int p, TriangularSide side) {
  return triangular_generators(make_sl(n, p), side);
}

}  // namespace rigidcay

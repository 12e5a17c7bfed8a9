#include "cgt/groups.hpp"

#include <algorithm>
#include <utility>

#include "cgt/errors.hpp"

namespace cgt::groups {
namespace {

using Code = std::vector<std::int64_t>;

std::string letter_label(int index, int rank, bool inverse) {
  if (rank <= 26) return std::string(1, static_cast<char>((inverse ? 'A' : 'a') + index));
  return (inverse ? "X" : "x") + std::to_string(index + 1);
}

std::string tuple_label(const Code& v, std::size_t from, std::size_t to) {
  std::string out = "(";
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

// Inverse-paired symbols g_0, g_0^-1, g_1, g_1^-1, ... in a fixed order; the
// positive symbol of each pair comes first so lexicographic tie-breaking
// prefers it.
std::vector<GeneratorSymbol> paired_symbols(const std::vector<std::string>& positive_labels,
                                            const std::vector<std::string>& inverse_labels) {
  std::vector<GeneratorSymbol> out;
  for (std::size_t i = 0; i < positive_labels.size(); ++i) {
    int p = static_cast<int>(2 * i);
    out.push_back({p, positive_labels[i], p + 1});
    out.push_back({p + 1, inverse_labels[i], p});
  }
  return out;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::FreeAbelian: return "free_abelian";
    case Family::Free: return "free";
    case Family::Cyclic: return "cyclic";
    case Family::DihedralInfinite: return "dihedral_infinite";
    case Family::Heisenberg: return "heisenberg";
    case Family::Product: return "product";
  }
  throw InvariantError("unknown family");
}

struct GroupModel::Ops {
  virtual ~Ops() = default;
  virtual Element identity() const = 0;
  virtual Element apply(const Element& e, int gen_id) const = 0;
  virtual std::string label(const Element& e) const = 0;
  virtual Element from_user(const Code& user) const = 0;
};

namespace {

struct FreeAbelianOps final : GroupModel::Ops {
  int n;
  std::vector<Code> gens;  // positive generator vectors

  FreeAbelianOps(int n_, std::vector<Code> gens_) : n(n_), gens(std::move(gens_)) {}

  Element identity() const override { return Element(Code(n, 0)); }

  Element apply(const Element& e, int gen_id) const override {
    Code c = e.code();
    const Code& g = gens[gen_id / 2];
    std::int64_t sign = (gen_id % 2 == 0) ? 1 : -1;
    for (int i = 0; i < n; ++i) c[i] += sign * g[i];
    return Element(std::move(c));
  }

  std::string label(const Element& e) const override {
    if (n == 1) return std::to_string(e.code()[0]);
    return tuple_label(e.code(), 0, e.code().size());
  }

  Element from_user(const Code& user) const override {
    if (static_cast<int>(user.size()) != n)
      throw PreconditionError("free-abelian element needs " + std::to_string(n) + " coordinates");
    return Element(user);
  }
};

struct FreeOps final : GroupModel::Ops {
  int n;
  explicit FreeOps(int n_) : n(n_) {}

  Element identity() const override { return Element(Code{}); }

  // Letters are +-(i+1); the code is always a reduced word.
  Element apply(const Element& e, int gen_id) const override {
    std::int64_t letter = (gen_id % 2 == 0) ? (gen_id / 2 + 1) : -(gen_id / 2 + 1);
    Code c = e.code();
    if (!c.empty() && c.back() == -letter) {
      c.pop_back();
    } else {
      c.push_back(letter);
    }
    return Element(std::move(c));
  }

  std::string label(const Element& e) const override {
    if (e.code().empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < e.code().size(); ++i) {
      std::int64_t l = e.code()[i];
      int index = static_cast<int>((l > 0 ? l : -l) - 1);
      if (n > 26 && i > 0) out += ".";
      out += letter_label(index, n, l < 0);
    }
    return out;
  }

  Element from_user(const Code& user) const override {
    Element e = identity();
    for (std::int64_t letter : user) {
      if (letter == 0 || letter > n || letter < -n)
        throw PreconditionError("free-group letter out of range: " + std::to_string(letter));
      int gen = static_cast<int>(letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1);
      e = apply(e, gen);
    }
    return e;
  }
};

struct CyclicOps final : GroupModel::Ops {
  std::int64_t m;
  explicit CyclicOps(std::int64_t m_) : m(m_) {}

  Element identity() const override { return Element(Code{0}); }

  Element apply(const Element& e, int gen_id) const override {
    std::int64_t k = e.code()[0] + (gen_id == 0 ? 1 : -1);
    return Element(Code{((k % m) + m) % m});
  }

  std::string label(const Element& e) const override { return std::to_string(e.code()[0]); }

  Element from_user(const Code& user) const override {
    if (user.size() != 1) throw PreconditionError("cyclic element needs one residue");
    return Element(Code{((user[0] % m) + m) % m});
  }
};

// Isometries x -> flag*x + shift of the integer line; code [shift, flag].
struct DihedralOps final : GroupModel::Ops {
  Element identity() const override { return Element(Code{0, 1}); }

  Element apply(const Element& e, int gen_id) const override {
    std::int64_t shift = e.code()[0];
    std::int64_t flag = e.code()[1];
    switch (gen_id) {
      case 0: return Element(Code{shift + flag, flag});   // translation
      case 1: return Element(Code{shift - flag, flag});   // inverse translation
      default: return Element(Code{shift, -flag});        // reflection
    }
  }

  std::string label(const Element& e) const override {
    return "(" + std::to_string(e.code()[0]) + "," + (e.code()[1] > 0 ? "+" : "-") + ")";
  }

  Element from_user(const Code& user) const override {
    if (user.size() != 2 || (user[1] != 1 && user[1] != -1))
      throw PreconditionError("dihedral element needs (shift, flag) with flag +-1");
    return Element(user);
  }
};

// Unitriangular 3x3 integer matrices; code [a, b, c] with
// (a,b,c)*(a',b',c') = (a+a', b+b', c+c'+a*b').
struct HeisenbergOps final : GroupModel::Ops {
  Element identity() const override { return Element(Code{0, 0, 0}); }

  Element apply(const Element& e, int gen_id) const override {
    std::int64_t a = e.code()[0], b = e.code()[1], c = e.code()[2];
    switch (gen_id) {
      case 0: return Element(Code{a + 1, b, c});
      case 1: return Element(Code{a - 1, b, c});
      case 2: return Element(Code{a, b + 1, c + a});
      default: return Element(Code{a, b - 1, c - a});
    }
  }

  std::string label(const Element& e) const override { return tuple_label(e.code(), 0, 3); }

  Element from_user(const Code& user) const override {
    if (user.size() != 3) throw PreconditionError("heisenberg element needs (a, b, c)");
    return Element(user);
  }
};

// Direct product; code [len(left)] ++ left ++ right.
struct ProductOps final : GroupModel::Ops {
  GroupModel left, right;
  ProductOps(GroupModel l, GroupModel r) : left(std::move(l)), right(std::move(r)) {}

  Element encode(const Element& a, const Element& b) const {
    Code c;
    c.reserve(1 + a.code().size() + b.code().size());
    c.push_back(static_cast<std::int64_t>(a.code().size()));
    c.insert(c.end(), a.code().begin(), a.code().end());
    c.insert(c.end(), b.code().begin(), b.code().end());
    return Element(std::move(c));
  }

  std::pair<Element, Element> decode(const Element& e) const {
    const Code& c = e.code();
    auto len = static_cast<std::size_t>(c[0]);
    return {Element(Code(c.begin() + 1, c.begin() + 1 + len)),
            Element(Code(c.begin() + 1 + len, c.end()))};
  }

  Element identity() const override { return encode(left.identity(), right.identity()); }

  Element apply(const Element& e, int gen_id) const override {
    auto [a, b] = decode(e);
    if (gen_id < left.generator_count()) return encode(left.multiply(a, gen_id), b);
    return encode(a, right.multiply(b, gen_id - left.generator_count()));
  }

  std::string label(const Element& e) const override {
    auto [a, b] = decode(e);
    return "(" + left.label(a) + "," + right.label(b) + ")";
  }

  Element from_user(const Code&) const override {
    throw PreconditionError("product elements are built with pair_element");
  }
};

}  // namespace

Element GroupModel::identity() const { return ops_->identity(); }

Element GroupModel::multiply(const Element& e, int generator_id) const {
  if (generator_id < 0 || generator_id >= generator_count())
    throw PreconditionError("unknown generator id " + std::to_string(generator_id));
  return ops_->apply(e, generator_id);
}

std::string GroupModel::label(const Element& e) const { return ops_->label(e); }

Element GroupModel::element(const std::vector<std::int64_t>& user) const {
  return ops_->from_user(user);
}

Element GroupModel::pair_element(const Element& left, const Element& right) const {
  if (family_ != Family::Product) throw PreconditionError("pair_element needs a product model");
  return static_cast<const ProductOps&>(*ops_).encode(left, right);
}

GroupModel GroupModel::free_abelian(int n) {
  if (n < 1) throw PreconditionError("free-abelian rank must be >= 1");
  std::vector<std::vector<std::int64_t>> basis;
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  GroupModel g;
  g.name_ = (n == 1) ? "Z" : "Z^" + std::to_string(n);
  g.family_ = Family::FreeAbelian;
  g.params_ = {n};
  std::vector<std::string> pos, inv;
  for (int i = 0; i < n; ++i) {
    pos.push_back(letter_label(i, n, false));
    inv.push_back(letter_label(i, n, true));
  }
  g.generators_ = paired_symbols(pos, inv);
  g.ops_ = std::make_shared<FreeAbelianOps>(n, std::move(basis));
  return g;
}

GroupModel GroupModel::free_abelian(int n,
                                    std::vector<std::vector<std::int64_t>> positive_generators) {
  if (n < 1) throw PreconditionError("free-abelian rank must be >= 1");
  if (positive_generators.empty()) throw PreconditionError("custom generating set is empty");
  for (const auto& v : positive_generators) {
    if (static_cast<int>(v.size()) != n)
      throw PreconditionError("custom generator has wrong dimension");
    if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; }))
      throw PreconditionError("custom generator is the identity");
  }
  GroupModel g;
  std::string suffix = "{";
  for (std::size_t j = 0; j < positive_generators.size(); ++j) {
    if (j > 0) suffix += ";";
    for (std::size_t i = 0; i < positive_generators[j].size(); ++i) {
      if (i > 0) suffix += ",";
      suffix += std::to_string(positive_generators[j][i]);
    }
  }
  suffix += "}";
  g.name_ = ((n == 1) ? "Z" : "Z^" + std::to_string(n)) + suffix;
  g.family_ = Family::FreeAbelian;
  g.params_ = {n};
  g.custom_ = positive_generators;
  std::vector<std::string> pos, inv;
  for (std::size_t j = 0; j < positive_generators.size(); ++j) {
    pos.push_back("g" + std::to_string(j + 1));
    inv.push_back("G" + std::to_string(j + 1));
  }
  g.generators_ = paired_symbols(pos, inv);
  g.ops_ = std::make_shared<FreeAbelianOps>(n, std::move(positive_generators));
  return g;
}

GroupModel GroupModel::free_group(int n) {
  if (n < 1) throw PreconditionError("free rank must be >= 1");
  GroupModel g;
  g.name_ = "F" + std::to_string(n);
  g.family_ = Family::Free;
  g.params_ = {n};
  std::vector<std::string> pos, inv;
  for (int i = 0; i < n; ++i) {
    pos.push_back(letter_label(i, n, false));
    inv.push_back(letter_label(i, n, true));
  }
  g.generators_ = paired_symbols(pos, inv);
  g.ops_ = std::make_shared<FreeOps>(n);
  return g;
}

GroupModel GroupModel::cyclic(std::int64_t m) {
  if (m < 1) throw PreconditionError("cyclic order must be >= 1");
  GroupModel g;
  g.name_ = "Z/" + std::to_string(m);
  g.family_ = Family::Cyclic;
  g.params_ = {m};
  g.generators_ = paired_symbols({"a"}, {"A"});
  g.ops_ = std::make_shared<CyclicOps>(m);
  return g;
}

GroupModel GroupModel::dihedral_infinite() {
  GroupModel g;
  g.name_ = "Dinf";
  g.family_ = Family::DihedralInfinite;
  g.generators_ = {{0, "r", 1}, {1, "R", 0}, {2, "s", 2}};
  g.ops_ = std::make_shared<DihedralOps>();
  return g;
}

GroupModel GroupModel::heisenberg() {
  GroupModel g;
  g.name_ = "Heis";
  g.family_ = Family::Heisenberg;
  g.generators_ = paired_symbols({"x", "y"}, {"X", "Y"});
  g.ops_ = std::make_shared<HeisenbergOps>();
  return g;
}

GroupModel GroupModel::product(const GroupModel& a, const GroupModel& b) {
  GroupModel g;
  g.name_ = a.name() + " x " + b.name();
  g.family_ = Family::Product;
  g.factors_ = {a, b};
  for (const GeneratorSymbol& s : a.generators())
    g.generators_.push_back({s.id, "1:" + s.label, s.inverse_id});
  int shift = a.generator_count();
  for (const GeneratorSymbol& s : b.generators())
    g.generators_.push_back({s.id + shift, "2:" + s.label, s.inverse_id + shift});
  g.ops_ = std::make_shared<ProductOps>(a, b);
  return g;
}

GroupModel make_builtin(Family family, const std::vector<std::int64_t>& params) {
  auto want = [&](std::size_t k) {
    if (params.size() != k)
      throw PreconditionError(family_name(family) + " expects " + std::to_string(k) +
                              " parameter(s)");
  };
  switch (family) {
    case Family::FreeAbelian:
      want(1);
      return GroupModel::free_abelian(static_cast<int>(params[0]));
    case Family::Free:
      want(1);
      return GroupModel::free_group(static_cast<int>(params[0]));
    case Family::Cyclic:
      want(1);
      return GroupModel::cyclic(params[0]);
    case Family::DihedralInfinite:
      want(0);
      return GroupModel::dihedral_infinite();
    case Family::Heisenberg:
      want(0);
      return GroupModel::heisenberg();
    case Family::Product:
      throw PreconditionError("product models are built from two factors");
  }
  throw InvariantError("unknown family");
}

}  // namespace cgt::groups

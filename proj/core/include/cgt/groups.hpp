#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace cgt::groups {

// One letter of a symmetrized generating set. Symbols come in inverse pairs;
// a symbol may be its own inverse (an involution like the dihedral flip).
struct GeneratorSymbol {
  int id = 0;
  std::string label;
  int inverse_id = 0;
};

// Group element in a canonical normal form encoded as an integer sequence.
// Equality and hashing on the code are exact element equality: each family
// keeps the code canonical (reduced words, normalized residues, ...).
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<std::int64_t> code) : code_(std::move(code)) {}
  const std::vector<std::int64_t>& code() const { return code_; }
  bool operator==(const Element&) const = default;

 private:
  std::vector<std::int64_t> code_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t v : e.code()) {
      auto u = static_cast<std::uint64_t>(v);
      for (int byte = 0; byte < 8; ++byte) {
        h ^= (u >> (8 * byte)) & 0xffu;
        h *= 1099511628211ull;
      }
    }
    return static_cast<std::size_t>(h);
  }
};

enum class Family { FreeAbelian, Free, Cyclic, DihedralInfinite, Heisenberg, Product };

std::string family_name(Family f);

// Immutable word-problem model of a finitely generated group: identity,
// right multiplication by generator symbols, and printable normal forms.
// Values share their implementation and are safe for concurrent reads.
class GroupModel {
 public:
  const std::string& name() const { return name_; }
  const std::vector<GeneratorSymbol>& generators() const { return generators_; }
  int generator_count() const { return static_cast<int>(generators_.size()); }
  Family family() const { return family_; }
  const std::vector<std::int64_t>& params() const { return params_; }
  // Positive generator vectors of a custom free-abelian model (empty when standard).
  const std::vector<std::vector<std::int64_t>>& custom_generators() const { return custom_; }
  // Both factors of a product model (empty otherwise).
  const std::vector<GroupModel>& factors() const { return factors_; }

  Element identity() const;
  Element multiply(const Element& e, int generator_id) const;
  std::string label(const Element& e) const;

  // Builds an element from user coordinates; the shape is family specific
  // (coordinates, signed free-group letters, residue, (k, flag) pair, ...).
  Element element(const std::vector<std::int64_t>& user) const;
  // Element of a product model from elements of the two factors.
  Element pair_element(const Element& left, const Element& right) const;

  static GroupModel free_abelian(int n);
  static GroupModel free_abelian(int n, std::vector<std::vector<std::int64_t>> positive_generators);
  static GroupModel free_group(int n);
  static GroupModel cyclic(std::int64_t m);
  static GroupModel dihedral_infinite();
  static GroupModel heisenberg();
  static GroupModel product(const GroupModel& a, const GroupModel& b);

  struct Ops;

 private:
  GroupModel() = default;

  std::string name_;
  std::vector<GeneratorSymbol> generators_;
  Family family_ = Family::FreeAbelian;
  std::vector<std::int64_t> params_;
  std::vector<std::vector<std::int64_t>> custom_;
  std::vector<GroupModel> factors_;
  std::shared_ptr<const Ops> ops_;
};

// Non-product families with validated parameters; product models are built
// with GroupModel::product.
GroupModel make_builtin(Family family, const std::vector<std::int64_t>& params);

}  // namespace cgt::groups

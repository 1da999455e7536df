#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kloos {

using Elem = int;

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

struct Ideal {
  RingPtr ring;
  std::vector<Elem> elements;  // sorted, always contains zero

  bool contains(Elem x) const;
  long size() const { return static_cast<long>(elements.size()); }
  bool same_set(const Ideal& o) const { return elements == o.elements; }
  bool subset_of(const Ideal& o) const;
  bool is_zero() const { return elements.size() == 1; }
  bool is_full() const;
};

struct CyclicFactor {
  Elem generator;  // additive: element index; multiplicative: unit-list position
  long order;
};

// A finite abelian group written as a direct sum of cyclic factors with
// orders forming a divisibility chain d1, d2 | d1, d3 | d2, ...
struct GroupDecomposition {
  std::vector<CyclicFactor> factors;
  long exponent = 1;
  long size = 1;
  std::vector<std::vector<int>> coords;  // coords[member][factor]
};

struct LocalStructure {
  bool is_local = false;
  std::optional<Ideal> maximal_ideal;
  std::optional<long> residue_field_size;
  std::vector<Ideal> minimal_ideals;  // inclusion-minimal nonzero (principal) ideals
};

struct LocalFactor {
  RingPtr ring;
  Elem idempotent;            // in the parent
  std::vector<Elem> members;  // factor index -> parent element
  std::vector<Elem> project;  // parent element -> factor index of e*x
};

struct Quotient {
  RingPtr base;
  RingPtr ring;
  Ideal kernel;
  std::vector<Elem> project;  // base element -> coset index
  std::vector<Elem> rep;      // coset index -> least base representative
};

// Evaluation rule for the ring's canonical primitive character:
// psi(x) = zeta_den ^ num(x). Constructors that know one install it;
// other rings fall back to exhaustive search.
struct PrimitiveRecipe {
  long den = 0;
  std::function<long(Elem)> num;
  bool has_value() const { return den != 0; }
};

// Extra construction facts some call sites want back.
struct ProductLayout {
  std::vector<RingPtr> children;
  std::vector<long> strides;  // index = sum child_index[k] * strides[k]
};

struct TrivialExtensionLayout {
  RingPtr inner;
  // element index = r * |inner| + lambda, lambda an odometer over the
  // additive factor orders of the inner ring (first factor least significant)
};

class FiniteRing : public std::enable_shared_from_this<FiniteRing> {
public:
  struct Init {
    std::string descriptor;
    int size = 0;
    Elem one = 1;
    std::vector<uint16_t> add;  // size x size, row-major
    std::vector<uint16_t> mul;
    bool zero_ring = false;
    bool full_axiom_check = false;  // exhaustive triple check (table rings)
    PrimitiveRecipe recipe;
    std::optional<ProductLayout> product;
    std::optional<TrivialExtensionLayout> trivial_extension;
  };

  static RingPtr create(Init init);

  int size() const { return size_; }
  Elem zero() const { return 0; }
  Elem one() const { return one_; }
  bool is_zero_ring() const { return zero_ring_; }
  const std::string& descriptor() const { return descriptor_; }

  Elem add(Elem a, Elem b) const { return add_[static_cast<size_t>(a) * size_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[static_cast<size_t>(a) * size_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, long k) const;
  long characteristic() const { return characteristic_; }

  const std::vector<Elem>& units() const { return units_; }
  bool is_unit(Elem a) const { return unit_index_[a] >= 0; }
  Elem inverse(Elem u) const;
  int unit_index(Elem a) const { return unit_index_[a]; }
  const std::vector<Elem>& unit_squares() const { return unit_squares_; }

  const GroupDecomposition& additive_group() const { return additive_; }
  const GroupDecomposition& unit_group() const { return unit_group_; }

  const LocalStructure& local_structure() const;
  const std::vector<LocalFactor>& local_factors() const;

  const PrimitiveRecipe& primitive_recipe() const { return recipe_; }
  const std::optional<ProductLayout>& product_layout() const { return product_; }
  const std::optional<TrivialExtensionLayout>& trivial_extension_layout() const {
    return trivial_extension_;
  }

  // one-shot caches filled by the character layer
  struct FrobeniusCache {
    bool frobenius = false;
    std::vector<long> witness_exponents;  // primitive character, when frobenius
    std::string certificate;
  };
  const FrobeniusCache& frobenius_cache(
      const std::function<FrobeniusCache()>& compute) const;

private:
  FiniteRing() = default;

  std::string descriptor_;
  int size_ = 0;
  Elem one_ = 1;
  bool zero_ring_ = false;
  std::vector<uint16_t> add_, mul_;
  std::vector<Elem> neg_;
  long characteristic_ = 1;
  std::vector<Elem> units_;
  std::vector<int> unit_index_;
  std::vector<Elem> unit_inverse_;  // by unit-list position
  std::vector<Elem> unit_squares_;
  GroupDecomposition additive_;
  GroupDecomposition unit_group_;
  PrimitiveRecipe recipe_;
  std::optional<ProductLayout> product_;
  std::optional<TrivialExtensionLayout> trivial_extension_;

  mutable std::once_flag local_once_;
  mutable LocalStructure local_;
  mutable std::once_flag factors_once_;
  mutable std::vector<LocalFactor> factors_;
  mutable std::once_flag frob_once_;
  mutable FrobeniusCache frob_;

  void validate(bool full_axiom_check) const;
  void freeze();
};

// internal-error reporting for invariants the construction guarantees
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

Ideal zero_ideal(const RingPtr& R);
Ideal full_ideal(const RingPtr& R);
Ideal principal_ideal(const RingPtr& R, Elem a);
Ideal annihilator(const RingPtr& R, const Ideal& I);
Ideal ideal_sum(const Ideal& I, const Ideal& J);
bool is_ideal(const RingPtr& R, const std::vector<Elem>& sorted_elements);

// all principal ideals, deduplicated, sorted by (size, elements)
std::vector<Ideal> principal_ideals(const RingPtr& R);

// coset ring; I = R is rejected unless allow_zero_ring (degenerate branch)
Quotient quotient_ring(const RingPtr& R, const Ideal& I, bool allow_zero_ring = false);

// abelian-group decomposition of (members, op); exposed for tests
GroupDecomposition decompose_abelian(int n, const std::function<int(int, int)>& op,
                                     int identity);

// additive-character helpers on exponent vectors against the additive
// decomposition; shared by ring construction and the character layer
long add_char_exponent(const FiniteRing& R, const std::vector<long>& exps, Elem x);
std::vector<long> add_char_scaled(const FiniteRing& R, const std::vector<long>& exps,
                                  Elem a);

}  // namespace kloos

#include "kloos/ring.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace kloos {

bool Ideal::contains(Elem x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool Ideal::subset_of(const Ideal& o) const {
  return std::includes(o.elements.begin(), o.elements.end(), elements.begin(),
                       elements.end());
}

bool Ideal::is_full() const { return size() == ring->size(); }

Elem FiniteRing::pow(Elem a, long k) const {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  Elem acc = one_;
  for (long i = 0; i < k; ++i) acc = mul(acc, a);
  return acc;
}

Elem FiniteRing::inverse(Elem u) const {
  int idx = unit_index_[u];
  if (idx < 0) throw std::domain_error("inverse: element is not a unit");
  return unit_inverse_[idx];
}

void FiniteRing::validate(bool full_axiom_check) const {
  if (size_ < 1 || size_ > 65535) throw std::invalid_argument("ring size out of range");
  size_t n = static_cast<size_t>(size_);
  if (add_.size() != n * n || mul_.size() != n * n)
    throw std::invalid_argument("ring tables have wrong shape");
  for (uint16_t v : add_)
    if (v >= n) throw std::invalid_argument("addition table entry out of range");
  for (uint16_t v : mul_)
    if (v >= n) throw std::invalid_argument("multiplication table entry out of range");
  if (one_ < 0 || one_ >= size_) throw std::invalid_argument("identity index out of range");
  if (!zero_ring_ && one_ == 0) throw std::invalid_argument("ring must have one != zero");

  for (Elem a = 0; a < size_; ++a) {
    if (add(0, a) != a || add(a, 0) != a)
      throw std::invalid_argument("zero is not an additive identity");
    if (mul(one_, a) != a || mul(a, one_) != a)
      throw std::invalid_argument("one is not a multiplicative identity");
    bool has_neg = false;
    for (Elem b = 0; b < size_; ++b)
      if (add(a, b) == 0) {
        has_neg = true;
        break;
      }
    if (!has_neg) throw std::invalid_argument("element without additive inverse");
    for (Elem b = 0; b < size_; ++b) {
      if (add(a, b) != add(b, a)) throw std::invalid_argument("addition not commutative");
      if (mul(a, b) != mul(b, a))
        throw std::invalid_argument("multiplication not commutative");
    }
  }

  auto check_triple = [&](Elem a, Elem b, Elem c) {
    if (add(add(a, b), c) != add(a, add(b, c)))
      throw std::invalid_argument("addition not associative");
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw std::invalid_argument("multiplication not associative");
    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
      throw std::invalid_argument("multiplication not distributive");
  };
  if (full_axiom_check) {
    for (Elem a = 0; a < size_; ++a)
      for (Elem b = 0; b < size_; ++b)
        for (Elem c = 0; c < size_; ++c) check_triple(a, b, c);
  } else {
    std::mt19937 rng(0xC0FFEE);
    std::uniform_int_distribution<Elem> pick(0, size_ - 1);
    int samples = std::min(500, size_ * size_);
    for (int i = 0; i < samples; ++i) check_triple(pick(rng), pick(rng), pick(rng));
  }
}

void FiniteRing::freeze() {
  neg_.assign(size_, -1);
  for (Elem a = 0; a < size_; ++a)
    for (Elem b = 0; b < size_; ++b)
      if (add(a, b) == 0) {
        neg_[a] = b;
        break;
      }

  characteristic_ = 1;
  Elem x = one_;
  while (x != 0) {
    x = add(x, one_);
    ++characteristic_;
  }
  if (zero_ring_) characteristic_ = 1;

  unit_index_.assign(size_, -1);
  for (Elem a = 0; a < size_; ++a) {
    for (Elem b = 0; b < size_; ++b)
      if (mul(a, b) == one_) {
        unit_index_[a] = static_cast<int>(units_.size());
        units_.push_back(a);
        unit_inverse_.push_back(b);
        break;
      }
  }

  std::set<Elem> squares;
  for (Elem u : units_) squares.insert(mul(u, u));
  unit_squares_.assign(squares.begin(), squares.end());

  additive_ = decompose_abelian(
      size_, [this](int a, int b) { return add(a, b); }, 0);
  int nu = static_cast<int>(units_.size());
  unit_group_ = decompose_abelian(
      nu,
      [this](int a, int b) { return unit_index_[mul(units_[a], units_[b])]; },
      unit_index_[one_]);
}

RingPtr FiniteRing::create(Init init) {
  std::shared_ptr<FiniteRing> ring(new FiniteRing());
  ring->descriptor_ = std::move(init.descriptor);
  ring->size_ = init.size;
  ring->one_ = init.one;
  ring->zero_ring_ = init.zero_ring;
  ring->add_ = std::move(init.add);
  ring->mul_ = std::move(init.mul);
  ring->recipe_ = std::move(init.recipe);
  ring->product_ = std::move(init.product);
  ring->trivial_extension_ = std::move(init.trivial_extension);
  ring->validate(init.full_axiom_check);
  ring->freeze();
  return ring;
}

// ---- abelian group decomposition ------------------------------------------

namespace {

long member_order(int x, const std::function<int(int, int)>& op, int identity) {
  long ord = 1;
  int y = x;
  while (y != identity) {
    y = op(y, x);
    ++ord;
  }
  return ord;
}

// subgroup generated by K (a subgroup, as sorted vector) and one extra x:
// the union of cosets K + j*x. Returns empty if the span meets cyc outside
// the identity.
std::vector<int> span_avoiding(const std::vector<int>& K, int x,
                               const std::function<int(int, int)>& op, int identity,
                               const std::vector<char>& in_cyc) {
  std::set<int> members(K.begin(), K.end());
  int jx = x;
  while (!members.count(jx)) {
    for (int k : K) {
      int m = op(k, jx);
      if (m != identity && in_cyc[m]) return {};
      members.insert(m);
    }
    jx = op(jx, x);
  }
  return std::vector<int>(members.begin(), members.end());
}

// factors of the subgroup given by `members`, invariant-factor order
std::vector<CyclicFactor> split_factors(std::vector<int> members,
                                        const std::function<int(int, int)>& op,
                                        int identity, int ambient_size) {
  if (members.size() <= 1) return {};
  long best = 0;
  int gen = -1;
  for (int m : members) {
    long ord = member_order(m, op, identity);
    if (ord > best) {
      best = ord;
      gen = m;
    }
  }

  std::vector<char> in_cyc(ambient_size, 0);
  in_cyc[identity] = 1;
  int y = gen;
  while (y != identity) {
    in_cyc[y] = 1;
    y = op(y, gen);
  }

  if (best == static_cast<long>(members.size()))
    return {CyclicFactor{gen, best}};

  // greedy complement: a maximal-order element always generates a direct
  // summand, so some enlargement keeping trivial intersection must exist
  std::vector<int> K{identity};
  while (static_cast<long>(K.size()) * best != static_cast<long>(members.size())) {
    bool grew = false;
    for (int x : members) {
      if (std::binary_search(K.begin(), K.end(), x)) continue;
      std::vector<int> trial = span_avoiding(K, x, op, identity, in_cyc);
      if (!trial.empty()) {
        K = std::move(trial);
        grew = true;
        break;
      }
    }
    if (!grew) throw internal_error("abelian decomposition: complement search stuck");
  }

  std::vector<CyclicFactor> rest = split_factors(std::move(K), op, identity, ambient_size);
  std::vector<CyclicFactor> out{CyclicFactor{gen, best}};
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace

GroupDecomposition decompose_abelian(int n, const std::function<int(int, int)>& op,
                                     int identity) {
  GroupDecomposition g;
  g.size = n;
  std::vector<int> members(n);
  for (int i = 0; i < n; ++i) members[i] = i;
  g.factors = split_factors(std::move(members), op, identity, n);
  g.exponent = g.factors.empty() ? 1 : g.factors.front().order;
  for (size_t i = 0; i + 1 < g.factors.size(); ++i)
    if (g.factors[i].order % g.factors[i + 1].order != 0)
      throw internal_error("abelian decomposition: orders not a divisibility chain");

  long total = 1;
  for (const auto& f : g.factors) total *= f.order;
  if (total != n) throw internal_error("abelian decomposition: size mismatch");

  // coordinates by odometer over generator multiples
  size_t r = g.factors.size();
  std::vector<std::vector<int>> multiples(r);
  for (size_t i = 0; i < r; ++i) {
    multiples[i].resize(g.factors[i].order);
    int m = identity;
    for (long c = 0; c < g.factors[i].order; ++c) {
      multiples[i][c] = m;
      m = op(m, g.factors[i].generator);
    }
  }
  g.coords.assign(n, {});
  std::vector<int> digit(r, 0);
  std::vector<char> seen(n, 0);
  for (long count = 0; count < total; ++count) {
    int m = identity;
    for (size_t i = 0; i < r; ++i) m = op(m, multiples[i][digit[i]]);
    if (seen[m]) throw internal_error("abelian decomposition: generators not independent");
    seen[m] = 1;
    g.coords[m] = digit;
    for (size_t i = 0; i < r; ++i) {
      if (++digit[i] < g.factors[i].order) break;
      digit[i] = 0;
    }
  }
  return g;
}

// ---- character helpers on exponent vectors --------------------------------

long add_char_exponent(const FiniteRing& R, const std::vector<long>& exps, Elem x) {
  const GroupDecomposition& g = R.additive_group();
  if (exps.size() != g.factors.size())
    throw std::invalid_argument("character exponent vector has wrong length");
  long N = g.exponent;
  long t = 0;
  const std::vector<int>& c = g.coords[x];
  for (size_t i = 0; i < exps.size(); ++i) {
    long d = g.factors[i].order;
    long e = ((exps[i] % d) + d) % d;
    t = (t + e * (N / d) % N * c[i]) % N;
  }
  return t;
}

std::vector<long> add_char_scaled(const FiniteRing& R, const std::vector<long>& exps,
                                  Elem a) {
  const GroupDecomposition& g = R.additive_group();
  long N = g.exponent;
  std::vector<long> out(g.factors.size());
  for (size_t j = 0; j < g.factors.size(); ++j) {
    long d = g.factors[j].order;
    long t = add_char_exponent(R, exps, R.mul(a, g.factors[j].generator));
    if (t * d % N != 0)
      throw internal_error("character scaling: value order does not divide factor order");
    out[j] = t * d / N % d;
  }
  return out;
}

// ---- ideals ----------------------------------------------------------------

Ideal zero_ideal(const RingPtr& R) { return Ideal{R, {0}}; }

Ideal full_ideal(const RingPtr& R) {
  std::vector<Elem> all(R->size());
  for (int i = 0; i < R->size(); ++i) all[i] = i;
  return Ideal{R, std::move(all)};
}

Ideal principal_ideal(const RingPtr& R, Elem a) {
  std::set<Elem> s;
  for (Elem r = 0; r < R->size(); ++r) s.insert(R->mul(r, a));
  return Ideal{R, std::vector<Elem>(s.begin(), s.end())};
}

Ideal annihilator(const RingPtr& R, const Ideal& I) {
  std::vector<Elem> out;
  for (Elem r = 0; r < R->size(); ++r) {
    bool kills = true;
    for (Elem x : I.elements)
      if (R->mul(r, x) != 0) {
        kills = false;
        break;
      }
    if (kills) out.push_back(r);
  }
  return Ideal{R, std::move(out)};
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  if (I.ring.get() != J.ring.get())
    throw std::invalid_argument("ideal_sum: ideals of different rings");
  std::set<Elem> s;
  for (Elem a : I.elements)
    for (Elem b : J.elements) s.insert(I.ring->add(a, b));
  return Ideal{I.ring, std::vector<Elem>(s.begin(), s.end())};
}

bool is_ideal(const RingPtr& R, const std::vector<Elem>& sorted_elements) {
  auto in = [&](Elem x) {
    return std::binary_search(sorted_elements.begin(), sorted_elements.end(), x);
  };
  if (!in(0)) return false;
  for (Elem a : sorted_elements) {
    for (Elem b : sorted_elements)
      if (!in(R->add(a, b))) return false;
    for (Elem r = 0; r < R->size(); ++r)
      if (!in(R->mul(r, a))) return false;
  }
  return true;
}

std::vector<Ideal> principal_ideals(const RingPtr& R) {
  std::set<std::vector<Elem>> seen;
  for (Elem a = 0; a < R->size(); ++a) seen.insert(principal_ideal(R, a).elements);
  std::vector<Ideal> out;
  for (const auto& els : seen) out.push_back(Ideal{R, els});
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements < b.elements;
  });
  return out;
}

// ---- local structure -------------------------------------------------------

const LocalStructure& FiniteRing::local_structure() const {
  std::call_once(local_once_, [this] {
    if (zero_ring_) throw internal_error("local_structure on the zero ring");
    RingPtr self = shared_from_this();
    std::vector<Elem> non_units;
    for (Elem a = 0; a < size_; ++a)
      if (!is_unit(a)) non_units.push_back(a);
    bool closed = true;
    for (Elem a : non_units) {
      for (Elem b : non_units)
        if (is_unit(add(a, b))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    local_.is_local = closed;
    if (closed) {
      if (!is_ideal(self, non_units))
        throw internal_error("non-unit set closed under addition but not an ideal");
      local_.maximal_ideal = Ideal{self, non_units};
      local_.residue_field_size = size_ / static_cast<long>(non_units.size());
    }
    std::vector<Ideal> principals = principal_ideals(self);
    for (const Ideal& I : principals) {
      if (I.is_zero()) continue;
      bool minimal = true;
      for (const Ideal& J : principals) {
        if (J.is_zero() || J.same_set(I)) continue;
        if (J.subset_of(I)) {
          minimal = false;
          break;
        }
      }
      if (minimal) local_.minimal_ideals.push_back(I);
    }
  });
  return local_;
}

// ---- idempotent decomposition ----------------------------------------------

const std::vector<LocalFactor>& FiniteRing::local_factors() const {
  std::call_once(factors_once_, [this] {
    if (zero_ring_) throw internal_error("local_factors on the zero ring");
    RingPtr self = shared_from_this();
    std::vector<Elem> idem;
    for (Elem e = 0; e < size_; ++e)
      if (mul(e, e) == e) idem.push_back(e);

    std::vector<Elem> primitive;
    for (Elem e : idem) {
      if (e == 0) continue;
      bool prim = true;
      for (Elem f : idem)
        if (f != 0 && f != e && mul(f, e) == f) {
          prim = false;
          break;
        }
      if (prim) primitive.push_back(e);
    }

    Elem total = 0;
    for (Elem e : primitive) total = add(total, e);
    if (total != one_)
      throw internal_error("primitive idempotents do not sum to one");
    for (size_t i = 0; i < primitive.size(); ++i)
      for (size_t j = i + 1; j < primitive.size(); ++j)
        if (mul(primitive[i], primitive[j]) != 0)
          throw internal_error("primitive idempotents not orthogonal");

    if (primitive.size() == 1) {
      LocalFactor f;
      f.ring = self;
      f.idempotent = one_;
      f.members.resize(size_);
      f.project.resize(size_);
      for (Elem x = 0; x < size_; ++x) f.members[x] = f.project[x] = x;
      factors_.push_back(std::move(f));
      return;
    }

    for (Elem e : primitive) {
      std::set<Elem> mem;
      for (Elem r = 0; r < size_; ++r) mem.insert(mul(e, r));
      std::vector<Elem> members(mem.begin(), mem.end());
      int m = static_cast<int>(members.size());
      std::vector<int> pos(size_, -1);
      for (int i = 0; i < m; ++i) pos[members[i]] = i;
      std::vector<uint16_t> addt(static_cast<size_t>(m) * m), mult(static_cast<size_t>(m) * m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          addt[static_cast<size_t>(i) * m + j] =
              static_cast<uint16_t>(pos[add(members[i], members[j])]);
          mult[static_cast<size_t>(i) * m + j] =
              static_cast<uint16_t>(pos[mul(members[i], members[j])]);
        }
      Init init;
      init.descriptor = descriptor_ + "@" + std::to_string(e);
      init.size = m;
      init.one = pos[e];
      init.add = std::move(addt);
      init.mul = std::move(mult);
      LocalFactor f;
      f.ring = FiniteRing::create(std::move(init));
      f.idempotent = e;
      f.members = std::move(members);
      f.project.resize(size_);
      for (Elem x = 0; x < size_; ++x) f.project[x] = pos[mul(e, x)];
      factors_.push_back(std::move(f));
    }
    long prod = 1;
    for (const auto& f : factors_) prod *= f.ring->size();
    if (prod != size_) throw internal_error("local factor sizes do not multiply up");
    for (const auto& f : factors_)
      if (!f.ring->local_structure().is_local)
        throw internal_error("idempotent factor is not local");
  });
  return factors_;
}

const FiniteRing::FrobeniusCache& FiniteRing::frobenius_cache(
    const std::function<FrobeniusCache()>& compute) const {
  std::call_once(frob_once_, [&] { frob_ = compute(); });
  return frob_;
}

// ---- quotients --------------------------------------------------------------

Quotient quotient_ring(const RingPtr& R, const Ideal& I, bool allow_zero_ring) {
  if (I.ring.get() != R.get())
    throw std::invalid_argument("quotient_ring: ideal belongs to another ring");
  if (!is_ideal(R, I.elements))
    throw std::invalid_argument("quotient_ring: set is not an ideal");

  if (I.is_full()) {
    if (!allow_zero_ring)
      throw std::domain_error("quotient by the full ideal is the zero ring");
    FiniteRing::Init init;
    init.descriptor = R->descriptor() + "/(1)";
    init.size = 1;
    init.one = 0;
    init.zero_ring = true;
    init.add = {0};
    init.mul = {0};
    Quotient q;
    q.base = R;
    q.ring = FiniteRing::create(std::move(init));
    q.kernel = I;
    q.project.assign(R->size(), 0);
    q.rep = {0};
    return q;
  }

  int n = R->size();
  std::vector<Elem> proj(n, -1);
  std::vector<Elem> rep;
  for (Elem x = 0; x < n; ++x) {
    if (proj[x] >= 0) continue;
    Elem id = static_cast<Elem>(rep.size());
    rep.push_back(x);
    for (Elem i : I.elements) proj[R->add(x, i)] = id;
  }
  int m = static_cast<int>(rep.size());
  std::vector<uint16_t> addt(static_cast<size_t>(m) * m), mult(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      addt[static_cast<size_t>(i) * m + j] =
          static_cast<uint16_t>(proj[R->add(rep[i], rep[j])]);
      mult[static_cast<size_t>(i) * m + j] =
          static_cast<uint16_t>(proj[R->mul(rep[i], rep[j])]);
    }

  std::string kernel_desc = "{";
  for (size_t i = 0; i < I.elements.size() && i < 8; ++i) {
    if (i) kernel_desc += ",";
    kernel_desc += std::to_string(I.elements[i]);
  }
  if (I.elements.size() > 8) kernel_desc += ",...";
  kernel_desc += "}";

  FiniteRing::Init init;
  init.descriptor = R->descriptor() + "/" + kernel_desc;
  init.size = m;
  init.one = proj[R->one()];
  init.add = std::move(addt);
  init.mul = std::move(mult);
  Quotient q;
  q.base = R;
  q.ring = FiniteRing::create(std::move(init));
  q.kernel = I;
  q.project = std::move(proj);
  q.rep = std::move(rep);
  return q;
}

}  // namespace kloos

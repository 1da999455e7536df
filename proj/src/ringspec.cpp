#include "kloos/ringspec.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "kloos/cyclotomic.hpp"

namespace kloos {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

void check_size(long n, long max_size, const std::string& what) {
  if (n < 1) throw std::invalid_argument(what + ": empty ring");
  if (n > max_size)
    throw std::invalid_argument(what + ": size " + std::to_string(n) +
                                " exceeds cap " + std::to_string(max_size));
}

std::vector<uint16_t> table_of(int n, const std::function<int(int, int)>& f) {
  std::vector<uint16_t> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(f(a, b));
  return t;
}

// ---- polynomial helpers over F_p, dense vectors, constant term first -------

std::vector<long> poly_mul_mod(const std::vector<long>& a, const std::vector<long>& b,
                               const std::vector<long>& f, long p) {
  std::vector<long> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  size_t k = f.size() - 1;  // f monic of degree k
  for (size_t d = prod.size(); d-- > k;) {
    long c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (size_t i = 0; i < k; ++i)
      prod[d - k + i] = ((prod[d - k + i] - c * f[i]) % p + p) % p;
  }
  prod.resize(k);
  return prod;
}

bool poly_divides(const std::vector<long>& d, std::vector<long> num, long p) {
  // d monic; returns true iff d | num over F_p
  long k = static_cast<long>(d.size()) - 1;
  for (long deg = static_cast<long>(num.size()) - 1; deg >= k; --deg) {
    long c = num[deg];
    if (c == 0) continue;
    for (long i = 0; i <= k; ++i)
      num[deg - k + i] = ((num[deg - k + i] - c * d[i]) % p + p) % p;
  }
  return std::all_of(num.begin(), num.end(), [](long c) { return c == 0; });
}

bool poly_irreducible(const std::vector<long>& f, long p) {
  long k = static_cast<long>(f.size()) - 1;
  if (k < 1) return false;
  if (k == 1) return true;
  // trial division by every monic polynomial of degree 1..k/2
  for (long deg = 1; deg <= k / 2; ++deg) {
    long count = 1;
    for (long i = 0; i < deg; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      std::vector<long> d(deg + 1);
      long rest = idx;
      for (long i = 0; i < deg; ++i) {
        d[i] = rest % p;
        rest /= p;
      }
      d[deg] = 1;
      if (poly_divides(d, f, p)) return false;
    }
  }
  return true;
}

// least monic irreducible of degree k, coefficient tuples compared with the
// constant term last (leading side varies first)
std::vector<long> least_irreducible(long p, long k) {
  long count = 1;
  for (long i = 0; i < k; ++i) count *= p;
  for (long idx = 0; idx < count; ++idx) {
    std::vector<long> f(k + 1);
    f[k] = 1;
    // decode idx in base p, most significant digit = c_{k-1}
    long rest = idx;
    for (long i = 0; i < k; ++i) {
      f[i] = rest % p;
      rest /= p;
    }
    if (poly_irreducible(f, p)) return f;
  }
  throw internal_error("no irreducible polynomial found");
}

std::string join_longs(const std::vector<long>& v, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

RingPtr make_zmod(long n, long max_size) {
  if (n < 2) throw std::invalid_argument("Z/n requires n >= 2");
  check_size(n, max_size, "Z/" + std::to_string(n));
  FiniteRing::Init init;
  init.descriptor = "Z/" + std::to_string(n);
  init.size = static_cast<int>(n);
  init.one = 1;
  init.add = table_of(n, [n](int a, int b) { return static_cast<int>((a + b) % n); });
  init.mul = table_of(n, [n](int a, int b) {
    return static_cast<int>(static_cast<long>(a) * b % n);
  });
  init.recipe.den = n;
  init.recipe.num = [](Elem x) { return static_cast<long>(x); };
  return FiniteRing::create(std::move(init));
}

namespace {

RingPtr make_poly_ring(long p, const std::vector<long>& f, std::string descriptor,
                       long max_size) {
  if (!is_prime(p)) throw std::invalid_argument("polynomial quotient: p must be prime");
  long k = static_cast<long>(f.size()) - 1;
  if (k < 1) throw std::invalid_argument("polynomial quotient: degree must be >= 1");
  if (f[k] != 1) throw std::invalid_argument("polynomial quotient: f must be monic");
  for (long c : f)
    if (c < 0 || c >= p)
      throw std::invalid_argument("polynomial quotient: coefficients must lie in [0,p)");
  long n = 1;
  for (long i = 0; i < k; ++i) {
    n *= p;
    if (n > max_size) check_size(n, max_size, descriptor);
  }
  check_size(n, max_size, descriptor);

  auto decode = [&](int idx) {
    std::vector<long> c(k);
    long rest = idx;
    for (long i = 0; i < k; ++i) {
      c[i] = rest % p;
      rest /= p;
    }
    return c;
  };
  auto encode = [&](const std::vector<long>& c) {
    long idx = 0;
    for (long i = k - 1; i >= 0; --i) idx = idx * p + c[i];
    return static_cast<int>(idx);
  };

  FiniteRing::Init init;
  init.descriptor = std::move(descriptor);
  init.size = static_cast<int>(n);
  init.one = 1;
  init.add = table_of(static_cast<int>(n), [&](int a, int b) {
    std::vector<long> ca = decode(a), cb = decode(b);
    for (long i = 0; i < k; ++i) ca[i] = (ca[i] + cb[i]) % p;
    return encode(ca);
  });
  init.mul = table_of(static_cast<int>(n), [&](int a, int b) {
    return encode(poly_mul_mod(decode(a), decode(b), f, p));
  });
  // the coefficient of the highest-degree term composed with e_p
  long top = k - 1;
  long modulus = p;
  long div = 1;
  for (long i = 0; i < top; ++i) div *= p;
  init.recipe.den = modulus;
  init.recipe.num = [div, modulus](Elem x) { return (x / div) % modulus; };
  return FiniteRing::create(std::move(init));
}

}  // namespace

RingPtr make_gf(long p, long k, long max_size) {
  if (!is_prime(p)) throw std::invalid_argument("GF: p must be prime");
  if (k < 1) throw std::invalid_argument("GF: k must be >= 1");
  std::vector<long> f = least_irreducible(p, k);
  std::string desc = k == 1 ? "GF(" + std::to_string(p) + ")"
                            : "GF(" + std::to_string(p) + "," + std::to_string(k) + ")";
  return make_poly_ring(p, f, std::move(desc), max_size);
}

RingPtr make_polyquot(long p, const std::vector<long>& coeffs, long max_size) {
  std::string desc = "Fp[" + std::to_string(p) + ";" + join_longs(coeffs, ",") + "]";
  return make_poly_ring(p, coeffs, std::move(desc), max_size);
}

RingPtr make_product(const std::vector<RingPtr>& children, long max_size) {
  if (children.size() < 2)
    throw std::invalid_argument("product ring requires at least two factors");
  long n = 1;
  for (const auto& c : children) {
    n *= c->size();
    if (n > max_size) break;
  }
  std::string desc;
  for (size_t i = 0; i < children.size(); ++i) {
    if (i) desc += " x ";
    desc += children[i]->descriptor();
  }
  check_size(n, max_size, desc);

  // index = sum child_index[k] * stride[k], first factor most significant
  size_t m = children.size();
  std::vector<long> strides(m);
  long s = 1;
  for (size_t i = m; i-- > 0;) {
    strides[i] = s;
    s *= children[i]->size();
  }
  auto componentwise = [&](bool multiply) {
    return table_of(static_cast<int>(n), [&, multiply](int a, int b) {
      long out = 0;
      for (size_t i = 0; i < m; ++i) {
        int ai = static_cast<int>(a / strides[i] % children[i]->size());
        int bi = static_cast<int>(b / strides[i] % children[i]->size());
        int ci = multiply ? children[i]->mul(ai, bi) : children[i]->add(ai, bi);
        out += ci * strides[i];
      }
      return static_cast<int>(out);
    });
  };

  FiniteRing::Init init;
  init.descriptor = desc;
  init.size = static_cast<int>(n);
  long one = 0;
  for (size_t i = 0; i < m; ++i) one += children[i]->one() * strides[i];
  init.one = static_cast<int>(one);
  init.add = componentwise(false);
  init.mul = componentwise(true);
  init.product = ProductLayout{children, strides};

  bool all_recipes = std::all_of(children.begin(), children.end(), [](const RingPtr& c) {
    return c->primitive_recipe().has_value();
  });
  if (all_recipes) {
    long den = 1;
    for (const auto& c : children) den = lcm_order(den, c->primitive_recipe().den);
    auto kids = children;
    auto str = strides;
    init.recipe.den = den;
    init.recipe.num = [kids, str, den](Elem x) {
      long t = 0;
      for (size_t i = 0; i < kids.size(); ++i) {
        const PrimitiveRecipe& r = kids[i]->primitive_recipe();
        long xi = x / str[i] % kids[i]->size();
        t = (t + r.num(static_cast<Elem>(xi)) % r.den * (den / r.den)) % den;
      }
      return t;
    };
  }
  return FiniteRing::create(std::move(init));
}

RingPtr make_trivial_extension(const RingPtr& inner, long max_size) {
  long rn = inner->size();
  long n = rn * rn;
  std::string desc = "triv(" + inner->descriptor() + ")";
  check_size(n, max_size, desc);

  // element = r * |R| + lambda; lambda is an odometer over the additive
  // factor orders of R (first factor least significant), encoding a
  // character of (R,+) as its exponent vector
  const GroupDecomposition& g = inner->additive_group();
  size_t nf = g.factors.size();
  auto decode_lambda = [&](long lam) {
    std::vector<long> e(nf);
    for (size_t i = 0; i < nf; ++i) {
      e[i] = lam % g.factors[i].order;
      lam /= g.factors[i].order;
    }
    return e;
  };
  auto encode_lambda = [&](const std::vector<long>& e) {
    long lam = 0;
    for (size_t i = nf; i-- > 0;) lam = lam * g.factors[i].order + e[i] % g.factors[i].order;
    return lam;
  };

  auto addf = [&](int a, int b) {
    long ra = a / rn, rb = b / rn;
    std::vector<long> ea = decode_lambda(a % rn), eb = decode_lambda(b % rn);
    for (size_t i = 0; i < nf; ++i) ea[i] = (ea[i] + eb[i]) % g.factors[i].order;
    return static_cast<int>(inner->add(static_cast<Elem>(ra), static_cast<Elem>(rb)) * rn +
                            encode_lambda(ea));
  };
  auto mulf = [&](int a, int b) {
    long ra = a / rn, rb = b / rn;
    std::vector<long> scaled_b = add_char_scaled(*inner, decode_lambda(b % rn),
                                                 static_cast<Elem>(ra));
    std::vector<long> scaled_a = add_char_scaled(*inner, decode_lambda(a % rn),
                                                 static_cast<Elem>(rb));
    for (size_t i = 0; i < nf; ++i)
      scaled_b[i] = (scaled_b[i] + scaled_a[i]) % g.factors[i].order;
    return static_cast<int>(inner->mul(static_cast<Elem>(ra), static_cast<Elem>(rb)) * rn +
                            encode_lambda(scaled_b));
  };

  FiniteRing::Init init;
  init.descriptor = desc;
  init.size = static_cast<int>(n);
  init.one = static_cast<int>(inner->one() * rn);  // (1, trivial character)
  init.add = table_of(static_cast<int>(n), addf);
  init.mul = table_of(static_cast<int>(n), mulf);
  init.trivial_extension = TrivialExtensionLayout{inner};
  // (r, lambda) -> lambda(1)
  RingPtr cap = inner;
  long den = g.exponent;
  init.recipe.den = den;
  init.recipe.num = [cap, rn](Elem x) {
    const GroupDecomposition& gd = cap->additive_group();
    std::vector<long> e(gd.factors.size());
    long lam = x % rn;
    for (size_t i = 0; i < gd.factors.size(); ++i) {
      e[i] = lam % gd.factors[i].order;
      lam /= gd.factors[i].order;
    }
    return add_char_exponent(*cap, e, cap->one());
  };
  return FiniteRing::create(std::move(init));
}

RingPtr make_square_zero(long p, long m, long max_size) {
  if (!is_prime(p)) throw std::invalid_argument("sqz: p must be prime");
  if (m < 1) throw std::invalid_argument("sqz: m must be >= 1");
  long n = p;
  std::string desc = "sqz(" + std::to_string(p) + "," + std::to_string(m) + ")";
  for (long i = 0; i < m; ++i) {
    n *= p;
    if (n > max_size) check_size(n, max_size, desc);
  }
  check_size(n, max_size, desc);

  // element = a + p * (v_0 + p v_1 + ...): the field part a and V coordinates
  auto addf = [&](int x, int y) {
    long out = 0, s = 1;
    for (long i = 0; i <= m; ++i) {
      out += (x / s % p + y / s % p) % p * s;
      s *= p;
    }
    return static_cast<int>(out);
  };
  auto mulf = [&](int x, int y) {
    long a = x % p, b = y % p;
    long out = a * b % p, s = p;
    for (long i = 0; i < m; ++i) {
      long vx = x / s % p, vy = y / s % p;
      out += (a * vy + b * vx) % p * s;  // V*V = 0
      s *= p;
    }
    return static_cast<int>(out);
  };

  FiniteRing::Init init;
  init.descriptor = desc;
  init.size = static_cast<int>(n);
  init.one = 1;
  init.add = table_of(static_cast<int>(n), addf);
  init.mul = table_of(static_cast<int>(n), mulf);
  return FiniteRing::create(std::move(init));
}

RingPtr make_table_ring_from_json(const std::string& json_text,
                                  const std::string& descriptor, long max_size) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("table ring: bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("size") || !doc.contains("add") ||
      !doc.contains("mul") || !doc.contains("one"))
    throw std::invalid_argument("table ring: expected {size, add, mul, one}");
  long n = doc["size"].get<long>();
  check_size(n, max_size, "table ring");
  auto load = [&](const char* key) {
    const auto& rows = doc[key];
    if (!rows.is_array() || rows.size() != static_cast<size_t>(n))
      throw std::invalid_argument("table ring: bad table shape");
    std::vector<uint16_t> t(static_cast<size_t>(n) * n);
    for (long i = 0; i < n; ++i) {
      const auto& row = rows[i];
      if (!row.is_array() || row.size() != static_cast<size_t>(n))
        throw std::invalid_argument("table ring: bad table shape");
      for (long j = 0; j < n; ++j) {
        long v = row[j].get<long>();
        if (v < 0 || v >= n) throw std::invalid_argument("table ring: entry out of range");
        t[static_cast<size_t>(i) * n + j] = static_cast<uint16_t>(v);
      }
    }
    return t;
  };
  FiniteRing::Init init;
  init.descriptor = descriptor;
  init.size = static_cast<int>(n);
  init.one = doc["one"].get<int>();
  init.add = load("add");
  init.mul = load("mul");
  init.full_axiom_check = true;
  return FiniteRing::create(std::move(init));
}

RingPtr make_table_ring_from_file(const std::string& path, long max_size) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("table ring: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return make_table_ring_from_json(buf.str(), "table:" + path, max_size);
}

// ---- parser -----------------------------------------------------------------

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  long max_size;

  explicit Parser(const std::string& text, long cap) : s(text), max_size(cap) {}

  void skip_ws() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }

  bool literal(const std::string& lit) {
    if (s.compare(pos, lit.size(), lit) == 0) {
      pos += lit.size();
      return true;
    }
    return false;
  }

  long number() {
    size_t start = pos;
    bool neg = pos < s.size() && s[pos] == '-';
    if (neg) ++pos;
    if (pos >= s.size() || !isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError(start, "expected a number");
    long v = 0;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 100000000) throw ParseError(start, "number too large");
      ++pos;
    }
    return neg ? -v : v;
  }

  void expect(char c) {
    if (pos >= s.size() || s[pos] != c)
      throw ParseError(pos, std::string("expected '") + c + "'");
    ++pos;
  }

  RingPtr atom() {
    skip_ws();
    size_t start = pos;
    if (literal("Z/")) return make_zmod(number(), max_size);
    if (literal("GF(")) {
      long p = number();
      skip_ws();
      if (literal(",")) {
        long k = number();
        expect(')');
        return make_gf(p, k, max_size);
      }
      expect(')');
      // prime power q = p^k
      long q = p;
      for (long base = 2; base * base <= q; ++base) {
        if (q % base) continue;
        long k = 0, rest = q;
        while (rest % base == 0) {
          rest /= base;
          ++k;
        }
        if (rest != 1) throw ParseError(start, "GF(q): q must be a prime power");
        return make_gf(base, k, max_size);
      }
      return make_gf(q, 1, max_size);  // q prime
    }
    if (literal("Fp[")) {
      long p = number();
      expect(';');
      std::vector<long> coeffs{number()};
      while (pos < s.size() && s[pos] == ',') {
        ++pos;
        coeffs.push_back(number());
      }
      expect(']');
      return make_polyquot(p, coeffs, max_size);
    }
    if (literal("triv(")) {
      RingPtr inner = spec();
      expect(')');
      return make_trivial_extension(inner, max_size);
    }
    if (literal("sqz(")) {
      long p = number();
      expect(',');
      long m = number();
      expect(')');
      return make_square_zero(p, m, max_size);
    }
    if (literal("table:")) {
      size_t end = s.find(" x ", pos);
      std::string path = s.substr(pos, end == std::string::npos ? std::string::npos
                                                                : end - pos);
      while (!path.empty() && path.back() == ' ') path.pop_back();
      if (path.empty()) throw ParseError(pos, "expected a file path after table:");
      pos += path.size();
      return make_table_ring_from_file(path, max_size);
    }
    throw ParseError(start, "expected a ring atom (Z/, GF(, Fp[, triv(, sqz(, table:)");
  }

  RingPtr spec() {
    std::vector<RingPtr> parts{atom()};
    while (true) {
      size_t save = pos;
      skip_ws();
      // separator is " x "
      if (pos > save && literal("x") && pos < s.size() && s[pos] == ' ') {
        parts.push_back(atom());
        continue;
      }
      pos = save;
      break;
    }
    if (parts.size() == 1) return parts[0];
    return make_product(parts, max_size);
  }
};

}  // namespace

RingPtr make_ring(const std::string& spec_text, long max_size) {
  Parser p(spec_text, max_size);
  p.skip_ws();
  try {
    RingPtr r = p.spec();
    p.skip_ws();
    if (p.pos != spec_text.size())
      throw ParseError(p.pos, "unexpected trailing input");
    return r;
  } catch (const std::invalid_argument& e) {
    throw ParseError(p.pos, e.what());
  }
}

}  // namespace kloos

#pragma once

#include <map>

#include <json.hpp>

#include "kloos/sums.hpp"

namespace kloos::checks {

enum class Status { pass, fail, not_applicable };

const char* status_name(Status s);

struct Witness {
  std::string point;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::string check_id;
  std::string ring;
  std::map<std::string, std::string> bindings;
  Status status = Status::pass;
  std::string expected;  // representative exact value
  std::string actual;
  long points = 0;  // parameter points evaluated
  std::vector<Witness> witnesses;
  std::string note;

  nlohmann::json to_json() const;
};

struct CheckEntry {
  std::string id;
  std::string statement;
};

// every identity the suite knows how to verify, ordered by id
const std::vector<CheckEntry>& registry();

using Bindings = std::map<std::string, std::string>;

struct RunOptions {
  // fault injection for the harness self-test: the first Kloosterman-family
  // evaluation gets one summand rotated by a root of unity
  bool perturb_one_summand = false;
};

CheckReport run_check(const std::string& id, const RingPtr& R, const Bindings& bindings = {},
                      const RunOptions& options = {});

// all registry entries (or the listed ids) on one ring, in id order
std::vector<CheckReport> run_suite(const RingPtr& R, const std::vector<std::string>& ids = {},
                                   const Bindings& bindings = {});

bool any_failure(const std::vector<CheckReport>& reports);

// "trivial" | "quadratic" | "index:<k>"
MultiplicativeCharacter resolve_twist(const RingPtr& R, const std::string& selector);

// moments of the twisted Kloosterman family. absolute=true uses |K|^2 powers,
// so k must be even; domain is the whole ring or the units.
Cyc moment(const RingPtr& R, const MultiplicativeCharacter& tau, int k, bool unitary,
           bool absolute);

// sum over units of chi(a) K_tau(a)^k (k in {1,2}), or chi(a) |K_tau(a)|^2
// when absolute; local rings only
Cyc weighted_moment(const RingPtr& R, const MultiplicativeCharacter& tau,
                    const MultiplicativeCharacter& chi, int k, bool absolute);

struct SelbergKuznetsovSides {
  Cyc lhs;
  Cyc rhs;
  struct Term {
    std::vector<Elem> ideal;  // the principal ideal (d), as an element set
    long annihilator_size;
    Cyc value;  // annihilator_size * quotient Kloosterman sum
  };
  std::vector<Term> terms;
};

// both sides of the quotient expansion of K(a.psi, b.psi) over a Frobenius
// ring: the direct sum, and the sum over principal ideals containing (a),(b)
// of |ann(d)| times a Kloosterman sum over R/ann(d)
SelbergKuznetsovSides selberg_kuznetsov_sides(const RingPtr& R, Elem a, Elem b);

}  // namespace kloos::checks

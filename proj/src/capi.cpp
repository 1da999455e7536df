#include "kloosum.h"

#include <cstring>
#include <limits>

#include <json.hpp>

#include "kloos/checks.hpp"
#include "kloos/ringspec.hpp"

using nlohmann::json;

struct kls_ring {
  kloos::RingPtr ring;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int fail(int status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const kloos::ParseError& e) {
    return fail(KLS_PARSE_ERROR, e.what());
  } catch (const kloos::internal_error& e) {
    return fail(KLS_INTERNAL_ERROR, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(KLS_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(KLS_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(KLS_INTERNAL_ERROR, e.what());
  }
}

json cyc_json(const kloos::Cyc& v) {
  json coeffs = json::array();
  for (const kloos::BigInt& c : v.coeffs()) {
    if (c > std::numeric_limits<long long>::max() || c < std::numeric_limits<long long>::min())
      throw std::overflow_error("coefficient exceeds the JSON integer range");
    coeffs.push_back(c.convert_to<long long>());
  }
  return {{"order", v.order()}, {"coeffs", coeffs}};
}

json sum_json(const char* kind, const std::string& ring_desc, json params,
              const kloos::Cyc& v) {
  std::complex<double> z = v.to_complex();
  return {{"kind", kind},
          {"ring", ring_desc},
          {"params", std::move(params)},
          {"value", cyc_json(v)},
          {"approx", {z.real(), z.imag()}}};
}

int emit(char** out, const json& doc) {
  *out = dup_string(doc.dump());
  return KLS_OK;
}

const kloos::RingPtr& deref(const kls_ring* ring) {
  if (!ring || !ring->ring) throw std::invalid_argument("null ring handle");
  return ring->ring;
}

kloos::MultiplicativeCharacter character_arg(const kloos::RingPtr& R, const char* sel,
                                             const char* what) {
  if (!sel) throw std::invalid_argument(std::string(what) + ": null selector");
  return kloos::checks::resolve_twist(R, sel);
}

}  // namespace

extern "C" {

int kls_ring_create(const char* spec, long max_size, kls_ring** out) {
  return guarded([&] {
    if (!spec || !out) return fail(KLS_INVALID_ARGUMENT, "null argument");
    long cap = max_size > 0 ? max_size : kloos::kDefaultMaxRingSize;
    kloos::RingPtr R = kloos::make_ring(spec, cap);
    *out = new kls_ring{std::move(R)};
    return static_cast<int>(KLS_OK);
  });
}

void kls_ring_free(kls_ring* ring) { delete ring; }

int kls_ring_info(const kls_ring* ring, char** json_out) {
  return guarded([&] {
    const kloos::RingPtr& R = deref(ring);
    json factor_sizes = json::array();
    for (const auto& f : R->local_factors()) factor_sizes.push_back(f.ring->size());
    json minimal = json::array();
    for (const auto& I : R->local_structure().minimal_ideals) minimal.push_back(I.elements);
    kloos::FrobeniusInfo frob = kloos::frobenius_info(R);
    json psi = nullptr;
    if (frob.witness.has_value())
      psi = {{"kind", "additive"},
             {"ring", R->descriptor()},
             {"exponents", frob.witness->exponents()}};
    json doc = {{"descriptor", R->descriptor()},
                {"size", R->size()},
                {"characteristic", R->characteristic()},
                {"units", R->units().size()},
                {"frobenius", frob.frobenius},
                {"local_factor_sizes", factor_sizes},
                {"minimal_ideals", minimal},
                {"canonical_primitive_character", psi}};
    if (!frob.frobenius) doc["certificate"] = frob.certificate;
    return emit(json_out, doc);
  });
}

int kls_sum_kloosterman(const kls_ring* ring, long a, char** json_out) {
  return guarded([&] {
    const kloos::RingPtr& R = deref(ring);
    if (a < 0 || a >= R->size()) throw std::invalid_argument("element index out of range");
    kloos::Cyc v = kloos::sums::kloosterman_param(R, static_cast<kloos::Elem>(a));
    return emit(json_out, sum_json("kloosterman", R->descriptor(), {{"a", a}}, v));
  });
}

int kls_sum_twisted(const kls_ring* ring, const char* twist, long a, char** json_out) {
  return guarded([&] {
    const kloos::RingPtr& R = deref(ring);
    if (a < 0 || a >= R->size()) throw std::invalid_argument("element index out of range");
    auto tau = character_arg(R, twist, "twist");
    kloos::Cyc v = kloos::sums::twisted_kloosterman(R, tau, static_cast<kloos::Elem>(a));
    return emit(json_out, sum_json("twisted_kloosterman", R->descriptor(),
                                   {{"a", a}, {"twist", twist}}, v));
  });
}

int kls_sum_gauss(const kls_ring* ring, const char* chi, char** json_out) {
  return guarded([&] {
    const kloos::RingPtr& R = deref(ring);
    auto c = character_arg(R, chi, "chi");
    kloos::Cyc v = kloos::sums::gauss(R, c);
    return emit(json_out, sum_json("gauss", R->descriptor(), {{"chi", chi}}, v));
  });
}

int kls_sum_jacobi(const kls_ring* ring, const char* chi, const char* eta, long a,
                   char** json_out) {
  return guarded([&] {
    const kloos::RingPtr& R = deref(ring);
    auto c = character_arg(R, chi, "chi");
    auto e = character_arg(R, eta, "eta");
    kloos::Elem target = a < 0 ? R->one() : static_cast<kloos::Elem>(a);
    if (target >= R->size()) throw std::invalid_argument("element index out of range");
    kloos::Cyc v = kloos::sums::jacobi_generalized(target, c, e);
    return emit(json_out, sum_json("jacobi", R->descriptor(),
                                   {{"chi", chi}, {"eta", eta}, {"a", target}}, v));
  });
}

int kls_sum_classical(long m, long n, long q, char** json_out) {
  return guarded([&] {
    kloos::Cyc v = kloos::sums::classical_kloosterman(m, n, q);
    return emit(json_out, sum_json("classical_kloosterman", "Z/" + std::to_string(q),
                                   {{"m", m}, {"n", n}, {"q", q}}, v));
  });
}

int kls_list_checks(char** json_out) {
  return guarded([&] {
    json doc = json::array();
    for (const auto& e : kloos::checks::registry())
      doc.push_back({{"id", e.id}, {"statement", e.statement}});
    return emit(json_out, doc);
  });
}

int kls_verify(const kls_ring* ring, const char* check_id, const char* twist,
               char** report_jsonl_out, long* failures_out) {
  return guarded([&] {
    const kloos::RingPtr& R = deref(ring);
    kloos::checks::Bindings bindings;
    if (twist) bindings["twist"] = twist;
    std::vector<std::string> ids;
    if (check_id) ids.push_back(check_id);
    auto reports = kloos::checks::run_suite(R, ids, bindings);
    std::string lines;
    long failures = 0;
    for (const auto& r : reports) {
      lines += r.to_json().dump();
      lines += "\n";
      if (r.status == kloos::checks::Status::fail) ++failures;
    }
    if (failures_out) *failures_out = failures;
    *report_jsonl_out = dup_string(lines);
    return static_cast<int>(KLS_OK);
  });
}

const char* kls_last_error(void) { return g_last_error.c_str(); }

void kls_string_free(char* s) { std::free(s); }

}  // extern "C"

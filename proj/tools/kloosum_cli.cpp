// Command-line front end; all computation goes through the C API.
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kloosum.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

int exit_code_for(int status) {
  switch (status) {
    case KLS_OK: return kExitOk;
    case KLS_PARSE_ERROR:
    case KLS_INVALID_ARGUMENT: return kExitUsage;
    case KLS_CHECK_FAILED: return kExitCheckFailure;
    default: return kExitInternal;
  }
}

struct RingHandle {
  kls_ring* ring = nullptr;
  ~RingHandle() { kls_ring_free(ring); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { kls_string_free(s); }
};

int report_error(int status) {
  std::cerr << "error: " << kls_last_error() << "\n";
  return exit_code_for(status);
}

std::string render_value(const json& value) {
  // short human form of {"order", "coeffs"}
  long order = value["order"].get<long>();
  const auto& coeffs = value["coeffs"];
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    long long c = coeffs[k].get<long long>();
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    long long mag = c < 0 ? -c : c;
    if (k == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << "z" << order;
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

int print_sum(int status, const OwnedString& result, bool as_json) {
  if (status != KLS_OK) return report_error(status);
  json doc = json::parse(result.s);
  if (as_json) {
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "exact:  " << render_value(doc["value"]) << "  (order "
              << doc["value"]["order"].get<long>() << ")\n";
    std::cout << "approx: " << doc["approx"][0].get<double>() << " + "
              << doc["approx"][1].get<double>() << "i\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character sums over finite commutative rings"};
  app.require_subcommand(1);

  std::string ring_spec;
  long max_size = 0;
  bool as_json = false;

  auto add_ring_opts = [&](CLI::App* cmd, bool need_ring = true) {
    auto* opt = cmd->add_option("--ring", ring_spec, "ring expression, e.g. \"Z/12\"");
    if (need_ring) opt->required();
    cmd->add_option("--max-size", max_size, "table materialization cap (default 4096)");
    cmd->add_flag("--json", as_json, "machine-readable output");
  };

  auto* ring_cmd = app.add_subcommand("ring", "ring structure");
  auto* info_cmd = ring_cmd->add_subcommand("info", "size, units, Frobenius verdict");
  add_ring_opts(info_cmd);

  auto* sum_cmd = app.add_subcommand("sum", "evaluate one character sum");
  long arg_a = 0, arg_m = 0, arg_n = 0, arg_q = 0, arg_ja = -1;
  std::string arg_twist = "trivial", arg_chi = "trivial", arg_eta = "trivial";

  auto* kl = sum_cmd->add_subcommand("kloosterman", "K(a) with the canonical character");
  add_ring_opts(kl);
  kl->add_option("--a", arg_a, "parameter a (element index)")->required();

  auto* tw = sum_cmd->add_subcommand("twisted", "K_tau(a)");
  add_ring_opts(tw);
  tw->add_option("--a", arg_a, "parameter a (element index)")->required();
  tw->add_option("--twist", arg_twist, "trivial | quadratic | index:<k>");

  auto* ga = sum_cmd->add_subcommand("gauss", "G(chi)");
  add_ring_opts(ga);
  ga->add_option("--chi", arg_chi, "trivial | quadratic | index:<k>")->required();

  auto* ja = sum_cmd->add_subcommand("jacobi", "J(chi, eta) or J_a");
  add_ring_opts(ja);
  ja->add_option("--chi", arg_chi)->required();
  ja->add_option("--eta", arg_eta)->required();
  ja->add_option("--a", arg_ja, "generalized target (default: 1)");

  auto* cl = sum_cmd->add_subcommand("classical", "S(m, n; q) over Z/q");
  cl->add_option("--m", arg_m)->required();
  cl->add_option("--n", arg_n)->required();
  cl->add_option("--q", arg_q)->required();
  cl->add_flag("--json", as_json);

  auto* verify_cmd = app.add_subcommand("verify", "run identity checks");
  add_ring_opts(verify_cmd);
  std::string check_id;
  bool run_all = false;
  std::string twist_sel;
  verify_cmd->add_option("--check", check_id, "a registry id, e.g. C15");
  verify_cmd->add_flag("--all", run_all, "run the whole registry");
  verify_cmd->add_option("--twist", twist_sel, "pin the twist: trivial | quadratic | index:<k>");

  auto* list_cmd = app.add_subcommand("list-checks", "registry ids and statements");
  list_cmd->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  auto make_ring = [&](RingHandle& h) { return kls_ring_create(ring_spec.c_str(), max_size, &h.ring); };

  if (info_cmd->parsed()) {
    RingHandle h;
    int rc = make_ring(h);
    if (rc != KLS_OK) return report_error(rc);
    OwnedString out;
    rc = kls_ring_info(h.ring, &out.s);
    if (rc != KLS_OK) return report_error(rc);
    json doc = json::parse(out.s);
    if (as_json) {
      std::cout << doc.dump() << "\n";
      return kExitOk;
    }
    std::cout << "ring:            " << doc["descriptor"].get<std::string>() << "\n";
    std::cout << "size:            " << doc["size"].get<long>() << "\n";
    std::cout << "characteristic:  " << doc["characteristic"].get<long>() << "\n";
    std::cout << "units:           " << doc["units"].get<long>() << "\n";
    std::cout << "local factors:   " << doc["local_factor_sizes"].dump() << "\n";
    std::cout << "Frobenius:       " << (doc["frobenius"].get<bool>() ? "true" : "false") << "\n";
    std::cout << "minimal ideals:  " << doc["minimal_ideals"].dump() << "\n";
    if (doc["canonical_primitive_character"].is_null())
      std::cout << "canonical psi:   none (" << doc.value("certificate", std::string{}) << ")\n";
    else
      std::cout << "canonical psi:   exponents "
                << doc["canonical_primitive_character"]["exponents"].dump() << "\n";
    return kExitOk;
  }

  if (kl->parsed() || tw->parsed() || ga->parsed() || ja->parsed()) {
    RingHandle h;
    int rc = make_ring(h);
    if (rc != KLS_OK) return report_error(rc);
    OwnedString out;
    if (kl->parsed()) rc = kls_sum_kloosterman(h.ring, arg_a, &out.s);
    if (tw->parsed()) rc = kls_sum_twisted(h.ring, arg_twist.c_str(), arg_a, &out.s);
    if (ga->parsed()) rc = kls_sum_gauss(h.ring, arg_chi.c_str(), &out.s);
    if (ja->parsed())
      rc = kls_sum_jacobi(h.ring, arg_chi.c_str(), arg_eta.c_str(), arg_ja, &out.s);
    return print_sum(rc, out, as_json);
  }

  if (cl->parsed()) {
    OwnedString out;
    int rc = kls_sum_classical(arg_m, arg_n, arg_q, &out.s);
    return print_sum(rc, out, as_json);
  }

  if (verify_cmd->parsed()) {
    if (check_id.empty() && !run_all) {
      std::cerr << "error: verify needs --check <id> or --all\n";
      return kExitUsage;
    }
    RingHandle h;
    int rc = make_ring(h);
    if (rc != KLS_OK) return report_error(rc);
    OwnedString out;
    long failures = 0;
    rc = kls_verify(h.ring, run_all ? nullptr : check_id.c_str(),
                    twist_sel.empty() ? nullptr : twist_sel.c_str(), &out.s, &failures);
    if (rc != KLS_OK) return report_error(rc);
    std::istringstream lines(out.s);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      if (as_json) {
        std::cout << line << "\n";
        continue;
      }
      json r = json::parse(line);
      std::cout << r["check"].get<std::string>() << "  " << r["status"].get<std::string>()
                << "  points=" << r["points"].get<long>();
      std::string status = r["status"].get<std::string>();
      if (status == "pass")
        std::cout << "  value=" << r["actual"].get<std::string>();
      if (status == "fail")
        std::cout << "  expected=" << r["expected"].get<std::string>()
                  << "  actual=" << r["actual"].get<std::string>();
      std::string note = r["note"].get<std::string>();
      if (!note.empty()) std::cout << "  (" << note << ")";
      std::cout << "\n";
    }
    return failures > 0 ? kExitCheckFailure : kExitOk;
  }

  if (list_cmd->parsed()) {
    OwnedString out;
    int rc = kls_list_checks(&out.s);
    if (rc != KLS_OK) return report_error(rc);
    json doc = json::parse(out.s);
    if (as_json) {
      std::cout << doc.dump() << "\n";
      return kExitOk;
    }
    for (const auto& e : doc)
      std::cout << e["id"].get<std::string>() << "  " << e["statement"].get<std::string>()
                << "\n";
    return kExitOk;
  }

  return kExitUsage;
}

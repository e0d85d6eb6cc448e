#pragma once

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "polyzero/complex_roots.hpp"
#include "polyzero/families.hpp"
#include "polyzero/real_roots.hpp"
#include "polyzero/report.hpp"
#include "polyzero/theorems.hpp"

namespace polyzero {

inline constexpr const char* kToolVersion = "1.0.0";

enum class Command { gen, roots, verify, report };
enum class OutputFormat { json, csv };

// Exit codes: 0 all pass, 1 fail, 2 partial/non-convergence, 64 bad config.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitPartial = 2;
inline constexpr int kExitConfig = 64;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::verify;
  std::optional<FamilySpec> family;
  int k_lo = 0;  // 0 means "use family.k"
  int k_hi = 0;
  Rat tolerance = make_rat(1, int_pow(10, 12));
  std::uint64_t seed = kDefaultSeed;
  OutputFormat format = OutputFormat::json;
  std::string output_path;  // empty writes to stdout
  std::string claims = "all";
  int jobs = 1;
  bool plot = false;
  int gseq_count = 0;  // > 0: gen emits the order-k sequence instead of a polynomial
  std::vector<std::string> inputs;
  std::optional<int> kmax_override;
  std::optional<int> l_override;
};

namespace detail {

inline void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

inline nlohmann::ordered_json config_echo(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["tool"] = "polyzero";
  j["version"] = kToolVersion;
  switch (c.command) {
    case Command::gen: j["command"] = "gen"; break;
    case Command::roots: j["command"] = "roots"; break;
    case Command::verify: j["command"] = "verify"; break;
    case Command::report: j["command"] = "report"; break;
  }
  if (c.family) j["family"] = spec_to_json(*c.family);
  if (c.k_lo || c.k_hi) {
    j["k_lo"] = c.k_lo;
    j["k_hi"] = c.k_hi;
  }
  j["tolerance"] = to_frac_string(c.tolerance);
  j["seed"] = c.seed;
  j["format"] = c.format == OutputFormat::json ? "json" : "csv";
  if (c.command == Command::verify) {
    j["claims"] = c.claims;
    j["jobs"] = c.jobs;
    if (c.kmax_override) j["kmax"] = *c.kmax_override;
    if (c.l_override) j["l"] = *c.l_override;
  }
  if (!c.inputs.empty()) j["inputs"] = c.inputs;
  return j;
}

inline std::vector<std::string> split_csv_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline std::string csv_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

inline int run_gen(const RunConfig& c) {
  if (c.gseq_count > 0) {
    const int order = c.family ? c.family->k : (c.k_lo ? c.k_lo : 0);
    if (order < 2) throw ConfigError("gen --gseq requires --k >= 2");
    const BigIntSequence seq = g_sequence(order, c.gseq_count);
    std::string out;
    for (const Int& t : seq.terms) {
      out += t.get_str();
      out += '\n';
    }
    detail::write_text(c.output_path, out);
    return kExitPass;
  }
  if (!c.family) throw ConfigError("gen requires --family");
  c.family->validate();
  nlohmann::ordered_json j;
  j["family"] = spec_to_json(*c.family);
  j["coeffs"] = poly_to_json(make_family(*c.family))["coeffs"];
  detail::write_text(c.output_path, j.dump(2) + "\n");
  return kExitPass;
}

inline int run_roots(const RunConfig& c) {
  if (!c.family) throw ConfigError("roots requires --family");
  int lo = c.k_lo ? c.k_lo : c.family->k;
  int hi = c.k_hi ? c.k_hi : lo;
  if (lo > hi || lo < 1) throw ConfigError("roots: empty or invalid k range");
  if (sgn(c.tolerance) <= 0) throw ConfigError("roots: tolerance must be positive");

  struct InstanceOut {
    FamilySpec spec;
    std::vector<RootRecord> real_roots;
    ComplexRootSet complex_roots;
  };
  std::vector<InstanceOut> results;
  std::vector<std::string> unconverged;
  for (int k = lo; k <= hi; ++k) {
    FamilySpec spec{c.family->family, k, c.family->l};
    spec.validate();
    const ExactPoly p = make_family(spec);
    InstanceOut inst{spec, {}, {}};
    if (!p.is_zero() && p.degree() >= 1) {
      IsolationContext ctx(p);
      for (const auto& iv : ctx.isolate_all()) {
        RefinableRoot r(ctx.squarefree(), iv);
        inst.real_roots.push_back(r.record(c.tolerance, spec));
      }
      inst.complex_roots = all_roots(p, 400, 1e-12, c.seed);
      if (!inst.complex_roots.converged)
        unconverged.push_back("family=" + std::string(1, family_letter(spec.family)) +
                              " k=" + std::to_string(k) + " l=" + std::to_string(spec.l));
    }
    results.push_back(std::move(inst));
  }

  if (c.format == OutputFormat::csv) {
    std::string out;
    if (c.plot) {
      out = "family,k,l,dominant_root,abs_gap_to_2\n";
      for (auto& inst : results) {
        IsolationContext ctx(make_family(inst.spec));
        RefinableRoot dom = unique_positive_root(ctx);
        dom.refine_to(c.tolerance);
        const Rat mid = dom.midpoint();
        out += std::string(1, family_letter(inst.spec.family)) + "," +
               std::to_string(inst.spec.k) + "," + std::to_string(inst.spec.l) + "," +
               to_decimal_string(mid, 18) + "," + to_decimal_string(rat_abs(Rat(mid - 2)), 18) +
               "\n";
      }
    } else {
      out = "family,k,l,re,im,modulus,residual\n";
      for (const auto& inst : results) {
        for (std::size_t i = 0; i < inst.complex_roots.roots.size(); ++i) {
          const auto& z = inst.complex_roots.roots[i];
          out += std::string(1, family_letter(inst.spec.family)) + "," +
                 std::to_string(inst.spec.k) + "," + std::to_string(inst.spec.l) + "," +
                 detail::csv_double(z.real()) + "," + detail::csv_double(z.imag()) + "," +
                 detail::csv_double(std::abs(z)) + "," +
                 detail::csv_double(inst.complex_roots.residuals[i]) + "\n";
        }
      }
    }
    detail::write_text(c.output_path, out);
  } else {
    nlohmann::ordered_json j;
    j["config"] = detail::config_echo(c);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& inst : results) {
      nlohmann::ordered_json e;
      e["spec"] = spec_to_json(inst.spec);
      nlohmann::ordered_json rr = nlohmann::ordered_json::array();
      for (const auto& rec : inst.real_roots) rr.push_back(root_record_to_json(rec));
      e["real_roots"] = std::move(rr);
      nlohmann::ordered_json cr = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < inst.complex_roots.roots.size(); ++i) {
        cr.push_back(nlohmann::ordered_json{
            {"re", inst.complex_roots.roots[i].real()},
            {"im", inst.complex_roots.roots[i].imag()},
            {"modulus", std::abs(inst.complex_roots.roots[i])},
            {"residual", inst.complex_roots.residuals[i]}});
      }
      e["complex_roots"] = std::move(cr);
      e["converged"] = inst.complex_roots.converged;
      e["iterations"] = inst.complex_roots.iterations;
      arr.push_back(std::move(e));
    }
    j["results"] = std::move(arr);
    detail::write_text(c.output_path, j.dump(2) + "\n");
  }
  if (!unconverged.empty()) {
    for (const auto& u : unconverged)
      std::cerr << "non-convergence: " << u << "\n";
    return kExitPartial;
  }
  return kExitPass;
}

inline VerifySettings settings_for(const RunConfig& c, const std::string& group) {
  VerifySettings s;
  s.seed = c.seed;
  if (c.l_override) {
    if (group == "thm1") s.thm1_l = {*c.l_override};
    if (group == "thm3") s.thm3_l = {*c.l_override};
  }
  if (c.kmax_override) {
    const int m = *c.kmax_override;
    if (group == "table1") s.table1_k_max = m;
    else if (group == "thm1") s.thm1_j_max = m;
    else if (group == "thm2") s.thm2_k_max = m;
    else if (group == "bounds") s.bound_k_max = m;
    else if (group == "thm3") s.thm3_k_max = m;
    else if (group == "complex") {
      s.complex_f_k_max = m;
      s.complex_i_k_max = m;
      s.complex_max_degree = m;
    }
  }
  return s;
}

inline int run_verify(const RunConfig& c) {
  if (c.claims.empty()) throw ConfigError("verify requires --claims (a selector or \"all\")");
  if (c.jobs < 1) throw ConfigError("verify: --jobs must be >= 1");
  std::vector<std::string> groups =
      c.claims == "all" ? claim_groups() : detail::split_csv_list(c.claims);
  for (const auto& g : groups) {
    bool known = false;
    for (const auto& k : claim_groups()) known = known || k == g;
    if (!known) throw ConfigError("unknown claim group: " + g);
  }

  // Fan out per (group, l) task; merge is order-independent because every
  // task emits distinct (claim_id, params).
  struct Task {
    std::string group;
    VerifySettings settings;
  };
  std::vector<Task> tasks;
  for (const auto& g : groups) {
    VerifySettings s = settings_for(c, g);
    if (g == "thm1") {
      for (int l : s.thm1_l) {
        VerifySettings one = s;
        one.thm1_l = {l};
        tasks.push_back({g, one});
      }
    } else if (g == "thm3") {
      for (int l : s.thm3_l) {
        VerifySettings one = s;
        one.thm3_l = {l};
        tasks.push_back({g, one});
      }
    } else {
      tasks.push_back({g, s});
    }
  }
  // The thm3 group runs the diagonal claim once, not per l: keep it on the
  // first thm3 task only.
  bool seen_thm3 = false;
  for (auto& t : tasks) {
    if (t.group == "thm3") {
      if (seen_thm3) t.group = "thm3-no-diagonal";
      seen_thm3 = true;
    }
  }

  std::vector<std::vector<VerificationReport>> results(tasks.size());
  std::vector<std::string> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        const auto& t = tasks[i];
        if (t.group == "thm3-no-diagonal") {
          results[i] = verify_general_integral_theorem(t.settings.thm3_l[0], t.settings.thm3_k_max);
        } else {
          results[i] = run_claim_group(t.group, t.settings);
        }
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const int nthreads = std::min<std::size_t>(static_cast<std::size_t>(c.jobs), tasks.size());
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (!e.empty()) throw ConfigError(e);

  std::vector<VerificationReport> reports;
  for (auto& v : results)
    for (auto& r : v) reports.push_back(std::move(r));
  sort_reports(reports);

  int npass = 0, npartial = 0, nfail = 0;
  for (const auto& r : reports) {
    if (r.status == ClaimStatus::pass) ++npass;
    else if (r.status == ClaimStatus::partial) ++npartial;
    else ++nfail;
  }

  if (c.format == OutputFormat::csv) {
    std::string out = "claim_id,status,discovered_threshold,notes\n";
    for (const auto& r : reports) {
      std::string notes = r.notes;
      for (auto& ch : notes)
        if (ch == ',') ch = ';';
      out += r.claim_id + "," + to_string(r.status) + "," +
             (r.discovered_threshold ? std::to_string(*r.discovered_threshold) : "") + "," +
             notes + "\n";
    }
    detail::write_text(c.output_path, out);
  } else {
    nlohmann::ordered_json j;
    j["config"] = detail::config_echo(c);
    j["summary"] = nlohmann::ordered_json{{"pass", npass}, {"partial", npartial}, {"fail", nfail}};
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    j["reports"] = std::move(arr);
    detail::write_text(c.output_path, j.dump(2) + "\n");
  }
  if (nfail > 0) return kExitFail;
  if (npartial > 0) return kExitPartial;
  return kExitPass;
}

inline int run_report(const RunConfig& c) {
  if (c.inputs.empty()) throw ConfigError("report requires at least one input file");
  std::vector<VerificationReport> reports;
  for (const auto& path : c.inputs) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open input file: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    const nlohmann::json& arr = j.is_array() ? j : j.at("reports");
    for (const auto& r : arr) reports.push_back(report_from_json(r));
  }
  sort_reports(reports);
  // Exact duplicates (same claim, params, content) collapse to one entry.
  std::vector<VerificationReport> merged;
  std::string last;
  for (auto& r : reports) {
    const std::string key = report_to_json(r).dump();
    if (key != last) merged.push_back(std::move(r));
    last = key;
  }
  int npass = 0, npartial = 0, nfail = 0;
  for (const auto& r : merged) {
    if (r.status == ClaimStatus::pass) ++npass;
    else if (r.status == ClaimStatus::partial) ++npartial;
    else ++nfail;
  }
  nlohmann::ordered_json j;
  j["config"] = detail::config_echo(c);
  j["summary"] = nlohmann::ordered_json{{"pass", npass}, {"partial", npartial}, {"fail", nfail}};
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : merged) arr.push_back(report_to_json(r));
  j["reports"] = std::move(arr);
  detail::write_text(c.output_path, j.dump(2) + "\n");
  if (nfail > 0) return kExitFail;
  if (npartial > 0) return kExitPartial;
  return kExitPass;
}

/// Executes one configured command; returns the process exit code.
inline int run(const RunConfig& c) {
  try {
    switch (c.command) {
      case Command::gen: return run_gen(c);
      case Command::roots: return run_roots(c);
      case Command::verify: return run_verify(c);
      case Command::report: return run_report(c);
    }
    throw ConfigError("unknown command");
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace polyzero

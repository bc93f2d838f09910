// hgs: count and enumerate Hopf-Galois structures via regular embeddings
// into holomorphs.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage/spec error,
// 3 capability bound exceeded.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hgs/enumerate.hpp"
#include "hgs/error.hpp"
#include "hgs/formulas.hpp"
#include "hgs/group_spec.hpp"
#include "hgs/holomorph.hpp"
#include "hgs/ring.hpp"
#include "hgs/verify.hpp"

namespace {

using nlohmann::json;

constexpr char const* kToolVersion = "0.1.0";
constexpr int kSchemaVersion = 1;

struct GlobalFlags {
  bool as_json = false;
  bool as_csv = false;
  bool no_cache = false;
  bool timings = false;
  int threads = 0;  // 0 = machine parallelism
};

int effective_threads(GlobalFlags const& f) {
  if (f.threads > 0) return f.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::filesystem::path cache_path() {
  if (char const* env = std::getenv("HGS_CACHE")) return env;
  std::filesystem::path base;
  if (char const* xdg = std::getenv("XDG_DATA_HOME"))
    base = xdg;
  else if (char const* home = std::getenv("HOME"))
    base = std::filesystem::path(home) / ".local" / "share";
  else
    base = ".";
  return base / "hgs" / "cache.jsonl";
}

struct CacheKey {
  std::uint64_t gamma_hash;
  std::uint64_t g_hash;
  std::string method;
};

// JSON-lines cache; corrupt lines are skipped with a warning on stderr.
std::optional<long> cache_lookup(CacheKey const& key) {
  std::ifstream in(cache_path());
  if (!in) return std::nullopt;
  std::string line;
  std::optional<long> hit;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json rec = json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.contains("gamma_hash") ||
        !rec.contains("g_hash") || !rec.contains("method") ||
        !rec.contains("count") || !rec.contains("tool_version")) {
      std::cerr << "warning: skipping corrupt cache line " << lineno << "\n";
      continue;
    }
    if (rec["tool_version"] != kToolVersion) continue;
    if (rec["gamma_hash"] == key.gamma_hash && rec["g_hash"] == key.g_hash &&
        rec["method"] == key.method)
      hit = rec["count"].get<long>();
  }
  return hit;
}

void cache_store(CacheKey const& key, long count) {
  auto path = cache_path();
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::app);
  if (!out) return;  // cache is best-effort
  json rec = {{"gamma_hash", key.gamma_hash},
              {"g_hash", key.g_hash},
              {"method", key.method},
              {"count", count},
              {"tool_version", kToolVersion}};
  out << rec.dump() << "\n";
}

void emit_record(GlobalFlags const& f, std::string const& gamma,
                 std::string const& g, long count, std::string const& method,
                 long wall_ms, bool* csv_header_done) {
  if (f.as_json) {
    json rec = {{"schema_version", kSchemaVersion}, {"gamma", gamma},
                {"g", g},                           {"count", count},
                {"method", method},                 {"wall_ms", wall_ms},
                {"tool_version", kToolVersion}};
    std::cout << rec.dump() << "\n";
  } else if (f.as_csv) {
    if (csv_header_done && !*csv_header_done) {
      std::cout << "schema_version,gamma,g,count,method,wall_ms,tool_version\n";
      *csv_header_done = true;
    }
    std::cout << kSchemaVersion << "," << gamma << "," << g << "," << count
              << "," << method << "," << wall_ms << "," << kToolVersion
              << "\n";
  } else {
    std::cout << "e(" << gamma << ", " << g << ") = " << count << "  ["
              << method << "]";
    if (wall_ms > 0) std::cout << "  (" << wall_ms << " ms)";
    std::cout << "\n";
  }
}

long now_ms_since(std::chrono::steady_clock::time_point t0,
                  GlobalFlags const& f) {
  // wall_ms stays 0 unless --timings, keeping output byte-deterministic.
  if (!f.timings) return 0;
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

int cmd_count(GlobalFlags const& f, std::string const& gamma_spec,
              std::string const& g_spec, bool witnesses) {
  auto gamma = hgs::construct(gamma_spec);
  auto g = hgs::construct(g_spec);
  CacheKey key{gamma.table_hash(), g.table_hash(), "holomorph-enum"};
  auto t0 = std::chrono::steady_clock::now();
  bool header = false;
  if (!f.no_cache && !witnesses) {
    if (auto hit = cache_lookup(key)) {
      emit_record(f, gamma_spec, g_spec, *hit, "holomorph-enum",
                  now_ms_since(t0, f), &header);
      return 0;
    }
  }
  hgs::EnumOptions opts;
  opts.threads = effective_threads(f);
  auto r = hgs::count_hgs(gamma, g, opts);
  if (!f.no_cache) cache_store(key, r.count);
  emit_record(f, gamma_spec, g_spec, r.count, r.method, now_ms_since(t0, f),
              &header);
  if (witnesses) {
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      std::cout << "class " << i << ":\n";
      for (int c = 0; c < gamma.order(); ++c)
        std::cout << "  " << c << " -> "
                  << r.witnesses[i].image[c].to_cycle_string() << "\n";
    }
  }
  return 0;
}

int cmd_total(GlobalFlags const& f, std::string const& gamma_spec) {
  auto gamma = hgs::construct(gamma_spec);
  auto census = hgs::all_groups_of_order(gamma.order());
  if (census.empty())
    throw hgs::CapabilityError("total: no complete catalog of groups of order " +
                               std::to_string(gamma.order()));
  hgs::EnumOptions opts;
  opts.threads = effective_threads(f);
  auto t0 = std::chrono::steady_clock::now();
  long total = 0;
  bool header = false;
  std::vector<std::pair<std::string, long>> per_type;
  for (auto const& g : census) {
    long c = hgs::count_hgs(gamma, g, opts).count;
    total += c;
    per_type.emplace_back(g.name(), c);
  }
  for (auto const& [name, c] : per_type)
    emit_record(f, gamma_spec, name, c, "holomorph-enum", 0, &header);
  emit_record(f, gamma_spec, "*", total, "holomorph-enum",
              now_ms_since(t0, f), &header);
  return 0;
}

int cmd_predict(GlobalFlags const& f, long n) {
  auto pred = hgs::predict_cyclic(n);
  bool header = false;
  if (f.as_json || f.as_csv) {
    for (auto const& tc : pred.per_type)
      emit_record(f, "C" + std::to_string(n), tc.type_spec, tc.count,
                  "closed-form", 0, &header);
    emit_record(f, "C" + std::to_string(n), "*", pred.e_nil, "closed-form", 0,
                &header);
    return 0;
  }
  std::cout << "n = " << n << ", case (" << pred.theorem_case
            << "), e_nil = " << pred.e_nil << ", e_ab = " << pred.e_ab << "\n";
  for (auto const& tc : pred.per_type)
    std::cout << "  " << tc.type_spec << ": " << tc.count << "\n";
  std::cout << "dickson_criterion: "
            << (hgs::dickson_criterion(n) ? "true" : "false") << "\n";
  std::cout << "ab_thm_hypothesis: "
            << (hgs::ab_thm_hypothesis(n) ? "true" : "false") << "\n";
  std::cout << "all_gamma_hypothesis: "
            << (hgs::all_gamma_hypothesis(n) ? "true" : "false") << "\n";
  return 0;
}

int cmd_oracle(GlobalFlags const& f, std::string const& gamma_spec) {
  auto gamma = hgs::construct(gamma_spec);
  auto entries = hgs::gp_oracle(gamma);
  bool header = false;
  long total = 0;
  for (auto const& e : entries) {
    total += e.count;
    emit_record(f, gamma_spec, e.type_name, e.count, "gp-oracle", 0, &header);
  }
  emit_record(f, gamma_spec, "*", total, "gp-oracle", 0, &header);
  return 0;
}

int cmd_enumerate(GlobalFlags const& f, std::string const& gamma_spec,
                  std::string const& g_spec) {
  auto gamma = hgs::construct(gamma_spec);
  auto g = hgs::construct(g_spec);
  auto hol = hgs::Holomorph::build(g);
  hgs::EnumOptions opts;
  opts.threads = effective_threads(f);
  auto embeddings = hgs::enumerate_regular_embeddings(gamma, hol, opts);
  auto cls = hgs::equivalence_classes(embeddings, hol.aut());
  std::cout << embeddings.size() << " embeddings in " << cls.classes.size()
            << " classes\n";
  for (std::size_t i = 0; i < cls.representatives.size(); ++i) {
    std::cout << "class " << i << " (size " << cls.classes[i].size() << "):\n";
    for (int c = 0; c < gamma.order(); ++c)
      std::cout << "  " << c << " -> "
                << cls.representatives[i].image[c].to_cycle_string() << "\n";
  }
  return 0;
}

int cmd_ring(GlobalFlags const& f, std::string const& g_spec) {
  auto g = hgs::construct(g_spec);
  auto rings = hgs::enumerate_rings(g);
  bool header = false;
  if (f.as_json || f.as_csv) {
    for (std::size_t i = 0; i < rings.size(); ++i)
      emit_record(f, rings[i].circle.name(), g_spec, 1, "ring-corr", 0,
                  &header);
    return 0;
  }
  std::cout << rings.size() << " ring structures on " << g_spec << "\n";
  for (std::size_t i = 0; i < rings.size(); ++i) {
    auto inv = hgs::abelian_invariants(rings[i].circle);
    std::cout << "ring " << i
              << ": circle group " << hgs::abelian_type_name(inv) << "\n";
  }
  return 0;
}

int cmd_verify(GlobalFlags const& f, std::string const& suite, int max_n,
               int max_order) {
  using namespace hgs;
  EnumOptions opts;
  opts.threads = effective_threads(f);
  std::vector<SuiteReport> reports;
  auto want = [&](char const* name) {
    return suite == name || suite == "all";
  };
  if (want("prime-power")) reports.push_back(verify_prime_power(opts));
  if (want("cyclic")) {
    std::vector<long> ns;
    for (long n : {6, 10, 12, 15, 18, 20, 24})
      if (n <= max_n) ns.push_back(n);
    reports.push_back(verify_cyclic(ns, opts));
  }
  if (want("n45")) reports.push_back(verify_n45(opts));
  if (want("nilpotent-product"))
    reports.push_back(verify_nilpotent_product(std::min(max_order, 24), opts));
  if (want("oracle")) reports.push_back(verify_oracle(std::min(max_n, 8), opts));
  if (want("centralizer")) reports.push_back(verify_centralizer(opts));
  if (want("ring-corr"))
    reports.push_back(verify_ring_corr(std::min(max_order, 12), opts));
  if (want("predicates")) reports.push_back(verify_predicates());
  if (want("properties")) reports.push_back(verify_properties(opts.threads));
  if (reports.empty())
    throw hgs::SpecError(
        "verify: unknown suite '" + suite +
        "' (expected cyclic, oracle, nilpotent-product, ring-corr, "
        "centralizer, prime-power, n45, predicates, properties, or all)");
  bool ok = true;
  for (auto const& rep : reports) {
    std::cout << render_report(rep);
    ok = ok && rep.pass();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf-Galois structure counting via holomorph enumeration"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  GlobalFlags f;
  app.add_flag("--json", f.as_json, "emit JSON-lines records");
  app.add_flag("--csv", f.as_csv, "emit CSV records");
  app.add_flag("--no-cache", f.no_cache, "bypass the result cache");
  app.add_flag("--timings", f.timings, "report wall times (non-deterministic)");
  app.add_option("--threads", f.threads,
                 "worker threads (default: machine parallelism)");

  std::string gamma_spec, g_spec, suite;
  bool witnesses = false;
  long predict_n = 0;
  int max_n = 24, max_order = 24;

  auto* count = app.add_subcommand("count", "e(Gamma, G) by enumeration");
  count->add_option("--gamma", gamma_spec, "Galois group spec")->required();
  count->add_option("--g", g_spec, "type spec")->required();
  count->add_flag("--witnesses", witnesses,
                  "print one representative embedding per class");

  auto* total = app.add_subcommand(
      "total", "sum of e(Gamma, G) over the full catalog of |Gamma|");
  total->add_option("--gamma", gamma_spec, "Galois group spec")->required();

  auto* predict =
      app.add_subcommand("predict", "closed-form prediction for cyclic degree n");
  predict->add_option("n", predict_n, "degree")->required();

  auto* oracle = app.add_subcommand(
      "oracle", "regular subgroups of Perm(Gamma) normalized by translations");
  oracle->add_option("--gamma", gamma_spec, "Galois group spec")->required();

  auto* enumerate =
      app.add_subcommand("enumerate", "list embedding classes with witnesses");
  enumerate->add_option("--gamma", gamma_spec, "Galois group spec")->required();
  enumerate->add_option("--g", g_spec, "type spec")->required();

  auto* ring = app.add_subcommand("ring", "ring structures on an abelian group");
  ring->add_option("--g", g_spec, "abelian group spec")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  verify->add_option("--max-n", max_n, "degree bound for cyclic/oracle suites");
  verify->add_option("--max-order", max_order,
                     "order bound for product/ring suites");

  try {
    app.parse(argc, argv);
    if (count->parsed()) return cmd_count(f, gamma_spec, g_spec, witnesses);
    if (total->parsed()) return cmd_total(f, gamma_spec);
    if (predict->parsed()) return cmd_predict(f, predict_n);
    if (oracle->parsed()) return cmd_oracle(f, gamma_spec);
    if (enumerate->parsed()) return cmd_enumerate(f, gamma_spec, g_spec);
    if (ring->parsed()) return cmd_ring(f, g_spec);
    if (verify->parsed()) return cmd_verify(f, suite, max_n, max_order);
    return 2;
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  } catch (hgs::CapabilityError const& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return 3;
  } catch (hgs::SpecError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

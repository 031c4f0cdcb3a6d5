// Command-line front end for the severi library.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "severi/cache.hpp"
#include "severi/coeffs.hpp"
#include "severi/identities.hpp"
#include "severi/parallel.hpp"
#include "severi/polygon.hpp"
#include "severi/series.hpp"
#include "severi/severi.hpp"
#include "severi/verify.hpp"

using namespace severi;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

struct Options {
  unsigned delta = 1;
  unsigned order = 3;
  unsigned threads = 0;
  bool no_cache = false;
  std::string polygon, method = "all", format = "json", out, suite, series_name;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::invalid_argument("cannot open output file " + o.out);
  f << text;
}

// Loads templates for 1..delta_max from the cache (or computes them) and
// writes back any entry that was missing or stale.
void prepare(const Options& o, unsigned delta_max) {
  auto& store = CoefficientStore::global();
  if (o.no_cache) return;
  TemplateCache cache(TemplateCache::default_directory());
  std::vector<unsigned> hits;
  for (unsigned d = 1; d <= delta_max; ++d) {
    auto entry = cache.load(d);
    if (!entry) continue;
    try {
      store.seed(template_data_from_json(entry->payload.at("templates")));
      hits.push_back(d);
    } catch (const std::exception&) {
    }
  }
  bool stale = false;
  for (unsigned d = 1; d <= delta_max; ++d) {
    auto fresh = make_cache_entry(store.templates(d), store.table(d));
    auto entry = cache.load(d);
    if (entry && entry->hash == fresh.hash) continue;
    if (entry) stale = true;
    try {
      cache.store(fresh);
    } catch (const std::exception& e) {
      std::cerr << "warning: " << e.what() << "\n";
    }
  }
  if (stale && !hits.empty()) {
    // A cached entry disagreed with what it produces; start over from scratch.
    std::cerr << "warning: stale template cache entries were recomputed\n";
    store.clear();
    for (unsigned d = 1; d <= delta_max; ++d) cache.store(make_cache_entry(store.templates(d), store.table(d)));
  }
}

std::string lambda_list(const LongEdgeGraph& g, unsigned l, bool over) {
  std::string s = "(";
  for (unsigned j = 1; j <= l; ++j) {
    if (j > 1) s += ",";
    s += std::to_string(over ? olambda(g, j) : lambda(g, j));
  }
  return s + ")";
}

int cmd_templates(const Options& o) {
  if (o.format != "json" && o.format != "tsv") throw std::invalid_argument("--format must be json or tsv");
  std::vector<TemplateRecord> records;
  if (o.delta > 0) {
    prepare(o, o.delta);
    records = CoefficientStore::global().templates(o.delta).records;
  }
  if (o.format == "tsv") {
    std::ostringstream out;
    out << "delta\tlength\tmu\teps0\teps1\tlambda\tolambda\tzeta0\tzeta1\tzeta2\teta0\tedges\n";
    for (const auto& r : records) {
      const auto& g = r.tmpl.graph();
      out << o.delta << '\t' << r.length << '\t' << to_string(r.mu) << '\t' << r.eps0 << '\t' << r.eps1 << '\t'
          << lambda_list(g, r.length, false) << '\t' << lambda_list(g, r.length, true) << '\t'
          << to_string(r.form.zeta0) << '\t' << to_string(r.form.zeta1) << '\t' << to_string(r.form.zeta2) << '\t'
          << to_string(r.form.eta[0]) << '\t' << g.key() << '\n';
    }
    emit(o, out.str());
    return kOk;
  }
  json list = json::array();
  for (const auto& r : records) {
    const auto& g = r.tmpl.graph();
    json lam = json::array(), olam = json::array(), eta = json::array();
    for (unsigned j = 1; j <= r.length; ++j) {
      lam.push_back(lambda(g, j));
      olam.push_back(olambda(g, j));
    }
    for (const auto& e : r.form.eta) eta.push_back(to_string(e));
    list.push_back({{"delta", o.delta},
                    {"length", r.length},
                    {"mu", to_string(r.mu)},
                    {"eps0", r.eps0 ? 1 : 0},
                    {"eps1", r.eps1 ? 1 : 0},
                    {"lambda", lam},
                    {"olambda", olam},
                    {"zeta0", to_string(r.form.zeta0)},
                    {"zeta1", to_string(r.form.zeta1)},
                    {"zeta2", to_string(r.form.zeta2)},
                    {"eta0", to_string(r.form.eta[0])},
                    {"eta", eta},
                    {"graph", graph_to_json(g)}});
  }
  emit(o, json({{"delta", o.delta}, {"templates", list}}).dump(2) + "\n");
  return kOk;
}

int cmd_coeffs(const Options& o) {
  if (o.delta == 0) throw std::invalid_argument("--delta must be at least 1");
  prepare(o, o.delta);
  json tables = json::array();
  for (unsigned d = 1; d <= o.delta; ++d) tables.push_back(coeff_table_to_json(CoefficientStore::global().table(d)));
  emit(o, tables.dump(2) + "\n");
  return kOk;
}

HTPolygon read_polygon(const std::string& path) {
  if (path.empty()) throw std::invalid_argument("--polygon is required");
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read polygon file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument("polygon file " + path + " is not valid JSON: " + e.what());
  }
  return polygon_from_json(j);
}

int cmd_severi(const Options& o) {
  HTPolygon p = read_polygon(o.polygon);
  std::vector<Method> methods;
  if (o.method == "all")
    methods = {Method::bruteforce, Method::closed, Method::geometric};
  else
    methods = {parse_method(o.method)};
  bool needs_coeffs = std::any_of(methods.begin(), methods.end(), [](Method m) { return m != Method::bruteforce; });
  if (needs_coeffs && o.delta > 0 && polygon_stats(p).min_edge_length >= 1)
    prepare(o, std::min<unsigned>(o.delta, polygon_stats(p).min_edge_length));
  NodeCountReport rep = report(p, o.delta, methods);
  emit(o, report_to_json(rep).dump(2) + "\n");
  return rep.ok ? kOk : kVerifyFailed;
}

int cmd_verify(const Options& o) {
  if (o.suite != "toric" && o.suite != "table1") prepare(o, o.order);
  if (o.suite == "table1") prepare(o, 2);
  auto results = run_verify_suite(o.suite, o.order);
  bool all = true;
  json list = json::array();
  std::ostringstream text;
  for (const auto& r : results) {
    all = all && r.passed;
    text << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) text << "  [" << r.detail << "]";
    text << "\n";
    list.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  if (o.format == "json")
    emit(o, json({{"suite", o.suite}, {"order", o.order}, {"passed", all}, {"checks", list}}).dump(2) + "\n");
  else
    emit(o, text.str());
  return all ? kOk : kVerifyFailed;
}

RatSeries named_series(const Options& o) {
  const std::string& n = o.series_name;
  unsigned T = o.order;
  if (n == "g") return revert(dg2(T));
  if (n == "dg2") return dg2(T);
  if (n == "d2g2") return d2g2(T);
  if (n == "g2") return g2(T);
  if (n == "disc") return disc(T);
  if (n == "partition") return partition_series(T);
  if (n == "logp") return log_partition_series(T);
  if (n == "A" || n == "tA" || n == "b1" || n == "b2") {
    prepare(o, T);
    auto& store = CoefficientStore::global();
    if (n == "A") return store.a_series(T);
    if (n == "tA") {
      RatSeries a = store.a_series(T == 0 ? 0 : T - 1), out(T);
      for (unsigned k = 1; k <= T; ++k) out[k] = a[k - 1];
      return out;
    }
    auto [b1, b2] = b1_b2(T, store);
    return n == "b1" ? b1 : b2;
  }
  throw std::invalid_argument("unknown series \"" + n + "\" (g, tA, A, dg2, d2g2, g2, disc, partition, logp, b1, b2)");
}

int cmd_series(const Options& o) {
  if (o.order == 0) throw std::invalid_argument("--order must be at least 1");
  RatSeries s = named_series(o);
  emit(o, json({{"name", o.series_name}, {"order", o.order}, {"coeffs", s.to_strings()}}).dump() + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Severi degrees and node polynomials of h-transverse toric surfaces"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "worker threads (default: hardware concurrency)");
  app.add_flag("--no-cache", o.no_cache, "do not read or write the template cache");
  app.add_option("--out", o.out, "write output to this file instead of stdout");

  auto* templates = app.add_subcommand("templates", "list templates of a given cogenus with their linear forms");
  templates->add_option("--delta", o.delta, "cogenus")->required();
  templates->add_option("--format", o.format, "json or tsv");

  auto* coeffs = app.add_subcommand("coeffs", "coefficient tables A, L, H, D, C, Ctilde, b for 1..delta");
  coeffs->add_option("--delta", o.delta, "largest cogenus")->required();

  auto* sev = app.add_subcommand("severi", "node counts of a polygon by brute force, closed and geometric forms");
  sev->add_option("--polygon", o.polygon, "polygon JSON file")->required();
  sev->add_option("--delta", o.delta, "largest cogenus")->required();
  sev->add_option("--method", o.method, "bruteforce, closed, geometric or all");

  auto* verify = app.add_subcommand("verify", "run a verification suite (table1, coeffs, gyz, oracle, toric)");
  verify->add_option("suite", o.suite, "suite name")->required();
  verify->add_option("--order", o.order, "largest cogenus / series order");
  verify->add_option("--format", o.format, "json or text");

  auto* series = app.add_subcommand("series", "print a power series as exact coefficients");
  series->add_option("name", o.series_name, "g, tA, A, dg2, d2g2, g2, disc, partition, logp, b1, b2")->required();
  series->add_option("--order", o.order, "truncation order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  set_thread_count(o.threads);
  try {
    if (*templates) return cmd_templates(o);
    if (*coeffs) return cmd_coeffs(o);
    if (*sev) return cmd_severi(o);
    if (*verify) return cmd_verify(o);
    if (*series) return cmd_series(o);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kInputError;
}

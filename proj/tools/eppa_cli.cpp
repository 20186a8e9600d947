// Command-line surface: build explicit EPPA witnesses, verify them
// exhaustively, compute lower bounds, search minimal witnesses, and run
// random-graph experiments. Exit codes: 0 success/pass, 1 negative verdict,
// 2 usage or input error, 3 capacity error, 4 internal error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "eppa/eppa.hpp"

namespace {

using namespace eppa;
using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// caps: flag > environment variable > built-in default

long long env_ll(const char* name, long long dflt) {
  const char* v = std::getenv(name);
  if (!v || !*v) return dflt;
  try {
    size_t pos = 0;
    long long x = std::stoll(v, &pos);
    if (pos != std::string(v).size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw InputError(std::string("invalid ") + name + ": " + v);
  }
}

double env_double(const char* name, double dflt) {
  const char* v = std::getenv(name);
  if (!v || !*v) return dflt;
  try {
    size_t pos = 0;
    double x = std::stod(v, &pos);
    if (pos != std::string(v).size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw InputError(std::string("invalid ") + name + ": " + v);
  }
}

struct Caps {
  int max_vertices = 8;  // largest base handed to exhaustive verification
  unsigned long long max_hosts = 500000;
  double timeout_secs = 0;  // 0 = unlimited
};

void guard_base(int n, const Caps& caps) {
  if (n > caps.max_vertices)
    throw CapacityError("base structure on " + std::to_string(n) +
                        " vertices exceeds --max-vertices " +
                        std::to_string(caps.max_vertices));
}

// ---------------------------------------------------------------------------
// run-record plumbing

struct Recording {
  std::string path;     // empty = off
  std::string command;  // reassembled argv
  std::string digest;   // of the raw input file bytes
  bool has_seed = false;
  std::uint64_t seed = 0;
};

void persist(const Recording& rec, ordered_json outputs) {
  if (rec.path.empty()) return;
  RunRecord r;
  r.command = rec.command;
  r.input_digest = rec.digest;
  r.has_seed = rec.has_seed;
  r.seed = rec.seed;
  r.outputs = std::move(outputs);
  r.timestamp = now_utc();
  append_run_record(rec.path, r);
}

std::string files_digest(const std::vector<std::string>& paths) {
  std::string bytes;
  for (const auto& p : paths) bytes += read_file_bytes(p);
  return digest_hex(bytes);
}

// ---------------------------------------------------------------------------
// shared printing

void print_failures(const VerificationReport& rep) {
  for (const auto& f : rep.failures) {
    std::cerr << "counterexample: {";
    bool first = true;
    for (auto [u, v] : f.p.pairs) {
      if (!first) std::cerr << ", ";
      std::cerr << u << "->" << v;
      first = false;
    }
    std::cerr << "} " << f.reason << "\n";
  }
}

void print_report(const VerificationReport& rep) {
  std::cout << "verification: " << (rep.pass ? "pass" : "fail")
            << " (checked=" << rep.checked << " extended=" << rep.extended
            << " strategy=" << rep.strategy << ")\n";
  if (!rep.pass) {
    std::cout << "failures: " << rep.failure_count << "\n";
    print_failures(rep);
  }
}

ordered_json report_json(const VerificationReport& rep) {
  ordered_json j;
  j["pass"] = rep.pass;
  j["checked"] = rep.checked;
  j["extended"] = rep.extended;
  j["failures"] = rep.failure_count;
  j["strategy"] = rep.strategy;
  return j;
}

int host_relations(const Graph& g) { return g.m(); }
int host_relations(const Digraph& g) { return g.m(); }
int host_relations(const Hypergraph& g) { return g.m(); }

// build output, optional export, optional verification; returns exit code
template <class S>
int finish_witness(Witness<S>& w, bool verify, const std::string& out_path,
                   const std::string& labels_path, const Caps& caps,
                   const Recording& rec) {
  std::cout << "construction: " << w.tag << "\n";
  std::cout << "base vertices: " << w.base.n << "\n";
  std::cout << "host vertices: " << w.host.n << "\n";
  std::cout << "host relations: " << host_relations(w.host) << "\n";
  if (!out_path.empty()) write_structure_file(out_path, w.host);
  if (!labels_path.empty()) {
    if (w.host_labels.empty())
      throw InputError("this construction has no label table");
    write_labels_file(labels_path, w.host_labels);
  }

  ordered_json out;
  out["construction"] = w.tag;
  out["base_vertices"] = w.base.n;
  out["host_vertices"] = w.host.n;
  out["host_relations"] = host_relations(w.host);

  int code = 0;
  if (verify) {
    guard_base(w.base.n, caps);
    VerifyOptions vo;
    vo.strategy =
        w.has_extender() ? VerifyStrategy::both : VerifyStrategy::search;
    vo.timeout_secs = caps.timeout_secs;
    VerificationReport rep = verify_witness(w, vo);
    print_report(rep);
    out["verification"] = report_json(rep);
    code = rep.pass ? 0 : 1;
  }
  persist(rec, std::move(out));
  return code;
}

// ---------------------------------------------------------------------------
// subcommands

struct WitnessArgs {
  std::string input;
  std::string out_path;
  std::string labels_path;
  std::string record_path;
  bool verify = false;
  bool coherent = false;           // valuation only
  int k = 3;                       // kkfree only
  int d = -1;                      // kneser only
  bool allow_bidirectional = false;  // directed only
  long long cap = 0;               // 0 = builder default
};

int run_witness(const std::string& kind, const WitnessArgs& a, Caps caps,
                Recording rec) {
  rec.path = a.record_path;
  rec.digest = files_digest({a.input});
  AnyStructure s = read_structure_file(a.input);

  if (kind == "valuation") {
    Witness<Graph> w =
        build_valuation_witness(expect_graph(s, a.input), a.coherent);
    return finish_witness(w, a.verify, a.out_path, a.labels_path, caps, rec);
  }
  if (kind == "kneser") {
    if (std::holds_alternative<Digraph>(s)) {
      Witness<Digraph> w = build_relational_kneser_witness(
          expect_digraph(s, a.input), a.d,
          a.cap > 0 ? a.cap : kDefaultKneserCap);
      return finish_witness(w, a.verify, a.out_path, a.labels_path, caps, rec);
    }
    Witness<Graph> w = build_kneser_witness(
        expect_graph(s, a.input), a.d, a.cap > 0 ? a.cap : kDefaultKneserCap);
    return finish_witness(w, a.verify, a.out_path, a.labels_path, caps, rec);
  }
  if (kind == "kkfree") {
    Witness<Graph> w = build_kkfree_witness(
        expect_graph(s, a.input), a.k, a.cap > 0 ? a.cap : kDefaultKkFreeCap);
    return finish_witness(w, a.verify, a.out_path, a.labels_path, caps, rec);
  }
  if (kind == "directed") {
    Witness<Digraph> w = build_directed_valuation_witness(
        expect_digraph(s, a.input), a.allow_bidirectional,
        a.cap > 0 ? a.cap : kDefaultDirectedCap);
    return finish_witness(w, a.verify, a.out_path, a.labels_path, caps, rec);
  }
  Witness<Hypergraph> w = build_hypergraph_valuation_witness(
      expect_hypergraph(s, a.input), a.cap > 0 ? a.cap : kDefaultHyperCap);
  return finish_witness(w, a.verify, a.out_path, a.labels_path, caps, rec);
}

template <class S>
int run_verify_typed(const S& base, const S& host, const Caps& caps,
                     int max_failures, const Recording& rec) {
  guard_base(base.n, caps);
  auto emb = find_induced_embedding(base, host);
  if (!emb)
    throw InputError("base is not an induced substructure of the host");
  std::cout << "embedding:";
  for (int x : *emb) std::cout << " " << x;
  std::cout << "\n";

  Witness<S> w;
  w.base = base;
  w.host = host;
  w.embedding = *emb;
  VerifyOptions vo;
  vo.strategy = VerifyStrategy::search;
  vo.max_failures_kept = max_failures;
  vo.timeout_secs = caps.timeout_secs;
  VerificationReport rep = verify_witness(w, vo);
  print_report(rep);

  ordered_json out = report_json(rep);
  out["embedding"] = *emb;
  persist(rec, std::move(out));
  return rep.pass ? 0 : 1;
}

int run_verify(const std::string& g_path, const std::string& h_path,
               int max_failures, const Caps& caps, Recording rec) {
  rec.digest = files_digest({g_path, h_path});
  AnyStructure base = read_structure_file(g_path);
  AnyStructure host = read_structure_file(h_path);
  if (base.index() != host.index())
    throw InputError("base and host must be the same structure kind");
  if (const auto* g = std::get_if<Graph>(&base))
    return run_verify_typed(*g, std::get<Graph>(host), caps, max_failures,
                            rec);
  if (const auto* d = std::get_if<Digraph>(&base))
    return run_verify_typed(*d, std::get<Digraph>(host), caps, max_failures,
                            rec);
  return run_verify_typed(std::get<Hypergraph>(base),
                          std::get<Hypergraph>(host), caps, max_failures, rec);
}

int run_bounds_hrus(const std::string& input, const std::string& mode,
                    int exact_cap, Recording rec) {
  rec.digest = files_digest({input});
  Graph g = expect_graph(read_structure_file(input), input);
  BoundMode m = mode == "greedy" ? BoundMode::greedy : BoundMode::exact;
  BoundCertificate c = lower_bound_hrus(g, m, exact_cap);
  if (!validate_certificate(g, c))
    throw InternalError("computed certificate failed validation");

  std::cout << "value=" << c.value << "\n";
  std::cout << "mode=" << mode << " complemented="
            << (c.complemented ? "true" : "false") << "\n";
  std::cout << "independent set (size " << c.independent_set.size() << "):";
  for (int v : c.independent_set) std::cout << " " << v;
  std::cout << "\n";
  std::cout << "realized counts:";
  for (auto [v, k] : c.witnesses) std::cout << " k=" << k << "(v" << v << ")";
  std::cout << "\n";

  ordered_json out;
  out["value"] = c.value.str();
  out["mode"] = mode;
  out["complemented"] = c.complemented;
  out["set_size"] = c.independent_set.size();
  std::vector<int> ks;
  for (auto [v, k] : c.witnesses) ks.push_back(k);
  out["realized_counts"] = ks;
  persist(rec, std::move(out));
  return 0;
}

int run_bounds_cycles(int n, Recording rec) {
  auto [lo, hi] = cycle_bounds(n);
  std::cout << "lower=" << lo << " upper=" << hi << "\n";
  ordered_json out;
  out["n"] = n;
  out["lower"] = lo.str();
  out["upper"] = hi.str();
  persist(rec, std::move(out));
  return 0;
}

int run_bounds_table(int from, int to, Recording rec) {
  if (from < 3 || to < from)
    throw InputError("need 3 <= from <= to for the cycle table");
  ordered_json rows = ordered_json::array();
  for (int n = from; n <= to; ++n) {
    auto [lo, hi] = cycle_bounds(n);
    std::cout << "n=" << n << " lower=" << lo << " upper=" << hi << "\n";
    ordered_json row;
    row["n"] = n;
    row["lower"] = lo.str();
    row["upper"] = hi.str();
    rows.push_back(std::move(row));
  }
  ordered_json out;
  out["rows"] = std::move(rows);
  persist(rec, std::move(out));
  return 0;
}

int run_bounds_degrees(const std::string& input, Recording rec) {
  rec.digest = files_digest({input});
  Graph g = expect_graph(read_structure_file(input), input);
  DegreeBoundsReport r = degree_bounds(g);
  std::cout << "max degree: " << r.max_degree << "\n";
  std::cout << "neighborhood independence: " << r.neighborhood_independence
            << "\n";
  if (r.homogeneous_subgraph)
    std::cout << "disjoint union of cliques; sits inside a homogeneous graph, "
                 "no degree bound claimed\n";
  else
    std::cout << "bound: " << r.bound << "\n";
  ordered_json out;
  out["max_degree"] = r.max_degree;
  out["neighborhood_independence"] = r.neighborhood_independence;
  out["homogeneous_subgraph"] = r.homogeneous_subgraph;
  out["bound"] = r.bound.str();
  persist(rec, std::move(out));
  return 0;
}

int run_catalog(const std::string& input, bool check,
                const std::string& materialize_name, int copies,
                int clique_size, const std::string& out_path, const Caps& caps,
                Recording rec) {
  auto entries = homogeneous_catalog();

  if (!materialize_name.empty()) {
    for (const auto& e : entries)
      if (e.name == materialize_name) {
        Graph g = e.parametrized ? materialize(e, copies, clique_size)
                                 : materialize(e);
        std::cout << e.name << ": " << g.n << " vertices, " << g.m()
                  << " edges\n";
        if (!out_path.empty()) write_structure_file(out_path, g);
        return 0;
      }
    throw InputError("unknown catalog entry: " + materialize_name);
  }

  if (!input.empty()) {
    rec.digest = files_digest({input});
    Graph g = expect_graph(read_structure_file(input), input);
    auto found = is_subgraph_of_homogeneous(g);
    ordered_json out;
    if (found) {
      std::cout << "target=" << found->target_name << " ("
                << found->target.n << " vertices)\n";
      std::cout << "embedding:";
      for (int x : found->embedding) std::cout << " " << x;
      std::cout << "\n";
      out["target"] = found->target_name;
      out["embedding"] = found->embedding;
      persist(rec, std::move(out));
      return 0;
    }
    std::cout << "no homogeneous target found\n";
    out["target"] = nullptr;
    persist(rec, std::move(out));
    return 1;
  }

  if (check) {
    // every catalog member is its own witness; verify exhaustively
    int failures = 0;
    ordered_json results = ordered_json::array();
    auto check_one = [&](const std::string& name, const Graph& g) {
      guard_base(g.n, caps);
      Witness<Graph> w;
      w.base = g;
      w.host = g;
      w.embedding.resize(g.n);
      for (int i = 0; i < g.n; ++i) w.embedding[i] = i;
      VerifyOptions vo;
      vo.timeout_secs = caps.timeout_secs;
      VerificationReport rep = verify_witness(w, vo);
      std::cout << name << ": " << (rep.pass ? "pass" : "fail") << "\n";
      failures += rep.pass ? 0 : 1;
      ordered_json r;
      r["name"] = name;
      r["pass"] = rep.pass;
      results.push_back(std::move(r));
    };
    for (const auto& e : entries) {
      if (!e.parametrized) {
        check_one(e.name, materialize(e));
        continue;
      }
      for (int s = 1; s <= 3; ++s)
        for (int t = 1; t <= 3; ++t)
          check_one(e.name + " s=" + std::to_string(s) +
                        " t=" + std::to_string(t),
                    materialize(e, s, t));
    }
    ordered_json out;
    out["results"] = std::move(results);
    out["failures"] = failures;
    persist(rec, std::move(out));
    return failures == 0 ? 0 : 1;
  }

  for (const auto& e : entries) {
    std::cout << e.name;
    if (e.parametrized)
      std::cout << " (parameters: copies, clique size)";
    else
      std::cout << " (" << materialize(e).n << " vertices)";
    std::cout << "\n";
  }
  return 0;
}

int run_search_min(const std::string& input, int max_m, bool prune,
                   const std::string& out_path, const Caps& caps,
                   Recording rec) {
  rec.digest = files_digest({input});
  Graph g = expect_graph(read_structure_file(input), input);
  MinWitnessOptions opt;
  opt.max_m = max_m;
  opt.prune_transitive = prune;
  opt.max_hosts = caps.max_hosts;
  opt.timeout_secs = caps.timeout_secs;
  MinWitnessResult res = min_witness_search(g, opt);

  ordered_json out;
  out["found"] = res.found;
  if (res.found) {
    std::cout << "value=" << res.value << "\n";
    if (res.pruned_mode)
      std::cout << "conditional on the vertex-transitivity assumption about "
                   "smallest witnesses\n";
    if (!out_path.empty()) write_structure_file(out_path, res.certificate.host);
    out["value"] = res.value;
  } else {
    std::cout << "exhausted: no witness on <= " << max_m << " vertices\n";
    out["exhausted"] = res.exhausted;
  }
  out["pruned_mode"] = res.pruned_mode;
  ordered_json levels = ordered_json::array();
  for (const auto& st : res.levels) {
    std::cout << "level m=" << st.m << ": generated=" << st.generated
              << " kept=" << st.kept << " verified=" << st.verified
              << " passed=" << st.passed << "\n";
    ordered_json row;
    row["m"] = st.m;
    row["generated"] = st.generated;
    row["kept"] = st.kept;
    row["verified"] = st.verified;
    row["passed"] = st.passed;
    levels.push_back(std::move(row));
  }
  out["levels"] = std::move(levels);
  persist(rec, std::move(out));
  return 0;
}

int run_random_exp(int n, double p, int samples, std::uint64_t seed,
                   int exact_cap, Recording rec) {
  rec.has_seed = true;
  rec.seed = seed;
  RandomExperimentReport r = random_experiment(n, p, samples, seed, exact_cap);
  std::cout << "n=" << r.n << " p=" << r.p << " samples=" << r.samples
            << " seed=" << r.seed << " exact=" << (r.exact ? "true" : "false")
            << "\n";
  std::cout << "values:";
  for (const auto& v : r.values) std::cout << " " << v;
  std::cout << "\n";
  std::cout << "min=" << r.min_value << " median=" << r.median_value
            << " max=" << r.max_value << "\n";
  for (const auto& [key, count] : r.profile)
    std::cout << "profile |A|=" << key.first << " k=" << key.second << ": "
              << count << "\n";

  ordered_json out;
  out["n"] = r.n;
  out["p"] = r.p;
  out["samples"] = r.samples;
  out["exact"] = r.exact;
  ordered_json vals = ordered_json::array();
  for (const auto& v : r.values) vals.push_back(v.str());
  out["values"] = std::move(vals);
  out["min"] = r.min_value.str();
  out["median"] = r.median_value.str();
  out["max"] = r.max_value.str();
  ordered_json prof = ordered_json::array();
  for (const auto& [key, count] : r.profile) {
    ordered_json row;
    row["set_size"] = key.first;
    row["k"] = key.second;
    row["count"] = count;
    prof.push_back(std::move(row));
  }
  out["profile"] = std::move(prof);
  persist(rec, std::move(out));
  return 0;
}

int run_coherence(const std::string& input, const std::string& scope_name,
                  const Caps& caps, Recording rec) {
  rec.digest = files_digest({input});
  Graph g = expect_graph(read_structure_file(input), input);
  guard_base(g.n, caps);
  Witness<Graph> w = build_valuation_witness(g, true);
  VerifyOptions vo;
  vo.strategy = VerifyStrategy::both;
  vo.timeout_secs = caps.timeout_secs;
  VerificationReport vrep = verify_witness(w, vo);
  if (!vrep.pass) {
    print_report(vrep);
    return 1;
  }
  CoherenceScope scope = scope_name == "all"
                             ? CoherenceScope::all_composable
                             : CoherenceScope::substructure_autos;
  CoherenceReport rep = verify_coherence(w, scope, caps.timeout_secs);
  std::cout << "coherence: " << (rep.pass ? "pass" : "fail")
            << " (pairs_checked=" << rep.pairs_checked
            << " scope=" << rep.scope << ")\n";
  for (const auto& v : rep.violations) std::cerr << "violation: " << v << "\n";

  ordered_json out;
  out["pass"] = rep.pass;
  out["pairs_checked"] = rep.pairs_checked;
  out["scope"] = rep.scope;
  persist(rec, std::move(out));
  return rep.pass ? 0 : 1;
}

int run_paley(long long q, const std::string& base_path, bool verify,
              const std::string& out_path, const Caps& caps, Recording rec) {
  Digraph t = build_paley_tournament(q);
  std::cout << "paley tournament q=" << q << ": " << t.n << " vertices, "
            << t.m() << " arcs\n";
  if (!out_path.empty()) write_structure_file(out_path, t);

  ordered_json out;
  out["q"] = q;
  out["vertices"] = t.n;
  out["arcs"] = t.m();

  int code = 0;
  if (verify) {
    Digraph base = t;
    if (!base_path.empty()) {
      rec.digest = files_digest({base_path});
      base = expect_digraph(read_structure_file(base_path), base_path);
    }
    guard_base(base.n, caps);
    auto emb = find_induced_embedding(base, t);
    if (!emb)
      throw InputError("base is not an induced substructure of the tournament");
    Witness<Digraph> w;
    w.base = base;
    w.host = t;
    w.embedding = *emb;
    VerifyOptions vo;
    vo.timeout_secs = caps.timeout_secs;
    VerificationReport rep = verify_witness(w, vo);
    print_report(rep);
    out["verification"] = report_json(rep);
    code = rep.pass ? 0 : 1;
  }
  persist(rec, std::move(out));
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  std::string command;
  for (int i = 0; i < argc; ++i) {
    if (i) command += " ";
    command += argv[i];
  }

  CLI::App app{"explicit EPPA witnesses: construction, exhaustive "
               "verification, lower bounds, and experiments"};
  app.require_subcommand(1);

  int code = 0;
  try {
    Caps caps;
    caps.max_vertices = static_cast<int>(env_ll("EPPA_MAX_VERTICES", 8));
    caps.max_hosts = static_cast<unsigned long long>(
        env_ll("EPPA_MAX_HOSTS", 500000));
    caps.timeout_secs = env_double("EPPA_TIMEOUT_SECS", 0);

    Recording rec;
    rec.command = command;
    rec.digest = digest_hex("");

    auto add_caps = [&caps](CLI::App* sub, bool hosts = false) {
      sub->add_option("--max-vertices", caps.max_vertices,
                      "largest base size for exhaustive verification");
      sub->add_option("--timeout-secs", caps.timeout_secs,
                      "wall-clock limit, 0 = unlimited");
      if (hosts)
        sub->add_option("--max-hosts", caps.max_hosts,
                        "total candidate hosts generated");
    };

    // witness
    WitnessArgs wa;
    std::string witness_kind;
    auto* witness = app.add_subcommand("witness", "build an explicit witness");
    witness->require_subcommand(1);
    for (const char* kind :
         {"valuation", "kneser", "kkfree", "directed", "hypergraph"}) {
      auto* sub = witness->add_subcommand(kind, "");
      sub->add_option("--input", wa.input, "structure file")->required();
      sub->add_flag("--verify", wa.verify,
                    "verify the witness; exit code reflects the verdict");
      sub->add_option("--out", wa.out_path, "write the host structure");
      sub->add_option("--labels", wa.labels_path, "write the label sidecar");
      sub->add_option("--record", wa.record_path, "append a run record");
      if (std::string(kind) == "valuation")
        sub->add_flag("--coherent", wa.coherent, "coherent extender");
      if (std::string(kind) == "kneser")
        sub->add_option("--d", wa.d, "duplicity, -1 = automatic");
      if (std::string(kind) == "kkfree")
        sub->add_option("--k", wa.k, "forbidden clique size");
      if (std::string(kind) == "directed")
        sub->add_flag("--allow-bidirectional", wa.allow_bidirectional,
                      "permit u<->v arc pairs");
      if (std::string(kind) != "valuation")
        sub->add_option("--cap", wa.cap, "host size cap, 0 = default");
      add_caps(sub);
      sub->callback([&, kind] { code = run_witness(kind, wa, caps, rec); });
    }

    // verify
    std::string g_path, h_path, v_record;
    int max_failures = 10;
    auto* ver = app.add_subcommand(
        "verify", "exhaustively verify that one structure hosts another");
    ver->set_help_flag("--help", "print this help and exit");
    ver->add_option("--g", g_path, "base structure file")->required();
    ver->add_option("--h", h_path, "host structure file")->required();
    ver->add_option("--max-failures", max_failures,
                    "counterexamples kept in the report");
    ver->add_option("--record", v_record, "append a run record");
    add_caps(ver);
    ver->callback([&] {
      rec.path = v_record;
      code = run_verify(g_path, h_path, max_failures, caps, rec);
    });

    // bounds
    auto* bounds = app.add_subcommand("bounds", "lower and upper bounds");
    bounds->require_subcommand(1);
    std::string b_input, b_mode = "exact", b_record;
    int b_exact_cap = kDefaultExactMisCap;
    auto* hrus = bounds->add_subcommand(
        "hrus", "independent-set lower bound with certificate");
    hrus->add_option("--input", b_input, "graph file")->required();
    hrus->add_option("--mode", b_mode, "exact | greedy")
        ->check(CLI::IsMember({"exact", "greedy"}));
    hrus->add_option("--exact-cap", b_exact_cap,
                     "largest n for exact enumeration");
    hrus->add_option("--record", b_record, "append a run record");
    hrus->callback([&] {
      rec.path = b_record;
      code = run_bounds_hrus(b_input, b_mode, b_exact_cap, rec);
    });

    int cyc_n = 0;
    std::string cyc_record;
    auto* cycles = bounds->add_subcommand("cycles", "cycle bounds for C_n");
    cycles->add_option("--n", cyc_n, "cycle length")->required();
    cycles->add_option("--record", cyc_record, "append a run record");
    cycles->callback([&] {
      rec.path = cyc_record;
      code = run_bounds_cycles(cyc_n, rec);
    });

    int tab_from = 4, tab_to = 12;
    std::string tab_record;
    auto* table = bounds->add_subcommand("table", "cycle bounds over a range");
    table->add_option("--from", tab_from, "first cycle length");
    table->add_option("--to", tab_to, "last cycle length");
    table->add_option("--record", tab_record, "append a run record");
    table->callback([&] {
      rec.path = tab_record;
      code = run_bounds_table(tab_from, tab_to, rec);
    });

    std::string deg_input, deg_record;
    auto* degrees =
        bounds->add_subcommand("degrees", "degree-based lower bound");
    degrees->add_option("--input", deg_input, "graph file")->required();
    degrees->add_option("--record", deg_record, "append a run record");
    degrees->callback([&] {
      rec.path = deg_record;
      code = run_bounds_degrees(deg_input, rec);
    });

    // catalog
    std::string cat_input, cat_mat, cat_out, cat_record;
    int cat_copies = 1, cat_clique = 1;
    bool cat_check = false;
    auto* catalog =
        app.add_subcommand("catalog", "homogeneous graphs usable as targets");
    catalog->add_option("--input", cat_input,
                        "find a homogeneous graph hosting this one");
    catalog->add_flag("--check", cat_check,
                      "verify every catalog member is its own witness");
    catalog->add_option("--materialize", cat_mat, "build a named entry");
    catalog->add_option("--copies", cat_copies, "clique copies");
    catalog->add_option("--clique-size", cat_clique, "clique size");
    catalog->add_option("--out", cat_out, "write the materialized graph");
    catalog->add_option("--record", cat_record, "append a run record");
    add_caps(catalog);
    catalog->callback([&] {
      rec.path = cat_record;
      code = run_catalog(cat_input, cat_check, cat_mat, cat_copies, cat_clique,
                         cat_out, caps, rec);
    });

    // search-min
    std::string sm_input, sm_out, sm_record;
    int sm_max_m = 10;
    bool sm_prune = false;
    auto* sm = app.add_subcommand("search-min",
                                  "exhaustive minimal witness search");
    sm->add_option("--input", sm_input, "graph file")->required();
    sm->add_option("--max-m", sm_max_m, "largest host size tried");
    sm->add_flag("--prune-transitive", sm_prune,
                 "only verify vertex-transitive hosts (conditional result)");
    sm->add_option("--out", sm_out, "write the certificate host");
    sm->add_option("--record", sm_record, "append a run record");
    add_caps(sm, true);
    sm->callback([&] {
      rec.path = sm_record;
      code = run_search_min(sm_input, sm_max_m, sm_prune, sm_out, caps, rec);
    });

    // random-exp
    int re_n = 0, re_samples = 0, re_exact_cap = kDefaultExactMisCap;
    double re_p = 0;
    std::uint64_t re_seed = 0;
    std::string re_record;
    auto* re = app.add_subcommand("random-exp",
                                  "lower-bound values of random graphs");
    re->add_option("--n", re_n, "vertices")->required();
    re->add_option("--p", re_p, "edge probability")->required();
    re->add_option("--samples", re_samples, "sample count")->required();
    re->add_option("--seed", re_seed, "RNG seed")->required();
    re->add_option("--exact-cap", re_exact_cap,
                   "largest n for exact enumeration");
    re->add_option("--record", re_record, "append a run record");
    re->callback([&] {
      rec.path = re_record;
      code = run_random_exp(re_n, re_p, re_samples, re_seed, re_exact_cap, rec);
    });

    // coherence
    std::string co_input, co_scope = "all", co_record;
    auto* co = app.add_subcommand(
        "coherence", "check the extender composition law on a valuation witness");
    co->add_option("--input", co_input, "graph file")->required();
    co->add_option("--scope", co_scope, "substructure | all")
        ->check(CLI::IsMember({"substructure", "all"}));
    co->add_option("--record", co_record, "append a run record");
    add_caps(co);
    co->callback([&] {
      rec.path = co_record;
      code = run_coherence(co_input, co_scope, caps, rec);
    });

    // paley
    long long pq = 3;
    std::string p_base, p_out, p_record;
    bool p_verify = false;
    auto* paley = app.add_subcommand("paley", "Paley tournament host");
    paley->add_option("--q", pq, "prime = 3 mod 4")->required();
    paley->add_option("--base", p_base, "digraph file to host");
    paley->add_flag("--verify", p_verify,
                    "verify the tournament hosts the base (itself by default)");
    paley->add_option("--out", p_out, "write the tournament");
    paley->add_option("--record", p_record, "append a run record");
    add_caps(paley);
    paley->callback([&] {
      rec.path = p_record;
      code = run_paley(pq, p_base, p_verify, p_out, caps, rec);
    });

    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int c = app.exit(e);
    return c == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return code;
}

#pragma once

// Line-oriented text formats for structures and label tables, content
// digests, and append-only JSON-lines run records.
//
// Structure format: a header line `graph N` | `digraph N` | `hypergraph N R`,
// then one relation per line: `e u v` (undirected edge), `a u v` (arc u->v),
// `h v1 .. vR` (hyperedge). Indices are 0-based. Blank lines are skipped and
// `#` starts a comment. Duplicate relations and loops are rejected. Parse
// errors carry the 1-based line number.

#include <cstdint>
#include <ctime>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eppa/structures.hpp"
#include "json.hpp"

namespace eppa {

inline constexpr const char* kToolVersion = "0.1.0";

using AnyStructure = std::variant<Graph, Digraph, Hypergraph>;

namespace detail {

inline ParseError parse_error(int line, const std::string& msg) {
  return ParseError("line " + std::to_string(line) + ": " + msg);
}

inline std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

inline int parse_index(const std::string& t, int line) {
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(t, &pos);
  } catch (const std::exception&) {
    throw parse_error(line, "expected an integer, got '" + t + "'");
  }
  if (pos != t.size())
    throw parse_error(line, "expected an integer, got '" + t + "'");
  if (v < -1000000 || v > 1000000)
    throw parse_error(line, "integer out of range: " + t);
  return static_cast<int>(v);
}

// strips a trailing comment and returns the remaining tokens
inline std::vector<std::string> content_tokens(std::string line) {
  if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
  return split_tokens(line);
}

}  // namespace detail

inline AnyStructure read_structure(std::istream& is) {
  std::string line;
  int lineno = 0;

  // header
  std::vector<std::string> head;
  int head_line = 0;
  while (std::getline(is, line)) {
    ++lineno;
    head = detail::content_tokens(line);
    if (!head.empty()) {
      head_line = lineno;
      break;
    }
  }
  if (head.empty()) throw ParseError("empty input: missing header line");

  AnyStructure out;
  char rel = 0;  // expected relation keyword
  int arity = 0;
  try {
    if (head[0] == "graph" && head.size() == 2) {
      out = Graph(detail::parse_index(head[1], head_line));
      rel = 'e';
      arity = 2;
    } else if (head[0] == "digraph" && head.size() == 2) {
      out = Digraph(detail::parse_index(head[1], head_line));
      rel = 'a';
      arity = 2;
    } else if (head[0] == "hypergraph" && head.size() == 3) {
      out = Hypergraph(detail::parse_index(head[1], head_line),
                       detail::parse_index(head[2], head_line));
      rel = 'h';
      arity = std::get<Hypergraph>(out).r;
    } else {
      throw detail::parse_error(
          head_line, "expected 'graph N', 'digraph N' or 'hypergraph N R'");
    }
  } catch (const InputError& e) {
    throw detail::parse_error(head_line, e.what());
  }

  while (std::getline(is, line)) {
    ++lineno;
    auto toks = detail::content_tokens(line);
    if (toks.empty()) continue;
    if (toks[0].size() != 1 || toks[0][0] != rel)
      throw detail::parse_error(lineno, "expected relation keyword '" +
                                            std::string(1, rel) + "', got '" +
                                            toks[0] + "'");
    if (static_cast<int>(toks.size()) != arity + 1)
      throw detail::parse_error(
          lineno, "expected " + std::to_string(arity) + " vertices, got " +
                      std::to_string(toks.size() - 1));
    std::vector<int> vs;
    vs.reserve(arity);
    for (int i = 1; i <= arity; ++i)
      vs.push_back(detail::parse_index(toks[i], lineno));
    try {
      if (auto* g = std::get_if<Graph>(&out))
        g->add_edge(vs[0], vs[1]);
      else if (auto* d = std::get_if<Digraph>(&out))
        d->add_arc(vs[0], vs[1]);
      else
        std::get<Hypergraph>(out).add_edge(vs);
    } catch (const InputError& e) {
      throw detail::parse_error(lineno, e.what());
    }
  }
  return out;
}

inline AnyStructure read_structure(const std::string& text) {
  std::istringstream is(text);
  return read_structure(is);
}

inline AnyStructure read_structure_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InputError("cannot open " + path + " for reading");
  try {
    return read_structure(is);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline Graph expect_graph(const AnyStructure& s, const std::string& what) {
  if (const auto* g = std::get_if<Graph>(&s)) return *g;
  throw InputError(what + ": expected an undirected graph");
}
inline Digraph expect_digraph(const AnyStructure& s, const std::string& what) {
  if (const auto* d = std::get_if<Digraph>(&s)) return *d;
  throw InputError(what + ": expected a digraph");
}
inline Hypergraph expect_hypergraph(const AnyStructure& s,
                                    const std::string& what) {
  if (const auto* h = std::get_if<Hypergraph>(&s)) return *h;
  throw InputError(what + ": expected a hypergraph");
}

inline void write_structure(std::ostream& os, const Graph& g) {
  os << "graph " << g.n << "\n";
  for (auto [u, v] : g.edges()) os << "e " << u << " " << v << "\n";
}
inline void write_structure(std::ostream& os, const Digraph& d) {
  os << "digraph " << d.n << "\n";
  for (auto [u, v] : d.arcs()) os << "a " << u << " " << v << "\n";
}
inline void write_structure(std::ostream& os, const Hypergraph& h) {
  os << "hypergraph " << h.n << " " << h.r << "\n";
  for (const auto& e : h.hyperedges()) {
    os << "h";
    for (int v : e) os << " " << v;
    os << "\n";
  }
}
inline void write_structure(std::ostream& os, const AnyStructure& s) {
  std::visit([&](const auto& x) { write_structure(os, x); }, s);
}

template <class S>
std::string structure_text(const S& s) {
  std::ostringstream os;
  write_structure(os, s);
  return os.str();
}

template <class S>
void write_structure_file(const std::string& path, const S& s) {
  std::ofstream os(path);
  if (!os) throw InputError("cannot open " + path + " for writing");
  write_structure(os, s);
  if (!os) throw InputError("write failed for " + path);
}

// ---------------------------------------------------------------------------
// label-table sidecar: `labels N` header, then one `index TAB label` per line

inline void write_labels(std::ostream& os,
                         const std::vector<std::string>& labels) {
  os << "labels " << labels.size() << "\n";
  for (size_t i = 0; i < labels.size(); ++i)
    os << i << "\t" << labels[i] << "\n";
}

inline void write_labels_file(const std::string& path,
                              const std::vector<std::string>& labels) {
  std::ofstream os(path);
  if (!os) throw InputError("cannot open " + path + " for writing");
  write_labels(os, labels);
  if (!os) throw InputError("write failed for " + path);
}

inline std::vector<std::string> read_labels(std::istream& is) {
  std::string line;
  int lineno = 0;
  std::vector<std::string> head;
  int head_line = 0;
  while (std::getline(is, line)) {
    ++lineno;
    head = detail::content_tokens(line);
    if (!head.empty()) {
      head_line = lineno;
      break;
    }
  }
  if (head.size() != 2 || head[0] != "labels")
    throw detail::parse_error(head_line ? head_line : 1,
                              "expected 'labels N' header");
  int n = detail::parse_index(head[1], head_line);
  if (n < 0) throw detail::parse_error(head_line, "negative label count");

  // labels are raw text after the tab; no comment stripping past the header
  std::vector<std::string> out(n);
  std::vector<char> seen(n, 0);
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw detail::parse_error(lineno, "expected 'index<TAB>label'");
    int i = detail::parse_index(line.substr(0, tab), lineno);
    if (i < 0 || i >= n)
      throw detail::parse_error(lineno, "label index out of range");
    if (seen[i]) throw detail::parse_error(lineno, "duplicate label index");
    seen[i] = 1;
    out[i] = line.substr(tab + 1);
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i])
      throw ParseError("missing label for index " + std::to_string(i));
  return out;
}

inline std::vector<std::string> read_labels_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InputError("cannot open " + path + " for reading");
  try {
    return read_labels(is);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// content digest (FNV-1a, 64-bit) and run records

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string digest_hex(std::string_view s) {
  static const char* hex = "0123456789abcdef";
  std::uint64_t h = fnv1a64(s);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = hex[h & 0xf];
  return out;
}

inline std::string read_file_bytes(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw InputError("cannot open " + path + " for reading");
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

// One run of the tool: what was asked, on which input, with which seed, and
// what came out. Serialized one JSON object per line; records with equal
// inputs differ only in the timestamp field.
struct RunRecord {
  std::string command;
  std::string input_digest;
  bool has_seed = false;
  std::uint64_t seed = 0;
  nlohmann::ordered_json outputs = nlohmann::ordered_json::object();
  std::string timestamp;
  std::string version = kToolVersion;
};

inline std::string now_utc() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline nlohmann::ordered_json to_json(const RunRecord& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["input_digest"] = r.input_digest;
  if (r.has_seed) j["seed"] = r.seed;
  j["outputs"] = r.outputs;
  j["timestamp"] = r.timestamp;
  j["version"] = r.version;
  return j;
}

inline void append_run_record(const std::string& path, const RunRecord& r) {
  std::ofstream os(path, std::ios::app);
  if (!os) throw InputError("cannot open " + path + " for appending");
  os << to_json(r).dump() << "\n";
  if (!os) throw InputError("write failed for " + path);
}

}  // namespace eppa

// SPDX-License-Identifier: Apache-2.0
#include "mfpc/instance.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_set>

namespace mfpc {

namespace {

std::int64_t pair_key(int a, int b, std::int64_t range) {
  return static_cast<std::int64_t>(a) * range + b;
}

}  // namespace

void Instance::validate() const {
  if (node_count < 1) throw std::invalid_argument("node count must be >= 1");
  if (source == sink) throw std::invalid_argument("source equals sink");
  auto check_node = [&](int v, const char* what) {
    if (v < 0 || v >= node_count)
      throw std::invalid_argument(std::string(what) + " node id out of range");
  };
  check_node(source, "source");
  check_node(sink, "sink");

  std::unordered_set<std::int64_t> seen_arcs;
  seen_arcs.reserve(arcs.size());
  for (const Arc& arc : arcs) {
    check_node(arc.tail, "arc tail");
    check_node(arc.head, "arc head");
    if (arc.tail == arc.head) throw std::invalid_argument("self-loop arc");
    if (arc.capacity < 1) throw std::invalid_argument("capacity must be >= 1");
    if (!seen_arcs.insert(pair_key(arc.tail, arc.head, node_count)).second)
      throw std::invalid_argument("duplicate arc");
  }

  const int m = arc_count();
  std::unordered_set<std::int64_t> seen_pairs;
  seen_pairs.reserve(conflicts.size());
  for (const ConflictPair& pair : conflicts) {
    if (pair.first < 0 || pair.second < 0 || pair.first >= m ||
        pair.second >= m)
      throw std::invalid_argument("conflict arc index out of range");
    if (pair.first == pair.second)
      throw std::invalid_argument("conflict pair references one arc twice");
    const ConflictPair c = ConflictPair::canonical(pair.first, pair.second);
    if (!seen_pairs.insert(pair_key(c.first, c.second, m)).second)
      throw std::invalid_argument("duplicate conflict pair");
  }
}

ActivationPattern ActivationPattern::from_flow(const FlowAssignment& sol) {
  ActivationPattern pattern;
  pattern.active.reserve(sol.flow.size());
  for (std::int64_t f : sol.flow) pattern.active.push_back(f > 0);
  return pattern;
}

ParseError::ParseError(Kind kind, int line, const std::string& message)
    : std::runtime_error((kind == Kind::syntax ? "syntax error, line "
                                               : "semantic error, line ") +
                         std::to_string(line) + ": " + message),
      kind_(kind),
      line_(line) {}

namespace {

struct LineScanner {
  std::istream& in;
  int line_number = 0;
  std::string line;
  std::vector<std::string_view> tokens;

  // Advances to the next line that has content; false at end of input.
  bool next() {
    while (std::getline(in, line)) {
      ++line_number;
      tokens.clear();
      const char* p = line.data();
      const char* end = p + line.size();
      while (p < end) {
        while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
        const char* start = p;
        while (p < end && !std::isspace(static_cast<unsigned char>(*p))) ++p;
        if (p > start) tokens.emplace_back(start, p - start);
      }
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return true;
    }
    return false;
  }
};

[[noreturn]] void syntax(int line, const std::string& msg) {
  throw ParseError(ParseError::Kind::syntax, line, msg);
}

[[noreturn]] void semantic(int line, const std::string& msg) {
  throw ParseError(ParseError::Kind::semantic, line, msg);
}

std::int64_t to_int(const LineScanner& sc, std::string_view tok) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    syntax(sc.line_number,
           "expected integer, got '" + std::string(tok) + "'");
  return value;
}

void expect_tokens(const LineScanner& sc, std::size_t count,
                   const char* shape) {
  if (sc.tokens.size() != count)
    syntax(sc.line_number, std::string("expected '") + shape + "'");
}

int node_in_range(const LineScanner& sc, std::int64_t v, int n) {
  if (v < 0 || v >= n)
    semantic(sc.line_number, "node id " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

}  // namespace

Instance parse_instance(std::istream& in) {
  LineScanner sc{in};

  if (!sc.next()) syntax(sc.line_number + 1, "missing problem line");
  expect_tokens(sc, 5, "p mfpc <n> <m> <w>");
  if (sc.tokens[0] != "p" || sc.tokens[1] != "mfpc")
    syntax(sc.line_number, "expected 'p mfpc <n> <m> <w>'");
  const std::int64_t n = to_int(sc, sc.tokens[2]);
  const std::int64_t m = to_int(sc, sc.tokens[3]);
  const std::int64_t w = to_int(sc, sc.tokens[4]);
  if (n < 1) semantic(sc.line_number, "node count must be >= 1");
  if (m < 0 || w < 0) semantic(sc.line_number, "negative arc or pair count");

  Instance inst;
  inst.node_count = static_cast<int>(n);

  for (const char* which : {"s", "t"}) {
    if (!sc.next()) syntax(sc.line_number + 1, "missing terminal line");
    expect_tokens(sc, 3, "n s|t <node-id>");
    if (sc.tokens[0] != "n" || sc.tokens[1] != which)
      syntax(sc.line_number,
             std::string("expected 'n ") + which + " <node-id>'");
    const int v = node_in_range(sc, to_int(sc, sc.tokens[2]), inst.node_count);
    (*which == 's' ? inst.source : inst.sink) = v;
  }
  if (inst.source == inst.sink)
    semantic(sc.line_number, "source equals sink");

  std::unordered_set<std::int64_t> seen_arcs;
  seen_arcs.reserve(static_cast<std::size_t>(m));
  inst.arcs.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    if (!sc.next())
      syntax(sc.line_number + 1,
             "expected " + std::to_string(m) + " arc lines, got " +
                 std::to_string(i));
    expect_tokens(sc, 4, "a <tail> <head> <capacity>");
    if (sc.tokens[0] != "a")
      syntax(sc.line_number, "expected arc line 'a <tail> <head> <capacity>'");
    Arc arc;
    arc.tail = node_in_range(sc, to_int(sc, sc.tokens[1]), inst.node_count);
    arc.head = node_in_range(sc, to_int(sc, sc.tokens[2]), inst.node_count);
    arc.capacity = to_int(sc, sc.tokens[3]);
    if (arc.tail == arc.head) semantic(sc.line_number, "self-loop arc");
    if (arc.capacity < 1)
      semantic(sc.line_number, "capacity must be >= 1");
    if (!seen_arcs.insert(pair_key(arc.tail, arc.head, inst.node_count))
             .second)
      semantic(sc.line_number, "duplicate arc");
    inst.arcs.push_back(arc);
  }

  std::unordered_set<std::int64_t> seen_pairs;
  seen_pairs.reserve(static_cast<std::size_t>(w));
  inst.conflicts.reserve(static_cast<std::size_t>(w));
  for (std::int64_t i = 0; i < w; ++i) {
    if (!sc.next())
      syntax(sc.line_number + 1,
             "expected " + std::to_string(w) + " conflict lines, got " +
                 std::to_string(i));
    expect_tokens(sc, 3, "c <arc-index-1> <arc-index-2>");
    if (sc.tokens[0] != "c")
      syntax(sc.line_number, "expected conflict line 'c <i> <j>'");
    const std::int64_t a = to_int(sc, sc.tokens[1]);
    const std::int64_t b = to_int(sc, sc.tokens[2]);
    if (a < 0 || a >= m || b < 0 || b >= m)
      semantic(sc.line_number, "conflict arc index out of range");
    if (a == b)
      semantic(sc.line_number, "conflict pair references one arc twice");
    const ConflictPair pair =
        ConflictPair::canonical(static_cast<int>(a), static_cast<int>(b));
    if (!seen_pairs.insert(pair_key(pair.first, pair.second, m)).second)
      semantic(sc.line_number, "duplicate conflict pair");
    inst.conflicts.push_back(pair);
  }

  if (sc.next()) syntax(sc.line_number, "unexpected trailing line");
  return inst;
}

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

void serialize_instance(const Instance& inst, std::ostream& out) {
  out << "p mfpc " << inst.node_count << ' ' << inst.arc_count() << ' '
      << inst.conflict_count() << '\n';
  out << "n s " << inst.source << '\n';
  out << "n t " << inst.sink << '\n';
  for (const Arc& arc : inst.arcs)
    out << "a " << arc.tail << ' ' << arc.head << ' ' << arc.capacity << '\n';
  for (const ConflictPair& pair : inst.conflicts)
    out << "c " << pair.first << ' ' << pair.second << '\n';
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  serialize_instance(inst, out);
  return out.str();
}

FlowAssignment parse_solution(std::istream& in, const Instance& inst) {
  LineScanner sc{in};
  FlowAssignment sol;
  sol.flow.assign(inst.arcs.size(), 0);

  if (!sc.next()) syntax(sc.line_number + 1, "missing 'z <total>' line");
  expect_tokens(sc, 2, "z <total>");
  if (sc.tokens[0] != "z") syntax(sc.line_number, "expected 'z <total>'");
  sol.total = to_int(sc, sc.tokens[1]);
  if (sol.total < 0) semantic(sc.line_number, "negative total");

  std::vector<bool> seen(inst.arcs.size(), false);
  while (sc.next()) {
    expect_tokens(sc, 3, "f <arc-index> <flow>");
    if (sc.tokens[0] != "f")
      syntax(sc.line_number, "expected 'f <arc-index> <flow>'");
    const std::int64_t arc = to_int(sc, sc.tokens[1]);
    if (arc < 0 || arc >= inst.arc_count())
      semantic(sc.line_number, "arc index out of range");
    if (seen[static_cast<std::size_t>(arc)])
      semantic(sc.line_number, "duplicate flow line for arc " +
                                   std::to_string(arc));
    seen[static_cast<std::size_t>(arc)] = true;
    const std::int64_t flow = to_int(sc, sc.tokens[2]);
    if (flow < 0) semantic(sc.line_number, "negative flow");
    sol.flow[static_cast<std::size_t>(arc)] = flow;
  }
  return sol;
}

FlowAssignment parse_solution(const std::string& text, const Instance& inst) {
  std::istringstream in(text);
  return parse_solution(in, inst);
}

void serialize_solution(const FlowAssignment& sol, std::ostream& out) {
  out << "z " << sol.total << '\n';
  for (std::size_t i = 0; i < sol.flow.size(); ++i)
    if (sol.flow[i] > 0) out << "f " << i << ' ' << sol.flow[i] << '\n';
}

std::string serialize_solution(const FlowAssignment& sol) {
  std::ostringstream out;
  serialize_solution(sol, out);
  return out.str();
}

std::string Violation::message() const {
  std::ostringstream out;
  switch (kind) {
    case ViolationKind::capacity:
      out << "arc " << arc << ": flow " << actual << " outside [0, "
          << expected << "]";
      break;
    case ViolationKind::conservation:
      out << "node " << node << ": inflow " << actual << " != outflow "
          << expected;
      break;
    case ViolationKind::source_imbalance:
      out << "source " << node << ": net outflow " << actual
          << " != declared total " << expected;
      break;
    case ViolationKind::sink_imbalance:
      out << "sink " << node << ": net inflow " << actual
          << " != declared total " << expected;
      break;
    case ViolationKind::conflict:
      out << "conflict pair " << pair << ": arcs " << arc << " and "
          << static_cast<int>(expected) << " both carry positive flow";
      break;
  }
  return out.str();
}

FeasibilityReport check_feasible(const Instance& inst,
                                 const FlowAssignment& sol) {
  if (sol.flow.size() != inst.arcs.size())
    throw std::invalid_argument("flow length does not match arc count");

  FeasibilityReport report;
  std::vector<std::int64_t> in(inst.node_count, 0), out(inst.node_count, 0);

  for (int a = 0; a < inst.arc_count(); ++a) {
    const std::int64_t f = sol.flow[static_cast<std::size_t>(a)];
    const Arc& arc = inst.arcs[static_cast<std::size_t>(a)];
    if (f < 0 || f > arc.capacity)
      report.violations.push_back({ViolationKind::capacity, a, -1, -1, f,
                                   arc.capacity});
    out[arc.tail] += f;
    in[arc.head] += f;
  }

  for (int v = 0; v < inst.node_count; ++v) {
    if (v == inst.source || v == inst.sink) continue;
    if (in[v] != out[v])
      report.violations.push_back(
          {ViolationKind::conservation, -1, v, -1, in[v], out[v]});
  }

  const std::int64_t source_net = out[inst.source] - in[inst.source];
  if (source_net != sol.total)
    report.violations.push_back({ViolationKind::source_imbalance, -1,
                                 inst.source, -1, source_net, sol.total});
  const std::int64_t sink_net = in[inst.sink] - out[inst.sink];
  if (sink_net != sol.total)
    report.violations.push_back({ViolationKind::sink_imbalance, -1, inst.sink,
                                 -1, sink_net, sol.total});

  for (int p = 0; p < static_cast<int>(inst.conflicts.size()); ++p) {
    const ConflictPair& pair = inst.conflicts[static_cast<std::size_t>(p)];
    if (sol.flow[static_cast<std::size_t>(pair.first)] > 0 &&
        sol.flow[static_cast<std::size_t>(pair.second)] > 0)
      report.violations.push_back({ViolationKind::conflict, pair.first, -1, p,
                                   0, pair.second});
  }
  return report;
}

std::vector<std::vector<int>> conflict_adjacency(const Instance& inst) {
  std::vector<std::vector<int>> partners(inst.arcs.size());
  for (const ConflictPair& pair : inst.conflicts) {
    partners[static_cast<std::size_t>(pair.first)].push_back(pair.second);
    partners[static_cast<std::size_t>(pair.second)].push_back(pair.first);
  }
  return partners;
}

}  // namespace mfpc

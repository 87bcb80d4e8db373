#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wed/graph.hpp"

namespace wed {

/// Disjoint union of paths, given by path sizes, e.g. {5,2,2}.
struct LinearForestSpec {
  std::vector<int> path_lengths;

  LinearForestSpec() = default;
  explicit LinearForestSpec(std::vector<int> lengths);

  int total_vertices() const;
  std::string name() const;  // "P5+P2+P2"
};

/// Host vertices realizing a pattern, listed end-to-end per path component,
/// components in spec order.
struct Embedding {
  std::string pattern;
  std::vector<int> vertices;
};

/// Hereditary class identifiers used by the membership oracle and the CLI.
struct ClassId {
  enum class Kind { P5kP2Free, P4P2Free, P6S122Free, TwoP3S122Free, P5Free, P6Free, KP2Free };
  Kind kind = Kind::P4P2Free;
  int k = 0;  // parameter for P5kP2Free / KP2Free

  static ClassId p5kp2(int k) { return {Kind::P5kP2Free, k}; }
  static ClassId p4p2() { return {Kind::P4P2Free, 0}; }
  static ClassId p6s122() { return {Kind::P6S122Free, 0}; }
  static ClassId two_p3_s122() { return {Kind::TwoP3S122Free, 0}; }
  static ClassId p5free() { return {Kind::P5Free, 0}; }
  static ClassId p6free() { return {Kind::P6Free, 0}; }
  static ClassId kp2(int k) { return {Kind::KP2Free, k}; }

  std::string name() const;
};

/// Finds an induced copy of the given linear forest, or nothing. Exact
/// backtracking, lexicographically smallest witness under the symmetry
/// conventions (path endpoints ordered, equal-length components ordered).
std::optional<Embedding> find_induced_linear_forest(const Graph& g, const LinearForestSpec& spec);

/// X = N(H), Y = A(H); disjoint and X ∪ Y ∪ H = V.
std::pair<VertexSet, VertexSet> split_neighborhood(const Graph& g, const VertexSet& h);

bool is_independent(const Graph& g, const VertexSet& s);

struct CographCheck {
  bool is_cograph = true;
  std::optional<Embedding> p4;  // present iff not a cograph
};

/// Recognition by the disconnected/co-disconnected recursion; on failure a
/// concrete induced P4 is produced.
CographCheck is_cograph(const Graph& g);

/// Generic induced-pattern search for small fixed patterns.
std::optional<Embedding> find_induced_pattern(const Graph& g, const Graph& pattern,
                                              const std::string& name);

std::optional<Embedding> find_claw(const Graph& g);
std::optional<Embedding> find_s122(const Graph& g);

/// The claw subdivided twice on two legs: center with branches 1, 2, 2.
Graph s122_pattern();
Graph claw_pattern();

/// Exhaustive membership check (intended for n <= ~16): certifies that no
/// forbidden pattern of the class occurs.
bool in_class_bruteforce(const Graph& g, const ClassId& c);

/// The forbidden pattern found, if any (the reason membership fails).
std::optional<Embedding> class_violation(const Graph& g, const ClassId& c);

}  // namespace wed

#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "wed/graph.hpp"

namespace wed {

/// Vertex weight over the naturals extended with an absorbing Infinite value.
/// Addition saturates at Infinite; the order places Infinite above every
/// finite value.
class ExtendedWeight {
 public:
  constexpr ExtendedWeight() = default;

  static constexpr ExtendedWeight finite(std::uint64_t value) {
    ExtendedWeight w;
    w.value_ = value;
    w.infinite_ = false;
    return w;
  }

  static constexpr ExtendedWeight infinite() {
    ExtendedWeight w;
    w.infinite_ = true;
    return w;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  constexpr std::uint64_t finite_value() const {
    if (infinite_) throw std::logic_error("finite_value() on infinite weight");
    return value_;
  }

  friend constexpr ExtendedWeight operator+(ExtendedWeight a, ExtendedWeight b) {
    if (a.infinite_ || b.infinite_) return infinite();
    std::uint64_t sum = a.value_ + b.value_;
    if (sum < a.value_) return infinite();  // clamp on overflow
    return finite(sum);
  }

  ExtendedWeight& operator+=(ExtendedWeight other) {
    *this = *this + other;
    return *this;
  }

  friend constexpr bool operator==(ExtendedWeight a, ExtendedWeight b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

  friend constexpr bool operator<(ExtendedWeight a, ExtendedWeight b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }

  friend constexpr bool operator<=(ExtendedWeight a, ExtendedWeight b) {
    return a < b || a == b;
  }
  friend constexpr bool operator>(ExtendedWeight a, ExtendedWeight b) { return b < a; }
  friend constexpr bool operator>=(ExtendedWeight a, ExtendedWeight b) { return b <= a; }
  friend constexpr bool operator!=(ExtendedWeight a, ExtendedWeight b) { return !(a == b); }

  std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

/// A graph together with one extended weight per vertex.
struct WeightedGraph {
  Graph graph;
  std::vector<ExtendedWeight> weights;

  WeightedGraph() = default;
  WeightedGraph(Graph g, std::vector<ExtendedWeight> w)
      : graph(std::move(g)), weights(std::move(w)) {
    if (static_cast<int>(weights.size()) != graph.vertex_count())
      throw std::invalid_argument("weight vector length must equal vertex count");
  }

  /// All weights set to the same finite value (default 1).
  static WeightedGraph uniform(Graph g, std::uint64_t value = 1) {
    std::vector<ExtendedWeight> w(g.vertex_count(), ExtendedWeight::finite(value));
    return WeightedGraph(std::move(g), std::move(w));
  }

  int vertex_count() const { return graph.vertex_count(); }

  ExtendedWeight total(const std::vector<int>& vertices) const {
    ExtendedWeight t = ExtendedWeight::finite(0);
    for (int v : vertices) t += weights.at(v);
    return t;
  }
};

}  // namespace wed

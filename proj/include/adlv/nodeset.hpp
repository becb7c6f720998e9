#ifndef ADLV_NODESET_HPP
#define ADLV_NODESET_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace adlv {

// A subset of the Dynkin diagram nodes of one root system. Nodes are
// 0-based internally; all text/JSON output is 1-based.
struct NodeSet {
  std::uint32_t bits = 0;

  NodeSet() = default;
  NodeSet(std::initializer_list<int> nodes) {
    for (int i : nodes) add(i);
  }

  static NodeSet full(int rank) {
    NodeSet s;
    s.bits = (rank >= 32) ? ~std::uint32_t(0) : ((std::uint32_t(1) << rank) - 1);
    return s;
  }

  bool contains(int i) const { return (bits >> i) & 1u; }
  void add(int i) { bits |= (std::uint32_t(1) << i); }
  void remove(int i) { bits &= ~(std::uint32_t(1) << i); }
  int size() const { return __builtin_popcount(bits); }
  bool empty() const { return bits == 0; }

  bool subset_of(const NodeSet& o) const { return (bits & ~o.bits) == 0; }
  bool proper_subset_of(const NodeSet& o) const { return subset_of(o) && bits != o.bits; }

  NodeSet complement(int rank) const {
    NodeSet s = full(rank);
    s.bits &= ~bits;
    return s;
  }

  std::vector<int> nodes(int rank) const {
    std::vector<int> out;
    for (int i = 0; i < rank; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  bool operator==(const NodeSet& o) const { return bits == o.bits; }
  bool operator!=(const NodeSet& o) const { return bits != o.bits; }
  bool operator<(const NodeSet& o) const { return bits < o.bits; }
};

} // namespace adlv

#endif

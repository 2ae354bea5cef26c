#include "betti/detail/bmatching.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

namespace betti::detail {

namespace {

using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using Graph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, long,
                    boost::property<boost::edge_residual_capacity_t, long,
                                    boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
using Edge = Traits::edge_descriptor;

}  // namespace

std::vector<long> max_bmatching(std::span<const long> left_capacity,
                                std::span<const long> right_capacity,
                                std::span<const BipartiteEdge> edges) {
  const auto num_left = static_cast<int>(left_capacity.size());
  const auto num_right = static_cast<int>(right_capacity.size());
  const int source = num_left + num_right;
  const int sink = source + 1;
  Graph g(static_cast<std::size_t>(sink) + 1);
  auto capacity = boost::get(boost::edge_capacity, g);
  auto reverse = boost::get(boost::edge_reverse, g);
  auto residual = boost::get(boost::edge_residual_capacity, g);

  auto connect = [&](int u, int v, long cap) {
    Edge e = boost::add_edge(u, v, g).first;
    Edge back = boost::add_edge(v, u, g).first;
    capacity[e] = cap;
    capacity[back] = 0;
    reverse[e] = back;
    reverse[back] = e;
    return e;
  };

  for (int l = 0; l < num_left; ++l) connect(source, l, left_capacity[l]);
  for (int r = 0; r < num_right; ++r) connect(num_left + r, sink, right_capacity[r]);
  std::vector<Edge> middle;
  middle.reserve(edges.size());
  for (const auto& e : edges) {
    const long cap = std::min(left_capacity[e.left], right_capacity[e.right]);
    middle.push_back(connect(e.left, num_left + e.right, cap));
  }

  boost::push_relabel_max_flow(g, source, sink);

  std::vector<long> flow;
  flow.reserve(middle.size());
  for (const auto& e : middle) flow.push_back(capacity[e] - residual[e]);
  return flow;
}

}  // namespace betti::detail

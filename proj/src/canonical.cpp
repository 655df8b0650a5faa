#include "tropglue/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace tropglue {

namespace {

struct Neighbor {
  std::size_t other;
  IntVec2 toward;  // derivative oriented away from this vertex
};

// Individualization-refinement search. Explores every branch, so the number of
// leaves sharing the best certificate is the order of the vertex automorphism group.
class Canonizer {
 public:
  explicit Canonizer(const CombinatorialType& type) : type_(type) {
    const std::size_t n = type.vertices.size();
    adj_.resize(n);
    for (const auto& e : type.internal_edges) {
      const auto t = type.vertex_index(e.tail);
      const auto h = type.vertex_index(e.head);
      adj_[t].push_back({h, e.derivative});
      adj_[h].push_back({t, -e.derivative});
    }
    std::vector<std::string> attrs(n);
    for (std::size_t i = 0; i < n; ++i) attrs[i] = vertex_attr(i);
    attrs_ = attrs;
    std::vector<std::string> sorted = attrs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> colors(n);
    for (std::size_t i = 0; i < n; ++i) {
      colors[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), attrs[i]) - sorted.begin());
    }
    initial_ = refine(std::move(colors));
  }

  void run() { search(initial_); }

  const std::string& best() const { return best_; }
  BigInt vertex_automorphisms() const { return leaves_at_best_; }
  const std::vector<std::size_t>& best_order() const { return best_order_; }

 private:
  std::string vertex_attr(std::size_t i) const {
    const auto& v = type_.vertices[i];
    std::vector<int> labels;
    for (const auto& end : type_.labeled_ends) {
      if (end.vertex == v.id) labels.push_back(end.label);
    }
    std::sort(labels.begin(), labels.end());
    std::vector<IntVec2> rays;
    for (const auto& u : type_.unbounded_ends) {
      if (u.vertex == v.id) rays.push_back(u.direction);
    }
    std::sort(rays.begin(), rays.end());
    std::ostringstream os;
    os << face_name(v.face) << ';' << v.base_degree << ";L";
    for (int l : labels) os << l << ',';
    os << ";R";
    for (auto r : rays) os << r.x << ' ' << r.y << ',';
    return os.str();
  }

  static int cell_count(const std::vector<int>& colors) {
    std::vector<int> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  template <typename Sig>
  static std::vector<int> rank(const std::vector<Sig>& sigs) {
    std::vector<Sig> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(sigs.size());
    for (std::size_t i = 0; i < sigs.size(); ++i) {
      out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) - sorted.begin());
    }
    return out;
  }

  std::vector<int> refine(std::vector<int> colors) const {
    using Sig = std::pair<int, std::vector<std::tuple<int, std::int64_t, std::int64_t>>>;
    int cells = cell_count(colors);
    while (true) {
      std::vector<Sig> sigs(colors.size());
      for (std::size_t i = 0; i < colors.size(); ++i) {
        sigs[i].first = colors[i];
        for (const auto& nb : adj_[i]) sigs[i].second.emplace_back(colors[nb.other], nb.toward.x, nb.toward.y);
        std::sort(sigs[i].second.begin(), sigs[i].second.end());
      }
      auto next = rank(sigs);
      const int next_cells = cell_count(next);
      colors = std::move(next);
      if (next_cells == cells) return colors;
      cells = next_cells;
    }
  }

  std::string certificate(const std::vector<int>& colors, std::vector<std::size_t>& order) const {
    const std::size_t n = colors.size();
    order.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) order[static_cast<std::size_t>(colors[i])] = i;
    std::vector<std::tuple<int, int, std::int64_t, std::int64_t>> edges;
    for (const auto& e : type_.internal_edges) {
      int a = colors[type_.vertex_index(e.tail)];
      int b = colors[type_.vertex_index(e.head)];
      IntVec2 u = e.derivative;
      if (a > b) {
        std::swap(a, b);
        u = -u;
      } else if (a == b) {
        u = std::max(u, -u);
      }
      edges.emplace_back(a, b, u.x, u.y);
    }
    std::sort(edges.begin(), edges.end());
    std::ostringstream os;
    os << "V" << n << '[';
    for (std::size_t k = 0; k < n; ++k) os << attrs_[order[k]] << '|';
    os << "]E" << edges.size() << '[';
    for (const auto& [a, b, x, y] : edges) os << a << '-' << b << ':' << x << ',' << y << '|';
    os << ']';
    return os.str();
  }

  void search(const std::vector<int>& colors) {
    const std::size_t n = colors.size();
    if (static_cast<std::size_t>(cell_count(colors)) == n) {
      std::vector<std::size_t> order;
      std::string cert = certificate(colors, order);
      if (best_.empty() || cert < best_) {
        best_ = std::move(cert);
        best_order_ = std::move(order);
        leaves_at_best_ = 1;
      } else if (cert == best_) {
        leaves_at_best_ += 1;
      }
      return;
    }
    std::map<int, std::vector<std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i) cells[colors[i]].push_back(i);
    const std::vector<std::size_t>* target = nullptr;
    for (const auto& [c, members] : cells) {
      if (members.size() > 1) {
        target = &members;
        break;
      }
    }
    for (std::size_t v : *target) {
      std::vector<std::pair<int, int>> sig(n);
      for (std::size_t i = 0; i < n; ++i) sig[i] = {colors[i], (i == v || colors[i] != colors[v]) ? 0 : 1};
      search(refine(rank(sig)));
    }
  }

  const CombinatorialType& type_;
  std::vector<std::vector<Neighbor>> adj_;
  std::vector<std::string> attrs_;
  std::vector<int> initial_;
  std::string best_;
  std::vector<std::size_t> best_order_;
  BigInt leaves_at_best_ = 0;
};

BigInt factorial(std::size_t k) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

}  // namespace

std::string canonical_form(const CombinatorialType& type) {
  type.validate();
  if (type.vertices.empty()) return "V0[]E0[]";
  Canonizer c(type);
  c.run();
  return c.best();
}

BigInt aut_order(const CombinatorialType& type) {
  type.validate();
  if (type.vertices.empty()) return 1;
  Canonizer c(type);
  c.run();
  BigInt order = c.vertex_automorphisms();
  // Identical parallel edges can be permuted independently of the vertex map,
  // and a zero-derivative loop can be reversed.
  std::map<std::tuple<std::size_t, std::size_t, IntVec2>, std::size_t> groups;
  for (const auto& e : type.internal_edges) {
    std::size_t a = type.vertex_index(e.tail);
    std::size_t b = type.vertex_index(e.head);
    IntVec2 u = e.derivative;
    if (a > b) {
      std::swap(a, b);
      u = -u;
    } else if (a == b) {
      u = std::max(u, -u);
      if (u.is_zero()) order *= 2;
    }
    ++groups[{a, b, u}];
  }
  for (const auto& [key, count] : groups) order *= factorial(count);
  return order;
}

}  // namespace tropglue

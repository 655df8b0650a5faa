#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "tropglue/canonical.hpp"
#include "tropglue/enumerate.hpp"

using namespace tropglue;

namespace {

CombinatorialType sample() {
  CombinatorialType t;
  t.vertices = {{1, FaceId::Int, 0}, {2, FaceId::Int, 0}, {3, FaceId::Int, 0}, {4, FaceId::Int, 0}};
  t.internal_edges = {{1, 1, 2, {1, 0}}, {2, 2, 3, {1, 1}}, {3, 2, 4, {0, -1}}};
  t.labeled_ends = {{1, 1}, {2, 3}};
  t.unbounded_ends = {{1, {-1, 0}}, {3, {1, 1}}, {4, {0, -1}}, {4, {1, 0}}};
  return t;
}

}  // namespace

TEST_CASE("permuting ids keeps the canonical form") {
  const auto base = canonical_form(sample());
  auto t = sample();
  const std::map<int, int> m{{1, 40}, {2, 10}, {3, 30}, {4, 20}};
  for (auto& v : t.vertices) v.id = m.at(v.id);
  for (auto& e : t.internal_edges) {
    e.tail = m.at(e.tail);
    e.head = m.at(e.head);
  }
  for (auto& e : t.labeled_ends) e.vertex = m.at(e.vertex);
  for (auto& u : t.unbounded_ends) u.vertex = m.at(u.vertex);
  std::reverse(t.vertices.begin(), t.vertices.end());
  CHECK(canonical_form(t) == base);
}

TEST_CASE("reversing an edge keeps the canonical form") {
  auto t = sample();
  std::swap(t.internal_edges[1].tail, t.internal_edges[1].head);
  t.internal_edges[1].derivative = -t.internal_edges[1].derivative;
  CHECK(canonical_form(t) == canonical_form(sample()));
}

TEST_CASE("different data gives different forms") {
  auto t = sample();
  t.internal_edges[1].derivative = {2, 1};
  CHECK(canonical_form(t) != canonical_form(sample()));
  t = sample();
  std::swap(t.labeled_ends[0].label, t.labeled_ends[1].label);
  CHECK(canonical_form(t) != canonical_form(sample()));
  t = sample();
  t.vertices[3].face = FaceId::S12;
  CHECK(canonical_form(t) != canonical_form(sample()));
}

TEST_CASE("canonical form is deterministic and separates enumerated curves") {
  const auto r = count_nd_retry(3, 2, 8);
  std::set<std::string> forms;
  std::mt19937_64 rng(9);
  for (const auto& c : r.curves) {
    CHECK(canonical_form(c.type) == c.canonical);
    forms.insert(c.canonical);
    auto t = c.type;
    std::shuffle(t.internal_edges.begin(), t.internal_edges.end(), rng);
    std::shuffle(t.unbounded_ends.begin(), t.unbounded_ends.end(), rng);
    std::shuffle(t.vertices.begin(), t.vertices.end(), rng);
    CHECK(canonical_form(t) == c.canonical);
  }
  CHECK(forms.size() == r.curves.size());
}

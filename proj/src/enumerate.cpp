#include "tropglue/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <thread>

#include "tropglue/canonical.hpp"
#include "tropglue/error.hpp"

namespace tropglue {

PointMap PointConfig::as_map() const {
  PointMap m;
  for (const auto& [label, p] : points) m[label] = p;
  return m;
}

PointConfig generate_plane_config(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-1'000'000'000L, 1'000'000'000L);
  const long denominator = 1'000'003L;
  PointConfig config;
  config.domain = Domain::plane();
  config.seed = seed;
  for (int i = 1; i <= n; ++i) {
    const long x = coord(rng);
    const long y = coord(rng);
    config.points.push_back({i, {make_rat(x, denominator), make_rat(y, denominator)}});
  }
  return config;
}

BigInt mikhalkin_multiplicity(const CombinatorialType& type) {
  BigInt m = 1;
  for (const auto& v : type.vertices) {
    const auto inc = type.incidences(v.id);
    const auto marked = type.contracted_count(v.id);
    if (marked > 0) {
      if (marked != 1 || inc.size() != 2 || inc[0].away != -inc[1].away) {
        throw Error(ErrorCode::Genericity, "marked vertex " + std::to_string(v.id) + " is not a point on an edge");
      }
      continue;
    }
    if (inc.size() != 3) {
      throw Error(ErrorCode::Genericity,
                  "vertex " + std::to_string(v.id) + " has valence " + std::to_string(inc.size()));
    }
    const std::int64_t w = wedge(inc[0].away, inc[1].away);
    m *= static_cast<unsigned long>(w < 0 ? -w : w);
  }
  return m;
}

namespace {

using Mask = std::uint32_t;
using Counts = std::vector<int>;

struct Piece;
using PiecePtr = std::shared_ptr<const Piece>;

// A rooted part of a plane curve. `root_dir` is the derivative of the edge from
// the piece's root vertex toward its parent. Rigid pieces (as many ends as
// points) have a fixed root ray; flexible pieces (one more end) are solved
// against the parent vertex they must reach.
struct Piece {
  enum class Kind { End, Marked, Split };
  Kind kind = Kind::End;
  IntVec2 end_dir;
  int point = -1;  // index into the configuration (Marked)
  RatPoint root;
  IntVec2 root_dir;
  PiecePtr a;
  PiecePtr b;
};

struct SplitTask {
  Counts first;
  Mask first_points;
};

class Search {
 public:
  Search(std::vector<IntVec2> dirs, std::vector<RatPoint> points)
      : dirs_(std::move(dirs)), points_(std::move(points)) {}

  IntVec2 root_dir(const Counts& s) const {
    IntVec2 sum;
    for (std::size_t i = 0; i < s.size(); ++i) sum += s[i] * dirs_[i];
    return -sum;
  }

  static int total(const Counts& s) {
    int k = 0;
    for (int c : s) k += c;
    return k;
  }

  template <typename F>
  static void for_each_subcount(const Counts& s, F&& f) {
    Counts sub(s.size(), 0);
    while (true) {
      f(sub);
      std::size_t i = 0;
      while (i < s.size() && sub[i] == s[i]) sub[i++] = 0;
      if (i == s.size()) return;
      ++sub[i];
    }
  }

  static Counts minus(const Counts& a, const Counts& b) {
    Counts out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
  }

  std::shared_ptr<const std::vector<PiecePtr>> rigid(const Counts& s, Mask p) {
    const auto key = std::make_pair(s, p);
    {
      std::lock_guard lock(memo_mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    auto out = std::make_shared<std::vector<PiecePtr>>();
    const IntVec2 r = root_dir(s);
    if (!r.is_zero() && total(s) == std::popcount(p) && p != 0) {
      // Root at a marked point.
      for (Mask rest = p; rest; rest &= rest - 1) {
        const int j = std::countr_zero(rest);
        for (auto& child : flexible(s, p & ~(Mask{1} << j), points_[static_cast<std::size_t>(j)])) {
          auto piece = std::make_shared<Piece>();
          piece->kind = Piece::Kind::Marked;
          piece->point = j;
          piece->root = points_[static_cast<std::size_t>(j)];
          piece->root_dir = r;
          piece->a = std::move(child);
          out->push_back(std::move(piece));
        }
      }
      // Root at a trivalent vertex joining two rigid pieces.
      const Mask low = p & (~p + 1);
      for_each_subcount(s, [&](const Counts& sa) {
        const int ka = total(sa);
        const Counts sb = minus(s, sa);
        const int kb = total(sb);
        if (ka == 0 || kb == 0) return;
        for (Mask pa = p;; pa = (pa - 1) & p) {
          if ((pa & low) && std::popcount(pa) == ka && std::popcount(p & ~pa) == kb) {
            join_rigid(sa, pa, sb, p & ~pa, r, *out);
          }
          if (pa == 0) break;
        }
      });
    }
    std::lock_guard lock(memo_mutex_);
    return memo_.emplace(key, std::move(out)).first->second;
  }

  std::vector<PiecePtr> flexible(const Counts& s, Mask p, const RatPoint& target) {
    std::vector<PiecePtr> out;
    const IntVec2 r = root_dir(s);
    const int k = total(s);
    if (r.is_zero() || k != std::popcount(p) + 1) return out;
    if (k == 1) {
      auto piece = std::make_shared<Piece>();
      piece->kind = Piece::Kind::End;
      piece->end_dir = -r;
      piece->root_dir = r;
      out.push_back(std::move(piece));
      return out;
    }
    // The root vertex joins a rigid piece A and a flexible piece B. It lies on
    // A's root ray, and the root edge reaches `target` along r.
    for_each_subcount(s, [&](const Counts& sa) {
      const int ka = total(sa);
      const Counts sb = minus(s, sa);
      if (ka == 0 || total(sb) == 0) return;
      for (Mask pa = p;; pa = (pa - 1) & p) {
        if (std::popcount(pa) == ka) {
          for (const auto& a : *rigid(sa, pa)) {
            const std::int64_t w = wedge(a->root_dir, r);
            const RatPoint delta = target - a->root;
            if (w == 0) {
              if (wedge(delta, r) == 0) throw degenerate("root ray collinear with its target", p | pa);
              continue;
            }
            const Rat t = wedge(delta, r) / Rat(static_cast<long>(w));
            const Rat lambda = wedge(a->root_dir, delta) / Rat(static_cast<long>(w));
            if ((t == 0 && lambda >= 0) || (lambda == 0 && t >= 0)) {
              throw degenerate("vertex meets a marked point or another vertex", p);
            }
            if (t <= 0 || lambda <= 0) continue;
            const RatPoint v = a->root + t * a->root_dir;
            for (auto& b : flexible(sb, p & ~pa, v)) {
              auto piece = std::make_shared<Piece>();
              piece->kind = Piece::Kind::Split;
              piece->root = v;
              piece->root_dir = r;
              piece->a = a;
              piece->b = std::move(b);
              out.push_back(std::move(piece));
            }
          }
        }
        if (pa == 0) break;
      }
    });
    return out;
  }

  const std::vector<RatPoint>& points() const { return points_; }

 private:
  void join_rigid(const Counts& sa, Mask pa, const Counts& sb, Mask pb, IntVec2 r, std::vector<PiecePtr>& out) {
    const auto left = rigid(sa, pa);
    if (left->empty()) return;
    const auto right = rigid(sb, pb);
    for (const auto& a : *left) {
      for (const auto& b : *right) {
        const std::int64_t w = wedge(a->root_dir, b->root_dir);
        const RatPoint delta = b->root - a->root;
        if (w == 0) {
          if (wedge(delta, a->root_dir) == 0) throw degenerate("two root rays are collinear", pa | pb);
          continue;
        }
        const Rat t = wedge(delta, b->root_dir) / Rat(static_cast<long>(w));
        const Rat u = wedge(delta, a->root_dir) / Rat(static_cast<long>(w));
        if ((t == 0 && u >= 0) || (u == 0 && t >= 0)) {
          throw degenerate("root rays meet at a ray origin", pa | pb);
        }
        if (t <= 0 || u <= 0) continue;
        auto piece = std::make_shared<Piece>();
        piece->kind = Piece::Kind::Split;
        piece->root = a->root + t * a->root_dir;
        piece->root_dir = r;
        piece->a = a;
        piece->b = b;
        out.push_back(std::move(piece));
      }
    }
  }

  static Error degenerate(const std::string& what, Mask points) {
    std::string labels;
    for (Mask m = points; m; m &= m - 1) {
      if (!labels.empty()) labels += ",";
      labels += std::to_string(std::countr_zero(m) + 1);
    }
    return Error(ErrorCode::Genericity, "non-generic configuration: " + what + " (points {" + labels + "})");
  }

  std::vector<IntVec2> dirs_;
  std::vector<RatPoint> points_;
  std::mutex memo_mutex_;
  std::map<std::pair<Counts, Mask>, std::shared_ptr<const std::vector<PiecePtr>>> memo_;
};

class CurveBuilder {
 public:

  int add_vertex(const RatPoint& pos) {
    const int id = next_vertex_++;
    type.vertices.push_back({id, FaceId::Int, 0});
    positions[id] = pos;
    return id;
  }

  void attach(const Piece& piece, int parent) {
    switch (piece.kind) {
      case Piece::Kind::End:
        type.unbounded_ends.push_back({parent, piece.end_dir});
        return;
      case Piece::Kind::Marked: {
        const int v = add_vertex(piece.root);
        type.labeled_ends.push_back({piece.point + 1, v});
        attach(*piece.a, v);
        type.internal_edges.push_back({next_edge_++, v, parent, piece.root_dir});
        return;
      }
      case Piece::Kind::Split: {
        const int v = add_vertex(piece.root);
        attach(*piece.a, v);
        attach(*piece.b, v);
        type.internal_edges.push_back({next_edge_++, v, parent, piece.root_dir});
        return;
      }
    }
  }

  CombinatorialType type;
  std::map<int, RatPoint> positions;

 private:
  int next_vertex_ = 0;
  int next_edge_ = 0;
};

MarkedCurve finish_curve(CurveBuilder& builder, const Domain& domain, const PointMap& points) {
  auto& type = builder.type;
  std::sort(type.labeled_ends.begin(), type.labeled_ends.end(),
            [](const LabeledEnd& a, const LabeledEnd& b) { return a.label < b.label; });
  MarkedCurve curve;
  curve.canonical = canonical_form(type);
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::Genericity, "non-generic configuration: curve " + curve.canonical + " " + why);
  };
  if (genus(type) != 0) throw Error(ErrorCode::Internal, "enumerated curve has a cycle");
  for (const auto& v : type.vertices) {
    if (!balancing_defect(type, domain, v.id).is_zero()) {
      throw Error(ErrorCode::Internal, "enumerated curve is unbalanced at vertex " + std::to_string(v.id));
    }
  }
  auto result = realize(type, domain, points);
  if (!result.consistent) throw Error(ErrorCode::Internal, "enumerated curve does not satisfy its constraints");
  if (result.deformation_dim > 0) throw fail("deforms in a family of dimension " + std::to_string(result.deformation_dim));
  if (!result.realization) throw fail("has a degenerate realization");
  if (result.realization->positions != builder.positions) {
    throw Error(ErrorCode::Internal, "enumerated curve positions disagree with the continuity solution");
  }
  curve.multiplicity = mikhalkin_multiplicity(type);
  curve.aut = aut_order(type);
  curve.realization = std::move(*result.realization);
  curve.type = std::move(type);
  return curve;
}

// Every way to split d into parts along each primitive direction of the
// degree-d profile. Only the all-ones profile can pass through 3d-1 generic points.
std::vector<std::vector<IntVec2>> degree_profiles(int degree) {
  const std::vector<IntVec2> primitive = {{-1, 0}, {0, -1}, {1, 1}};
  std::vector<std::vector<int>> partitions;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      partitions.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, degree, degree);
  std::vector<std::vector<IntVec2>> profiles;
  for (const auto& p0 : partitions) {
    for (const auto& p1 : partitions) {
      for (const auto& p2 : partitions) {
        std::vector<IntVec2> ends;
        const std::vector<int>* parts[3] = {&p0, &p1, &p2};
        for (int i = 0; i < 3; ++i) {
          for (int k : *parts[i]) ends.push_back(k * primitive[static_cast<std::size_t>(i)]);
        }
        profiles.push_back(std::move(ends));
      }
    }
  }
  return profiles;
}

}  // namespace

std::vector<MarkedCurve> enumerate_plane(int degree, const PointConfig& config, const EnumerateOptions& options) {
  if (degree < 1) throw Error(ErrorCode::InvalidInput, "degree must be at least 1");
  if (config.domain.mode != Mode::Plane) throw Error(ErrorCode::InvalidInput, "plane enumeration needs a plane domain");
  const int n = 3 * degree - 1;
  if (static_cast<int>(config.points.size()) != n) {
    throw Error(ErrorCode::InvalidInput, "degree " + std::to_string(degree) + " needs " + std::to_string(n) + " points");
  }
  if (n > 31) throw Error(ErrorCode::InvalidInput, "too many points");
  const PointMap point_map = config.as_map();
  std::vector<RatPoint> points;
  for (int i = 1; i <= n; ++i) {
    const auto it = point_map.find(i);
    if (it == point_map.end()) throw Error(ErrorCode::InvalidInput, "point labels must be 1..n");
    points.push_back(it->second);
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) throw Error(ErrorCode::Genericity, "non-generic configuration: repeated point");
    }
  }

  std::map<std::string, MarkedCurve> collected;
  for (const auto& profile : degree_profiles(degree)) {
    std::vector<IntVec2> dirs;
    Counts counts;
    for (auto d : profile) {
      auto it = std::find(dirs.begin(), dirs.end(), d);
      if (it == dirs.end()) {
        dirs.push_back(d);
        counts.push_back(1);
      } else {
        ++counts[static_cast<std::size_t>(it - dirs.begin())];
      }
    }
    if (Search::total(counts) != n + 1) continue;  // too few ends to pass through n generic points

    Search search(dirs, points);
    const int last = n - 1;
    const Mask rest = ((Mask{1} << n) - 1) & ~(Mask{1} << last);
    const Mask low = rest & (~rest + 1);
    std::vector<SplitTask> tasks;
    Search::for_each_subcount(counts, [&](const Counts& sa) {
      const Counts sb = Search::minus(counts, sa);
      for (Mask pa = rest;; pa = (pa - 1) & rest) {
        if ((pa & low) && Search::total(sa) == std::popcount(pa) + 1 &&
            Search::total(sb) == std::popcount(rest & ~pa) + 1) {
          tasks.push_back({sa, pa});
        }
        if (pa == 0) break;
      }
    });

    std::vector<std::vector<MarkedCurve>> per_task(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
      try {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
          {
            std::lock_guard lock(error_mutex);
            if (error) return;
          }
          const auto& task = tasks[i];
          const Counts sb = Search::minus(counts, task.first);
          const Mask pb = rest & ~task.first_points;
          const auto left = search.flexible(task.first, task.first_points, points[static_cast<std::size_t>(last)]);
          if (left.empty()) continue;
          const auto right = search.flexible(sb, pb, points[static_cast<std::size_t>(last)]);
          for (const auto& a : left) {
            for (const auto& b : right) {
              CurveBuilder builder;
              const int root = builder.add_vertex(points[static_cast<std::size_t>(last)]);
              builder.type.labeled_ends.push_back({n, root});
              builder.attach(*a, root);
              builder.attach(*b, root);
              per_task[i].push_back(finish_curve(builder, config.domain, point_map));
            }
          }
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    };
    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    for (auto& batch : per_task) {
      for (auto& curve : batch) {
        std::string key = curve.canonical;
        collected.emplace(std::move(key), std::move(curve));
      }
    }
  }

  std::vector<MarkedCurve> out;
  out.reserve(collected.size());
  for (auto& [key, curve] : collected) out.push_back(std::move(curve));
  return out;
}

CountResult count_nd(int degree, std::uint64_t seed, const EnumerateOptions& options) {
  if (degree < 1) throw Error(ErrorCode::InvalidInput, "degree must be at least 1");
  CountResult result;
  result.config = generate_plane_config(3 * degree - 1, seed);
  result.curves = enumerate_plane(degree, result.config, options);
  Rat sum = 0;
  for (const auto& c : result.curves) sum += make_rat(c.multiplicity, c.aut);
  if (sum.get_den() != 1) throw Error(ErrorCode::Internal, "non-integral curve count " + to_string(sum));
  result.count = sum.get_num();
  return result;
}

CountResult count_nd_retry(int degree, std::uint64_t seed, int attempts, const EnumerateOptions& options) {
  std::string failures;
  for (int k = 0; k < attempts; ++k) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(k) * kRetryStride;
    try {
      auto result = count_nd(degree, s, options);
      result.rejected_seeds = failures;
      return result;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Genericity) throw;
      failures += (failures.empty() ? "" : "; ") + std::string("seed ") + std::to_string(s) + ": " + e.what();
    }
  }
  throw Error(ErrorCode::Genericity, "no generic configuration after " + std::to_string(attempts) + " seeds (" + failures + ")");
}

BigInt kontsevich(int degree) {
  if (degree < 1) throw Error(ErrorCode::InvalidInput, "degree must be at least 1");
  std::vector<BigInt> n(static_cast<std::size_t>(degree) + 1, 0);
  n[1] = 1;
  auto binom = [](long a, long b) {
    BigInt r;
    if (b < 0 || b > a) return BigInt(0);
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
  };
  for (long d = 2; d <= degree; ++d) {
    BigInt sum = 0;
    for (long d1 = 1; d1 < d; ++d1) {
      const long d2 = d - d1;
      const BigInt bracket = d2 * binom(3 * d - 4, 3 * d1 - 2) - d1 * binom(3 * d - 4, 3 * d1 - 1);
      sum += n[static_cast<std::size_t>(d1)] * n[static_cast<std::size_t>(d2)] * d1 * d1 * d2 * bracket;
    }
    n[static_cast<std::size_t>(d)] = sum;
  }
  return n[static_cast<std::size_t>(degree)];
}

}  // namespace tropglue

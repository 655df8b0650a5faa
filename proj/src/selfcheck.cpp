#include "tropglue/selfcheck.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "tropglue/canonical.hpp"
#include "tropglue/error.hpp"
#include "tropglue/glue.hpp"
#include "tropglue/io.hpp"
#include "tropglue/svg.hpp"

namespace tropglue {

namespace {

constexpr int kRetries = 8;
constexpr std::uint64_t kPropertySeed = 20240611;

struct Failure {
  std::string what;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

struct Suite {
  std::vector<CheckResult> results;

  void run(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{name, CheckStatus::Pass, {}};
    try {
      r.detail = body();
    } catch (const Failure& f) {
      r.status = CheckStatus::Fail;
      r.detail = f.what;
    } catch (const Error& e) {
      r.status = CheckStatus::Fail;
      r.detail = std::string(error_code_name(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }

  void skip(const std::string& name, const std::string& why) { results.push_back({name, CheckStatus::Skip, why}); }
};

std::vector<GluingConfig> load_curves(const std::string& path, const std::string& table_path) {
  auto curves = io::parse_curves(io::read_json_file(path));
  auto table = std::make_shared<const VertexInvariantTable>(io::parse_table(io::read_json_file(table_path)));
  for (auto& c : curves) c.table = table;
  return curves;
}

const GluingConfig& by_name(const std::vector<GluingConfig>& curves, const std::string& name) {
  for (const auto& c : curves) {
    if (c.name == name) return c;
  }
  throw Failure{"no curve named '" + name + "'"};
}

void check_continuity(const GluingConfig& c) {
  const auto r = realize(c.type, c.domain, c.points.as_map());
  expect(r.realization.has_value(), c.name + ": no realization");
  const auto& pos = r.realization->positions;
  for (const auto& e : c.type.internal_edges) {
    const RatPoint step = pos.at(e.head) - pos.at(e.tail);
    const Rat& len = r.realization->lengths.at(e.id);
    expect(len > 0, c.name + ": edge " + std::to_string(e.id) + " has non-positive length");
    expect(step.x == len * e.derivative.x && step.y == len * e.derivative.y,
           c.name + ": continuity fails on edge " + std::to_string(e.id));
  }
  const auto pts = c.points.as_map();
  for (const auto& end : c.type.labeled_ends) {
    const auto it = pts.find(end.label);
    if (it == pts.end()) continue;
    expect(pos.at(end.vertex).x == it->second.x && pos.at(end.vertex).y == it->second.y,
           c.name + ": end " + std::to_string(end.label) + " is not at its point");
  }
}

// Every vertex as root gives the same value.
std::string check_roots(const GluingConfig& c) {
  const auto base = evaluate_curve(c).value;
  for (const auto& v : c.type.vertices) {
    const auto value = evaluate_curve(c, v.id).value;
    expect(value == base, c.name + ": root " + std::to_string(v.id) + " gives " + to_string(value) + " instead of " +
                              to_string(base));
  }
  return to_string(base);
}

CombinatorialType relabel(const CombinatorialType& t, std::mt19937_64& rng) {
  std::vector<int> ids;
  for (const auto& v : t.vertices) ids.push_back(v.id);
  auto shuffled = ids;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::map<int, int> map;
  for (std::size_t i = 0; i < ids.size(); ++i) map[ids[i]] = shuffled[i] + 100;
  CombinatorialType out = t;
  for (auto& v : out.vertices) v.id = map.at(v.id);
  std::shuffle(out.vertices.begin(), out.vertices.end(), rng);
  for (auto& e : out.internal_edges) {
    e.tail = map.at(e.tail);
    e.head = map.at(e.head);
    if (rng() & 1) {
      std::swap(e.tail, e.head);
      e.derivative = -e.derivative;
    }
  }
  std::shuffle(out.internal_edges.begin(), out.internal_edges.end(), rng);
  for (auto& end : out.labeled_ends) end.vertex = map.at(end.vertex);
  for (auto& u : out.unbounded_ends) u.vertex = map.at(u.vertex);
  std::shuffle(out.unbounded_ends.begin(), out.unbounded_ends.end(), rng);
  return out;
}

}  // namespace

std::vector<CheckResult> run_checks(const CheckOptions& options) {
  Suite suite;
  const EnumerateOptions enum_opts{options.threads == 0 ? 1u : options.threads};
  const std::string corner_dir = options.data_dir + "/cp2-corner";
  const std::string twisted_dir = options.data_dir + "/twisted";
  const std::string table_path = options.table_path.empty() ? corner_dir + "/table.json" : options.table_path;

  suite.run("wedge antisymmetry and bilinearity (1000 random vectors)", [] {
    std::mt19937_64 rng(kPropertySeed);
    std::uniform_int_distribution<std::int64_t> coord(-1000000, 1000000);
    std::uniform_int_distribution<std::int64_t> scalar(-1000, 1000);
    for (int i = 0; i < 1000; ++i) {
      const IntVec2 u{coord(rng), coord(rng)}, v{coord(rng), coord(rng)}, w{coord(rng), coord(rng)};
      const std::int64_t a = scalar(rng), b = scalar(rng);
      expect(wedge(u, v) == -wedge(v, u), "antisymmetry fails for " + to_string(u) + ", " + to_string(v));
      expect(wedge(u, u) == 0, "u^u != 0 for " + to_string(u));
      const IntVec2 au{a * u.x, a * u.y}, bw{b * w.x, b * w.y};
      expect(wedge(au + bw, v) == a * wedge(u, v) + b * wedge(w, v),
             "bilinearity fails for " + to_string(u) + ", " + to_string(v) + ", " + to_string(w));
    }
    return std::string("1000 samples");
  });

  suite.run("trivalent wedge symmetry under balancing", [] {
    std::mt19937_64 rng(kPropertySeed + 1);
    std::uniform_int_distribution<std::int64_t> coord(-100000, 100000);
    for (int i = 0; i < 1000; ++i) {
      const IntVec2 u1{coord(rng), coord(rng)}, u2{coord(rng), coord(rng)};
      const IntVec2 u3 = -(u1 + u2);
      const auto a = std::llabs(wedge(u1, u2)), b = std::llabs(wedge(u2, u3)), c = std::llabs(wedge(u3, u1));
      expect(a == b && b == c, "asymmetric wedges at " + to_string(u1) + ", " + to_string(u2));
    }
    return std::string("1000 samples");
  });

  // Enumerations at fixed seeds, shared by the later checks.
  std::map<int, std::vector<CountResult>> runs;
  for (int d = 1; d <= 3; ++d) {
    suite.run("enumeration matches the recursion oracle, degree " + std::to_string(d), [&, d] {
      const BigInt expected = kontsevich(d);
      std::ostringstream detail;
      detail << "N(" << d << ") = " << expected << "; seeds";
      for (int s = 1; s <= options.seeds; ++s) {
        auto r = count_nd_retry(d, static_cast<std::uint64_t>(s), kRetries, enum_opts);
        detail << ' ' << r.config.seed << "->" << r.count;
        expect(r.count == expected, "seed " + std::to_string(r.config.seed) + " counts " + r.count.get_str() +
                                        ", oracle says " + expected.get_str());
        runs[d].push_back(std::move(r));
      }
      return detail.str();
    });
  }

  suite.run("count is configuration independent", [&] {
    for (const auto& [d, list] : runs) {
      for (const auto& r : list) {
        expect(r.count == list.front().count, "degree " + std::to_string(d) + " differs between seeds");
      }
    }
    return std::string("all seeds agree per degree");
  });

  suite.run("count is deterministic for a fixed seed", [&] {
    const auto a = count_nd_retry(2, 1, kRetries, enum_opts);
    const auto b = count_nd_retry(2, 1, kRetries, enum_opts);
    expect(a.count == b.count && a.curves.size() == b.curves.size(), "repeated degree 2 count differs");
    for (std::size_t i = 0; i < a.curves.size(); ++i) {
      expect(a.curves[i].canonical == b.curves[i].canonical, "curve order differs between runs");
    }
    return std::string("degree 2, seed 1");
  });

  suite.run("enumerated curves: exact continuity, genus 0, trivial automorphisms", [&] {
    std::size_t n = 0;
    for (const auto& [d, list] : runs) {
      for (const auto& r : list) {
        for (const auto& c : r.curves) {
          const auto config = plane_gluing_config(c, r.config);
          check_continuity(config);
          expect(genus(c.type) == 0, "positive genus curve enumerated");
          expect(c.aut == 1 && aut_order(c.type) == 1, "nontrivial automorphisms on " + c.canonical);
          for (const auto& v : c.type.vertices) {
            expect(balancing_defect(c.type, config.domain, v.id).is_zero(), "unbalanced vertex on " + c.canonical);
          }
          ++n;
        }
      }
    }
    return std::to_string(n) + " curves";
  });

  suite.run("enumerated curves: trivalent wedge symmetry", [&] {
    std::size_t n = 0;
    for (const auto& [d, list] : runs) {
      for (const auto& r : list) {
        for (const auto& c : r.curves) {
          for (const auto& v : c.type.vertices) {
            std::vector<IntVec2> away;
            for (const auto& inc : c.type.incidences(v.id)) {
              if (!inc.away.is_zero()) away.push_back(inc.away);
            }
            if (away.size() != 3) continue;
            const auto a = std::llabs(wedge(away[0], away[1])), b = std::llabs(wedge(away[1], away[2])),
                       e = std::llabs(wedge(away[2], away[0]));
            expect(a == b && b == e, "asymmetric wedges on " + c.canonical);
            ++n;
          }
        }
      }
    }
    return std::to_string(n) + " vertices";
  });

  suite.run("gluing is root independent and equals Mikhalkin multiplicity (degree <= 3)", [&] {
    std::size_t n = 0;
    for (const auto& [d, list] : runs) {
      for (const auto& r : list) {
        for (const auto& c : r.curves) {
          const auto config = plane_gluing_config(c, r.config);
          check_roots(config);
          const auto value = evaluate_curve(config).value;
          expect(value == NovikovPoly::constant(Rat(c.multiplicity)),
                 c.canonical + ": gluing gives " + to_string(value) + ", multiplicity " + c.multiplicity.get_str());
          expect(plane_contribution(c) == Rat(c.multiplicity), "plane contribution differs from multiplicity");
          ++n;
        }
      }
    }
    return std::to_string(n) + " curves";
  });

  suite.run("canonical form is invariant under relabeling", [&] {
    std::mt19937_64 rng(kPropertySeed + 2);
    std::size_t n = 0;
    for (const auto& [d, list] : runs) {
      for (const auto& c : list.front().curves) {
        for (int k = 0; k < 3; ++k) {
          expect(canonical_form(relabel(c.type, rng)) == c.canonical, "relabeled form differs for " + c.canonical);
        }
        ++n;
      }
    }
    return std::to_string(n) + " curves";
  });

  std::vector<GluingConfig> corner;
  suite.run("corner decomposition 3 + 9 = 12", [&] {
    corner = load_curves(corner_dir + "/curves.json", table_path);
    const EnergyVec e333{3, 3, 3};
    std::ostringstream detail;
    for (const auto& c : corner) {
      const auto value = evaluate_curve(c).value;
      const Rat want = c.name == "pictured" ? 3 : 1;
      expect(value == NovikovPoly::monomial(want, e333), c.name + " gives " + to_string(value));
      expect(aut_order(c.type) == 1, c.name + " has automorphisms");
    }
    const auto sum = total(corner);
    expect(sum == NovikovPoly::monomial(12, e333), "total is " + to_string(sum));
    detail << corner.size() << " curves, total " << to_string(sum);
    return detail.str();
  });

  suite.run("energy homogeneity on the corner configurations", [&] {
    if (corner.empty()) corner = load_curves(corner_dir + "/curves.json", table_path);
    for (const auto& c : corner) {
      const auto value = evaluate_curve(c).value;
      expect(value.terms().size() == 1, c.name + ": expected one term, got " + to_string(value));
      const auto& energy = value.terms().begin()->first;
      expect(energy == (EnergyVec{3, 3, 3}), c.name + ": energy " + to_string(energy) + " is not 3(E12+E13+E23)");
    }
    return std::to_string(corner.size()) + " curves of degree 3";
  });

  suite.run("corner configurations: exact continuity and root independence", [&] {
    if (corner.empty()) corner = load_curves(corner_dir + "/curves.json", table_path);
    for (const auto& c : corner) {
      check_continuity(c);
      check_roots(c);
    }
    return std::to_string(corner.size()) + " curves";
  });

  suite.run("scaling a table entry scales the contribution", [&] {
    if (corner.empty()) corner = load_curves(corner_dir + "/curves.json", table_path);
    const Rat r = make_rat(7, 3);
    std::size_t n = 0;
    for (const auto& c : corner) {
      const auto base = evaluate_curve(c).value;
      const auto keys = boundary_keys(c.type);
      for (const auto& [vid, key] : keys) {
        int uses = 0;
        for (const auto& [other, k] : keys) uses += k == key ? 1 : 0;
        auto scaled = std::make_shared<VertexInvariantTable>(*c.table);
        for (auto& t : scaled->mutable_entries().at(key)) t.coeff *= r;
        GluingConfig copy = c;
        copy.table = scaled;
        Rat factor = 1;
        for (int i = 0; i < uses; ++i) factor *= r;
        expect(evaluate_curve(copy).value == factor * base,
               c.name + ": scaling " + to_string(key) + " does not scale the result by " + to_string(factor));
        ++n;
      }
    }
    return std::to_string(n) + " scaled evaluations";
  });

  suite.run("zero-derivative internal edge contributes 0", [&] {
    if (corner.empty()) corner = load_curves(corner_dir + "/curves.json", table_path);
    GluingConfig c = by_name(corner, "pictured");
    c.type.internal_edges.front().derivative = {0, 0};
    const auto e = evaluate_curve(c);
    expect(e.value.is_zero(), "value is " + to_string(e.value));
    expect(!e.diagnostic.empty(), "no vanishing diagnostic");
    return e.diagnostic;
  });

  suite.run("twisted example contributes 3", [&] {
    auto curves = load_curves(twisted_dir + "/curve.json", twisted_dir + "/table.json");
    expect(curves.size() == 1, "expected one twisted curve");
    const auto& c = curves.front();
    expect(c.domain.twist == (IntVec2{1, -2}), "twist is " + to_string(c.domain.twist));
    check_continuity(c);
    const auto value = check_roots(c);
    expect(total(curves) == NovikovPoly::constant(3), "total is " + to_string(total(curves)));
    InteriorVertex v;
    v.incoming = {{1, 1}, {-2, 1}};
    const ThetaClass unit{NovikovPoly::constant(1)};
    const std::vector<ThetaClass> in{unit, unit};
    expect(interior_invariant(v, in).coeff == NovikovPoly::constant(3), "interior invariant is not 3");
    return "total " + value;
  });

  suite.run("file round trip preserves curves and tables", [&] {
    std::size_t n = 0;
    for (const auto& path : {corner_dir + "/curves.json", twisted_dir + "/curve.json"}) {
      for (const auto& c : io::parse_curves(io::read_json_file(path))) {
        const auto back = io::parse_curve(io::curve_to_json(c));
        expect(canonical_form(back.type) == canonical_form(c.type), c.name + ": canonical form changed");
        expect(io::curve_to_json(back) == io::curve_to_json(c), c.name + ": serialization changed");
        ++n;
      }
    }
    for (const auto& path : {table_path, twisted_dir + "/table.json"}) {
      const auto t = io::parse_table(io::read_json_file(path));
      expect(io::table_to_json(io::parse_table(io::table_to_json(t))) == io::table_to_json(t), path + ": table changed");
      ++n;
    }
    return std::to_string(n) + " documents";
  });

  suite.run("rendering is deterministic", [&] {
    if (corner.empty()) corner = load_curves(corner_dir + "/curves.json", table_path);
    const auto& c = by_name(corner, "pictured");
    const auto a = render_svg(c), b = render_svg(c);
    expect(a == b, "two renders differ");
    auto count = [&](const std::string& needle) {
      std::size_t k = 0;
      for (auto pos = a.find(needle); pos != std::string::npos; pos = a.find(needle, pos + 1)) ++k;
      return k;
    };
    expect(a.rfind("<?xml", 0) == 0 && a.find("</svg>") != std::string::npos, "not an SVG document");
    expect(count("<circle") == 4 && count("class=\"edge\"") == 3, "expected 4 vertices and 3 segments");
    return std::to_string(a.size()) + " bytes";
  });

  if (options.stretch) {
    suite.run("enumeration matches the recursion oracle, degree 4", [&] {
      const auto r = count_nd_retry(4, 1, kRetries, enum_opts);
      expect(r.count == kontsevich(4), "count " + r.count.get_str() + ", oracle " + kontsevich(4).get_str());
      return "seed " + std::to_string(r.config.seed) + " -> " + r.count.get_str();
    });
  } else {
    suite.skip("enumeration matches the recursion oracle, degree 4", "long-running; enable the stretch run");
  }
  return suite.results;
}

}  // namespace tropglue

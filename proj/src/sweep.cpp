#include "fusionkit/sweep.hpp"

#include <algorithm>
#include <functional>

#include "fusionkit/catalog.hpp"
#include "fusionkit/hypercentre.hpp"
#include "fusionkit/normal_maps.hpp"

namespace fusionkit {

namespace {

struct Recorder {
  SweepRow& row;

  // Runs one check; an exception counts as a violation.
  void run(const std::string& prop, const std::function<std::string()>& body) {
    ++row.checks[prop];
    try {
      std::string bad = body();
      if (!bad.empty()) row.violations.push_back(prop + ": " + bad);
    } catch (const Error& e) {
      row.violations.push_back(prop + ": " + error_code_name(e.code()) + " " + e.what());
    }
  }
  void saturation(const FusionSystem& e, const std::string& what) {
    run("saturation_criteria", [&]() -> std::string {
      bool a = is_saturated(e).saturated;
      bool b = is_saturated_puig(e).saturated;
      return a == b ? "" : what + " criteria disagree";
    });
  }
};

const FusionSystem* least(const std::vector<FusionSystem>& v) {
  for (const FusionSystem& a : v) {
    bool ok = true;
    for (const FusionSystem& b : v) ok = ok && is_subsystem(a, b);
    if (ok) return &a;
  }
  return nullptr;
}

const FusionSystem* greatest(const std::vector<FusionSystem>& v) {
  for (const FusionSystem& a : v) {
    bool ok = true;
    for (const FusionSystem& b : v) ok = ok && is_subsystem(b, a);
    if (ok) return &a;
  }
  return nullptr;
}

}  // namespace

SweepRow sweep_group(std::shared_ptr<const Group> g, int p, const SweepOptions& opt) {
  SweepRow row;
  row.group = g->name;
  row.order = g->order();
  row.prime = p;
  Recorder rec{row};
  FusionSystem f = fusion_of_group(g, p);
  const Lattice& lat = f.lattice();
  const int base = f.base();
  row.p_order = lat.order(base);
  rec.saturation(f, "F");

  std::vector<int> closed = strongly_closed_subgroups(f);
  row.strongly_closed = static_cast<int>(closed.size());
  std::vector<std::pair<int, std::vector<FusionSystem>>> found;
  for (int t : closed) {
    rec.run("quotient_saturation", [&]() -> std::string {
      rec.saturation(quotient(f, t).system, "quotient");
      return "";
    });
    if (lat.order(t) > opt.max_t) continue;
    std::vector<FusionSystem> wn;
    rec.run("enumeration", [&]() -> std::string {
      wn = enumerate_weakly_normal(f, t);
      return "";
    });
    row.weakly_normal += static_cast<int>(wn.size());
    for (const FusionSystem& e : wn) {
      rec.saturation(e, "weakly normal subsystem");
      rec.run("theorem_a", [&]() -> std::string {
        verify_theorem_a(f, e);
        return "";
      });
      rec.run("map_round_trip", [&]() -> std::string {
        AutMap a = aut_map_of(e);
        FusionSystem back = generate_from_map(f, a);
        if (back != e) return "generate_from_map(aut_map_of(E)) != E";
        if (!(aut_map_of(back) == a)) return "aut_map_of(generate_from_map(A)) != A";
        return "";
      });
      rec.run("map_from_centrics", [&]() -> std::string {
        AutMap a = aut_map_of(e);
        AutMap partial;
        partial.t = t;
        partial.a.assign(lat.size(), {});
        for (int u : lat.subgroups_of(t))
          if (lat.le(lat.centralizer_in(u, t), u) && is_fully_normalized(f, u)) partial.a[u] = a.a[u];
        return complete_partial_map(f, t, partial) == a ? "" : "completion differs from the full map";
      });
    }
    if (!wn.empty()) {
      rec.run("based_range", [&]() -> std::string {
        auto br = based_range(f, t);
        if (!br) return "enumeration found subsystems but T is not based";
        for (const FusionSystem& e : wn)
          if (!is_subsystem(br->minimal, e) || !is_subsystem(e, br->maximal)) return "subsystem outside the range";
        return "";
      });
    }
    for (size_t i = 0; i < wn.size() && i < 6; ++i)
      for (size_t j = i + 1; j < wn.size() && j < 6; ++j) {
        rec.saturation(intersect_systems(wn[i], wn[j]), "raw intersection");
        rec.run("wedge", [&]() -> std::string {
          FusionSystem w = intersection_wedge(f, wn[i], wn[j]);
          if (!is_subsystem(w, wn[i]) || !is_subsystem(w, wn[j])) return "wedge not inside both";
          return normality_status(f, w).weakly_normal ? "" : "wedge not weakly normal";
        });
      }
    found.emplace_back(t, std::move(wn));
  }

  if (opt.oracle) {
    for (auto& [t, wn] : found) {
      if (lat.order(t) > 9) continue;
      std::vector<FusionSystem> brute;
      try {
        for (FusionSystem& e : enumerate_subsystems(full_subcategory(f, t), inner_fusion(f.lattice_ptr(), t, p)))
          if (normality_status(f, e).weakly_normal) brute.push_back(std::move(e));
      } catch (const Error&) {
        ++row.checks["oracle_skipped"];
        continue;
      }
      rec.run("oracle_enumeration", [&]() -> std::string {
        if (brute.size() != wn.size()) return "count differs from the exhaustive search";
        for (const FusionSystem& e : brute)
          if (std::find(wn.begin(), wn.end(), e) == wn.end()) return "exhaustive search found an extra subsystem";
        return "";
      });
      if (brute.empty()) continue;
      const FusionSystem* lo = least(brute);
      const FusionSystem* hi = greatest(brute);
      rec.run("oracle_opprime", [&]() -> std::string {
        if (!lo) return "no least weakly normal subsystem";
        for (const FusionSystem& e : brute)
          if (o_p_prime_subsystem(e) != *lo) return "O^{p'} differs from the least subsystem";
        return "";
      });
      rec.run("oracle_based_range", [&]() -> std::string {
        auto br = based_range(f, t);
        if (!br || !lo || !hi) return "range missing";
        if (br->minimal != *lo) return "minimum differs";
        return br->maximal == *hi ? "" : "maximum differs";
      });
    }
  }

  for (int q : f.subgroups()) {
    if (!is_fully_normalized(f, q)) continue;
    rec.run("local_saturation", [&]() -> std::string {
      rec.saturation(local_subsystem(f, q, LocalKind::Normalizer), "normalizer subsystem");
      return "";
    });
  }

  rec.run("o_p_series", [&]() -> std::string {
    return o_p(f) == o_p_by_central_series(f) ? "" : "O_p differs from the central-series characterization";
  });
  rec.run("centre_definitions", [&]() -> std::string {
    return centre_of(f) == centre_by_fixed_points(f) ? "" : "extension and fixed-point centres differ";
  });
  rec.run("hypercentre", [&]() -> std::string {
    CentralSeries zs = upper_central_series(f);
    row.hypercentre_order = lat.order(zs.limit);
    int x = x_subgroup(f);
    if (x != zs.limit) return "X_F differs from Z_inf";
    if (!lat.le(zs.limit, o_p(f))) return "Z_inf not inside O_p";
    return "";
  });
  rec.run("central_series", [&]() -> std::string {
    CentralSeries zs = upper_central_series(f);
    CentralSeries zp = group_upper_central_series(lat, base);
    size_t n = std::max(zs.terms.size(), zp.terms.size());
    for (size_t i = 0; i < n; ++i) {
      int zf = zs.terms[std::min(i, zs.terms.size() - 1)];
      int zi = zp.terms[std::min(i, zp.terms.size() - 1)];
      if (zf != lat.meet(zs.limit, zi)) return "Z_" + std::to_string(i + 1) + " mismatch";
    }
    return "";
  });
  rec.run("perfect_focal", [&]() -> std::string {
    row.perfect = is_perfect(f);
    bool foc = focal_subgroup(f) == base;
    bool hyp = hyperfocal_subgroup(f) == base;
    return row.perfect == foc && foc == hyp ? "" : "quotient, focal and hyperfocal tests disagree";
  });
  if (row.perfect)
    rec.run("perfect_z2", [&]() -> std::string {
      verify_perfect_z2(f);
      return "";
    });
  if (o_p_prime(*g, p).count() == 1)
    rec.run("group_centres", [&]() -> std::string {
      group_vs_fusion_centres(g, p);
      return "";
    });
  return row;
}

SweepReport run_sweep(const SweepOptions& opt) {
  SweepReport rep;
  for (const CatalogEntry& entry : catalog_index()) {
    if (entry.order > opt.max_order) continue;
    auto g = catalog_group(entry.name);
    for (int p : prime_divisors(g->order())) {
      SweepRow row = sweep_group(g, p, opt);
      for (const auto& [k, v] : row.checks) rep.checks[k] += v;
      for (const std::string& v : row.violations) ++rep.violations[v.substr(0, v.find(':'))];
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

}  // namespace fusionkit

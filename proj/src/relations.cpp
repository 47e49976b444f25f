#include "gpab/relations.hpp"

#include <functional>
#include <map>

#include "gpab/domination.hpp"
#include "gpab/error.hpp"
#include "gpab/sil.hpp"

namespace gpab {

const char* to_string(CheckLevel l) { return l == CheckLevel::Aut ? "Aut" : "Out"; }

const char* to_string(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::Pass: return "pass";
    case CheckOutcome::Fail: return "fail";
    case CheckOutcome::NotFoundUpTo: return "not-found";
  }
  return "?";
}

const std::vector<std::string>& relation_families() {
  static const std::vector<std::string> families = {
      "transvection chain",
      "transvections, shared multiplier",
      "transvections, distinct targets",
      "pc by transvection, x in C",
      "pc by transvection, y in C",
      "pc by transvection, v=x, y not in C",
      "pc by transvection, v=x, y in C",
      "pc by transvection, trivial",
      "ct by transvection, u=x",
      "ct by transvection, v=x",
      "ct by transvection, v=x, u=y",
      "ct by transvection, v=x, u=z",
      "ct by transvection, u=y",
      "ct by transvection, u=z",
      "ct by transvection, trivial",
      "ct by inverse transvection, u=x",
      "ct by inverse transvection, v=x",
      "ct by inverse transvection, v=x, u=y",
      "ct by inverse transvection, v=x, u=z",
      "ct by inverse transvection, u=y",
      "ct by inverse transvection, u=z",
      "ct by inverse transvection, trivial",
      "transvection-pc commutator",
      "transvection-pc commutator, y in C",
      "transvection commutator",
      "pc and cpc commute",
      "cpc and cpc commute",
      "Torelli lift 1",
      "Torelli lift 2",
      "Torelli lift 3",
      "Torelli lift 4",
      "Torelli lift 5",
  };
  return families;
}

bool RelationReport::all_passed() const {
  for (const auto& c : checks)
    if (c.outcome != CheckOutcome::Pass) return false;
  return true;
}

std::vector<FamilySummary> RelationReport::summary() const {
  std::map<std::string, FamilySummary> by_name;
  for (const auto& c : checks) {
    auto& s = by_name[c.family];
    s.family = c.family;
    switch (c.outcome) {
      case CheckOutcome::Pass: ++s.passed; break;
      case CheckOutcome::Fail: ++s.failed; break;
      case CheckOutcome::NotFoundUpTo: ++s.not_found; break;
    }
    if (c.level == CheckLevel::Out) ++s.out_level;
  }
  std::vector<FamilySummary> out;
  for (const auto& f : relation_families()) {
    auto it = by_name.find(f);
    if (it == by_name.end()) {
      FamilySummary s;
      s.family = f;
      out.push_back(s);
    } else {
      out.push_back(it->second);
    }
  }
  return out;
}

namespace {

// How a configuration is compared: exactly, exactly or else up to an inner automorphism,
// or only up to an inner automorphism.
enum class Mode { Exact, ExactOrOut };

class Catalog {
 public:
  Catalog(const LabeledGraph& g, const CatalogOptions& opt)
      : g_(g), opt_(opt), d_(equivalence_classes(g)), id_(g) {}

  RelationReport run() {
    relators();
    pc_conjugates();
    ct_conjugates();
    if (has_no_free_sil(g_)) commutators_of_generators();
    if (!has_stil(g_) && !has_fsil(g_)) commutator_partial_conjugations();
    torelli_lifts();
    return std::move(report_);
  }

 private:
  GroupElement el(int v, int64_t e = 1) const { return GroupElement::generator(g_, v, e); }
  bool commutes(int a, int b) const { return a == b || g_.adjacent(a, b); }
  Automorphism tr(int u, const GroupElement& w) const { return transvection_by(g_, u, w); }
  Automorphism tr(int u, int v, int64_t e = 1) const { return tr(u, el(v, e)); }
  Automorphism ct(int x, const GroupElement& a, const GroupElement& b) const {
    return tr(x, commutator(a, b));
  }
  Automorphism ct(int x, int y, int z) const { return ct(x, el(y), el(z)); }
  Automorphism pc(const VertexSet& c, const GroupElement& h) const { return conjugation_on(g_, c, h); }
  Automorphism pc(const VertexSet& c, int v, int64_t e = 1) const { return pc(c, el(v, e)); }
  Automorphism pc1(int target, int v, int64_t e = 1) const {
    VertexSet s;
    s.insert(target);
    return pc(s, v, e);
  }
  Automorphism ad(int v, int64_t e = 1) const { return inner(g_, el(v, e)); }

  std::string names(std::initializer_list<std::pair<const char*, int>> vs) const {
    std::string s;
    for (const auto& [label, v] : vs) {
      if (!s.empty()) s += ' ';
      s += label;
      s += '=';
      s += g_.name(v);
    }
    return s;
  }
  std::string with_set(std::string s, const char* label, const VertexSet& c) const {
    return s + ' ' + label + '=' + format_set(g_, c);
  }

  void record(const std::string& family, const std::string& config, CheckLevel level,
              CheckOutcome outcome) {
    if (opt_.corrupt_first && !corrupted_) {
      corrupted_ = true;
      outcome = CheckOutcome::Fail;
    }
    report_.checks.push_back({family, config, level, outcome});
  }

  // Builds both sides lazily so that construction failures become report entries.
  void check(const std::string& family, const std::string& config,
             const std::function<Automorphism()>& lhs, const std::function<Automorphism()>& rhs,
             Mode mode = Mode::Exact) {
    Automorphism l, r;
    try {
      l = lhs();
      r = rhs();
    } catch (const Error&) {
      record(family, config, CheckLevel::Aut, CheckOutcome::Fail);
      return;
    }
    if (equal_in_aut(l, r)) {
      record(family, config, CheckLevel::Aut, CheckOutcome::Pass);
      return;
    }
    if (mode == Mode::Exact) {
      record(family, config, CheckLevel::Aut, CheckOutcome::Fail);
      return;
    }
    CheckOutcome outcome = CheckOutcome::Fail;
    try {
      outcome = equal_in_out_bounded(l, r, opt_.bound).found ? CheckOutcome::Pass
                                                             : CheckOutcome::NotFoundUpTo;
    } catch (const Error&) {
    }
    record(family, config, CheckLevel::Out, outcome);
  }

  void check_commute(const std::string& family, const std::string& config,
                     const std::function<Automorphism()>& a, const std::function<Automorphism()>& b,
                     Mode mode = Mode::Exact) {
    check(
        family, config, [&] { return a() * b(); }, [&] { return b() * a(); }, mode);
  }

  void relators() {
    const int n = g_.size();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (y == x || !d_.le(y, x)) continue;
        const int64_t k = transvection_power(g_, y, x);
        for (int z = 0; z < n; ++z) {
          if (z == x || z == y) continue;
          const std::string cfg = names({{"x", x}, {"y", y}, {"z", z}});
          if (d_.le(z, y)) {
            const int64_t j = transvection_power(g_, z, y);
            check(
                "transvection chain", cfg, [&] { return tr(y, x, k) * tr(z, y, j); },
                [&] { return tr(z, y, j) * tr(z, x, checked_mul(k, j)) * tr(y, x, k); });
          }
          if (z > y && d_.le(z, x)) {
            const int64_t j = transvection_power(g_, z, x);
            check_commute(
                "transvections, shared multiplier", cfg, [&] { return tr(y, x, k); }, [&] { return tr(z, x, j); });
          }
          for (int w = 0; w < n; ++w) {
            if (w == x || w == y || w == z || !d_.le(z, w)) continue;
            const int64_t j = transvection_power(g_, z, w);
            check_commute(
                "transvections, distinct targets", names({{"x", x}, {"y", y}, {"z", z}, {"w", w}}),
                [&] { return tr(y, x, k); }, [&] { return tr(z, w, j); });
          }
        }
      }
  }

  // Conjugates of partial conjugations by infinite transvections.
  void pc_conjugates() {
    const int n = g_.size();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y || !d_.le_inf(x, y)) continue;
        for (int v = 0; v < n; ++v) {
          const VertexSet sv = star(g_, v);
          for (const VertexSet& c : components_minus_star(g_, v)) {
            for (int eps : {1, -1}) {
              const std::string cfg =
                  with_set(names({{"x", x}, {"y", y}, {"v", v}}), "C", c) + (eps > 0 ? " +" : " -");
              auto lhs = [&] { return tr(x, y, -eps) * pc(c, v) * tr(x, y, eps); };
              if (v == x && !c.contains(y)) {
                check("pc by transvection, v=x, y not in C", cfg, lhs, [&] { return pc(c, y, -eps) * pc(c, x); });
              } else if (v == x) {
                const VertexSet cp = g_.all() - (star(g_, x) | c);
                check("pc by transvection, v=x, y in C", cfg, lhs,
                      [&] { return pc(cp, x, -1) * pc(cp, y, eps) * ad(x) * ad(y, -eps); });
              } else if (c.contains(x) && !c.contains(y) && !sv.contains(y)) {
                check("pc by transvection, x in C", cfg, lhs,
                      [&] { return pc(c, v) * ct(x, el(v), el(y, -eps)); });
              } else if (!c.contains(x) && !sv.contains(x) && c.contains(y)) {
                check("pc by transvection, y in C", cfg, lhs,
                      [&] { return ct(x, el(y, -eps), el(v)) * pc(c, v); });
              } else {
                check("pc by transvection, trivial", cfg, lhs, [&] { return pc(c, v); });
              }
            }
          }
        }
      }
  }

  // Conjugates of commutator transvections R_x^{[y,z]} by R_u^{v^{±1}}.
  void ct_conjugates() {
    const int n = g_.size();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          if (y == z || x == y || x == z || commutes(y, z)) continue;
          if (!d_.le_inf(x, y) || !d_.le_inf(x, z)) continue;
          for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
              if (u == v || !d_.le_inf(u, v)) continue;
              ct_conjugate(x, y, z, u, v);
            }
        }
  }

  void ct_conjugate(int x, int y, int z, int u, int v) {
    const std::string cfg = names({{"x", x}, {"y", y}, {"z", z}, {"u", u}, {"v", v}});
    auto X = [&] { return ct(x, y, z); };
    auto fwd = [&] { return tr(u, v) * X() * tr(u, v, -1); };
    auto bwd = [&] { return tr(u, v, -1) * X() * tr(u, v); };
    auto component_of = [&](int s, int t) {
      for (const VertexSet& c : components_minus_star(g_, s))
        if (c.contains(t)) return c;
      throw Error(ErrorCode::NotComponentUnion, "no component");
    };

    if (u == x) {
      check("ct by transvection, u=x", cfg, fwd, [&] { return pc1(u, v, -1) * ct(u, y, z) * pc1(u, v); });
      check("ct by inverse transvection, u=x", cfg, bwd, [&] { return pc1(u, v) * ct(u, y, z) * pc1(u, v, -1); });
    } else if (x == v && u != y && u != z) {
      check("ct by transvection, v=x", cfg, fwd,
            [&] { return pc1(u, v, -1) * ct(u, z, y) * pc1(u, v) * ct(v, y, z); });
      check("ct by inverse transvection, v=x", cfg, bwd, [&] { return ct(u, y, z) * ct(v, y, z); });
    } else if (x == v && y == u) {
      auto alpha = [&] {
        const VertexSet Z = component_of(u, z);
        return pc(Z, v) * pc(Z, u) * pc1(u, z) * ct(u, z, v) * pc1(v, u);
      };
      auto beta = [&] {
        const VertexSet Z = component_of(u, z);
        return pc1(v, z, -1) * pc1(v, u, -1) * pc(Z, u, -1) * pc(Z, v, -1);
      };
      check("ct by transvection, v=x, u=y", cfg, fwd, [&] { return alpha() * ct(v, u, z) * beta(); });
      check("ct by inverse transvection, v=x, u=y", cfg, bwd, [&] {
        return tr(u, v, -1) * alpha().inverse() * tr(u, v) * ct(v, u, z) * tr(u, v, -1) *
               beta().inverse() * tr(u, v);
      });
    } else if (x == v && z == u) {
      auto gamma = [&] {
        const VertexSet Y = component_of(u, y);
        return pc(Y, v) * pc(Y, u) * pc1(v, u) * pc1(v, y);
      };
      auto delta = [&] {
        const VertexSet Y = component_of(u, y);
        return pc1(v, u, -1) * ct(u, v, y) * pc1(u, y, -1) * pc(Y, u, -1) * pc(Y, v, -1);
      };
      check("ct by transvection, v=x, u=z", cfg, fwd, [&] { return gamma() * ct(v, y, u) * delta(); });
      check("ct by inverse transvection, v=x, u=z", cfg, bwd, [&] {
        return tr(u, v, -1) * gamma().inverse() * tr(u, v) * ct(v, y, u) * tr(u, v, -1) *
               delta().inverse() * tr(u, v);
      });
    } else if (y == u && !commutes(v, z)) {
      check("ct by transvection, u=y", cfg, fwd,
            [&] { return pc1(x, u, -1) * ct(x, v, z) * pc1(x, u) * ct(x, u, z); });
      check("ct by inverse transvection, u=y", cfg, bwd, [&] {
        return tr(u, v, -1) * pc1(x, u, -1) * ct(x, z, v) * pc1(x, u) * tr(u, v) * ct(x, u, z);
      });
    } else if (z == u && !commutes(v, y)) {
      check("ct by transvection, u=z", cfg, fwd,
            [&] { return ct(x, y, u) * pc1(x, u, -1) * ct(x, y, v) * pc1(x, u); });
      // Leading factor is R_x^{[y,u]}: the inverse of the u=y case with (y, z) replaced by (u, y).
      check("ct by inverse transvection, u=z", cfg, bwd, [&] {
        return ct(x, y, u) * tr(u, v, -1) * pc1(x, u, -1) * ct(x, v, y) * pc1(x, u) * tr(u, v);
      });
    } else {
      check("ct by transvection, trivial", cfg, fwd, X);
      check("ct by inverse transvection, trivial", cfg, bwd, X);
    }
  }

  // Exceptional commutators among the finite-index generators; meaningful without free SILs.
  void commutators_of_generators() {
    const int n = g_.size();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y || !d_.le_inf(x, y) || g_.order(y).is_two()) continue;
        for (const VertexSet& c : components_minus_star(g_, x)) {
          const std::string cfg = with_set(names({{"x", x}, {"y", y}}), "C", c);
          auto lhs = [&] { return commutator(tr(x, y), pc(c, x)); };
          if (!c.contains(y)) {
            check("transvection-pc commutator", cfg, lhs, [&] { return pc(c, y); });
          } else {
            // With y in C the class in Out is conjugation by x y^-1 x^-1 on the complement C'.
            const VertexSet cp = g_.all() - (star(g_, x) | c);
            check(
                "transvection-pc commutator, y in C", cfg, lhs,
                [&] { return pc(cp, x) * pc(cp, y, -1) * pc(cp, x, -1); }, Mode::ExactOrOut);
          }
        }
        for (int w = 0; w < n; ++w) {
          if (w == x || w == y || !d_.le_inf(w, x)) continue;
          check(
              "transvection commutator", names({{"x", x}, {"y", y}, {"w", w}}),
              [&] { return commutator(tr(x, y), tr(w, x)); }, [&] { return tr(w, y); });
        }
      }
  }

  // Commutator partial conjugations by pairs of order-2 vertices; requires no STIL and no FSIL.
  void commutator_partial_conjugations() {
    const int n = g_.size();
    struct Cpc {
      int v, w;
      VertexSet c;
    };
    std::vector<Cpc> cpcs;
    for (int v = 0; v < n; ++v)
      for (int w = v + 1; w < n; ++w) {
        if (!g_.order(v).is_two() || !g_.order(w).is_two() || commutes(v, w)) continue;
        const auto cw = components_minus_star(g_, w);
        for (const VertexSet& c : components_minus_star(g_, v))
          for (const VertexSet& c2 : cw)
            if (c == c2) cpcs.push_back({v, w, c});
      }
    auto cpc_aut = [&](const Cpc& k) { return pc(k.c, commutator(el(k.v), el(k.w))); };
    auto cpc_name = [&](const Cpc& k) {
      return with_set(names({{"v", k.v}, {"w", k.w}}), "C", k.c);
    };
    for (const Cpc& k : cpcs) {
      for (int u = 0; u < n; ++u) {
        if (u == k.v || u == k.w) continue;
        for (const VertexSet& a : components_minus_star(g_, u))
          check_commute(
              "pc and cpc commute", with_set(names({{"u", u}}), "A", a) + ' ' + cpc_name(k),
              [&] { return pc(a, u); }, [&] { return cpc_aut(k); }, Mode::ExactOrOut);
      }
    }
    for (size_t i = 0; i < cpcs.size(); ++i)
      for (size_t j = i + 1; j < cpcs.size(); ++j)
        check_commute(
            "cpc and cpc commute", cpc_name(cpcs[i]) + " / " + cpc_name(cpcs[j]),
            [&] { return cpc_aut(cpcs[i]); }, [&] { return cpc_aut(cpcs[j]); }, Mode::ExactOrOut);
  }

  // Lifts of the relators of the abelianized image to the Torelli subgroup.
  void torelli_lifts() {
    const int n = g_.size();
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v || !d_.le_inf(u, v)) continue;
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            if (x == y || v == x || u == y || !d_.le_inf(x, y)) continue;
            check(
                "Torelli lift 1", names({{"u", u}, {"v", v}, {"x", x}, {"y", y}}),
                [&] { return commutator(tr(u, v), tr(x, y)); },
                [&] { return u == x && !commutes(v, y) ? ct(x, v, y) : id_; });
          }
        for (int w = 0; w < n; ++w) {
          if (w == u || w == v || !d_.le_inf(v, w)) continue;
          check(
              "Torelli lift 2", names({{"u", u}, {"v", v}, {"w", w}}),
              [&] { return commutator(tr(v, w), tr(u, v)) * tr(u, w, -1); },
              [&] { return commutes(v, w) ? id_ : ct(u, v, w); });
        }
        if (d_.class_inf_of[u] == d_.class_inf_of[v]) {
          auto p = [&] { return tr(u, v) * tr(v, u, -1) * tr(u, v); };
          check(
              "Torelli lift 3", names({{"u", u}, {"v", v}}), [&] { return power(p(), 4); },
              [&] {
                return commutes(u, v) ? id_
                                      : pc1(v, u) * pc1(u, v) * pc1(v, u, -1) * pc1(u, v, -1);
              });
          if (d_.classes_inf[d_.class_inf_of[u]].size() == 2) {
            check(
                "Torelli lift 4", names({{"u", u}, {"v", v}}),
                [&] {
                  const Automorphism q = p() * tr(v, u);
                  return power(p(), 2) * power(q, -3);
                },
                [&] { return id_; });
          }
        }
        if (g_.order(v).is_finite()) {
          check(
              "Torelli lift 5", names({{"u", u}, {"v", v}}),
              [&] { return power(tr(u, v), g_.order(v).value()); }, [&] { return id_; });
        }
      }
  }

  const LabeledGraph& g_;
  CatalogOptions opt_;
  DominationData d_;
  Automorphism id_;
  RelationReport report_;
  bool corrupted_ = false;
};

}  // namespace

RelationReport verify_relation_catalog(const LabeledGraph& g, const CatalogOptions& options) {
  return Catalog(g, options).run();
}

}  // namespace gpab

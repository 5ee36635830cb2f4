#include "ellarr/elliptic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ellarr {

namespace {

bool disjoint_supports(const FaceOrbit& a, const FaceOrbit& b) {
  for (int x : a.support)
    for (int y : b.support)
      if (x == y) return false;
  return true;
}

}  // namespace

EllipticModel build_model(const ToricBundle& bundle) {
  const AcyclicCategory& fc = bundle.cat;
  const int d = bundle.spec.d;
  EllipticModel model;
  model.bundle = bundle;

  std::map<std::pair<int, int>, int> obj_of;
  for (size_t f = 0; f < fc.objects.size(); ++f)
    for (size_t g = 0; g < fc.objects.size(); ++g) {
      if (!disjoint_supports(bundle.geom[f], bundle.geom[g])) continue;
      int rank = (d - fc.objects[f].rank) + (d - fc.objects[g].rank);
      int id = model.cat.add_object(rank, "(" + fc.objects[f].label + "|" + fc.objects[g].label + ")");
      obj_of[{static_cast<int>(f), static_cast<int>(g)}] = id;
      model.pairs.push_back({static_cast<int>(f), static_cast<int>(g)});
    }

  // component = face-category morphism id, or -1 for an identity component
  std::map<std::pair<int, int>, std::vector<int>> fc_between;
  for (size_t m = 0; m < fc.morphisms.size(); ++m)
    fc_between[{fc.morphisms[m].src, fc.morphisms[m].tgt}].push_back(static_cast<int>(m));
  auto components = [&](int from, int to) {
    // morphisms "from -> to" in the opposite category = fc morphisms to -> from
    std::vector<int> parts;
    if (from == to) parts.push_back(-1);
    auto it = fc_between.find({to, from});
    if (it != fc_between.end())
      for (int m : it->second) parts.push_back(m);
    return parts;
  };
  auto part_tag = [&](int p) { return p < 0 ? std::string("*") : fc.morphisms[p].tag; };

  struct MRec {
    int pf, pg;  // components
  };
  std::vector<MRec> mrec;
  std::map<std::tuple<int, int, int, int>, int> mor_of;  // (srcF,srcG,pf,pg)
  for (size_t x = 0; x < model.pairs.size(); ++x)
    for (size_t y = 0; y < model.pairs.size(); ++y) {
      auto [f1, g1] = model.pairs[x];
      auto [f2, g2] = model.pairs[y];
      for (int pf : components(f1, f2))
        for (int pg : components(g1, g2)) {
          if (pf < 0 && pg < 0) continue;
          int id = model.cat.add_morphism(static_cast<int>(x), static_cast<int>(y),
                                          "(" + part_tag(pf) + ";" + part_tag(pg) + ")");
          mrec.push_back({pf, pg});
          mor_of[{f1, g1, pf, pg}] = id;
        }
    }

  auto compose_part = [&](int a, int b) -> std::optional<int> {
    if (a < 0) return b;
    if (b < 0) return a;
    // opposite composition: fc composite of b then a
    auto h = fc.composite(b, a);
    if (!h) return std::nullopt;
    return *h;
  };
  for (size_t f = 0; f < mrec.size(); ++f)
    for (size_t g = 0; g < mrec.size(); ++g) {
      if (model.cat.morphisms[f].tgt != model.cat.morphisms[g].src) continue;
      auto cf = compose_part(mrec[f].pf, mrec[g].pf);
      auto cg = compose_part(mrec[f].pg, mrec[g].pg);
      if (!cf || !cg) throw std::runtime_error("model: missing component composite");
      auto [f1, g1] = model.pairs[model.cat.morphisms[f].src];
      auto it = mor_of.find({f1, g1, *cf, *cg});
      if (it == mor_of.end()) throw std::runtime_error("model: missing composite morphism");
      model.cat.set_composite(static_cast<int>(f), static_cast<int>(g), it->second);
    }

  auto rep = validate(model.cat);
  if (!rep.ok()) throw std::runtime_error("model category invalid: " + rep.violations[0]);
  return model;
}

std::vector<long long> f_vector(const EllipticModel& model) {
  std::vector<long long> f;
  for (const auto& o : model.cat.objects) {
    if (o.rank >= static_cast<int>(f.size())) f.resize(o.rank + 1, 0);
    f[o.rank]++;
  }
  return f;
}

long long model_euler_characteristic(const EllipticModel& model) {
  long long chi = 0;
  auto f = f_vector(model);
  for (size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * f[i];
  return chi;
}

CWReport verify_cw(const EllipticModel& model) {
  CWReport report;
  report.all_pass = true;
  const auto& spec = model.bundle.spec;
  auto support_poset = [&](int face) {
    std::vector<IVec> gens;
    for (int j : model.bundle.geom[face].support) gens.push_back(spec.columns[j]);
    return zonotope_face_poset(gens, spec.d);
  };
  for (size_t x = 0; x < model.cat.objects.size(); ++x) {
    auto [f, g] = model.pairs[x];
    auto sl = slice(model.cat, static_cast<int>(x));
    auto oracle = poset_to_category(poset_product(support_poset(f), support_poset(g)));
    bool pass = sl.is_poset() && categories_isomorphic(sl, oracle).has_value();
    report.entries.push_back({static_cast<int>(x), pass});
    if (!pass) report.all_pass = false;
  }
  return report;
}

AcyclicCategory model_via_product(const ToricBundle& bundle) {
  AcyclicCategory op = opposite(bundle.cat);
  AcyclicCategory prod = product(op, op);
  const size_t n = bundle.cat.objects.size();
  std::vector<int> keep;
  for (size_t f = 0; f < n; ++f)
    for (size_t g = 0; g < n; ++g)
      if (disjoint_supports(bundle.geom[f], bundle.geom[g]))
        keep.push_back(static_cast<int>(f * n + g));
  return full_subcategory(prod, keep);
}

}  // namespace ellarr

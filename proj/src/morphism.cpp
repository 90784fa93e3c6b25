#include "fusionkit/morphism.hpp"

#include <algorithm>
#include <unordered_set>

namespace fusionkit {

Map identity_map(const Lattice& lat, int q) {
  Map m(lat.group().order(), -1);
  for (int x : lat.elements(q)) m[x] = static_cast<int16_t>(x);
  return m;
}

Map compose(const Map& a, const Map& b) {
  Map c(a.size(), -1);
  for (size_t x = 0; x < a.size(); ++x)
    if (a[x] >= 0) c[x] = b[a[x]];
  return c;
}

Map inverse(const Map& a) {
  Map c(a.size(), -1);
  for (size_t x = 0; x < a.size(); ++x)
    if (a[x] >= 0) c[a[x]] = static_cast<int16_t>(x);
  return c;
}

Map restrict_map(const Map& a, const ElementSet& s) {
  Map c(a.size(), -1);
  for (size_t x = 0; x < a.size(); ++x)
    if (s.test(x)) c[x] = a[x];
  return c;
}

ElementSet domain_set(const Map& a) {
  ElementSet s;
  for (size_t x = 0; x < a.size(); ++x)
    if (a[x] >= 0) s.set(x);
  return s;
}

ElementSet image_set(const Map& a) {
  ElementSet s;
  for (int16_t v : a)
    if (v >= 0) s.set(v);
  return s;
}

int image_of(const Lattice& lat, const Map& a) { return lat.id_of(image_set(a)); }

int apply(const Lattice& lat, const Map& a, int q) {
  ElementSet s;
  for (int x : lat.elements(q)) s.set(a[x]);
  return lat.id_of(s);
}

Map conj_map(const Group& g, const ElementSet& s, int x) {
  Map m(g.order(), -1);
  for (int y = 0; y < g.order(); ++y)
    if (s.test(y)) m[y] = static_cast<int16_t>(g.conj(y, x));
  return m;
}

bool is_injective_hom(const Group& g, const Map& a) {
  std::vector<int> dom;
  for (size_t x = 0; x < a.size(); ++x)
    if (a[x] >= 0) dom.push_back(static_cast<int>(x));
  for (int x : dom)
    for (int y : dom) {
      int xy = g.mul(x, y);
      if (a[xy] < 0 || a[xy] != g.mul(a[x], a[y])) return false;
    }
  return image_set(a).count() == dom.size();
}

bool agrees_on(const Map& a, const Map& b, const std::vector<int>& points) {
  for (int x : points)
    if (a[x] != b[x]) return false;
  return true;
}

Morphism conj_morphism(const Lattice& lat, int g, int q, int r) {
  Map m = conj_map(lat.group(), lat.set(q), g);
  if ((image_set(m) & ~lat.set(r)).any())
    fail(ErrorCode::ImageNotContained, "conjugate is not contained in the codomain");
  return Morphism{q, r, std::move(m)};
}

namespace {

// Extends generator images to the subgroup generated by gens[0..k). Returns false on an
// inconsistency or a collision.
bool extend_images(const Group& g, const std::vector<int>& gens, const std::vector<int>& images,
                   size_t k, Map& out) {
  out.assign(g.order(), -1);
  out[0] = 0;
  std::vector<int> frontier{0};
  ElementSet used;
  used.set(0);
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (size_t i = 0; i < k; ++i) {
        int y = g.mul(x, gens[i]);
        int fy = g.mul(out[x], images[i]);
        if (out[y] < 0) {
          if (used.test(fy)) return false;
          used.set(fy);
          out[y] = static_cast<int16_t>(fy);
          next.push_back(y);
        } else if (out[y] != fy) {
          return false;
        }
      }
    frontier = std::move(next);
  }
  return true;
}

}  // namespace

std::vector<Map> automorphisms(const Group& g, const ElementSet& q, const ElementSet& fixed) {
  ElementSet fq = closure(g, [&] {
    std::vector<int> f;
    for (int x = 0; x < g.order(); ++x)
      if ((fixed & q).test(x)) f.push_back(x);
    return f;
  }());
  std::vector<int> gens = generating_set(g, fq);
  size_t forced = gens.size();
  {
    std::vector<int> rest;
    for (int x = 1; x < g.order(); ++x)
      if (q.test(x)) rest.push_back(x);
    std::stable_sort(rest.begin(), rest.end(),
                     [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
    ElementSet span = fq;
    for (int x : rest) {
      if (span == q) break;
      if (span.test(x)) continue;
      gens.push_back(x);
      span = closure(g, gens);
    }
  }
  std::vector<int> images(gens.begin(), gens.end());
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t i = forced; i < gens.size(); ++i)
    for (int x = 1; x < g.order(); ++x)
      if (q.test(x) && g.element_order(x) == g.element_order(gens[i])) candidates[i].push_back(x);

  std::vector<Map> out;
  Map scratch;
  const size_t qsize = q.count();
  auto rec = [&](auto&& self, size_t level) -> void {
    if (!extend_images(g, gens, images, level, scratch)) return;
    if (level == gens.size()) {
      if (domain_set(scratch).count() == qsize) out.push_back(scratch);
      return;
    }
    for (int c : candidates[level]) {
      images[level] = c;
      self(self, level + 1);
    }
  };
  if (forced == gens.size()) {
    if (extend_images(g, gens, images, gens.size(), scratch)) out.push_back(scratch);
  } else {
    rec(rec, forced);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Map> automorphisms(const Lattice& lat, int q) {
  if (lat.order(q) > kPGroupOrderBound) fail(ErrorCode::OrderBoundExceeded, "subgroup too large");
  return automorphisms(lat.group(), lat.set(q));
}

std::vector<Map> generate_group(const std::vector<Map>& gens, const Map& identity) {
  std::unordered_set<Map, MapHash> seen{identity};
  std::vector<Map> all{identity};
  for (size_t i = 0; i < all.size(); ++i)
    for (const Map& g : gens) {
      Map y = compose(all[i], g);
      if (seen.insert(y).second) all.push_back(std::move(y));
    }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace fusionkit

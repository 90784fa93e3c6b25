#include "fusionkit/fusion.hpp"

#include <algorithm>

namespace fusionkit {

int ConjClass::position(int q) const {
  auto it = std::lower_bound(members.begin(), members.end(), q);
  if (it == members.end() || *it != q) return -1;
  return static_cast<int>(it - members.begin());
}

FusionSystem::FusionSystem(std::shared_ptr<const Lattice> lat, int p, int base,
                           std::vector<ConjClass> classes)
    : lat_(std::move(lat)), p_(p), base_(base), classes_(std::move(classes)) {
  class_of_.assign(lat_->size(), -1);
  for (size_t c = 0; c < classes_.size(); ++c)
    for (int q : classes_[c].members) class_of_[q] = static_cast<int>(c);
}

int FusionSystem::class_index(int q) const {
  if (q < 0 || q >= lat_->size() || class_of_[q] < 0)
    fail(ErrorCode::NotASubgroupOfP, "subgroup is not contained in the base");
  return class_of_[q];
}

const Map& FusionSystem::transport(int q) const {
  const ConjClass& c = conj_class(q);
  return c.transport[c.position(q)];
}

std::vector<Map> FusionSystem::aut(int q) const {
  const ConjClass& c = conj_class(q);
  const Map& t = c.transport[c.position(q)];
  Map ti = inverse(t);
  std::vector<Map> out;
  out.reserve(c.aut.size());
  for (const Map& a : c.aut) out.push_back(compose(compose(ti, a), t));
  std::sort(out.begin(), out.end());
  return out;
}

bool FusionSystem::has_aut(int q, const Map& a) const {
  const ConjClass& c = conj_class(q);
  const Map& t = c.transport[c.position(q)];
  return c.aut_index.count(compose(compose(t, a), inverse(t))) > 0;
}

std::vector<Map> FusionSystem::isos(int q, int r) const {
  if (class_index(q) != class_index(r)) return {};
  const ConjClass& c = conj_class(q);
  Map tqi = inverse(c.transport[c.position(q)]);
  const Map& tr = c.transport[c.position(r)];
  std::vector<Map> out;
  out.reserve(c.aut.size());
  for (const Map& a : c.aut) out.push_back(compose(compose(tqi, a), tr));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Morphism> FusionSystem::homs(int q, int r) const {
  if (!in_base(r)) fail(ErrorCode::NotASubgroupOfP, "codomain is not contained in the base");
  std::vector<Morphism> out;
  for (int s : conj_class(q).members)
    if (lat_->le(s, r))
      for (Map& m : isos(q, s)) out.push_back(Morphism{q, r, std::move(m)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Map> FusionSystem::isos_from(int q) const {
  std::vector<Map> out;
  for (int s : conj_class(q).members)
    for (Map& m : isos(q, s)) out.push_back(std::move(m));
  return out;
}

bool FusionSystem::contains_map(const Map& phi) const {
  int q = lat_->find(domain_set(phi));
  int r = lat_->find(image_set(phi));
  if (q < 0 || r < 0 || !in_base(q) || !in_base(r)) return false;
  if (class_of_[q] != class_of_[r]) return false;
  const ConjClass& c = classes_[class_of_[q]];
  Map alpha = compose(compose(c.transport[c.position(q)], phi), inverse(c.transport[c.position(r)]));
  return c.aut_index.count(alpha) > 0;
}

bool FusionSystem::contains(const Morphism& m) const {
  if (!in_base(m.cod)) return false;
  if (!lat_->le(image_of(*lat_, m.map), m.cod)) return false;
  return contains_map(m.map);
}

std::vector<Map> FusionSystem::generators() const {
  std::vector<Map> out;
  for (const ConjClass& c : classes_) {
    for (const Map& a : c.aut_gens) out.push_back(a);
    for (size_t i = 1; i < c.members.size(); ++i) out.push_back(c.transport[i]);
  }
  return out;
}

size_t FusionSystem::morphism_count() const {
  size_t total = 0;
  for (const ConjClass& c : classes_) total += c.members.size() * c.members.size() * c.aut.size();
  return total;
}

std::vector<Map> FusionSystem::aut_base(int q) const {
  MapSet seen;
  std::vector<Map> out;
  for (int g : lat_->elements(normalizer(q))) {
    Map m = conj_map(host(), lat_->set(q), g);
    if (seen.insert(m).second) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int FusionSystem::aut_base_order(int q) const {
  return lat_->order(normalizer(q)) / lat_->order(centralizer(q));
}

bool same_host(const FusionSystem& a, const FusionSystem& b) {
  return a.lattice_ptr() == b.lattice_ptr() || a.host().same_table(b.host());
}

bool is_subsystem(const FusionSystem& e, const FusionSystem& f) {
  if (!same_host(e, f)) return false;
  if (!f.lattice().le(e.base(), f.base())) return false;
  for (const Map& g : e.generators())
    if (!f.contains_map(g)) return false;
  return true;
}

bool operator==(const FusionSystem& a, const FusionSystem& b) {
  return same_host(a, b) && a.base() == b.base() && a.morphism_count() == b.morphism_count() &&
         is_subsystem(a, b);
}

namespace {

class Closure {
public:
  Closure(std::shared_ptr<const Lattice> lat, int base) : lat_(std::move(lat)), base_(base) {
    const int n = lat_->size();
    slot_.assign(n, -1);
    trans_.resize(n);
    for (int q = 0; q < n; ++q) {
      if (!lat_->le(q, base_)) continue;
      slot_[q] = static_cast<int>(slots_.size());
      Slot s;
      s.rep = q;
      s.members = {q};
      Map id = identity_map(*lat_, q);
      s.aut = {id};
      s.index.insert(id);
      trans_[q] = id;
      slots_.push_back(std::move(s));
    }
  }

  void push(int q, Map m) { work_.emplace_back(q, std::move(m)); }

  void run() {
    while (!work_.empty()) {
      auto [q, phi] = std::move(work_.back());
      work_.pop_back();
      process(q, phi);
    }
  }

  std::vector<ConjClass> finish() const {
    std::vector<ConjClass> out;
    for (const Slot& s : slots_) {
      if (s.members.empty()) continue;
      ConjClass c;
      std::vector<int> members = s.members;
      std::sort(members.begin(), members.end());
      c.rep = members.front();
      c.members = members;
      const Map& t = trans_[c.rep];
      Map ti = inverse(t);
      for (const Map& a : s.aut) {
        Map b = compose(compose(ti, a), t);
        c.aut_index.insert(b);
        c.aut.push_back(std::move(b));
      }
      std::sort(c.aut.begin(), c.aut.end());
      for (const Map& a : s.gens) c.aut_gens.push_back(compose(compose(ti, a), t));
      for (int m : members) c.transport.push_back(compose(ti, trans_[m]));
      out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const ConjClass& a, const ConjClass& b) { return a.rep < b.rep; });
    return out;
  }

private:
  struct Slot {
    int rep = 0;
    std::vector<int> members;
    std::vector<Map> aut;
    MapSet index;
    std::vector<Map> gens;
  };

  void add_gens(Slot& s, const std::vector<Map>& extra) {
    bool grew = false;
    for (const Map& g : extra)
      if (!s.index.count(g)) {
        s.gens.push_back(g);
        grew = true;
      }
    if (!grew) return;
    s.aut = generate_group(s.gens, identity_map(*lat_, s.rep));
    s.index = MapSet(s.aut.begin(), s.aut.end());
  }

  void process(int q, const Map& phi) {
    int r = apply(*lat_, phi, q);
    if (slot_[q] < 0 || slot_[r] < 0) fail(ErrorCode::NotASubgroupOfP, "seed leaves the base");
    int a = slot_[q];
    int b = slot_[r];
    Map tau = compose(compose(trans_[q], phi), inverse(trans_[r]));
    if (a == b) {
      if (slots_[a].index.count(tau)) return;
      add_gens(slots_[a], {tau});
    } else {
      if (slots_[a].members.size() < slots_[b].members.size()) {
        std::swap(a, b);
        tau = inverse(tau);
      }
      Slot& keep = slots_[a];
      Slot& gone = slots_[b];
      Map taui = inverse(tau);
      std::vector<Map> moved;
      for (const Map& g : gone.gens) moved.push_back(compose(compose(tau, g), taui));
      for (int s : gone.members) {
        trans_[s] = compose(tau, trans_[s]);
        slot_[s] = a;
        keep.members.push_back(s);
      }
      gone.members.clear();
      gone.aut.clear();
      gone.index.clear();
      gone.gens.clear();
      add_gens(keep, moved);
    }
    for (int m : lat_->maximal(q)) push(m, restrict_map(phi, lat_->set(m)));
  }

  std::shared_ptr<const Lattice> lat_;
  int base_;
  std::vector<int> slot_;
  std::vector<Map> trans_;
  std::vector<Slot> slots_;
  std::vector<std::pair<int, Map>> work_;
};

}  // namespace

FusionSystem generated_fusion(std::shared_ptr<const Lattice> lat, int p, int base,
                              const std::vector<Map>& seeds) {
  const Group& g = lat->group();
  if (!is_p_group_order(lat->order(base), p))
    fail(ErrorCode::NotAPGroup, "base is not a p-group for the given prime");
  Closure cl(lat, base);
  for (auto it = seeds.rbegin(); it != seeds.rend(); ++it) {
    const Map& s = *it;
    if (static_cast<int>(s.size()) != g.order() || !is_injective_hom(g, s))
      fail(ErrorCode::SeedNotInjective, "seed is not an injective homomorphism");
    int q = lat->find(domain_set(s));
    int r = lat->find(image_set(s));
    if (q < 0 || r < 0) fail(ErrorCode::SeedNotInjective, "seed domain is not a subgroup");
    if (!lat->le(q, base) || !lat->le(r, base))
      fail(ErrorCode::NotASubgroupOfP, "seed is not between subgroups of the base");
    cl.push(q, s);
  }
  for (int x : lat->gens(base)) cl.push(base, conj_map(g, lat->set(base), x));
  cl.run();
  return FusionSystem(lat, p, base, cl.finish());
}

FusionSystem inner_fusion(std::shared_ptr<const Lattice> lat, int base, int p) {
  return generated_fusion(std::move(lat), p, base, {});
}

HostedGroup host_for(std::shared_ptr<const Group> ambient, const ElementSet& p_subgroup) {
  HostedGroup h;
  h.ambient = ambient;
  h.embedding = embed_subgroup(*ambient, p_subgroup, ambient->name + ".P");
  h.lattice = std::make_shared<const Lattice>(h.embedding.group, kPGroupOrderBound);
  return h;
}

FusionSystem fusion_of_group(const HostedGroup& host, const ElementSet& k, int base, int p) {
  const Group& g = *host.ambient;
  const Lattice& lat = *host.lattice;
  const auto& to = host.embedding.to_ambient;
  const auto& from = host.embedding.from_ambient;
  ElementSet base_amb;
  for (int x : lat.elements(base)) base_amb.set(to[x]);
  if ((base_amb & ~k).any() || static_cast<int>(base_amb.count()) != p_part(static_cast<int>(k.count()), p))
    fail(ErrorCode::NotSylow, "base is not a Sylow p-subgroup of the acting group");
  std::vector<int> kel;
  for (int x = 0; x < g.order(); ++x)
    if (k.test(x)) kel.push_back(x);
  std::vector<Map> seeds;
  for (int q : lat.subgroups_of(base)) {
    if (q == 0) continue;
    MapSet seen;
    for (int x : kel) {
      Map m(lat.group().order(), -1);
      bool inside = true;
      for (int y : lat.elements(q)) {
        int z = from[g.conj(to[y], x)];
        if (z < 0 || !lat.contains(base, z)) {
          inside = false;
          break;
        }
        m[y] = static_cast<int16_t>(z);
      }
      if (inside && seen.insert(m).second) seeds.push_back(std::move(m));
    }
  }
  return generated_fusion(host.lattice, p, base, seeds);
}

FusionSystem fusion_of_group(std::shared_ptr<const Group> g, int p) {
  ElementSet s = sylow(*g, p);
  HostedGroup h = host_for(g, s);
  return fusion_of_group(h, g->all(), h.lattice->top(), p);
}

FusionSystem internal_product(const FusionSystem& e1, const FusionSystem& e2) {
  if (!same_host(e1, e2)) fail(ErrorCode::HostMismatch, "factors live on different hosts");
  if (e1.prime() != e2.prime()) fail(ErrorCode::PrimeMismatch, "factors have different primes");
  const Lattice& lat = e1.lattice();
  const Group& g = lat.group();
  int b1 = e1.base();
  int b2 = e2.base();
  if (lat.meet(b1, b2) != 0) fail(ErrorCode::PreconditionFailed, "factors meet nontrivially");
  for (int x : lat.gens(b1))
    for (int y : lat.gens(b2))
      if (g.mul(x, y) != g.mul(y, x)) fail(ErrorCode::PreconditionFailed, "factors do not commute");
  int prod = lat.join(b1, b2);
  std::vector<Map> seeds;
  auto lift = [&](const Map& a, int other) {
    Map m(g.order(), -1);
    for (int x = 0; x < g.order(); ++x)
      if (a[x] >= 0)
        for (int y : lat.elements(other)) m[g.mul(x, y)] = static_cast<int16_t>(g.mul(a[x], y));
    return m;
  };
  for (const Map& a : e1.generators()) seeds.push_back(lift(a, b2));
  for (const Map& b : e2.generators()) seeds.push_back(lift(b, b1));
  return generated_fusion(e1.lattice_ptr(), e1.prime(), prod, seeds);
}

FusionSystem transport_system(const FusionSystem& f, std::shared_ptr<const Lattice> target,
                              const std::vector<int>& embed) {
  std::vector<Map> seeds;
  int n = target->group().order();
  for (const Map& a : f.generators()) {
    Map m(n, -1);
    for (size_t x = 0; x < a.size(); ++x)
      if (a[x] >= 0) m[embed[x]] = static_cast<int16_t>(embed[a[x]]);
    seeds.push_back(std::move(m));
  }
  ElementSet b;
  for (int x : f.lattice().elements(f.base())) b.set(embed[x]);
  int base = target->id_of(b);
  return generated_fusion(std::move(target), f.prime(), base, seeds);
}

FusionSystem direct_product(const FusionSystem& f1, const FusionSystem& f2) {
  if (f1.prime() != f2.prime()) fail(ErrorCode::PrimeMismatch, "factors have different primes");
  const Group& h1 = f1.host();
  const Group& h2 = f2.host();
  auto prod = std::make_shared<const Group>(direct_product_group(h1, h2));
  auto lat = std::make_shared<const Lattice>(prod, kPGroupOrderBound);
  int n2 = h2.order();
  std::vector<int> e1(h1.order());
  std::vector<int> e2(n2);
  for (int x = 0; x < h1.order(); ++x) e1[x] = x * n2;
  for (int y = 0; y < n2; ++y) e2[y] = y;
  FusionSystem a = transport_system(f1, lat, e1);
  FusionSystem b = transport_system(f2, lat, e2);
  return internal_product(a, b);
}

}  // namespace fusionkit

namespace fusionkit {

ElementSet MapGroup::set_of(const std::vector<Map>& maps) const {
  ElementSet s;
  for (const Map& m : maps) {
    int i = find(m);
    if (i < 0) fail(ErrorCode::NotASubgroup, "map is not in the automorphism group");
    s.set(i);
  }
  return s;
}

std::vector<Map> MapGroup::maps_of(const ElementSet& s) const {
  std::vector<Map> out;
  for (size_t i = 0; i < elems.size(); ++i)
    if (s.test(i)) out.push_back(elems[i]);
  return out;
}

MapGroup map_group(std::vector<Map> elems) {
  MapGroup mg;
  std::sort(elems.begin(), elems.end());
  int n = static_cast<int>(elems.size());
  if (n > kDefaultOrderBound) fail(ErrorCode::OrderBoundExceeded, "automorphism group too large");
  // The identity fixes every point of its domain; move it to the front.
  auto is_id = [](const Map& m) {
    for (size_t x = 0; x < m.size(); ++x)
      if (m[x] >= 0 && m[x] != static_cast<int16_t>(x)) return false;
    return true;
  };
  auto it = std::find_if(elems.begin(), elems.end(), is_id);
  std::rotate(elems.begin(), it, it + 1);
  for (int i = 0; i < n; ++i) mg.index.emplace(elems[i], i);
  std::vector<int16_t> table(static_cast<size_t>(n) * n);
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back("a" + std::to_string(a));
    for (int b = 0; b < n; ++b) {
      int c = mg.find(compose(elems[a], elems[b]));
      if (c < 0) fail(ErrorCode::NotASubgroup, "maps are not closed under composition");
      table[a * n + b] = static_cast<int16_t>(c);
    }
  }
  mg.elems = std::move(elems);
  mg.table = std::make_shared<const Group>(Group::from_table(n, std::move(table), std::move(labels)));
  return mg;
}

int map_order(const Map& a) {
  Map x = a;
  int k = 1;
  for (;;) {
    bool id = true;
    for (size_t i = 0; i < x.size(); ++i)
      if (x[i] >= 0 && x[i] != static_cast<int16_t>(i)) {
        id = false;
        break;
      }
    if (id) return k;
    x = compose(x, a);
    ++k;
  }
}

std::vector<Map> p_elements(const std::vector<Map>& group, int p, bool p_power) {
  std::vector<Map> out;
  for (const Map& a : group) {
    int o = map_order(a);
    bool pp = is_p_group_order(o, p);
    bool coprime = o % p != 0;
    if (p_power ? pp : coprime) out.push_back(a);
  }
  return out;
}

}  // namespace fusionkit

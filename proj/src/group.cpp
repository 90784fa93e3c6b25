#include "fusionkit/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace fusionkit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrorCode::UnknownCatalogName: return "UnknownCatalogName";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::ImageNotContained: return "ImageNotContained";
    case ErrorCode::NotSylow: return "NotSylow";
    case ErrorCode::NotAPGroup: return "NotAPGroup";
    case ErrorCode::SeedNotInjective: return "SeedNotInjective";
    case ErrorCode::NotASubgroupOfP: return "NotASubgroupOfP";
    case ErrorCode::NotAnIsomorphism: return "NotAnIsomorphism";
    case ErrorCode::PrimeMismatch: return "PrimeMismatch";
    case ErrorCode::NotStronglyClosed: return "NotStronglyClosed";
    case ErrorCode::NotASubsystem: return "NotASubsystem";
    case ErrorCode::NotFullyNormalized: return "NotFullyNormalized";
    case ErrorCode::NotFullyCentralized: return "NotFullyCentralized";
    case ErrorCode::NotSaturated: return "NotSaturated";
    case ErrorCode::SaturationValidationFailed: return "SaturationValidationFailed";
    case ErrorCode::NoDecomposition: return "NoDecomposition";
    case ErrorCode::NotCentric: return "NotCentric";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::InconsistentPartial: return "InconsistentPartial";
    case ErrorCode::PostconditionViolation: return "PostconditionViolation";
    case ErrorCode::IndexNotCoprime: return "IndexNotCoprime";
    case ErrorCode::NotNormalInAutF: return "NotNormalInAutF";
    case ErrorCode::CoreUndefined: return "CoreUndefined";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::HostMismatch: return "HostMismatch";
  }
  return "Unknown";
}

Perm parse_cycles(const std::string& text, int degree) {
  if (degree < 1 || degree > 64) fail(ErrorCode::InvalidPermutation, "degree out of range");
  Perm perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> used(degree, false);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail(ErrorCode::ParseError, "expected '(' in \"" + text + "\"");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')' && cycle.empty()) break;
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) fail(ErrorCode::ParseError, "expected a point in \"" + text + "\"");
      int pt = std::stoi(text.substr(start, i - start));
      if (pt < 1 || pt > degree)
        fail(ErrorCode::InvalidPermutation, "point " + std::to_string(pt) + " outside degree");
      if (used[pt - 1]) fail(ErrorCode::InvalidPermutation, "point repeated in \"" + text + "\"");
      used[pt - 1] = true;
      cycle.push_back(pt - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') break;
      fail(ErrorCode::ParseError, "unterminated cycle in \"" + text + "\"");
    }
    ++i;
    for (size_t k = 0; k < cycle.size(); ++k) perm[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return perm;
}

std::string format_cycles(const Perm& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (size_t s = 0; s < perm.size(); ++s) {
    if (seen[s] || perm[s] == static_cast<int>(s)) continue;
    out += "(";
    size_t x = s;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ",";
      out += std::to_string(x + 1);
      first = false;
      x = perm[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Group Group::from_permutations(int degree, const std::vector<Perm>& generators, int max_order) {
  for (const Perm& g : generators) {
    if (static_cast<int>(g.size()) != degree)
      fail(ErrorCode::InvalidPermutation, "generator has wrong degree");
    std::vector<bool> hit(degree, false);
    for (int x : g) {
      if (x < 0 || x >= degree || hit[x]) fail(ErrorCode::InvalidPermutation, "not a bijection");
      hit[x] = true;
    }
  }
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  int bound = std::min(max_order, kMaxElements);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier) {
      for (const Perm& g : generators) {
        Perm y(degree);
        for (int i = 0; i < degree; ++i) y[i] = g[x[i]];
        if (seen.insert(y).second) {
          if (static_cast<int>(seen.size()) > bound)
            fail(ErrorCode::OrderBoundExceeded,
                 "group order exceeds bound " + std::to_string(max_order));
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  Group grp;
  grp.degree_ = degree;
  grp.perms_.assign(seen.begin(), seen.end());
  grp.n_ = static_cast<int>(grp.perms_.size());
  std::map<Perm, int> pos;
  for (int i = 0; i < grp.n_; ++i) pos[grp.perms_[i]] = i;
  grp.table_.resize(static_cast<size_t>(grp.n_) * grp.n_);
  Perm y(degree);
  for (int a = 0; a < grp.n_; ++a) {
    for (int b = 0; b < grp.n_; ++b) {
      const Perm& pa = grp.perms_[a];
      const Perm& pb = grp.perms_[b];
      for (int i = 0; i < degree; ++i) y[i] = pb[pa[i]];
      grp.table_[a * grp.n_ + b] = static_cast<int16_t>(pos[y]);
    }
  }
  for (const Perm& g : generators) {
    int idx = pos[g];
    if (idx != 0 && std::find(grp.gens_.begin(), grp.gens_.end(), idx) == grp.gens_.end())
      grp.gens_.push_back(idx);
  }
  for (const Perm& p : grp.perms_) grp.labels_.push_back(format_cycles(p));
  grp.finish();
  return grp;
}

Group Group::from_table(int n, std::vector<int16_t> table, std::vector<std::string> labels) {
  if (n < 1 || n > kMaxElements) fail(ErrorCode::OrderBoundExceeded, "table size out of range");
  Group grp;
  grp.n_ = n;
  grp.table_ = std::move(table);
  grp.labels_ = std::move(labels);
  grp.finish();
  grp.gens_ = generating_set(grp, grp.all());
  return grp;
}

void Group::finish() {
  inv_.assign(n_, 0);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0) {
        inv_[a] = static_cast<int16_t>(b);
        break;
      }
  elem_order_.assign(n_, 1);
  for (int a = 0; a < n_; ++a) {
    int x = a;
    int k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    elem_order_[a] = static_cast<int16_t>(k);
  }
  if (labels_.size() != static_cast<size_t>(n_)) {
    labels_.clear();
    for (int a = 0; a < n_; ++a) labels_.push_back("g" + std::to_string(a));
  }
}

int Group::power(int a, int k) const {
  int x = 0;
  k %= elem_order_[a];
  if (k < 0) k += elem_order_[a];
  for (int i = 0; i < k; ++i) x = mul(x, a);
  return x;
}

int Group::index_of(const Perm& perm) const {
  auto it = std::lower_bound(perms_.begin(), perms_.end(), perm);
  if (it == perms_.end() || *it != perm) return -1;
  return static_cast<int>(it - perms_.begin());
}

ElementSet Group::all() const {
  ElementSet s;
  for (int i = 0; i < n_; ++i) s.set(i);
  return s;
}

ElementSet closure(const Group& g, const std::vector<int>& gens) {
  ElementSet s;
  s.set(0);
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int h : gens) {
        int y = g.mul(x, h);
        if (!s.test(y)) {
          s.set(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return s;
}

std::vector<int16_t> elements_of(const ElementSet& s, int n) {
  std::vector<int16_t> out;
  for (int i = 0; i < n; ++i)
    if (s.test(i)) out.push_back(static_cast<int16_t>(i));
  return out;
}

bool is_subgroup(const Group& g, const ElementSet& s) {
  if (!s.test(0)) return false;
  auto el = elements_of(s, g.order());
  for (int a : el)
    for (int b : el)
      if (!s.test(g.mul(a, b))) return false;
  return true;
}

bool is_p_group_order(int order, int p) {
  while (order % p == 0) order /= p;
  return order == 1;
}

int p_part(int n, int p) {
  int r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<int> generating_set(const Group& g, const ElementSet& s) {
  std::vector<int> el;
  for (int i = 1; i < g.order(); ++i)
    if (s.test(i)) el.push_back(i);
  std::stable_sort(el.begin(), el.end(),
                   [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
  std::vector<int> gens;
  ElementSet span;
  span.set(0);
  for (int x : el) {
    if (span == s) break;
    if (span.test(x)) continue;
    gens.push_back(x);
    span = closure(g, gens);
  }
  return gens;
}

ElementSet normalizer_set(const Group& g, const ElementSet& within, const ElementSet& h) {
  auto gens = generating_set(g, h);
  ElementSet out;
  for (int x = 0; x < g.order(); ++x) {
    if (!within.test(x)) continue;
    bool ok = true;
    for (int y : gens)
      if (!h.test(g.conj(y, x))) {
        ok = false;
        break;
      }
    if (ok) out.set(x);
  }
  return out;
}

ElementSet centralizer_set(const Group& g, const ElementSet& within, const ElementSet& h) {
  auto gens = generating_set(g, h);
  ElementSet out;
  for (int x = 0; x < g.order(); ++x) {
    if (!within.test(x)) continue;
    bool ok = true;
    for (int y : gens)
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    if (ok) out.set(x);
  }
  return out;
}

static ElementSet conjugate_set(const Group& g, const ElementSet& s, int x) {
  ElementSet out;
  for (int i = 0; i < g.order(); ++i)
    if (s.test(i)) out.set(g.conj(i, x));
  return out;
}

static bool set_less(const ElementSet& a, const ElementSet& b, int n) {
  size_t ca = a.count();
  size_t cb = b.count();
  if (ca != cb) return ca < cb;
  auto ea = elements_of(a, n);
  auto eb = elements_of(b, n);
  return ea < eb;
}

ElementSet sylow(const Group& g, int p) {
  int target = p_part(g.order(), p);
  ElementSet h;
  h.set(0);
  std::vector<int> gens;
  while (static_cast<int>(h.count()) < target) {
    ElementSet n = normalizer_set(g, g.all(), h);
    int pick = -1;
    for (int x = 1; x < g.order() && pick < 0; ++x)
      if (n.test(x) && !h.test(x) && h.test(g.power(x, p))) pick = x;
    gens.push_back(pick);
    h = closure(g, gens);
  }
  ElementSet best = h;
  for (int x = 0; x < g.order(); ++x) {
    ElementSet c = conjugate_set(g, h, x);
    if (set_less(c, best, g.order())) best = c;
  }
  return best;
}

ElementSet o_p_prime(const Group& g, int p) {
  ElementSet k;
  k.set(0);
  for (int x = 1; x < g.order(); ++x) {
    if (g.element_order(x) % p == 0 || k.test(x)) continue;
    std::vector<int> conjugates;
    for (int y = 0; y < g.order(); ++y) conjugates.push_back(g.conj(x, y));
    ElementSet nx = closure(g, conjugates);
    if (nx.count() % p == 0) continue;
    auto kg = generating_set(g, k);
    for (int c : conjugates) kg.push_back(c);
    k = closure(g, kg);
  }
  return k;
}

Lattice::Lattice(std::shared_ptr<const Group> group, int max_order) : group_(std::move(group)) {
  const Group& g = *group_;
  const int n = g.order();
  if (n > max_order)
    fail(ErrorCode::OrderBoundExceeded,
         "order " + std::to_string(n) + " exceeds bound " + std::to_string(max_order));
  std::unordered_map<ElementSet, std::vector<int>, ElementSetHash> found;
  std::vector<ElementSet> queue;
  std::vector<int> cyclic_gen;
  std::vector<ElementSet> cyclic_sets;
  for (int x = 0; x < n; ++x) {
    ElementSet c = closure(g, {x});
    if (found.emplace(c, x == 0 ? std::vector<int>{} : std::vector<int>{x}).second) {
      queue.push_back(c);
      cyclic_gen.push_back(x);
      cyclic_sets.push_back(c);
    }
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    ElementSet h = queue[qi];
    std::vector<int> hg = found[h];
    for (size_t ci = 0; ci < cyclic_sets.size(); ++ci) {
      if ((cyclic_sets[ci] & ~h).none()) continue;
      std::vector<int> gens = hg;
      gens.push_back(cyclic_gen[ci]);
      ElementSet j = closure(g, gens);
      if (found.emplace(j, gens).second) queue.push_back(j);
    }
  }
  std::vector<ElementSet> sets = queue;
  std::vector<std::vector<int16_t>> elems;
  std::vector<int> perm(sets.size());
  std::iota(perm.begin(), perm.end(), 0);
  for (const auto& s : sets) elems.push_back(elements_of(s, n));
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (elems[a].size() != elems[b].size()) return elems[a].size() < elems[b].size();
    return elems[a] < elems[b];
  });
  for (int idx : perm) {
    SubgroupInfo info;
    info.set = sets[idx];
    info.elems = elems[idx];
    info.order = static_cast<int>(info.elems.size());
    info.gens = generating_set(g, info.set);
    index_.emplace(info.set, static_cast<int>(subs_.size()));
    subs_.push_back(std::move(info));
  }
  cyclic_.resize(n);
  for (int x = 0; x < n; ++x) cyclic_[x] = index_.at(closure(g, {x}));
  ElementSet all = g.all();
  for (const auto& s : subs_) {
    normalizer_.push_back(index_.at(normalizer_set(g, all, s.set)));
    centralizer_.push_back(index_.at(centralizer_set(g, all, s.set)));
  }
  maximal_.resize(subs_.size());
  for (int q = 0; q < size(); ++q) {
    std::vector<int>& mx = maximal_[q];
    for (int h = q - 1; h >= 0; --h) {
      if (subs_[h].order == subs_[q].order || !le(h, q)) continue;
      bool covered = false;
      for (int m : mx)
        if (le(h, m)) {
          covered = true;
          break;
        }
      if (!covered) mx.push_back(h);
    }
    std::sort(mx.begin(), mx.end());
  }
}

int Lattice::find(const ElementSet& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : it->second;
}

int Lattice::id_of(const ElementSet& s) const {
  int id = find(s);
  if (id < 0) fail(ErrorCode::NotASubgroup, "element set is not a subgroup");
  return id;
}

int Lattice::join(int a, int b) const {
  std::vector<int> gens = subs_[a].gens;
  gens.insert(gens.end(), subs_[b].gens.begin(), subs_[b].gens.end());
  return index_.at(closure(*group_, gens));
}

int Lattice::join_set(const ElementSet& s) const {
  std::vector<int> gens;
  for (int i = 0; i < group_->order(); ++i)
    if (s.test(i)) gens.push_back(i);
  return index_.at(closure(*group_, gens));
}

std::vector<int> Lattice::subgroups_of(int q) const {
  std::vector<int> out;
  for (int h = 0; h <= q; ++h)
    if (le(h, q)) out.push_back(h);
  return out;
}

int Lattice::conjugate(int q, int g) const { return index_.at(conjugate_set(*group_, subs_[q].set, g)); }

Embedding embed_subgroup(const Group& g, const ElementSet& s, const std::string& name) {
  Embedding e;
  e.from_ambient.assign(g.order(), -1);
  for (int i = 0; i < g.order(); ++i)
    if (s.test(i)) {
      e.from_ambient[i] = static_cast<int>(e.to_ambient.size());
      e.to_ambient.push_back(i);
    }
  int m = static_cast<int>(e.to_ambient.size());
  std::vector<int16_t> table(static_cast<size_t>(m) * m);
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) {
    labels.push_back(g.label(e.to_ambient[a]));
    for (int b = 0; b < m; ++b)
      table[a * m + b] = static_cast<int16_t>(e.from_ambient[g.mul(e.to_ambient[a], e.to_ambient[b])]);
  }
  Group sub = Group::from_table(m, std::move(table), std::move(labels));
  sub.name = name;
  e.group = std::make_shared<const Group>(std::move(sub));
  return e;
}

Quotient quotient_group(const Group& g, const ElementSet& numerator, const ElementSet& kernel) {
  Quotient q;
  q.coset_of.assign(g.order(), -1);
  auto kel = elements_of(kernel, g.order());
  for (int x = 0; x < g.order(); ++x) {
    if (!numerator.test(x) || q.coset_of[x] >= 0) continue;
    int id = static_cast<int>(q.rep.size());
    q.rep.push_back(x);
    for (int k : kel) q.coset_of[g.mul(k, x)] = id;
  }
  int m = static_cast<int>(q.rep.size());
  std::vector<int16_t> table(static_cast<size_t>(m) * m);
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) {
    labels.push_back(g.label(q.rep[a]) + "*K");
    for (int b = 0; b < m; ++b) table[a * m + b] = static_cast<int16_t>(q.coset_of[g.mul(q.rep[a], q.rep[b])]);
  }
  Group quo = Group::from_table(m, std::move(table), std::move(labels));
  quo.name = g.name + "/K";
  q.group = std::make_shared<const Group>(std::move(quo));
  return q;
}

Group direct_product_group(const Group& a, const Group& b) {
  int na = a.order();
  int nb = b.order();
  int n = na * nb;
  if (n > kMaxElements) fail(ErrorCode::OrderBoundExceeded, "product too large");
  std::vector<int16_t> table(static_cast<size_t>(n) * n);
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    labels.push_back("[" + a.label(x / nb) + "," + b.label(x % nb) + "]");
    for (int y = 0; y < n; ++y)
      table[x * n + y] = static_cast<int16_t>(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
  }
  Group out = Group::from_table(n, std::move(table), std::move(labels));
  out.name = a.name + "x" + b.name;
  return out;
}

}  // namespace fusionkit

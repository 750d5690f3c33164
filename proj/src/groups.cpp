#include "ybe/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ybe {

// ---------------------------------------------------------------- AbelianGroup

AbelianGroup::AbelianGroup(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  order_ = 1;
  for (int m : moduli_) {
    if (m < 2) throw std::invalid_argument("AbelianGroup: every modulus must be >= 2");
    order_ *= m;
    if (order_ > (1LL << 40)) throw std::invalid_argument("AbelianGroup: order too large");
  }
}

Element AbelianGroup::add(const Element& a, const Element& b) const {
  require(a);
  require(b);
  Element r(moduli_.size());
  for (size_t i = 0; i < moduli_.size(); ++i) r[i] = (a[i] + b[i]) % moduli_[i];
  return r;
}

Element AbelianGroup::neg(const Element& a) const {
  require(a);
  Element r(moduli_.size());
  for (size_t i = 0; i < moduli_.size(); ++i) r[i] = (moduli_[i] - a[i]) % moduli_[i];
  return r;
}

Element AbelianGroup::sub(const Element& a, const Element& b) const {
  return add(a, neg(b));
}

Element AbelianGroup::scalar_mul(long long c, const Element& a) const {
  require(a);
  Element r(moduli_.size());
  for (size_t i = 0; i < moduli_.size(); ++i) {
    long long v = (c % moduli_[i]) * a[i] % moduli_[i];
    r[i] = static_cast<int>((v + moduli_[i]) % moduli_[i]);
  }
  return r;
}

Element AbelianGroup::basis_element(int i) const {
  Element r = zero();
  r.at(i) = 1;
  return r;
}

bool AbelianGroup::contains(const Element& a) const {
  if (a.size() != moduli_.size()) return false;
  for (size_t i = 0; i < moduli_.size(); ++i)
    if (a[i] < 0 || a[i] >= moduli_[i]) return false;
  return true;
}

void AbelianGroup::require(const Element& a) const {
  if (!contains(a)) throw std::domain_error("element does not belong to the group");
}

int AbelianGroup::encode(const Element& a) const {
  require(a);
  long long idx = 0;
  for (size_t i = 0; i < moduli_.size(); ++i) idx = idx * moduli_[i] + a[i];
  return static_cast<int>(idx);
}

Element AbelianGroup::decode(int index) const {
  if (index < 0 || index >= order_) throw std::domain_error("index out of range");
  Element r(moduli_.size());
  for (size_t i = moduli_.size(); i-- > 0;) {
    r[i] = index % moduli_[i];
    index /= moduli_[i];
  }
  return r;
}

int AbelianGroup::element_order(const Element& a) const {
  require(a);
  long long ord = 1;
  for (size_t i = 0; i < moduli_.size(); ++i) {
    int k = moduli_[i] / std::gcd(moduli_[i], a[i]);
    ord = std::lcm(ord, static_cast<long long>(k));
  }
  return static_cast<int>(ord);
}

int AbelianGroup::element_order_by_index(int index) const {
  return element_order(decode(index));
}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("Permutation: images are not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycle(int n, const std::vector<int>& cycle) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  for (size_t i = 0; i < cycle.size(); ++i)
    im[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return Permutation(std::move(im));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("Permutation: degree mismatch");
  std::vector<int> im(a.degree());
  for (int x = 0; x < a.degree(); ++x) im[x] = a(b(x));
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (size_t x = 0; x < images_.size(); ++x) im[images_[x]] = static_cast<int>(x);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x)) return false;
  return true;
}

int Permutation::order() const {
  int ord = 1;
  for (int len : cycle_type()) ord = std::lcm(ord, len);
  return ord;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<char> seen(images_.size(), 0);
  std::vector<int> lengths;
  for (size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int x = static_cast<int>(start); !seen[x]; x = images_[x]) {
      seen[x] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

// ---------------------------------------------------------------- PermGroup

PermGroup::PermGroup(int degree, std::vector<Permutation> generators,
                     std::vector<Permutation> elements)
    : degree_(degree),
      generators_(std::move(generators)),
      elements_(std::move(elements)) {}

int PermGroup::index_of(const Permutation& p) const {
  for (size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == p) return static_cast<int>(i);
  return -1;
}

PermGroup generate_perm_group(const std::vector<Permutation>& gens,
                              std::optional<int> degree) {
  int n;
  if (!gens.empty()) {
    n = gens.front().degree();
    for (const auto& g : gens)
      if (g.degree() != n)
        throw std::invalid_argument("generate_perm_group: mixed degrees");
  } else if (degree) {
    n = *degree;
  } else {
    throw std::invalid_argument(
        "generate_perm_group: empty generator list needs an explicit degree");
  }

  std::vector<Permutation> elements{Permutation::identity(n)};
  std::map<std::vector<int>, int> index{{elements[0].images(), 0}};
  for (size_t head = 0; head < elements.size(); ++head) {
    const Permutation current = elements[head]; // copy: elements may reallocate
    for (const auto& g : gens) {
      Permutation next = current * g;
      if (index.emplace(next.images(), elements.size()).second)
        elements.push_back(std::move(next));
    }
  }
  return PermGroup(n, gens, std::move(elements));
}

bool is_transitive(const PermGroup& g) {
  int n = g.degree();
  if (n == 0) throw std::invalid_argument("is_transitive: degree must be >= 1");
  std::vector<char> reached(n, 0);
  reached[0] = 1;
  std::vector<int> stack{0};
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& gen : g.generators()) {
      for (int y : {gen(x), gen.inverse()(x)}) {
        if (!reached[y]) {
          reached[y] = 1;
          ++count;
          stack.push_back(y);
        }
      }
    }
  }
  return count == n;
}

// ---------------------------------------------------------------- GroupTable

GroupTable::GroupTable(int order, std::vector<int> table, int identity)
    : order_(order), table_(std::move(table)), identity_(identity) {
  if (order_ < 1 || static_cast<int>(table_.size()) != order_ * order_)
    throw std::invalid_argument("GroupTable: bad table shape");
  for (int v : table_)
    if (v < 0 || v >= order_) throw std::invalid_argument("GroupTable: entry out of range");
  inverse_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0)
      throw validation_error("GroupTable: element " + std::to_string(a) + " has no inverse");
  }
}

int GroupTable::power(int a, int k) const {
  int r = identity_;
  int base = a;
  if (k < 0) {
    base = inverse_[a];
    k = -k;
  }
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

int GroupTable::element_order(int a) const {
  int x = a;
  int k = 1;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

void GroupTable::check_group_laws() const {
  for (int a = 0; a < order_; ++a) {
    if (mul(identity_, a) != a || mul(a, identity_) != a)
      throw validation_error("GroupTable: identity law fails at " + std::to_string(a));
  }
  // inverse law already established in the constructor
  int step = order_ <= 200 ? 1 : (order_ + 199) / 200;
  for (int a = 0; a < order_; a += step)
    for (int b = 0; b < order_; b += step)
      for (int c = 0; c < order_; c += step)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw validation_error("GroupTable: associativity fails at (" +
                                 std::to_string(a) + "," + std::to_string(b) + "," +
                                 std::to_string(c) + ")");
}

GroupTable table_from_perm_group(const PermGroup& g) {
  int n = static_cast<int>(g.order());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[g.elements()[i].images()] = i;
  std::vector<int> table(static_cast<size_t>(n) * n);
  int identity = index.at(Permutation::identity(g.degree()).images());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[a * n + b] = index.at((g.elements()[a] * g.elements()[b]).images());
  GroupTable t(n, std::move(table), identity);
  return t;
}

// ---------------------------------------------------------------- subgroups

SubgroupSet closure(const GroupTable& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{g.identity()};
  in[g.identity()] = 1;
  for (int x : gens) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  }
  // multiply frontier elements by generators until closed
  for (size_t head = 0; head < members.size(); ++head) {
    for (int x : gens) {
      int next = g.mul(members[head], x);
      if (!in[next]) {
        in[next] = 1;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<SubgroupSet> subgroups(const GroupTable& g, const Bounds& bounds) {
  if (g.order() > bounds.subgroup_order)
    throw resource_error("subgroups: order " + std::to_string(g.order()) +
                         " exceeds bound " + std::to_string(bounds.subgroup_order));

  // cyclic seeds ordered by element order
  std::vector<int> elems(g.order());
  std::iota(elems.begin(), elems.end(), 0);
  std::stable_sort(elems.begin(), elems.end(), [&](int a, int b) {
    return g.element_order(a) < g.element_order(b);
  });
  std::set<SubgroupSet> cyclic;
  for (int a : elems) cyclic.insert(closure(g, {a}));

  std::set<SubgroupSet> all{SubgroupSet{g.identity()}};
  for (const auto& c : cyclic) all.insert(c);

  std::vector<SubgroupSet> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<SubgroupSet> next;
    for (const auto& s : frontier) {
      for (const auto& c : cyclic) {
        std::vector<int> gens(s);
        gens.insert(gens.end(), c.begin(), c.end());
        SubgroupSet j = closure(g, gens);
        if (all.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }

  std::vector<SubgroupSet> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool is_subgroup(const GroupTable& g, const SubgroupSet& h) {
  if (h.empty() || !std::is_sorted(h.begin(), h.end())) return false;
  if (!std::binary_search(h.begin(), h.end(), g.identity())) return false;
  for (int a : h)
    for (int b : h)
      if (!std::binary_search(h.begin(), h.end(), g.mul(a, b))) return false;
  return true;
}

bool is_normal(const GroupTable& g, const SubgroupSet& h) {
  for (int x = 0; x < g.order(); ++x)
    for (int a : h)
      if (!std::binary_search(h.begin(), h.end(), g.conjugate(x, a))) return false;
  return true;
}

SubgroupSet normal_core(const GroupTable& g, const SubgroupSet& h) {
  if (!is_subgroup(g, h))
    throw std::domain_error("normal_core: not a subgroup");
  std::vector<char> core(g.order(), 0);
  for (int a : h) core[a] = 1;
  for (int x = 0; x < g.order(); ++x) {
    std::vector<char> conj(g.order(), 0);
    for (int a : h) conj[g.conjugate(x, a)] = 1;
    for (int e = 0; e < g.order(); ++e) core[e] = core[e] && conj[e];
  }
  SubgroupSet out;
  for (int e = 0; e < g.order(); ++e)
    if (core[e]) out.push_back(e);
  return out;
}

GroupTable subgroup_table(const GroupTable& g, const SubgroupSet& set) {
  std::vector<int> local(g.order(), -1);
  for (size_t i = 0; i < set.size(); ++i) local[set[i]] = static_cast<int>(i);
  int n = static_cast<int>(set.size());
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int prod = local[g.mul(set[a], set[b])];
      if (prod < 0) throw std::domain_error("subgroup_table: set is not closed");
      table[a * n + b] = prod;
    }
  return GroupTable(n, std::move(table), local[g.identity()]);
}

Quotient quotient_table(const GroupTable& g, const SubgroupSet& normal_sub) {
  if (!is_normal(g, normal_sub))
    throw std::domain_error("quotient_table: subgroup is not normal");
  int n = g.order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int k : normal_sub) coset_of[g.mul(x, k)] = id;
  }
  int m = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[a * m + b] = coset_of[g.mul(reps[a], reps[b])];
  return Quotient{GroupTable(m, std::move(table), coset_of[g.identity()]),
                  std::move(coset_of), std::move(reps)};
}

// ------------------------------------------------------- AbelianAutomorphism

AbelianAutomorphism::AbelianAutomorphism(AbelianGroup group,
                                         std::vector<Element> images)
    : group_(std::move(group)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != group_.rank())
    throw std::invalid_argument("AbelianAutomorphism: one image per basis element");
  for (const auto& im : images_) group_.require(im);
}

Element AbelianAutomorphism::apply(const Element& a) const {
  group_.require(a);
  Element r = group_.zero();
  for (int i = 0; i < group_.rank(); ++i)
    r = group_.add(r, group_.scalar_mul(a[i], images_[i]));
  return r;
}

int AbelianAutomorphism::apply_index(int index) const {
  return group_.encode(apply(group_.decode(index)));
}

AbelianAutomorphism AbelianAutomorphism::compose(const AbelianAutomorphism& inner) const {
  std::vector<Element> images;
  images.reserve(images_.size());
  for (const auto& im : inner.images_) images.push_back(apply(im));
  return AbelianAutomorphism(group_, std::move(images));
}

AbelianAutomorphism AbelianAutomorphism::inverse() const {
  // invert by solving for the preimages of the basis over the full carrier
  int n = static_cast<int>(group_.order());
  std::vector<int> image_of(n, -1);
  for (int x = 0; x < n; ++x) image_of[apply_index(x)] = x;
  std::vector<Element> images;
  for (int i = 0; i < group_.rank(); ++i) {
    int pre = image_of[group_.encode(group_.basis_element(i))];
    if (pre < 0) throw consistency_error("AbelianAutomorphism: not bijective");
    images.push_back(group_.decode(pre));
  }
  return AbelianAutomorphism(group_, std::move(images));
}

std::vector<AbelianAutomorphism> abelian_automorphisms(const AbelianGroup& a,
                                                       const Bounds& bounds) {
  if (a.order() > bounds.subgroup_order)
    throw resource_error("abelian_automorphisms: order " + std::to_string(a.order()) +
                         " exceeds bound " + std::to_string(bounds.subgroup_order));
  int n = static_cast<int>(a.order());
  int k = a.rank();
  std::vector<AbelianAutomorphism> out;
  if (k == 0) {
    out.emplace_back(a, std::vector<Element>{});
    return out;
  }

  // candidate images per basis element: order must divide the modulus
  std::vector<std::vector<int>> candidates(k);
  for (int i = 0; i < k; ++i)
    for (int x = 0; x < n; ++x)
      if (a.moduli()[i] % a.element_order_by_index(x) == 0) candidates[i].push_back(x);

  std::vector<int> choice(k, 0);
  std::vector<Element> images(k);
  std::vector<char> seen(n);
  auto bijective = [&]() {
    std::fill(seen.begin(), seen.end(), 0);
    AbelianAutomorphism phi(a, images);
    for (int x = 0; x < n; ++x) {
      int y = phi.apply_index(x);
      if (seen[y]) return false;
      seen[y] = 1;
    }
    return true;
  };

  // depth-first product over candidate lists
  int depth = 0;
  std::vector<int> pos(k, 0);
  while (depth >= 0) {
    if (pos[depth] == static_cast<int>(candidates[depth].size())) {
      pos[depth] = 0;
      --depth;
      if (depth >= 0) ++pos[depth];
      continue;
    }
    images[depth] = a.decode(candidates[depth][pos[depth]]);
    if (depth == k - 1) {
      if (bijective()) out.emplace_back(a, images);
      ++pos[depth];
    } else {
      ++depth;
    }
  }
  return out;
}

// ---------------------------------------------------------------- Holomorph

Holomorph::Holomorph(AbelianGroup base, std::vector<AbelianAutomorphism> auts)
    : base_(std::move(base)), auts_(std::move(auts)) {
  num_auts_ = static_cast<int>(auts_.size());
  order_ = static_cast<int>(base_.order()) * num_auts_;
  int n = static_cast<int>(base_.order());

  aut_images_.assign(static_cast<size_t>(num_auts_) * n, 0);
  for (int j = 0; j < num_auts_; ++j)
    for (int x = 0; x < n; ++x)
      aut_images_[static_cast<size_t>(j) * n + x] = auts_[j].apply_index(x);

  std::map<std::vector<int>, int> index;
  for (int j = 0; j < num_auts_; ++j) {
    std::vector<int> key(aut_images_.begin() + static_cast<size_t>(j) * n,
                         aut_images_.begin() + static_cast<size_t>(j + 1) * n);
    index[std::move(key)] = j;
  }
  aut_mul_.assign(static_cast<size_t>(num_auts_) * num_auts_, -1);
  aut_inv_.assign(num_auts_, -1);
  for (int j1 = 0; j1 < num_auts_; ++j1)
    for (int j2 = 0; j2 < num_auts_; ++j2) {
      std::vector<int> key(n);
      for (int x = 0; x < n; ++x)
        key[x] = aut_images_[static_cast<size_t>(j1) * n +
                             aut_images_[static_cast<size_t>(j2) * n + x]];
      auto it = index.find(key);
      if (it == index.end())
        throw consistency_error("Holomorph: automorphisms not closed under composition");
      aut_mul_[static_cast<size_t>(j1) * num_auts_ + j2] = it->second;
      if (it->second == 0 && aut_inv_[j1] < 0) aut_inv_[j1] = j2;
    }
  // identity automorphism must sit at index 0 for identity() == 0 to hold
  if (aut_images_[0] != 0 || !auts_[0].apply(base_.zero()).empty() ? false : false) {
    // unreachable; kept for clarity
  }
  std::vector<int> idkey(n);
  std::iota(idkey.begin(), idkey.end(), 0);
  if (index.at(idkey) != 0)
    throw std::invalid_argument("Holomorph: identity automorphism must come first");
}

int Holomorph::mul(int e1, int e2) const {
  int n = static_cast<int>(base_.order());
  int t1 = e1 / num_auts_, j1 = e1 % num_auts_;
  int t2 = e2 / num_auts_, j2 = e2 % num_auts_;
  int moved = aut_images_[static_cast<size_t>(j1) * n + t2];
  int t = base_.encode(base_.add(base_.decode(t1), base_.decode(moved)));
  int j = aut_mul_[static_cast<size_t>(j1) * num_auts_ + j2];
  return t * num_auts_ + j;
}

int Holomorph::inverse(int e) const {
  int n = static_cast<int>(base_.order());
  int t = e / num_auts_, j = e % num_auts_;
  int ji = aut_inv_[j];
  int ti = base_.encode(base_.neg(base_.decode(aut_images_[static_cast<size_t>(ji) * n + t])));
  return ti * num_auts_ + ji;
}

int Holomorph::act(int e, int point) const {
  int n = static_cast<int>(base_.order());
  int t = e / num_auts_, j = e % num_auts_;
  return base_.encode(
      base_.add(base_.decode(t), base_.decode(aut_images_[static_cast<size_t>(j) * n + point])));
}

GroupTable Holomorph::to_table() const {
  std::vector<int> table(static_cast<size_t>(order_) * order_);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) table[static_cast<size_t>(a) * order_ + b] = mul(a, b);
  return GroupTable(order_, std::move(table), 0);
}

Holomorph holomorph(const AbelianGroup& a, const Bounds& bounds) {
  Bounds aut_bounds = bounds;
  aut_bounds.subgroup_order = bounds.holomorph_order; // automorphisms bounded by holomorph size
  auto auts = abelian_automorphisms(a, aut_bounds);
  // identity first, as required by the element indexing
  std::vector<Element> idimages;
  for (int i = 0; i < a.rank(); ++i) idimages.push_back(a.basis_element(i));
  for (size_t j = 0; j < auts.size(); ++j) {
    if (auts[j].basis_images() == idimages) {
      std::swap(auts[0], auts[j]);
      break;
    }
  }
  long long total = a.order() * static_cast<long long>(auts.size());
  if (total > bounds.holomorph_order)
    throw resource_error("holomorph: order " + std::to_string(total) + " exceeds bound " +
                         std::to_string(bounds.holomorph_order));
  return Holomorph(a, std::move(auts));
}

// ------------------------------------------------------------ identification

std::vector<int> abelian_invariant_factors(const GroupTable& g) {
  return abelian_basis(g).orders;
}

AbelianBasis abelian_basis(const GroupTable& g) {
  if (!g.is_abelian())
    throw std::domain_error("abelian_basis: group is not abelian");
  if (g.order() == 1) return {};

  // element of maximal order
  int best = g.identity();
  int best_ord = 1;
  for (int x = 0; x < g.order(); ++x) {
    int o = g.element_order(x);
    if (o > best_ord) {
      best = x;
      best_ord = o;
    }
  }
  SubgroupSet c = closure(g, {best});
  if (static_cast<int>(c.size()) == g.order())
    return AbelianBasis{{best}, {best_ord}};

  Quotient q = quotient_table(g, c);
  AbelianBasis sub = abelian_basis(q.table);

  AbelianBasis out;
  for (size_t i = 0; i < sub.elements.size(); ++i) {
    int m = sub.orders[i];
    int lift = q.representative[sub.elements[i]];
    // adjust the lift so its order matches the order of its coset
    int pm = g.power(lift, m); // lies in <best>
    int t = -1;
    int x = g.identity();
    for (int k = 0; k < best_ord; ++k) {
      if (x == pm) {
        t = k;
        break;
      }
      x = g.mul(x, best);
    }
    if (t < 0 || t % m != 0)
      throw consistency_error("abelian_basis: lift adjustment failed");
    int h = g.mul(lift, g.power(best, -(t / m)));
    if (g.element_order(h) != m)
      throw consistency_error("abelian_basis: lifted element has wrong order");
    out.elements.push_back(h);
    out.orders.push_back(m);
  }
  out.elements.push_back(best);
  out.orders.push_back(best_ord);
  return out;
}

namespace {

// commutator subgroup [G,G]
SubgroupSet commutator_subgroup(const GroupTable& g) {
  std::vector<int> gens;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      gens.push_back(g.mul(g.mul(a, b), g.inverse(g.mul(b, a))));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return closure(g, gens);
}

std::optional<GroupDescriptor> try_dihedral(const GroupTable& g) {
  int order = g.order();
  if (order < 6 || order % 2 != 0) return std::nullopt;
  int n = order / 2;
  for (int r = 0; r < order; ++r) {
    if (g.element_order(r) != n) continue;
    SubgroupSet rot = closure(g, {r});
    int s = -1;
    for (int x = 0; x < order; ++x)
      if (!std::binary_search(rot.begin(), rot.end(), x)) {
        s = x;
        break;
      }
    if (g.element_order(s) != 2) continue;
    if (g.conjugate(s, r) != g.inverse(r)) continue;
    GroupDescriptor d;
    d.kind = GroupDescriptor::Kind::dihedral;
    d.order = order;
    d.dihedral_n = n;
    return d;
  }
  return std::nullopt;
}

std::optional<GroupDescriptor> try_semidirect_cyclic(const GroupTable& g) {
  int order = g.order();
  for (int q : prime_factors(order)) {
    int m = order / q;
    if (std::gcd(m, q) != 1) continue;
    for (int r = 0; r < order; ++r) {
      if (g.element_order(r) != m) continue;
      SubgroupSet n = closure(g, {r});
      if (!is_normal(g, n)) continue;
      for (int s = 0; s < order; ++s) {
        if (g.element_order(s) != q) continue;
        if (std::binary_search(n.begin(), n.end(), s)) continue;
        // conjugation scalar: s r s^-1 = r^t
        int conj = g.conjugate(s, r);
        int t = -1;
        int x = g.identity();
        for (int k = 0; k < m; ++k) {
          if (x == conj) {
            t = k;
            break;
          }
          x = g.mul(x, r);
        }
        if (t < 0 || t == 1) continue;
        // canonical scalar: minimum over the generator powers of <s>
        int scalar = t;
        int tk = t;
        for (int k = 2; k < q; ++k) {
          tk = static_cast<int>(static_cast<long long>(tk) * t % m);
          scalar = std::min(scalar, tk);
        }
        GroupDescriptor d;
        d.kind = GroupDescriptor::Kind::semidirect_cyclic;
        d.order = order;
        d.sd_m = m;
        d.sd_q = q;
        d.sd_scalar = scalar;
        return d;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

GroupDescriptor identify_group(const GroupTable& g) {
  GroupDescriptor d;
  d.order = g.order();
  if (g.is_abelian()) {
    d.invariant_factors = abelian_invariant_factors(g);
    d.kind = d.invariant_factors.size() <= 1 ? GroupDescriptor::Kind::cyclic
                                             : GroupDescriptor::Kind::abelian;
    return d;
  }
  if (auto dih = try_dihedral(g); dih && dih->dihedral_n > 2) return *dih;
  if (auto sd = try_semidirect_cyclic(g)) return *sd;
  d.kind = GroupDescriptor::Kind::other;
  SubgroupSet comm = commutator_subgroup(g);
  d.invariant_factors = abelian_invariant_factors(quotient_table(g, comm).table);
  return d;
}

GroupDescriptor identify_group(const PermGroup& g) {
  return identify_group(table_from_perm_group(g));
}

std::string GroupDescriptor::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::cyclic:
      os << "cyclic " << order;
      break;
    case Kind::abelian: {
      os << "abelian [";
      for (size_t i = 0; i < invariant_factors.size(); ++i)
        os << (i ? "," : "") << invariant_factors[i];
      os << "]";
      break;
    }
    case Kind::dihedral:
      os << "dihedral D_" << order;
      break;
    case Kind::semidirect_cyclic:
      os << "Z" << sd_m << ":Z" << sd_q << " scalar " << sd_scalar;
      break;
    case Kind::other: {
      os << "other(order=" << order << ", abelianization=[";
      for (size_t i = 0; i < invariant_factors.size(); ++i)
        os << (i ? "," : "") << invariant_factors[i];
      os << "])";
      break;
    }
  }
  return os.str();
}

DihedralSplit dihedral_split(const GroupTable& g) {
  auto d = try_dihedral(g);
  if (!d || d->dihedral_n < 3)
    throw std::domain_error("dihedral_split: group is not dihedral with n >= 3");
  int n = d->dihedral_n;
  // unique cyclic subgroup of order n
  for (int r = 0; r < g.order(); ++r) {
    if (g.element_order(r) != n) continue;
    return dihedral_split(g, closure(g, {r}));
  }
  throw std::domain_error("dihedral_split: no rotation generator found");
}

DihedralSplit dihedral_split(const GroupTable& g, const SubgroupSet& rotations) {
  if (!is_subgroup(g, rotations) ||
      static_cast<int>(rotations.size()) * 2 != g.order())
    throw std::domain_error("dihedral_split: designated rotations must have index 2");
  DihedralSplit out;
  out.rotations = rotations;
  for (int x = 0; x < g.order(); ++x) {
    if (!std::binary_search(rotations.begin(), rotations.end(), x)) {
      if (g.element_order(x) != 2)
        throw std::domain_error("dihedral_split: non-involution outside rotations");
      out.reflections.push_back(x);
    }
  }
  return out;
}

// --------------------------------------------------------------- construction

std::vector<AbelianGroup> abelian_groups_of_order(int n) {
  if (n < 1) throw std::invalid_argument("abelian_groups_of_order: n >= 1");
  if (n == 1) return {AbelianGroup({})};

  struct PrimePart {
    int p;
    std::vector<std::vector<int>> partitions; // exponent partitions, descending
  };
  std::vector<PrimePart> parts;
  int rest = n;
  for (int p : prime_factors(n)) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    // partitions of e in descending part order, lexicographically descending
    std::vector<std::vector<int>> result;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
      if (remaining == 0) {
        result.push_back(cur);
        return;
      }
      for (int part = std::min(remaining, maxpart); part >= 1; --part) {
        cur.push_back(part);
        self(self, remaining - part, part);
        cur.pop_back();
      }
    };
    rec(rec, e, e);
    parts.push_back({p, std::move(result)});
  }

  std::vector<AbelianGroup> out;
  std::vector<size_t> pick(parts.size(), 0);
  while (true) {
    std::vector<int> moduli;
    for (size_t i = 0; i < parts.size(); ++i)
      for (int e : parts[i].partitions[pick[i]]) {
        int m = 1;
        for (int k = 0; k < e; ++k) m *= parts[i].p;
        moduli.push_back(m);
      }
    out.emplace_back(std::move(moduli));
    size_t i = 0;
    for (; i < parts.size(); ++i) {
      if (++pick[i] < parts[i].partitions.size()) break;
      pick[i] = 0;
    }
    if (i == parts.size()) break;
  }
  return out;
}

GroupTable dihedral_table(int n) {
  if (n < 1) throw std::invalid_argument("dihedral_table: n >= 1");
  int order = 2 * n;
  auto idx = [n](int rot, int ref) { return 2 * ((rot % n + n) % n) + ref; };
  std::vector<int> table(static_cast<size_t>(order) * order);
  for (int i = 0; i < n; ++i)
    for (int fi = 0; fi < 2; ++fi)
      for (int j = 0; j < n; ++j)
        for (int fj = 0; fj < 2; ++fj) {
          // (r^i s^fi)(r^j s^fj) = r^(i + j or i - j) s^(fi xor fj)
          int rot = fi ? i - j : i + j;
          table[static_cast<size_t>(idx(i, fi)) * order + idx(j, fj)] =
              idx(rot, fi ^ fj);
        }
  return GroupTable(order, std::move(table), 0);
}

GroupTable cyclic_table(int n) {
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = (a + b) % n;
  return GroupTable(n, std::move(table), 0);
}

GroupTable abelian_table(const AbelianGroup& a) {
  int n = static_cast<int>(a.order());
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      table[static_cast<size_t>(x) * n + y] = a.encode(a.add(a.decode(x), a.decode(y)));
  return GroupTable(n, std::move(table), 0);
}

GroupTable semidirect_cyclic_table(int m, int q, int scalar) {
  if (mod_pow(scalar, q, m) != 1 % m)
    throw std::invalid_argument("semidirect_cyclic_table: scalar^q != 1 (mod m)");
  int order = m * q;
  auto idx = [&](int a, int b) { return a * q + b; };
  std::vector<int> table(static_cast<size_t>(order) * order);
  for (int a1 = 0; a1 < m; ++a1)
    for (int b1 = 0; b1 < q; ++b1)
      for (int a2 = 0; a2 < m; ++a2)
        for (int b2 = 0; b2 < q; ++b2) {
          // (a1, b1)(a2, b2) = (a1 + scalar^b1 a2, b1 + b2)
          int a = static_cast<int>((a1 + static_cast<long long>(mod_pow(scalar, b1, m)) * a2) % m);
          table[static_cast<size_t>(idx(a1, b1)) * order + idx(a2, b2)] =
              idx(a, (b1 + b2) % q);
        }
  return GroupTable(order, std::move(table), 0);
}

namespace {

// backtracking isomorphism search over generator images
bool iso_extend(const GroupTable& a, const GroupTable& b, std::vector<int>& map,
                std::vector<char>& used) {
  // find the first unmapped element; extend by closure when forced
  int x = -1;
  for (int i = 0; i < a.order(); ++i)
    if (map[i] < 0) {
      x = i;
      break;
    }
  if (x < 0) return true;
  for (int y = 0; y < b.order(); ++y) {
    if (used[y] || b.element_order(y) != a.element_order(x)) continue;
    // tentatively map x -> y, propagate products with mapped elements
    std::vector<std::pair<int, int>> trail;
    auto assign = [&](int u, int v) -> bool {
      if (map[u] >= 0) return map[u] == v;
      if (used[v]) return false;
      map[u] = v;
      used[v] = 1;
      trail.emplace_back(u, v);
      return true;
    };
    bool ok = assign(x, y);
    for (size_t t = 0; ok && t < trail.size(); ++t) {
      int u = trail[t].first;
      for (int w = 0; ok && w < a.order(); ++w) {
        if (map[w] < 0) continue;
        ok = assign(a.mul(u, w), b.mul(map[u], map[w])) &&
             assign(a.mul(w, u), b.mul(map[w], map[u]));
      }
    }
    if (ok && iso_extend(a, b, map, used)) return true;
    for (auto [u, v] : trail) {
      map[u] = -1;
      used[v] = 0;
    }
  }
  return false;
}

}  // namespace

bool tables_isomorphic(const GroupTable& a, const GroupTable& b) {
  if (a.order() != b.order()) return false;
  // order profiles must match
  std::map<int, int> pa, pb;
  for (int x = 0; x < a.order(); ++x) ++pa[a.element_order(x)];
  for (int x = 0; x < b.order(); ++x) ++pb[b.element_order(x)];
  if (pa != pb) return false;
  std::vector<int> map(a.order(), -1);
  std::vector<char> used(b.order(), 0);
  map[a.identity()] = b.identity();
  used[b.identity()] = 1;
  return iso_extend(a, b, map, used);
}

}  // namespace ybe

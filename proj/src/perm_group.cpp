#include "triadic/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace triadic {

namespace {

std::string degree_mismatch(std::size_t a, std::size_t b)
{
  return "permutation degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b);
}

} // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const int x = images_[i];
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() ||
        seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("image array is not a bijection at index " +
                                  std::to_string(i));
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(std::size_t degree)
{
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  return Permutation(std::move(id), Trusted{});
}

Permutation Permutation::from_function(std::size_t degree, std::function<int(int)> const &f)
{
  std::vector<int> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = f(static_cast<int>(i));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const
{
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv), Trusted{});
}

Permutation Permutation::pow(long long k) const
{
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? 0ULL - static_cast<unsigned long long>(k)
                               : static_cast<unsigned long long>(k);
  Permutation result = identity(degree());
  while (e) {
    if (e & 1ULL)
      result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const noexcept
{
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i))
      return false;
  }
  return true;
}

bool Permutation::has_fixed_point() const noexcept
{
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == static_cast<int>(i))
      return true;
  }
  return false;
}

std::size_t Permutation::order() const
{
  std::vector<bool> done(images_.size(), false);
  std::size_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (done[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !done[j]; j = static_cast<std::size_t>(images_[j])) {
      done[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycle_string() const
{
  std::ostringstream os;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (done[i] || images_[i] == static_cast<int>(i))
      continue;
    os << '(';
    for (std::size_t j = i; !done[j]; j = static_cast<std::size_t>(images_[j])) {
      if (j != i)
        os << ' ';
      os << j;
      done[j] = true;
    }
    os << ')';
  }
  auto s = os.str();
  return s.empty() ? "()" : s;
}

Permutation operator*(Permutation const &a, Permutation const &b)
{
  if (a.degree() != b.degree())
    throw std::invalid_argument(degree_mismatch(a.degree(), b.degree()));
  std::vector<int> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  return Permutation(std::move(images), Permutation::Trusted{});
}

bool commute(Permutation const &a, Permutation const &b)
{
  if (a.degree() != b.degree())
    throw std::invalid_argument(degree_mismatch(a.degree(), b.degree()));
  for (std::size_t i = 0; i < a.degree(); ++i) {
    const int x = static_cast<int>(i);
    if (a(b(x)) != b(a(x)))
      return false;
  }
  return true;
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  std::size_t h = 1469598103934665603ULL;
  for (int x : p.images()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(std::size_t degree)
  : degree_(degree), elements_{Permutation::identity(degree)}
{}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> sorted_elements,
                     std::vector<Permutation> generators)
  : degree_(degree),
    elements_(std::move(sorted_elements)),
    generators_(std::move(generators))
{}

PermGroup PermGroup::generate(std::vector<Permutation> const &generators, std::size_t degree)
{
  for (auto const &g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument(degree_mismatch(g.degree(), degree));
  }

  auto id = Permutation::identity(degree);
  std::unordered_set<Permutation, PermutationHash> seen{id};
  std::deque<Permutation> frontier{id};
  while (!frontier.empty()) {
    Permutation x = std::move(frontier.front());
    frontier.pop_front();
    for (auto const &g : generators) {
      auto y = g * x;
      if (seen.insert(y).second)
        frontier.push_back(std::move(y));
    }
  }

  std::vector<Permutation> elements(seen.begin(), seen.end());
  std::sort(elements.begin(), elements.end());
  return PermGroup(degree, std::move(elements), generators);
}

PermGroup PermGroup::generate(std::vector<Permutation> const &generators)
{
  if (generators.empty())
    throw std::invalid_argument("cannot infer degree from an empty generator list");
  return generate(generators, generators.front().degree());
}

PermGroup PermGroup::from_elements(std::vector<Permutation> elements, std::size_t degree)
{
  for (auto const &p : elements) {
    if (p.degree() != degree)
      throw std::invalid_argument(degree_mismatch(p.degree(), degree));
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  PermGroup g(degree, elements, elements);
  if (!g.contains(Permutation::identity(degree)))
    throw std::invalid_argument("element set does not contain the identity");
  if (!g.is_closed())
    throw std::invalid_argument("element set is not closed under composition");
  return g;
}

bool PermGroup::contains(Permutation const &p) const
{
  return p.degree() == degree_ && std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_subgroup_of(PermGroup const &other) const
{
  return degree_ == other.degree_ &&
         std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

bool PermGroup::is_abelian() const
{
  auto const &gens = generators_.empty() ? elements_ : generators_;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commute(gens[i], gens[j]))
        return false;
    }
  }
  return true;
}

bool PermGroup::is_closed() const
{
  for (auto const &a : elements_) {
    for (auto const &b : elements_) {
      if (!contains(a * b))
        return false;
    }
  }
  return true;
}

std::vector<int> PermGroup::points_with_nontrivial_stabilizer() const
{
  std::vector<bool> bad(degree_, false);
  for (auto const &p : elements_) {
    if (p.is_identity())
      continue;
    for (std::size_t i = 0; i < degree_; ++i) {
      if (p(static_cast<int>(i)) == static_cast<int>(i))
        bad[i] = true;
    }
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < degree_; ++i) {
    if (bad[i])
      out.push_back(static_cast<int>(i));
  }
  return out;
}

bool PermGroup::is_semiregular() const
{
  return std::none_of(elements_.begin(), elements_.end(), [](Permutation const &p) {
    return !p.is_identity() && p.has_fixed_point();
  });
}

void PermGroup::check_point(int point) const
{
  if (point < 0 || static_cast<std::size_t>(point) >= degree_) {
    throw std::out_of_range("point " + std::to_string(point) + " outside 0.." +
                            std::to_string(static_cast<long long>(degree_) - 1));
  }
}

std::vector<int> PermGroup::orbit(int point) const
{
  check_point(point);
  std::vector<int> out;
  out.reserve(elements_.size());
  for (auto const &p : elements_)
    out.push_back(p(point));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PermGroup PermGroup::stabilizer(int point) const
{
  check_point(point);
  std::vector<Permutation> fixing;
  for (auto const &p : elements_) {
    if (p(point) == point)
      fixing.push_back(p);
  }
  auto gens = fixing;
  return PermGroup(degree_, std::move(fixing), std::move(gens));
}

std::vector<std::vector<int>> PermGroup::orbits() const
{
  std::vector<std::vector<int>> out;
  std::vector<bool> covered(degree_, false);
  for (std::size_t i = 0; i < degree_; ++i) {
    if (covered[i])
      continue;
    auto o = orbit(static_cast<int>(i));
    for (int x : o)
      covered[static_cast<std::size_t>(x)] = true;
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<int> orbit(PermGroup const &g, int point) { return g.orbit(point); }
PermGroup stabilizer(PermGroup const &g, int point) { return g.stabilizer(point); }

bool is_simply_transitive(PermGroup const &g)
{
  if (g.degree() == 0 || g.order() != g.degree())
    return false;
  return g.orbit(0).size() == g.degree();
}

// ---------------------------------------------------------------------------
// Centralizers

PermGroup centralizer_semiregular(PermGroup const &h, std::size_t max_candidates)
{
  const std::size_t n = h.degree();
  if (!h.is_semiregular()) {
    const int bad = h.points_with_nontrivial_stabilizer().front();
    throw std::invalid_argument("group is not semiregular: point " + std::to_string(bad) +
                                " has a nontrivial stabilizer");
  }

  const auto orbits = h.orbits();
  const std::size_t m = orbits.size();
  const std::size_t k = h.order();

  // Candidate count: the j-th base point may go to any point outside the
  // orbits already used, i.e. prod_j (n - j*k).
  std::size_t candidates = 1;
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t choices = n - j * k;
    if (candidates > max_candidates / std::max<std::size_t>(choices, 1))
      throw std::length_error("centralizer enumeration exceeds " +
                              std::to_string(max_candidates) + " candidates");
    candidates *= choices;
  }

  std::vector<int> orbit_of(n);
  std::vector<int> base(m);
  // carrier[x] is the unique element of H taking the base of x's orbit to x.
  std::vector<Permutation const *> carrier(n, nullptr);
  for (std::size_t j = 0; j < m; ++j) {
    base[j] = orbits[j].front();
    for (int x : orbits[j])
      orbit_of[static_cast<std::size_t>(x)] = static_cast<int>(j);
    for (auto const &p : h.elements())
      carrier[static_cast<std::size_t>(p(base[j]))] = &p;
  }

  std::vector<Permutation> found;
  std::vector<int> assigned(m, -1);
  std::vector<bool> orbit_used(m, false);

  auto try_candidate = [&] {
    std::vector<int> images(n);
    std::vector<bool> hit(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      const auto j = static_cast<std::size_t>(orbit_of[x]);
      const int y = (*carrier[x])(assigned[j]);
      if (hit[static_cast<std::size_t>(y)])
        return;
      hit[static_cast<std::size_t>(y)] = true;
      images[x] = y;
    }
    Permutation f(std::move(images));
    for (auto const &g : h.generators()) {
      if (!commute(f, g))
        return;
    }
    found.push_back(std::move(f));
  };

  std::function<void(std::size_t)> assign = [&](std::size_t j) {
    if (j == m) {
      try_candidate();
      return;
    }
    for (std::size_t y = 0; y < n; ++y) {
      const auto oy = static_cast<std::size_t>(orbit_of[y]);
      if (orbit_used[oy])
        continue;
      orbit_used[oy] = true;
      assigned[j] = static_cast<int>(y);
      assign(j + 1);
      orbit_used[oy] = false;
    }
  };
  assign(0);

  return PermGroup::from_elements(std::move(found), n);
}

PermGroup centralizer_within(PermGroup const &h, PermGroup const &g)
{
  if (!h.is_subgroup_of(g))
    throw std::invalid_argument("centralizer_within: H is not contained in G");

  auto const &hgens = h.generators().empty() ? h.elements() : h.generators();
  std::vector<Permutation> out;
  for (auto const &x : g.elements()) {
    if (std::all_of(hgens.begin(), hgens.end(),
                    [&](Permutation const &y) { return commute(x, y); }))
      out.push_back(x);
  }
  return PermGroup::from_elements(std::move(out), g.degree());
}

// ---------------------------------------------------------------------------
// Abstract tables and regular representations

void CayleyTable::validate() const
{
  const std::size_t n = size();
  if (n == 0)
    throw std::invalid_argument("invalid group table: closure (empty table)");
  for (auto const &row : product) {
    if (row.size() != n)
      throw std::invalid_argument("invalid group table: closure (table is not square)");
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw std::invalid_argument("invalid group table: closure (entry " +
                                    std::to_string(v) + " out of range)");
    }
  }

  int e = -1;
  for (std::size_t a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = product[a][x] == static_cast<int>(x) && product[x][a] == static_cast<int>(x);
    if (ok)
      e = static_cast<int>(a);
  }
  if (e < 0)
    throw std::invalid_argument("invalid group table: identity (no two-sided identity)");

  for (std::size_t a = 0; a < n; ++a) {
    bool ok = false;
    for (std::size_t b = 0; b < n && !ok; ++b)
      ok = product[a][b] == e && product[b][a] == e;
    if (!ok)
      throw std::invalid_argument("invalid group table: inverses (element " +
                                  std::to_string(a) + " has no inverse)");
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const auto ab = static_cast<std::size_t>(product[a][b]);
        const auto bc = static_cast<std::size_t>(product[b][c]);
        if (product[ab][c] != product[a][bc]) {
          throw std::invalid_argument("invalid group table: associativity fails at (" +
                                      std::to_string(a) + "," + std::to_string(b) + "," +
                                      std::to_string(c) + ")");
        }
      }
    }
  }
}

int CayleyTable::identity() const
{
  for (std::size_t a = 0; a < size(); ++a) {
    if (product[a][a] == static_cast<int>(a))
      return static_cast<int>(a);
  }
  throw std::invalid_argument("invalid group table: identity (no idempotent)");
}

int CayleyTable::inverse(int a) const
{
  const int e = identity();
  for (std::size_t b = 0; b < size(); ++b) {
    if (product[static_cast<std::size_t>(a)][b] == e)
      return static_cast<int>(b);
  }
  throw std::invalid_argument("invalid group table: inverses (element " +
                              std::to_string(a) + " has no inverse)");
}

CayleyTable cyclic_table(int n)
{
  CayleyTable t;
  t.product.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      t.product[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  }
  return t;
}

CayleyTable dihedral_table(int n)
{
  // (s^a t^x)(s^b t^y) = s^(a + (-1)^x b) t^(x+y)
  const int order = 2 * n;
  CayleyTable t;
  t.product.assign(static_cast<std::size_t>(order),
                   std::vector<int>(static_cast<std::size_t>(order)));
  for (int u = 0; u < order; ++u) {
    const int a = u % n, x = u / n;
    for (int v = 0; v < order; ++v) {
      const int b = v % n, y = v / n;
      const int k = ((a + (x ? -b : b)) % n + n) % n;
      t.product[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
        ((x + y) % 2) * n + k;
    }
  }
  return t;
}

CayleyTable symmetric_table(int n)
{
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  auto index_of = [&](std::vector<int> const &q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };

  CayleyTable t;
  t.product.assign(perms.size(), std::vector<int>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<int> ab(static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < ab.size(); ++i)
        ab[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
      t.product[a][b] = index_of(ab);
    }
  }
  return t;
}

RegularRepresentations regular_reps(CayleyTable const &table)
{
  table.validate();
  const std::size_t n = table.size();

  RegularRepresentations reps;
  for (std::size_t g = 0; g < n; ++g) {
    const auto ginv = static_cast<std::size_t>(table.inverse(static_cast<int>(g)));
    std::vector<int> left(n), right(n);
    for (std::size_t x = 0; x < n; ++x) {
      left[x] = table.product[g][x];
      right[x] = table.product[x][ginv];
    }
    reps.left_of.emplace_back(std::move(left));
    reps.right_of.emplace_back(std::move(right));
  }
  reps.left = PermGroup::from_elements(reps.left_of, n);
  reps.right = PermGroup::from_elements(reps.right_of, n);
  return reps;
}

// ---------------------------------------------------------------------------
// Dihedral recognition

bool satisfies_dihedral_relations(Permutation const &s, Permutation const &t, std::size_t n)
{
  return s.order() == n && t.order() == 2 && t * s * t == s.inverse();
}

std::optional<DihedralWitness> is_dihedral_24(PermGroup const &g)
{
  if (g.order() != 24)
    return std::nullopt;
  for (auto const &s : g.elements()) {
    if (s.order() != 12)
      continue;
    for (auto const &t : g.elements()) {
      if (!satisfies_dihedral_relations(s, t, 12))
        continue;
      if (PermGroup::generate({s, t}, g.degree()).order() == 24)
        return DihedralWitness{s, t};
    }
  }
  return std::nullopt;
}

} // namespace triadic

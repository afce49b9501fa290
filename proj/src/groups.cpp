#include "towerdepth/groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace td {

Perm::Perm(std::vector<int> im) : images(std::move(im)) {
  std::vector<char> seen(images.size(), 0);
  for (int x : images) {
    if (x < 0 || x >= degree() || seen[x]) throw GroupError("images do not form a permutation");
    seen[x] = 1;
  }
}

Perm Perm::identity(int degree) {
  Perm p;
  p.images.resize(degree);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images[x] != x) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm p;
  p.images.resize(images.size());
  for (int x = 0; x < degree(); ++x) p.images[images[x]] = x;
  return p;
}

std::string Perm::cycles() const {
  std::string out;
  std::vector<char> seen(images.size(), 0);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x] || images[x] == x) continue;
    out += '(';
    int y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = 1;
      if (!first) out += ' ';
      out += std::to_string(y + 1);
      first = false;
      y = images[y];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw GroupError("degree mismatch in permutation product");
  Perm p;
  p.images.resize(a.images.size());
  for (int x = 0; x < a.degree(); ++x) p.images[x] = a.images[b.images[x]];
  return p;
}

Perm parse_cycles(std::string_view text, int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  Perm result = Perm::identity(degree);
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) {
    throw GroupError(msg + " at column " + std::to_string(pos + 1) + " in '" + std::string(text) + "'");
  };
  while (pos < text.size()) {
    char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }
    if (ch != '(') fail("expected '('");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a point number");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > 100000) fail("point number too large");
        ++pos;
      }
      if (v < 1 || v > degree) fail("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      if (std::find(cycle.begin(), cycle.end(), v - 1) != cycle.end()) fail("repeated point in cycle");
      cycle.push_back(v - 1);
    }
    Perm c = Perm::identity(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i) c.images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    // cycles written left to right are applied right to left, as in a product
    result = result * c;
  }
  return result;
}

std::size_t PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p.images);
  if (it == index_.end()) throw GroupError("element " + p.cycles() + " not in group");
  return it->second;
}

std::size_t PermGroup::mul(std::size_t i, std::size_t j) const {
  if (!table_.empty()) return table_[i * order() + j];
  return index_of(elements_[i] * elements_[j]);
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree_) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](const Perm& p) { return g.contains(p); });
}

std::string PermGroup::describe() const {
  std::ostringstream os;
  os << "order " << order() << " on " << degree_ << " points";
  if (!generators_.empty()) {
    os << ", generated by";
    for (const auto& g : generators_) os << ' ' << g.cycles();
  }
  return os.str();
}

PermGroup group_closure(const std::vector<Perm>& generators, int degree, std::size_t order_cap) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw GroupError("generator degree does not match group degree");
  }
  PermGroup G;
  G.degree_ = degree;
  for (const auto& g : generators)
    if (!g.is_identity()) G.generators_.push_back(g);
  std::set<std::vector<int>> seen;
  std::deque<Perm> queue;
  Perm e = Perm::identity(degree);
  seen.insert(e.images);
  queue.push_back(e);
  while (!queue.empty()) {
    Perm x = queue.front();
    queue.pop_front();
    for (const auto& g : G.generators_) {
      Perm y = x * g;
      if (seen.insert(y.images).second) {
        if (seen.size() > order_cap) throw GroupError("group order exceeds cap " + std::to_string(order_cap));
        queue.push_back(std::move(y));
      }
    }
  }
  for (const auto& im : seen) {
    Perm p;
    p.images = im;
    G.elements_.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < G.elements_.size(); ++i) G.index_[G.elements_[i].images] = i;
  G.inverse_.resize(G.order());
  for (std::size_t i = 0; i < G.order(); ++i) G.inverse_[i] = G.index_.at(G.elements_[i].inverse().images);
  if (G.order() <= 1024) {
    G.table_.resize(G.order() * G.order());
    for (std::size_t i = 0; i < G.order(); ++i)
      for (std::size_t j = 0; j < G.order(); ++j)
        G.table_[i * G.order() + j] = static_cast<std::uint32_t>(G.index_.at((G.elements_[i] * G.elements_[j]).images));
  }
  return G;
}

namespace {
void require_subgroup(const PermGroup& h, const PermGroup& g, const char* what) {
  if (!h.is_subgroup_of(g)) throw GroupError(std::string(what) + ": subgroup is not contained in the group");
}
}  // namespace

PermGroup normal_closure(const PermGroup& k, const PermGroup& g) {
  require_subgroup(k, g, "normal_closure");
  std::vector<Perm> gens = k.generators();
  PermGroup current = k;
  while (true) {
    bool grew = false;
    std::vector<Perm> cur_gens = current.generators();
    for (const auto& x : g.generators()) {
      Perm xi = x.inverse();
      for (const auto& s : cur_gens) {
        Perm c = x * s * xi;
        if (!current.contains(c)) {
          gens.push_back(c);
          current = group_closure(gens, g.degree());
          grew = true;
        }
      }
    }
    if (!grew) break;
  }
  return current;
}

std::vector<DoubleCoset> double_cosets(const PermGroup& g, const PermGroup& h, const PermGroup& k) {
  require_subgroup(h, g, "double_cosets");
  require_subgroup(k, g, "double_cosets");
  std::vector<char> assigned(g.order(), 0);
  std::vector<DoubleCoset> cells;
  for (std::size_t r = 0; r < g.order(); ++r) {
    if (assigned[r]) continue;
    DoubleCoset cell;
    cell.representative = g.element(r);
    for (const auto& a : h.elements()) {
      Perm ar = a * g.element(r);
      for (const auto& b : k.elements()) {
        std::size_t idx = g.index_of(ar * b);
        if (!assigned[idx]) {
          assigned[idx] = 1;
          cell.members.push_back(idx);
        }
      }
    }
    std::sort(cell.members.begin(), cell.members.end());
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::vector<Perm> left_coset_representatives(const PermGroup& g, const PermGroup& h) {
  require_subgroup(h, g, "left_coset_representatives");
  std::vector<char> assigned(g.order(), 0);
  std::vector<Perm> reps;
  for (std::size_t r = 0; r < g.order(); ++r) {
    if (assigned[r]) continue;
    reps.push_back(g.element(r));
    for (const auto& a : h.elements()) assigned[g.index_of(g.element(r) * a)] = 1;
  }
  return reps;
}

bool is_normal(const PermGroup& h, const PermGroup& g) {
  require_subgroup(h, g, "is_normal");
  for (const auto& x : g.generators()) {
    Perm xi = x.inverse();
    for (const auto& s : h.generators())
      if (!h.contains(x * s * xi)) return false;
  }
  return true;
}

PermGroup conjugate(const PermGroup& h, const Perm& x) {
  Perm xi = x.inverse();
  std::vector<Perm> gens;
  for (const auto& s : h.generators()) gens.push_back(x * s * xi);
  return group_closure(gens, h.degree());
}

std::vector<PermGroup> all_subgroups(const PermGroup& g) {
  std::set<std::vector<int>> seen_sets;
  std::vector<PermGroup> found;
  auto key = [&](const PermGroup& s) {
    std::vector<int> k;
    for (const auto& p : s.elements()) k.push_back(static_cast<int>(g.index_of(p)));
    return k;
  };
  std::deque<std::size_t> queue;
  PermGroup triv = trivial_group(g.degree());
  seen_sets.insert(key(triv));
  found.push_back(triv);
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop_front();
    for (const auto& x : g.elements()) {
      if (found[s].contains(x)) continue;
      std::vector<Perm> gens = found[s].generators();
      gens.push_back(x);
      PermGroup bigger = group_closure(gens, g.degree());
      if (seen_sets.insert(key(bigger)).second) {
        found.push_back(std::move(bigger));
        queue.push_back(found.size() - 1);
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return found;
}

PermGroup symmetric_group(int n) {
  if (n <= 1) return trivial_group(std::max(n, 1));
  std::vector<int> cyc(n), tr(n);
  std::iota(tr.begin(), tr.end(), 0);
  std::swap(tr[0], tr[1]);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return group_closure({Perm(cyc), Perm(tr)}, n);
}

PermGroup alternating_group(int n) {
  std::vector<Perm> gens;
  for (int i = 2; i < n; ++i) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    im[0] = 1;
    im[1] = i;
    im[i] = 0;
    gens.emplace_back(im);
  }
  return group_closure(gens, std::max(n, 1));
}

PermGroup cyclic_group(int n) {
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return group_closure({Perm(cyc)}, n);
}

PermGroup trivial_group(int degree) { return group_closure({}, degree); }

PermGroup dihedral_square() {
  return group_closure({Perm({1, 2, 3, 0}), Perm({0, 3, 2, 1})}, 4);
}

PermGroup quaternion_group() {
  // Elements are (sign, unit) with unit in {1, i, j, k}; index = 2*unit + (sign < 0).
  static const int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto left_mult = [&](int a) {
    std::vector<int> im(8);
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * unit_sign[ua][ub];
      im[b] = 2 * unit_prod[ua][ub] + (sign < 0 ? 1 : 0);
    }
    return Perm(im);
  };
  return group_closure({left_mult(2), left_mult(4)}, 8);
}

PermGroup klein_four() { return group_closure({Perm({1, 0, 3, 2}), Perm({2, 3, 0, 1})}, 4); }

}  // namespace td

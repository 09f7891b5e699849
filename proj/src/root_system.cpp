#include "weylbraid/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

#include "weylbraid/detail/fnv.hpp"
#include "weylbraid/errors.hpp"

namespace weylbraid::rootsys {

char family_letter(Family f) { return static_cast<char>(f); }

namespace {

void check_component(const ComponentSpec& c) {
  const int r = c.rank;
  bool ok = false;
  switch (c.family) {
    case Family::A: ok = r >= 1; break;
    case Family::B: ok = r >= 2; break;
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 3; break;
    case Family::E: ok = r == 6 || r == 7 || r == 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok) {
    std::ostringstream os;
    os << "invalid root-system component " << family_letter(c.family) << r;
    throw validation_error(os.str());
  }
}

// Squared lengths of the simple roots, Bourbaki numbering.
std::vector<int> simple_lengths(const ComponentSpec& c) {
  std::vector<int> len(static_cast<std::size_t>(c.rank), 2);
  switch (c.family) {
    case Family::B: // alpha_r short, the rest long
      std::fill(len.begin(), len.end() - 1, 4);
      break;
    case Family::C: // alpha_r long
      len.back() = 4;
      break;
    case Family::F: // alpha_1, alpha_2 long
      len[0] = len[1] = 4;
      break;
    case Family::G: // alpha_1 short, alpha_2 long
      len[1] = 6;
      break;
    default:
      break;
  }
  return len;
}

// Edges of the Dynkin diagram as index pairs, Bourbaki numbering (0-based).
std::vector<std::pair<int, int>> diagram_edges(const ComponentSpec& c) {
  std::vector<std::pair<int, int>> edges;
  const int r = c.rank;
  switch (c.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::G:
      for (int i = 0; i + 1 < r; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 0; i + 1 < r - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(r - 3, r - 1);
      break;
    case Family::E:
      // chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4
      edges.emplace_back(0, 2);
      for (int i = 2; i + 1 < r; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(1, 3);
      break;
  }
  return edges;
}

// Gram matrix of the simple roots of one component under the fixed
// normalization.  For an edge between roots of squared lengths p <= q the
// inner product is -q/2 (so that both Cartan integers come out right).
std::vector<std::vector<int>> component_gram(const ComponentSpec& c) {
  const int r = c.rank;
  auto len = simple_lengths(c);
  std::vector<std::vector<int>> g(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) g[i][i] = len[i];
  for (auto [i, j] : diagram_edges(c)) {
    int v = -std::max(len[i], len[j]) / 2;
    g[i][j] = g[j][i] = v;
  }
  return g;
}

} // namespace

RootSystemSpec::RootSystemSpec(std::vector<ComponentSpec> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw validation_error("root-system spec has no components");
  for (const auto& c : components_) check_component(c);
  std::sort(components_.begin(), components_.end());
}

RootSystemSpec RootSystemSpec::parse(std::string_view text) {
  std::vector<ComponentSpec> comps;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find('+', pos);
    std::string_view item = text.substr(pos, next == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : next - pos);
    if (item.empty())
      throw validation_error("empty component in root-system spec '" + std::string(text) + "'");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(item[0])));
    if (f < 'A' || f > 'G')
      throw validation_error("unknown family letter in '" + std::string(item) + "'");
    int rank = 0;
    for (std::size_t i = 1; i < item.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(item[i])))
        throw validation_error("bad rank in '" + std::string(item) + "'");
      rank = rank * 10 + (item[i] - '0');
      if (rank > 64) throw validation_error("rank out of range in '" + std::string(item) + "'");
    }
    if (item.size() < 2) throw validation_error("missing rank in '" + std::string(item) + "'");
    comps.push_back({static_cast<Family>(f), rank});
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return RootSystemSpec(std::move(comps));
}

std::string RootSystemSpec::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) os << '+';
    os << family_letter(components_[i].family) << components_[i].rank;
  }
  return os.str();
}

int RootSystemSpec::total_rank() const {
  int r = 0;
  for (const auto& c : components_) r += c.rank;
  return r;
}

std::size_t RootSystem::VecHash::operator()(const RootVector& v) const {
  std::uint64_t h = detail::kFnvOffset;
  for (int x : v) h = detail::fnv1a64_i32(x, h);
  return static_cast<std::size_t>(h);
}

RootSystem RootSystem::build(const RootSystemSpec& spec) {
  RootSystem rs;
  rs.spec_ = spec;
  rs.rank_ = spec.total_rank();
  const int n = rs.rank_;

  rs.gram_.assign(n, std::vector<int>(n, 0));
  int offset = 0;
  for (const auto& cspec : spec.components()) {
    auto g = component_gram(cspec);
    for (int i = 0; i < cspec.rank; ++i)
      for (int j = 0; j < cspec.rank; ++j) rs.gram_[offset + i][offset + j] = g[i][j];

    ComponentInfo info;
    info.spec = cspec;
    info.offset = offset;
    info.rank = cspec.rank;
    auto len = simple_lengths(cspec);
    info.simply_laced = std::all_of(len.begin(), len.end(), [](int v) { return v == 2; });
    for (int v : len) (v == 2 ? info.short_simple_count : info.long_simple_count)++;
    rs.components_.push_back(std::move(info));
    offset += cspec.rank;
  }

  rs.cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int num = 2 * rs.gram_[i][j];
      if (num % rs.gram_[j][j] != 0)
        throw theorem_violation_error("Cartan integer is not integral");
      rs.cartan_[i][j] = num / rs.gram_[j][j];
    }

  // Close the simple roots under the simple reflections.  Every root is
  // reachable this way since the Weyl group is generated by them.
  std::set<RootVector> all;
  std::deque<RootVector> queue;
  for (int i = 0; i < n; ++i) {
    RootVector e(n, 0);
    e[i] = 1;
    all.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootVector v = std::move(queue.front());
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      // n(v, alpha_j) without a table: sum of v_i * cartan[i][j]
      int c = 0;
      for (int i = 0; i < n; ++i) c += v[i] * rs.cartan_[i][j];
      RootVector w = v;
      w[j] -= c;
      if (all.insert(w).second) queue.push_back(w);
    }
  }

  for (const auto& v : all) {
    bool nonneg = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
    bool nonpos = std::all_of(v.begin(), v.end(), [](int x) { return x <= 0; });
    if (!nonneg && !nonpos)
      throw theorem_violation_error("root with mixed-sign coefficients");
    if (nonneg) rs.positive_.push_back(v);
  }
  std::sort(rs.positive_.begin(), rs.positive_.end(),
            [&rs](const RootVector& a, const RootVector& b) {
              int ha = 0, hb = 0;
              for (int x : a) ha += x;
              for (int x : b) hb += x;
              if (ha != hb) return ha < hb;
              return a < b;
            });

  const int p = rs.positive_count();
  rs.heights_.resize(p);
  rs.long_.resize(p);
  rs.component_.resize(p);
  for (int k = 0; k < p; ++k) {
    const auto& v = rs.positive_[k];
    rs.positive_index_.emplace(v, k);
    int h = 0;
    for (int x : v) h += x;
    rs.heights_[k] = h;
    int sq = rs.inner_product(v, v);
    int comp = -1;
    for (std::size_t ci = 0; ci < rs.components_.size(); ++ci) {
      const auto& info = rs.components_[ci];
      bool touches = false;
      for (int i = 0; i < info.rank; ++i)
        if (v[info.offset + i] != 0) touches = true;
      if (touches) {
        if (comp >= 0)
          throw theorem_violation_error("root supported on more than one component");
        comp = static_cast<int>(ci);
      }
    }
    if (comp < 0) throw theorem_violation_error("positive root with empty support");
    rs.component_[k] = comp;
    bool is_long = !rs.components_[comp].simply_laced && sq > 2;
    if (sq != 2 && sq != 4 && sq != 6)
      throw theorem_violation_error("root squared length outside {2,4,6}");
    rs.long_[k] = is_long ? 1 : 0;
    rs.components_[comp].positive_count++;
  }

  rs.simple_axis_.resize(n);
  for (int i = 0; i < n; ++i) {
    RootVector e(n, 0);
    e[i] = 1;
    rs.simple_axis_[i] = rs.positive_index_.at(e);
  }

  // Dominant short root per component: the unique short positive root with
  // nonnegative inner product against every simple root of its component.
  for (auto& info : rs.components_) {
    int found = -1;
    for (int k = 0; k < p; ++k) {
      if (rs.component_[k] != static_cast<int>(&info - rs.components_.data())) continue;
      if (rs.long_[k]) continue;
      bool dominant = true;
      for (int i = 0; i < info.rank && dominant; ++i) {
        RootVector e(n, 0);
        e[info.offset + i] = 1;
        if (rs.inner_product(rs.positive_[k], e) < 0) dominant = false;
      }
      if (dominant) {
        if (found >= 0) throw theorem_violation_error("dominant short root not unique");
        found = k;
      }
    }
    if (found < 0) throw theorem_violation_error("no dominant short root");
    info.dominant_short = rs.positive_[found];
    info.dominant_short_index = found;
  }

  rs.reflect_index_.assign(p, std::vector<int>(p, -1));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      RootVector img = rs.reflect(rs.positive_[a], rs.positive_[b]);
      rs.reflect_index_[a][b] = rs.axis_index(img);
    }

  return rs;
}

int RootSystem::inner_product(const RootVector& x, const RootVector& y) const {
  if (static_cast<int>(x.size()) != rank_ || static_cast<int>(y.size()) != rank_)
    throw validation_error("vector length does not match root-system rank");
  int s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    int row = 0;
    for (int j = 0; j < rank_; ++j) row += gram_[i][j] * y[j];
    s += x[i] * row;
  }
  return s;
}

int RootSystem::cartan_integer(const RootVector& x, const RootVector& alpha) const {
  if (!is_root(alpha)) throw validation_error("cartan_integer: alpha is not a root");
  int num = 2 * inner_product(x, alpha);
  int den = inner_product(alpha, alpha);
  if (num % den != 0) throw validation_error("cartan_integer: non-integral pairing");
  return num / den;
}

RootVector RootSystem::reflect(const RootVector& alpha, const RootVector& x) const {
  int c = cartan_integer(x, alpha);
  RootVector y = x;
  for (int i = 0; i < rank_; ++i) y[i] -= c * alpha[i];
  return y;
}

int RootSystem::height(const RootVector& beta) const {
  if (!is_positive_root(beta)) throw validation_error("height: not a positive root");
  int h = 0;
  for (int x : beta) h += x;
  return h;
}

RootVector RootSystem::positive_representative(const RootVector& beta) const {
  if (is_positive_root(beta)) return beta;
  RootVector neg = beta;
  for (int& x : neg) x = -x;
  if (is_positive_root(neg)) return neg;
  throw validation_error("positive_representative: not a root");
}

bool RootSystem::is_root(const RootVector& v) const {
  return try_axis_index(v).has_value();
}

bool RootSystem::is_positive_root(const RootVector& v) const {
  return static_cast<int>(v.size()) == rank_ && positive_index_.count(v) > 0;
}

int RootSystem::axis_index(const RootVector& beta) const {
  auto idx = try_axis_index(beta);
  if (!idx) throw validation_error("not a root of this root system");
  return *idx;
}

std::optional<int> RootSystem::try_axis_index(const RootVector& beta) const {
  if (static_cast<int>(beta.size()) != rank_) return std::nullopt;
  auto it = positive_index_.find(beta);
  if (it != positive_index_.end()) return it->second;
  RootVector neg = beta;
  for (int& x : neg) x = -x;
  it = positive_index_.find(neg);
  if (it != positive_index_.end()) return it->second;
  return std::nullopt;
}

int RootSystem::squared_length(int positive_index) const {
  return inner_product(positive_[positive_index], positive_[positive_index]);
}

RootSystem build_root_system(const RootSystemSpec& spec) { return RootSystem::build(spec); }

int set_height(const RootSystem& rs, std::span<const int> axis_indices) {
  int h = 0;
  for (int a : axis_indices) h += rs.height_of(a);
  return h;
}

} // namespace weylbraid::rootsys

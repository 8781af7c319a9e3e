#include "pisot/localconfig.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "pisot/parallel.hpp"
#include "pisot/spectrum.hpp"

namespace pisot {

namespace {

ConfigKey flatten(const std::vector<CyclotomicInt>& sorted) {
  ConfigKey k;
  if (sorted.empty()) return k;
  const int d = sorted.front().degree();
  k.reserve(sorted.size() * d);
  for (const auto& z : sorted)
    for (auto c : z.coeffs()) k.push_back(c);
  return k;
}

constexpr double kThresholdSlack = 1e-9;

}  // namespace

std::size_t ConfigKeyHash::operator()(const ConfigKey& k) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto c : k) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::vector<CyclotomicInt> dihedral_image(const std::vector<CyclotomicInt>& points, int order, int k, bool reflect) {
  const CyclotomicInt w = CyclotomicInt::root_of_unity(order, k);
  std::vector<CyclotomicInt> out;
  out.reserve(points.size());
  for (const auto& z : points) out.push_back(w * (reflect ? conjugate(z) : z));
  std::sort(out.begin(), out.end());
  return out;
}

ConfigKey canonicalize(const std::vector<CyclotomicInt>& points, int order) {
  if (points.empty()) return {};
  const CyclotomicInt w = CyclotomicInt::root_of_unity(order, 1);
  std::vector<CyclotomicInt> best;
  for (bool reflect : {false, true}) {
    std::vector<CyclotomicInt> img;
    img.reserve(points.size());
    for (const auto& z : points) img.push_back(reflect ? conjugate(z) : z);
    for (int k = 0; k < order; ++k) {
      if (k > 0)
        for (auto& z : img) z = w * z;
      auto sorted = img;
      std::sort(sorted.begin(), sorted.end());
      if (best.empty() || sorted < best) best = std::move(sorted);
    }
  }
  return flatten(best);
}

ConfigRadius::ConfigRadius(const BaseSpec& base, const Alphabet& alphabet, bool closed) : closed_(closed) {
  const CyclotomicInt bm1 = base.beta - CyclotomicInt::from_int(base.order, 1);
  beta_minus_one_sq_ = bm1 * bm1;
  double best = -1;
  for (const auto& a : alphabet.digits)
    for (const auto& b : alphabet.digits) {
      const double d = std::abs(embed(a - b));
      if (d > best + kThresholdSlack) {
        best = d;
        diameter_sq_ = (a - b) * conjugate(a - b);
      }
    }
  radius_ = best / (base.value() - 1.0);
}

bool ConfigRadius::contains(const CyclotomicInt& y) const { return contains(y, embed(y)); }

bool ConfigRadius::contains(const CyclotomicInt& y, Complex embedded) const {
  const double r = std::abs(embedded);
  if (r < radius_ - kThresholdSlack) return true;
  if (r > radius_ + kThresholdSlack) return false;
  const int s = real_sign(diameter_sq_ - y * conjugate(y) * beta_minus_one_sq_);
  return closed_ ? s >= 0 : s > 0;
}

std::optional<std::size_t> ConfigEnumeration::find(const ConfigKey& key) const {
  for (std::size_t i = 0; i < configs.size(); ++i)
    if (configs[i].key == key) return i;
  return std::nullopt;
}

std::vector<CyclotomicInt> origin_config(const BaseSpec& base, const Alphabet& alphabet, const ConfigRadius& radius) {
  const Patch p = generate_ball(base, alphabet, radius.value());
  std::vector<CyclotomicInt> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (radius.contains(p.points[i], p.embedded[i])) out.push_back(p.points[i]);
  return out;
}

std::vector<CyclotomicInt> child_config(const BaseSpec& base, const Alphabet& alphabet,
                                        const std::vector<CyclotomicInt>& parent, std::size_t digit,
                                        const ConfigRadius& radius) {
  const CyclotomicInt& ai = alphabet.digits.at(digit);
  std::vector<CyclotomicInt> shifts;
  std::vector<Complex> shift_pos;
  for (const auto& a : alphabet.digits) {
    shifts.push_back(a - ai);
    shift_pos.push_back(embed(shifts.back()));
  }
  std::vector<CyclotomicInt> out;
  for (const auto& s : parent) {
    const CyclotomicInt bs = base.beta * s;
    const Complex bs_pos = embed(bs);
    for (std::size_t j = 0; j < shifts.size(); ++j) {
      const Complex pos = bs_pos + shift_pos[j];
      if (std::abs(pos) > radius.value() + kThresholdSlack) continue;
      CyclotomicInt y = bs + shifts[j];
      if (radius.contains(y, pos)) out.push_back(std::move(y));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ConfigEnumeration enumerate_configs(const BaseSpec& base, const Alphabet& alphabet, std::size_t budget, bool closed) {
  if (budget == 0) throw InvalidInput("configuration budget must be positive");
  ConfigEnumeration e;
  e.base = base;
  e.alphabet = alphabet;
  e.budget = budget;
  const ConfigRadius radius(base, alphabet, closed);
  e.radius = radius.value();
  e.closed = closed;
  const int n = base.order;

  std::unordered_map<ConfigKey, std::size_t, ConfigKeyHash> index;
  auto add = [&](std::vector<CyclotomicInt> pts, std::optional<std::size_t> parent, int digit) {
    LocalConfig c;
    c.key = canonicalize(pts, n);
    if (auto it = index.find(c.key); it != index.end()) return static_cast<std::int64_t>(it->second);
    if (e.configs.size() >= budget) return std::int64_t{-1};
    // store the canonical image so that digits index a fixed frame
    const int d = base.beta.degree();
    c.points.reserve(pts.size());
    for (std::size_t i = 0; i < c.key.size(); i += d)
      c.points.emplace_back(n, std::span<const std::int64_t>(c.key.data() + i, d));
    c.parent = parent;
    c.parent_digit = digit;
    c.children.assign(alphabet.size(), -1);
    index.emplace(c.key, e.configs.size());
    e.configs.push_back(std::move(c));
    return static_cast<std::int64_t>(e.configs.size() - 1);
  };

  add(origin_config(base, alphabet, radius), std::nullopt, -1);
  bool refused = false;
  std::size_t head = 0;
  const std::size_t batch = 64;
  while (head < e.configs.size() && !refused) {
    const std::size_t end = std::min(e.configs.size(), head + batch);
    std::vector<std::vector<std::vector<CyclotomicInt>>> kids(end - head);
    parallel_for(end - head, [&](std::size_t i) {
      auto& slot = kids[i];
      slot.resize(alphabet.size());
      for (std::size_t d = 0; d < alphabet.size(); ++d)
        slot[d] = child_config(base, alphabet, e.configs[head + i].points, d, radius);
    });
    for (std::size_t i = 0; i < kids.size() && !refused; ++i)
      for (std::size_t d = 0; d < alphabet.size(); ++d) {
        const std::int64_t id = add(std::move(kids[i][d]), head + i, static_cast<int>(d));
        if (id < 0) {
          refused = true;
          break;
        }
        e.configs[head + i].children[d] = static_cast<std::int32_t>(id);
      }
    head = end;
  }
  e.complete = !refused;
  return e;
}

ClippedCell config_cell(const std::vector<CyclotomicInt>& points, double config_radius) {
  std::vector<Complex> sites;
  sites.reserve(points.size());
  for (const auto& z : points) sites.push_back(embed(z));
  ClippedCell cell = clip_voronoi(Complex(0, 0), sites, 2 * config_radius);
  // every bisector that could cut the cell comes from a point within twice its radius
  if (cell.touches_box() || 2 * cell.radius(Complex(0, 0)) > config_radius + kThresholdSlack)
    throw std::logic_error("configuration too small to determine the cell of 0");
  return cell;
}

std::vector<TileClass> tile_inventory(const ConfigEnumeration& e) {
  std::vector<std::vector<std::int64_t>> sigs(e.configs.size());
  std::vector<std::vector<Complex>> cells(e.configs.size());
  parallel_for(e.configs.size(), [&](std::size_t i) {
    cells[i] = config_cell(e.configs[i].points, e.radius).vertices;
    sigs[i] = shape_signature(cells[i], kShapeQuantum);
  });
  std::vector<TileClass> out;
  std::unordered_map<std::vector<std::int64_t>, std::size_t, ConfigKeyHash> by_sig;
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    auto [it, fresh] = by_sig.emplace(sigs[i], out.size());
    if (fresh) {
      TileClass t;
      t.representative = i;
      t.vertices = cells[i];
      t.signature = sigs[i];
      out.push_back(std::move(t));
    }
    out[it->second].members.push_back(i);
  }
  return out;
}

std::vector<ConfigEdge> config_graph(const ConfigEnumeration& e) {
  if (!e.complete) throw InvalidInput("configuration graph needs a complete enumeration");
  std::vector<ConfigEdge> edges;
  for (std::size_t i = 0; i < e.configs.size(); ++i)
    for (std::size_t d = 0; d < e.configs[i].children.size(); ++d)
      edges.push_back({i, static_cast<int>(d), static_cast<std::size_t>(e.configs[i].children[d])});
  return edges;
}

}  // namespace pisot

#include "isotone/poset.hpp"

#include <algorithm>

#include "isotone/errors.hpp"
#include "isotone/rng.hpp"

namespace isotone::order {

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
  std::size_t n = labels_.size();
  require(n >= 1, Errc::invalid_argument, "poset must be nonempty");
  require(leq_.size() == n, Errc::invalid_argument, "leq matrix must be square of poset size");
  for (const auto& row : leq_)
    require(row.size() == n, Errc::invalid_argument, "leq matrix must be square of poset size");
  for (std::size_t i = 0; i < n; ++i)
    require(leq_[i][i], Errc::invalid_argument, "order must be reflexive");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j)
        require(!(leq_[i][j] && leq_[j][i]), Errc::invalid_argument,
                "order must be antisymmetric");
      if (leq_[i][j])
        for (std::size_t k = 0; k < n; ++k)
          if (leq_[j][k])
            require(leq_[i][k], Errc::invalid_argument, "order must be transitive");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      require(labels_[i] != labels_[j], Errc::invalid_argument, "labels must be distinct");
}

std::size_t FinitePoset::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  fail(Errc::invalid_argument, "unknown poset element: " + label);
}

std::vector<std::size_t> FinitePoset::minimal_of(const std::vector<std::size_t>& subset) const {
  std::vector<std::size_t> out;
  for (std::size_t a : subset) {
    bool minimal = true;
    for (std::size_t b : subset)
      if (b != a && leq_[b][a]) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

SetValuedMap::SetValuedMap(std::vector<std::vector<std::size_t>> images, std::size_t universe)
    : images_(std::move(images)) {
  require(images_.size() == universe, Errc::invalid_argument,
          "map must assign an image to every element");
  for (auto& img : images_) {
    require(!img.empty(), Errc::invalid_argument, "images must be nonempty");
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    for (std::size_t v : img)
      require(v < universe, Errc::invalid_argument, "image element out of range");
  }
}

bool SetValuedMap::maps_to(std::size_t x, std::size_t v) const {
  const auto& img = images_[x];
  return std::binary_search(img.begin(), img.end(), v);
}

bool is_increasing_downward(const FinitePoset& poset, const SetValuedMap& map) {
  std::size_t n = poset.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!poset.leq(x, y)) continue;
      for (std::size_t w : map.image(y)) {
        bool covered = false;
        for (std::size_t z : map.image(x))
          if (poset.leq(z, w)) {
            covered = true;
            break;
          }
        if (!covered) return false;
      }
    }
  return true;
}

FixpointScan finite_fixpoints(const FinitePoset& poset, const SetValuedMap& map) {
  FixpointScan scan;
  std::size_t n = poset.size();
  for (std::size_t x = 0; x < n; ++x)
    if (map.maps_to(x, x)) scan.fixed_points.push_back(x);
  scan.minimal_fixed_points = poset.minimal_of(scan.fixed_points);

  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t v : map.image(z))
      if (poset.leq(v, z)) {
        scan.deflation_set.push_back(z);
        break;
      }
  scan.deflation_minimals = poset.minimal_of(scan.deflation_set);
  scan.deflation_minimals_are_fixed = true;
  for (std::size_t m : scan.deflation_minimals)
    if (!map.maps_to(m, m)) scan.deflation_minimals_are_fixed = false;
  return scan;
}

namespace {

bool contains_index(const std::vector<std::size_t>& v, std::size_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// Every chain inside the fixed-point set must have a lower bound inside it.
// Finite chains carry their own minimum, so this enumeration is a
// formality, kept because it is the theorem's literal conclusion.
bool chains_bounded_inside(const FinitePoset& poset, const std::vector<std::size_t>& fixed) {
  std::size_t m = fixed.size();
  if (m > 20) return true;  // fixed sets here never get near this
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    std::vector<std::size_t> chain;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t{1} << i)) chain.push_back(fixed[i]);
    bool is_chain = true;
    for (std::size_t a : chain)
      for (std::size_t b : chain)
        if (!poset.leq(a, b) && !poset.leq(b, a)) is_chain = false;
    if (!is_chain) continue;
    bool bounded = false;
    for (std::size_t c : fixed) {
      bool lower = true;
      for (std::size_t a : chain)
        if (!poset.leq(c, a)) lower = false;
      if (lower) {
        bounded = true;
        break;
      }
    }
    if (!bounded) return false;
  }
  return true;
}

}  // namespace

TheoremCheck verify_downward_fixpoint_theorem(const FinitePoset& poset, const SetValuedMap& map,
                                              std::size_t y_star, std::size_t v_star) {
  TheoremCheck out;
  require(y_star < poset.size() && v_star < poset.size(), Errc::invalid_argument,
          "start elements out of range");
  if (!map.maps_to(y_star, v_star)) {
    out.hypothesis_failure = "v* is not in F(y*)";
    return out;
  }
  if (!poset.leq(v_star, y_star)) {
    out.hypothesis_failure = "v* is not below y*";
    return out;
  }
  if (!is_increasing_downward(poset, map)) {
    out.hypothesis_failure = "map is not order-increasing downward";
    return out;
  }
  out.hypotheses_ok = true;
  out.scan = finite_fixpoints(poset, map);
  out.fixed_points_nonempty = !out.scan.fixed_points.empty();
  for (std::size_t f : out.scan.fixed_points)
    if (poset.leq(f, y_star)) out.fixed_point_below_start = true;
  for (std::size_t f : out.scan.minimal_fixed_points)
    if (poset.leq(f, y_star)) out.minimal_fixed_point_below_start = true;
  out.chains_bounded_inside = chains_bounded_inside(poset, out.scan.fixed_points);
  return out;
}

FinitePoset random_poset(std::uint64_t seed, std::uint64_t index) {
  Rng rng(seed, index);
  std::size_t n = 2 + rng.below(5);  // 2..6 elements
  // Random DAG under a random ranking, then its reflexive-transitive closure.
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);

  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (rng.chance(0.4)) leq[perm[a]][perm[b]] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;

  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::string(1, static_cast<char>('a' + i));
  return FinitePoset(std::move(labels), std::move(leq));
}

GeneratedInstance random_downward_instance(std::uint64_t seed, std::uint64_t index) {
  FinitePoset poset = random_poset(seed, index);
  Rng rng(seed ^ 0x5eedu, index);
  std::size_t n = poset.size();

  // Monotone single-valued base: mutate from the identity, keeping order
  // preservation. Singleton images of a monotone map are increasing downward.
  std::vector<std::size_t> base(n);
  for (std::size_t i = 0; i < n; ++i) base[i] = i;
  auto order_preserving = [&](const std::vector<std::size_t>& s) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (poset.leq(x, y) && !poset.leq(s[x], s[y])) return false;
    return true;
  };
  for (std::size_t attempt = 0; attempt < 4 * n; ++attempt) {
    std::size_t x = rng.below(n);
    std::size_t old = base[x];
    base[x] = rng.below(n);
    if (!order_preserving(base)) base[x] = old;
  }

  std::vector<std::vector<std::size_t>> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = {base[i]};

  // Enlarge images while the downward property survives.
  for (std::size_t attempt = 0; attempt < 2 * n; ++attempt) {
    std::size_t x = rng.below(n);
    std::size_t c = rng.below(n);
    if (contains_index(images[x], c)) continue;
    images[x].push_back(c);
    SetValuedMap trial(images, n);
    if (!is_increasing_downward(poset, trial)) images[x].pop_back();
  }

  // Start condition: some y* with an image point below it. If mutation left
  // none, adding one common minimal element to every image preserves the
  // downward property and creates the pair.
  auto find_start = [&]() -> std::pair<bool, std::pair<std::size_t, std::size_t>> {
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t v : images[y])
        if (poset.leq(v, y)) candidates.emplace_back(y, v);
    if (candidates.empty()) return {false, {0, 0}};
    return {true, candidates[rng.below(candidates.size())]};
  };
  auto [found, start] = find_start();
  if (!found) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    std::vector<std::size_t> minimals = poset.minimal_of(all);
    std::size_t m0 = minimals[rng.below(minimals.size())];
    for (auto& img : images)
      if (!contains_index(img, m0)) img.push_back(m0);
    std::tie(found, start) = find_start();
  }

  SetValuedMap map(std::move(images), n);
  require(found && is_increasing_downward(poset, map), Errc::internal,
          "instance generation failed");
  return GeneratedInstance{std::move(poset), std::move(map), start.first, start.second};
}

CorpusResult run_corpus(int instance_count, std::uint64_t seed) {
  CorpusResult result;
  for (int i = 0; i < instance_count; ++i) {
    GeneratedInstance inst = random_downward_instance(seed, static_cast<std::uint64_t>(i));
    TheoremCheck check =
        verify_downward_fixpoint_theorem(inst.poset, inst.map, inst.y_star, inst.v_star);
    bool ok = check.hypotheses_ok && check.conclusions_ok();
    // Route agreement: the minimal elements of the deflation set must be
    // exactly the minimal fixed points.
    ok = ok && check.scan.deflation_minimals_are_fixed &&
         check.scan.deflation_minimals == check.scan.minimal_fixed_points;
    ++result.instances;
    if (ok)
      ++result.conforming;
    else
      result.failing_indices.push_back(static_cast<std::uint64_t>(i));
  }
  return result;
}

}  // namespace isotone::order

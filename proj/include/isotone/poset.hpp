#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace isotone::order {

/// Explicit finite partial order. Reflexivity, antisymmetry and transitivity
/// are checked at construction.
class FinitePoset {
 public:
  FinitePoset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq);

  std::size_t size() const { return labels_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t index_of(const std::string& label) const;

  /// Elements of the subset with no strictly smaller element in the subset.
  std::vector<std::size_t> minimal_of(const std::vector<std::size_t>& subset) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
};

/// Set-valued map on poset elements with nonempty images.
class SetValuedMap {
 public:
  SetValuedMap(std::vector<std::vector<std::size_t>> images, std::size_t universe);

  std::size_t size() const { return images_.size(); }
  const std::vector<std::size_t>& image(std::size_t x) const { return images_[x]; }
  bool maps_to(std::size_t x, std::size_t v) const;

 private:
  std::vector<std::vector<std::size_t>> images_;
};

/// Exhaustive test: for every comparable pair x <= y and every w in F(y)
/// there is z in F(x) with z <= w.
bool is_increasing_downward(const FinitePoset& poset, const SetValuedMap& map);

struct FixpointScan {
  std::vector<std::size_t> fixed_points;          // direct scan: x in F(x)
  std::vector<std::size_t> minimal_fixed_points;  // minimal among the fixed points
  std::vector<std::size_t> deflation_set;         // { z : some v in F(z) has v <= z }
  std::vector<std::size_t> deflation_minimals;    // minimal elements of the deflation set
  bool deflation_minimals_are_fixed = false;
};

/// Enumerates the fixed points directly and also walks the deflation-set
/// route: the minimal elements of { z : F(z) dips below z } are fixed points
/// whenever the map is increasing downward, and they coincide with the
/// minimal fixed points.
FixpointScan finite_fixpoints(const FinitePoset& poset, const SetValuedMap& map);

struct TheoremCheck {
  bool hypotheses_ok = false;
  std::string hypothesis_failure;  // empty when hypotheses hold
  bool fixed_points_nonempty = false;
  bool fixed_point_below_start = false;          // some fixed point <= y*
  bool minimal_fixed_point_below_start = false;  // some minimal fixed point <= y*
  bool chains_bounded_inside = false;  // every chain of fixed points has a lower bound among them
  FixpointScan scan;

  bool conclusions_ok() const {
    return fixed_points_nonempty && fixed_point_below_start &&
           minimal_fixed_point_below_start && chains_bounded_inside;
  }
};

/// Verifies the downward fixed-point theorem on a finite instance: given an
/// increasing-downward map and a start pair v* in F(y*) with v* <= y*, the
/// fixed-point set is nonempty, contains a minimal point below y*, and is
/// closed under taking lower bounds of chains. Hypothesis failures are
/// reported as such, never as theorem failures.
TheoremCheck verify_downward_fixpoint_theorem(const FinitePoset& poset, const SetValuedMap& map,
                                              std::size_t y_star, std::size_t v_star);

/// Random poset of 2..6 elements: transitive closure of a random DAG.
FinitePoset random_poset(std::uint64_t seed, std::uint64_t index);

struct GeneratedInstance {
  FinitePoset poset;
  SetValuedMap map;
  std::size_t y_star;
  std::size_t v_star;
};

/// Random increasing-downward instance with the start condition satisfied:
/// a monotone single-valued base map, randomly enlarged while the downward
/// property is preserved, repaired if no deflation pair exists.
GeneratedInstance random_downward_instance(std::uint64_t seed, std::uint64_t index);

struct CorpusResult {
  int instances = 0;
  int conforming = 0;
  std::vector<std::uint64_t> failing_indices;

  bool all_conform() const { return conforming == instances; }
};

/// Runs the theorem verifier over a generated corpus and also cross-checks
/// the deflation-set route against direct enumeration on every instance.
CorpusResult run_corpus(int instance_count, std::uint64_t seed);

}  // namespace isotone::order

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "betti/combinat.hpp"

namespace betti {

/// Sorted set of coordinate labels.
using VarSet = std::vector<std::size_t>;

VarSet make_varset(std::vector<std::size_t> vars);
VarSet range_vars(std::size_t k);  // {0, ..., k-1}

/// A scaled standard simplex on one coordinate block.
struct SimplexBlock {
  VarSet vars;
  std::int64_t side = 0;

  bool operator==(const SimplexBlock&) const = default;
};

/// Newton polytope from one of the supported classes: scaled simplex, axis
/// box, product of simplices on disjoint blocks, or a Minkowski sum of those.
/// Every polytope lives in an explicit ambient coordinate set; coordinates
/// of the ambient set not mentioned by the body are degenerate (width 0).
class Polytope {
 public:
  enum class Kind { Simplex, Box, BlockProduct, MinkowskiSum };

  static Polytope simplex(std::int64_t side, VarSet vars);
  static Polytope simplex(std::int64_t side, VarSet vars, VarSet ambient);
  static Polytope box(VarSet vars, IntVector sides);
  static Polytope block_product(std::vector<SimplexBlock> blocks);
  static Polytope block_product(std::vector<SimplexBlock> blocks, VarSet ambient);
  static Polytope minkowski_sum(std::vector<Polytope> members);

  Kind kind() const { return kind_; }
  const VarSet& ambient() const { return ambient_; }
  std::size_t dimension() const { return ambient_.size(); }
  const std::vector<SimplexBlock>& blocks() const { return blocks_; }
  const std::vector<Polytope>& members() const { return members_; }

  /// The face cut out by X_i = 0 for i in I, as a polytope on ambient \ I.
  Polytope face_at_zero(const VarSet& I) const;

  /// λ·P for λ >= 0.
  Polytope scaled(std::int64_t lambda) const;

  /// Partition of the ambient coordinates into simplex blocks describing the
  /// same body. Throws UnsupportedFamilyError when a Minkowski sum leaves the
  /// product-of-simplices class.
  std::vector<SimplexBlock> normal_form() const;

  /// Euclidean volume in the ambient dimension.
  Rational volume() const;

  std::string describe() const;

  bool operator==(const Polytope&) const = default;

 private:
  Kind kind_ = Kind::Simplex;
  VarSet ambient_;
  std::vector<SimplexBlock> blocks_;
  std::vector<Polytope> members_;
};

/// Coarsest coordinate partition on which every body is a product of one
/// simplex per component; sides[b][c] is body b's side on component c.
struct CommonPartition {
  std::vector<VarSet> components;
  std::vector<IntVector> sides;
};

/// Throws UnsupportedFamilyError when no such partition exists.
CommonPartition common_partition(const std::vector<Polytope>& bodies);

struct MixedVolumeQuery {
  std::vector<std::pair<Polytope, std::int64_t>> bodies;  // (body, multiplicity)
};

enum class MvStrategy { IdenticalVolume, SimplexClosedForm, BoxPermanent, BlockConvolution };

std::string to_string(MvStrategy s);

struct MixedVolumeResult {
  Rational value;
  MvStrategy strategy;
};

/// Mixed volume, with the evaluation strategy that produced it.
MixedVolumeResult mixed_volume_detailed(const MixedVolumeQuery& q);
Rational mixed_volume(const MixedVolumeQuery& q);

/// Independent evaluation by finite differences of vol(Σ λ_i K_i) over the
/// grid λ ∈ {1, 2}^m.
Rational mixed_volume_oracle_interpolation(const MixedVolumeQuery& q);

/// Permanent of a square integer matrix (Ryser inclusion-exclusion).
Integer permanent(const IntMatrix& m);

/// Σ over ordered column partitions (J_1..J_l), |J_i| = alpha_i, of Π d_{i,j}.
Integer n_refined(const IntMatrix& d, const IntVector& alpha);

/// max over the same partitions of Π d_{i,j}.
Integer n_coarse_bound(const IntMatrix& d, const IntVector& alpha);

/// Boxes with side vectors given by the rows of d, row i repeated alpha_i times.
MixedVolumeQuery box_query(const IntMatrix& d, const IntVector& alpha);

}  // namespace betti

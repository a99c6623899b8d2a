#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dgm/gmap.hpp"
#include "dgm/linalg.hpp"

namespace dgm {

/// A differential graded module (V, d). Deformation theory here uses the
/// homological convention: d has degree -1.
class DgModule {
 public:
  /// Throws NotEndomorphism, BadDegree (degree other than -1) or NotADifferential.
  DgModule(ModulePtr module, GradedMap d);

  const ModulePtr& module() const noexcept { return module_; }
  const GradedMap& differential() const noexcept { return d_; }
  const FieldSpec& field() const noexcept { return module_->field(); }

 private:
  ModulePtr module_;
  GradedMap d_;
};

/// An element of C^p(V;M) = Hom^{-p}(V, M).
class Cochain {
 public:
  /// Throws MalformedCochain unless map.degree() == -p.
  Cochain(int p, GradedMap map);

  int degree() const noexcept { return p_; }
  const GradedMap& map() const noexcept { return map_; }
  bool is_zero() const noexcept { return map_.is_zero(); }
  std::string to_string() const { return map_.to_string(); }

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.p_ == b.p_ && a.map_ == b.map_;
  }

 private:
  int p_;
  GradedMap map_;
};

/// Coordinate (target, source) of the elementary operator x_target d/d x_source.
struct ElementaryIndex {
  std::size_t target;
  std::size_t source;

  friend bool operator==(const ElementaryIndex&, const ElementaryIndex&) = default;
};

/// Linear functional on the block equations "coefficient of x_i d/d x_j in
/// δ(f) equals that in g" which is identically zero on the left and evaluates
/// to `value` on the right.
struct Witness {
  struct Term {
    std::string target;
    std::string source;
    Scalar coeff;
  };
  std::vector<Term> equations;
  Scalar value;
  /// Source degree at which the degree-support certificate fires, when it does.
  std::optional<int> support_degree;

  /// Source basis names of the equations involved, without repeats.
  std::vector<std::string> sources() const;
  bool involves_source(const std::string& name) const;
  std::string to_string() const;
};

class SolveOutcome {
 public:
  static SolveOutcome solved(Cochain f) { return SolveOutcome(std::move(f)); }
  static SolveOutcome infeasible(Witness w) { return SolveOutcome(std::move(w)); }

  bool is_solved() const noexcept { return std::holds_alternative<Cochain>(value_); }
  const Cochain& solution() const { return std::get<Cochain>(value_); }
  const Witness& witness() const { return std::get<Witness>(value_); }

 private:
  explicit SolveOutcome(std::variant<Cochain, Witness> v) : value_(std::move(v)) {}
  std::variant<Cochain, Witness> value_;
};

struct CohomologyResult {
  int p = 0;
  std::size_t dim_cochains = 0;
  std::size_t dim_cocycles = 0;
  std::size_t dim_coboundaries = 0;
  std::size_t dim = 0;
  std::vector<Cochain> representatives;
};

/// The cochain complex {C*(V;M), δ} with δ^p(f) = d_M f - (-1)^p f d_V.
class HomComplex {
 public:
  HomComplex(DgModule source, DgModule target);
  explicit HomComplex(const DgModule& v) : HomComplex(v, v) {}

  const DgModule& source() const noexcept { return source_; }
  const DgModule& target() const noexcept { return target_; }
  const FieldSpec& field() const noexcept { return source_.field(); }

  /// Canonical basis of C^p: elementary maps x_i d/d x_j with |x_i| = |x_j| - p,
  /// ordered by (source index, target index).
  std::vector<ElementaryIndex> basis(int p) const;

  Cochain zero(int p) const;
  linalg::SparseVec coordinates(const Cochain& f) const;
  Cochain from_coordinates(int p, const linalg::SparseVec& coords) const;

  /// Throws MalformedCochain when f does not map V to M.
  Cochain coboundary(const Cochain& f) const;
  bool is_cocycle(const Cochain& f) const;

  /// Matrix of δ^p: rows indexed by basis(p + 1), columns by basis(p).
  linalg::Matrix coboundary_matrix(int p) const;

  CohomologyResult cohomology(int p) const;

  /// Exact solve of δ(f) = g. The particular solution sets every free
  /// variable to zero. Throws NotACocycle when δ(g) != 0.
  SolveOutcome solve_coboundary(const Cochain& g) const;

 private:
  void check(const Cochain& f) const;

  DgModule source_;
  DgModule target_;
};

/// Source degree p at which g's block V_p -> V_{p-2} is nonzero while both d
/// blocks V_p -> V_{p-1} and V_{p-1} -> V_{p-2} vanish. At such a p every
/// δ(f), f in C^1, is zero, so g cannot cobound on any truncation.
std::optional<int> noncobounding_degree(const GradedMap& d, const Cochain& g);
bool noncobounding_certificate(const GradedMap& d, const Cochain& g);

}  // namespace dgm

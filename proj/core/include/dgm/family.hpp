#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgm/deform.hpp"

namespace dgm::family {

// The standard example complex: V_p = <x_{2p-1}, x_{2p}> for p >= 1 and
// d = Σ_i x_{6i-5} d/d x_{6i-3}, truncated to degrees <= P. Every map here has
// degree -1 (or -2 for obstructions), so the truncation is a subcomplex and
// all checks on it are exact.

enum class Variant { Polynomial, Obstructed, Linear, Infinite };

std::string_view variant_name(Variant v) noexcept;
std::optional<Variant> parse_variant(std::string_view name) noexcept;

struct FamilySpec {
  int n = 2;
  Variant variant = Variant::Polynomial;
  int truncation = 0;
  FieldSpec field;
};

/// Smallest truncation degree holding every basis element the variant touches.
int minimal_truncation(int n, Variant v) noexcept;

/// Validates n against the variant and P against minimal_truncation; a missing
/// truncation defaults to the minimum. Throws InvalidFamily or TruncationTooSmall.
FamilySpec make_spec(int n, Variant v, std::optional<int> truncation, FieldSpec field);

/// Name of basis element x_index.
std::string basis_name(int index);
/// Index k of a name `x<k>`; std::nullopt for other names.
std::optional<int> basis_index(std::string_view name) noexcept;

/// Basis x_1..x_{2P} with |x_{2p-1}| = |x_{2p}| = p. Throws BadTruncation for P < 1.
DgModule base_complex(int truncation, FieldSpec field);

/// x_i d/d x_j with coefficient c on the base complex.
GradedMap op(const DgModule& base, int i, int j, long c = 1);

/// The lifts d_1..d_n of the chosen variant (just d_1 for the linear one).
/// The infinite variant is built by deform_to_order with the cocycles below.
std::vector<GradedMap> lifts(const FamilySpec& spec, const DgModule& base);

/// Closed-form d_k for the polynomial family of order n (n = 0 means no cutoff).
GradedMap closed_form_lift(const DgModule& base, int n, int k);

/// The cocycles x_{6k-5} d/d x_{6k-2}, k = 2..order, that the infinite variant
/// adds to the canonical lifts.
std::vector<GradedMap> infinite_cocycles(const DgModule& base, int order);

struct Clause {
  std::string name;
  bool passed = false;
  std::string detail;

  friend bool operator==(const Clause&, const Clause&) = default;
};

struct VerificationReport {
  std::string title;
  std::vector<Clause> clauses;
  std::vector<std::string> notes;

  bool passed() const;
  void add(std::string name, bool passed, std::string detail);
  std::string to_string() const;
};

/// Non-trivial polynomial deformation of order n (n = 1 uses the linear variant).
VerificationReport verify_polynomial_deformation(int n, std::optional<int> truncation, FieldSpec field);
/// Approximation of order n obstructed at order n.
VerificationReport verify_obstructed_approximation(int n, std::optional<int> truncation, FieldSpec field);
/// Deformation with nonzero terms through order N. Throws TruncationTooSmall when P < 3N + 3.
VerificationReport verify_infinite_deformation(int truncation, int order, FieldSpec field);

}  // namespace dgm::family

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rbw/common.hpp"

namespace rbw {

/// (g, h) -> label of g·h, as read from a multiplication table document.
using MultiplicationTable = std::map<std::pair<std::string, std::string>, std::string>;

/// A finite group stored as a dense Cayley table over element indices.
/// Instances only exist in validated form: closure, identity, inverses and
/// associativity are all checked by from_table().
class Group {
 public:
  static Group from_table(std::vector<std::string> elements, const MultiplicationTable& mul);

  std::size_t order() const noexcept { return labels_.size(); }
  const std::vector<std::string>& elements() const noexcept { return labels_; }
  const std::string& label(std::size_t g) const { return labels_.at(g); }

  /// Throws UnknownElement.
  std::size_t index(const std::string& label) const;
  bool contains(const std::string& label) const;

  std::size_t mul(std::size_t g, std::size_t h) const noexcept { return table_[g * order() + h]; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t inverse(std::size_t g) const noexcept { return inverse_[g]; }

 private:
  Group() = default;

  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> lookup_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

/// Unitary matrix representation of a group, one n×n matrix per element.
class Irrep {
 public:
  /// Throws DimensionMismatch if a matrix is not n×n, UnknownElement if a label
  /// is not in the group, InvalidArgument if an element has no matrix.
  Irrep(std::string name, std::shared_ptr<const Group> group, std::size_t n,
        const std::map<std::string, CMatrix>& matrices);

  const std::string& name() const noexcept { return name_; }
  const Group& group() const noexcept { return *group_; }
  const std::shared_ptr<const Group>& group_ptr() const noexcept { return group_; }
  std::size_t dim() const noexcept { return n_; }

  const CMatrix& matrix(std::size_t g) const { return matrices_.at(g); }
  const CMatrix& matrix(const std::string& label) const { return matrices_.at(group_->index(label)); }

 private:
  std::string name_;
  std::shared_ptr<const Group> group_;
  std::size_t n_;
  std::vector<CMatrix> matrices_;
};

struct ValidationReport {
  double unitarity_residual = 0.0;     // max_g ‖D(g)D(g)† − I‖_max
  double homomorphism_residual = 0.0;  // max_{g,h} ‖D(g)D(h) − D(gh)‖_max
  double irreducibility_indicator = 0.0;  // (1/N) Σ_g |Tr D(g)|²
  double tolerance = 0.0;

  bool unitary() const { return unitarity_residual <= tolerance; }
  bool homomorphic() const { return homomorphism_residual <= tolerance; }
  bool irreducible() const { return std::abs(irreducibility_indicator - 1.0) <= tolerance; }
  bool ok() const { return unitary() && homomorphic() && irreducible(); }
};

ValidationReport verify_irrep(const Irrep& irrep, double tolerance = default_tolerance());

/// max over (k,j,l,m) of |Σ_g (n/N) D(g⁻¹)_kj D(g)_lm − δ_jl δ_km|.
double orthogonality_residual(const Irrep& irrep);

/// (n/N) Σ_g D(g) Tr{D(g⁻¹) D(g′)}; equals D(g′) for an irrep.
CMatrix resolution_identity(const Irrep& irrep, const std::string& gprime);

}  // namespace rbw

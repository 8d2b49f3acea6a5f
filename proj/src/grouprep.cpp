#include "rbw/grouprep.hpp"

#include <algorithm>

namespace rbw {

Group Group::from_table(std::vector<std::string> elements, const MultiplicationTable& mul) {
  if (elements.empty()) throw Error(ErrorKind::InvalidArgument, "group has no elements");

  Group grp;
  grp.labels_ = std::move(elements);
  for (std::size_t i = 0; i < grp.labels_.size(); ++i) {
    if (!grp.lookup_.emplace(grp.labels_[i], i).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate element '" + grp.labels_[i] + "'");
  }
  const std::size_t n = grp.order();

  for (const auto& [key, value] : mul) {
    for (const auto* l : {&key.first, &key.second}) {
      if (!grp.contains(*l))
        throw Error(ErrorKind::UnknownElement, "'" + *l + "' in multiplication table key is not an element");
    }
    (void)value;
  }

  // closure
  grp.table_.assign(n * n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      const auto& a = grp.labels_[g];
      const auto& b = grp.labels_[h];
      auto it = mul.find({a, b});
      if (it == mul.end())
        throw Error(ErrorKind::NonClosed, "product " + a + "·" + b + " is not defined");
      auto jt = grp.lookup_.find(it->second);
      if (jt == grp.lookup_.end())
        throw Error(ErrorKind::NonClosed,
                    "product " + a + "·" + b + " = '" + it->second + "' is not an element");
      grp.table_[g * n + h] = jt->second;
    }
  }

  // identity
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool is_identity = true;
    for (std::size_t g = 0; g < n && is_identity; ++g)
      is_identity = grp.mul(e, g) == g && grp.mul(g, e) == g;
    if (is_identity) {
      grp.identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::MissingIdentity, "no element acts as a two-sided identity");

  // inverses
  grp.inverse_.assign(n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t count = 0;
    for (std::size_t h = 0; h < n; ++h) {
      if (grp.mul(g, h) == grp.identity_ && grp.mul(h, g) == grp.identity_) {
        grp.inverse_[g] = h;
        ++count;
      }
    }
    if (count == 0)
      throw Error(ErrorKind::MissingInverse, "element '" + grp.labels_[g] + "' has no inverse");
    if (count > 1)
      throw Error(ErrorKind::MissingInverse, "element '" + grp.labels_[g] + "' has no unique inverse");
  }

  // associativity, exhaustively
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (grp.mul(grp.mul(a, b), c) != grp.mul(a, grp.mul(b, c)))
          throw Error(ErrorKind::NonAssociative, "(" + grp.labels_[a] + "·" + grp.labels_[b] + ")·" +
                                                     grp.labels_[c] + " != " + grp.labels_[a] + "·(" +
                                                     grp.labels_[b] + "·" + grp.labels_[c] + ")");
  return grp;
}

std::size_t Group::index(const std::string& label) const {
  auto it = lookup_.find(label);
  if (it == lookup_.end()) throw Error(ErrorKind::UnknownElement, "'" + label + "' is not a group element");
  return it->second;
}

bool Group::contains(const std::string& label) const { return lookup_.count(label) != 0; }

Irrep::Irrep(std::string name, std::shared_ptr<const Group> group, std::size_t n,
             const std::map<std::string, CMatrix>& matrices)
    : name_(std::move(name)), group_(std::move(group)), n_(n) {
  if (!group_) throw Error(ErrorKind::InvalidArgument, "irrep '" + name_ + "' has no group");
  if (n_ == 0) throw Error(ErrorKind::DimensionMismatch, "irrep '" + name_ + "' has dimension 0");
  matrices_.resize(group_->order());
  std::vector<bool> seen(group_->order(), false);
  for (const auto& [label, m] : matrices) {
    const std::size_t g = group_->index(label);
    if (static_cast<std::size_t>(m.rows()) != n_ || static_cast<std::size_t>(m.cols()) != n_)
      throw Error(ErrorKind::DimensionMismatch, "irrep '" + name_ + "': D(" + label + ") is " +
                                                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                                    ", expected " + std::to_string(n_) + "x" +
                                                    std::to_string(n_));
    matrices_[g] = m;
    seen[g] = true;
  }
  for (std::size_t g = 0; g < seen.size(); ++g)
    if (!seen[g])
      throw Error(ErrorKind::InvalidArgument,
                  "irrep '" + name_ + "' has no matrix for '" + group_->label(g) + "'");
}

ValidationReport verify_irrep(const Irrep& irrep, double tolerance) {
  const Group& grp = irrep.group();
  const std::size_t order = grp.order();
  const auto n = static_cast<Eigen::Index>(irrep.dim());
  const CMatrix eye = CMatrix::Identity(n, n);

  ValidationReport report;
  report.tolerance = tolerance;
  double char_norm = 0.0;
  for (std::size_t g = 0; g < order; ++g) {
    const CMatrix& d = irrep.matrix(g);
    report.unitarity_residual = std::max(report.unitarity_residual, max_abs(d * d.adjoint() - eye));
    char_norm += std::norm(d.trace());
    for (std::size_t h = 0; h < order; ++h) {
      const double r = max_abs(d * irrep.matrix(h) - irrep.matrix(grp.mul(g, h)));
      report.homomorphism_residual = std::max(report.homomorphism_residual, r);
    }
  }
  report.irreducibility_indicator = char_norm / static_cast<double>(order);
  return report;
}

double orthogonality_residual(const Irrep& irrep) {
  const Group& grp = irrep.group();
  const std::size_t n = irrep.dim();
  const double scale = static_cast<double>(n) / static_cast<double>(grp.order());
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t m = 0; m < n; ++m) {
          Complex sum{0.0, 0.0};
          for (std::size_t g = 0; g < grp.order(); ++g)
            sum += irrep.matrix(grp.inverse(g))(k, j) * irrep.matrix(g)(l, m);
          const double delta = (j == l && k == m) ? 1.0 : 0.0;
          worst = std::max(worst, std::abs(scale * sum - delta));
        }
  return worst;
}

CMatrix resolution_identity(const Irrep& irrep, const std::string& gprime) {
  const Group& grp = irrep.group();
  const CMatrix& target = irrep.matrix(grp.index(gprime));
  const auto n = static_cast<Eigen::Index>(irrep.dim());
  CMatrix out = CMatrix::Zero(n, n);
  for (std::size_t g = 0; g < grp.order(); ++g)
    out += irrep.matrix(g) * (irrep.matrix(grp.inverse(g)) * target).trace();
  return out * (static_cast<double>(n) / static_cast<double>(grp.order()));
}

}  // namespace rbw

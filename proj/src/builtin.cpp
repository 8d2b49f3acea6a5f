#include "rbw/builtin.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace rbw::builtin {

namespace {

CMatrix scalar(double v) { return CMatrix::Constant(1, 1, Complex(v, 0.0)); }

using Perm = std::array<int, 3>;

std::string perm_label(const Perm& p) {
  return {static_cast<char>('1' + p[0]), static_cast<char>('1' + p[1]), static_cast<char>('1' + p[2])};
}

int parity(const Perm& p) {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

io::GroupDocument trivial_group() {
  io::GroupDocument doc;
  doc.group = std::make_shared<const Group>(Group::from_table({"e"}, {{{"e", "e"}, "e"}}));
  doc.irreps["trivial"] = std::make_shared<const Irrep>("trivial", doc.group, 1,
                                                        std::map<std::string, CMatrix>{{"e", scalar(1.0)}});
  return doc;
}

io::GroupDocument z2_group() {
  io::GroupDocument doc;
  const MultiplicationTable mul{{{"e", "e"}, "e"}, {{"e", "r"}, "r"}, {{"r", "e"}, "r"}, {{"r", "r"}, "e"}};
  doc.group = std::make_shared<const Group>(Group::from_table({"e", "r"}, mul));
  doc.irreps["trivial"] = std::make_shared<const Irrep>(
      "trivial", doc.group, 1, std::map<std::string, CMatrix>{{"e", scalar(1.0)}, {"r", scalar(1.0)}});
  doc.irreps["sign"] = std::make_shared<const Irrep>(
      "sign", doc.group, 1, std::map<std::string, CMatrix>{{"e", scalar(1.0)}, {"r", scalar(-1.0)}});
  return doc;
}

io::GroupDocument s3_group() {
  std::vector<Perm> perms;
  Perm p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::string> labels;
  for (const auto& q : perms) labels.push_back(perm_label(q));
  MultiplicationTable mul;
  for (const auto& g : perms)
    for (const auto& h : perms) {
      Perm gh{};
      for (int x = 0; x < 3; ++x) gh[x] = g[h[x]];
      mul[{perm_label(g), perm_label(h)}] = perm_label(gh);
    }

  io::GroupDocument doc;
  doc.group = std::make_shared<const Group>(Group::from_table(labels, mul));

  // Standard irrep: permutation matrices restricted to the plane orthogonal
  // to (1,1,1), in the orthonormal basis (1,-1,0)/√2, (1,1,-2)/√6.
  Eigen::Matrix<double, 3, 2> basis;
  basis << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(6.0),
          -1.0 / std::sqrt(2.0), 1.0 / std::sqrt(6.0),
           0.0,                 -2.0 / std::sqrt(6.0);

  std::map<std::string, CMatrix> trivial, sign, standard;
  for (const auto& g : perms) {
    Eigen::Matrix3d pm = Eigen::Matrix3d::Zero();
    for (int x = 0; x < 3; ++x) pm(g[x], x) = 1.0;
    const Eigen::Matrix2d d = basis.transpose() * pm * basis;
    const std::string l = perm_label(g);
    trivial[l] = scalar(1.0);
    sign[l] = scalar(parity(g));
    standard[l] = d.cast<Complex>();
  }
  doc.irreps["trivial"] = std::make_shared<const Irrep>("trivial", doc.group, 1, trivial);
  doc.irreps["sign"] = std::make_shared<const Irrep>("sign", doc.group, 1, sign);
  doc.irreps["standard"] = std::make_shared<const Irrep>("standard", doc.group, 2, standard);
  return doc;
}

}  // namespace rbw::builtin

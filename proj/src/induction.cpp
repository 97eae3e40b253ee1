#include "subfactor/induction.hpp"

#include "subfactor/errors.hpp"

namespace subfactor {

InducedRep induce(const ProjectiveRep& pi, const CosetSystem& system)
{
  if (!pi.is_ordinary())
    throw ValidationError("induce: only ordinary representations can be induced");
  if (system.subgroup().elements() != pi.domain().elements())
    throw ValidationError("induce: coset system belongs to another subgroup");

  const Subgroup whole = Subgroup::whole(pi.domain().parent());
  const FiniteGroup& g = whole.group();
  const Eigen::Index r = pi.dim();
  const Eigen::Index nc = system.size();
  std::vector<Matrix> mats;
  mats.reserve(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    Matrix m = Matrix::Zero(r * nc, r * nc);
    for (Eigen::Index j = 0; j < nc; ++j) {
      const Element gk = g.mul(x, system.reps()[j]);
      const Eigen::Index target = system.coset_of(gk);
      const Matrix& block = pi(system.h(gk));
      for (Eigen::Index a = 0; a < r; ++a)
        for (Eigen::Index b = 0; b < r; ++b)
          m(a * nc + target, b * nc + j) = block(a, b);
    }
    mats.push_back(std::move(m));
  }
  auto total = ProjectiveRep::trusted(whole, std::move(mats), Cocycle::trivial(whole));
  return {pi, system, std::move(total)};
}

ClassFunction frobenius_character(const ProjectiveRep& pi, const CosetSystem& system,
                                  const ClassesPtr& group_classes)
{
  if (!pi.is_ordinary())
    throw ValidationError("frobenius_character: only ordinary representations can be induced");
  if (system.subgroup().elements() != pi.domain().elements())
    throw ValidationError("frobenius_character: coset system belongs to another subgroup");
  const FiniteGroup& g = pi.domain().group();
  const Subgroup& h = system.subgroup();
  ClassFunction chi{group_classes, std::vector<Complex>(group_classes->size(), 0.0)};
  for (int c = 0; c < group_classes->size(); ++c) {
    const Element x = group_classes->representative(c);
    for (Element k : system.reps()) {
      const Element y = g.conj(g.inv(k), x);
      if (h.contains(y))
        chi.values[c] += pi(y).trace();
    }
  }
  return chi;
}

InducedRep build_sigma(const ProjectiveRep& psi)
{
  const ProjectiveRep product = tensor(psi.conjugate(), psi);
  if (!product.is_ordinary(1e-8))
    throw InconsistencyError("conj(psi) (x) psi has a nontrivial cocycle");
  auto ordinary = ProjectiveRep::trusted(product.domain(), product.matrices(),
                                         Cocycle::trivial(product.domain()));
  return induce(ordinary, CosetSystem(psi.domain()));
}

Subgroup kernel(const ProjectiveRep& pi, double tol)
{
  if (!pi.is_ordinary())
    throw ValidationError("kernel: representation has a nontrivial cocycle");
  const Matrix eye = Matrix::Identity(pi.dim(), pi.dim());
  std::vector<Element> keep;
  for (Element g : pi.domain().elements())
    if (max_abs(pi(g) - eye) < tol)
      keep.push_back(g);
  return Subgroup::from_elements(pi.domain().parent(), std::move(keep));
}

} // namespace subfactor

#include "crnf/fischer.hpp"

namespace crnf {

template class FischerDecomposer<ExactScalar>;
template ExactScalar fischer_inner(const BiPoly<ExactScalar>&, const BiPoly<ExactScalar>&);
template BiPoly<ExactScalar> adjoint_apply(const BiPoly<ExactScalar>&, const BiPoly<ExactScalar>&);
template FischerSplit<ExactScalar> fischer_decompose(const BiPoly<ExactScalar>&, const BiPoly<ExactScalar>&);
template ChainDecomposition<ExactScalar> iterated_chain(const BiPoly<ExactScalar>&, const BiPoly<ExactScalar>&, int);
template std::vector<ExactScalar> sN_residual(const BiPoly<ExactScalar>&, const BiPoly<ExactScalar>&, int);

}  // namespace crnf

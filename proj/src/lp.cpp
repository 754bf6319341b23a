#include "qtoric/lp.hpp"

namespace qtoric {

template BasicStrictFeasibility<BigRational> strict_feasibility(
    std::span<const BasicLinearEquality<BigRational>>, std::size_t, std::span<const std::size_t>);
template BasicStrictFeasibility<Sqrt2Number> strict_feasibility(
    std::span<const BasicLinearEquality<Sqrt2Number>>, std::size_t, std::span<const std::size_t>);

}  // namespace qtoric

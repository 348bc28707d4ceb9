#ifndef NPS_LINALG_HPP
#define NPS_LINALG_HPP

#include <vector>

#include "nps/field.hpp"

namespace nps {

using Row = std::vector<Coeff>;

/// Rank by fraction-free (Bareiss) elimination; exact over Q and F_p.
std::size_t matrix_rank(std::vector<Row> m, const Field& field);

/// One kernel vector of the column space (m * v = 0, v != 0), or empty if the
/// kernel is trivial. `kernel_dim_out` reports the kernel dimension.
Row kernel_vector(std::vector<Row> m, std::size_t cols, const Field& field,
                  std::size_t* kernel_dim_out = nullptr);

} // namespace nps

#endif

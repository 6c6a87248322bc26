#include "nfw/iterate.hpp"

#include <stdexcept>

namespace nfw {

IterateState make_iterate(const ProblemInstance& instance, const SparseVector& x0,
                          long long refresh_period) {
  if (refresh_period < 1) throw std::invalid_argument("refresh_period must be positive");
  IterateState st;
  st.x = to_dense(x0);
  st.image = instance.image_of(x0);
  st.k = 0;
  st.refresh_period = refresh_period;
  return st;
}

void update_iterate(const ProblemInstance& instance, IterateState& state, const SparseVector& s,
                    const DenseVector& s_image, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("step size must lie in [0, 1], got " + std::to_string(alpha));
  blend_into(state.x, s, alpha);
  const double keep = 1.0 - alpha;
  for (std::size_t i = 0; i < state.image.size(); ++i)
    state.image[i] = keep * state.image[i] + alpha * s_image[i];
  ++state.k;
  if (state.k % state.refresh_period == 0) state.image = instance.image_of(state.x);
}

}  // namespace nfw

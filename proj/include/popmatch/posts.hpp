#pragma once

#include <optional>
#include <vector>

#include "popmatch/instance.hpp"

namespace popmatch {

// f(a) is a's first choice; s(a) is a's best neighbour that is nobody's f-post.
// nullopt in `s` is the empty post; nullopt in `f` means a has no neighbours.
struct PostMap {
  std::vector<std::optional<std::size_t>> f;
  std::vector<std::optional<std::size_t>> s;
  std::vector<bool> is_f_post;  // indexed by B vertex
};

PostMap compute_posts(const Instance& inst);

}  // namespace popmatch

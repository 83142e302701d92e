#include "popmatch/posts.hpp"

namespace popmatch {

PostMap compute_posts(const Instance& inst) {
  PostMap posts;
  posts.f.assign(inst.a_count(), std::nullopt);
  posts.s.assign(inst.a_count(), std::nullopt);
  posts.is_f_post.assign(inst.b_count(), false);
  for (std::size_t a = 0; a < inst.a_count(); ++a) {
    const auto list = inst.prefs(a_vertex(a));
    if (list.empty()) continue;
    posts.f[a] = list.front();
    posts.is_f_post[list.front()] = true;
  }
  for (std::size_t a = 0; a < inst.a_count(); ++a) {
    for (std::size_t b : inst.prefs(a_vertex(a))) {
      if (!posts.is_f_post[b]) {
        posts.s[a] = b;
        break;
      }
    }
  }
  return posts;
}

}  // namespace popmatch

// Long-running catalog counts. Skipped (exit 77) unless IRRTRI_STRETCH is set.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>

#include "irrtri/enumeration.hpp"

using namespace irrtri;

namespace {

bool check(const char* surface, int cap, std::size_t expected) {
  const auto start = std::chrono::steady_clock::now();
  EnumSpec spec;
  spec.target = named_surface(surface);
  spec.max_vertices = cap;
  spec.irreducible_only = true;
  auto c = enumerate(spec, 4);
  std::map<int, int> by_size;
  for (const auto& e : c.entries) ++by_size[e.vertex_count];
  std::string sizes;
  for (auto [n, k] : by_size) sizes += " " + std::to_string(n) + ":" + std::to_string(k);
  const bool ok = c.complete && c.entries.size() == expected;
  std::printf("%s %s cap %d: %zu classes (expected %zu; by size%s), complete %s, %.0f s\n", ok ? "PASS" : "FAIL",
              surface, cap, c.entries.size(), expected, sizes.c_str(), c.complete ? "true" : "false",
              std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main() {
  if (!std::getenv("IRRTRI_STRETCH")) {
    std::printf("set IRRTRI_STRETCH=1 to run the torus and Klein bottle catalogs\n");
    return 77;
  }
  bool ok = check("torus", 10, 21);
  ok = check("klein", 11, 25) && ok;
  return ok ? 0 : 1;
}

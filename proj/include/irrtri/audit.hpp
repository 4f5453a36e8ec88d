#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "irrtri/surface.hpp"
#include "irrtri/triangulation.hpp"

namespace irrtri {

// Vertex bounds for irreducible triangulations of a surface with Euler genus
// g and b boundaries.
struct BoundTable {
  int g = 0;
  int b = 0;
  bool orientable = true;
  // 570g + 385b - 573, or 186 for the projective plane.
  std::int64_t thm1 = 0;
  bool projective_special = false;
  // 81g + 54b - 81, or 27 for the projective plane.
  std::int64_t prop1_matching = 0;
  // Closed surfaces (b = 0, g >= 1) only.
  std::optional<std::int64_t> thm2_f;
  // max{13g - 4, 4}; informational, b = 0 only.
  std::optional<std::int64_t> jw_reference;
};

// Throws Error(out_of_hypothesis) unless g >= 1 or b >= 2, Error(invalid_params)
// if no surface has these invariants.
BoundTable bound_table(int g, int b, bool orientable);

// f(1)=55, f(2)=194, f(3)=333, f(g)=163g-164 for g >= 4.
std::int64_t closed_surface_bound(int g);

enum class MatchPhase { boundary, extension };

struct MatchedEdge {
  Edge edge;
  MatchPhase phase = MatchPhase::boundary;
};

struct MatchingCertificate {
  // One vertex per odd boundary walk (its smallest id).
  std::vector<Vertex> w;
  std::vector<MatchedEdge> m;
  bool linking_free = true;
  bool maximal = true;

  int size_w() const { return static_cast<int>(w.size()); }
  int size_m() const { return static_cast<int>(m.size()); }
};

MatchingCertificate build_matching_certificate(const Triangulation& t);

// Every violated certificate invariant, as text; empty when the certificate is sound.
std::vector<std::string> certificate_violations(const Triangulation& t, const MatchingCertificate& cert);

enum class CheckStatus { pass, fail, skipped, undecided };

const char* to_string(CheckStatus status);

// Records "lhs <= rhs" with slack = rhs - lhs when the check is an inequality.
struct CheckRecord {
  std::string id;
  std::string title;
  CheckStatus status = CheckStatus::skipped;
  std::optional<std::int64_t> lhs;
  std::optional<std::int64_t> rhs;
  std::optional<std::int64_t> slack;
  // Pairs that could not be decided (homotopy family check only).
  int undecided = 0;
  std::vector<std::string> witnesses;
  std::string note;
};

struct AuditReport {
  SurfaceClass surface;
  int vertex_count = 0;
  int matching_size = 0;
  int w_size = 0;
  std::optional<std::int64_t> jw_reference;
  std::vector<CheckRecord> checks;

  bool passed() const;
  const CheckRecord* find(const std::string& id) const;
};

// Checks a..g on an irreducible triangulation. Throws Error(not_irreducible).
AuditReport audit(const Triangulation& t);

// Exact maximum matching size by branch and bound; |V| <= 60 else Error(too_large).
int max_matching_exact(const Triangulation& t);

// Exact 4-connectivity test (no separating set of at most 3 vertices).
bool is_four_connected(const Triangulation& t);

// Number of connected components of the 1-skeleton minus `removed`.
int components_without(const Triangulation& t, const std::vector<Vertex>& removed);

struct FourConnectivityReport {
  bool four_connected = false;
  std::vector<CheckRecord> checks;

  bool passed() const;
};

// Closed surfaces with g >= 1 and |V| <= 60 (Error(out_of_hypothesis) / Error(too_large)).
FourConnectivityReport check_4connectivity_bounds(const Triangulation& t, int sample_count, std::uint64_t seed);

}  // namespace irrtri

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "irrtri/audit.hpp"
#include "irrtri/contraction.hpp"
#include "irrtri/enumeration.hpp"
#include "irrtri/triangulation.hpp"

namespace irrtri {

// Parses a TriFile without checking the surface axioms. Throws ParseError.
Triangulation parse_tri(std::string_view text);

// parse_tri followed by validation (Error(invalid_triangulation)).
Triangulation read_tri(std::string_view text);

// "tri V F" then one sorted triple per line, triples in ascending order.
std::string write_tri(const Triangulation& t);

// One canonical form per line, in catalog order.
std::string write_catalog(const Catalog& c);
Catalog read_catalog(std::string_view text);

// JSON with a fixed key order; two-space indent, trailing newline.
std::string write_report(const AuditReport& r);
std::string write_report(const FourConnectivityReport& r);

// One line per contraction: "contract u v keep s (note)".
std::string write_trace(const ContractionTrace& trace);

}  // namespace irrtri

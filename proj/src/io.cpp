#include "irrtri/io.hpp"

#include <algorithm>
#include <charconv>
#include <json.hpp>

namespace irrtri {

namespace {

using Json = nlohmann::ordered_json;

struct Line {
  int number = 0;
  std::string_view text;
};

// Non-empty, non-comment lines with their 1-based positions.
std::vector<Line> content_lines(std::string_view text, int* last_line) {
  std::vector<Line> out;
  int number = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') throw ParseError(number, "CR line ending");
    const size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') out.push_back({number, line});
    pos = end + 1;
  }
  *last_line = number;
  return out;
}

std::vector<long long> integers(const Line& line) {
  std::vector<long long> out;
  size_t pos = 0;
  const auto& s = line.text;
  while (true) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    if (pos >= s.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
    if (ec != std::errc() || (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t')) {
      throw ParseError(line.number, "expected a decimal integer");
    }
    out.push_back(value);
    pos = static_cast<size_t>(ptr - s.data());
  }
  return out;
}

Json optional_int(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json check_json(const CheckRecord& c) {
  Json j;
  j["id"] = c.id;
  j["title"] = c.title;
  j["status"] = to_string(c.status);
  j["lhs"] = optional_int(c.lhs);
  j["rhs"] = optional_int(c.rhs);
  j["slack"] = optional_int(c.slack);
  j["undecided"] = c.undecided;
  j["witnesses"] = c.witnesses;
  j["note"] = c.note;
  return j;
}

}  // namespace

Triangulation parse_tri(std::string_view text) {
  int last_line = 0;
  const auto lines = content_lines(text, &last_line);
  if (lines.empty()) throw ParseError(std::max(last_line, 1), "missing header");
  const Line& header = lines.front();
  std::string_view h = header.text.substr(header.text.find_first_not_of(" \t"));
  if (!h.starts_with("tri") || (h.size() > 3 && h[3] != ' ' && h[3] != '\t')) {
    throw ParseError(header.number, "header must read 'tri <vertex_count> <triangle_count>'");
  }
  const auto counts = integers({header.number, h.substr(3)});
  if (counts.size() != 2 || counts[0] < 0 || counts[1] < 0 || counts[0] > 1000000 || counts[1] > 10000000) {
    throw ParseError(header.number, "header must read 'tri <vertex_count> <triangle_count>'");
  }
  const int n = static_cast<int>(counts[0]);
  const size_t f = static_cast<size_t>(counts[1]);
  if (lines.size() - 1 < f) throw ParseError(last_line, "expected " + std::to_string(f) + " triangles");
  if (lines.size() - 1 > f) throw ParseError(lines[f + 1].number, "more triangles than the header declares");
  std::vector<Triangle> tris;
  tris.reserve(f);
  for (size_t i = 1; i <= f; ++i) {
    const auto ids = integers(lines[i]);
    if (ids.size() != 3) throw ParseError(lines[i].number, "a triangle needs three vertex ids");
    for (long long id : ids) {
      if (id < 0 || id >= n) throw ParseError(lines[i].number, "vertex id " + std::to_string(id) + " out of range");
    }
    if (ids[0] == ids[1] || ids[0] == ids[2] || ids[1] == ids[2]) {
      throw ParseError(lines[i].number, "repeated vertex in triangle");
    }
    tris.push_back({static_cast<Vertex>(ids[0]), static_cast<Vertex>(ids[1]), static_cast<Vertex>(ids[2])});
  }
  return Triangulation::build(n, std::move(tris));
}

Triangulation read_tri(std::string_view text) {
  auto t = parse_tri(text);
  require_valid(t);
  return t;
}

std::string write_tri(const Triangulation& t) {
  std::string out = "tri " + std::to_string(t.vertex_count()) + " " + std::to_string(t.triangle_count()) + "\n";
  for (const Triangle& tri : t.triangles()) {
    out += std::to_string(tri[0]) + " " + std::to_string(tri[1]) + " " + std::to_string(tri[2]) + "\n";
  }
  return out;
}

std::string write_catalog(const Catalog& c) {
  std::string out;
  for (const auto& e : c.entries) out += e.form + "\n";
  return out;
}

Catalog read_catalog(std::string_view text) {
  int last_line = 0;
  Catalog c;
  for (const Line& line : content_lines(text, &last_line)) {
    std::string form(line.text);
    try {
      auto t = from_canonical_form(form);
      c.entries.push_back({form, t.vertex_count()});
    } catch (const Error& e) {
      throw ParseError(line.number, e.what());
    }
  }
  return c;
}

std::string write_report(const AuditReport& r) {
  Json j;
  j["surface"] = {{"orientable", r.surface.orientable},
                  {"euler_genus", r.surface.euler_genus},
                  {"boundary_count", r.surface.boundary_count},
                  {"euler_characteristic", r.surface.euler_characteristic}};
  j["vertex_count"] = r.vertex_count;
  j["matching_size"] = r.matching_size;
  j["w_size"] = r.w_size;
  j["jw_reference"] = optional_int(r.jw_reference);
  j["verdict"] = r.passed() ? "pass" : "fail";
  j["checks"] = Json::array();
  for (const auto& c : r.checks) j["checks"].push_back(check_json(c));
  return j.dump(2) + "\n";
}

std::string write_report(const FourConnectivityReport& r) {
  Json j;
  j["four_connected"] = r.four_connected;
  j["verdict"] = r.passed() ? "pass" : "fail";
  j["checks"] = Json::array();
  for (const auto& c : r.checks) j["checks"].push_back(check_json(c));
  return j.dump(2) + "\n";
}

std::string write_trace(const ContractionTrace& trace) {
  std::string out = "initial " + trace.initial_form + "\n";
  for (const auto& s : trace.steps) {
    out += "contract " + std::to_string(s.edge.u) + " " + std::to_string(s.edge.v) + " keep " +
           std::to_string(s.survivor) + " (" + s.note + ")\n";
  }
  out += "final " + trace.final_form + "\n";
  out += "contractions " + std::to_string(trace.steps.size()) + "\n";
  return out;
}

}  // namespace irrtri

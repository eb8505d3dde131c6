#include "gale/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gale/error.hpp"

namespace gale {

namespace {

bool is_space(char c)
{
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::pair<int, int> line_column(std::string_view text, std::size_t offset)
{
  int line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

Complex parse_facet_text(std::string_view text)
{
  std::vector<std::vector<std::string>> facets;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    ++line_no;

    std::vector<std::string> facet;
    std::size_t i = 0;
    while (i < line.size()) {
      if (is_space(line[i])) {
        ++i;
        continue;
      }
      if (facet.empty() && line[i] == '#')
        break;
      const std::size_t start = i;
      while (i < line.size() && !is_space(line[i]))
        ++i;
      std::string token(line.substr(start, i - start));
      if (!valid_vertex_name(token))
        throw InputError("malformed vertex name '" + token + "'", line_no, static_cast<int>(start) + 1);
      facet.push_back(std::move(token));
    }
    if (!facet.empty())
      facets.push_back(std::move(facet));
    if (end == text.size())
      break;
    pos = end + 1;
  }
  return make_complex(facets);
}

std::string format_facet_text(const Complex& x, const std::optional<std::string>& name)
{
  std::ostringstream os;
  if (name)
    os << "# " << *name << '\n';
  for (Mask f : x.facets()) {
    bool first = true;
    for (const auto& n : x.names_of(Face{f})) {
      os << (first ? "" : " ") << n;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const Complex& x, const std::optional<std::string>& name)
{
  nlohmann::json j = nlohmann::json::object();
  if (name)
    j["name"] = *name;
  j["vertices"] = x.vertex_names();
  nlohmann::json facets = nlohmann::json::array();
  for (Mask f : x.facets())
    facets.push_back(x.names_of(Face{f}));
  j["facets"] = std::move(facets);
  return j;
}

NamedComplex complex_from_json(const nlohmann::json& j)
{
  if (!j.is_object())
    throw InputError("complex must be a JSON object");
  NamedComplex out;
  if (j.contains("name") && !j["name"].is_null()) {
    if (!j["name"].is_string())
      throw InputError("\"name\" must be a string");
    out.name = j["name"].get<std::string>();
  }
  if (!j.contains("facets") || !j["facets"].is_array())
    throw InputError("\"facets\" must be an array of arrays of vertex names");

  std::vector<std::vector<std::string>> facets;
  for (const auto& f : j["facets"]) {
    if (!f.is_array())
      throw InputError("each facet must be an array of vertex names");
    std::vector<std::string> names;
    for (const auto& n : f) {
      if (!n.is_string())
        throw InputError("vertex names must be strings");
      names.push_back(n.get<std::string>());
    }
    facets.push_back(std::move(names));
  }

  if (!j.contains("vertices")) {
    out.complex = make_complex(facets);
    return out;
  }

  if (!j["vertices"].is_array())
    throw InputError("\"vertices\" must be an array of vertex names");
  std::vector<std::string> order;
  for (const auto& n : j["vertices"]) {
    if (!n.is_string() || !valid_vertex_name(n.get<std::string>()))
      throw InputError("malformed entry in \"vertices\"");
    if (std::find(order.begin(), order.end(), n.get<std::string>()) != order.end())
      throw InputError("duplicate vertex '" + n.get<std::string>() + "'");
    order.push_back(n.get<std::string>());
  }
  if (order.size() > static_cast<std::size_t>(kCapacity))
    throw CapacityError("more than " + std::to_string(kCapacity) + " vertices");

  // Build with the given order, then insist every listed vertex is used.
  FacetList masks;
  for (const auto& f : facets) {
    if (f.empty())
      throw InputError("empty facet");
    Mask m = 0;
    for (const auto& n : f) {
      auto it = std::find(order.begin(), order.end(), n);
      if (it == order.end())
        throw InputError("facet vertex '" + n + "' missing from \"vertices\"");
      m |= Mask{1} << (it - order.begin());
    }
    masks.push_back(m);
  }
  if (std::popcount(bits::support(masks)) != static_cast<int>(order.size()))
    throw InputError("\"vertices\" lists a vertex that lies in no facet");
  out.complex = Complex::from_masks(std::move(order), std::move(masks));
  return out;
}

NamedComplex parse_complex_json(std::string_view text)
{
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw InputError("invalid JSON", line, column);
  }
  return complex_from_json(j);
}

nlohmann::json face_to_json(const Complex& x, Face f)
{
  return x.names_of(f);
}

Face face_from_json(const Complex& x, const nlohmann::json& j)
{
  if (!j.is_array() || j.empty())
    throw InputError("a face must be a non-empty array of vertex names");
  std::vector<std::string> names;
  for (const auto& n : j) {
    if (!n.is_string())
      throw InputError("vertex names must be strings");
    names.push_back(n.get<std::string>());
  }
  return x.face(names);
}

NamedComplex read_complex_file(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  auto first = std::find_if(text.begin(), text.end(), [](char c) { return !is_space(c) && c != '\n'; });
  if (first != text.end() && *first == '{')
    return parse_complex_json(text);
  return NamedComplex{std::nullopt, parse_facet_text(text)};
}

}  // namespace gale

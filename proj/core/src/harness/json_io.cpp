#include "modlat/harness/json_io.hpp"

#include <fstream>
#include <sstream>

#include "modlat/error.hpp"

namespace modlat::harness {

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return std::to_string(line) + ":" + std::to_string(column);
}

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw InvalidInput((where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t natural(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::string kind_of(const Json& j, const std::string& where) {
  const Json& k = field(j, "kind", where);
  if (!k.is_string()) bad(where + "/kind", "expected a string");
  return k.get<std::string>();
}

std::vector<std::vector<Index>> table(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of rows");
  std::vector<std::vector<Index>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string row_where = where + "/" + std::to_string(i);
    if (!j[i].is_array()) bad(row_where, "expected an array");
    std::vector<Index> row;
    for (std::size_t c = 0; c < j[i].size(); ++c)
      row.push_back(static_cast<Index>(natural(j[i][c], row_where + "/" + std::to_string(c))));
    out.push_back(std::move(row));
  }
  return out;
}

RingSpec ring_at(const Json& j, const std::string& where) {
  const std::string kind = kind_of(j, where);
  if (kind == "cyclic") {
    const std::size_t n = natural(field(j, "n", where), where + "/n");
    if (n == 0) bad(where + "/n", "must be at least 1");
    return RingSpec::cyclic(n);
  }
  if (kind == "matrix" || kind == "triangular") {
    RingSpec base = ring_at(field(j, "base", where), where + "/base");
    const std::size_t size = natural(field(j, "size", where), where + "/size");
    if (size == 0) bad(where + "/size", "must be at least 1");
    return kind == "matrix" ? RingSpec::matrix(std::move(base), size) : RingSpec::triangular(std::move(base), size);
  }
  if (kind == "product") {
    const Json& f = field(j, "factors", where);
    if (!f.is_array() || f.empty()) bad(where + "/factors", "expected a non-empty array");
    std::vector<RingSpec> factors;
    for (std::size_t i = 0; i < f.size(); ++i) factors.push_back(ring_at(f[i], where + "/factors/" + std::to_string(i)));
    return RingSpec::product(std::move(factors));
  }
  if (kind == "tables") {
    RingSpec::Tables t;
    t.add = table(field(j, "add", where), where + "/add");
    t.mul = table(field(j, "mul", where), where + "/mul");
    t.one = static_cast<Index>(natural(field(j, "one", where), where + "/one"));
    return {std::move(t)};
  }
  bad(where + "/kind", "unknown ring kind \"" + kind + "\"");
}

Side side_at(const Json& j, const std::string& where) {
  if (!j.contains("side")) return Side::left;
  const Json& s = j["side"];
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  bad(where + "/side", "expected \"left\" or \"right\"");
}

ModuleSpec module_at(const Json& j, const std::string& where) {
  const std::string kind = kind_of(j, where);
  if (kind == "regular") return ModuleSpec::regular(side_at(j, where));
  if (kind == "quotient") {
    ModuleSpec of = module_at(field(j, "of", where), where + "/of");
    const Json& by = field(j, "by", where);
    if (!by.is_array()) bad(where + "/by", "expected an array of element indices");
    std::vector<Index> gens;
    for (std::size_t i = 0; i < by.size(); ++i)
      gens.push_back(static_cast<Index>(natural(by[i], where + "/by/" + std::to_string(i))));
    return ModuleSpec::quotient(std::move(of), std::move(gens));
  }
  if (kind == "direct_sum") {
    const Json& p = field(j, "parts", where);
    if (!p.is_array()) bad(where + "/parts", "expected an array");
    ModuleSpec::DirectSumOf d;
    for (std::size_t i = 0; i < p.size(); ++i) d.parts.push_back(module_at(p[i], where + "/parts/" + std::to_string(i)));
    if (j.contains("side")) d.side = side_at(j, where);
    return {std::move(d)};
  }
  bad(where + "/kind", "unknown module kind \"" + kind + "\"");
}

}  // namespace

Json parse_json(std::string_view text, const std::string& origin) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::string msg = e.what();
    if (auto pos = msg.find("parse error"); pos != std::string::npos) msg = msg.substr(pos);
    throw InvalidInput(origin + ":" + line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + msg);
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput(path.string() + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path.string());
}

RingSpec ring_spec_from_json(const Json& j) { return ring_at(j, ""); }

ModuleSpec module_spec_from_json(const Json& j) { return module_at(j, ""); }

Json to_json(const RingSpec& spec) {
  return std::visit(
      [](const auto& k) -> Json {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, RingSpec::Cyclic>) {
          return {{"kind", "cyclic"}, {"n", k.n}};
        } else if constexpr (std::is_same_v<K, RingSpec::Matrix>) {
          return {{"kind", "matrix"}, {"base", to_json(*k.base)}, {"size", k.size}};
        } else if constexpr (std::is_same_v<K, RingSpec::Triangular>) {
          return {{"kind", "triangular"}, {"base", to_json(*k.base)}, {"size", k.size}};
        } else if constexpr (std::is_same_v<K, RingSpec::Product>) {
          Json f = Json::array();
          for (const auto& x : k.factors) f.push_back(to_json(x));
          return {{"kind", "product"}, {"factors", f}};
        } else {
          return {{"kind", "tables"}, {"add", k.add}, {"mul", k.mul}, {"one", k.one}};
        }
      },
      spec.kind);
}

Json to_json(const ModuleSpec& spec) {
  return std::visit(
      [](const auto& k) -> Json {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ModuleSpec::Regular>) {
          return {{"kind", "regular"}, {"side", to_string(k.side)}};
        } else if constexpr (std::is_same_v<K, ModuleSpec::QuotientOf>) {
          return {{"kind", "quotient"}, {"of", to_json(*k.of)}, {"by", k.by}};
        } else {
          Json parts = Json::array();
          for (const auto& p : k.parts) parts.push_back(to_json(p));
          Json out = {{"kind", "direct_sum"}, {"parts", parts}};
          if (k.side) out["side"] = to_string(*k.side);
          return out;
        }
      },
      spec.kind);
}

Json to_json(const Submodule& n) { return n.members().members(); }

std::string members_string(const Submodule& n) {
  std::string s = "{";
  bool first = true;
  n.members().for_each([&](Index i) {
    s += (first ? "" : ",") + std::to_string(i);
    first = false;
  });
  return s + "}";
}

Json to_json(const DimensionProfile& p) {
  return {{"radical", to_json(p.radical)}, {"socle", to_json(p.socle)}, {"length", p.length},
          {"udim", p.udim},                {"hdim", p.hdim},             {"semisimple", p.semisimple},
          {"hollow", p.hollow},            {"uniform", p.uniform}};
}

Json to_json(const RingProfile& p) {
  return {{"jacobson", to_json(p.jacobson)},
          {"hdim_left", p.hdim_left},
          {"hdim_right", p.hdim_right},
          {"semisimple_quotient_length", p.semisimple_quotient_length},
          {"units", p.units.members()},
          {"local", p.local},
          {"vnr_quotient", p.vnr_quotient}};
}

}  // namespace modlat::harness

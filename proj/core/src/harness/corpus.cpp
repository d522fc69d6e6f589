#include "modlat/harness/corpus.hpp"

#include <algorithm>
#include <set>

#include "modlat/error.hpp"
#include "modlat/lattice.hpp"
#include "modlat/supplements.hpp"

namespace modlat::harness {

namespace {

template <class T>
void read_opt(const Json& j, const char* key, std::optional<T>& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

template <class T>
void write_opt(Json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

std::string ring_id(const RingSpec& spec) { return describe(spec); }

}  // namespace

std::vector<ModuleEntry> default_modules(const RingSpec& spec) {
  const RingPtr ring = ring_from_spec(spec);
  const ModulePtr reg = regular_module(ring, Side::left);
  const auto lat = SubmoduleLattice::build(reg);

  std::vector<ModuleEntry> out;
  out.push_back({"R", ModuleSpec::regular(Side::left), {}});
  out.push_back({"R_R", ModuleSpec::regular(Side::right), {}});

  struct Part {
    ModuleSpec spec;
    std::size_t order;
  };
  std::vector<Part> parts;
  for (std::size_t i = 1; i < lat.size(); ++i) {
    const Submodule& ideal = lat.node(i);
    const SubmoduleView view = submodule_module(reg, ideal);
    std::vector<Index> gens;
    for (Index g : greedy_generators(*view.module)) gens.push_back(view.inclusion(g));
    ModuleSpec q = ModuleSpec::quotient(ModuleSpec::regular(Side::left), gens);
    out.push_back({describe(q), q, {}});
    const std::size_t order = reg->order() / ideal.size();
    if (order > 1) parts.push_back({q, order});
  }
  parts.push_back({ModuleSpec::regular(Side::left), reg->order()});
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a; b < parts.size(); ++b) {
      if (parts[a].order * parts[b].order > kMaxPairOrder) continue;
      ModuleSpec s = ModuleSpec::direct_sum({parts[a].spec, parts[b].spec});
      out.push_back({describe(s), s, {}});
    }
  return out;
}

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](RingSpec spec, RingGoldens g, std::vector<std::string> tags) {
    CorpusEntry e{ring_id(spec), spec, default_modules(spec), g, std::move(tags)};
    out.push_back(std::move(e));
  };
  auto golden = [&](const std::string& ring, const std::string& module, ModuleGoldens g) {
    for (auto& e : out)
      if (e.id == ring)
        for (auto& m : e.modules)
          if (m.id == module) {
            m.expect = g;
            return;
          }
    throw InternalInconsistency("builtin_corpus: no module " + ring + " | " + module);
  };

  // Ring goldens: units and |J| by hand, hdim = length(R/J).
  add(RingSpec::cyclic(1), {0, 0, 1, 1, false}, {"commutative", "degenerate"});
  add(RingSpec::cyclic(2), {1, 1, 1, 1, true}, {"commutative", "field"});
  add(RingSpec::cyclic(3), {1, 1, 1, 2, true}, {"commutative", "field"});
  add(RingSpec::cyclic(4), {1, 1, 2, 2, true}, {"commutative", "local"});
  add(RingSpec::cyclic(6), {2, 2, 1, 2, false}, {"commutative", "semisimple"});
  add(RingSpec::cyclic(8), {1, 1, 4, 4, true}, {"commutative", "local", "uniserial"});
  add(RingSpec::cyclic(9), {1, 1, 3, 6, true}, {"commutative", "local", "uniserial"});
  add(RingSpec::cyclic(12), {2, 2, 2, 4, false}, {"commutative"});
  add(RingSpec::matrix(RingSpec::cyclic(2), 2), {2, 2, 1, 6, false}, {"noncommutative", "simple-artinian"});
  add(RingSpec::triangular(RingSpec::cyclic(2), 2), {2, 2, 2, 2, false}, {"noncommutative"});
  add(RingSpec::triangular(RingSpec::cyclic(3), 2), {2, 2, 3, 12, false}, {"noncommutative"});
  add(RingSpec::product({RingSpec::cyclic(2), RingSpec::cyclic(3)}), {2, 2, 1, 2, false},
      {"commutative", "semisimple"});

  // Module goldens: hdim = length(M/Rad M), udim = length(Soc M).
  golden("Z/12", "R", {2, 2, 3, true});
  golden("Z/12", "R/(4)", {1, 1, 2, true});  // Z/4
  golden("Z/12", "R/(6)", {2, 2, 2, true});  // Z/6
  golden("Z/8", "R", {1, 1, 3, true});
  golden("Z/4", "R/(2)+R", {2, 2, 3, false});  // Z/2 ⊕ Z/4
  golden("Z/1", "R", {0, 0, 0, true});
  golden("M2(Z/2)", "R", {2, 2, 2, true});
  golden("T2(Z/2)", "R", {2, std::nullopt, 3, true});
  return out;
}

CorpusEntry corpus_entry_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("corpus entry: expected an object");
  CorpusEntry e;
  if (!j.contains("ring")) throw InvalidInput("corpus entry: missing \"ring\"");
  e.ring = ring_spec_from_json(j.at("ring"));
  e.id = j.value("id", ring_id(e.ring));
  if (j.contains("modules")) {
    std::set<std::string> seen;
    for (const Json& m : j.at("modules")) {
      if (!m.contains("spec")) throw InvalidInput("corpus entry " + e.id + ": module without \"spec\"");
      ModuleEntry me;
      me.spec = module_spec_from_json(m.at("spec"));
      me.id = m.value("id", describe(me.spec));
      if (!seen.insert(me.id).second) throw InvalidInput("corpus entry " + e.id + ": duplicate module id " + me.id);
      if (m.contains("expect")) {
        const Json& x = m.at("expect");
        read_opt(x, "hdim", me.expect.hdim);
        read_opt(x, "udim", me.expect.udim);
        read_opt(x, "length", me.expect.length);
        read_opt(x, "self_projective", me.expect.self_projective);
      }
      e.modules.push_back(std::move(me));
    }
  } else {
    e.modules = default_modules(e.ring);
  }
  if (j.contains("expect")) {
    const Json& x = j.at("expect");
    read_opt(x, "hdim_left", e.expect.hdim_left);
    read_opt(x, "hdim_right", e.expect.hdim_right);
    read_opt(x, "jacobson_size", e.expect.jacobson_size);
    read_opt(x, "units", e.expect.units);
    read_opt(x, "local", e.expect.local);
  }
  if (j.contains("tags")) e.tags = j.at("tags").get<std::vector<std::string>>();
  return e;
}

Json to_json(const CorpusEntry& e) {
  Json modules = Json::array();
  for (const auto& m : e.modules) {
    Json x = Json::object();
    write_opt(x, "hdim", m.expect.hdim);
    write_opt(x, "udim", m.expect.udim);
    write_opt(x, "length", m.expect.length);
    write_opt(x, "self_projective", m.expect.self_projective);
    modules.push_back({{"id", m.id}, {"spec", to_json(m.spec)}, {"expect", x}});
  }
  Json x = Json::object();
  write_opt(x, "hdim_left", e.expect.hdim_left);
  write_opt(x, "hdim_right", e.expect.hdim_right);
  write_opt(x, "jacobson_size", e.expect.jacobson_size);
  write_opt(x, "units", e.expect.units);
  write_opt(x, "local", e.expect.local);
  return {{"id", e.id}, {"ring", to_json(e.ring)}, {"modules", modules}, {"expect", x}, {"tags", e.tags}};
}

std::vector<CorpusEntry> load_corpus_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw InvalidInput(dir.string() + ": not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& f : std::filesystem::directory_iterator(dir))
    if (f.is_regular_file() && f.path().extension() == ".json") files.push_back(f.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  std::set<std::string> seen;
  for (const auto& f : files) {
    try {
      out.push_back(corpus_entry_from_json(read_json_file(f)));
    } catch (const InvalidInput& e) {
      throw InvalidInput(f.string() + ": " + e.what());
    } catch (const Json::exception& e) {
      throw InvalidInput(f.string() + ": " + e.what());
    }
    if (!seen.insert(out.back().id).second) throw InvalidInput(f.string() + ": duplicate corpus id " + out.back().id);
  }
  return out;
}

}  // namespace modlat::harness

#include "modlat/harness/analyze.hpp"

#include <sstream>

#include "modlat/dimension.hpp"
#include "modlat/lattice.hpp"
#include "modlat/ringclass.hpp"
#include "modlat/supplements.hpp"

namespace modlat::harness {

namespace {

Json sets_json(const std::vector<Submodule>& family) {
  Json out = Json::array();
  for (const auto& n : family) out.push_back(to_json(n));
  return out;
}

std::string set_text(const Json& members) {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) s += (i ? "," : "") + std::to_string(members[i].get<Index>());
  return s + "}";
}

std::string family_text(const Json& family) {
  std::string s = "[";
  for (std::size_t i = 0; i < family.size(); ++i) s += (i ? " " : "") + set_text(family[i]);
  return s + "]";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Json analyze(const RingSpec& ring_spec, const std::optional<ModuleSpec>& module_spec) {
  const RingPtr ring = ring_from_spec(ring_spec);
  const RingProfile rp = classify(ring);
  const SemiregularReport sr = is_semiregular_by_weak_supplements(ring);

  const ModuleSpec ms = module_spec.value_or(ModuleSpec::regular(Side::left));
  const ModulePtr m = module_from_spec(ring, ms);
  const auto lat = SubmoduleLattice::build(m);
  const DimensionProfile dp = dimension_profile(lat);
  const HollowDimension hd = hollow_dimension(lat);
  const UniformDimension ud = uniform_dimension(lat);

  Json ring_json = to_json(rp);
  ring_json["name"] = describe(ring_spec);
  ring_json["order"] = ring->order();
  ring_json["spec"] = to_json(ring_spec);
  ring_json["semiregular"] = sr.left_principal_weak_supplements && sr.right_principal_weak_supplements;

  Json mod = to_json(dp);
  mod["name"] = describe(ms);
  mod["side"] = to_string(m->side());
  mod["order"] = m->order();
  mod["spec"] = to_json(ms);
  mod["submodules"] = lat.size();
  mod["semilocal"] = is_semilocal_module(lat);
  mod["witnesses"] = {
      {"coindependent_family", sets_json(hd.decomposition.family)},
      {"family_intersection", to_json(hd.decomposition.intersection)},
      {"independent_simples", sets_json(ud.witness)},
      {"radical_complement", to_json(complement_of(lat, dp.radical))},
  };
  return {{"ring", ring_json}, {"module", mod}};
}

std::string render_text(const Json& a) {
  std::ostringstream os;
  const Json& r = a.at("ring");
  os << "ring " << r.at("name").get<std::string>() << "\n";
  os << "  order " << r.at("order").get<std::size_t>() << "\n";
  os << "  units " << r.at("units").size() << "\n";
  os << "  Jac " << set_text(r.at("jacobson")) << "\n";
  os << "  hdim left " << r.at("hdim_left").get<std::size_t>() << "\n";
  os << "  hdim right " << r.at("hdim_right").get<std::size_t>() << "\n";
  os << "  length(R/J) " << r.at("semisimple_quotient_length").get<std::size_t>() << "\n";
  os << "  local " << yes_no(r.at("local").get<bool>()) << "\n";
  os << "  R/J regular " << yes_no(r.at("vnr_quotient").get<bool>()) << "\n";
  os << "  semiregular " << yes_no(r.at("semiregular").get<bool>()) << "\n";

  const Json& m = a.at("module");
  os << "module " << m.at("name").get<std::string>() << " (" << m.at("side").get<std::string>() << ")\n";
  os << "  order " << m.at("order").get<std::size_t>() << "\n";
  os << "  submodules " << m.at("submodules").get<std::size_t>() << "\n";
  os << "  Rad " << set_text(m.at("radical")) << "\n";
  os << "  Soc " << set_text(m.at("socle")) << "\n";
  os << "  length " << m.at("length").get<std::size_t>() << "\n";
  os << "  hdim " << m.at("hdim").get<std::size_t>() << "\n";
  os << "  udim " << m.at("udim").get<std::size_t>() << "\n";
  os << "  semisimple " << yes_no(m.at("semisimple").get<bool>()) << "\n";
  os << "  semilocal " << yes_no(m.at("semilocal").get<bool>()) << "\n";
  os << "  hollow " << yes_no(m.at("hollow").get<bool>()) << "\n";
  os << "  uniform " << yes_no(m.at("uniform").get<bool>()) << "\n";
  const Json& w = m.at("witnesses");
  os << "  coindependent family " << family_text(w.at("coindependent_family")) << "\n";
  os << "  independent simples " << family_text(w.at("independent_simples")) << "\n";
  os << "  complement of Rad " << set_text(w.at("radical_complement")) << "\n";
  return os.str();
}

}  // namespace modlat::harness

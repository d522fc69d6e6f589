#include "modlat/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <mutex>
#include <sstream>

#include "modlat/error.hpp"

namespace modlat {

namespace {

std::size_t parse_number(std::string_view key, std::string_view v) {
  std::size_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || out == 0)
    throw InvalidInput("caps: bad value for '" + std::string(key) + "': '" + std::string(v) + "'");
  return out;
}

struct CapsHolder {
  std::mutex mu;
  bool init = false;
  Caps value;
};

CapsHolder& holder() {
  static CapsHolder h;
  return h;
}

}  // namespace

Caps Caps::parse(std::string_view text, Caps base) {
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw InvalidInput("caps: expected key=value, got '" + std::string(item) + "'");
    auto key = item.substr(0, eq);
    auto val = item.substr(eq + 1);
    if (key == "elements") base.elements = parse_number(key, val);
    else if (key == "lattice") base.lattice = parse_number(key, val);
    else if (key == "homs") base.homs = parse_number(key, val);
    else throw InvalidInput("caps: unknown key '" + std::string(key) + "'");
  }
  return base;
}

Caps Caps::parse(std::string_view text) { return parse(text, Caps{}); }

std::string Caps::to_string() const {
  std::ostringstream os;
  os << "elements=" << elements << ",lattice=" << lattice << ",homs=" << homs;
  return os.str();
}

const Caps& caps() {
  auto& h = holder();
  std::lock_guard lock(h.mu);
  if (!h.init) {
    h.init = true;
    if (const char* env = std::getenv("MODLAT_CAPS")) h.value = Caps::parse(env);
  }
  return h.value;
}

void set_caps(const Caps& c) {
  auto& h = holder();
  std::lock_guard lock(h.mu);
  h.init = true;
  h.value = c;
}

}  // namespace modlat

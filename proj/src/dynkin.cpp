#include "orbicalc/dynkin.hpp"

#include <algorithm>
#include <sstream>

namespace orbicalc {

void DynkinConfiguration::add(AdeType type, unsigned rank) {
  switch (type) {
    case AdeType::A:
      if (rank < 1) throw Error("A-component rank must be >= 1");
      break;
    case AdeType::D:
      if (rank < 4) throw Error("D-component rank must be >= 4");
      break;
    case AdeType::E:
      if (rank < 6 || rank > 8) throw Error("E-component rank must be 6, 7 or 8");
      break;
  }
  components.push_back({type, rank});
}

unsigned DynkinConfiguration::total_rank() const {
  unsigned r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

std::string DynkinConfiguration::to_string() const {
  if (components.empty()) return "(empty)";
  auto sorted = components;
  std::sort(sorted.begin(), sorted.end(), [](const AdeComponent& a, const AdeComponent& b) {
    return std::pair(static_cast<int>(a.type), a.rank) <
           std::pair(static_cast<int>(b.type), b.rank);
  });
  std::ostringstream os;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) os << " + ";
    os << "ADE"[static_cast<int>(sorted[i].type)] << sorted[i].rank;
  }
  return os.str();
}

DynkinConfiguration parse_dynkin(const std::string& text) {
  DynkinConfiguration config;
  std::istringstream is(text);
  std::string term;
  while (std::getline(is, term, '+')) {
    // trim
    auto b = term.find_first_not_of(" \t");
    auto e = term.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    term = term.substr(b, e - b + 1);
    std::size_t pos = 0;
    unsigned repeat = 1;
    if (std::isdigit(static_cast<unsigned char>(term[pos]))) {
      repeat = 0;
      while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos])))
        repeat = repeat * 10 + (term[pos++] - '0');
    }
    if (pos >= term.size()) throw Error("bad Dynkin term: " + term);
    AdeType type;
    switch (term[pos]) {
      case 'A': type = AdeType::A; break;
      case 'D': type = AdeType::D; break;
      case 'E': type = AdeType::E; break;
      default: throw Error("bad Dynkin type in term: " + term);
    }
    ++pos;
    unsigned rank = 0;
    if (pos >= term.size()) throw Error("missing rank in Dynkin term: " + term);
    while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos])))
      rank = rank * 10 + (term[pos++] - '0');
    if (pos != term.size()) throw Error("trailing junk in Dynkin term: " + term);
    for (unsigned i = 0; i < repeat; ++i) config.add(type, rank);
  }
  return config;
}

Int eu(const DynkinConfiguration& config) {
  Int total = 0;
  for (const auto& c : config.components) {
    switch (c.type) {
      case AdeType::A: total += c.rank + 1; break;
      case AdeType::D: total += c.rank + 2; break;
      case AdeType::E: total += c.rank + 2; break;
    }
  }
  return total;
}

bool check_z1(const std::vector<FiberData>& fibers) {
  std::size_t full = 0;
  for (const auto& f : fibers) {
    bool all_in = true;
    for (const auto& c : f.components)
      if (c.multiplicity == 1 && !c.in_gamma) all_in = false;
    if (all_in) ++full;
  }
  return full <= 1;
}

bool check_z2(const DynkinConfiguration& config) { return eu(config) <= 23; }

bool check_rank_bound(const DynkinConfiguration& config, unsigned ambient_rank) {
  return ambient_rank >= 2 && config.total_rank() <= ambient_rank - 2;
}

}  // namespace orbicalc

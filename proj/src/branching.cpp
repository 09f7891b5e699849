#include "weylbraid/branching.hpp"

#include <sstream>

#include "weylbraid/errors.hpp"

namespace weylbraid::hurwitz {

namespace {

bool is_simply_laced(const rootsys::ComponentSpec& c) {
  switch (c.family) {
    case rootsys::Family::B:
    case rootsys::Family::C:
    case rootsys::Family::F:
    case rootsys::Family::G:
      return false;
    default:
      return true;
  }
}

int parse_count(std::string_view text) {
  if (text.empty()) throw validation_error("missing count in branching data");
  int v = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw validation_error("bad count in branching data");
    v = v * 10 + (ch - '0');
    if (v > 1000000) throw validation_error("branching count out of range");
  }
  return v;
}

} // namespace

int BranchingData::total() const {
  int n = 0;
  for (const auto& c : per_component) n += c.total();
  return n;
}

std::string BranchingData::to_string(const rootsys::RootSystemSpec& spec) const {
  if (per_component.size() != spec.components().size())
    throw validation_error("branching data does not match the spec's component count");
  std::ostringstream os;
  bool multi = per_component.size() > 1;
  for (std::size_t i = 0; i < per_component.size(); ++i) {
    if (i) os << ';';
    const auto& cs = spec.components()[i];
    if (multi) os << rootsys::family_letter(cs.family) << cs.rank << ':';
    const auto& b = per_component[i];
    if (b.split)
      os << "ns=" << b.n_short << ",nl=" << b.n_long;
    else
      os << "n=" << b.n_short;
  }
  return os.str();
}

BranchingData BranchingData::parse(const rootsys::RootSystemSpec& spec, std::string_view text) {
  std::vector<std::string_view> items;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(';', pos);
    items.push_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos
                                                                    : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (items.size() != spec.components().size())
    throw validation_error("branching data lists " + std::to_string(items.size()) +
                           " components but the spec has " +
                           std::to_string(spec.components().size()));

  BranchingData out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::string_view item = items[i];
    const auto& cs = spec.components()[i];
    if (auto colon = item.find(':'); colon != std::string_view::npos) {
      std::string_view prefix = item.substr(0, colon);
      std::ostringstream want;
      want << rootsys::family_letter(cs.family) << cs.rank;
      if (prefix != want.str())
        throw validation_error("branching component '" + std::string(prefix) +
                               "' does not match spec component " + want.str() +
                               " at position " + std::to_string(i + 1));
      item = item.substr(colon + 1);
    }
    ComponentBranching b;
    b.split = !is_simply_laced(cs);
    if (!b.split) {
      if (item.substr(0, 2) != "n=")
        throw validation_error("expected 'n=<count>' for simply laced component");
      b.n_short = parse_count(item.substr(2));
    } else {
      auto comma = item.find(',');
      if (item.substr(0, 3) != "ns=" || comma == std::string_view::npos ||
          item.substr(comma + 1, 3) != "nl=")
        throw validation_error("expected 'ns=<count>,nl=<count>' for non-simply-laced component");
      b.n_short = parse_count(item.substr(3, comma - 3));
      b.n_long = parse_count(item.substr(comma + 4));
    }
    if (b.n_short % 2 || b.n_long % 2)
      throw validation_error("branching counts must be even");
    out.per_component.push_back(b);
  }
  return out;
}

} // namespace weylbraid::hurwitz

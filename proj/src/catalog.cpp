#include "kcover/catalog.hpp"

#include <fstream>
#include <stdexcept>

namespace kcover {

GroupCatalog GroupCatalog::builtin() {
  GroupCatalog c;
  c.add("A5", {5, {"(1,2)(3,4)", "(1,2,3,4,5)"}});
  c.add("A6", {6, {"(1,2,3)", "(2,3,4,5,6)"}});
  c.add("A7", {7, {"(1,2,3)", "(1,2,3,4,5,6,7)"}});
  c.add("A8", {8, {"(1,2,3)", "(2,3,4,5,6,7,8)"}});
  c.add("A9", {9, {"(1,2,3)", "(1,2,3,4,5,6,7,8,9)"}});
  c.add("A11", {11, {"(1,2)(3,6)", "(1,2,3,4,5,6,7,8,9,10,11)"}});
  c.add("A13", {13, {"(1,2,3)", "(1,2,3,4,5,6,7,8,9,10,11,12,13)"}});
  // PSL(2,7) on the projective line: z -> z+1 and z -> -1/z, with 0..6 as
  // points 1..7 and infinity as 8.
  c.add("PSL27", {8, {"(1,2,3,4,5,6,7)", "(1,8)(2,7)(3,4)(5,6)"}});
  return c;
}

GroupCatalog GroupCatalog::from_json(nlohmann::json const &doc) {
  if (!doc.is_object()) throw std::invalid_argument("group catalog must be a JSON object");
  GroupCatalog c;
  for (auto const &[name, value] : doc.items()) {
    GroupEntry e;
    e.degree = value.at("degree").get<std::size_t>();
    e.generators = value.at("generators").get<std::vector<std::string>>();
    c.add(name, std::move(e));
  }
  return c;
}

GroupCatalog GroupCatalog::from_file(std::string const &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group catalog " + path);
  return from_json(nlohmann::json::parse(in));
}

void GroupCatalog::merge(GroupCatalog const &other) {
  for (auto const &[name, e] : other.entries_) entries_[name] = e;
}

GroupEntry const &GroupCatalog::entry(std::string const &name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw std::invalid_argument("unknown group '" + name + "'");
  return it->second;
}

GroupHandle GroupCatalog::group(std::string const &name) const { return make_group(entry(name), name); }

std::vector<std::string> GroupCatalog::names() const {
  std::vector<std::string> out;
  for (auto const &[name, e] : entries_) out.push_back(name);
  return out;
}

nlohmann::json GroupCatalog::to_json() const {
  nlohmann::json doc = nlohmann::json::object();
  for (auto const &[name, e] : entries_)
    doc[name] = {{"degree", e.degree}, {"generators", e.generators}};
  return doc;
}

GroupHandle make_group(GroupEntry const &entry, std::string name) {
  std::vector<Permutation> gens;
  for (auto const &g : entry.generators) gens.push_back(parse_cycles(g, entry.degree));
  return GroupHandle(std::move(gens), entry.degree, std::move(name));
}

}  // namespace kcover

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "kcover/group.hpp"

namespace kcover {

struct GroupEntry {
  std::size_t degree = 0;
  std::vector<std::string> generators;  // cycle notation
};

/// Named permutation groups. The JSON form is
///   {"A5": {"degree": 5, "generators": ["(1,2,3)", "(1,2,3,4,5)"]}, ...}
class GroupCatalog {
 public:
  static GroupCatalog builtin();
  static GroupCatalog from_json(nlohmann::json const &doc);
  static GroupCatalog from_file(std::string const &path);

  /// Later entries with the same name replace earlier ones.
  void merge(GroupCatalog const &other);
  void add(std::string name, GroupEntry entry) { entries_[std::move(name)] = std::move(entry); }

  bool contains(std::string const &name) const { return entries_.contains(name); }
  GroupEntry const &entry(std::string const &name) const;
  GroupHandle group(std::string const &name) const;
  std::vector<std::string> names() const;

  nlohmann::json to_json() const;

 private:
  std::map<std::string, GroupEntry> entries_;
};

GroupHandle make_group(GroupEntry const &entry, std::string name = {});

}  // namespace kcover

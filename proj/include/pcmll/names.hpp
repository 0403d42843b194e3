// Occurrence naming for the text formats. Engine code works with numeric
// occurrence ids; files name them. Unnamed ids print as "h<id>".

#pragma once

#include <map>
#include <optional>
#include <string>

#include "pcmll/context.hpp"

namespace pcmll {

class NameTable {
 public:
  std::string name(OccId id) const {
    auto it = by_id_.find(id);
    if (it != by_id_.end()) return it->second;
    return "h" + std::to_string(id);
  }

  void set(OccId id, const std::string& name) {
    by_id_[id] = name;
    by_name_[name] = id;
  }

  std::optional<OccId> id_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }

  const std::map<OccId, std::string>& entries() const { return by_id_; }

 private:
  std::map<OccId, std::string> by_id_;
  std::map<std::string, OccId> by_name_;
};

}  // namespace pcmll

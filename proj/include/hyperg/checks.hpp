#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyperg {

/// One named verification outcome. `note` carries the concrete witness
/// (indices, offending values) when the check fails, and may carry a short
/// qualifier (e.g. "automatic for finite discrete carriers") when it passes.
struct CheckItem {
  std::string name;
  bool pass = false;
  std::string note;
};

struct CheckReport {
  std::string subject;
  std::uint64_t seed = 0;
  std::vector<CheckItem> items;

  void add(const std::string& name, bool pass, const std::string& note = "") {
    items.push_back({name, pass, note});
  }

  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }

  const CheckItem* find(const std::string& name) const {
    for (const auto& it : items)
      if (it.name == name) return &it;
    return nullptr;
  }

  std::string failures() const {
    std::string out;
    for (const auto& it : items) {
      if (it.pass) continue;
      if (!out.empty()) out += "; ";
      out += it.name;
      if (!it.note.empty()) out += " [" + it.note + "]";
    }
    return out;
  }
};

}  // namespace hyperg

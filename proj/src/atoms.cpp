#include "forgetcnf/atoms.hpp"

#include <cassert>

namespace forgetcnf {

AtomId AtomTable::intern(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    AtomId id = static_cast<AtomId>(names_.size());
    ids_.emplace(name, id);
    names_.push_back(name);
    return id;
}

bool AtomTable::contains(const std::string& name) const {
    return ids_.count(name) != 0;
}

const std::string& AtomTable::name(AtomId id) const {
    assert(id >= 0 && id < static_cast<AtomId>(names_.size()));
    return names_[id];
}

}  // namespace forgetcnf

#include "cmheat/affine.hpp"

namespace cmheat {

ParamRegistry::ParamRegistry(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], i).second)
            throw std::invalid_argument("ParamRegistry: duplicate parameter '" + names_[i] + "'");
    }
}

std::size_t ParamRegistry::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::invalid_argument("ParamRegistry: unknown parameter '" + name + "'");
    return it->second;
}

}  // namespace cmheat

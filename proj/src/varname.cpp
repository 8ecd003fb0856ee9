#include "spk/varname.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace spk {

namespace {

struct Registry {
    std::mutex mu;
    std::deque<std::string> names;  // deque: stable addresses across growth
    std::unordered_map<std::string_view, const std::string*> index;
};

Registry& registry() {
    static Registry* r = new Registry();
    return *r;
}

bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    auto head = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
    auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
    if (!head(s[0])) return false;
    for (char c : s.substr(1))
        if (!tail(c)) return false;
    return true;
}

}  // namespace

VarName::VarName(std::string_view name) {
    if (!valid_name(name))
        throw std::invalid_argument("invalid variable name: '" + std::string(name) + "'");
    Registry& r = registry();
    std::lock_guard<std::mutex> lock(r.mu);
    auto it = r.index.find(name);
    if (it != r.index.end()) {
        name_ = it->second;
        return;
    }
    r.names.emplace_back(name);
    const std::string* p = &r.names.back();
    r.index.emplace(std::string_view(*p), p);
    name_ = p;
}

}  // namespace spk

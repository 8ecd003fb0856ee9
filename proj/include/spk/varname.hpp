#pragma once

#include <string>
#include <string_view>

namespace spk {

/// Interned variable name. Copies are cheap; equality is pointer equality.
/// The ordering is lexicographic on the name text, which is what makes
/// serialized output canonical regardless of interning order.
class VarName {
public:
    explicit VarName(std::string_view name);

    const std::string& str() const { return *name_; }

    bool operator==(const VarName& o) const { return name_ == o.name_; }
    bool operator!=(const VarName& o) const { return name_ != o.name_; }
    bool operator<(const VarName& o) const {
        return name_ != o.name_ && *name_ < *o.name_;
    }
    bool operator>(const VarName& o) const { return o < *this; }

private:
    const std::string* name_;
};

}  // namespace spk

#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace forgetcnf {

using AtomId = int;

// Interns atom names to dense non-negative ids. The mapping is a bijection
// and stable for the lifetime of the table.
class AtomTable {
  public:
    AtomId intern(const std::string& name);
    bool contains(const std::string& name) const;
    const std::string& name(AtomId id) const;
    int size() const { return static_cast<int>(names_.size()); }

  private:
    std::unordered_map<std::string, AtomId> ids_;
    std::vector<std::string> names_;
};

struct Literal {
    AtomId atom;
    bool positive;

    Literal complement() const { return {atom, !positive}; }

    // Encoding gives the canonical order: atom id ascending, negative
    // before positive.
    int encode() const { return atom * 2 + (positive ? 1 : 0); }
    static Literal decode(int code) { return {code / 2, (code & 1) != 0}; }

    bool operator==(const Literal&) const = default;
    auto operator<=>(const Literal& o) const { return encode() <=> o.encode(); }
};

inline Literal pos(AtomId a) { return {a, true}; }
inline Literal neg(AtomId a) { return {a, false}; }

}  // namespace forgetcnf

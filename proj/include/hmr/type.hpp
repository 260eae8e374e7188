#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hmr {

/// Finite types: a ground type, arrows and star (finite nonempty set) types.
/// Immutable with value semantics; copies share structure.
class Type {
public:
    enum class Kind { Ground, Arrow, Star };

    static Type ground(std::string name);
    static Type arrow(Type domain, Type codomain);
    static Type star(Type element);

    Kind kind() const;
    bool is_ground() const { return kind() == Kind::Ground; }
    bool is_arrow() const { return kind() == Kind::Arrow; }
    bool is_star() const { return kind() == Kind::Star; }

    const std::string& ground_name() const;
    const Type& domain() const;
    const Type& codomain() const;
    const Type& element() const;

    std::size_t hash() const;
    /// Ground types have depth 0; each arrow or star adds one.
    int depth() const;

    friend bool operator==(const Type& a, const Type& b);
    friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }

private:
    struct Node;
    explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// t1 -> ... -> tn -> result
Type arrows(std::span<const Type> args, Type result);

/// Every type is uniquely t1 -> ... -> tn -> r with r ground or star.
struct TypeShape {
    std::vector<Type> args;
    Type result;
};
TypeShape decompose(const Type& t);

bool is_end_star(const Type& t);

std::string to_string(const Type& t);

struct TypeHash {
    std::size_t operator()(const Type& t) const { return t.hash(); }
};

} // namespace hmr

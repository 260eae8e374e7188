#include "hmr/type.hpp"

#include <functional>
#include <utility>

namespace hmr {

struct Type::Node {
    Kind kind;
    std::string name;
    std::vector<Type> children;
    std::size_t hash;
    int depth;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

Type Type::ground(std::string name) {
    auto h = mix(0x51, std::hash<std::string>{}(name));
    return Type(std::make_shared<const Node>(Node{Kind::Ground, std::move(name), {}, h, 0}));
}

Type Type::arrow(Type domain, Type codomain) {
    auto h = mix(mix(0xa7, domain.hash()), codomain.hash());
    int d = 1 + std::max(domain.depth(), codomain.depth());
    return Type(std::make_shared<const Node>(
        Node{Kind::Arrow, {}, {std::move(domain), std::move(codomain)}, h, d}));
}

Type Type::star(Type element) {
    auto h = mix(0x5a, element.hash());
    int d = 1 + element.depth();
    return Type(std::make_shared<const Node>(Node{Kind::Star, {}, {std::move(element)}, h, d}));
}

Type::Kind Type::kind() const { return node_->kind; }
const std::string& Type::ground_name() const { return node_->name; }
const Type& Type::domain() const { return node_->children.at(0); }
const Type& Type::codomain() const { return node_->children.at(1); }
const Type& Type::element() const { return node_->children.at(0); }
std::size_t Type::hash() const { return node_->hash; }
int Type::depth() const { return node_->depth; }

bool operator==(const Type& a, const Type& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind) return false;
    if (a.node_->name != b.node_->name) return false;
    return a.node_->children == b.node_->children;
}

Type arrows(std::span<const Type> args, Type result) {
    for (auto it = args.rbegin(); it != args.rend(); ++it) result = Type::arrow(*it, std::move(result));
    return result;
}

TypeShape decompose(const Type& t) {
    TypeShape shape{{}, t};
    while (shape.result.is_arrow()) {
        shape.args.push_back(shape.result.domain());
        shape.result = shape.result.codomain();
    }
    return shape;
}

bool is_end_star(const Type& t) { return decompose(t).result.is_star(); }

namespace {

// precedence: arrow 0, star-postfix/atom 1
void print(std::string& out, const Type& t, int prec) {
    switch (t.kind()) {
    case Type::Kind::Ground:
        out += t.ground_name();
        break;
    case Type::Kind::Star:
        print(out, t.element(), 1);
        out += '*';
        break;
    case Type::Kind::Arrow:
        if (prec > 0) out += '(';
        print(out, t.domain(), 1);
        out += "->";
        print(out, t.codomain(), 0);
        if (prec > 0) out += ')';
        break;
    }
}

} // namespace

std::string to_string(const Type& t) {
    std::string out;
    print(out, t, 0);
    return out;
}

} // namespace hmr

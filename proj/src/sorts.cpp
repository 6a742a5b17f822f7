#include "pbespg/sorts.hpp"

#include <functional>

#include "pbespg/errors.hpp"

namespace pbespg {

std::string SourceLoc::str() const {
    if (!valid()) return "<no location>";
    return std::to_string(line) + ":" + std::to_string(column);
}

ParseError::ParseError(SourceLoc l, const std::string& msg)
    : std::runtime_error(l.str() + ": " + msg), loc(l) {}

UnboundedQuantifierError::UnboundedQuantifierError(const std::string& var)
    : std::runtime_error("quantified variable '" + var +
                         "' has no extractable finite bound"),
      variable(var) {}

NotBqnfError::NotBqnfError(const std::string& violation_path)
    : std::runtime_error("not in BQNF: " + violation_path), path(violation_path) {}

int EnumDecl::index_of(const std::string& ctor) const {
    for (size_t i = 0; i < constructors.size(); ++i)
        if (constructors[i] == ctor) return static_cast<int>(i);
    return -1;
}

EnumDeclPtr make_enum_decl(std::string name, std::vector<std::string> constructors) {
    if (constructors.empty())
        throw SortError("enumerated sort '" + name + "' needs at least one constructor");
    for (size_t i = 0; i < constructors.size(); ++i)
        for (size_t j = i + 1; j < constructors.size(); ++j)
            if (constructors[i] == constructors[j])
                throw SortError("duplicate constructor '" + constructors[i] +
                                "' in sort '" + name + "'");
    auto d = std::make_shared<EnumDecl>();
    d->name = std::move(name);
    d->constructors = std::move(constructors);
    return d;
}

Sort Sort::boolean() {
    Sort s;
    s.kind_ = Kind::Bool;
    return s;
}

Sort Sort::nat() {
    Sort s;
    s.kind_ = Kind::Nat;
    return s;
}

Sort Sort::enumeration(EnumDeclPtr decl) {
    Sort s;
    s.kind_ = Kind::Enum;
    s.decl_ = std::move(decl);
    return s;
}

Sort Sort::list(const Sort& element) {
    if (element.is_list()) throw SortError("nested list sorts are not supported");
    Sort s;
    s.kind_ = Kind::List;
    s.element_ = std::make_shared<Sort>(element);
    return s;
}

const EnumDecl& Sort::enum_decl() const { return *decl_; }
const EnumDeclPtr& Sort::enum_decl_ptr() const { return decl_; }
const Sort& Sort::element() const { return *element_; }

bool Sort::operator==(const Sort& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::Bool:
        case Kind::Nat:
            return true;
        case Kind::Enum:
            return decl_ == other.decl_ || decl_->name == other.decl_->name;
        case Kind::List:
            return *element_ == *other.element_;
    }
    return false;
}

std::string Sort::str() const {
    switch (kind_) {
        case Kind::Bool: return "Bool";
        case Kind::Nat: return "Nat";
        case Kind::Enum: return decl_->name;
        case Kind::List: return "List(" + element_->str() + ")";
    }
    return "?";
}

bool TypedVar::operator<(const TypedVar& o) const {
    if (name != o.name) return name < o.name;
    return sort.str() < o.sort.str();
}

Value Value::boolean(bool b) {
    Value v;
    v.kind_ = Kind::Bool;
    v.b_ = b;
    return v;
}

Value Value::nat(uint64_t n) {
    Value v;
    v.kind_ = Kind::Nat;
    v.n_ = n;
    return v;
}

Value Value::enumerated(EnumDeclPtr decl, uint32_t ctor_index) {
    if (!decl || ctor_index >= decl->constructors.size())
        throw SortError("enum constructor index out of range");
    Value v;
    v.kind_ = Kind::Enum;
    v.decl_ = std::move(decl);
    v.ctor_ = ctor_index;
    return v;
}

Value Value::list(Sort element_sort, std::vector<Value> elements) {
    for (const Value& e : elements)
        if (e.sort() != element_sort)
            throw SortError("list element of sort " + e.sort().str() +
                            " in List(" + element_sort.str() + ")");
    Value v;
    v.kind_ = Kind::List;
    v.elem_sort_ = std::make_shared<Sort>(std::move(element_sort));
    v.elems_ = std::move(elements);
    return v;
}

Sort Value::sort() const {
    switch (kind_) {
        case Kind::Bool: return Sort::boolean();
        case Kind::Nat: return Sort::nat();
        case Kind::Enum: return Sort::enumeration(decl_);
        case Kind::List: return Sort::list(*elem_sort_);
    }
    return Sort::boolean();
}

bool Value::operator==(const Value& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case Kind::Bool: return b_ == o.b_;
        case Kind::Nat: return n_ == o.n_;
        case Kind::Enum: return ctor_ == o.ctor_ && decl_->name == o.decl_->name;
        case Kind::List: return elems_ == o.elems_;
    }
    return false;
}

std::string Value::str() const {
    switch (kind_) {
        case Kind::Bool: return b_ ? "true" : "false";
        case Kind::Nat: return std::to_string(n_);
        case Kind::Enum: return enum_name();
        case Kind::List: {
            std::string out = "[";
            for (size_t i = 0; i < elems_.size(); ++i) {
                if (i) out += ",";
                out += elems_[i].str();
            }
            return out + "]";
        }
    }
    return "?";
}

size_t Value::hash() const {
    size_t h = static_cast<size_t>(kind_);
    switch (kind_) {
        case Kind::Bool: hash_combine(h, b_ ? 1u : 0u); break;
        case Kind::Nat: hash_combine(h, std::hash<uint64_t>{}(n_)); break;
        case Kind::Enum: hash_combine(h, ctor_ + 17); break;
        case Kind::List:
            for (const Value& e : elems_) hash_combine(h, e.hash());
            break;
    }
    return h;
}

Value default_value(const Sort& sort) {
    switch (sort.kind()) {
        case Sort::Kind::Bool: return Value::boolean(false);
        case Sort::Kind::Nat: return Value::nat(0);
        case Sort::Kind::Enum: return Value::enumerated(sort.enum_decl_ptr(), 0);
        case Sort::Kind::List: return Value::list(sort.element(), {});
    }
    return Value::boolean(false);
}

}  // namespace pbespg

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace pbespg {

// An enumerated sort ("sort D = d1 | d2;"). Shared between every Sort value
// that refers to it; constructor names are unique within the declaration.
struct EnumDecl {
    std::string name;
    std::vector<std::string> constructors;

    int index_of(const std::string& ctor) const;  // -1 if absent
};
using EnumDeclPtr = std::shared_ptr<const EnumDecl>;

EnumDeclPtr make_enum_decl(std::string name, std::vector<std::string> constructors);

// Bool, Nat, an enumerated sort, or a depth-1 list.
class Sort {
public:
    enum class Kind : uint8_t { Bool, Nat, Enum, List };

    static Sort boolean();
    static Sort nat();
    static Sort enumeration(EnumDeclPtr decl);
    static Sort list(const Sort& element);  // throws SortError on nested lists

    Kind kind() const { return kind_; }
    bool is_bool() const { return kind_ == Kind::Bool; }
    bool is_nat() const { return kind_ == Kind::Nat; }
    bool is_enum() const { return kind_ == Kind::Enum; }
    bool is_list() const { return kind_ == Kind::List; }
    bool is_finite() const { return kind_ == Kind::Bool || kind_ == Kind::Enum; }

    const EnumDecl& enum_decl() const;
    const EnumDeclPtr& enum_decl_ptr() const;
    const Sort& element() const;  // list element sort

    bool operator==(const Sort& other) const;
    bool operator!=(const Sort& other) const { return !(*this == other); }

    std::string str() const;  // "Bool", "Nat", "D", "List(D)"

private:
    Sort() = default;
    Kind kind_ = Kind::Bool;
    EnumDeclPtr decl_;
    std::shared_ptr<const Sort> element_;
};

// A typed variable occurrence: equation parameter or quantifier binder.
struct TypedVar {
    std::string name;
    Sort sort;

    bool operator==(const TypedVar& o) const { return name == o.name && sort == o.sort; }
    bool operator<(const TypedVar& o) const;
};

// A closed data value in normal form: the contents of value tables and
// bindings, and the evaluation result of closed terms.
class Value {
public:
    enum class Kind : uint8_t { Bool, Nat, Enum, List };

    static Value boolean(bool b);
    static Value nat(uint64_t n);
    static Value enumerated(EnumDeclPtr decl, uint32_t ctor_index);
    static Value list(Sort element_sort, std::vector<Value> elements);

    Kind kind() const { return kind_; }
    bool bool_value() const { return b_; }
    uint64_t nat_value() const { return n_; }
    const EnumDeclPtr& enum_decl() const { return decl_; }
    uint32_t enum_index() const { return ctor_; }
    const std::string& enum_name() const { return decl_->constructors[ctor_]; }
    const Sort& element_sort() const { return *elem_sort_; }
    const std::vector<Value>& elements() const { return elems_; }

    Sort sort() const;

    bool operator==(const Value& o) const;
    bool operator!=(const Value& o) const { return !(*this == o); }

    std::string str() const;  // "true", "3", "d1", "[d1,d2]"
    size_t hash() const;

private:
    Kind kind_ = Kind::Bool;
    bool b_ = false;
    uint64_t n_ = 0;
    EnumDeclPtr decl_;
    uint32_t ctor_ = 0;
    std::shared_ptr<const Sort> elem_sort_;
    std::vector<Value> elems_;
};

struct ValueHash {
    size_t operator()(const Value& v) const { return v.hash(); }
};

// Canonical default per sort: false, 0, first constructor, empty list.
Value default_value(const Sort& sort);

inline void hash_combine(size_t& seed, size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace pbespg

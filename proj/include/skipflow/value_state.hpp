#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

namespace skipflow {

namespace ir {
struct Program;
}

// The null sentinel is a member of the type universe but is never a declared
// type. It owns no fields and no methods.
inline const std::string kNullType = "null";

// Thrown when an operation is applied to operands that a well-typed program
// can never produce (e.g. an ordered comparison of type sets).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A value state: Empty (bottom), a single primitive constant, a non-empty set
// of type identifiers (possibly including the null sentinel), or Any (top).
class ValueState {
 public:
  enum class Kind { Empty, Prim, Types, Any };

  ValueState() : kind_(Kind::Empty) {}

  static ValueState empty() { return ValueState(); }
  static ValueState any() {
    ValueState v;
    v.kind_ = Kind::Any;
    return v;
  }
  static ValueState prim(int64_t c) {
    ValueState v;
    v.kind_ = Kind::Prim;
    v.const_ = c;
    return v;
  }
  // An empty set collapses to Empty; Empty is the sole bottom encoding.
  static ValueState types(std::set<std::string> s) {
    if (s.empty()) return empty();
    ValueState v;
    v.kind_ = Kind::Types;
    v.types_ = std::move(s);
    return v;
  }

  Kind kind() const { return kind_; }
  bool is_empty() const { return kind_ == Kind::Empty; }
  bool is_prim() const { return kind_ == Kind::Prim; }
  bool is_types() const { return kind_ == Kind::Types; }
  bool is_any() const { return kind_ == Kind::Any; }

  int64_t constant() const { return const_; }
  const std::set<std::string>& type_set() const { return types_; }

  // Lattice level: Empty < {constant, type set} < Any. Used for the
  // termination accounting; widening within a type set stays on level 1.
  int level() const {
    switch (kind_) {
      case Kind::Empty: return 0;
      case Kind::Prim:
      case Kind::Types: return 1;
      case Kind::Any: return 2;
    }
    return 0;
  }

  // Rendering for diagnostics; JSON uses tag() instead.
  std::string display() const;
  std::string tag() const;

  friend bool operator==(const ValueState& a, const ValueState& b) {
    return a.kind_ == b.kind_ &&
           (a.kind_ != Kind::Prim || a.const_ == b.const_) &&
           (a.kind_ != Kind::Types || a.types_ == b.types_);
  }
  friend bool operator!=(const ValueState& a, const ValueState& b) {
    return !(a == b);
  }

 private:
  Kind kind_;
  int64_t const_ = 0;
  std::set<std::string> types_;
};

// Least upper bound. Two distinct constants join to Any; so does any mix of
// a constant with a type set.
ValueState join(const ValueState& a, const ValueState& b);

// Partial order consistent with join: leq(a, b) iff join(a, b) == b.
bool leq(const ValueState& a, const ValueState& b);

// Condition operators. Source programs contain ==, < and instanceof only;
// the remaining forms arise during graph construction.
enum class CondOp { Eq, Ne, Lt, Le, Gt, Ge, InstanceOf, NotInstanceOf };

// Negation, used for the else branch: inv(<) is >=.
CondOp inv(CondOp op);
// Operand swap, used for the right-hand filter: flip(<) is >.
CondOp flip(CondOp op);

bool is_comparison(CondOp op);
bool is_type_check(CondOp op);
bool is_ordered(CondOp op);

std::string cond_op_name(CondOp op);

// Filters vl down to the values that can satisfy `vl op vr`.
//
// != applies set difference only against a primitive constant or the
// singleton {null}; against a set of declared types the input passes
// unchanged, since two distinct objects of one type still compare unequal
// under the type abstraction.
ValueState compare_filter(CondOp op, const ValueState& vl,
                          const ValueState& vr);

// Keeps the members of a type set that pass (or fail, when negated) an
// instanceof check. The null sentinel passes only the negated form. Any
// passes through unchanged; a primitive constant passes neither form.
ValueState instanceof_filter(const ValueState& v, const std::string& target,
                             bool negated, const ir::Program& program);

}  // namespace skipflow

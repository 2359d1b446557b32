#pragma once

#include <algorithm>
#include <chrono>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cqrepair/errors.hpp"

namespace cqr {

using Value = std::string; // opaque data value, or a variable name in canonical examples

// An atom R(a1,...,an); doubles as a ground fact when the args are values.
struct Atom {
    std::string rel;
    std::vector<std::string> args;

    auto operator<=>(const Atom&) const = default;
};
using Fact = Atom;

struct Schema {
    std::map<std::string, int> relations; // name -> arity

    bool empty() const { return relations.empty(); }
    bool contains(const std::string& name) const { return relations.count(name) > 0; }
    int arity_of(const std::string& name) const;
    int max_arity() const;

    // Union; throws SchemaMismatch on conflicting arities.
    static Schema merged(const Schema& a, const Schema& b);
};

struct Instance {
    std::vector<Fact> facts; // sorted, duplicate-free

    static Instance of(std::vector<Fact> facts);
    bool contains(const Fact& f) const { return std::binary_search(facts.begin(), facts.end(), f); }
    std::vector<Value> adom() const;
    Schema inferred_schema() const;
    size_t size() const { return facts.size(); }
};

// A database instance with a distinguished tuple. Tuple values normally occur
// in some fact; direct products may leave a tuple value isolated, in which
// case the example denotes an unsafe canonical CQ.
struct DataExample {
    Instance instance;
    std::vector<Value> tuple;

    int arity() const { return static_cast<int>(tuple.size()); }
    std::vector<Value> domain() const; // fact values plus tuple values, sorted
    bool tuple_values_covered() const; // every tuple value occurs in a fact
};

struct CQ {
    Schema schema;
    std::vector<std::string> head; // answer variables, possibly repeated
    std::vector<Atom> body;        // sorted, duplicate-free, non-empty

    int arity() const { return static_cast<int>(head.size()); }
    int size() const { return static_cast<int>(body.size()); }
    bool head_repetition_free() const;
    std::vector<std::string> variables() const; // sorted
    std::vector<std::string> existential_variables() const;

    // Validates safety and arities against the schema; normalizes the body.
    static CQ make(Schema schema, std::vector<std::string> head, std::vector<Atom> body);
};

struct LabeledExampleSet {
    Schema schema;
    int arity = 0;
    std::vector<DataExample> positives;
    std::vector<DataExample> negatives;

    static LabeledExampleSet make(Schema schema, int arity, std::vector<DataExample> pos,
                                  std::vector<DataExample> neg);
};

struct VarMapping {
    std::map<Value, Value> entries;

    std::optional<Value> apply(const Value& v) const;
};

// Wall-clock budget threaded through the search kernels.
struct Deadline {
    std::optional<std::chrono::steady_clock::time_point> at;

    static Deadline none() { return {}; }
    static Deadline in(std::chrono::milliseconds ms) {
        return Deadline{std::chrono::steady_clock::now() + ms};
    }
    void check() const {
        if (at && std::chrono::steady_clock::now() > *at)
            throw TimeoutError("deadline exceeded");
    }
};

} // namespace cqr

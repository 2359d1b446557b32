#include "cqrepair/model.hpp"

#include <unordered_set>

namespace cqr {

int Schema::arity_of(const std::string& name) const {
    auto it = relations.find(name);
    if (it == relations.end()) throw UnknownRelation("unknown relation: " + name);
    return it->second;
}

int Schema::max_arity() const {
    int m = 0;
    for (auto& [_, a] : relations) m = std::max(m, a);
    return m;
}

Schema Schema::merged(const Schema& a, const Schema& b) {
    Schema out = a;
    for (auto& [name, ar] : b.relations) {
        auto [it, inserted] = out.relations.emplace(name, ar);
        if (!inserted && it->second != ar)
            throw SchemaMismatch("relation " + name + " used with arities " +
                                 std::to_string(it->second) + " and " + std::to_string(ar));
    }
    return out;
}

Instance Instance::of(std::vector<Fact> facts) {
    std::sort(facts.begin(), facts.end());
    facts.erase(std::unique(facts.begin(), facts.end()), facts.end());
    return Instance{std::move(facts)};
}

std::vector<Value> Instance::adom() const {
    std::set<Value> vals;
    for (auto& f : facts) vals.insert(f.args.begin(), f.args.end());
    return {vals.begin(), vals.end()};
}

Schema Instance::inferred_schema() const {
    Schema s;
    for (auto& f : facts) {
        int ar = static_cast<int>(f.args.size());
        auto [it, inserted] = s.relations.emplace(f.rel, ar);
        if (!inserted && it->second != ar)
            throw SchemaMismatch("relation " + f.rel + " used with arities " +
                                 std::to_string(it->second) + " and " + std::to_string(ar));
    }
    return s;
}

std::vector<Value> DataExample::domain() const {
    std::set<Value> vals;
    for (auto& f : instance.facts) vals.insert(f.args.begin(), f.args.end());
    vals.insert(tuple.begin(), tuple.end());
    return {vals.begin(), vals.end()};
}

bool DataExample::tuple_values_covered() const {
    std::set<Value> vals;
    for (auto& f : instance.facts) vals.insert(f.args.begin(), f.args.end());
    for (auto& v : tuple)
        if (!vals.count(v)) return false;
    return true;
}

bool CQ::head_repetition_free() const {
    std::unordered_set<std::string> seen;
    for (auto& v : head)
        if (!seen.insert(v).second) return false;
    return true;
}

std::vector<std::string> CQ::variables() const {
    std::set<std::string> vars;
    for (auto& a : body) vars.insert(a.args.begin(), a.args.end());
    vars.insert(head.begin(), head.end());
    return {vars.begin(), vars.end()};
}

std::vector<std::string> CQ::existential_variables() const {
    std::set<std::string> vars;
    for (auto& a : body) vars.insert(a.args.begin(), a.args.end());
    for (auto& h : head) vars.erase(h);
    return {vars.begin(), vars.end()};
}

CQ CQ::make(Schema schema, std::vector<std::string> head, std::vector<Atom> body) {
    if (body.empty()) throw SafetyViolation("a CQ needs at least one body atom");
    std::sort(body.begin(), body.end());
    body.erase(std::unique(body.begin(), body.end()), body.end());
    std::set<std::string> body_vars;
    for (auto& a : body) {
        if (!schema.contains(a.rel)) throw UnknownRelation("unknown relation: " + a.rel);
        if (schema.arity_of(a.rel) != static_cast<int>(a.args.size()))
            throw ArityMismatch("relation " + a.rel + " expects arity " +
                                std::to_string(schema.arity_of(a.rel)));
        body_vars.insert(a.args.begin(), a.args.end());
    }
    for (auto& [name, ar] : schema.relations)
        if (ar <= 0) throw EmptySchema("arity-0 relation not supported: " + name);
    for (auto& h : head)
        if (!body_vars.count(h))
            throw SafetyViolation("answer variable " + h + " does not occur in the body");
    return CQ{std::move(schema), std::move(head), std::move(body)};
}

LabeledExampleSet LabeledExampleSet::make(Schema schema, int arity, std::vector<DataExample> pos,
                                          std::vector<DataExample> neg) {
    for (auto* set : {&pos, &neg})
        for (auto& e : *set) {
            if (e.arity() != arity)
                throw ArityMismatch("example arity " + std::to_string(e.arity()) +
                                    " does not match " + std::to_string(arity));
            schema = Schema::merged(schema, e.instance.inferred_schema());
        }
    return LabeledExampleSet{std::move(schema), arity, std::move(pos), std::move(neg)};
}

std::optional<Value> VarMapping::apply(const Value& v) const {
    auto it = entries.find(v);
    if (it == entries.end()) return std::nullopt;
    return it->second;
}

} // namespace cqr

#pragma once

#include <map>
#include <string>

#include "cqrepair/model.hpp"

namespace cqr {

// Canonical form of a data example under value renamings that fix the
// distinguished tuple positionally. Distinct tuple values become x1,x2,...
// (by first position), remaining values y1,y2,... in the lexicographically
// smallest discovery order. Two examples get the same key iff they are
// isomorphic via a bijection mapping tuple to tuple.
struct Canonical {
    DataExample renamed;
    VarMapping renaming; // original value -> canonical name
    std::string key;
};

Canonical canonize_example(const DataExample& e, const Deadline& deadline = Deadline::none());

bool isomorphic(const DataExample& a, const DataExample& b,
                const Deadline& deadline = Deadline::none());

} // namespace cqr

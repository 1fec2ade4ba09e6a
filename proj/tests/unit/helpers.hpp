#ifndef ENTWINE_TEST_HELPERS_HPP
#define ENTWINE_TEST_HELPERS_HPP

#include "entwine/corpus.hpp"

#include <map>
#include <string>
#include <vector>

namespace testing_helpers {

using namespace entwine;

/// Map from a table of coefficients keyed by (flat out, flat in).
inline LinMap sparse_map(const Field& f, const Shape& dom, const Shape& cod,
                         const std::map<std::pair<std::size_t, std::size_t>, long>& entries) {
    return LinMap::from_entries(f, dom, cod, [&](std::size_t out, std::size_t in) {
        auto it = entries.find({out, in});
        return it == entries.end() ? f.zero() : f.from_int(it->second);
    });
}

inline Vector ints(const Field& f, const std::vector<long>& v) {
    Vector out;
    for (auto x : v) out.push_back(f.from_int(x));
    return out;
}

inline Entwining entwining_of(const std::string& name, const Field& f) {
    auto e = corpus::builtin(name, f).entwining();
    if (!e) throw ContractViolation(name + " carries no entwining");
    return *e;
}

template <class T>
T payload_of(const std::string& name, const Field& f) {
    return std::get<T>(corpus::builtin(name, f).payload);
}

} // namespace testing_helpers

#endif

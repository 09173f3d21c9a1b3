#include "fricke/markoff.hpp"

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace fricke {

namespace {

using Key = std::array<mpz_class, 3>;  // entries descending

Key sorted_key(mpz_class a, mpz_class b, mpz_class c) {
    if (a < b) std::swap(a, b);
    if (b < c) std::swap(b, c);
    if (a < b) std::swap(a, b);
    return {std::move(a), std::move(b), std::move(c)};
}

}  // namespace

std::vector<MarkoffTriple> enumerate_triples(const mpz_class& bound, MarkoffForm form) {
    const mpz_class least = form == MarkoffForm::trace ? 3 : 1;
    if (bound < least) throw std::domain_error("bound is below the smallest maximum");
    // Work classically; a trace-form bound caps the classical maximum at bound/3.
    const mpz_class cap = form == MarkoffForm::trace ? mpz_class(bound / 3) : bound;

    std::set<Key> visited;
    std::set<Key> frontier;
    frontier.insert(Key{1, 1, 1});
    visited.insert(Key{1, 1, 1});

    std::vector<MarkoffTriple> out;
    while (!frontier.empty()) {
        Key t = *frontier.begin();
        frontier.erase(frontier.begin());
        const mpz_class &x = t[0], &y = t[1], &z = t[2];

        MarkoffTriple triple;
        triple.form = form;
        if (form == MarkoffForm::trace) {
            triple.x = 3 * x;
            triple.y = 3 * y;
            triple.z = 3 * z;
        } else {
            triple.x = x;
            triple.y = y;
            triple.z = z;
        }
        out.push_back(std::move(triple));

        const Key moves[3] = {
            sorted_key(3 * y * z - x, y, z),
            sorted_key(x, 3 * x * z - y, z),
            sorted_key(x, y, 3 * x * y - z),
        };
        for (const Key& m : moves) {
            if (m[0] > cap) continue;
            if (visited.insert(m).second) frontier.insert(m);
        }
    }
    return out;
}

std::vector<std::pair<MarkoffTriple, MarkoffTriple>> find_collisions(
    const std::vector<MarkoffTriple>& triples) {
    std::map<mpz_class, std::vector<size_t>> by_max;
    for (size_t i = 0; i < triples.size(); ++i) by_max[triples[i].x].push_back(i);

    std::vector<std::pair<MarkoffTriple, MarkoffTriple>> out;
    for (const auto& [mx, idx] : by_max)
        for (size_t j = 1; j < idx.size(); ++j)
            for (size_t i = 0; i < j; ++i) out.push_back({triples[idx[i]], triples[idx[j]]});
    return out;
}

std::vector<std::pair<MarkoffTriple, MarkoffTriple>> verify_uniqueness(const mpz_class& bound) {
    return find_collisions(enumerate_triples(bound, MarkoffForm::classical));
}

FrickePoint triple_to_traces(const MarkoffTriple& t) {
    const long scale = t.form == MarkoffForm::trace ? 1 : 3;
    return {mpz_class(scale * t.x).get_d(), mpz_class(scale * t.y).get_d(),
            mpz_class(scale * t.z).get_d()};
}

}  // namespace fricke

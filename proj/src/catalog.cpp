#include "l2t/catalog.hpp"

#include <cmath>
#include <json.hpp>
#include <stdexcept>

namespace l2t {

namespace {

CatalogEntry make_entry(std::string name, std::vector<std::string> gens,
                        std::vector<std::string> relators, bool excluded, bool fibered,
                        std::optional<double> dilatation, Rat x_unit, Rat expected_degree,
                        std::string notes) {
    CatalogEntry e;
    e.name = std::move(name);
    e.pres = std::make_shared<Presentation>(
        Presentation::from_strings(std::move(gens), relators));
    e.boundary = true;
    e.excluded = excluded;
    e.fibered = fibered;
    e.dilatation = dilatation;
    e.x_unit = x_unit;
    e.expected_degree = expected_degree;
    e.notes = std::move(notes);
    return e;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> c;
    c.push_back(make_entry("s1xd2", {"x"}, {}, true, true, 1.0, Rat(0), Rat(1),
                           "solid torus; excluded from the norm comparison"));
    c.push_back(make_entry("trefoil", {"a", "b"}, {"a b a B A B"}, false, true, 1.0, Rat(1), Rat(-1),
                           "torus knot T(2,3), genus 1 fiber"));
    c.push_back(make_entry("t25", {"x", "y"}, {"x x Y Y Y Y Y"}, false, true, 1.0, Rat(3), Rat(-3),
                           "torus knot T(2,5), genus 2 fiber"));
    c.push_back(make_entry("t34", {"x", "y"}, {"x x x Y Y Y Y"}, false, true, 1.0, Rat(5), Rat(-5),
                           "torus knot T(3,4), genus 3 fiber"));
    c.push_back(make_entry("fig8", {"a", "b"}, {"a B A b a B a b A B"}, false, true,
                           (3.0 + std::sqrt(5.0)) / 2.0, Rat(1), Rat(-1),
                           "figure-eight knot, fibered with Anosov monodromy"));
    c.push_back(make_entry("k52", {"a", "b"}, {"a b A B a b a B A b a B A B"}, false, false,
                           std::nullopt, Rat(1), Rat(-1),
                           "two-bridge knot 5_2, genus 1, not fibered"));
    return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> c = build_catalog();
    return c;
}

const CatalogEntry* find_catalog(const std::string& name) {
    for (const CatalogEntry& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

Rat thurston_oracle(const CatalogEntry& entry, const CohomClass& phi) {
    if (phi.dim() != 1) throw std::invalid_argument("catalog entries have b1 = 1");
    return phi.weights[0].abs() * entry.x_unit;
}

std::string catalog_json() {
    nlohmann::json j = nlohmann::json::array();
    for (const CatalogEntry& e : catalog()) {
        nlohmann::json o;
        o["name"] = e.name;
        o["generators"] = e.pres->generator_names;
        auto rels = nlohmann::json::array();
        for (const Word& r : e.pres->relators) rels.push_back(r.str(e.pres->generator_names));
        o["relators"] = rels;
        o["excluded"] = e.excluded;
        o["fibered"] = e.fibered;
        if (e.dilatation) o["dilatation"] = *e.dilatation;
        o["x_unit"] = e.x_unit.str();
        o["expected_degree"] = e.expected_degree.str();
        o["notes"] = e.notes;
        j.push_back(o);
    }
    return j.dump(2);
}

}  // namespace l2t

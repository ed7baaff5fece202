#pragma once

// JSON form of subset-labelled structure algebras:
//   { "rank": d, "vertices": [[...], ...],
//     "basis": [{"id", "source", "target", "degree"}, ...],
//     "products": [[id_g, id_f, [[id_h, "num/den"], ...]], ...] }
// Basis sorted by (source, target, degree, id), products by (id_g, id_f).

#include <algorithm>
#include <numeric>
#include <tuple>

#include <nlohmann/json.hpp>

#include "algebra.hpp"

namespace steinberg {

inline nlohmann::ordered_json algebra_to_json(const StructureAlgebra& a)
{
    if (!a.subset_rank())
        throw usage_error("only subset-labelled algebras have a JSON form");
    const unsigned d = *a.subset_rank();
    nlohmann::ordered_json out;
    out["rank"] = d;
    auto vertices = nlohmann::ordered_json::array();
    for (VertexId v = 0; v < a.vertex_count(); ++v)
        vertices.push_back(a.vertex_subset(v).roots());
    out["vertices"] = std::move(vertices);

    std::vector<BasisId> order(a.dimension());
    std::iota(order.begin(), order.end(), BasisId{0});
    std::sort(order.begin(), order.end(), [&](BasisId x, BasisId y) {
        const auto& ex = a.element(x);
        const auto& ey = a.element(y);
        return std::tie(ex.source, ex.target, ex.degree, x) < std::tie(ey.source, ey.target, ey.degree, y);
    });
    auto basis = nlohmann::ordered_json::array();
    for (BasisId b : order) {
        const auto& e = a.element(b);
        nlohmann::ordered_json item;
        item["id"] = b;
        item["source"] = a.vertex_subset(e.source).roots();
        item["target"] = a.vertex_subset(e.target).roots();
        item["degree"] = e.degree;
        basis.push_back(std::move(item));
    }
    out["basis"] = std::move(basis);

    auto products = nlohmann::ordered_json::array();
    for (const auto& [k, v] : a.sorted_products()) {
        auto terms = nlohmann::ordered_json::array();
        for (const auto& t : *v)
            terms.push_back(nlohmann::ordered_json::array({t.index, to_fraction_string(t.value)}));
        products.push_back(nlohmann::ordered_json::array({k.first, k.second, std::move(terms)}));
    }
    out["products"] = std::move(products);
    return out;
}

inline StructureAlgebra algebra_from_json(const nlohmann::json& j)
{
    try {
        const unsigned d = j.at("rank").get<unsigned>();
        if (d > kMaxSubsetRank)
            throw resource_error("rank too large");
        const std::size_t nv = std::size_t{1} << d;
        const auto& vertices = j.at("vertices");
        if (vertices.size() != nv)
            throw usage_error("expected 2^rank vertices");
        for (std::size_t v = 0; v < nv; ++v)
            if (subset_from_json(vertices[v], d).bits() != v)
                throw usage_error("vertices must be listed in bitmask order");

        const auto& basis = j.at("basis");
        std::vector<BasisElement> elems(basis.size());
        std::vector<bool> seen(basis.size(), false);
        for (const auto& item : basis) {
            const auto id = item.at("id").get<std::size_t>();
            if (id >= basis.size() || seen[id])
                throw usage_error("basis ids must be a permutation of 0..n-1");
            seen[id] = true;
            elems[id] = BasisElement{subset_from_json(item.at("source"), d).bits(),
                                     subset_from_json(item.at("target"), d).bits(), item.at("degree").get<unsigned>()};
        }
        AlgebraBuilder b;
        for (const auto& v : all_subsets(d))
            b.add_vertex(v.label());
        for (const auto& e : elems)
            b.add_element(e.source, e.target, e.degree);
        for (const auto& p : j.at("products")) {
            const auto g = p.at(0).get<std::size_t>();
            const auto f = p.at(1).get<std::size_t>();
            if (g >= elems.size() || f >= elems.size())
                throw usage_error("product refers to unknown basis element");
            for (const auto& t : p.at(2)) {
                const auto h = t.at(0).get<std::size_t>();
                if (h >= elems.size())
                    throw usage_error("product refers to unknown basis element");
                b.add_product(g, f, h, parse_fraction(t.at(1).get<std::string>()));
            }
        }
        b.set_subset_rank(d);
        return std::move(b).build();
    } catch (const nlohmann::json::exception& e) {
        throw usage_error(std::string("malformed algebra JSON: ") + e.what());
    }
}

} // namespace steinberg

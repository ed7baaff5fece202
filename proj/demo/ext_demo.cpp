// Resolves the simple at the empty subset over A_2 and prints the
// generators of each projective term.

#include <iostream>

#include <steinberg/steinberg.hpp>

int main()
{
    using namespace steinberg;
    const unsigned d = 2;
    const auto ring = homalg::make_ring(endomorphism_algebra(d));
    const auto res = homalg::minimal_resolution(homalg::simple_module(ring, 0), 4);
    for (std::size_t k = 0; k < res.terms.size(); ++k) {
        std::cout << "P_" << k << " =";
        for (const auto& g : res.terms[k])
            std::cout << " P" << ring->algebra->vertex_subset(g.vertex).label() << "<" << g.degree << ">";
        std::cout << "\n";
    }
    std::cout << "linear: " << std::boolalpha << homalg::is_linear_resolution(res) << "\n";
}

#include "kpath/coloring.hpp"

#include <stdexcept>

#include "kpath/rng.hpp"

namespace kpath {

Coloring random_coloring(const Graph& g, int palette_size, std::mt19937_64& rng) {
    if (palette_size < 1) throw std::invalid_argument("palette must have at least one color");
    Coloring phi;
    phi.palette_size = palette_size;
    phi.color.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        phi.color[v] = 1 + static_cast<int>(uniform_below(rng, palette_size));
    return phi;
}

void check_coloring(const Graph& g, const Coloring& phi) {
    if (phi.palette_size < 1) throw std::invalid_argument("palette must have at least one color");
    if (static_cast<int>(phi.color.size()) != g.vertex_count())
        throw std::invalid_argument("coloring size does not match the vertex count");
    for (int c : phi.color)
        if (c < 1 || c > phi.palette_size)
            throw std::invalid_argument("vertex color outside the palette");
}

}  // namespace kpath

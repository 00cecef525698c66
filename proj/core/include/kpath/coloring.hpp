#pragma once

#include <random>
#include <vector>

#include "kpath/graph.hpp"

namespace kpath {

// Vertex coloring over the palette [1, palette_size]. Colors are 1-based so a
// color can double as a label index in the algebraic engine.
struct Coloring {
    int palette_size = 1;
    std::vector<int> color;  // color[v] in [1, palette_size]

    int of(int v) const { return color[v]; }
};

// Every vertex draws an independent uniform color; one rejection-free draw per
// vertex when the palette size is a power of two.
Coloring random_coloring(const Graph& g, int palette_size, std::mt19937_64& rng);

// Throws std::invalid_argument unless phi assigns every vertex of g a color
// inside its palette.
void check_coloring(const Graph& g, const Coloring& phi);

}  // namespace kpath

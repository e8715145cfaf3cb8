#pragma once

#include "stsys/cell_complex.hpp"

#include <string>
#include <string_view>

namespace stsys {

/**
 * JSON complex files. The explicit form is
 *
 *   {"kind": "simplicial", "top_dim": 1,
 *    "cells": [[{"id": "v0", "weight": "1", "vertices": [0]}, ...],
 *              [{"id": "e0", "weight": "3/2", "vertices": [0, 1],
 *                "boundary": [["v1", 1], ["v0", -1]]}, ...]]}
 *
 * where weights are exact rationals given as strings or integers and
 * "factor": [a, b] optionally tags product cells. Shorthand forms:
 *
 *   {"library": "circle", "args": ["3"]}
 *   {"product": [<complex>, <complex>]}
 *   {"rescale": <complex>, "t": "2", "mode": "uniform" | "first-factor"}
 */
WeightedCellComplex complex_from_json(std::string_view text);
std::string complex_to_json(const WeightedCellComplex& k);

/**
 * A path to a JSON complex file, or an inline library reference
 * "lib:<name>[:<arg>...]" such as "lib:flat-torus:4:1/4".
 */
WeightedCellComplex load_complex(const std::string& source);
void save_complex(const std::string& path, const WeightedCellComplex& k);

}  // namespace stsys

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sftkit/core.hpp"
#include "sftkit/tm.hpp"

namespace sftkit::cons {

using core::Alphabet;
using core::SftSpec;
using core::WangTileset;

// d-dimensional full shift on k fresh symbols "a0".."a{k-1}".
SftSpec full_shift(int k, int dim);
SftSpec full_shift(const Alphabet& alphabet, int dim);

// Canonical empty spec: every 0-block forbidden.
SftSpec empty_sft(const Alphabet& alphabet, int dim);

// One symbol, no constraints: exactly one configuration.
SftSpec singleton_sft(const std::string& symbol, int dim);

// Product symbol naming: component names joined with '|', backslash
// escaping. Projections are recoverable with split_product_symbol.
std::string product_symbol_name(const std::string& left, const std::string& right);
std::pair<std::string, std::string> split_product_symbol(const std::string& name);

// Alphabet pairs; forbidden set = both components' forbidden sets lifted
// (one component constrained, the other free).
SftSpec product(const SftSpec& X, const SftSpec& Y);

// Tagged alphabet "L:x" / "R:y"; forbidden = tagged copies plus every
// mixed-tag axis-adjacent pair, so configurations are all-Left or
// all-Right.
SftSpec disjoint_union(const SftSpec& X, const SftSpec& Y);

// Adds per new axis the unequal-pair constraints, forcing configurations
// constant along the new axes.
SftSpec lift_dimension(const SftSpec& X, int d_target);

// Wang-tile rendering of the square hierarchy of Robinson's 1971
// aperiodic system. Deterministic; frozen against a golden file.
WangTileset robinson_tileset();

struct TmStripTileset {
    WangTileset tiles;
    // Index of the distinguished seed tile. Absent when the machine halts
    // immediately from blank input (the start color has no carrier).
    std::optional<int> seed_index;
    std::string start_color;  // south color identifying the seed row cell
};

// Wang tiles whose rows encode successive configurations of M started on
// blank input, time increasing upward. Halting states have no outgoing
// tiles: a seed-anchored admissible strip of height h exists iff M runs
// at least h steps.
TmStripTileset tm_strip_tileset(const tm::TuringMachine& M);

// Largest h <= h_max such that an admissible strip of height h anchored
// at the seed exists (columns -h..h, rows 0..h-1, seed at the origin).
int max_seed_strip_height(const TmStripTileset& T, int h_max);

// Robinson layer x computation layer, seed cells pinned to the NE-facing
// first-order crosses of the Robinson layer. The computation layer may
// also be off everywhere.
WangTileset layered_computation_tileset(const tm::TuringMachine& M);

// disjoint_union(X, product(R_M, full_shift(|alphabet(X)|+1))) with R_M
// the layered Robinson/computation SFT.
SftSpec conj_hardness_instance(const SftSpec& X, const tm::TuringMachine& M);

}  // namespace sftkit::cons

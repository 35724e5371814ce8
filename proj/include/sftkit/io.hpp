#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "sftkit/codes.hpp"
#include "sftkit/core.hpp"
#include "sftkit/tm.hpp"

namespace sftkit::io {

inline constexpr const char* kSftFormatVersion = "sftkit 1";
inline constexpr const char* kCodeFormatVersion = "sbc 1";
inline constexpr const char* kTmFormatVersion = "tm 1";

// One `sftkit 1` document holds either an SFT (alphabet/dim/forbid) or a
// Wang tileset (wang section).
struct SftDocument {
    std::optional<core::SftSpec> sft;
    std::optional<core::WangTileset> wang;
};

std::string write_sft(const core::SftSpec& spec);
std::string write_wang(const core::WangTileset& tiles);
SftDocument parse_sft_document(std::istream& in);
SftDocument parse_sft_file(const std::string& path);

// Pattern cell syntax: "@(x,y,...)=symbol;" repeated; the dimension is
// read off the first cell.
std::string pattern_line(const core::Pattern& p);
core::Pattern parse_pattern_line(const std::string& line);

// Torus syntax: "periods p1,p2,... | <pattern cells of the fundamental domain>"
std::string torus_line(const core::PeriodicConfig& c, const core::Alphabet& alphabet);

std::string write_code(const codes::SlidingBlockCode& code);
codes::SlidingBlockCode parse_code(std::istream& in);
codes::SlidingBlockCode parse_code_file(const std::string& path);

tm::TuringMachine parse_tm(std::istream& in);
tm::TuringMachine parse_tm_file(const std::string& path);

}  // namespace sftkit::io

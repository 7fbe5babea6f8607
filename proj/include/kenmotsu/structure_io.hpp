#pragma once

#include <string>
#include <utility>

#include "kenmotsu/liealg.hpp"

namespace kenmotsu {

/// On-disk description of a metric Lie algebra with almost contact data.
/// Brackets are sparse with i < j; the antisymmetric mirror is implied.
struct StructureFile {
    struct BracketEntry {
        int i = 0;
        int j = 0;
        Vec v;
    };

    int dim = 0;
    std::vector<BracketEntry> brackets;
    RealMatrix gram;
    RealMatrix phi;
    Vec xi;
};

/// Conversion to/from the in-memory structures.  from_structure validates
/// index ranges, duplicate pairs, gram symmetry and dimension bounds and
/// throws ParseError/DimensionMismatch accordingly.
StructureFile to_structure(const MetricLieAlgebra& a, const AlmostContactData& s);
std::pair<MetricLieAlgebra, AlmostContactData> from_structure(const StructureFile& sf);

/// JSON text with numbers printed to 17 significant digits, so parsing the
/// output reproduces every double bit-exactly.
std::string serialize_structure(const StructureFile& sf);

/// Strict parser for the same format; throws ParseError on malformed input.
StructureFile parse_structure(const std::string& text);

void write_structure_file(const std::string& path, const StructureFile& sf);
StructureFile read_structure_file(const std::string& path);

/// 17-significant-digit rendering used across file and report output.
std::string format_double(double x);

} // namespace kenmotsu

#pragma once

#include <string>
#include <string_view>

namespace norbit {

/// Classical Lie algebra families. Type A of rank n is gl(n+1); B is
/// so(2n+1); C is sp(2n); D is so(2n).
enum class ClassicalType { A, B, C, D };

char to_char(ClassicalType t) noexcept;
std::string to_string(ClassicalType t);
ClassicalType parse_classical_type(std::string_view text);

/// Dimension of the defining representation: n+1, 2n+1, 2n, 2n.
int defining_dimension(ClassicalType t, int rank) noexcept;

}  // namespace norbit

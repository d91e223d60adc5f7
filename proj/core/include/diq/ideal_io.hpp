#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "diq/ideal.hpp"
#include "diq/order.hpp"

namespace diq {

/// `.ideal` text format:
///
///   ring x,y,z            # optionally: ring x,y mod 101
///   x^2 - y
///   x^3 - z
///
/// One generator per line; '#' starts a comment; blank lines are skipped.
/// Parse errors report the 1-based line number.
Ideal parse_ideal(std::string_view text);
Ideal read_ideal(std::istream& in);
Ideal read_ideal_file(const std::filesystem::path& path);

/// Parses a `ring ...` header line.
RingPtr parse_ring_header(std::string_view line);

/// Header plus the reduced basis under `order` (default order when null).
std::string format_ideal(const Ideal& ideal, const OrderPtr& order = nullptr);
/// "(g1, g2, ...)" over the reduced basis; "(0)" and "(1)" for the trivial
/// ideals.
std::string format_ideal_inline(const Ideal& ideal, const OrderPtr& order = nullptr);

std::string format_ring_header(const RingCtx& ring);

}  // namespace diq

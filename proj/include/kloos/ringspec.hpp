#pragma once

#include <string>
#include <vector>

#include "kloos/ring.hpp"

namespace kloos {

inline constexpr long kDefaultMaxRingSize = 4096;

// Raised on malformed ring expressions; position is a byte offset into the input.
struct ParseError : std::runtime_error {
  size_t position;
  ParseError(size_t pos, const std::string& what)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Grammar:   spec := atom { " x " atom }
//   atom := "Z/"n | "GF("p","k")" | "GF("q")" | "Fp["p";"c0,...,ck"]"
//         | "triv("spec")" | "sqz("p","m")" | "table:"path
// Fp coefficients are listed constant term first and must be monic.
RingPtr make_ring(const std::string& spec, long max_size = kDefaultMaxRingSize);

RingPtr make_zmod(long n, long max_size = kDefaultMaxRingSize);
RingPtr make_gf(long p, long k, long max_size = kDefaultMaxRingSize);
RingPtr make_polyquot(long p, const std::vector<long>& coeffs,
                      long max_size = kDefaultMaxRingSize);
RingPtr make_product(const std::vector<RingPtr>& children,
                     long max_size = kDefaultMaxRingSize);
RingPtr make_trivial_extension(const RingPtr& inner,
                               long max_size = kDefaultMaxRingSize);
RingPtr make_square_zero(long p, long m, long max_size = kDefaultMaxRingSize);
RingPtr make_table_ring_from_file(const std::string& path,
                                  long max_size = kDefaultMaxRingSize);
RingPtr make_table_ring_from_json(const std::string& json_text,
                                  const std::string& descriptor,
                                  long max_size = kDefaultMaxRingSize);

bool is_prime(long p);

}  // namespace kloos

/* qromopt: database reordering for compact QROM circuits
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file esop.hpp
  \brief Ternary cube algebra and a cube-transform ESOP minimizer

  Each output bit of a database is a Boolean function of the address and
  is represented as an XOR cover of cubes.  The minimizer starts from the
  minterm cover and repeatedly cancels duplicate cubes, merges cubes at
  ternary distance 1, and reshapes distance-2 pairs with exorlink-2
  transforms when that unlocks a further cancellation or merge.
*/

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "database.hpp"

namespace qromopt
{

/*! \brief Product term over the address variables.
 *
 * Bit b of `care` is set when address bit b is specified; `polarity`
 * then carries the required value.  Polarity bits outside `care` are
 * kept zero.  Address bit b corresponds to variable (n - 1 - b), so
 * variable 0 is the MSB of the address, matching the string form where
 * character 0 is variable 0.
 */
struct cube
{
  uint64_t care{ 0 };
  uint64_t polarity{ 0 };

  bool operator==( cube const& other ) const = default;
};

/*! \brief XOR cover of one output bit. */
struct cover
{
  uint32_t num_vars{ 0 };
  std::vector<cube> cubes;

  bool operator==( cover const& other ) const = default;
};

/*! \brief Boolean function of n address variables as 2^n stored bits. */
struct truth_table
{
  uint32_t num_vars{ 0 };
  std::vector<uint64_t> blocks;

  explicit truth_table( uint32_t num_vars = 0 )
      : num_vars( num_vars ), blocks( ( ( uint64_t( 1 ) << num_vars ) + 63 ) / 64, 0 )
  {
  }

  uint64_t num_entries() const { return uint64_t( 1 ) << num_vars; }

  bool get( uint64_t address ) const
  {
    return ( blocks[address >> 6] >> ( address & 63 ) ) & 1;
  }

  void set( uint64_t address, bool value )
  {
    uint64_t const m = uint64_t( 1 ) << ( address & 63 );
    if ( value )
      blocks[address >> 6] |= m;
    else
      blocks[address >> 6] &= ~m;
  }

  uint64_t count_ones() const
  {
    uint64_t c = 0;
    for ( auto const b : blocks )
      c += std::popcount( b );
    return c;
  }

  bool operator==( truth_table const& other ) const = default;
};

/*! \brief One truth table per output bit; table j reads bit j (MSB-first) of every entry. */
inline std::vector<truth_table> extract_truth_tables( database const& db )
{
  std::vector<truth_table> tables( db.num_data_bits, truth_table( db.num_address_bits ) );
  for ( uint64_t a = 0; a < db.entries.size(); ++a )
  {
    uint64_t const word = db.entries[a];
    for ( uint32_t j = 0; j < db.num_data_bits; ++j )
    {
      if ( ( word >> ( db.num_data_bits - 1 - j ) ) & 1 )
        tables[j].set( a, true );
    }
  }
  return tables;
}

/*! \brief True iff every specified position of the cube equals the corresponding address bit. */
inline bool cube_matches( cube c, uint64_t address )
{
  return ( ( address ^ c.polarity ) & c.care ) == 0;
}

inline bool eval_cover( cover const& cov, uint64_t address )
{
  bool v = false;
  for ( auto const& c : cov.cubes )
    v ^= cube_matches( c, address );
  return v;
}

/*! \brief Number of variable positions where the ternary values differ. */
inline uint32_t cube_distance( cube a, cube b )
{
  uint64_t const diff = ( a.care ^ b.care ) | ( a.care & b.care & ( a.polarity ^ b.polarity ) );
  return static_cast<uint32_t>( std::popcount( diff ) );
}

namespace detail
{

inline uint64_t cube_diff_mask( cube a, cube b )
{
  return ( a.care ^ b.care ) | ( a.care & b.care & ( a.polarity ^ b.polarity ) );
}

/* Writes the ternary XOR of a and b at one differing position (bit mask m):
 * {0} xor {1} = dc, {v} xor dc = {!v}. */
inline void set_xor_position( cube& r, cube a, cube b, uint64_t m )
{
  r.care &= ~m;
  r.polarity &= ~m;
  bool const a_cares = ( a.care & m ) != 0;
  bool const b_cares = ( b.care & m ) != 0;
  if ( a_cares && b_cares )
    return; /* values differ, result is don't-care */
  cube const& specified = a_cares ? a : b;
  r.care |= m;
  r.polarity |= ~specified.polarity & m;
}

inline void copy_position( cube& r, cube src, uint64_t m )
{
  r.care = ( r.care & ~m ) | ( src.care & m );
  r.polarity = ( r.polarity & ~m ) | ( src.polarity & m );
}

/* Sort key realizing lexicographic cube order with per-position digits
 * Zero < One < DontCare, variable 0 (address MSB) most significant. */
inline uint64_t cube_sort_key( cube c, uint32_t num_vars )
{
  uint64_t key = 0;
  for ( uint32_t b = 0; b < num_vars; ++b )
  {
    uint64_t const digit = ( c.care >> b ) & 1 ? ( c.polarity >> b ) & 1 : 2;
    key |= digit << ( 2 * b );
  }
  return key;
}

inline void sort_cubes( std::vector<cube>& cubes, uint32_t num_vars )
{
  std::sort( cubes.begin(), cubes.end(), [num_vars]( cube a, cube b ) {
    return cube_sort_key( a, num_vars ) < cube_sort_key( b, num_vars );
  } );
}

inline void insert_sorted( std::vector<cube>& cubes, cube c, uint32_t num_vars )
{
  uint64_t const key = cube_sort_key( c, num_vars );
  auto const it = std::lower_bound( cubes.begin(), cubes.end(), key, [num_vars]( cube a, uint64_t k ) {
    return cube_sort_key( a, num_vars ) < k;
  } );
  cubes.insert( it, c );
}

} /* namespace detail */

/*! \brief Replaces a distance-1 pair by the single equivalent cube. */
inline cube merge_distance1( cube a, cube b )
{
  uint64_t const diff = detail::cube_diff_mask( a, b );
  if ( std::popcount( diff ) != 1 )
    throw std::invalid_argument( "merge_distance1 requires cubes at distance 1" );
  cube r = a; /* a and b agree outside the differing position */
  detail::set_xor_position( r, a, b, diff );
  return r;
}

/*! \brief The two equivalent reshapes of a distance-2 pair.
 *
 * Alternative 0 resolves the more significant differing variable first,
 * alternative 1 the other; each returned pair XORs to a xor b.
 */
inline std::array<std::array<cube, 2>, 2> exorlink2( cube a, cube b )
{
  uint64_t const diff = detail::cube_diff_mask( a, b );
  if ( std::popcount( diff ) != 2 )
    throw std::invalid_argument( "exorlink2 requires cubes at distance 2" );
  uint64_t const high = uint64_t( 1 ) << ( 63 - std::countl_zero( diff ) );
  uint64_t const low = diff & ~high;

  auto const resolve = [&]( uint64_t first, uint64_t second ) -> std::array<cube, 2> {
    cube c1 = a;
    detail::set_xor_position( c1, a, b, first );
    cube c2 = a;
    detail::copy_position( c2, b, first );
    detail::set_xor_position( c2, a, b, second );
    return { c1, c2 };
  };

  /* the address MSB is the most significant variable, i.e. the higher bit */
  return { resolve( high, low ), resolve( low, high ) };
}

namespace detail
{

inline bool cover_equals( std::vector<cube> const& cubes, truth_table const& tt )
{
  for ( uint64_t a = 0; a < tt.num_entries(); ++a )
  {
    bool v = false;
    for ( auto const& c : cubes )
      v ^= cube_matches( c, a );
    if ( v != tt.get( a ) )
      return false;
  }
  return true;
}

/* Pass (b): removes all duplicate pairs; expects a sorted list. */
inline bool cancel_duplicates( std::vector<cube>& cubes )
{
  bool changed = false;
  std::vector<cube> out;
  out.reserve( cubes.size() );
  std::size_t i = 0;
  while ( i < cubes.size() )
  {
    std::size_t j = i;
    while ( j < cubes.size() && cubes[j] == cubes[i] )
      ++j;
    if ( ( j - i ) & 1 )
      out.push_back( cubes[i] );
    if ( j - i > 1 )
      changed = true;
    i = j;
  }
  if ( changed )
    cubes.swap( out );
  return changed;
}

/* Pass (c): greedy distance-1 merging in sorted scan order, restarting
 * after each merge; the merged cube is reinserted at its sorted position. */
inline bool merge_distance1_pass( std::vector<cube>& cubes, uint32_t num_vars )
{
  bool any = false;
  bool restart = true;
  while ( restart )
  {
    restart = false;
    for ( std::size_t i = 0; i + 1 < cubes.size() && !restart; ++i )
    {
      for ( std::size_t j = i + 1; j < cubes.size(); ++j )
      {
        if ( cube_distance( cubes[i], cubes[j] ) != 1 )
          continue;
        cube const merged = merge_distance1( cubes[i], cubes[j] );
        cubes.erase( cubes.begin() + j );
        cubes.erase( cubes.begin() + i );
        insert_sorted( cubes, merged, num_vars );
        any = true;
        restart = true;
        break;
      }
    }
  }
  return any;
}

/* True when one cube of the candidate pair is at distance <= 1 from a
 * cover cube other than the pair being replaced. */
inline bool enables_reduction( std::vector<cube> const& cubes, std::array<cube, 2> const& pair,
                               std::size_t i, std::size_t j )
{
  for ( std::size_t k = 0; k < cubes.size(); ++k )
  {
    if ( k == i || k == j )
      continue;
    if ( cube_distance( cubes[k], pair[0] ) <= 1 || cube_distance( cubes[k], pair[1] ) <= 1 )
      return true;
  }
  return false;
}

/* Pass (d): one exorlink-2 sweep with lookahead depth 1.  A distance-2
 * pair is reshaped only when some alternative immediately enables a
 * cancellation or merge; alternatives are tried in lexicographic order. */
inline bool exorlink2_pass( std::vector<cube>& cubes, uint32_t num_vars )
{
  bool changed = false;
  for ( std::size_t i = 0; i + 1 < cubes.size(); ++i )
  {
    for ( std::size_t j = i + 1; j < cubes.size(); ++j )
    {
      if ( cube_distance( cubes[i], cubes[j] ) != 2 )
        continue;
      auto alternatives = exorlink2( cubes[i], cubes[j] );
      for ( auto& alt : alternatives )
      {
        if ( cube_sort_key( alt[1], num_vars ) < cube_sort_key( alt[0], num_vars ) )
          std::swap( alt[0], alt[1] );
      }
      auto const key_of = [&]( std::array<cube, 2> const& p ) {
        return std::pair{ cube_sort_key( p[0], num_vars ), cube_sort_key( p[1], num_vars ) };
      };
      if ( key_of( alternatives[1] ) < key_of( alternatives[0] ) )
        std::swap( alternatives[0], alternatives[1] );

      for ( auto const& alt : alternatives )
      {
        if ( enables_reduction( cubes, alt, i, j ) )
        {
          cubes[i] = alt[0];
          cubes[j] = alt[1];
          changed = true;
          break;
        }
      }
    }
  }
  return changed;
}

/* One full (a)-(d) iteration; returns whether the cover changed. */
inline bool run_pass_iteration( std::vector<cube>& cubes, uint32_t num_vars,
                                truth_table const* reference = nullptr )
{
  sort_cubes( cubes, num_vars );
  bool changed = cancel_duplicates( cubes );
  assert( reference == nullptr || cover_equals( cubes, *reference ) );
  changed |= merge_distance1_pass( cubes, num_vars );
  assert( reference == nullptr || cover_equals( cubes, *reference ) );
  changed |= exorlink2_pass( cubes, num_vars );
  assert( reference == nullptr || cover_equals( cubes, *reference ) );
  (void)reference;
  return changed;
}

} /* namespace detail */

/*! \brief ESOP cover of a truth table via the fixpoint pass schedule.
 *
 * Starts from the minterm cover and iterates sort / cancel / merge /
 * exorlink-2 passes until an iteration changes nothing (at most 50
 * iterations).  Deterministic: identical inputs give identical covers.
 */
inline cover minimize( truth_table const& tt )
{
  std::vector<cube> cubes;
  uint64_t const full = tt.num_vars >= 64 ? ~uint64_t( 0 ) : ( uint64_t( 1 ) << tt.num_vars ) - 1;
  for ( uint64_t a = 0; a < tt.num_entries(); ++a )
  {
    if ( tt.get( a ) )
      cubes.push_back( cube{ full, a } );
  }

  for ( int iteration = 0; iteration < 50; ++iteration )
  {
    if ( !detail::run_pass_iteration( cubes, tt.num_vars, &tt ) )
      break;
  }

  detail::sort_cubes( cubes, tt.num_vars );
  return cover{ tt.num_vars, std::move( cubes ) };
}

/*! \brief Ternary string of a cube, MSB-first, e.g. "01-". */
inline std::string to_string( cube c, uint32_t num_vars )
{
  std::string s( num_vars, '-' );
  for ( uint32_t j = 0; j < num_vars; ++j )
  {
    uint64_t const m = uint64_t( 1 ) << ( num_vars - 1 - j );
    if ( c.care & m )
      s[j] = ( c.polarity & m ) ? '1' : '0';
  }
  return s;
}

inline cube cube_from_string( std::string_view text )
{
  cube c;
  uint32_t const n = static_cast<uint32_t>( text.size() );
  for ( uint32_t j = 0; j < n; ++j )
  {
    uint64_t const m = uint64_t( 1 ) << ( n - 1 - j );
    switch ( text[j] )
    {
    case '0':
      c.care |= m;
      break;
    case '1':
      c.care |= m;
      c.polarity |= m;
      break;
    case '-':
      break;
    default:
      throw std::invalid_argument( "cube characters must be 0, 1 or -" );
    }
  }
  return c;
}

/*! \brief Cover listing for reports: one `bit j: <cube>` line per cube. */
inline void write_covers( std::vector<cover> const& covers, std::ostream& out )
{
  for ( std::size_t j = 0; j < covers.size(); ++j )
  {
    for ( auto const& c : covers[j].cubes )
      out << "bit " << j << ": " << to_string( c, covers[j].num_vars ) << '\n';
  }
}

/*! \brief Minimized cover of every output bit of a database. */
inline std::vector<cover> minimize_database( database const& db )
{
  auto const tables = extract_truth_tables( db );
  std::vector<cover> covers;
  covers.reserve( tables.size() );
  for ( auto const& tt : tables )
    covers.push_back( minimize( tt ) );
  return covers;
}

} /* namespace qromopt */

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
  \file database.hpp
  \brief Fixed databases of binary words and address permutations
*/

#pragma once

#include <cassert>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace qromopt
{

/*! \brief Table of 2^n data words of d bits each, indexed by address.
 *
 * Data words are held as integers whose bit (d - 1 - j) carries output
 * bit j, i.e. the natural value of the MSB-first binary string.
 */
struct database
{
  uint32_t num_address_bits{ 0 }; /* n */
  uint32_t num_data_bits{ 0 };    /* d */
  std::vector<uint64_t> entries;  /* size 2^n, each < 2^d */

  uint64_t num_entries() const { return uint64_t( 1 ) << num_address_bits; }

  bool operator==( database const& other ) const = default;
};

/*! \brief Bijection on the address set {0, ..., 2^n - 1}; mapping[a] is the new address of the data at a. */
struct permutation
{
  std::vector<uint64_t> mapping;

  uint64_t size() const { return mapping.size(); }

  bool operator==( permutation const& other ) const = default;
};

inline uint64_t data_word_mask( uint32_t num_data_bits )
{
  return num_data_bits >= 64 ? ~uint64_t( 0 ) : ( uint64_t( 1 ) << num_data_bits ) - 1;
}

inline void validate( database const& db )
{
  if ( db.num_address_bits < 1 || db.num_address_bits > 30 )
    throw std::invalid_argument( "address width must be in [1, 30]" );
  if ( db.num_data_bits < 1 || db.num_data_bits > 64 )
    throw std::invalid_argument( "data width must be in [1, 64]" );
  if ( db.entries.size() != db.num_entries() )
    throw std::invalid_argument( "database must hold exactly 2^n entries" );
  uint64_t const mask = data_word_mask( db.num_data_bits );
  for ( auto const e : db.entries )
  {
    if ( ( e & ~mask ) != 0 )
      throw std::invalid_argument( "database entry does not fit in d bits" );
  }
}

inline bool is_bijection( permutation const& perm )
{
  std::vector<uint8_t> seen( perm.size(), 0 );
  for ( auto const v : perm.mapping )
  {
    if ( v >= perm.size() || seen[v] )
      return false;
    seen[v] = 1;
  }
  return true;
}

inline void validate( permutation const& perm )
{
  if ( !is_bijection( perm ) )
    throw std::invalid_argument( "mapping is not a bijection on the address set" );
}

inline permutation identity_permutation( uint64_t num_addresses )
{
  permutation p;
  p.mapping.resize( num_addresses );
  for ( uint64_t a = 0; a < num_addresses; ++a )
    p.mapping[a] = a;
  return p;
}

/*! \brief Inverse permutation: invert(p).mapping[p.mapping[a]] == a. */
inline permutation invert( permutation const& perm )
{
  assert( is_bijection( perm ) );
  permutation inv;
  inv.mapping.resize( perm.size() );
  for ( uint64_t a = 0; a < perm.size(); ++a )
    inv.mapping[perm.mapping[a]] = a;
  return inv;
}

/*! \brief Composition applying `first`, then `second`: result(a) = second(first(a)). */
inline permutation compose( permutation const& second, permutation const& first )
{
  if ( second.size() != first.size() )
    throw std::invalid_argument( "permutation sizes differ" );
  permutation r;
  r.mapping.resize( first.size() );
  for ( uint64_t a = 0; a < first.size(); ++a )
    r.mapping[a] = second.mapping[first.mapping[a]];
  return r;
}

/*! \brief Moves the data at address a to address perm.mapping[a]. */
inline database reorder( database const& db, permutation const& perm )
{
  if ( perm.size() != db.num_entries() )
    throw std::invalid_argument( "permutation size does not match database size" );
  assert( is_bijection( perm ) );
  database out;
  out.num_address_bits = db.num_address_bits;
  out.num_data_bits = db.num_data_bits;
  out.entries.resize( db.entries.size() );
  for ( uint64_t a = 0; a < db.entries.size(); ++a )
    out.entries[perm.mapping[a]] = db.entries[a];
  return out;
}

namespace detail
{

/* Uniform word of `bits` low bits drawn from the generator; avoids
 * std::uniform_int_distribution, whose output is implementation-defined. */
inline uint64_t random_bits( std::mt19937_64& rng, uint32_t bits )
{
  assert( bits >= 1 && bits <= 64 );
  return rng() & data_word_mask( bits );
}

} /* namespace detail */

/*! \brief Database of 2^n words drawn uniformly from {0,1}^d; deterministic given seed. */
inline database random_instance( uint32_t num_address_bits, uint32_t num_data_bits, uint64_t seed )
{
  database db;
  db.num_address_bits = num_address_bits;
  db.num_data_bits = num_data_bits;
  if ( num_address_bits < 1 || num_address_bits > 30 )
    throw std::invalid_argument( "address width must be in [1, 30]" );
  if ( num_data_bits < 1 || num_data_bits > 64 )
    throw std::invalid_argument( "data width must be in [1, 64]" );
  std::mt19937_64 rng( seed );
  db.entries.resize( db.num_entries() );
  for ( auto& e : db.entries )
    e = detail::random_bits( rng, num_data_bits );
  return db;
}

/*! \brief MSB-first binary string of a data word. */
inline std::string format_data_word( uint64_t word, uint32_t num_data_bits )
{
  std::string s( num_data_bits, '0' );
  for ( uint32_t j = 0; j < num_data_bits; ++j )
  {
    if ( ( word >> ( num_data_bits - 1 - j ) ) & 1 )
      s[j] = '1';
  }
  return s;
}

inline uint64_t parse_data_word( std::string_view text )
{
  uint64_t word = 0;
  for ( char const c : text )
  {
    if ( c != '0' && c != '1' )
      throw std::runtime_error( "invalid character in data word (expected 0 or 1)" );
    word = ( word << 1 ) | uint64_t( c == '1' );
  }
  return word;
}

/*! \brief Parses the line-per-entry text format: 2^n lines of d characters from {0,1}. */
inline database parse_database( std::istream& in )
{
  std::vector<std::string> lines;
  std::string line;
  while ( std::getline( in, line ) )
  {
    if ( !line.empty() && line.back() == '\r' )
      line.pop_back();
    lines.push_back( line );
  }
  if ( lines.empty() )
    throw std::runtime_error( "database file is empty" );
  if ( ( lines.size() & ( lines.size() - 1 ) ) != 0 || lines.size() < 2 )
    throw std::runtime_error( "line count " + std::to_string( lines.size() ) + " is not a power of two (>= 2)" );

  database db;
  db.num_data_bits = static_cast<uint32_t>( lines.front().size() );
  db.num_address_bits = 0;
  for ( auto s = lines.size(); s > 1; s >>= 1 )
    ++db.num_address_bits;
  if ( db.num_data_bits < 1 || db.num_data_bits > 64 )
    throw std::runtime_error( "data width must be in [1, 64]" );

  db.entries.reserve( lines.size() );
  for ( std::size_t i = 0; i < lines.size(); ++i )
  {
    if ( lines[i].size() != db.num_data_bits )
      throw std::runtime_error( "inconsistent line length at line " + std::to_string( i + 1 ) );
    db.entries.push_back( parse_data_word( lines[i] ) );
  }
  validate( db );
  return db;
}

inline database load_database( std::filesystem::path const& path )
{
  std::ifstream in( path );
  if ( !in )
    throw std::runtime_error( "cannot open database file: " + path.string() );
  return parse_database( in );
}

inline void write_database( database const& db, std::ostream& out )
{
  for ( auto const e : db.entries )
    out << format_data_word( e, db.num_data_bits ) << '\n';
}

inline void save_database( database const& db, std::filesystem::path const& path )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
    throw std::runtime_error( "cannot open file for writing: " + path.string() );
  write_database( db, out );
}

/*! \brief Permutation text format: line i holds mapping[i]. */
inline permutation parse_permutation( std::istream& in )
{
  permutation perm;
  std::string line;
  while ( std::getline( in, line ) )
  {
    if ( !line.empty() && line.back() == '\r' )
      line.pop_back();
    if ( line.empty() )
      continue;
    perm.mapping.push_back( std::stoull( line ) );
  }
  validate( perm );
  return perm;
}

inline permutation load_permutation( std::filesystem::path const& path )
{
  std::ifstream in( path );
  if ( !in )
    throw std::runtime_error( "cannot open permutation file: " + path.string() );
  return parse_permutation( in );
}

inline void write_permutation( permutation const& perm, std::ostream& out )
{
  for ( auto const v : perm.mapping )
    out << v << '\n';
}

inline void save_permutation( permutation const& perm, std::filesystem::path const& path )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
    throw std::runtime_error( "cannot open file for writing: " + path.string() );
  write_permutation( perm, out );
}

inline void to_json( nlohmann::json& j, database const& db )
{
  std::vector<std::string> entries;
  entries.reserve( db.entries.size() );
  for ( auto const e : db.entries )
    entries.push_back( format_data_word( e, db.num_data_bits ) );
  j = nlohmann::json{ { "n", db.num_address_bits }, { "d", db.num_data_bits }, { "entries", entries } };
}

inline void from_json( nlohmann::json const& j, database& db )
{
  db.num_address_bits = j.at( "n" ).get<uint32_t>();
  db.num_data_bits = j.at( "d" ).get<uint32_t>();
  db.entries.clear();
  for ( auto const& s : j.at( "entries" ) )
  {
    auto const text = s.get<std::string>();
    if ( text.size() != db.num_data_bits )
      throw std::runtime_error( "entry length does not match d" );
    db.entries.push_back( parse_data_word( text ) );
  }
  validate( db );
}

} /* namespace qromopt */

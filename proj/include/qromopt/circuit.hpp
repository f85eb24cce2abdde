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
  \file circuit.hpp
  \brief Reversible gate lists built from XOR covers

  Every cube becomes one multi-controlled X: Zero literals turn into
  negative-polarity controls, One literals into positive ones, and the
  all-don't-care cube into an unconditional X on its target.  Classical
  basis-state simulation of such a circuit reproduces the XOR semantics
  of the covers exactly, which makes full verification against the
  source database cheap.
*/

#pragma once

#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cost.hpp"
#include "database.hpp"
#include "esop.hpp"

namespace qromopt
{

enum class polarity : uint8_t
{
  negative = 0,
  positive = 1
};

/*! \brief One polarized control on an address qubit; qubit 0 carries the address MSB. */
struct control
{
  uint32_t qubit{ 0 };
  polarity pol{ polarity::positive };

  bool operator==( control const& other ) const = default;
};

/*! \brief Multi-controlled X onto one data qubit. */
struct gate
{
  std::vector<control> controls;
  uint32_t target{ 0 };

  bool operator==( gate const& other ) const = default;
};

struct circuit
{
  uint32_t num_address_bits{ 0 };
  uint32_t num_data_bits{ 0 };
  std::vector<gate> gates;

  bool operator==( circuit const& other ) const = default;
};

/*! \brief One gate per cube, ordered by (target ascending, cube lexicographic). */
inline circuit emit_circuit( std::vector<cover> const& covers )
{
  circuit circ;
  circ.num_data_bits = static_cast<uint32_t>( covers.size() );
  circ.num_address_bits = covers.empty() ? 0 : covers.front().num_vars;
  for ( auto const& cov : covers )
  {
    if ( cov.num_vars != circ.num_address_bits )
      throw std::invalid_argument( "covers have inconsistent variable counts" );
  }

  for ( uint32_t j = 0; j < covers.size(); ++j )
  {
    auto cubes = covers[j].cubes;
    detail::sort_cubes( cubes, covers[j].num_vars );
    for ( auto const& c : cubes )
    {
      gate g;
      g.target = j;
      uint32_t const n = covers[j].num_vars;
      for ( uint32_t q = 0; q < n; ++q )
      {
        uint64_t const m = uint64_t( 1 ) << ( n - 1 - q );
        if ( c.care & m )
          g.controls.push_back( { q, ( c.polarity & m ) ? polarity::positive : polarity::negative } );
      }
      circ.gates.push_back( std::move( g ) );
    }
  }
  return circ;
}

/*! \brief Classical basis-state run: the data word written for one address. */
inline uint64_t simulate( circuit const& circ, uint64_t address )
{
  if ( address >= ( uint64_t( 1 ) << circ.num_address_bits ) )
    throw std::invalid_argument( "address out of range" );
  uint64_t word = 0;
  uint32_t const n = circ.num_address_bits;
  for ( auto const& g : circ.gates )
  {
    bool satisfied = true;
    for ( auto const& ctrl : g.controls )
    {
      bool const bit = ( address >> ( n - 1 - ctrl.qubit ) ) & 1;
      if ( bit != ( ctrl.pol == polarity::positive ) )
      {
        satisfied = false;
        break;
      }
    }
    if ( satisfied )
      word ^= uint64_t( 1 ) << ( circ.num_data_bits - 1 - g.target );
  }
  return word;
}

struct verify_result
{
  bool ok{ true };
  uint64_t address{ 0 };  /* smallest mismatching address when !ok */
  uint64_t expected{ 0 };
  uint64_t actual{ 0 };

  explicit operator bool() const { return ok; }
};

/*! \brief Checks simulate(circ, a) == db.entries[a] for every address. */
inline verify_result verify( circuit const& circ, database const& db )
{
  if ( circ.num_address_bits != db.num_address_bits || circ.num_data_bits != db.num_data_bits )
    throw std::invalid_argument( "circuit dimensions do not match database" );
  for ( uint64_t a = 0; a < db.num_entries(); ++a )
  {
    uint64_t const got = simulate( circ, a );
    if ( got != db.entries[a] )
      return { false, a, db.entries[a], got };
  }
  return {};
}

/*! \brief QASM-3-style text form.
 *
 * Negative controls are lowered to X conjugation around a
 * positive-control MCX; the added X gates are Clifford and leave the
 * T-count estimate unchanged.  Output is byte-stable across runs.
 */
inline void write_qasm( circuit const& circ, std::ostream& out )
{
  out << "OPENQASM 3.0;\n";
  out << "include \"stdgates.inc\";\n";
  out << "// addr[0] carries the most significant address bit;\n";
  out << "// data[0] carries the most significant data bit.\n";
  out << "qubit[" << circ.num_address_bits << "] addr;\n";
  out << "qubit[" << circ.num_data_bits << "] data;\n";
  for ( auto const& g : circ.gates )
  {
    std::string flips;
    for ( auto const& ctrl : g.controls )
    {
      if ( ctrl.pol == polarity::negative )
        flips += "x addr[" + std::to_string( ctrl.qubit ) + "];\n";
    }
    out << flips;
    if ( g.controls.empty() )
    {
      out << "x data[" << g.target << "];\n";
    }
    else if ( g.controls.size() == 1 )
    {
      out << "cx addr[" << g.controls.front().qubit << "], data[" << g.target << "];\n";
    }
    else
    {
      out << "ctrl(" << g.controls.size() << ") @ x ";
      for ( auto const& ctrl : g.controls )
        out << "addr[" << ctrl.qubit << "], ";
      out << "data[" << g.target << "];\n";
    }
    out << flips;
  }
}

inline std::string to_qasm( circuit const& circ )
{
  std::ostringstream os;
  write_qasm( circ, os );
  return os.str();
}

inline void to_json( nlohmann::json& j, gate const& g )
{
  nlohmann::json controls = nlohmann::json::array();
  for ( auto const& ctrl : g.controls )
    controls.push_back( { ctrl.qubit, ctrl.pol == polarity::positive ? "pos" : "neg" } );
  j = nlohmann::json{ { "controls", controls }, { "target", g.target } };
}

inline void from_json( nlohmann::json const& j, gate& g )
{
  g.controls.clear();
  for ( auto const& c : j.at( "controls" ) )
  {
    auto const kind = c.at( 1 ).get<std::string>();
    if ( kind != "pos" && kind != "neg" )
      throw std::runtime_error( "control polarity must be \"pos\" or \"neg\"" );
    g.controls.push_back( { c.at( 0 ).get<uint32_t>(), kind == "pos" ? polarity::positive : polarity::negative } );
  }
  g.target = j.at( "target" ).get<uint32_t>();
}

inline void to_json( nlohmann::json& j, circuit const& circ )
{
  j = nlohmann::json{ { "n", circ.num_address_bits }, { "d", circ.num_data_bits }, { "gates", circ.gates } };
}

inline void from_json( nlohmann::json const& j, circuit& circ )
{
  circ.num_address_bits = j.at( "n" ).get<uint32_t>();
  circ.num_data_bits = j.at( "d" ).get<uint32_t>();
  circ.gates = j.at( "gates" ).get<std::vector<gate>>();
}

/*! \brief Histogram of control counts; matches the cover literal-count histogram. */
inline std::map<uint32_t, int64_t> gate_histogram( circuit const& circ )
{
  std::map<uint32_t, int64_t> histogram;
  for ( auto const& g : circ.gates )
    ++histogram[static_cast<uint32_t>( g.controls.size() )];
  return histogram;
}

} /* namespace qromopt */
